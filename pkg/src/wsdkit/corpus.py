"""Sense-tagged corpora in a nine-column, CoNLL-like format.

One token per line, blank line between sentences::

    doc_id  sent_no  tok_no  wordform  lemma  pos  sense|-  dep_head|-  dep_label|-

``tok_no`` counts from 1 inside each sentence and ``dep_head`` refers to it.
Internally token positions are 0-based.
"""

from __future__ import annotations

import logging
import random
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from wsdkit.errors import DataError, ParseError
from wsdkit.lkb import LKB, NOUN, coarse_pos

log = logging.getLogger(__name__)

NONE = "-"


class _AllPolysemousNouns:
    def __repr__(self):
        return "ALL_POLYSEMOUS_NOUNS"

    def __reduce__(self):
        return "ALL_POLYSEMOUS_NOUNS"


#: Target selector meaning "every polysemous noun in the corpus".
ALL_POLYSEMOUS_NOUNS = _AllPolysemousNouns()


@dataclass(frozen=True)
class Token:
    wordform: str
    lemma: str
    pos: str
    sense: Optional[str] = None
    dep_head: Optional[int] = None
    dep_label: Optional[str] = None


@dataclass(frozen=True)
class Sentence:
    doc_id: str
    sent_no: str
    tokens: tuple

    def __len__(self):
        return len(self.tokens)

    @property
    def has_dependencies(self) -> bool:
        return any(t.dep_head is not None or t.dep_label is not None for t in self.tokens)


@dataclass(frozen=True, order=True)
class Instance:
    """One occurrence of a target lemma, addressed by corpus position."""

    doc_id: str
    sent_index: int
    tok_index: int
    lemma: str
    pos: str
    gold: Optional[str] = field(default=None, compare=False)

    @property
    def key(self) -> tuple:
        return (self.doc_id, self.sent_index, self.tok_index)


@dataclass
class Corpus:
    sentences: list
    lkb: Optional[LKB] = None

    def __len__(self):
        return len(self.sentences)

    @property
    def n_tokens(self) -> int:
        return sum(len(s) for s in self.sentences)

    def token(self, inst: Instance) -> Token:
        return self.sentences[inst.sent_index].tokens[inst.tok_index]

    def sentence(self, inst: Instance) -> Sentence:
        return self.sentences[inst.sent_index]

    def doc_ids(self) -> list:
        return list(dict.fromkeys(s.doc_id for s in self.sentences))

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dumps(self))


def _opt(v: str) -> Optional[str]:
    return None if v == NONE else v


def _fmt(v) -> str:
    return NONE if v is None else str(v)


def _parse_sentence(rows, path, lkb, strict):
    doc_id, sent_no = rows[0][1][0], rows[0][1][1]
    tokens = []
    for i, (lineno, cols) in enumerate(rows):
        d, sno, tno, form, lemma, pos, sense, head, label = cols
        if (d, sno) != (doc_id, sent_no):
            raise ParseError(path, lineno, f"sentence id changed inside a sentence ({d}/{sno} vs {doc_id}/{sent_no})")
        if tno != str(i + 1):
            raise ParseError(path, lineno, f"tok_no {tno!r} out of sequence, expected {i + 1}")
        if not lemma or not pos:
            raise ParseError(path, lineno, "empty lemma or POS")
        sense = _opt(sense)
        if sense is not None and lkb is not None:
            problem = None
            if sense not in lkb.senses:
                problem = f"sense tag {sense!r} not in inventory"
            else:
                s = lkb.senses[sense]
                if s.lemma != lemma or s.pos != coarse_pos(pos):
                    problem = f"sense tag {sense!r} belongs to {s.lemma}/{s.pos}, not {lemma}/{pos}"
            if problem:
                if strict:
                    raise ParseError(path, lineno, problem)
                log.warning("%s:%d: %s (tag dropped)", path, lineno, problem)
                sense = None
        dep_head = None
        if head != NONE:
            try:
                dep_head = int(head) - 1
            except ValueError:
                raise ParseError(path, lineno, f"dep_head {head!r} is not an integer") from None
            if not (0 <= dep_head < len(rows)) or dep_head == i:
                raise ParseError(path, lineno, f"dep_head {head} is not a valid other token of the sentence")
        tokens.append(Token(form, lemma, pos, sense, dep_head, _opt(label)))
    return Sentence(doc_id, sent_no, tuple(tokens))


def loads(text: str, lkb: Optional[LKB] = None, strict: bool = False, path: str = "<string>") -> Corpus:
    sentences = []
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            if rows:
                sentences.append(_parse_sentence(rows, path, lkb, strict))
                rows = []
            continue
        if line.startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 9:
            raise ParseError(path, lineno, f"expected 9 tab-separated columns, got {len(cols)}")
        rows.append((lineno, cols))
    if rows:
        sentences.append(_parse_sentence(rows, path, lkb, strict))
    return Corpus(sentences, lkb)


def load_corpus(path, lkb: Optional[LKB] = None, strict: bool = False) -> Corpus:
    """Read a corpus file.

    With an LKB attached, sense tags are validated: unknown or mismatched
    tags raise ``ParseError`` when ``strict`` and are dropped with a warning
    otherwise.
    """
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), lkb=lkb, strict=strict, path=str(path))


def dumps(corpus: Corpus) -> str:
    out = []
    for sent in corpus.sentences:
        for i, t in enumerate(sent.tokens):
            head = None if t.dep_head is None else t.dep_head + 1
            out.append("\t".join([sent.doc_id, sent.sent_no, str(i + 1), t.wordform, t.lemma, t.pos,
                                  _fmt(t.sense), _fmt(head), _fmt(t.dep_label)]))
        out.append("")
    return "\n".join(out) + ("\n" if out else "")


def instances(corpus: Corpus, targets, tagged_only: bool = True) -> list:
    """Occurrences of the target lemmas, in document order.

    ``targets`` is a collection of lemmas (any POS whose coarse tag is a
    noun/verb/adj/adv) or :data:`ALL_POLYSEMOUS_NOUNS`, which needs an LKB.
    """
    all_poly = targets is ALL_POLYSEMOUS_NOUNS
    if all_poly and corpus.lkb is None:
        raise DataError("ALL_POLYSEMOUS_NOUNS needs an LKB attached to the corpus")
    wanted = None if all_poly else frozenset(targets)
    out = []
    for si, sent in enumerate(corpus.sentences):
        for ti, tok in enumerate(sent.tokens):
            if tagged_only and tok.sense is None:
                continue
            pos = coarse_pos(tok.pos)
            if pos is None:
                continue
            if all_poly:
                if pos != NOUN or not corpus.lkb.is_polysemous(tok.lemma, pos):
                    continue
            elif tok.lemma not in wanted:
                continue
            if corpus.lkb is not None and not corpus.lkb.senses_of(tok.lemma, pos):
                continue
            out.append(Instance(sent.doc_id, si, ti, tok.lemma, pos, tok.sense))
    return out


@dataclass(frozen=True)
class FoldAssignment:
    """Fold index per instance, aligned with ``instances``."""

    instances: tuple
    folds: tuple
    k: int

    def fold(self, i: int) -> list:
        return [inst for inst, f in zip(self.instances, self.folds) if f == i]

    def split(self, i: int) -> tuple:
        train = [inst for inst, f in zip(self.instances, self.folds) if f != i]
        return train, self.fold(i)

    def sizes(self) -> list:
        counts = [0] * self.k
        for f in self.folds:
            counts[f] += 1
        return counts


def make_folds(insts: Sequence[Instance], k: int, seed: int) -> FoldAssignment:
    """Deterministic k-fold split, stratified by lemma.

    Each lemma's instances are shuffled with a seed-derived RNG and dealt
    round-robin, so per-lemma fold sizes differ by at most one. The dealing
    offset rotates across lemmas to keep the pooled folds balanced too.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if not insts:
        raise ValueError("no instances to fold")
    by_lemma = defaultdict(list)
    for idx, inst in enumerate(insts):
        by_lemma[(inst.lemma, inst.pos)].append(idx)
    folds = [0] * len(insts)
    offset = 0
    for lemma, pos in sorted(by_lemma):
        idxs = sorted(by_lemma[(lemma, pos)], key=lambda i: insts[i].key)
        random.Random(f"{seed}\x1f{lemma}\x1f{pos}").shuffle(idxs)
        for j, idx in enumerate(idxs):
            folds[idx] = (offset + j) % k
        offset = (offset + len(idxs)) % k
    return FoldAssignment(tuple(insts), tuple(folds), k)


def sentences_excluding(corpus: Corpus, held_out: Iterable[Instance]) -> list:
    """Sentence indices not containing any held-out instance."""
    banned = {inst.sent_index for inst in held_out}
    return [i for i in range(len(corpus.sentences)) if i not in banned]
