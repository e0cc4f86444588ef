"""Lexical knowledge base: sense inventory, glosses and the hypernym taxonomy.

Three tab-separated files make up an LKB::

    inventory:  lemma  pos  sense_id  rank  synset_id
    taxonomy:   synset_id  hypernym_synset_id
    glosses:    synset_id  space-separated lemmas

Lines starting with ``#`` and blank lines are ignored in all three.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from wsdkit.errors import DataError, ParseError, TaxonomyCycleError

NOUN, VERB, ADJ, ADV = "n", "v", "a", "r"
CONTENT_POS = frozenset({NOUN, VERB, ADJ, ADV})

_POS_ALIASES = {
    "n": NOUN, "noun": NOUN,
    "v": VERB, "verb": VERB,
    "a": ADJ, "adj": ADJ, "s": ADJ, "j": ADJ, "adjective": ADJ,
    "r": ADV, "adv": ADV, "adverb": ADV,
}


def coarse_pos(tag: str) -> Optional[str]:
    """Map a POS tag (``noun``, ``n``, Penn ``NNS`` ...) to n/v/a/r, or None."""
    t = tag.lower()
    if t in _POS_ALIASES:
        return _POS_ALIASES[t]
    if t.startswith("nn"):
        return NOUN
    if t.startswith("vb"):
        return VERB
    if t.startswith("jj"):
        return ADJ
    if t.startswith("rb"):
        return ADV
    return None


@dataclass(frozen=True)
class Sense:
    id: str
    lemma: str
    pos: str
    rank: int
    synset: str


@dataclass(frozen=True)
class Synset:
    id: str
    members: frozenset = frozenset()
    gloss: tuple = ()
    hypernyms: frozenset = frozenset()


def _rows(path, ncols, min_cols=None):
    min_cols = ncols if min_cols is None else min_cols
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n").rstrip("\r")
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if not (min_cols <= len(cols) <= ncols):
                raise ParseError(path, lineno, f"expected {ncols} tab-separated columns, got {len(cols)}")
            yield lineno, cols


@dataclass
class LKB:
    """Immutable-after-load lexical knowledge base.

    Query methods cache their results; the underlying graph is never mutated,
    so concurrent reads are safe.
    """

    senses: dict  # SenseId -> Sense
    synsets: dict  # SynsetId -> Synset
    _by_lemma: dict = field(default_factory=dict, repr=False)
    _children: dict = field(default_factory=dict, repr=False)
    _closure: dict = field(default_factory=dict, repr=False)
    _desc: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        by_lemma = defaultdict(list)
        for s in self.senses.values():
            by_lemma[(s.lemma, s.pos)].append(s)
        for key, group in by_lemma.items():
            group.sort(key=lambda s: s.rank)
            if [s.rank for s in group] != list(range(1, len(group) + 1)):
                raise DataError(f"ranks for {key[0]}/{key[1]} are not contiguous 1..{len(group)}: "
                                f"{[s.rank for s in group]}")
        self._by_lemma = {k: tuple(v) for k, v in by_lemma.items()}
        children = defaultdict(set)
        for syn in self.synsets.values():
            for h in syn.hypernyms:
                if h not in self.synsets:
                    raise DataError(f"hypernym {h!r} of {syn.id!r} is not a known synset")
                children[h].add(syn.id)
        for s in self.senses.values():
            if s.synset not in self.synsets:
                raise DataError(f"sense {s.id!r} points to unknown synset {s.synset!r}")
        self._children = {k: frozenset(v) for k, v in children.items()}
        _check_acyclic(self.synsets)

    # -- sense inventory ---------------------------------------------------

    def senses_of(self, lemma: str, pos: str) -> list:
        p = coarse_pos(pos) or pos
        return list(self._by_lemma.get((lemma, p), ()))

    def sense(self, sense_id: str) -> Sense:
        return self.senses[sense_id]

    def lemmas(self, pos: Optional[str] = None) -> list:
        return sorted(lem for (lem, p) in self._by_lemma if pos is None or p == pos)

    def is_polysemous(self, lemma: str, pos: str) -> bool:
        return len(self.senses_of(lemma, pos)) > 1

    def gloss(self, sense_id: str) -> tuple:
        return self.synsets[self.senses[sense_id].synset].gloss

    # -- taxonomy ----------------------------------------------------------

    def _check(self, s):
        if s not in self.synsets:
            raise KeyError(f"unknown synset {s!r}")

    def hypernyms(self, s: str) -> frozenset:
        self._check(s)
        return self.synsets[s].hypernyms

    def hyponyms(self, s: str) -> frozenset:
        self._check(s)
        return self._children.get(s, frozenset())

    def roots(self) -> list:
        return sorted(k for k, v in self.synsets.items() if not v.hypernyms)

    def hypernym_closure(self, s: str) -> frozenset:
        """All synsets reachable upward from ``s``, excluding ``s``."""
        self._check(s)
        hit = self._closure.get(s)
        if hit is not None:
            return hit
        out = set()
        for h in self.synsets[s].hypernyms:
            out.add(h)
            out |= self.hypernym_closure(h)
        res = frozenset(out)
        self._closure[s] = res
        return res

    def descendants(self, s: str) -> int:
        """Number of synsets below ``s`` (each counted once), plus ``s`` itself."""
        self._check(s)
        hit = self._desc.get(s)
        if hit is not None:
            return hit
        seen = set()
        stack = [s]
        while stack:
            node = stack.pop()
            for c in self._children.get(node, ()):
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        self._desc[s] = len(seen) + 1
        return len(seen) + 1

    def subsumes(self, ancestor: str, s: str) -> bool:
        return ancestor == s or ancestor in self.hypernym_closure(s)

    def mean_branching(self) -> Fraction:
        """Mean number of hyponyms per non-leaf synset (1 for a flat taxonomy)."""
        inner = [len(v) for v in self._children.values() if v]
        if not inner:
            return Fraction(1)
        return Fraction(sum(inner), len(inner))

    # -- serialization -----------------------------------------------------

    def write(self, inventory_path, taxonomy_path, gloss_path) -> None:
        with open(inventory_path, "w", encoding="utf-8") as fh:
            for key in sorted(self._by_lemma):
                for s in self._by_lemma[key]:
                    fh.write(f"{s.lemma}\t{s.pos}\t{s.id}\t{s.rank}\t{s.synset}\n")
        with open(taxonomy_path, "w", encoding="utf-8") as fh:
            for sid in sorted(self.synsets):
                for h in sorted(self.synsets[sid].hypernyms):
                    fh.write(f"{sid}\t{h}\n")
        with open(gloss_path, "w", encoding="utf-8") as fh:
            for sid in sorted(self.synsets):
                fh.write(f"{sid}\t{' '.join(self.synsets[sid].gloss)}\n")


def _check_acyclic(synsets: dict) -> None:
    WHITE, GREY, BLACK = 0, 1, 2
    color = dict.fromkeys(synsets, WHITE)
    for start in sorted(synsets):
        if color[start] != WHITE:
            continue
        path = [start]
        iters = [iter(sorted(synsets[start].hypernyms))]
        color[start] = GREY
        while iters:
            nxt = next(iters[-1], None)
            if nxt is None:
                color[path.pop()] = BLACK
                iters.pop()
            elif color[nxt] == GREY:
                raise TaxonomyCycleError(path[path.index(nxt):] + [nxt])
            elif color[nxt] == WHITE:
                color[nxt] = GREY
                path.append(nxt)
                iters.append(iter(sorted(synsets[nxt].hypernyms)))


def build_lkb(senses: Iterable[Sense], edges: Iterable[tuple] = (), glosses: Optional[dict] = None) -> LKB:
    """Assemble an LKB from in-memory pieces; synsets are created on first mention."""
    glosses = glosses or {}
    sense_map = {}
    members = defaultdict(set)
    hyper = defaultdict(set)
    ids = set(glosses)
    for s in senses:
        if s.id in sense_map:
            raise DataError(f"duplicate sense id {s.id!r}")
        sense_map[s.id] = s
        members[s.synset].add(s.id)
        ids.add(s.synset)
    for child, parent in edges:
        if child == parent:
            raise TaxonomyCycleError([child, child])
        hyper[child].add(parent)
        ids.update((child, parent))
    synsets = {
        i: Synset(i, frozenset(members.get(i, ())), tuple(glosses.get(i, ())), frozenset(hyper.get(i, ())))
        for i in ids
    }
    return LKB(sense_map, synsets)


def load_lkb(inventory_path, taxonomy_path, gloss_path=None) -> LKB:
    senses = []
    seen = {}
    for lineno, (lemma, pos, sid, rank, synset) in _rows(inventory_path, 5):
        if not sid:
            raise ParseError(inventory_path, lineno, "empty sense id")
        if sid in seen:
            raise ParseError(inventory_path, lineno, f"duplicate sense id {sid!r} (first on line {seen[sid]})")
        seen[sid] = lineno
        p = coarse_pos(pos)
        if p is None:
            raise ParseError(inventory_path, lineno, f"unknown POS {pos!r}")
        try:
            r = int(rank)
        except ValueError:
            raise ParseError(inventory_path, lineno, f"rank {rank!r} is not an integer") from None
        if r < 1:
            raise ParseError(inventory_path, lineno, f"rank must be positive, got {r}")
        senses.append(Sense(sid, lemma, p, r, synset))
    edges = []
    for lineno, (child, parent) in _rows(taxonomy_path, 2):
        if not child or not parent:
            raise ParseError(taxonomy_path, lineno, "empty synset id")
        edges.append((child, parent))
    glosses = {}
    if gloss_path is not None:
        for lineno, cols in _rows(gloss_path, 2, min_cols=1):
            glosses[cols[0]] = tuple(cols[1].split()) if len(cols) > 1 else ()
    return build_lkb(senses, edges, glosses)
