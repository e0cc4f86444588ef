"""Topic signatures: per-sense salient lemmas ranked by chi-square.

For sense ``s`` and lemma ``w`` the 2x2 table counts documents::

                 contains w   lacks w
    docs of s        a           b
    other docs       c           d

    chi2 = N (ad - bc)^2 / ((a+b)(c+d)(a+c)(b+d))

with no continuity correction, and 0 whenever a margin is empty. Only
lemmas over-represented in ``s`` (ad > bc) enter its signature.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from wsdkit.disambiguators.base import Disambiguator, Knobs, pick_best, read_model_lines, write_header
from wsdkit.errors import DataError
from wsdkit.features import KT, context_lemmas


def chi2_2x2(a: int, b: int, c: int, d: int) -> float:
    r1, r2, c1, c2 = a + b, c + d, a + c, b + d
    if r1 == 0 or r2 == 0 or c1 == 0 or c2 == 0:
        return 0.0
    n = r1 + r2
    return n * (a * d - b * c) ** 2 / (r1 * r2 * c1 * c2)


@dataclass
class Signature:
    lemma: str
    pos: str
    weights: dict  # sense -> tuple of (lemma, chi2), descending

    def score(self, lemmas) -> dict:
        present = set(lemmas)
        return {s: sum(w for l, w in sig if l in present) for s, sig in self.weights.items()}


def topsig_build(docs: Mapping[str, Sequence[Sequence[str]]], k: int = 100, lemma: str = "",
                 pos: str = "") -> Signature:
    """Build signatures from ``{sense: [document lemmas, ...]}``."""
    if len(docs) < 2:
        raise DataError(f"topic signatures for {lemma!r} need at least 2 senses with documents")
    for s, ds in docs.items():
        if not ds:
            raise DataError(f"sense {s!r} has no documents")
    doc_sets = {s: [frozenset(d) for d in ds] for s, ds in docs.items()}
    n_docs = {s: len(ds) for s, ds in doc_sets.items()}
    df = {s: defaultdict(int) for s in doc_sets}
    for s, ds in doc_sets.items():
        for d in ds:
            for w in d:
                df[s][w] += 1
    total_df = defaultdict(int)
    for s in df:
        for w, n in df[s].items():
            total_df[w] += n
    n_all = sum(n_docs.values())
    weights = {}
    for s in sorted(doc_sets):
        scored = []
        for w, a in df[s].items():
            b = n_docs[s] - a
            c = total_df[w] - a
            d = n_all - n_docs[s] - c
            if a * d > b * c:
                x = chi2_2x2(a, b, c, d)
                if x > 0:
                    scored.append((w, x))
        scored.sort(key=lambda p: (-p[1], p[0]))
        weights[s] = tuple(scored[:k])
    return Signature(lemma, pos, weights)


def read_collections(root) -> dict:
    """``root/<sense_id>/*`` text files of space-separated lemmas -> {sense: [docs]}."""
    root = Path(root)
    if not root.is_dir():
        raise DataError(f"signature collections directory {root} not found")
    out = {}
    for sense_dir in sorted(p for p in root.iterdir() if p.is_dir()):
        docs = []
        for f in sorted(p for p in sense_dir.iterdir() if p.is_file()):
            docs.append(f.read_text(encoding="utf-8").split())
        out[sense_dir.name] = docs
    return out


def build_signatures(lkb, collections: dict, k: int = 100, lemmas=None) -> dict:
    """One signature per (lemma, pos) with >= 2 senses in the collections."""
    grouped = defaultdict(dict)
    for sense_id, docs in collections.items():
        s = lkb.senses.get(sense_id)
        if s is None:
            raise DataError(f"collection for unknown sense {sense_id!r}")
        grouped[(s.lemma, s.pos)][sense_id] = docs
    sigs = {}
    for (lemma, pos), docs in sorted(grouped.items()):
        if lemmas is not None and lemma not in lemmas:
            continue
        if len(docs) >= 2:
            sigs[(lemma, pos)] = topsig_build(docs, k, lemma, pos)
    return sigs


def topsig_apply(lkb, sig: Signature, lemmas):
    """(sense or None, score); abstains when every sense scores zero."""
    scores = sig.score(lemmas)
    if not any(v > 0 for v in scores.values()):
        return None, 0.0
    best = pick_best(lkb, scores)
    return best, scores[best]


class TopicSignatures(Disambiguator):
    name = "topsig"
    ktypes = (KT.SITUATION_ASSOC, KT.TOPIC_ASSOC)

    def __init__(self, lkb, knobs=Knobs(), collections=None, signatures=None):
        super().__init__(lkb, knobs)
        if signatures is None:
            if collections is None:
                raise DataError("topsig needs per-sense document collections")
            signatures = build_signatures(lkb, collections, knobs.topsig_k)
        self.signatures = signatures

    def apply(self, inst, corpus):
        sig = self.signatures.get((inst.lemma, inst.pos))
        if sig is None:
            return self.abstain(inst)
        sense, score = topsig_apply(self.lkb, sig, context_lemmas(inst, corpus, self.knobs.features))
        return self.abstain(inst) if sense is None else self.answer(inst, sense, score)

    def dump(self, fh):
        write_header(fh, "topsig", k=self.knobs.topsig_k)
        for key in sorted(self.signatures):
            sig = self.signatures[key]
            fh.write(f"#lemma\t{sig.lemma}\t{sig.pos}\n")
            for s in sorted(sig.weights):
                for lemma, w in sig.weights[s]:
                    fh.write(f"{s}\t{lemma}\t{w!r}\n")

    @classmethod
    def load(cls, fh, lkb, knobs=Knobs()):
        _, lines = read_model_lines(fh, "topsig")
        sigs = {}
        cur = None
        for line in lines:
            cols = line.split("\t")
            if cols[0] == "#lemma":
                cur = Signature(cols[1], cols[2], {})
                sigs[(cols[1], cols[2])] = cur
            else:
                s, lemma, w = cols
                cur.weights[s] = cur.weights.get(s, ()) + ((lemma, float(w)),)
        return cls(lkb, knobs, signatures=sigs)
