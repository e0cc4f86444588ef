"""Conceptual density over the hypernym taxonomy.

For a window of nouns, every synset ``c`` that subsumes senses of at least
two distinct window words is a candidate subtree. With ``m`` the number of
window senses below ``c`` and ``nhyp`` the mean branching factor of the
taxonomy,

    density(c) = sum(nhyp ** i for i in range(m)) / descendants(c)

The densest subtree fixes, for each still-open word it covers, that word's
best-ranked sense inside it. Fixed words keep only their chosen sense and
the search repeats until no candidate covers an open word; words never
covered get no answer.
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Optional

from wsdkit.corpus import Instance
from wsdkit.disambiguators.base import Disambiguator
from wsdkit.features import KT
from wsdkit.lkb import LKB, NOUN, coarse_pos

_REL_TOL = 1e-12


def density(m: int, nhyp: float, n_desc: int) -> float:
    return sum(nhyp ** i for i in range(m)) / n_desc


def conceptual_density(lkb: LKB, words: dict) -> dict:
    """Disambiguate ``words`` (word -> ranked senses) jointly.

    Returns word -> (sense id, density) for every word that got fixed.
    """
    nhyp = float(lkb.mean_branching())
    open_words = {w for w, senses in words.items() if senses}
    fixed = {}
    while open_words:
        cover = defaultdict(list)
        for w, senses in words.items():
            active = [fixed[w][0]] if w in fixed else senses
            for s in active:
                for c in lkb.hypernym_closure(s.synset) | {s.synset}:
                    cover[c].append((w, s))
        best = None
        for c in sorted(cover):
            members = cover[c]
            covered = {w for w, _ in members}
            if len(covered) < 2 or not covered & open_words:
                continue
            d = density(len(members), nhyp, lkb.descendants(c))
            if best is None or (d > best[0] and not math.isclose(d, best[0], rel_tol=_REL_TOL)):
                best = (d, c)
        if best is None:
            break
        d, c = best
        for w in sorted({w for w, _ in cover[c]} & open_words):
            inside = [s for ww, s in cover[c] if ww == w]
            fixed[w] = (min(inside, key=lambda s: (s.rank, s.id)), d)
            open_words.discard(w)
    return {w: (s.id, d) for w, (s, d) in fixed.items()}


class ConceptualDensity(Disambiguator):
    """Joint disambiguation of the nouns sharing a window (sentence or document)."""

    name = "cd"
    ktypes = (KT.TAXONOMIC_ASSOC,)

    def window_of(self, inst: Instance, corpus) -> tuple:
        if self.knobs.cd_window == "document":
            return ("doc", inst.doc_id)
        return ("sent", inst.sent_index)

    def window_words(self, key, corpus) -> dict:
        if key[0] == "doc":
            sents = [s for s in corpus.sentences if s.doc_id == key[1]]
        else:
            sents = [corpus.sentences[key[1]]]
        words = {}
        for sent in sents:
            for tok in sent.tokens:
                if coarse_pos(tok.pos) != NOUN or tok.lemma in words:
                    continue
                senses = self.lkb.senses_of(tok.lemma, NOUN)
                if senses:
                    words[tok.lemma] = senses
        return words

    def apply_many(self, insts, corpus):
        results = {}
        out = []
        for inst in insts:
            key = self.window_of(inst, corpus)
            if key not in results:
                words = self.window_words(key, corpus)
                results[key] = conceptual_density(self.lkb, words) if len(words) >= 2 else {}
            hit: Optional[tuple] = results[key].get(inst.lemma) if inst.pos == NOUN else None
            out.append(self.abstain(inst) if hit is None else self.answer(inst, hit[0], hit[1]))
        return out

    def apply(self, inst, corpus):
        return self.apply_many([inst], corpus)[0]
