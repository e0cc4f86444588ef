"""Selectional preferences of verbs for subject and object classes.

Every sense-tagged noun that is the subject or object of a verb spreads one
unit of mass evenly over its synset and all of that synset's hypernyms. The
normalized mass per (verb, relation) is P(class | verb, relation). A
candidate sense scores the best probability among its subsuming classes,
ignoring classes that subsume every candidate: those (the root at least)
always carry the most mass and would make all candidates tie.
"""

from __future__ import annotations

from collections import defaultdict

from wsdkit.corpus import Instance, sentences_excluding
from wsdkit.disambiguators.base import Disambiguator, Knobs, pick_best, read_model_lines, write_header
from wsdkit.errors import ModelError
from wsdkit.features import KT, grammatical_role
from wsdkit.lkb import NOUN, coarse_pos


class PreferenceModel(dict):
    """(verb, relation) -> {synset: probability}."""

    def prob(self, verb: str, rel: str, synset: str) -> float:
        return self.get((verb, rel), {}).get(synset, 0.0)


def selpref_train(lkb, corpus, sentence_ids=None) -> PreferenceModel:
    mass = defaultdict(lambda: defaultdict(float))
    ids = range(len(corpus.sentences)) if sentence_ids is None else sentence_ids
    for si in ids:
        sent = corpus.sentences[si]
        for ti, tok in enumerate(sent.tokens):
            if tok.sense is None or coarse_pos(tok.pos) != NOUN or tok.sense not in lkb.senses:
                continue
            role = grammatical_role(Instance(sent.doc_id, si, ti, tok.lemma, NOUN), corpus)
            if role is None:
                continue
            syn = lkb.senses[tok.sense].synset
            classes = lkb.hypernym_closure(syn) | {syn}
            share = 1.0 / len(classes)
            for c in classes:
                mass[role][c] += share
    model = PreferenceModel()
    for role, dist in sorted(mass.items()):
        z = sum(dist.values())
        model[role] = {c: v / z for c, v in sorted(dist.items())}
    return model


class SelectionalPreferences(Disambiguator):
    name = "selpref"
    ktypes = (KT.SELECTIONAL_PREF,)
    trainable = True

    def __init__(self, lkb, knobs=Knobs(), model=None):
        super().__init__(lkb, knobs)
        self.model = model

    def fit(self, train, corpus, held_out=()):
        self.model = selpref_train(self.lkb, corpus, sentences_excluding(corpus, held_out))
        return self

    def apply(self, inst, corpus):
        if self.model is None:
            raise ModelError("selpref used before fit")
        role = grammatical_role(inst, corpus)
        if role is None or role not in self.model:
            return self.abstain(inst)
        dist = self.model[role]
        cands = self.candidates(inst)
        classes = {s.id: self.lkb.hypernym_closure(s.synset) | {s.synset} for s in cands}
        # classes above every candidate (the root at least) cannot discriminate
        shared = frozenset.intersection(*map(frozenset, classes.values())) if classes else frozenset()
        scores = {sid: max((dist.get(c, 0.0) for c in cls - shared), default=0.0) for sid, cls in classes.items()}
        if not any(v > 0 for v in scores.values()):
            return self.abstain(inst)
        best = pick_best(self.lkb, scores)
        return self.answer(inst, best, scores[best])

    def dump(self, fh):
        write_header(fh, "selpref")
        for (verb, rel) in sorted(self.model):
            for c, p in sorted(self.model[(verb, rel)].items()):
                fh.write(f"{verb}\t{rel}\t{c}\t{p!r}\n")

    @classmethod
    def load(cls, fh, lkb, knobs=Knobs()):
        _, lines = read_model_lines(fh, "selpref")
        model = PreferenceModel()
        for line in lines:
            verb, rel, c, p = line.split("\t")
            model.setdefault((verb, rel), {})[c] = float(p)
        return cls(lkb, knobs, model)
