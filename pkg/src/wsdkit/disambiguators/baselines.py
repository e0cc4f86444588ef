"""Random sense, most frequent sense, and gloss overlap."""

from __future__ import annotations

from collections import Counter, defaultdict

from wsdkit.disambiguators.base import Disambiguator, Knobs, instance_rng, pick_best, read_model_lines, write_header
from wsdkit.features import KT, context_lemmas


class RandomSense(Disambiguator):
    """Uniform choice among the candidate senses; never abstains on known lemmas."""

    name = "random"

    def apply(self, inst, corpus):
        cands = self.candidates(inst)
        if not cands:
            return self.abstain(inst)
        rng = instance_rng(self.knobs.seed, inst, self.name)
        return self.answer(inst, rng.choice(cands).id, 1.0 / len(cands))


class MostFrequentSense(Disambiguator):
    name = "mfs"
    ktypes = (KT.FREQUENCY,)
    trainable = True

    def __init__(self, lkb, knobs=Knobs(), counts=None):
        super().__init__(lkb, knobs)
        self.counts = counts or {}

    def fit(self, train, corpus, held_out=()):
        counts = defaultdict(Counter)
        for inst in train:
            if inst.gold is not None:
                counts[(inst.lemma, inst.pos)][inst.gold] += 1
        self.counts = {k: dict(v) for k, v in counts.items()}
        return self

    def apply(self, inst, corpus):
        cands = self.candidates(inst)
        if not cands:
            return self.abstain(inst)
        seen = self.counts.get((inst.lemma, inst.pos))
        if not seen:
            return self.answer(inst, cands[0].id, 0.0)
        scores = {s.id: seen.get(s.id, 0) for s in cands}
        best = pick_best(self.lkb, scores)
        return self.answer(inst, best, scores[best])

    def dump(self, fh):
        write_header(fh, "mfs")
        for (lemma, pos) in sorted(self.counts):
            for sense, n in sorted(self.counts[(lemma, pos)].items()):
                fh.write(f"{lemma}\t{pos}\t{sense}\t{n}\n")

    @classmethod
    def load(cls, fh, lkb, knobs=Knobs()):
        _, lines = read_model_lines(fh, "mfs")
        counts = defaultdict(dict)
        for line in lines:
            lemma, pos, sense, n = line.split("\t")
            counts[(lemma, pos)][sense] = int(n)
        return cls(lkb, knobs, dict(counts))


class GlossOverlap(Disambiguator):
    """Sense whose gloss shares most lemmas (multiset intersection) with the sentence."""

    name = "overlap"
    ktypes = (KT.TOPIC_ASSOC,)

    def apply(self, inst, corpus):
        cands = self.candidates(inst)
        if not cands:
            return self.abstain(inst)
        context = Counter(context_lemmas(inst, corpus, self.knobs.features))
        scores = {s.id: sum((Counter(self.lkb.gloss(s.id)) & context).values()) for s in cands}
        best = pick_best(self.lkb, scores)
        return self.answer(inst, best, scores[best])
