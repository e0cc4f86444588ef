"""Coarse semantic classes with salient context words.

Each class collects the sentence contexts of the tagged tokens whose sense
belongs to it. A lemma's salience for a class is its smoothed pointwise
mutual information

    w(l, C) = log(P(l | C) / P(l))
    P(l | C) = (c(l, C) + alpha) / (N_C + alpha * V)
    P(l)     = (c(l) + alpha) / (N + alpha * V)

Disambiguation sums the weights of the context lemmas for each class the
target can belong to, takes the best class and then picks one of the
target's senses in that class at random (seeded).
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict

from wsdkit.corpus import Instance, sentences_excluding
from wsdkit.disambiguators.base import Disambiguator, Knobs, instance_rng, read_model_lines, write_header
from wsdkit.errors import DataError, ModelError
from wsdkit.features import KT, context_lemmas
from wsdkit.lkb import coarse_pos


def load_classes(path) -> dict:
    """``sense_id<TAB>class_id`` lines -> {sense_id: class_id}."""
    classes = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != 2:
                raise DataError(f"{path}:{lineno}: expected sense_id<TAB>class_id")
            classes[cols[0]] = cols[1]
    return classes


class ClassModel:
    def __init__(self, class_counts: dict, alpha: float):
        # class_counts: class -> Counter(lemma -> count)
        self.class_counts = class_counts
        self.alpha = alpha
        self.total = Counter()
        for c in class_counts.values():
            self.total.update(c)
        self.n = sum(self.total.values())
        self.vocab = len(self.total)
        self.class_n = {k: sum(v.values()) for k, v in class_counts.items()}

    def weight(self, lemma: str, cls: str) -> float:
        a, v = self.alpha, self.vocab
        p_given = (self.class_counts.get(cls, {}).get(lemma, 0) + a) / (self.class_n.get(cls, 0) + a * v)
        p = (self.total[lemma] + a) / (self.n + a * v)
        return math.log(p_given / p)

    def score(self, lemmas, cls: str) -> float:
        return sum(self.weight(l, cls) for l in lemmas if l in self.total)


def semclass_train(corpus, sentence_ids, classes: dict, knobs: Knobs = Knobs()) -> ClassModel:
    counts = defaultdict(Counter)
    for si in sentence_ids:
        sent = corpus.sentences[si]
        for ti, tok in enumerate(sent.tokens):
            cls = classes.get(tok.sense) if tok.sense else None
            if cls is None:
                continue
            inst = Instance(sent.doc_id, si, ti, tok.lemma, coarse_pos(tok.pos) or tok.pos, tok.sense)
            counts[cls].update(context_lemmas(inst, corpus, knobs.features))
    return ClassModel(dict(counts), knobs.alpha)


class SemanticClasses(Disambiguator):
    name = "semclass"
    ktypes = (KT.SITUATION_ASSOC, KT.TOPIC_ASSOC)
    trainable = True

    def __init__(self, lkb, knobs=Knobs(), classes=None, model=None):
        super().__init__(lkb, knobs)
        if classes is None:
            raise DataError("semclass needs a sense-to-class file")
        self.classes = classes
        self.model = model

    def fit(self, train, corpus, held_out=()):
        self.model = semclass_train(corpus, sentences_excluding(corpus, held_out), self.classes, self.knobs)
        return self

    def apply(self, inst, corpus):
        if self.model is None:
            raise ModelError("semclass used before fit")
        by_class = defaultdict(list)
        for s in self.candidates(inst):
            if s.id in self.classes:
                by_class[self.classes[s.id]].append(s)
        if not by_class:
            return self.abstain(inst)
        lemmas = context_lemmas(inst, corpus, self.knobs.features)
        scores = {c: self.model.score(lemmas, c) for c in by_class}
        best = min(scores, key=lambda c: (-scores[c], by_class[c][0].rank, c))
        chosen = instance_rng(self.knobs.seed, inst, self.name).choice(by_class[best])
        return self.answer(inst, chosen.id, scores[best])

    def dump(self, fh):
        write_header(fh, "semclass", alpha=repr(self.model.alpha))
        for cls in sorted(self.model.class_counts):
            for lemma, n in sorted(self.model.class_counts[cls].items()):
                fh.write(f"{cls}\t{lemma}\t{n}\n")

    @classmethod
    def load(cls, fh, lkb, knobs=Knobs(), classes=None):
        opts, lines = read_model_lines(fh, "semclass")
        counts = defaultdict(Counter)
        for line in lines:
            c, lemma, n = line.split("\t")
            counts[c][lemma] = int(n)
        return cls(lkb, knobs, classes, ClassModel(dict(counts), float(opts["alpha"])))
