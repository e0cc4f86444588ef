"""Context features for an instance, each tagged with the knowledge type it encodes.

Local n-gram templates (reconstructed, the offsets are a toolkit choice)
use the four context slots at offsets -2, -1, +1 and +2; the target slot
itself is skipped, so every n-gram is built from context only::

    bigram_*_-2   (-2, -1)        trigram_*_-2  (-2, -1, +1)
    bigram_*_-1   (-1, +1)        trigram_*_-1  (-1, +1, +2)
    bigram_*_+1   (+1, +2)

Each template is instantiated over three layers: ``word`` (wordform,
lowercased by default), ``lemma`` and ``pos``. Slots outside the sentence
hold :data:`BOUNDARY`.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional

from wsdkit.corpus import Corpus, Instance
from wsdkit.lkb import CONTENT_POS, coarse_pos


class KnowledgeType(str, enum.Enum):
    POS = "1"
    MORPHOLOGY = "2"
    COLLOCATION = "3"
    TAXONOMIC_ASSOC = "4a"
    SITUATION_ASSOC = "4b"
    TOPIC_ASSOC = "4c"
    ARG_HEAD = "4d"
    SYNTACTIC_CUE = "5"
    SEMANTIC_ROLE = "6"
    SELECTIONAL_PREF = "7"
    DOMAIN = "8"
    FREQUENCY = "9"
    PRAGMATICS = "10"

    def __str__(self):
        return self.value


KT = KnowledgeType

#: Knowledge types no extractor produces.
NEVER_EXTRACTED = frozenset({KT.MORPHOLOGY, KT.SEMANTIC_ROLE, KT.DOMAIN, KT.PRAGMATICS})

BOUNDARY = "<s>"

BIGRAMS = ((-2, -1), (-1, 1), (1, 2))
TRIGRAMS = ((-2, -1, 1), (-1, 1, 2))
WINDOW = 2

_LAYER_KTYPE = {"word": KT.COLLOCATION, "lemma": KT.COLLOCATION, "pos": KT.SYNTACTIC_CUE}

_LABEL_ALIASES = {
    "subj": "subject", "nsubj": "subject", "sbj": "subject", "subject": "subject", "ncsubj": "subject",
    "obj": "object", "dobj": "object", "object": "object", "iobj": "object",
}


def normalize_label(label: Optional[str]) -> Optional[str]:
    if label is None:
        return None
    return _LABEL_ALIASES.get(label.lower(), label.lower())


class Feature(NamedTuple):
    kind: str
    value: str
    ktype: KnowledgeType

    @property
    def key(self) -> tuple:
        return (self.kind, self.value)


def ktype_of(kind: str) -> KnowledgeType:
    """The fixed kind -> knowledge type table."""
    head = kind.split("_", 2)
    if head[0] in ("bigram", "trigram"):
        return _LAYER_KTYPE[head[1]]
    if kind.startswith(("window", "sentence_bag", "context_bag")):
        return KT.TOPIC_ASSOC
    if kind.startswith("dep_"):
        return KT.ARG_HEAD
    if kind.startswith("deplabel_"):
        return KT.SYNTACTIC_CUE
    raise KeyError(f"unknown feature kind {kind!r}")


@dataclass(frozen=True)
class FeatureConfig:
    lowercase: bool = True
    stopwords: frozenset = frozenset()
    # 0 keeps the global bag inside the target sentence; N > 0 uses +-N tokens
    # across sentence boundaries within the same document.
    global_window: int = 0


@dataclass
class FeatureVector:
    instance: Instance
    features: tuple = ()
    has_dependencies: bool = True

    def __iter__(self):
        return iter(self.features)

    def __len__(self):
        return len(self.features)

    def __add__(self, other: "FeatureVector") -> "FeatureVector":
        return FeatureVector(self.instance, self.features + other.features,
                             self.has_dependencies and other.has_dependencies)

    def keys(self) -> frozenset:
        return frozenset(f.key for f in self.features)

    def counts(self) -> Counter:
        return Counter(self.features)

    def to_tsv(self) -> str:
        return "".join(f"{f.kind}\t{f.value}\t{f.ktype}\n" for f in self.features)


def _layer(tok, layer, cfg):
    if layer == "word":
        return tok.wordform.lower() if cfg.lowercase else tok.wordform
    return tok.lemma if layer == "lemma" else tok.pos


def _slot(tokens, i, layer, cfg):
    if 0 <= i < len(tokens):
        return _layer(tokens[i], layer, cfg)
    return BOUNDARY


def _offset_name(o):
    return f"{o:+d}" if o > 0 else str(o)


def extract_local(inst: Instance, corpus: Corpus, cfg: FeatureConfig = FeatureConfig()) -> FeatureVector:
    tokens = corpus.sentence(inst).tokens
    t = inst.tok_index
    feats = []
    for layer in ("word", "lemma", "pos"):
        kt = _LAYER_KTYPE[layer]
        for name, templates in (("bigram", BIGRAMS), ("trigram", TRIGRAMS)):
            for tpl in templates:
                value = "_".join(_slot(tokens, t + o, layer, cfg) for o in tpl)
                feats.append(Feature(f"{name}_{layer}_{_offset_name(tpl[0])}", value, kt))
    lo, hi = max(0, t - WINDOW), min(len(tokens), t + WINDOW + 1)
    for layer in ("word", "lemma"):
        for i in range(lo, hi):
            if i != t:
                feats.append(Feature(f"window{2 * WINDOW}_{layer}", _layer(tokens[i], layer, cfg), KT.TOPIC_ASSOC))
    return FeatureVector(inst, tuple(feats))


def is_content(tok, stopwords=frozenset()) -> bool:
    return coarse_pos(tok.pos) in CONTENT_POS and tok.lemma not in stopwords


def context_lemmas(inst: Instance, corpus: Corpus, cfg: FeatureConfig = FeatureConfig()) -> list:
    """Content lemmas around the target (the sentence by default), target excluded."""
    if cfg.global_window <= 0:
        tokens = corpus.sentence(inst).tokens
        return [tok.lemma for i, tok in enumerate(tokens)
                if i != inst.tok_index and is_content(tok, cfg.stopwords)]
    before, after = [], []
    si = inst.sent_index
    toks = corpus.sentences[si].tokens
    before.extend(reversed(toks[:inst.tok_index]))
    after.extend(toks[inst.tok_index + 1:])
    j = si - 1
    while len(before) < cfg.global_window and j >= 0 and corpus.sentences[j].doc_id == inst.doc_id:
        before.extend(reversed(corpus.sentences[j].tokens))
        j -= 1
    j = si + 1
    while len(after) < cfg.global_window and j < len(corpus.sentences) and corpus.sentences[j].doc_id == inst.doc_id:
        after.extend(corpus.sentences[j].tokens)
        j += 1
    window = list(reversed(before[:cfg.global_window])) + after[:cfg.global_window]
    return [tok.lemma for tok in window if is_content(tok, cfg.stopwords)]


def extract_global(inst: Instance, corpus: Corpus, cfg: FeatureConfig = FeatureConfig()) -> FeatureVector:
    kind = "sentence_bag_lemma" if cfg.global_window <= 0 else "context_bag_lemma"
    return FeatureVector(inst, tuple(Feature(kind, lem, KT.TOPIC_ASSOC) for lem in context_lemmas(inst, corpus, cfg)))


def extract_syntactic(inst: Instance, corpus: Corpus, cfg: FeatureConfig = FeatureConfig()) -> FeatureVector:
    """Dependency features of the target: its governor and its dependents.

    Lexicalized relations (``dep_object_of = bite``) are argument-head
    evidence; the bare labels (``deplabel_up = object``) are syntactic cues.
    """
    sent = corpus.sentence(inst)
    if not sent.has_dependencies:
        return FeatureVector(inst, (), has_dependencies=False)
    tokens = sent.tokens
    target = tokens[inst.tok_index]
    feats = []
    if target.dep_head is not None:
        head = tokens[target.dep_head]
        label = normalize_label(target.dep_label) or "dep"
        feats.append(Feature(f"dep_{label}_of", head.lemma, KT.ARG_HEAD))
        feats.append(Feature("deplabel_up", label, KT.SYNTACTIC_CUE))
    for tok in tokens:
        if tok.dep_head == inst.tok_index:
            label = normalize_label(tok.dep_label) or "dep"
            feats.append(Feature(f"dep_has_{label}", tok.lemma, KT.ARG_HEAD))
            feats.append(Feature("deplabel_down", label, KT.SYNTACTIC_CUE))
    return FeatureVector(inst, tuple(feats))


def grammatical_role(inst: Instance, corpus: Corpus) -> Optional[tuple]:
    """``(verb_lemma, "subject"|"object")`` if the target is an argument of a verb."""
    tokens = corpus.sentence(inst).tokens
    tok = tokens[inst.tok_index]
    if tok.dep_head is None:
        return None
    label = normalize_label(tok.dep_label)
    head = tokens[tok.dep_head]
    if label in ("subject", "object") and coarse_pos(head.pos) == "v":
        return head.lemma, label
    return None


def _only(ktype, fn):
    def run(inst, corpus, cfg):
        vec = fn(inst, corpus, cfg)
        return FeatureVector(inst, tuple(f for f in vec.features if f.ktype == ktype), vec.has_dependencies)
    return run


def _local_plus_global(inst, corpus, cfg):
    return extract_local(inst, corpus, cfg) + extract_global(inst, corpus, cfg)


@dataclass(frozen=True)
class ExtractorSet:
    name: str
    fn: Callable = field(compare=False)
    ktypes: tuple = ()
    needs_dependencies: bool = False

    def __call__(self, inst: Instance, corpus: Corpus, cfg: FeatureConfig = FeatureConfig()) -> FeatureVector:
        return self.fn(inst, corpus, cfg)


#: Named extractor sets, one per feature row of the comparison grid.
EXTRACTOR_SETS = {
    "local": ExtractorSet("local", extract_local, (KT.COLLOCATION, KT.ARG_HEAD, KT.SYNTACTIC_CUE)),
    "syntactic": ExtractorSet("syntactic", _only(KT.SYNTACTIC_CUE, extract_syntactic),
                              (KT.SYNTACTIC_CUE,), needs_dependencies=True),
    "arghead": ExtractorSet("arghead", _only(KT.ARG_HEAD, extract_syntactic),
                            (KT.ARG_HEAD,), needs_dependencies=True),
    "global": ExtractorSet("global", extract_global, (KT.SITUATION_ASSOC, KT.TOPIC_ASSOC)),
    "combined": ExtractorSet("combined", _local_plus_global,
                             (KT.COLLOCATION, KT.SITUATION_ASSOC, KT.TOPIC_ASSOC, KT.ARG_HEAD, KT.SYNTACTIC_CUE)),
}


def get_extractor_set(name: str) -> ExtractorSet:
    try:
        return EXTRACTOR_SETS[name]
    except KeyError:
        raise KeyError(f"unknown extractor set {name!r}; choose from {sorted(EXTRACTOR_SETS)}") from None
