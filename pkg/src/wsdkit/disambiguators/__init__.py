"""The disambiguation algorithms behind one interface, and a factory by name."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from wsdkit.corpus import Corpus
from wsdkit.disambiguators.base import Answer, Disambiguator, Knobs, model_kind, pick_best
from wsdkit.disambiguators.baselines import GlossOverlap, MostFrequentSense, RandomSense
from wsdkit.disambiguators.bootstrap import BootstrappedDecisionLists, bootstrap_corpus
from wsdkit.disambiguators.decision_list import DecisionList, DecisionLists, Rule, dl_apply, dl_train
from wsdkit.disambiguators.density import ConceptualDensity, conceptual_density
from wsdkit.disambiguators.selpref import PreferenceModel, SelectionalPreferences, selpref_train
from wsdkit.disambiguators.semclass import ClassModel, SemanticClasses, load_classes, semclass_train
from wsdkit.disambiguators.topsig import (
    Signature, TopicSignatures, build_signatures, chi2_2x2, read_collections, topsig_apply, topsig_build,
)
from wsdkit.errors import ConfigError, ModelError
from wsdkit.features import EXTRACTOR_SETS
from wsdkit.lkb import LKB

ALGORITHMS = {
    "random": RandomSense,
    "mfs": MostFrequentSense,
    "overlap": GlossOverlap,
    "cd": ConceptualDensity,
    "dl": DecisionLists,
    "semclass": SemanticClasses,
    "selpref": SelectionalPreferences,
    "topsig": TopicSignatures,
    "dl_bootstrap": BootstrappedDecisionLists,
}

_USES_EXTRACTORS = {"dl", "dl_bootstrap"}

#: Algorithms whose model can be written with ``train`` and read by ``apply``.
SERIALIZABLE = {"mfs": MostFrequentSense, "dl": DecisionLists, "semclass": SemanticClasses,
                "selpref": SelectionalPreferences, "topsig": TopicSignatures}


@dataclass(frozen=True)
class AlgorithmSpec:
    name: str
    extractors: Optional[str] = None

    @classmethod
    def parse(cls, text: str) -> "AlgorithmSpec":
        name, _, ext = text.strip().partition(":")
        if name not in ALGORITHMS:
            raise ConfigError(f"unknown algorithm {name!r}; choose from {sorted(ALGORITHMS)}")
        if name in _USES_EXTRACTORS:
            ext = ext or "local"
            if ext not in EXTRACTOR_SETS:
                raise ConfigError(f"unknown extractor set {ext!r}; choose from {sorted(EXTRACTOR_SETS)}")
            return cls(name, ext)
        if ext:
            raise ConfigError(f"algorithm {name!r} takes no extractor set")
        return cls(name)

    @property
    def label(self) -> str:
        return f"{self.name}:{self.extractors}" if self.extractors else self.name

    def __str__(self):
        return self.label


@dataclass
class Resources:
    """Everything a disambiguator may need beyond the LKB."""

    lkb: LKB
    knobs: Knobs = field(default_factory=Knobs)
    classes: Optional[dict] = None
    collections: Optional[dict] = None
    raw_corpus: Optional[Corpus] = None


def make_disambiguator(spec: AlgorithmSpec, res: Resources) -> Disambiguator:
    cls = ALGORITHMS[spec.name]
    if spec.name == "dl":
        return cls(res.lkb, res.knobs, spec.extractors)
    if spec.name == "dl_bootstrap":
        if res.collections is None or res.raw_corpus is None:
            raise ConfigError("dl_bootstrap needs signature collections and a raw corpus")
        return cls(res.lkb, res.knobs, spec.extractors, res.collections, res.raw_corpus)
    if spec.name == "semclass":
        if res.classes is None:
            raise ConfigError("semclass needs a class file")
        return cls(res.lkb, res.knobs, res.classes)
    if spec.name == "topsig":
        if res.collections is None:
            raise ConfigError("topsig needs signature collections")
        return cls(res.lkb, res.knobs, res.collections)
    return cls(res.lkb, res.knobs)


def load_model(path, res: Resources) -> Disambiguator:
    kind = model_kind(path)
    if kind not in SERIALIZABLE:
        raise ModelError(f"{path}: unknown model kind {kind!r}")
    with open(path, encoding="utf-8") as fh:
        if kind == "semclass":
            return SemanticClasses.load(fh, res.lkb, res.knobs, res.classes or {})
        return SERIALIZABLE[kind].load(fh, res.lkb, res.knobs)


__all__ = [
    "ALGORITHMS", "AlgorithmSpec", "Answer", "BootstrappedDecisionLists", "ClassModel", "ConceptualDensity",
    "DecisionList", "DecisionLists", "Disambiguator", "GlossOverlap", "Knobs", "MostFrequentSense",
    "PreferenceModel", "RandomSense", "Resources", "Rule", "SERIALIZABLE", "SelectionalPreferences",
    "SemanticClasses", "Signature", "TopicSignatures", "bootstrap_corpus", "build_signatures", "chi2_2x2",
    "conceptual_density", "dl_apply", "dl_train", "load_classes", "load_model", "make_disambiguator",
    "pick_best", "read_collections", "selpref_train", "semclass_train", "topsig_apply", "topsig_build",
]
