"""Common interface, answer type and tie-breaking shared by all algorithms."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from wsdkit.corpus import Corpus, Instance
from wsdkit.errors import ModelError
from wsdkit.features import FeatureConfig
from wsdkit.lkb import LKB

MODEL_MAGIC = "#wsdkit-model"


@dataclass(frozen=True)
class Answer:
    instance: Instance
    chosen: Optional[str]
    score: float = 0.0
    algorithm: str = ""

    @property
    def abstained(self) -> bool:
        return self.chosen is None


@dataclass(frozen=True)
class Knobs:
    """Tunable constants shared by the algorithms."""

    alpha: float = 0.1
    theta: float = 0.0
    topsig_k: int = 100
    seed: int = 0
    dl_default: bool = False
    cd_window: str = "sentence"  # or "document"
    features: FeatureConfig = field(default_factory=FeatureConfig)


def tie_key(lkb: LKB, sense_id: str, score) -> tuple:
    """Sort key implementing the global tie-break: score desc, rank asc, id asc."""
    return (-score, lkb.senses[sense_id].rank, sense_id)


def pick_best(lkb: LKB, scores: Mapping[str, float]) -> Optional[str]:
    if not scores:
        return None
    return min(scores, key=lambda s: tie_key(lkb, s, scores[s]))


def instance_rng(seed: int, inst: Instance, salt: str = "") -> random.Random:
    return random.Random(f"{seed}\x1f{salt}\x1f{inst.doc_id}\x1f{inst.sent_index}\x1f{inst.tok_index}")


class Disambiguator:
    """Base class: ``fit`` on training instances, then ``apply`` per instance.

    ``trainable`` marks algorithms that learn from the cross-validation
    training folds; for the others ``fit`` is a no-op and one pass over all
    instances gives the same answers as a cross-validated run.
    """

    name = "base"
    ktypes: tuple = ()
    trainable = False

    def __init__(self, lkb: LKB, knobs: Knobs = Knobs()):
        self.lkb = lkb
        self.knobs = knobs

    def fit(self, train: Sequence[Instance], corpus: Corpus, held_out: Iterable[Instance] = ()) -> "Disambiguator":
        return self

    def apply(self, inst: Instance, corpus: Corpus) -> Answer:
        raise NotImplementedError

    def apply_many(self, insts: Sequence[Instance], corpus: Corpus) -> list:
        return [self.apply(inst, corpus) for inst in insts]

    def candidates(self, inst: Instance) -> list:
        return self.lkb.senses_of(inst.lemma, inst.pos)

    def answer(self, inst: Instance, chosen: Optional[str], score: float = 0.0) -> Answer:
        return Answer(inst, chosen, float(score), self.name)

    def abstain(self, inst: Instance) -> Answer:
        return Answer(inst, None, 0.0, self.name)

    # -- model files --------------------------------------------------------

    def dump(self, fh) -> None:
        raise ModelError(f"{self.name} is not trainable")


def write_header(fh, kind: str, version: int = 1, **opts) -> None:
    fh.write(f"{MODEL_MAGIC}\t{kind}\t{version}\n")
    for k in sorted(opts):
        fh.write(f"#{k}\t{opts[k]}\n")


def read_model_lines(fh, kind: str):
    """Validate the header; return (options, remaining lines)."""
    lines = fh.read().splitlines()
    if not lines or not lines[0].startswith(MODEL_MAGIC):
        raise ModelError("not a wsdkit model file")
    parts = lines[0].split("\t")
    if len(parts) != 3 or parts[1] != kind:
        raise ModelError(f"expected a {kind!r} model, found {parts[1:2]}")
    if parts[2] != "1":
        raise ModelError(f"unsupported {kind} model version {parts[2]}")
    opts = {}
    i = 1
    while i < len(lines) and lines[i].startswith("#") and not lines[i].startswith("#lemma\t"):
        key, _, val = lines[i][1:].partition("\t")
        opts[key] = val
        i += 1
    return opts, lines[i:]


def model_kind(path) -> str:
    with open(path, encoding="utf-8") as fh:
        first = fh.readline().rstrip("\n").split("\t")
    if len(first) < 2 or first[0] != MODEL_MAGIC:
        raise ModelError(f"{path}: not a wsdkit model file")
    return first[1]
