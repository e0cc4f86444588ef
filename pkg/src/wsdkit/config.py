"""Run configuration: one INI file with sections, plus command-line overrides.

Example::

    [data]
    inventory = lkb/inventory.tsv
    taxonomy = lkb/taxonomy.tsv
    glosses = lkb/glosses.tsv
    corpus = corpus.tsv
    classes = classes.tsv          ; semclass only
    collections = collections/     ; topsig, dl_bootstrap, bootstrap
    raw_corpus = raw.tsv           ; dl_bootstrap, bootstrap
    stopwords = stop.txt           ; optional, one lemma per line

    [run]
    targets = account age church duty head interest member people
    k = 10
    seed = 0
    algorithms = random mfs overlap cd dl:local dl:combined selpref topsig
    jobs = 1                       ; default: available cores
    strict_senses = false

    [knobs]
    alpha = 0.1
    theta = 0.0
    topsig_k = 100
    global_window = 0
    cd_window = sentence
    lowercase = true
    dl_default = false

Relative paths are resolved against the directory of the config file.
"""

from __future__ import annotations

import configparser
import os
from dataclasses import dataclass, field, replace
from importlib import resources as importlib_resources
from pathlib import Path
from typing import Optional

from wsdkit.corpus import ALL_POLYSEMOUS_NOUNS, Corpus, load_corpus
from wsdkit.disambiguators import AlgorithmSpec, Knobs, Resources, load_classes, read_collections
from wsdkit.errors import ConfigError
from wsdkit.features import FeatureConfig
from wsdkit.lkb import LKB, load_lkb

PATH_KEYS = ("inventory", "taxonomy", "glosses", "corpus", "classes", "collections", "raw_corpus", "stopwords")
RUN_KEYS = ("targets", "k", "seed", "algorithms", "jobs", "strict_senses")
KNOB_KEYS = ("alpha", "theta", "topsig_k", "global_window", "cd_window", "lowercase", "dl_default")

ALL_POLY_NAMES = ("all", "all-polysemous-nouns", "all_polysemous_nouns")

DEFAULT_ALGORITHMS = ("random", "mfs", "overlap", "cd", "dl:local", "dl:syntactic", "dl:arghead",
                      "dl:combined", "semclass", "selpref", "topsig", "dl_bootstrap:local")


@dataclass
class RunConfig:
    paths: dict = field(default_factory=dict)
    targets: object = ALL_POLYSEMOUS_NOUNS
    k: int = 10
    seed: int = 0
    algorithms: tuple = DEFAULT_ALGORITHMS
    jobs: Optional[int] = None  # None: one worker per available core
    strict_senses: bool = False
    knobs: dict = field(default_factory=dict)

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        unknown = set(self.paths) - set(PATH_KEYS)
        if unknown:
            raise ConfigError(f"unknown data keys: {sorted(unknown)}")
        unknown = set(self.knobs) - set(KNOB_KEYS)
        if unknown:
            raise ConfigError(f"unknown knobs: {sorted(unknown)}")
        if self.k < 2:
            raise ConfigError("k must be at least 2")
        if self.jobs is not None and self.jobs < 1:
            raise ConfigError("jobs must be at least 1")
        specs = [AlgorithmSpec.parse(a) for a in self.algorithms]
        if not specs:
            raise ConfigError("no algorithms configured")
        self.make_knobs()

    @property
    def specs(self) -> list:
        return [AlgorithmSpec.parse(a) for a in self.algorithms]

    def require(self, *names) -> None:
        for name in names:
            p = self.paths.get(name)
            if p is None:
                raise ConfigError(f"missing required path {name!r}")
            if not Path(p).exists():
                raise ConfigError(f"{name} path {p} does not exist")
        for name, p in self.paths.items():
            if p is not None and name not in names and name != "corpus" and not Path(p).exists():
                raise ConfigError(f"{name} path {p} does not exist")

    def make_knobs(self) -> Knobs:
        k = self.knobs
        try:
            stop = frozenset()
            if self.paths.get("stopwords"):
                sp = Path(self.paths["stopwords"])
                if sp.exists():
                    stop = frozenset(sp.read_text(encoding="utf-8").split())
            feats = FeatureConfig(lowercase=_bool(k.get("lowercase", True)), stopwords=stop,
                                  global_window=int(k.get("global_window", 0)))
            knobs = Knobs(alpha=float(k.get("alpha", 0.1)), theta=float(k.get("theta", 0.0)),
                          topsig_k=int(k.get("topsig_k", 100)), seed=self.seed,
                          dl_default=_bool(k.get("dl_default", False)),
                          cd_window=str(k.get("cd_window", "sentence")), features=feats)
        except ValueError as exc:
            raise ConfigError(f"bad knob value: {exc}") from None
        if knobs.alpha <= 0:
            raise ConfigError("alpha must be positive")
        if knobs.topsig_k < 1:
            raise ConfigError("topsig_k must be positive")
        if knobs.cd_window not in ("sentence", "document"):
            raise ConfigError("cd_window must be 'sentence' or 'document'")
        return knobs

    def with_overrides(self, **kw) -> "RunConfig":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


def _bool(v) -> bool:
    if isinstance(v, bool):
        return v
    s = str(v).strip().lower()
    if s in ("1", "true", "yes", "on"):
        return True
    if s in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {v!r}")


def parse_targets(text: str):
    if text.strip().lower() in ALL_POLY_NAMES:
        return ALL_POLYSEMOUS_NOUNS
    items = tuple(sorted(set(text.replace(",", " ").split())))
    if not items:
        raise ConfigError("empty target list")
    return items


def parse_algorithms(text: str) -> tuple:
    return tuple(text.replace(",", " ").split())


def load_config(path) -> RunConfig:
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"config file {path} not found")
    cp = configparser.ConfigParser(inline_comment_prefixes=(";",), interpolation=None)
    try:
        cp.read(path, encoding="utf-8")
    except configparser.Error as exc:
        raise ConfigError(f"{path}: {exc}") from None
    extra = set(cp.sections()) - {"data", "run", "knobs"}
    if extra:
        raise ConfigError(f"unknown config sections: {sorted(extra)}")
    base = path.parent
    paths = {}
    if cp.has_section("data"):
        for key, val in cp.items("data"):
            if key not in PATH_KEYS:
                raise ConfigError(f"unknown key [data] {key}")
            paths[key] = str((base / val).resolve()) if val else None
    kw = {}
    if cp.has_section("run"):
        for key, val in cp.items("run"):
            if key not in RUN_KEYS:
                raise ConfigError(f"unknown key [run] {key}")
            try:
                if key == "targets":
                    kw[key] = parse_targets(val)
                elif key == "algorithms":
                    kw[key] = parse_algorithms(val)
                elif key == "strict_senses":
                    kw[key] = _bool(val)
                else:
                    kw[key] = int(val)
            except ValueError as exc:
                raise ConfigError(f"[run] {key}: {exc}") from None
    knobs = {}
    if cp.has_section("knobs"):
        for key, val in cp.items("knobs"):
            if key not in KNOB_KEYS:
                raise ConfigError(f"unknown key [knobs] {key}")
            knobs[key] = val
    return RunConfig(paths=paths, knobs=knobs, **kw)


def fixture_dir() -> Path:
    return Path(str(importlib_resources.files("wsdkit") / "data" / "fixture"))


def fixture_config(**overrides) -> RunConfig:
    """Configuration for the bundled synthetic data set."""
    root = fixture_dir()
    paths = {
        "inventory": str(root / "inventory.tsv"), "taxonomy": str(root / "taxonomy.tsv"),
        "glosses": str(root / "glosses.tsv"), "corpus": str(root / "corpus.tsv"),
        "classes": str(root / "classes.tsv"), "collections": str(root / "collections"),
        "raw_corpus": str(root / "raw.tsv"),
    }
    cfg = RunConfig(paths=paths, targets=ALL_POLYSEMOUS_NOUNS, k=10, seed=0)
    return cfg.with_overrides(**overrides)


@dataclass
class Loaded:
    lkb: LKB
    corpus: Optional[Corpus]
    resources: Resources


def load_data(cfg: RunConfig, need_corpus: bool = True) -> Loaded:
    cfg.require("inventory", "taxonomy", "glosses", *(("corpus",) if need_corpus else ()))
    lkb = load_lkb(cfg.paths["inventory"], cfg.paths["taxonomy"], cfg.paths["glosses"])
    corpus = None
    if need_corpus:
        corpus = load_corpus(cfg.paths["corpus"], lkb, strict=cfg.strict_senses)
    res = Resources(lkb, cfg.make_knobs())
    if cfg.paths.get("classes"):
        res.classes = load_classes(cfg.paths["classes"])
    if cfg.paths.get("collections"):
        res.collections = read_collections(cfg.paths["collections"])
    if cfg.paths.get("raw_corpus"):
        res.raw_corpus = load_corpus(cfg.paths["raw_corpus"], lkb)
    return Loaded(lkb, corpus, res)


def default_jobs() -> int:
    return os.cpu_count() or 1
