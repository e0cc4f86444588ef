"""Decision lists over typed context features.

Every (feature, sense) pair gets the smoothed one-vs-rest log-odds

    weight = log((count(f, s) + alpha) / (count(f, not s) + alpha * (n - 1)))

where ``n`` is the number of senses of the lemma in the inventory. Pairs
with weight <= theta are dropped and the rest sorted by weight; at test
time the first rule whose feature occurs in the instance decides.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from wsdkit.disambiguators.base import Disambiguator, Knobs, read_model_lines, write_header
from wsdkit.errors import ModelError
from wsdkit.features import ExtractorSet, get_extractor_set


@dataclass(frozen=True)
class Rule:
    kind: str
    value: str
    sense: str
    weight: float

    @property
    def key(self) -> tuple:
        return (self.kind, self.value)


def log_odds(c_fs: int, c_f_not_s: int, n_senses: int, alpha: float) -> float:
    return math.log((c_fs + alpha) / (c_f_not_s + alpha * max(n_senses - 1, 1)))


def rule_order(rank: dict):
    """Sort key: weight desc, then sense rank, sense id, feature kind and value."""
    return lambda r: (-r.weight, rank[r.sense], r.sense, r.kind, r.value)


@dataclass
class DecisionList:
    lemma: str
    pos: str
    extractors: str
    rules: tuple
    default: Optional[str] = None

    def __post_init__(self):
        first = {}
        for i, r in enumerate(self.rules):
            first.setdefault(r.key, i)
        self._first = first

    def first_hit(self, keys: Iterable[tuple]) -> Optional[Rule]:
        best = None
        for k in keys:
            i = self._first.get(k)
            if i is not None and (best is None or i < best):
                best = i
        return None if best is None else self.rules[best]


def train_decision_list(examples: Iterable[tuple], senses: Sequence, *, lemma: str = "", pos: str = "",
                        extractors: str = "", alpha: float = 0.1, theta: float = 0.0,
                        use_default: bool = False) -> DecisionList:
    """Train from ``(feature_keys, gold_sense)`` pairs.

    ``senses`` is the ranked inventory for the lemma. Feature presence is
    binary per example.
    """
    rank = {s.id: s.rank for s in senses}
    n = len(senses)
    c_fs = Counter()
    c_f = Counter()
    sense_n = Counter()
    for keys, gold in examples:
        sense_n[gold] += 1
        for k in set(keys):
            c_fs[(k, gold)] += 1
            c_f[k] += 1
    rules = []
    for k in c_f:
        for s in rank:
            w = log_odds(c_fs[(k, s)], c_f[k] - c_fs[(k, s)], n, alpha)
            if w > theta:
                rules.append(Rule(k[0], k[1], s, w))
    rules.sort(key=rule_order(rank))
    default = None
    if use_default and sense_n:
        default = min(sense_n, key=lambda s: (-sense_n[s], rank[s], s))
    return DecisionList(lemma, pos, extractors, tuple(rules), default)


def dl_train(train, corpus, lkb, extractors: ExtractorSet, knobs: Knobs = Knobs()) -> dict:
    """One decision list per (lemma, pos) present in ``train``."""
    grouped = defaultdict(list)
    for inst in train:
        if inst.gold is None:
            continue
        keys = extractors(inst, corpus, knobs.features).keys()
        grouped[(inst.lemma, inst.pos)].append((keys, inst.gold))
    return {
        (lemma, pos): train_decision_list(
            ex, lkb.senses_of(lemma, pos), lemma=lemma, pos=pos, extractors=extractors.name,
            alpha=knobs.alpha, theta=knobs.theta, use_default=knobs.dl_default)
        for (lemma, pos), ex in sorted(grouped.items())
    }


def dl_apply(dlist: DecisionList, inst, corpus, extractors: ExtractorSet, knobs: Knobs = Knobs()):
    """(sense or None, weight) for one instance."""
    if dlist.extractors != extractors.name:
        raise ModelError(f"decision list trained with {dlist.extractors!r} features, "
                         f"applied with {extractors.name!r}")
    hit = dlist.first_hit(extractors(inst, corpus, knobs.features).keys())
    if hit is not None:
        return hit.sense, hit.weight
    return dlist.default, 0.0


class DecisionLists(Disambiguator):
    name = "dl"
    trainable = True

    def __init__(self, lkb, knobs=Knobs(), extractors="local", lists=None):
        super().__init__(lkb, knobs)
        self.extractors = get_extractor_set(extractors) if isinstance(extractors, str) else extractors
        self.ktypes = self.extractors.ktypes
        self.lists = lists or {}

    def fit(self, train, corpus, held_out=()):
        self.lists = dl_train(train, corpus, self.lkb, self.extractors, self.knobs)
        return self

    def apply(self, inst, corpus):
        dlist = self.lists.get((inst.lemma, inst.pos))
        if dlist is None:
            return self.abstain(inst)
        sense, weight = dl_apply(dlist, inst, corpus, self.extractors, self.knobs)
        if sense is None:
            return self.abstain(inst)
        return self.answer(inst, sense, weight)

    def dump(self, fh):
        write_header(fh, "dl", extractors=self.extractors.name, alpha=repr(self.knobs.alpha),
                     theta=repr(self.knobs.theta))
        for (lemma, pos) in sorted(self.lists):
            dlist = self.lists[(lemma, pos)]
            fh.write(f"#lemma\t{lemma}\t{pos}\t{dlist.default or '-'}\n")
            for r in dlist.rules:
                fh.write(f"{r.kind}\t{r.value}\t{r.sense}\t{r.weight!r}\n")

    @classmethod
    def load(cls, fh, lkb, knobs=Knobs()):
        opts, lines = read_model_lines(fh, "dl")
        ext = opts["extractors"]
        lists = {}
        cur = None
        for line in lines:
            cols = line.split("\t")
            if cols[0] == "#lemma":
                if cur:
                    lists[(cur[0], cur[1])] = DecisionList(cur[0], cur[1], ext, tuple(cur[3]), cur[2])
                cur = (cols[1], cols[2], None if cols[3] == "-" else cols[3], [])
            else:
                if cur is None:
                    raise ModelError("rule before any #lemma line")
                kind, value, sense, weight = cols
                cur[3].append(Rule(kind, value, sense, float(weight)))
        if cur:
            lists[(cur[0], cur[1])] = DecisionList(cur[0], cur[1], ext, tuple(cur[3]), cur[2])
        return cls(lkb, knobs, ext, lists)

