import io
import math
import random

import pytest
from hypothesis import given, strategies as st

from wsdkit.corpus import instances
from wsdkit.disambiguators import DecisionLists, dl_apply, dl_train
from wsdkit.disambiguators.base import Knobs
from wsdkit.disambiguators.decision_list import DecisionList, Rule, train_decision_list
from wsdkit.errors import ModelError
from wsdkit.features import get_extractor_set
from wsdkit.lkb import Sense

from oracles import log_odds_table

SENSES = [Sense("x%1", "x", "n", 1, "A"), Sense("x%2", "x", "n", 2, "B")]


def test_weight_five_vs_zero():
    examples = [({("f", "v")}, "x%1")] * 5
    dl = train_decision_list(examples, SENSES)
    assert len(dl.rules) == 1
    r = dl.rules[0]
    assert (r.sense, r.key) == ("x%1", ("f", "v"))
    assert r.weight == pytest.approx(math.log(5.1 / 0.1), abs=1e-12)


def test_equal_counts_give_zero_weight_and_are_dropped():
    examples = [({("f", "v")}, "x%1"), ({("f", "v")}, "x%2")]
    assert train_decision_list(examples, SENSES).rules == ()


def test_theta_filters():
    examples = [({("f", "v")}, "x%1")] * 2 + [({("f", "v")}, "x%2")]
    w = math.log(2.1 / 1.1)
    assert len(train_decision_list(examples, SENSES, theta=w - 1e-9).rules) == 1
    assert train_decision_list(examples, SENSES, theta=w).rules == ()


def test_feature_presence_is_binary():
    once = train_decision_list([([("f", "v")], "x%1")], SENSES)
    twice = train_decision_list([([("f", "v"), ("f", "v")], "x%1")], SENSES)
    assert once.rules == twice.rules


def test_default_sense_knob():
    examples = [({("f", str(i))}, "x%2") for i in range(3)] + [({("g", "0")}, "x%1")]
    assert train_decision_list(examples, SENSES).default is None
    assert train_decision_list(examples, SENSES, use_default=True).default == "x%2"


@given(st.permutations(list(range(12))), st.integers(0, 1000))
def test_permutation_invariance(perm, seed):
    rng = random.Random(seed)
    examples = [({("f", str(rng.randrange(4))), ("g", str(rng.randrange(3)))}, rng.choice(["x%1", "x%2"]))
                for _ in range(12)]
    a = train_decision_list(examples, SENSES)
    b = train_decision_list([examples[i] for i in perm], SENSES)
    assert a.rules == b.rules


def test_first_hit_prefers_earliest():
    rules = (Rule("a", "1", "x%1", 3.0), Rule("b", "1", "x%2", 2.0), Rule("a", "1", "x%2", 1.0))
    dl = DecisionList("x", "n", "local", rules)
    assert dl.first_hit([("b", "1"), ("a", "1")]).sense == "x%1"
    assert dl.first_hit([("b", "1")]).sense == "x%2"
    assert dl.first_hit([("c", "1")]) is None


def test_log_odds_oracle_three_senses():
    senses = [Sense(f"y%{i}", "y", "n", i, f"S{i}") for i in (1, 2, 3)]
    table = {("f", "v"): {"y%1": 4, "y%2": 1, "y%3": 0}}
    examples = []
    for (k, v), row in table.items():
        for s, n in row.items():
            examples += [({(k, v)}, s)] * n
    dl = train_decision_list(examples, senses, alpha=0.1)
    oracle = log_odds_table(table, 0.1)
    for r in dl.rules:
        assert r.weight == pytest.approx(oracle[(r.key, r.sense)], abs=1e-12)


def test_dl_on_world_and_dump_roundtrip(world_lkb, world_corpus):
    insts = instances(world_corpus, ["church", "interest"])
    model = DecisionLists(world_lkb, Knobs(), "local").fit(insts, world_corpus)
    buf = io.StringIO()
    model.dump(buf)
    buf.seek(0)
    again = DecisionLists.load(buf, world_lkb)
    assert again.lists == model.lists
    assert [a.chosen for a in again.apply_many(insts, world_corpus)] == \
           [a.chosen for a in model.apply_many(insts, world_corpus)]
    # training accuracy should be high on this clean data
    right = sum(a.chosen == a.instance.gold for a in model.apply_many(insts, world_corpus))
    assert right / len(insts) > 0.85


def test_dl_extractor_mismatch(world_lkb, world_corpus):
    insts = instances(world_corpus, ["church"])
    lists = dl_train(insts, world_corpus, world_lkb, get_extractor_set("local"))
    with pytest.raises(ModelError):
        dl_apply(lists[("church", "n")], insts[0], world_corpus, get_extractor_set("global"))


def test_dl_unseen_lemma_abstains(world_lkb, world_corpus):
    model = DecisionLists(world_lkb).fit(instances(world_corpus, ["church"]), world_corpus)
    inst = instances(world_corpus, ["head"])[0]
    assert model.apply(inst, world_corpus).abstained
