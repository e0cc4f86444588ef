import pickle
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from wsdkit.corpus import (
    ALL_POLYSEMOUS_NOUNS, Instance, dumps, instances, load_corpus, loads, make_folds, sentences_excluding,
)
from wsdkit.errors import DataError, ParseError

from helpers import corpus, lkb_from, sent, tok

SAMPLE = (
    "d1\t1\t1\tThe\tthe\tDT\t-\t2\tdet\n"
    "d1\t1\t2\tbank\tbank\tNN\tbank%2\t3\tsubj\n"
    "d1\t1\t3\tfailed\tfail\tVBD\t-\t-\t-\n"
    "\n"
    "d1\t2\t1\tbanks\tbank\tNNS\tbank%1\t-\t-\n"
    "d1\t2\t2\trise\trise\tVB\t-\t-\t-\n"
)


@pytest.fixture
def bank_lkb():
    return lkb_from({"bank": ["slope", "money"], "river": ["river"]})


def test_empty_corpus_has_no_instances():
    c = loads("")
    assert len(c) == 0 and c.n_tokens == 0
    assert instances(c, ["bank"]) == []


def test_parse_and_positions(bank_lkb):
    c = loads(SAMPLE, bank_lkb)
    assert len(c) == 2 and c.n_tokens == 5
    t = c.sentences[0].tokens[1]
    assert t.sense == "bank%2" and t.dep_head == 2 and t.dep_label == "subj"
    assert c.sentences[0].has_dependencies and not c.sentences[1].has_dependencies


def test_roundtrip(tmp_path, bank_lkb):
    c = loads(SAMPLE, bank_lkb)
    p = tmp_path / "c.tsv"
    c.write(p)
    assert p.read_text() == SAMPLE + "\n"
    assert load_corpus(p, bank_lkb).sentences == c.sentences


def test_roundtrip_world(world_corpus, world_lkb):
    assert loads(dumps(world_corpus), world_lkb).sentences == world_corpus.sentences


def test_tagged_counts_match_scan(world_corpus):
    insts = instances(world_corpus, ["church", "head"])
    expected = Counter()
    for s in world_corpus.sentences:
        for t in s.tokens:
            if t.lemma in ("church", "head") and t.sense:
                expected[t.sense] += 1
    assert Counter(i.gold for i in insts) == expected


@pytest.mark.parametrize("bad,msg", [
    ("d1\t1\t1\tx\tx\tNN\t-\t-\n", "9 tab-separated"),
    ("d1\t1\t2\tx\tx\tNN\t-\t-\t-\n", "out of sequence"),
    ("d1\t1\t1\tx\tx\tNN\t-\tzz\t-\n", "not an integer"),
    ("d1\t1\t1\tx\tx\tNN\t-\t1\t-\n", "valid other token"),
])
def test_malformed_lines(bad, msg):
    with pytest.raises(ParseError, match=msg) as exc:
        loads("d1\t0\t1\tok\tok\tNN\t-\t-\t-\n\n" + bad)
    assert exc.value.lineno == 3


def test_unknown_sense_strict_and_lenient(bank_lkb, caplog):
    text = "d1\t1\t1\tbank\tbank\tNN\tbank%9\t-\t-\n"
    with pytest.raises(ParseError, match="not in inventory"):
        loads(text, bank_lkb, strict=True)
    c = loads(text, bank_lkb)
    assert c.sentences[0].tokens[0].sense is None
    assert "tag dropped" in caplog.text


def test_mismatched_sense_lemma(bank_lkb):
    with pytest.raises(ParseError, match="belongs to"):
        loads("d1\t1\t1\triver\triver\tNN\tbank%1\t-\t-\n", bank_lkb, strict=True)


def test_all_polysemous_nouns(bank_lkb):
    c = loads(SAMPLE + "\nd1\t3\t1\triver\triver\tNN\triver%1\t-\t-\n", bank_lkb)
    got = instances(c, ALL_POLYSEMOUS_NOUNS)
    assert [i.lemma for i in got] == ["bank", "bank"]
    assert [i.gold for i in got] == ["bank%2", "bank%1"]
    with pytest.raises(DataError):
        instances(loads(SAMPLE), ALL_POLYSEMOUS_NOUNS)


def test_sentinel_survives_pickle():
    assert pickle.loads(pickle.dumps(ALL_POLYSEMOUS_NOUNS)) is ALL_POLYSEMOUS_NOUNS


def test_untagged_instances_optional(bank_lkb):
    c = corpus(sent(tok("bank"), tok("bank", sense="bank%1")), lkb=bank_lkb)
    assert len(instances(c, ["bank"])) == 1
    assert len(instances(c, ["bank"], tagged_only=False)) == 2


def _insts(spec):
    """spec: {lemma: n} -> instances each in its own sentence."""
    out = []
    si = 0
    for lemma, n in spec.items():
        for _ in range(n):
            out.append(Instance("d", si, 0, lemma, "n", f"{lemma}%1"))
            si += 1
    return out


def test_ten_instances_ten_folds():
    fa = make_folds(_insts({"a": 10}), 10, 0)
    assert fa.sizes() == [1] * 10


def test_twenty_three_instances():
    fa = make_folds(_insts({"a": 23}), 10, 0)
    assert sorted(fa.sizes()) == [2] * 7 + [3] * 3


def test_folds_deterministic_and_seed_sensitive():
    insts = _insts({"a": 30, "b": 17})
    assert make_folds(insts, 5, 1).folds == make_folds(insts, 5, 1).folds
    assert make_folds(insts, 5, 1).folds != make_folds(insts, 5, 2).folds


def test_folds_independent_of_input_order():
    insts = _insts({"a": 12, "b": 9})
    a = make_folds(insts, 4, 3)
    b = make_folds(list(reversed(insts)), 4, 3)
    assert dict(zip(a.instances, a.folds)) == dict(zip(b.instances, b.folds))


@given(st.dictionaries(st.sampled_from("abcdef"), st.integers(1, 40), min_size=1),
       st.integers(2, 10), st.integers(0, 100))
def test_folds_partition_and_stratify(spec, k, seed):
    insts = _insts(spec)
    fa = make_folds(insts, k, seed)
    seen = []
    for f in range(k):
        train, test = fa.split(f)
        assert len(train) + len(test) == len(insts)
        assert not set(train) & set(test)
        seen.extend(test)
    assert sorted(seen) == sorted(insts)
    for lemma in spec:
        per = Counter(f for i, f in zip(fa.instances, fa.folds) if i.lemma == lemma)
        sizes = [per.get(f, 0) for f in range(k)]
        assert max(sizes) - min(sizes) <= 1
    assert max(fa.sizes()) - min(fa.sizes()) <= 1


def test_make_folds_rejects_bad_input():
    with pytest.raises(ValueError):
        make_folds(_insts({"a": 3}), 1, 0)
    with pytest.raises(ValueError):
        make_folds([], 3, 0)


def test_sentences_excluding():
    c = corpus(sent(tok("a")), sent(tok("b")), sent(tok("c")))
    held = [Instance("d1", 1, 0, "b", "n")]
    assert sentences_excluding(c, held) == [0, 2]
