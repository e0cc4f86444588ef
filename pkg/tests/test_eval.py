import pytest

from wsdkit.corpus import ALL_POLYSEMOUS_NOUNS, Instance, instances, make_folds
from wsdkit.disambiguators import Answer, AlgorithmSpec, GlossOverlap, Resources
from wsdkit.disambiguators.base import Knobs
from wsdkit.errors import ConfigError, DataError
from wsdkit.eval import ScoreRow, compare, run_cv, score, tally
from wsdkit.synth import sense_classes

from helpers import corpus, lkb_from, sent, tok


def answers(spec):
    """spec: list of (chosen, gold)."""
    return [Answer(Instance("d", i, 0, "x", "n", g), c) for i, (c, g) in enumerate(spec)]


def test_ten_eight_six():
    spec = [("a", "a")] * 6 + [("b", "a")] * 2 + [(None, "a")] * 2
    row = score(answers(spec))
    assert (row.correct, row.answered, row.total) == (6, 8, 10)
    assert row.precision == 0.6 and row.coverage == 0.8 and row.precision_answered == 0.75


def test_all_abstain():
    row = score(answers([(None, "a")] * 4))
    assert row.precision == 0.0 and row.coverage == 0.0


def test_missing_gold_is_error():
    with pytest.raises(DataError):
        tally(answers([("a", None)]))


def test_inconsistent_row_rejected():
    with pytest.raises(ValueError):
        ScoreRow("x", correct=3, answered=2, total=5)


def separable():
    lkb = lkb_from({"w": ["A", "B"]})
    sents = []
    for i in range(20):
        sense = "w%1" if i % 2 else "w%2"
        sents.append(sent(tok("alpha" if sense == "w%1" else "beta", "JJ"), tok("w", sense=sense), no=str(i)))
    return lkb, corpus(*sents, lkb=lkb)


def test_cv_separable_data_is_perfect():
    lkb, c = separable()
    row = run_cv(c, ["w"], "dl:local", 2, 0, Resources(lkb))
    assert (row.precision, row.coverage) == (1.0, 1.0)
    assert row.cv and len(row.folds) == 2


def test_fold_tallies_pool_to_total(world_lkb, world_corpus):
    res = Resources(world_lkb, classes=sense_classes(world_lkb))
    for algo in ("mfs", "dl:local", "semclass", "overlap"):
        row = run_cv(world_corpus, ALL_POLYSEMOUS_NOUNS, algo, 5, 1, res)
        assert tuple(map(sum, zip(*row.folds))) == (row.correct, row.answered, row.total)
        # precision is the fold-size weighted mean of per-fold precision
        weighted = sum((c / t) * (t / row.total) for c, _, t in row.folds if t)
        assert weighted == pytest.approx(row.precision)


def test_non_trainable_single_pass_equals_cv(world_lkb, world_corpus):
    res = Resources(world_lkb)
    insts = instances(world_corpus, ALL_POLYSEMOUS_NOUNS)
    row = run_cv(world_corpus, ALL_POLYSEMOUS_NOUNS, "overlap", 10, 0, res)
    direct = score(GlossOverlap(world_lkb).apply_many(insts, world_corpus))
    assert (row.correct, row.answered, row.total) == (direct.correct, direct.answered, direct.total)
    assert not row.cv


def test_mfs_beats_random_on_skewed_corpus(world_lkb, world_corpus):
    res = Resources(world_lkb, Knobs(seed=3))
    mfs = run_cv(world_corpus, ALL_POLYSEMOUS_NOUNS, "mfs", 10, 0, res)
    rnd = run_cv(world_corpus, ALL_POLYSEMOUS_NOUNS, "random", 10, 0, res)
    assert mfs.precision > rnd.precision
    assert rnd.coverage == mfs.coverage == 1.0


def test_dependency_rows_fail_cleanly():
    lkb, c = separable()
    row = run_cv(c, ["w"], "dl:syntactic", 2, 0, Resources(lkb))
    assert row.failed and "dependency" in row.failed
    assert "corpus has no dependency" in compare(c, ["w"], ["dl:syntactic"], 2, 0, Resources(lkb)).to_tsv()


def test_compare_shares_folds_and_formats(world_lkb, world_corpus):
    res = Resources(world_lkb)
    rep = compare(world_corpus, ["church", "head"], ["mfs", "random", "dl:local"], 4, 2, res)
    insts = instances(world_corpus, ["church", "head"])
    assert rep.meta["folds"].folds == make_folds(insts, 4, 2).folds
    tsv = rep.to_tsv().splitlines()
    assert tsv[0] == "# targets=church,head\tk=4\tseed=2"
    assert tsv[1].split("\t")[:4] == ["algorithm", "ktypes", "precision", "coverage"]
    assert [l.split("\t")[0] for l in tsv[2:]] == ["mfs", "random", "dl:local"]
    assert "church,head" in rep.to_text()


def test_missing_resources_raise_config_error(world_lkb, world_corpus):
    with pytest.raises(ConfigError):
        run_cv(world_corpus, ["church"], "topsig", 3, 0, Resources(world_lkb))


def test_no_targets():
    lkb, c = separable()
    with pytest.raises(DataError):
        compare(c, ["nothing"], ["mfs"], 2, 0, Resources(lkb))


def test_spec_parse():
    assert AlgorithmSpec.parse("dl").label == "dl:local"
    with pytest.raises(ConfigError):
        AlgorithmSpec.parse("mfs:local")
    with pytest.raises(ConfigError):
        AlgorithmSpec.parse("dl:nope")
    with pytest.raises(ConfigError):
        AlgorithmSpec.parse("magic")
