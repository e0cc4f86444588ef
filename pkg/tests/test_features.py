import pytest

from wsdkit.corpus import Instance
from wsdkit.features import (
    BOUNDARY, EXTRACTOR_SETS, KT, NEVER_EXTRACTED, FeatureConfig, extract_global, extract_local,
    extract_syntactic, get_extractor_set, grammatical_role, ktype_of, normalize_label,
)

from helpers import corpus, sent, tok


def at(c, si, ti):
    t = c.sentences[si].tokens[ti]
    return Instance(c.sentences[si].doc_id, si, ti, t.lemma, "n")


def test_single_token_sentence_is_all_boundary():
    c = corpus(sent(tok("church")))
    vec = extract_local(at(c, 0, 0), c)
    ngrams = [f for f in vec if f.kind.startswith(("bigram", "trigram"))]
    assert len(ngrams) == 15
    for f in ngrams:
        assert set(f.value.split("_")) == {BOUNDARY}
    assert not [f for f in vec if f.kind.startswith("window")]


def test_window_and_ngrams():
    c = corpus(sent(tok("the", "DT"), tok("old", "JJ"), tok("church"), tok("bell"), tok("ring", "VBD", form="rang")))
    vec = extract_local(at(c, 0, 2), c)
    window = {f.value for f in vec if f.kind == "window4_word"}
    assert {"old", "bell"} <= window and "church" not in window
    keys = vec.keys()
    assert ("bigram_word_-1", "old_bell") in keys
    assert ("bigram_word_-2", "the_old") in keys
    assert ("bigram_word_+1", "bell_rang") in keys
    assert ("trigram_lemma_-1", "old_bell_ring") in keys
    assert ("bigram_pos_-1", "JJ_NN") in keys
    for f in vec:
        assert "church" not in f.value.split("_")


def test_lowercase_knob():
    c = corpus(sent(tok("old", "JJ", form="Old"), tok("church")))
    inst = at(c, 0, 1)
    assert ("window4_word", "old") in extract_local(inst, c).keys()
    assert ("window4_word", "Old") in extract_local(inst, c, FeatureConfig(lowercase=False)).keys()


def test_global_keeps_multiplicity_and_drops_function_words():
    c = corpus(sent(tok("the", "DT"), tok("bell"), tok("church"), tok("bell"), tok("ring", "VBD")))
    vec = extract_global(at(c, 0, 2), c)
    assert vec.counts()[("sentence_bag_lemma", "bell", KT.TOPIC_ASSOC)] == 2
    assert "the" not in {f.value for f in vec}
    assert "church" not in {f.value for f in vec}


def test_global_stopwords_and_window():
    c = corpus(sent(tok("bell"), doc="d"), sent(tok("church"), tok("tower"), doc="d", no="2"),
               sent(tok("spire"), doc="e", no="1"))
    inst = at(c, 1, 0)
    assert {f.value for f in extract_global(inst, c, FeatureConfig(stopwords=frozenset({"tower"})))} == set()
    wide = extract_global(inst, c, FeatureConfig(global_window=5))
    assert {f.value for f in wide} == {"bell", "tower"}


def test_dependency_features():
    c = corpus(sent(tok("dog", head=1, label="nsubj"), tok("bite", "VBZ"), tok("postman", head=1, label="dobj")))
    vec = extract_syntactic(at(c, 0, 2), c)
    assert ("dep_object_of", "bite", KT.ARG_HEAD) in vec.features
    assert ("deplabel_up", "object", KT.SYNTACTIC_CUE) in vec.features
    assert grammatical_role(at(c, 0, 2), c) == ("bite", "object")
    assert grammatical_role(at(c, 0, 0), c) == ("bite", "subject")
    head_vec = extract_syntactic(Instance("d1", 0, 1, "bite", "v"), c)
    assert ("dep_has_subject", "dog") in head_vec.keys()


def test_no_dependencies_flagged():
    c = corpus(sent(tok("dog"), tok("bite", "VBZ")))
    vec = extract_syntactic(at(c, 0, 0), c)
    assert len(vec) == 0 and not vec.has_dependencies
    assert grammatical_role(at(c, 0, 0), c) is None


def test_role_needs_verb_head():
    c = corpus(sent(tok("bell", head=1, label="subj"), tok("church")))
    assert grammatical_role(at(c, 0, 0), c) is None


def test_every_feature_has_known_ktype(world_corpus):
    allowed = {KT.COLLOCATION, KT.TOPIC_ASSOC, KT.ARG_HEAD, KT.SYNTACTIC_CUE}
    for si in range(10):
        s = world_corpus.sentences[si]
        for ti in range(len(s)):
            inst = Instance(s.doc_id, si, ti, s.tokens[ti].lemma, "n")
            for ex in EXTRACTOR_SETS.values():
                for f in ex(inst, world_corpus):
                    assert f.ktype in allowed
                    assert f.ktype not in NEVER_EXTRACTED
                    assert ktype_of(f.kind) == f.ktype


def test_to_tsv():
    c = corpus(sent(tok("church")))
    line = extract_global(at(c, 0, 0), corpus(sent(tok("church"), tok("bell")))).to_tsv()
    assert line == "sentence_bag_lemma\tbell\t4c\n"


@pytest.mark.parametrize("raw,norm", [("nsubj", "subject"), ("SUBJ", "subject"), ("dobj", "object"),
                                      ("amod", "amod"), (None, None)])
def test_normalize_label(raw, norm):
    assert normalize_label(raw) == norm


def test_unknown_extractor_set():
    with pytest.raises(Exception):
        get_extractor_set("nope")
    with pytest.raises(KeyError):
        ktype_of("mystery")
