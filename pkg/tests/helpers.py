"""Tiny builders for hand-written corpora and taxonomies."""

from wsdkit.corpus import Corpus, Sentence, Token
from wsdkit.lkb import Sense, build_lkb


def tok(lemma, pos="NN", sense=None, head=None, label=None, form=None):
    return Token(form or lemma, lemma, pos, sense, head, label)


def sent(*tokens, doc="d1", no="1"):
    return Sentence(doc, no, tuple(tokens))


def corpus(*sentences, lkb=None):
    return Corpus(list(sentences), lkb)


def lkb_from(spec, edges=(), glosses=None):
    """spec: {lemma: [synset, ...]} in rank order; sense ids are lemma%rank."""
    senses = [Sense(f"{lemma}%{i}", lemma, "n", i, syn)
              for lemma, syns in spec.items() for i, syn in enumerate(syns, 1)]
    return build_lkb(senses, edges, glosses or {})
