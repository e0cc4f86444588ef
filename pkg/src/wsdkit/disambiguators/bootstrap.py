"""Auto-tagging a raw corpus with topic signatures, and decision lists trained on it."""

from __future__ import annotations

from dataclasses import replace

from wsdkit.corpus import Corpus, Sentence, instances
from wsdkit.disambiguators.base import Knobs
from wsdkit.disambiguators.decision_list import DecisionLists
from wsdkit.disambiguators.topsig import build_signatures, topsig_apply
from wsdkit.features import context_lemmas


def bootstrap_corpus(lkb, signatures: dict, raw: Corpus, knobs: Knobs = Knobs()) -> tuple:
    """Tag every untagged occurrence of a signature lemma in ``raw``.

    Returns ``(tagged_corpus, n_tagged, n_occurrences)``. Abstentions stay
    untagged; the input corpus is not modified.
    """
    lemmas = {lemma for lemma, _ in signatures}
    probe = Corpus(raw.sentences, lkb)
    tags = {}
    n_total = 0
    for inst in instances(probe, lemmas, tagged_only=False):
        sig = signatures.get((inst.lemma, inst.pos))
        if sig is None or probe.token(inst).sense is not None:
            continue
        n_total += 1
        sense, _ = topsig_apply(lkb, sig, context_lemmas(inst, probe, knobs.features))
        if sense is not None:
            tags[(inst.sent_index, inst.tok_index)] = sense
    touched = {si for si, _ in tags}
    sentences = []
    for si, sent in enumerate(raw.sentences):
        if si in touched:
            toks = tuple(replace(t, sense=tags.get((si, ti), t.sense)) for ti, t in enumerate(sent.tokens))
            sentences.append(Sentence(sent.doc_id, sent.sent_no, toks))
        else:
            sentences.append(sent)
    return Corpus(sentences, lkb), len(tags), n_total


class BootstrappedDecisionLists(DecisionLists):
    """Decision lists trained only on a corpus auto-tagged by topic signatures.

    The hand-tagged training folds are ignored; ``fit`` trains once on the
    bootstrapped corpus for the lemmas it is asked about.
    """

    name = "dl_bootstrap"
    trainable = False

    def __init__(self, lkb, knobs=Knobs(), extractors="local", collections=None, raw=None):
        super().__init__(lkb, knobs, extractors)
        self.collections = collections
        self.raw = raw
        self._trained_for = None

    def prepare(self, lemmas) -> None:
        lemmas = frozenset(lemmas)
        if self._trained_for == lemmas:
            return
        sigs = build_signatures(self.lkb, self.collections, self.knobs.topsig_k, lemmas)
        tagged, _, _ = bootstrap_corpus(self.lkb, sigs, self.raw, self.knobs)
        super().fit(instances(tagged, lemmas), tagged)
        self._trained_for = lemmas

    def fit(self, train, corpus, held_out=()):
        self.prepare({i.lemma for i in train} | {i.lemma for i in held_out})
        return self

    def apply_many(self, insts, corpus):
        self.prepare({i.lemma for i in insts} | (self._trained_for or frozenset()))
        return [super(BootstrappedDecisionLists, self).apply(i, corpus) for i in insts]

    def apply(self, inst, corpus):
        return self.apply_many([inst], corpus)[0]
