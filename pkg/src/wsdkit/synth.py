"""A small synthetic lexical world for demos, tests and the bundled fixture.

Eight ambiguous nouns get senses under different branches of a toy
taxonomy. Each branch (category) has its own context nouns, adjectives and
verbs, so every algorithm finds some signal: collocating adjectives for the
local features, topical nouns for bags and glosses, verbs with category
preferences for the dependency-based methods.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

from wsdkit.corpus import Corpus, Sentence, Token
from wsdkit.lkb import LKB, Sense, build_lkb

# upper taxonomy: child -> parent
UPPER = {
    "physical_entity": "entity", "abstraction": "entity",
    "object": "physical_entity", "living_thing": "object", "artifact": "object", "part": "object",
    "structure": "artifact", "group": "abstraction", "social_group": "group",
    "relation": "abstraction", "possession": "relation", "communication": "abstraction",
    "psychological_feature": "abstraction", "event": "psychological_feature", "act": "event",
    "cognition": "psychological_feature", "attribute": "abstraction", "measure": "abstraction",
}


@dataclass(frozen=True)
class Category:
    parent: str
    lexfile: str
    nouns: tuple
    adjs: tuple
    subj_verbs: tuple
    obj_verbs: tuple


CATEGORIES = {
    "person": Category("living_thing", "noun.person", ("priest", "bishop", "worker", "king", "citizen", "teacher"),
                       ("young", "wise"), ("pray", "speak"), ("elect", "greet")),
    "building": Category("structure", "noun.artifact", ("tower", "roof", "wall", "altar", "spire"),
                         ("stone", "gothic"), ("stand", "collapse"), ("build", "paint")),
    "organization": Category("social_group", "noun.group", ("clergy", "parish", "council", "diocese"),
                             ("catholic", "protestant"), ("decide", "teach"), ("join", "leave")),
    "body": Category("part", "noun.body", ("neck", "shoulder", "arm", "face", "hair"),
                     ("injured", "bald"), ("ache", "hurt"), ("scratch", "shake")),
    "finance": Category("possession", "noun.possession", ("bank", "money", "loan", "deposit", "rate"),
                        ("annual", "overdrawn"), ("grow", "accrue"), ("pay", "earn")),
    "levy": Category("possession", "noun.possession", ("customs", "tariff", "revenue", "excise"),
                     ("federal", "heavy"), ("increase", "apply"), ("impose", "collect")),
    "holding": Category("possession", "noun.possession", ("stake", "stock", "owner", "shareholder"),
                        ("controlling", "minority"), ("rise", "fall"), ("buy", "sell")),
    "message": Category("communication", "noun.communication", ("story", "report", "letter", "newspaper"),
                        ("detailed", "true"), ("describe", "claim"), ("write", "publish")),
    "attention": Category("cognition", "noun.cognition", ("hobby", "curiosity", "passion", "enthusiasm"),
                          ("keen", "intellectual"), ("wane", "grow"), ("show", "arouse")),
    "property": Category("attribute", "noun.attribute", ("height", "weight", "birth", "retirement"),
                         ("average", "advanced"), ("matter", "vary"), ("reach", "guess")),
    "period": Category("measure", "noun.time", ("century", "era", "dynasty", "millennium"),
                       ("golden", "bronze"), ("begin", "end"), ("enter", "usher")),
    "obligation": Category("act", "noun.act", ("task", "job", "responsibility", "chore"),
                           ("moral", "civic"), ("require", "call"), ("perform", "fulfil")),
    "rite": Category("act", "noun.act", ("mass", "prayer", "sermon", "worship"),
                     ("sunday", "holy"), ("start", "last"), ("attend", "celebrate")),
    "nation": Category("social_group", "noun.group", ("tribe", "nation", "population", "crowd"),
                       ("native", "local"), ("migrate", "vote"), ("govern", "unite")),
    "top": Category("artifact", "noun.artifact", ("page", "column", "bed", "staircase"),
                    ("upper", "topmost"), ("face", "point"), ("reach", "mark")),
}

# target lemma -> categories of its senses, most frequent first
TARGETS = {
    "church": ("organization", "building", "rite"),
    "head": ("body", "person", "top"),
    "interest": ("attention", "finance", "holding"),
    "account": ("message", "finance"),
    "age": ("property", "period"),
    "duty": ("obligation", "levy"),
    "member": ("person", "body"),
    "people": ("person", "nation"),
}

SENSE_WEIGHTS = (0.6, 0.28, 0.12)
FILLER = ("thing", "way", "time", "place", "day", "man")
DOCS = ("d01", "d02", "d03", "d04")


def cat_synset(cat: str) -> str:
    return f"{cat}.n.00"


def build_world_lkb() -> LKB:
    senses = []
    edges = [(cat_synset(c), cat_synset(p)) for c, p in UPPER.items()]
    glosses = {}
    for cat, spec in CATEGORIES.items():
        edges.append((cat_synset(cat), cat_synset(spec.parent)))
        for noun in spec.nouns:
            syn = f"{noun}.n.01"
            senses.append(Sense(f"{noun}%1", noun, "n", 1, syn))
            edges.append((syn, cat_synset(cat)))
            glosses[syn] = (cat,)
    for noun in FILLER:
        syn = f"{noun}.n.01"
        senses.append(Sense(f"{noun}%1", noun, "n", 1, syn))
        edges.append((syn, cat_synset("entity")))
    for lemma, cats in TARGETS.items():
        for rank, cat in enumerate(cats, 1):
            syn = f"{lemma}.n.{rank:02d}"
            senses.append(Sense(f"{lemma}%{rank}", lemma, "n", rank, syn))
            edges.append((syn, cat_synset(cat)))
            spec = CATEGORIES[cat]
            glosses[syn] = (spec.adjs[0],) + spec.nouns[:2]
    return build_lkb(senses, edges, glosses)


def sense_classes(lkb: LKB) -> dict:
    """sense id -> lexicographer-file-like class of its category."""
    out = {}
    for s in lkb.senses.values():
        for cat, spec in CATEGORIES.items():
            if lkb.subsumes(cat_synset(cat), s.synset):
                out[s.id] = spec.lexfile
    return out


def _past(verb):
    return verb + "d" if verb.endswith("e") else verb + "ed"


def _noun(form, lemma, sense, head=None, label=None):
    return Token(form, lemma, "NN", sense, head, label)


def _sentence(rng, lemma, rank, cat, tagged=True):
    spec = CATEGORIES[cat]
    if rng.random() < 0.15:
        spec = CATEGORIES[rng.choice(sorted(CATEGORIES))]
    adj = spec.adjs[0] if rng.random() < 0.7 else rng.choice(spec.adjs)
    n2, n3 = rng.sample(spec.nouns, 2)
    agent = rng.choice(CATEGORIES["person"].nouns)
    filler = rng.choice(FILLER)
    sense = f"{lemma}%{rank}" if tagged else None

    def tag(noun):
        return f"{noun}%1" if tagged else None

    r = rng.random()
    if r < 0.2:
        verb = rng.choice(spec.obj_verbs)
        toks = [Token("The", "the", "DT", None, 1, "det"), _noun(agent, agent, tag(agent), 2, "subj"),
                Token(_past(verb), verb, "VBD"), Token("the", "the", "DT", None, 5, "det"),
                Token(adj, adj, "JJ", None, 5, "amod"), _noun(lemma, lemma, sense, 2, "obj"),
                Token("with", "with", "IN", None, 2, "prep"), _noun(n2, n2, tag(n2), 6, "pobj")]
    elif r < 0.35:
        verb = rng.choice(spec.subj_verbs)
        toks = [Token("The", "the", "DT", None, 2, "det"), Token(adj, adj, "JJ", None, 2, "amod"),
                _noun(lemma, lemma, sense, 3, "subj"), Token(_past(verb), verb, "VBD"),
                Token("near", "near", "IN", None, 3, "prep"), _noun(n2, n2, tag(n2), 4, "pobj"),
                Token("and", "and", "CC", None, 5, "cc"), _noun(n3, n3, tag(n3), 5, "conj")]
    else:
        verb = rng.choice(("mention", "see", "notice"))
        toks = [_noun(n2, n2, tag(n2), 1, "subj"), Token(_past(verb), verb, "VBD"),
                _noun(filler, filler, tag(filler), 1, "obj"), Token("near", "near", "IN", None, 1, "prep"),
                Token("the", "the", "DT", None, 6, "det"), Token(adj, adj, "JJ", None, 6, "amod"),
                _noun(lemma, lemma, sense, 3, "pobj"), Token("of", "of", "IN", None, 6, "prep"),
                _noun(n3, n3, tag(n3), 7, "pobj")]
    return toks


def generate_corpus(lkb: LKB, n_per_lemma: int = 40, seed: int = 0, tagged: bool = True) -> Corpus:
    rng = random.Random(seed)
    items = []
    for lemma, cats in TARGETS.items():
        weights = SENSE_WEIGHTS[:len(cats)]
        for _ in range(n_per_lemma):
            rank = rng.choices(range(1, len(cats) + 1), weights=weights)[0]
            items.append((lemma, rank, cats[rank - 1]))
    rng.shuffle(items)
    sentences = []
    per_doc = -(-len(items) // len(DOCS))
    for i, (lemma, rank, cat) in enumerate(items):
        toks = _sentence(rng, lemma, rank, cat, tagged)
        sentences.append(Sentence(DOCS[i // per_doc], str(i % per_doc + 1), tuple(toks)))
    return Corpus(sentences, lkb)


def generate_collections(docs_per_sense: int = 6, doc_len: int = 12, seed: int = 0) -> dict:
    """Per-sense pseudo-documents of lemmas drawn from the sense's category."""
    rng = random.Random(seed)
    out = {}
    for lemma, cats in TARGETS.items():
        for rank, cat in enumerate(cats, 1):
            spec = CATEGORIES[cat]
            vocab = spec.nouns + spec.adjs + spec.subj_verbs + spec.obj_verbs
            docs = []
            for _ in range(docs_per_sense):
                words = [rng.choice(vocab) for _ in range(doc_len)]
                words += rng.sample(FILLER, 2) + [lemma]
                docs.append(words)
            out[f"{lemma}%{rank}"] = docs
    return out


def write_fixture(root, n_per_lemma: int = 40, seed: int = 0) -> dict:
    """Write a complete data bundle under ``root``; returns the paths."""
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    lkb = build_world_lkb()
    paths = {
        "inventory": root / "inventory.tsv", "taxonomy": root / "taxonomy.tsv", "glosses": root / "glosses.tsv",
        "corpus": root / "corpus.tsv", "classes": root / "classes.tsv", "collections": root / "collections",
        "raw_corpus": root / "raw.tsv",
    }
    lkb.write(paths["inventory"], paths["taxonomy"], paths["glosses"])
    generate_corpus(lkb, n_per_lemma, seed).write(paths["corpus"])
    generate_corpus(lkb, n_per_lemma, seed + 1, tagged=False).write(paths["raw_corpus"])
    with open(paths["classes"], "w", encoding="utf-8") as fh:
        for sid, cls in sorted(sense_classes(lkb).items()):
            fh.write(f"{sid}\t{cls}\n")
    for sense, docs in generate_collections(seed=seed).items():
        d = paths["collections"] / sense
        d.mkdir(parents=True, exist_ok=True)
        for i, words in enumerate(docs):
            (d / f"doc{i:02d}.txt").write_text(" ".join(words) + "\n", encoding="utf-8")
    return paths
