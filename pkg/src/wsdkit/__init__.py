"""Word sense disambiguation toolkit with knowledge-type tagged features."""

from wsdkit.corpus import ALL_POLYSEMOUS_NOUNS, Corpus, Instance, instances, load_corpus, make_folds
from wsdkit.disambiguators import AlgorithmSpec, Answer, Knobs, Resources, make_disambiguator
from wsdkit.eval import ScoreReport, ScoreRow, compare, run_cv, score
from wsdkit.features import KnowledgeType
from wsdkit.lkb import LKB, load_lkb

__version__ = "0.1.0"
