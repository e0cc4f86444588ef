"""Cross-validated evaluation and the precision/coverage comparison grid.

Metrics follow the classic all-examples convention:

* precision = correct answers / all examples (abstentions count as wrong)
* coverage  = answers given / all examples

``precision_answered`` (correct / answered) is reported as an extra column.
"""

from __future__ import annotations

import io
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from wsdkit.corpus import ALL_POLYSEMOUS_NOUNS, Corpus, FoldAssignment, instances, make_folds
from wsdkit.disambiguators import AlgorithmSpec, Resources, make_disambiguator
from wsdkit.errors import DataError, WsdError
from wsdkit.features import EXTRACTOR_SETS

log = logging.getLogger(__name__)

TSV_COLUMNS = ("algorithm", "ktypes", "precision", "coverage", "precision_answered",
               "correct", "answered", "total", "cv", "note")


@dataclass(frozen=True)
class ScoreRow:
    algorithm: str
    ktypes: str = "-"
    correct: int = 0
    answered: int = 0
    total: int = 0
    cv: bool = False
    folds: tuple = ()  # per-fold (correct, answered, total)
    failed: Optional[str] = None

    def __post_init__(self):
        if not (0 <= self.correct <= self.answered <= self.total):
            raise ValueError(f"inconsistent counts {self.correct}/{self.answered}/{self.total}")

    @property
    def precision(self) -> float:
        return self.correct / self.total if self.total else 0.0

    @property
    def coverage(self) -> float:
        return self.answered / self.total if self.total else 0.0

    @property
    def precision_answered(self) -> float:
        return self.correct / self.answered if self.answered else 0.0


@dataclass
class ScoreReport:
    rows: list
    targets: str
    k: int
    seed: int
    meta: dict = field(default_factory=dict)

    def to_tsv(self) -> str:
        out = io.StringIO()
        out.write(f"# targets={self.targets}\tk={self.k}\tseed={self.seed}\n")
        out.write("\t".join(TSV_COLUMNS) + "\n")
        for r in self.rows:
            out.write("\t".join(_cells(r)) + "\n")
        return out.getvalue()

    def to_text(self) -> str:
        header = ["algorithm", "ktypes", "prec.", "cov.", "prec.ans", "correct", "answered", "total", "cv", "note"]
        body = [_cells(r) for r in self.rows]
        widths = [max(len(str(x)) for x in col) for col in zip(header, *body)]
        lines = [f"targets: {self.targets}   k: {self.k}   seed: {self.seed}"]
        for row in [header] + body:
            lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        return "\n".join(lines) + "\n"


def _cells(r: ScoreRow) -> list:
    if r.failed:
        return [r.algorithm, r.ktypes, "-", "-", "-", "-", "-", "-", "yes" if r.cv else "no", r.failed]
    return [r.algorithm, r.ktypes, f"{r.precision:.4f}", f"{r.coverage:.4f}", f"{r.precision_answered:.4f}",
            str(r.correct), str(r.answered), str(r.total), "yes" if r.cv else "no", ""]


def format_ktypes(ktypes) -> str:
    return " ".join(str(k) for k in ktypes) if ktypes else "-"


def tally(answers, gold=None) -> tuple:
    correct = answered = 0
    for a in answers:
        g = gold[a.instance] if gold is not None else a.instance.gold
        if g is None:
            raise DataError(f"instance {a.instance.key} has no gold sense")
        if a.chosen is not None:
            answered += 1
            correct += a.chosen == g
    return correct, answered, len(answers)


def score(answers: Sequence, gold=None, algorithm: str = "", ktypes: str = "-") -> ScoreRow:
    """Score answers against ``gold`` (a mapping instance -> sense, default: each instance's own gold)."""
    c, a, t = tally(answers, gold)
    return ScoreRow(algorithm, ktypes, c, a, t)


def describe_targets(targets) -> str:
    if targets is ALL_POLYSEMOUS_NOUNS:
        return "all-polysemous-nouns"
    return ",".join(sorted(targets))


def _needs_dependencies(spec: AlgorithmSpec) -> bool:
    if spec.name == "selpref":
        return True
    return spec.extractors is not None and EXTRACTOR_SETS[spec.extractors].needs_dependencies


def run_cv(corpus: Corpus, targets, spec, k: int, seed: int, res: Resources,
           folds: Optional[FoldAssignment] = None) -> ScoreRow:
    """Train on k-1 folds, answer the held-out fold, pool all answers and score once.

    Algorithms that do not learn from the folds are run in a single pass.
    """
    spec = AlgorithmSpec.parse(spec) if isinstance(spec, str) else spec
    if folds is None:
        insts = instances(corpus, targets)
        if not insts:
            raise DataError("no target instances in corpus")
        folds = make_folds(insts, k, seed)
    algo = make_disambiguator(spec, res)
    ktypes = format_ktypes(algo.ktypes)
    if _needs_dependencies(spec) and not any(s.has_dependencies for s in corpus.sentences):
        return ScoreRow(spec.label, ktypes, cv=algo.trainable, failed="corpus has no dependency columns")
    if not algo.trainable:
        insts = list(folds.instances)
        answers = algo.fit([], corpus, held_out=insts).apply_many(insts, corpus)
        by_inst = dict(zip(insts, answers))
        per_fold = tuple(tally([by_inst[i] for i in folds.fold(f)]) for f in range(folds.k))
        return ScoreRow(spec.label, ktypes, *tally(answers), cv=False, folds=per_fold)
    per_fold = []
    pooled = []
    for f in range(folds.k):
        train, test = folds.split(f)
        if not test:
            per_fold.append((0, 0, 0))
            continue
        model = make_disambiguator(spec, res).fit(train, corpus, held_out=test)
        answers = model.apply_many(test, corpus)
        per_fold.append(tally(answers))
        pooled.extend(answers)
    return ScoreRow(spec.label, ktypes, *tally(pooled), cv=True, folds=tuple(per_fold))


def _row_job(args):
    corpus, targets, spec, k, seed, res, folds = args
    try:
        return run_cv(corpus, targets, spec, k, seed, res, folds)
    except WsdError as exc:
        log.warning("%s failed: %s", spec.label, exc)
        return ScoreRow(spec.label, failed=str(exc))


def compare(corpus: Corpus, targets, specs: Sequence, k: int, seed: int, res: Resources,
            jobs: int = 1) -> ScoreReport:
    """One row per spec, all evaluated on the same fold assignment."""
    specs = [AlgorithmSpec.parse(s) if isinstance(s, str) else s for s in specs]
    insts = instances(corpus, targets)
    if not insts:
        raise DataError("no target instances in corpus")
    folds = make_folds(insts, k, seed)
    jobs_args = [(corpus, targets, s, k, seed, res, folds) for s in specs]
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(specs))) as pool:
            rows = list(pool.map(_row_job, jobs_args))
    else:
        rows = [_row_job(a) for a in jobs_args]
    return ScoreReport(rows, describe_targets(targets), k, seed, meta={"folds": folds})
