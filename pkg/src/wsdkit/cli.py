"""Command-line interface: ``wsdkit {compare,train,apply,bootstrap,validate}``.

Exit codes: 0 success, 2 configuration error, 3 data error, 4 runtime error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from wsdkit import config as cfgmod
from wsdkit.corpus import instances
from wsdkit.disambiguators import (
    SERIALIZABLE, AlgorithmSpec, BootstrappedDecisionLists, bootstrap_corpus, build_signatures, load_model,
    make_disambiguator,
)
from wsdkit.errors import ConfigError, DataError, WsdError
from wsdkit.eval import compare, score

EXIT_OK, EXIT_CONFIG, EXIT_DATA, EXIT_RUNTIME = 0, 2, 3, 4

log = logging.getLogger("wsdkit")


def _config(args) -> cfgmod.RunConfig:
    if args.fixture and args.config:
        raise ConfigError("--fixture and --config are mutually exclusive")
    if args.fixture:
        cfg = cfgmod.fixture_config()
    elif args.config:
        cfg = cfgmod.load_config(args.config)
    else:
        raise ConfigError("give --config FILE or --fixture")
    over = {}
    if getattr(args, "seed", None) is not None:
        over["seed"] = args.seed
    if getattr(args, "k", None) is not None:
        over["k"] = args.k
    if getattr(args, "jobs", None) is not None:
        over["jobs"] = args.jobs
    if getattr(args, "targets", None):
        over["targets"] = cfgmod.parse_targets(args.targets)
    if getattr(args, "algorithms", None):
        over["algorithms"] = cfgmod.parse_algorithms(args.algorithms)
    paths = dict(cfg.paths)
    for key in ("corpus", "raw_corpus"):
        val = getattr(args, key, None)
        if val is not None:
            paths[key] = str(Path(val).resolve())
    over["paths"] = paths
    return cfg.with_overrides(**over)


def cmd_compare(args) -> int:
    cfg = _config(args)
    data = cfgmod.load_data(cfg)
    jobs = cfg.jobs or cfgmod.default_jobs()
    report = compare(data.corpus, cfg.targets, cfg.specs, cfg.k, cfg.seed, data.resources, jobs=jobs)
    text = report.to_tsv() if args.format == "tsv" else report.to_text()
    sys.stdout.write(text)
    if args.out:
        Path(args.out).write_text(report.to_tsv(), encoding="utf-8")
    return EXIT_OK


def _train_model(cfg, spec, data):
    algo = make_disambiguator(spec, data.resources)
    insts = instances(data.corpus, cfg.targets)
    if isinstance(algo, BootstrappedDecisionLists):
        algo.prepare({i.lemma for i in insts})
    else:
        algo.fit(insts, data.corpus)
    return algo


def cmd_train(args) -> int:
    cfg = _config(args)
    spec = AlgorithmSpec.parse(args.algorithm)
    if spec.name not in SERIALIZABLE and spec.name != "dl_bootstrap":
        raise ConfigError(f"algorithm {spec.name!r} is not trainable")
    data = cfgmod.load_data(cfg)
    model = _train_model(cfg, spec, data)
    with open(args.out, "w", encoding="utf-8") as fh:
        model.dump(fh)
    print(f"wrote {spec.label} model to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_apply(args) -> int:
    cfg = _config(args)
    data = cfgmod.load_data(cfg)
    model = load_model(args.model, data.resources)
    insts = instances(data.corpus, cfg.targets, tagged_only=False)
    answers = model.apply_many(insts, data.corpus)
    lines = ["doc_id\tsent_no\ttok_no\tlemma\tsense\tscore\n"]
    for a in answers:
        sent = data.corpus.sentences[a.instance.sent_index]
        lines.append(f"{sent.doc_id}\t{sent.sent_no}\t{a.instance.tok_index + 1}\t{a.instance.lemma}\t"
                     f"{a.chosen or '-'}\t{a.score:.6g}\n")
    out = "".join(lines)
    if args.out:
        Path(args.out).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    gold = [a for a in answers if a.instance.gold is not None]
    if gold:
        row = score(gold, algorithm=model.name)
        print(f"precision {row.precision:.4f}  coverage {row.coverage:.4f}  ({row.total} tagged)", file=sys.stderr)
    return EXIT_OK


def cmd_bootstrap(args) -> int:
    cfg = _config(args)
    if not cfg.paths.get("collections"):
        raise ConfigError("bootstrap needs [data] collections")
    cfg.require("inventory", "taxonomy", "glosses", "collections", "raw_corpus")
    data = cfgmod.load_data(cfg, need_corpus=False)
    lemmas = None if cfg.targets is cfgmod.ALL_POLYSEMOUS_NOUNS else set(cfg.targets)
    sigs = build_signatures(data.lkb, data.resources.collections, data.resources.knobs.topsig_k, lemmas)
    tagged, n_tagged, n_total = bootstrap_corpus(data.lkb, sigs, data.resources.raw_corpus, data.resources.knobs)
    tagged.write(args.out)
    print(f"tagged {n_tagged}/{n_total}")
    return EXIT_OK


def cmd_validate(args) -> int:
    cfg = _config(args)
    cfg = cfg.with_overrides(strict_senses=True)
    data = cfgmod.load_data(cfg, need_corpus=bool(cfg.paths.get("corpus")))
    lkb = data.lkb
    print(f"lkb: {len(lkb.senses)} senses, {len(lkb.synsets)} synsets, {len(lkb.roots())} roots")
    if data.corpus is not None:
        n_inst = len(instances(data.corpus, cfg.targets))
        print(f"corpus: {len(data.corpus)} sentences, {data.corpus.n_tokens} tokens, {n_inst} target instances")
    res = data.resources
    if res.classes is not None:
        missing = sorted(s for s in res.classes if s not in lkb.senses)
        if missing:
            raise DataError(f"class file mentions unknown senses: {missing[:5]}")
        print(f"classes: {len(res.classes)} senses in {len(set(res.classes.values()))} classes")
    if res.collections is not None:
        empty = sorted(s for s, docs in res.collections.items() if not docs)
        if empty:
            raise DataError(f"empty signature collections: {empty[:5]}")
        build_signatures(lkb, res.collections, res.knobs.topsig_k)
        print(f"collections: {len(res.collections)} senses")
    if res.raw_corpus is not None:
        print(f"raw corpus: {len(res.raw_corpus)} sentences")
    print("ok")
    return EXIT_OK


def _common(p, with_run=True):
    p.add_argument("--config", help="INI run configuration")
    p.add_argument("--fixture", action="store_true", help="use the bundled synthetic data set")
    p.add_argument("--corpus", help="override [data] corpus")
    if with_run:
        p.add_argument("--targets", help="lemma list, or 'all-polysemous-nouns'")
        p.add_argument("--seed", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wsdkit", description="Word sense disambiguation toolkit")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compare", help="cross-validated precision/coverage grid")
    _common(p)
    p.add_argument("--k", type=int)
    p.add_argument("--algorithms", help="space/comma separated specs, e.g. 'mfs dl:local'")
    p.add_argument("--jobs", type=int, help="parallel rows (default: available cores)")
    p.add_argument("--format", choices=("text", "tsv"), default="text")
    p.add_argument("--out", help="also write the TSV report here")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("train", help="train one algorithm on all target instances")
    _common(p)
    p.add_argument("--algorithm", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("apply", help="apply a trained model to the target instances")
    _common(p)
    p.add_argument("--model", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("bootstrap", help="auto-tag a raw corpus with topic signatures")
    _common(p)
    p.add_argument("--raw-corpus", dest="raw_corpus")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_bootstrap)

    p = sub.add_parser("validate", help="format checks on all configured inputs")
    _common(p)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (DataError, FileNotFoundError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except WsdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except Exception as exc:  # noqa: BLE001 - report and map to the runtime exit class
        log.debug("unhandled", exc_info=True)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
