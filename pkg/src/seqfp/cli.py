"""Command-line front end: ``seqfp <subcommand> [--config FILE] [--seed N] [--out DIR] ...``.

Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.
"""
from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from pathlib import Path

from .config import ConfigError, RunConfig
from .errors import SeqfpError, StageError
from .fingerprint import DISTANCE_NAMES, FEATURE_NAMES, fingerprint, fmt_real
from .learn import load_model, multilabel_predict
from .oeis import Sequence
from .pipeline import (
    MODELS,
    TASKS,
    model_path,
    run_pipeline,
    stage_dataset,
    stage_evaluate,
    stage_export,
    stage_features,
    stage_ingest,
    stage_ransac,
    stage_train,
)

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_INTERNAL = 0, 1, 2, 3

_DATA_ERRORS = (SeqfpError, OSError, ValueError, KeyError, EOFError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# flag -> RunConfig field, for flags that simply override a config value
_OVERRIDES = {
    "seed": "seed", "out": "out", "workers": "workers",
    "entries": "entries", "stripped": "stripped", "names": "names", "bfile_dir": "bfile_dir",
    "fetch": "fetch_ids", "cache_dir": "cache_dir", "rate_limit": "rate_limit",
    "min_terms": "min_terms", "sample_size": "sample_size",
    "random_count": "random_count", "random_length": "random_length",
    "random_lo": "random_lo", "random_hi": "random_hi",
    "threshold": "ransac_threshold", "iterations": "ransac_iterations",
}


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON run configuration")
    p.add_argument("--seed", type=int, help="master seed")
    p.add_argument("--out", help="output directory")
    p.add_argument("--workers", type=int, help="worker processes for features and trees")


def _source_flags(p) -> None:
    p.add_argument("--entries", help="JSON-lines entry records (optionally .gz)")
    p.add_argument("--stripped", help="OEIS stripped file (optionally .gz)")
    p.add_argument("--names", help="OEIS names file (optionally .gz)")
    p.add_argument("--bfile-dir", dest="bfile_dir", help="directory of bNNNNNN.txt[.gz] files")
    p.add_argument("--fetch", nargs="+", metavar="ID", help="fetch these ids from oeis.org (cached)")
    p.add_argument("--cache-dir", dest="cache_dir", help="fetch cache (default $SEQFP_CACHE_DIR)")
    p.add_argument("--rate-limit", dest="rate_limit", type=float, help="requests per second")
    p.add_argument("--min-terms", dest="min_terms", type=int)
    p.add_argument("--sample-size", dest="sample_size", type=int)


def _random_flags(p) -> None:
    p.add_argument("--random-count", dest="random_count", type=int)
    p.add_argument("--random-length", dest="random_length", type=int)
    p.add_argument("--random-lo", dest="random_lo", type=int)
    p.add_argument("--random-hi", dest="random_hi", type=int)


def _ransac_flags(p) -> None:
    p.add_argument("--threshold", type=float, help="RANSAC inlier threshold")
    p.add_argument("--iterations", type=int, help="RANSAC iterations")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="seqfp", description="Benford/Taylor fingerprints of integer sequences.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("run", help="run every stage")
    _common(p)
    _source_flags(p)
    _random_flags(p)
    _ransac_flags(p)
    p.add_argument("--trees", type=int, help="override every forest's tree count")

    p = sub.add_parser("ingest", help="build the corpus manifest")
    _common(p)
    _source_flags(p)

    p = sub.add_parser("features", help="fingerprints and distances for corpus and random sequences")
    _common(p)
    _random_flags(p)

    p = sub.add_parser("ransac", help="RANSAC line over the (r, s) scatter")
    _common(p)
    _ransac_flags(p)

    p = sub.add_parser("make-dataset", help="label, binary-label and split tables")
    _common(p)

    for name in ("train", "evaluate"):
        p = sub.add_parser(name, help=f"{name} a model")
        _common(p)
        p.add_argument("--task", choices=TASKS, default="keywords")
        p.add_argument("--model", choices=MODELS, default=None,
                       help="default: random_forest for oeis-vs-random, extra_trees for keywords")
        if name == "train":
            p.add_argument("--trees", type=int, help="number of trees")

    p = sub.add_parser("export-figs", help="plot-data files for the figures")
    _common(p)

    p = sub.add_parser("classify", help="fingerprint one sequence read from stdin")
    _common(p)
    p.add_argument("--model-file", dest="model_file",
                   help="keyword model (default: <out>/models/extra_trees.json if present)")
    p.add_argument("--json", action="store_true", help="print JSON instead of a table")

    p = sub.add_parser("show-config", help="print the resolved configuration")
    _common(p)
    _source_flags(p)
    _random_flags(p)
    _ransac_flags(p)
    return parser


def resolve_config(args) -> RunConfig:
    cfg = RunConfig.load(args.config) if getattr(args, "config", None) else RunConfig()
    over = {}
    for flag, field_name in _OVERRIDES.items():
        v = getattr(args, flag, None)
        if v is not None:
            over[field_name] = v
    trees = getattr(args, "trees", None)
    if trees is not None:
        if args.command == "train" and args.task == "oeis-vs-random":
            over["trees_binary"] = trees
        elif args.command == "train":
            over["trees_random_forest" if args.model == "random_forest" else "trees_extra_trees"] = trees
        else:
            over.update(trees_binary=trees, trees_random_forest=trees, trees_extra_trees=trees)
    return cfg.updated(**over)


_TERM_RE = re.compile(r"[\s,]+")


def parse_terms(text: str) -> list[int]:
    tokens = [t for t in _TERM_RE.split(text.strip()) if t]
    if not tokens:
        raise ValueError("no terms on standard input")
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise ValueError(f"not an integer term: {exc}") from exc


def _classify(cfg: RunConfig, args, stdin, stdout) -> None:
    terms = parse_terms(stdin.read())
    row = fingerprint(Sequence("input", terms, "synthetic"))
    labels = None
    path = Path(args.model_file) if args.model_file else model_path(cfg, "keywords", "extra_trees")
    if args.model_file or path.exists():
        model = load_model(path)
        if not hasattr(model, "forests"):
            raise ValueError(f"{path} is not a forest model")
        pred = multilabel_predict(model, row.features[None, :])[0]
        labels = [n for n, v in zip(model.label_names, pred) if v]
    if args.json:
        body = {"n_terms": len(terms),
                "features": dict(zip(FEATURE_NAMES, map(float, row.features))),
                "distances": dict(zip(DISTANCE_NAMES, map(float, row.distances)))}
        if labels is not None:
            body["labels"] = labels
        stdout.write(json.dumps(body, indent=1) + "\n")
        return
    stdout.write(f"n_terms\t{len(terms)}\n")
    for name, v in zip(FEATURE_NAMES, row.features):
        stdout.write(f"{name}\t{fmt_real(v)}\n")
    for name, v in zip(DISTANCE_NAMES, row.distances):
        stdout.write(f"{name}\t{fmt_real(v)}\n")
    if labels is not None:
        stdout.write("labels\t" + (",".join(labels) if labels else "-") + "\n")


def _dispatch(args, stdin, stdout) -> None:
    cfg = resolve_config(args)
    cmd = args.command
    if cmd == "show-config":
        stdout.write(cfg.dumps())
        return
    if cmd == "classify":
        _classify(cfg, args, stdin, stdout)
        return
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    if cmd == "run":
        result = run_pipeline(cfg)
        fit = result["ransac"]
        stdout.write(f"ransac slope {fit.slope:.4f} intercept {fit.intercept:.4f} "
                     f"inliers {fit.n_inliers}/{len(fit.inlier_mask)}\n")
        for name, rep in result["reports"].items():
            stdout.write(f"{name}: subset accuracy {rep.subset_accuracy:.4f} weighted F1 {rep.weighted_f1:.4f}\n")
        stdout.write(f"artifacts in {cfg.out_dir}\n")
    elif cmd == "ingest":
        corpus = stage_ingest(cfg)
        stdout.write(f"{len(corpus)} sequences -> {cfg.out_dir / 'corpus.jsonl'}\n")
    elif cmd == "features":
        rows = stage_features(cfg)
        stdout.write(f"{len(rows)} rows -> {cfg.out_dir / 'features.tsv'}\n")
    elif cmd == "ransac":
        fit = stage_ransac(cfg)
        stdout.write(f"slope {fmt_real(fit.slope)}\nintercept {fmt_real(fit.intercept)}\n"
                     f"inlier_r {fmt_real(fit.inlier_fit.r)}\ninliers {fit.n_inliers}/{len(fit.inlier_mask)}\n")
    elif cmd == "make-dataset":
        stage_dataset(cfg)
        stdout.write(f"dataset tables -> {cfg.out_dir}\n")
    elif cmd in ("train", "evaluate"):
        mode = args.model or ("random_forest" if args.task == "oeis-vs-random" else "extra_trees")
        if cmd == "train":
            stage_train(cfg, args.task, mode)
            stdout.write(f"model -> {model_path(cfg, args.task, mode)}\n")
        else:
            stdout.write(stage_evaluate(cfg, args.task, mode).table())
    elif cmd == "export-figs":
        for p in stage_export(cfg):
            stdout.write(f"{p}\n")


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        _dispatch(args, stdin, stdout)
    except ConfigError as exc:
        stderr.write(f"seqfp: config error: {exc}\n")
        return EXIT_USAGE
    except StageError as exc:
        stderr.write(f"seqfp: error: {exc}\n")
        return EXIT_DATA if isinstance(exc.cause, _DATA_ERRORS) else EXIT_INTERNAL
    except _DATA_ERRORS as exc:
        stderr.write(f"seqfp: error: {exc}\n")
        return EXIT_DATA
    except Exception as exc:  # noqa: BLE001 - last-resort guard
        stderr.write(f"seqfp: internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
