"""Command-line interface.

Three subcommands:

* ``simplify`` reads one tokenized sentence per line (file or stdin) and
  writes one simplified sentence per line to stdout; ``--trace`` emits a
  JSON trace object per line on stderr.
* ``evaluate`` scores aligned original/system/reference files with SARI
  and perplexity decrease.
* ``serve`` runs the HTTP service.

Exit codes: 0 success, 2 configuration error, 3 resource error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .evalmetrics import EvaluationRecord, evaluate_corpus
from .pipeline import TRACE_VERSION, Mode, simplify
from .service import (
    DEFAULT_MODEL_ID,
    ConfigError,
    Resources,
    ResourceError,
    ServiceConfig,
    load_resources,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_RESOURCE = 3


def _add_resource_flags(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--corpus", required=required, help="corpus text file or model cache")
    parser.add_argument(
        "--lexicon", required=required, help="word<TAB>rating lexicon or classifier file"
    )
    parser.add_argument("--thesaurus", required=required, help="offline thesaurus file")
    parser.add_argument("--vectors", help="word-vector text file (word-embedding mode)")
    parser.add_argument(
        "--embed-endpoint",
        help="sentence-embedding endpoint URL, cache file path, or 'mock[:seed]' (transformer mode)",
    )


def _build_config(args: argparse.Namespace, mode: str, phi: float) -> ServiceConfig:
    return ServiceConfig(
        corpus_path=args.corpus,
        lexicon_path=args.lexicon,
        thesaurus_path=args.thesaurus,
        vectors_path=getattr(args, "vectors", None),
        embed_endpoint=getattr(args, "embed_endpoint", None),
        phi=phi,
        mode=mode,
    )


def _cmd_simplify(args: argparse.Namespace) -> int:
    if not 0.0 <= args.phi <= 1.0:
        print(f"error: --phi must be in [0, 1], got {args.phi}", file=sys.stderr)
        return EXIT_CONFIG
    config = _build_config(args, args.mode, args.phi)
    try:
        config.validate()
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        resources = load_resources(config)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE

    mode = Mode(args.mode)
    pipeline_config = resources.pipeline_config(mode, args.phi, args.model)

    if args.input and args.input != "-":
        try:
            lines = open(args.input, encoding="utf-8").read().splitlines()
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_RESOURCE
    else:
        lines = sys.stdin.read().splitlines()

    for line in lines:
        tokens = line.split()
        if not tokens:
            print("")
            continue
        result = simplify(tokens, pipeline_config)
        print(result.text)
        if args.trace:
            record = {
                "trace_version": TRACE_VERSION,
                "input": line,
                "simplified": result.text,
                "pp_score": result.final_pp_score.combined,
                "trace": [trace.to_dict() for trace in result.traces],
            }
            print(json.dumps(record), file=sys.stderr)
    return EXIT_OK


def _read_sentence_file(path) -> list[list[str]]:
    with open(path, encoding="utf-8") as fh:
        return [line.lower().split() for line in fh.read().splitlines()]


def _cmd_evaluate(args: argparse.Namespace) -> int:
    if not 0.0 <= args.phi <= 1.0:
        print(f"error: --phi must be in [0, 1], got {args.phi}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        originals = _read_sentence_file(args.orig)
        outputs = _read_sentence_file(args.system)
        reference_files = [_read_sentence_file(path) for path in args.refs]
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE

    lengths = {args.orig: len(originals), args.system: len(outputs)}
    lengths.update({path: len(ref) for path, ref in zip(args.refs, reference_files)})
    if len(set(lengths.values())) != 1:
        detail = ", ".join(f"{path}: {count}" for path, count in lengths.items())
        print(f"error: line counts differ across files ({detail})", file=sys.stderr)
        return EXIT_CONFIG

    try:
        from . import langmodel

        if langmodel.is_model_cache(args.corpus):
            model = langmodel.load_model(args.corpus)
        else:
            model = langmodel.build_model(langmodel.read_corpus(args.corpus))
    except (OSError, ValueError) as exc:
        print(f"error: corpus {args.corpus!r}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE

    try:
        records = [
            EvaluationRecord(
                input=tuple(orig),
                system_output=tuple(out),
                references=tuple(tuple(refs[i]) for refs in reference_files),
            )
            for i, (orig, out) in enumerate(zip(originals, outputs))
        ]
        report = evaluate_corpus(records, model, args.phi)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    print(f"{'record':>6}  {'sari':>8}")
    for index, value in enumerate(report.per_record_sari):
        print(f"{index:>6}  {value:>8.4f}")
    print()
    print(f"records                 {len(report.per_record_sari)}")
    print(f"mean SARI               {report.mean_sari:.4f}")
    print(f"mean original pp        {report.mean_original_pp:.4f}")
    print(f"mean simplified pp      {report.mean_simplified_pp:.4f}")
    print(f"perplexity decrease     {report.perplexity_decrease_pct:.2f}%")
    print()
    print(f"sari_mean={report.mean_sari!r}")
    print(f"pp_original_mean={report.mean_original_pp!r}")
    print(f"pp_simplified_mean={report.mean_simplified_pp!r}")
    print(f"pp_decrease_pct={report.perplexity_decrease_pct!r}")
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    # Flags override the SIMPLEX_* environment; either source may fill a field.
    import os

    env = os.environ
    try:
        config = ServiceConfig(
            corpus_path=args.corpus or env.get("SIMPLEX_CORPUS", ""),
            lexicon_path=args.lexicon or env.get("SIMPLEX_LEXICON", ""),
            thesaurus_path=args.thesaurus or env.get("SIMPLEX_THESAURUS", ""),
            vectors_path=args.vectors or env.get("SIMPLEX_VECTORS") or None,
            embed_endpoint=args.embed_endpoint or env.get("SIMPLEX_EMBED_ENDPOINT") or None,
            listen=args.listen or env.get("SIMPLEX_LISTEN", "127.0.0.1:8000"),
            phi=args.phi if args.phi is not None else float(env.get("SIMPLEX_PHI", "0")),
            mode=args.mode or env.get("SIMPLEX_MODE", "we"),
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    missing = [
        flag
        for flag, value in [
            ("--corpus/SIMPLEX_CORPUS", config.corpus_path),
            ("--lexicon/SIMPLEX_LEXICON", config.lexicon_path),
            ("--thesaurus/SIMPLEX_THESAURUS", config.thesaurus_path),
        ]
        if not value
    ]
    if missing:
        print(f"error: missing resource settings: {', '.join(missing)}", file=sys.stderr)
        return EXIT_CONFIG
    if not 0.0 <= config.phi <= 1.0:
        print(f"error: --phi must be in [0, 1], got {config.phi}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        config.validate()
        resources = load_resources(config)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE

    from .app import create_app

    host, _, port = config.listen.partition(":")
    import uvicorn

    uvicorn.run(create_app(resources), host=host or "127.0.0.1", port=int(port or "8000"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lexsimp", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_simp = sub.add_parser("simplify", help="simplify sentences line by line")
    p_simp.add_argument("--mode", choices=[m.value for m in Mode], default="we")
    p_simp.add_argument("--phi", type=float, default=0.0, help="bigram factor in [0, 1]")
    p_simp.add_argument("--model", default=DEFAULT_MODEL_ID, help="sentence-embedding model id")
    p_simp.add_argument("--input", default="-", help="input file, '-' for stdin")
    p_simp.add_argument("--trace", action="store_true", help="emit JSON traces on stderr")
    _add_resource_flags(p_simp)
    p_simp.set_defaults(func=_cmd_simplify)

    p_eval = sub.add_parser("evaluate", help="score aligned simplification files")
    p_eval.add_argument("--orig", required=True, help="original sentences, one per line")
    p_eval.add_argument("--system", required=True, help="system output sentences")
    p_eval.add_argument(
        "--refs", action="append", required=True, help="reference file (repeatable)"
    )
    p_eval.add_argument("--corpus", required=True, help="corpus text file or model cache")
    p_eval.add_argument("--phi", type=float, default=0.0)
    p_eval.set_defaults(func=_cmd_evaluate)

    p_serve = sub.add_parser(
        "serve", help="run the HTTP service (flags fall back to SIMPLEX_* env vars)"
    )
    p_serve.add_argument("--listen", default=None)
    p_serve.add_argument("--mode", choices=[m.value for m in Mode], default=None)
    p_serve.add_argument("--phi", type=float, default=None)
    _add_resource_flags(p_serve, required=False)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
