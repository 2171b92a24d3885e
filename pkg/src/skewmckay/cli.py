"""Command-line interface.

Exit codes: 0 success, 2 invalid input, 3 verification failure, 4 I/O.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import (
    BadVectorLength,
    GoldenMismatch,
    GroupTooLarge,
    IndexOutOfRange,
    IoError,
    NotSpecialLinear,
    SchemaError,
    ZeroModulus,
)
from .report import (
    EXIT_BAD_INPUT,
    EXIT_IO,
    EXIT_OK,
    EXIT_VERIFICATION,
    RunConfig,
    render_report,
    run_command,
)

_INPUT_ERRORS = (
    SchemaError,
    NotSpecialLinear,
    BadVectorLength,
    ZeroModulus,
    GroupTooLarge,
    IndexOutOfRange,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewmckay",
        description=(
            "McKay quivers, invariant rings and exact resolution checks for "
            "finite abelian diagonal subgroups of SL(n)"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, needs_input: bool = True) -> None:
        if needs_input:
            p.add_argument("--input", "-i", required=True, help="group spec JSON file")
        p.add_argument("--max-degree", type=int, default=6, dest="max_degree")
        p.add_argument(
            "--shift-convention",
            choices=("theorem", "ambient"),
            default="theorem",
            dest="shift_convention",
        )
        p.add_argument("--format", choices=("json", "dot"), default="json", dest="fmt")
        p.add_argument("--output", "-o", dest="output_path")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--corpus-size", type=int, default=50, dest="corpus_size")

    for name in ("info", "invariants", "gtilde", "generators", "resolve", "verify"):
        common(sub.add_parser(name))
    quiver = sub.add_parser("quiver")
    quiver.add_argument(
        "variant", nargs="?", choices=("full", "bar", "tilde"), default="full"
    )
    common(quiver)
    golden = sub.add_parser("golden")
    golden.add_argument("--corpus-dir", dest="corpus_dir")
    common(golden, needs_input=False)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        variant=getattr(args, "variant", "full"),
        max_degree=args.max_degree,
        shift_convention=args.shift_convention,
        fmt=args.fmt,
        output_path=args.output_path,
        seed=args.seed,
        corpus_size=args.corpus_size,
        corpus_dir=getattr(args, "corpus_dir", None),
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = config_from_args(args)
    try:
        artifact, code = run_command(cfg)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except GoldenMismatch as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except IoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    text = render_report(artifact)
    if cfg.output_path:
        try:
            Path(cfg.output_path).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write {cfg.output_path}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
