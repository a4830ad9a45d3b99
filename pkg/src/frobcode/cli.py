"""Command-line front end.

Subcommands: enumerate, construct, verify, decode-sim, density, tables.
Machine output is JSON (one document per code for the streaming
commands); --format text switches to an aligned human rendering.
Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .codegen import (
    ConstructionError,
    classify_length,
    enumerate_canonical,
    from_descriptor,
    from_labels,
)
from .stab import verify_code
from .decode import decode_simulation
from .survey import density, density_csv
from .tables import TABLES, diff_table, render_table


def _labels(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(tok) for tok in text.replace(",", " ").split()]


def _load_descriptor(path: str) -> dict:
    raw = sys.stdin.read() if path == "-" else Path(path).read_text("utf-8")
    return json.loads(raw)


def _emit(doc: dict, fmt: str, out) -> None:
    if fmt == "json":
        print(json.dumps(doc, sort_keys=True), file=out)
    else:
        for key in sorted(doc):
            print(f"{key}: {doc[key]}", file=out)


def _code_line(code) -> str:
    g = ",".join(map(str, code.g_labels)) or "-"
    h = ",".join(map(str, code.h_labels)) or "-"
    return f"{code.params_str}  d={code.d}  t={code.t}  g={g}  h={h}"


def _productive_ds(n: int, p: int) -> list[int]:
    c = classify_length(n, p)
    if not c.good:
        from .codegen import _require_compatible

        _require_compatible(n, p, 2)        # raises with the explanation
    t = c.t_min
    return [d for d in range(2, t + 1) if t % d == 0]


def _cmd_enumerate(args) -> int:
    ds = [args.d] if args.d is not None else _productive_ds(args.n, args.p)
    for d in ds:
        for code in enumerate_canonical(args.n, args.p, d):
            if args.format == "json":
                print(json.dumps(code.descriptor(), sort_keys=True))
            else:
                print(_code_line(code))
    return 0


def _cmd_construct(args) -> int:
    code = from_labels(args.n, args.p, args.d, _labels(args.g),
                       _labels(args.h), alpha=args.alpha)
    if args.format == "json":
        print(json.dumps(code.descriptor(), sort_keys=True))
    else:
        print(_code_line(code))
    return 0


def _cmd_verify(args) -> int:
    desc = _load_descriptor(args.descriptor)
    try:
        code = from_descriptor(desc)
    except ConstructionError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    report = verify_code(code, cap=args.cap)
    _emit(report, args.format, sys.stdout)
    return 0 if report["isotropy"] else 1


def _cmd_decode_sim(args) -> int:
    desc = _load_descriptor(args.descriptor)
    try:
        code = from_descriptor(desc)
    except ConstructionError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    report = decode_simulation(code, args.trials, args.weight, args.seed)
    report["params"] = list(code.params)
    _emit(report, args.format, sys.stdout)
    return 0 if report["failures"] == 0 else 1


def _cmd_density(args) -> int:
    p = args.p if args.p is not None else args.p_pos
    x = args.max if args.max is not None else args.max_pos
    if p is None or x is None:
        raise ValueError("density needs p and max (positionally or via "
                         "--p/--max)")
    checkpoints = _labels(args.checkpoints) if args.checkpoints else None
    report = density(p, x, checkpoints=checkpoints,
                     keep_detail=args.plot is not None)
    csv = density_csv(report)
    if args.out:
        Path(args.out).write_text(csv, "utf-8")
    else:
        sys.stdout.write(csv)
    if args.plot:
        from .plots import plot_density

        plot_density(report, args.plot)
    return 0


def _cmd_tables(args) -> int:
    which = args.which.lower()
    if which not in TABLES:
        raise ValueError(f"table must be one of I, II, III, got {args.which!r}")
    sys.stdout.write(render_table(which))
    mismatches = diff_table(which)
    if mismatches:
        for line in mismatches:
            print(f"golden mismatch: {line}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobcode",
        description="cyclic stabiliser codes of length dividing p^t+1")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(sp, default="json"):
        sp.add_argument("--format", choices=("json", "text"), default=default)

    sp = sub.add_parser("enumerate",
                        help="stream every canonical code for (p, n)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, default=None,
                    help="one Frobenius power; default sweeps every d "
                         "that can yield codes (divisors of the minimal "
                         "exponent)")
    fmt(sp)
    sp.set_defaults(func=_cmd_enumerate)

    sp = sub.add_parser("construct", help="build one code from its labels")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--g", default="", help="comma-separated coset labels")
    sp.add_argument("--h", default="", help="comma-separated coset labels")
    sp.add_argument("--alpha", type=int, default=None)
    fmt(sp)
    sp.set_defaults(func=_cmd_construct)

    sp = sub.add_parser("verify",
                        help="re-verify a descriptor (file or - for stdin)")
    sp.add_argument("descriptor")
    sp.add_argument("--cap", type=int, default=2 ** 26,
                    help="centraliser sweep ceiling")
    fmt(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("decode-sim",
                        help="seeded random-error round-trip batch")
    sp.add_argument("descriptor")
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--weight", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    fmt(sp)
    sp.set_defaults(func=_cmd_decode_sim)

    sp = sub.add_parser("density", help="good-length counting function CSV")
    sp.add_argument("p_pos", nargs="?", type=int, default=None, metavar="p")
    sp.add_argument("max_pos", nargs="?", type=int, default=None,
                    metavar="max")
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--max", type=int, default=None)
    sp.add_argument("--checkpoints", default=None,
                    help="comma-separated tally points")
    sp.add_argument("--out", default=None, help="write the CSV here")
    sp.add_argument("--plot", default=None,
                    help="also render the curves to this image path")
    sp.set_defaults(func=_cmd_density)

    sp = sub.add_parser("tables",
                        help="regenerate a published table and diff it "
                             "against the vendored golden copy")
    sp.add_argument("which", help="I, II or III")
    sp.set_defaults(func=_cmd_tables)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:       # includes IncompatibleParams
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConstructionError as exc:
        print(f"internal: {exc}", file=sys.stderr)
        return 3
    except RuntimeError as exc:
        print(f"internal: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
