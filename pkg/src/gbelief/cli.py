"""Command-line interface.

Exit codes: 0 success, 1 I/O or parse failure, 2 validation or semantic
failure, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import sys

from . import documents, errors
from .cbba import build_cbba, random_cbba, validate
from .classical import classical_bel, classical_pl
from .frame import Frame, powerset
from .transforms import TableKind, gbel, gpl, mobius_invert, tables
from .validation import DEFAULT_TOLERANCE

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_LIMIT = 0, 1, 2, 3
DEGENERATION_TOL = 1e-12


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _tolerance(args, doc: documents.CbbaDocument) -> float:
    if args.tolerance is not None:
        return args.tolerance
    if doc.tolerance is not None:
        return doc.tolerance
    return DEFAULT_TOLERANCE


def _load(args):
    doc = documents.load_cbba_document(args.file)
    return build_cbba(doc.frame, doc.entries, _tolerance(args, doc))


def _describe(frame: Frame, where) -> str:
    if where is None:
        return "global"
    return "{" + ",".join(frame.labels_of(where)) + "}"


def cmd_validate(args) -> int:
    doc = documents.load_cbba_document(args.file)
    report = validate(doc.frame, doc.entries, _tolerance(args, doc))
    if report.ok:
        print("ok")
        return EXIT_OK
    for v in report.violations:
        print(f"{v.condition}\t{_describe(doc.frame, v.where)}\t{v.value}", file=sys.stderr)
    return EXIT_INVALID


def cmd_query(args) -> int:
    cbba = _load(args)
    a = documents.parse_set_argument(cbba.frame, args.set)
    if args.kind == "bel":
        value = gbel(cbba, a)
    elif args.kind == "pl":
        value = gpl(cbba, a)
    else:
        value = cbba.commitment(a)
    print(f"{value:.12f}")
    return EXIT_OK


def cmd_table(args) -> int:
    cbba = _load(args)
    com, bel, pl = tables(cbba)
    _write(args.out, documents.render_table(args.format, com=com, bel=bel, pl=pl))
    return EXIT_OK


def cmd_invert(args) -> int:
    text = _read(args.table)
    bel = documents.parse_table(text, "bel", TableKind.BELIEF)
    bel.check(unity_tol=args.tolerance or DEFAULT_TOLERANCE)
    com = mobius_invert(bel)
    # a non-monotone input inverts to negative commitments
    com.check(slack=args.tolerance or DEFAULT_TOLERANCE)
    fmt = args.format or documents.detect_format(text)
    _write(args.out, documents.render_table(fmt, com=com))
    return EXIT_OK


def cmd_random(args) -> int:
    frame = Frame.of_size(args.frame_size)
    cbba = random_cbba(frame, args.focals, args.seed)
    _write(args.out, documents.dump_cbba_document(cbba, form=args.form))
    return EXIT_OK


def cmd_degenerate(args) -> int:
    cbba = _load(args)
    bba = cbba.to_classical()
    _, bel, pl = tables(cbba)
    bel_diff = pl_diff = 0.0
    for a in powerset(cbba.frame):
        bel_diff = max(bel_diff, abs(bel.values[a.bits] - classical_bel(bba, a)))
        pl_diff = max(pl_diff, abs(pl.values[a.bits] - classical_pl(bba, a)))
    print(f"bel_max_abs_diff {bel_diff:.6g}")
    print(f"pl_max_abs_diff {pl_diff:.6g}")
    ok = bel_diff <= DEGENERATION_TOL and pl_diff <= DEGENERATION_TOL
    return EXIT_OK if ok else EXIT_INVALID


def _positive(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gbelief", description="Generalized belief functions over complex basic belief assignments."
    )
    parser.add_argument("--tolerance", type=_positive, default=None,
                        help="tolerance for the sum and magnitude conditions (default 1e-9)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a CBBA document")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("query", help="belief, plausibility or commitment of one proposition")
    p.add_argument("file")
    p.add_argument("--kind", choices=["bel", "pl", "com"], required=True)
    p.add_argument("--set", required=True, help="comma-separated labels; empty for the empty set")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("table", help="write com, bel and pl for every proposition")
    p.add_argument("file")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("invert", help="recover commitments from the bel column of a table")
    p.add_argument("table")
    p.add_argument("--format", choices=["csv", "json"], default=None,
                   help="output format (default: same as input)")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("random", help="generate a seeded random CBBA document")
    p.add_argument("--frame-size", type=int, required=True)
    p.add_argument("--focals", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--form", choices=["rectangular", "polar"], default="rectangular")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("degenerate", help="compare with classical Bel/Pl for a real-valued document")
    p.add_argument("file")
    p.set_defaults(func=cmd_degenerate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except errors.FrameTooLarge as exc:
        code, message = EXIT_LIMIT, f"FrameTooLarge: {exc}"
    except (OSError, errors.DocumentError, errors.UnknownLabel) as exc:
        code, message = EXIT_IO, f"{type(exc).__name__}: {exc}"
    except errors.BeliefError as exc:
        code, message = EXIT_INVALID, f"{type(exc).__name__}: {exc}"
    print(message, file=sys.stderr)
    return code
