"""Command-line interface.

Exit codes: 0 success, 2 usage or parse error, 3 validation failure,
4 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braids import braided_dim, parse_braid, torus_braid
from .checks import SUITES, run_suite
from .double import build_double
from .errors import (
    EnumerationTooLarge,
    HopfBraidError,
    InvalidAlgebra,
    ParseError,
    ResourceLimitExceeded,
    SchemaError,
)
from .hopf import integrals, semisimplicity_predicates, trace_s_squared, validate_hopf
from .jsonio import algebra_to_json, load_algebra
from .modules import canonical_module, dual_schrodinger, schrodinger
from .oracle import fy_fixed_points
from .zoo import algebra_from_spec, make_group

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_RESOURCE = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def resolve(spec):
    """Algebra from a spec string; file specs are validated before use."""
    try:
        if spec.startswith("file:"):
            A = load_algebra(spec[5:])
        else:
            return algebra_from_spec(spec)
    except SchemaError as exc:
        raise CliError(EXIT_USAGE, f"schema error at {exc}") from exc
    except OSError as exc:
        raise CliError(EXIT_USAGE, f"cannot read {spec[5:]}: {exc.strerror}") from exc
    except InvalidAlgebra as exc:
        raise CliError(EXIT_INVALID, str(exc)) from exc
    except HopfBraidError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from exc
    report = validate_hopf(A)
    if not report.ok:
        raise CliError(EXIT_INVALID, "validation failed\n" + "\n".join(str(r) for r in report.failures()))
    return A


def _fmt(A, x):
    return A.field.format(x)


def _vec_text(A, vec, suffix=""):
    return {A.labels[i] + suffix: _fmt(A, c) for i, c in sorted(vec.items())}


def cmd_describe(args, out):
    A = resolve(args.spec)
    data = integrals(A)
    pred = semisimplicity_predicates(A, data)
    report = {
        "name": A.name,
        "field": A.field.descriptor(),
        "dim": A.dim,
        "basis": list(A.labels),
        "TrS2": _fmt(A, trace_s_squared(A)),
        "leftIntegral": _vec_text(A, data.left_integral),
        "rightDualIntegral": _vec_text(A, data.right_dual_integral, "*"),
        "alpha": [_fmt(A, c) for c in data.alpha],
        "g": _vec_text(A, data.g),
        "normalized": data.normalized,
        "unimodular": pred.unimodular,
        "semisimple": pred.semisimple,
        "cosemisimple": pred.cosemisimple,
        "doubleDim": A.dim ** 2,
    }
    if args.json:
        out.write(json.dumps(report, indent=1) + "\n")
        return EXIT_OK
    width = max(len(k) for k in report)
    for k, v in report.items():
        if isinstance(v, bool):
            v = str(v).lower()
        elif isinstance(v, (dict, list)):
            v = json.dumps(v)
        out.write(f"{k.ljust(width)}  {v}\n")
    return EXIT_OK


def _module(Q, which):
    if which == "schrodinger":
        return schrodinger(Q)
    if which == "dual-schrodinger":
        return dual_schrodinger(Q)
    return canonical_module(Q.H, "regular")


def cmd_bdim(args, out):
    A = resolve(args.spec)
    try:
        word = torus_braid(*args.torus) if args.torus else parse_braid(args.braid)
    except HopfBraidError as exc:
        raise CliError(EXIT_USAGE, f"bad braid: {exc}") from exc
    Q = build_double(A)
    M = _module(Q, args.module)
    orientation = "reversed" if args.reversed else "standard"
    value = braided_dim(Q, M, word, args.side, orientation)
    text = _fmt(A, value)
    if args.json:
        out.write(json.dumps({
            "algebra": A.name,
            "module": args.module,
            "braid": str(word),
            "side": args.side,
            "orientation": orientation,
            "value": text,
        }) + "\n")
    else:
        out.write(text + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    results = run_suite(args.suite)
    for r in results:
        out.write(r.line() + "\n")
    failed = [r for r in results if not r.ok]
    out.write(f"{len(results) - len(failed)}/{len(results)} checks passed\n")
    return EXIT_INVALID if failed else EXIT_OK


def cmd_oracle(args, out):
    try:
        G = make_group(args.group)
        word = parse_braid(args.braid)
    except HopfBraidError as exc:
        raise CliError(EXIT_USAGE, str(exc)) from exc
    out.write(f"{fy_fixed_points(G, word)}\n")
    return EXIT_OK


def cmd_export(args, out):
    A = resolve(args.spec)
    text = json.dumps(algebra_to_json(A), indent=1) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError(EXIT_USAGE, f"{self.prog}: {message}")


def build_parser():
    p = _Parser(prog="hopfbraid", description="Drinfeld doubles, Schroedinger modules and braided dimensions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    spec_help = "group:<G>, dualgroup:<G>, sweedler, taft:<n> or file:<path>"

    d = sub.add_parser("describe", help="structure data of a Hopf algebra")
    d.add_argument("spec", help=spec_help)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_describe)

    b = sub.add_parser("bdim", help="braided dimension of a module over the double")
    b.add_argument("spec", help=spec_help)
    b.add_argument("--module", choices=("schrodinger", "dual-schrodinger", "regular"), default="schrodinger")
    g = b.add_mutually_exclusive_group(required=True)
    g.add_argument("--braid", help='braid word such as "3: 1 -2"')
    g.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"))
    b.add_argument("--side", choices=("left", "right"), default="left")
    b.add_argument("--reversed", action="store_true", help="use the reversed braiding")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bdim)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="Freyd-Yetter fixed-point count")
    o.add_argument("--group", required=True)
    o.add_argument("--braid", required=True)
    o.set_defaults(func=cmd_oracle)

    e = sub.add_parser("export", help="write the JSON structure constants of an algebra")
    e.add_argument("spec", help=spec_help)
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_export)
    return p


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except CliError as exc:
        err.write(f"error: {exc}\n")
        return exc.code
    except (ResourceLimitExceeded, EnumerationTooLarge) as exc:
        err.write(f"error: resource limit: {exc}\n")
        return EXIT_RESOURCE
    except (ParseError, SchemaError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except InvalidAlgebra as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except HopfBraidError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
