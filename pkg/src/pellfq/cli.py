"""Command-line front end.

Subcommands: classify, count, enumerate, sample, verify, compress,
decompress, oracle.  Output is line-oriented JSON by default (one record
per line, streaming commands prefixed by a header record); enumerate and
sample also speak CSV.  Exit codes: 0 success, 1 malformed input or an
unsupported class, 2 a verification or comparison failure.

Field elements print as a single residue for prime fields and as a
comma-separated coefficient list "c0,c1,..." for extension fields, so
point coordinates are joined by "," for k = 1 and by ";" for k > 1.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
from typing import Optional, Sequence

from . import conic as _conic
from . import cubic as _cubic
from . import oracle as _oracle
from .field import Field

__all__ = ["main", "entrypoint"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="pellfq",
                     description="Pell conics and cubic Pell equations "
                                 "over finite fields")
    sub = parser.add_subparsers(dest="command", required=True)

    def field_args(sp):
        sp.add_argument("--p", type=int, required=True, help="characteristic")
        sp.add_argument("--k", type=int, default=1, help="extension degree")
        sp.add_argument("--modulus",
                        help="monic modulus as k+1 coefficients 'c0,...,1'")

    def curve_args(sp):
        grp = sp.add_mutually_exclusive_group(required=True)
        grp.add_argument("--conic", action="store_true",
                         help="the curve x^2 - d*y^2 = 1")
        grp.add_argument("--cubic", action="store_true",
                         help="the surface x^3 - 3r*xyz + r*y^3 + r^2*z^3 = 1")
        sp.add_argument("--d", help="conic parameter")
        sp.add_argument("--r", help="cubic parameter")

    sp = sub.add_parser("classify", help="cube class of r, its roots, s, omega")
    field_args(sp)
    sp.add_argument("--r", required=True)

    sp = sub.add_parser("count", help="closed-form group order")
    field_args(sp)
    curve_args(sp)

    sp = sub.add_parser("enumerate", help="stream every solution")
    field_args(sp)
    curve_args(sp)
    sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = sub.add_parser("sample", help="reproducible random solutions")
    field_args(sp)
    curve_args(sp)
    sp.add_argument("--n", type=int, default=1, help="number of samples")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = sub.add_parser("verify", help="check a point solves the equation")
    field_args(sp)
    curve_args(sp)
    sp.add_argument("--point", required=True)

    sp = sub.add_parser("compress", help="store a solution as its class")
    field_args(sp)
    curve_args(sp)
    sp.add_argument("--point", required=True)

    sp = sub.add_parser("decompress", help="recover the solution of a class")
    field_args(sp)
    curve_args(sp)
    sp.add_argument("--class", dest="cls", required=True)

    sp = sub.add_parser("oracle", help="brute force vs enumeration, PASS/FAIL")
    field_args(sp)
    curve_args(sp)
    return parser


# ---------------------------------------------------------------------------
# shared plumbing


def _make_field(args) -> Field:
    modulus = None
    if args.modulus is not None:
        try:
            modulus = [int(c) for c in args.modulus.split(",")]
        except ValueError:
            raise ValueError(f"invalid modulus {args.modulus!r}") from None
    return Field(args.p, args.k, modulus)


def _make_params(field: Field, args):
    if args.conic:
        if args.d is None:
            raise ValueError("--conic requires --d")
        return _conic.conic_params(field, field.parse_element(args.d))
    if args.r is None:
        raise ValueError("--cubic requires --r")
    return _cubic.cubic_params(field, field.parse_element(args.r))


def _parse_coords(field: Field, text: str, arity: int, what: str) -> tuple:
    sep = "," if field.k == 1 else ";"
    parts = text.split(sep)
    if len(parts) != arity:
        raise ValueError(f"{what} needs {arity} coordinates separated by "
                         f"{sep!r}, got {text!r}")
    return tuple(field.parse_element(s) for s in parts)


def _fmt(field: Field, a: int) -> str:
    return field.format_element(a)


def _emit(out, record: dict) -> None:
    out.write(json.dumps(record, separators=(",", ":")) + "\n")


def _field_header(field: Field) -> dict:
    rec = {"p": field.p, "k": field.k, "q": field.q}
    if field.k > 1:
        rec["modulus"] = field.format_modulus()
    return rec


def _params_header(params) -> dict:
    field = params.field
    rec = {"type": "header", "curve": None}
    rec.update(_field_header(field))
    if isinstance(params, _conic.ConicParams):
        rec["curve"] = "conic"
        rec["d"] = _fmt(field, params.d)
        rec["square"] = params.sqrt_d is not None
        rec["sqrt_d"] = None if params.sqrt_d is None else _fmt(field, params.sqrt_d)
        rec["count"] = _conic.conic_order(params)
    else:
        rec["curve"] = "cubic"
        rec["r"] = _fmt(field, params.r)
        rec["class"] = params.cube.kind.value
        rec["s"] = None if params.s is None else _fmt(field, params.s)
        rec["omega"] = None if field.omega is None else _fmt(field, field.omega)
        rec["count"] = _cubic.cubic_order(params).order
    return rec


def _point_record(field: Field, pt) -> dict:
    if len(pt) == 2:
        return {"x": _fmt(field, pt[0]), "y": _fmt(field, pt[1])}
    return {"x": _fmt(field, pt[0]), "y": _fmt(field, pt[1]),
            "z": _fmt(field, pt[2])}


def _class_record(field: Field, cls) -> dict:
    if len(cls) == 2:
        return {"m": _fmt(field, cls[0]), "n": _fmt(field, cls[1])}
    return {"l": _fmt(field, cls[0]), "m": _fmt(field, cls[1]),
            "n": _fmt(field, cls[2])}


def _stream_points(out, fmt: str, params, points) -> None:
    field = params.field
    header = _params_header(params)
    if fmt == "csv":
        pairs = " ".join(f"{k}={v}" for k, v in header.items() if k != "type")
        out.write(f"# {pairs}\n")
        writer = csv.writer(out, lineterminator="\n")
        arity = 2 if isinstance(params, _conic.ConicParams) else 3
        writer.writerow(["x", "y", "z"][:arity])
        for pt in points:
            writer.writerow([_fmt(field, c) for c in pt])
    else:
        _emit(out, header)
        for pt in points:
            _emit(out, _point_record(field, pt))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_classify(args, out) -> int:
    field = _make_field(args)
    r = field.parse_element(args.r)
    cls = field.classify_cube(r)
    rec = {"type": "classification"}
    rec.update(_field_header(field))
    rec["r"] = _fmt(field, r)
    rec["class"] = cls.kind.value
    rec["roots"] = [_fmt(field, s) for s in cls.roots]
    rec["s"] = _fmt(field, cls.roots[0]) if cls.roots else None
    rec["omega"] = None if field.omega is None else _fmt(field, field.omega)
    _emit(out, rec)
    return EXIT_OK


def _cmd_count(args, out) -> int:
    params = _make_params(_make_field(args), args)
    rec = _params_header(params)
    rec["type"] = "count"
    rec["order"] = rec.pop("count")
    if isinstance(params, _cubic.CubicParams):
        rec["structure"] = _cubic.cubic_order(params).structure
    _emit(out, rec)
    return EXIT_OK


def _cmd_enumerate(args, out) -> int:
    params = _make_params(_make_field(args), args)
    if isinstance(params, _conic.ConicParams):
        points = _conic.conic_enumerate_solutions(params)
    else:
        points = _cubic.cubic_enumerate_solutions(params)
    _stream_points(out, args.format, params, points)
    return EXIT_OK


def _sample_conic(params, rng: random.Random):
    """Uniform over classes: reject the zero-norm m among q+1 candidates."""
    q = params.field.q
    while True:
        i = rng.randrange(q + 1)
        cand = _conic.ProjPoint2(1, 0) if i == q else _conic.ProjPoint2(i, 1)
        if _conic.conic_norm(params, *cand) != 0:
            return _conic.phi(params, cand)


def _cmd_sample(args, out) -> int:
    if args.n < 0:
        raise ValueError("--n must be nonnegative")
    params = _make_params(_make_field(args), args)
    rng = random.Random(args.seed)
    if isinstance(params, _conic.ConicParams):
        points = (_sample_conic(params, rng) for _ in range(args.n))
    else:
        points = (_cubic.cubic_sample(params, rng) for _ in range(args.n))
    _stream_points(out, args.format, params, points)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    params = _make_params(_make_field(args), args)
    field = params.field
    if isinstance(params, _conic.ConicParams):
        pt = _parse_coords(field, args.point, 2, "--point")
        ok = _conic.conic_contains(params, *pt)
    else:
        pt = _parse_coords(field, args.point, 3, "--point")
        ok = _cubic.cubic_contains(params, *pt)
    _emit(out, {"type": "verify", "point": _point_record(field, pt),
                "valid": ok})
    return EXIT_OK if ok else EXIT_FAILURE


def _cmd_compress(args, out) -> int:
    params = _make_params(_make_field(args), args)
    field = params.field
    if isinstance(params, _conic.ConicParams):
        pt = _conic.ConicPoint(*_parse_coords(field, args.point, 2, "--point"))
        if not _conic.conic_contains(params, *pt):
            _emit(out, {"type": "error", "reason": "point is not on the curve"})
            return EXIT_FAILURE
        cls = _conic.phi_inv(params, pt)
    else:
        pt = _cubic.CubicPoint(*_parse_coords(field, args.point, 3, "--point"))
        if not _cubic.cubic_contains(params, *pt):
            _emit(out, {"type": "error", "reason": "point is not on the curve"})
            return EXIT_FAILURE
        cls = _cubic.cubic_compress(params, pt)
    _emit(out, _params_header(params))
    _emit(out, _class_record(field, cls))
    return EXIT_OK


def _cmd_decompress(args, out) -> int:
    params = _make_params(_make_field(args), args)
    field = params.field
    if isinstance(params, _conic.ConicParams):
        raw = _parse_coords(field, args.cls, 2, "--class")
        if _conic.conic_norm(params, *raw) == 0 or raw == (0, 0):
            _emit(out, {"type": "error", "reason": "class has zero norm"})
            return EXIT_FAILURE
        pt = _conic.phi(params, _conic.ProjPoint2(*raw))
    else:
        raw = _parse_coords(field, args.cls, 3, "--class")
        if _cubic.cubic_norm(params, *raw) == 0 or raw == (0, 0, 0):
            _emit(out, {"type": "error", "reason": "class has zero norm"})
            return EXIT_FAILURE
        pt = _cubic.psi(params, _cubic.ProjPoint3(*raw))
    _emit(out, _params_header(params))
    _emit(out, _point_record(field, pt))
    return EXIT_OK


def _cmd_oracle(args, out) -> int:
    params = _make_params(_make_field(args), args)
    field = params.field
    if isinstance(params, _conic.ConicParams):
        truth = _oracle.brute_force_conic(field, params.d).points
        produced = set(_conic.conic_enumerate_solutions(params))
        expected = _conic.conic_order(params)
    else:
        truth = _oracle.brute_force_cubic(field, params.r).points
        produced = set(_cubic.cubic_enumerate_solutions(params))
        expected = _cubic.cubic_order(params).order
    missing = sorted(truth - produced)
    extra = sorted(produced - truth)
    ok = not missing and not extra and len(produced) == expected
    rec = _params_header(params)
    rec["type"] = "oracle"
    rec["status"] = "PASS" if ok else "FAIL"
    rec["brute_force"] = len(truth)
    rec["enumerated"] = len(produced)
    rec["expected"] = expected
    if not ok:
        rec["missing"] = [_point_record(field, pt) for pt in missing[:5]]
        rec["extra"] = [_point_record(field, pt) for pt in extra[:5]]
    _emit(out, rec)
    return EXIT_OK if ok else EXIT_FAILURE


_COMMANDS = {
    "classify": _cmd_classify,
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "sample": _cmd_sample,
    "verify": _cmd_verify,
    "compress": _cmd_compress,
    "decompress": _cmd_decompress,
    "oracle": _cmd_oracle,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    args = _build_parser().parse_args(argv)
    out = out if out is not None else sys.stdout
    try:
        return _COMMANDS[args.command](args, out)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"pellfq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream closed the stream (e.g. piping into head)
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = EXIT_OK
    raise SystemExit(code)
