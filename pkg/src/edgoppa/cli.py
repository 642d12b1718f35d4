"""Command-line front end.

Subcommands mirror the library layers: field info, curve points/add,
map alpha/beta (the two directions of the birational correspondence),
rrbasis, and code build/encode/syndrome/distance.  Output is plain text
by default or JSON with --format json (default via EDGOPPA_FORMAT);
artifacts written by `code build --format json` feed straight back into
the code subcommands via --artifact.

Exit status: 0 on success, 1 on domain errors (the message names the
error class), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Optional, Sequence

from .birational import canonical_pair, to_edwards, to_weierstrass
from .curves import (
    EdwardsCurve,
    format_point,
    parse_edwards_point,
    parse_weierstrass_point,
)
from .errors import EdwardsGoppaError
from .fields import GF
from .goppa import (
    build_code,
    code_from_json,
    code_to_json,
    encode,
    min_distance,
    syndrome,
)
from .riemann_roch import (
    evaluate_basis,
    format_divisor,
    formula_text,
    parse_divisor,
    reduce_divisor,
    riemann_roch_basis,
)

_POINT_RE = re.compile(r"\(\s*-?\d+\s*,\s*-?\d+\s*\)")


# ---------------------------------------------------------------------------
# argument helpers


def _add_field_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    p.add_argument("--t", type=int, default=1, help="extension degree (default 1)")
    p.add_argument(
        "--modulus",
        default=None,
        help="comma-separated modulus coefficients, constant term first",
    )


def _add_format_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--format",
        choices=["text", "json"],
        default=os.environ.get("EDGOPPA_FORMAT", "text"),
        help="output format (env EDGOPPA_FORMAT sets the default)",
    )


def _field_from(args) -> GF:
    modulus = None
    if args.modulus:
        modulus = [int(c) for c in args.modulus.split(",")]
    return GF(args.p, args.t, modulus)


def _curve_from(args) -> EdwardsCurve:
    return EdwardsCurve(_field_from(args), args.d)


def _parse_vector(text: str) -> list[int]:
    parts = [chunk for chunk in re.split(r"[,\s]+", text.strip()) if chunk]
    return [int(v) for v in parts]


def _parse_point_list(text: str, curve: EdwardsCurve):
    found = _POINT_RE.findall(text)
    if not found:
        raise ValueError(f"no points found in {text!r}")
    return [parse_edwards_point(tok, curve) for tok in found]


def _load_artifact(path: str):
    if path == "-":
        return code_from_json(json.load(sys.stdin))
    with open(path, encoding="utf-8") as fh:
        return code_from_json(json.load(fh))


def _emit_json(data) -> None:
    print(json.dumps(data, indent=2))


def _matrix_lines(rows: list[list[int]]) -> list[str]:
    width = max((len(str(v)) for row in rows for v in row), default=1)
    return [" ".join(str(v).rjust(width) for v in row) for row in rows]


# ---------------------------------------------------------------------------
# subcommand implementations


def cmd_field_info(args) -> int:
    field = _field_from(args)
    if args.format == "json":
        data = field.to_json()
        data["q"] = field.q
        _emit_json(data)
    else:
        print(f"GF({field.p}^{field.t})" if field.t > 1 else f"GF({field.p})")
        print(f"p = {field.p}")
        print(f"t = {field.t}")
        print(f"q = {field.q}")
        print(f"modulus = {list(field.modulus)}")
    return 0


def cmd_curve_points(args) -> int:
    curve = _curve_from(args)
    points = curve.affine_points()
    if args.format == "json":
        _emit_json(
            {
                "curve": curve.to_json(),
                "count": len(points),
                "points": [format_point(P) for P in points],
            }
        )
    else:
        for P in points:
            print(format_point(P))
        print(f"count = {len(points)}")
    return 0


def cmd_curve_add(args) -> int:
    curve = _curve_from(args)
    P = parse_edwards_point(args.P, curve)
    Q = parse_edwards_point(args.Q, curve)
    S = curve.add(P, Q)
    if args.format == "json":
        _emit_json({"sum": format_point(S)})
    else:
        print(format_point(S))
    return 0


def cmd_map(args) -> int:
    curve = _curve_from(args)
    pair = canonical_pair(curve)
    if args.direction == "alpha":
        P = parse_edwards_point(args.point, curve)
        image = format_point(to_weierstrass(pair, P))
    else:
        Q = parse_weierstrass_point(args.point, pair.weierstrass)
        image = format_point(to_edwards(pair, Q))
    if args.format == "json":
        _emit_json(
            {
                "weierstrass": pair.weierstrass.to_json(),
                "base_point": format_point(pair.weierstrass.point(pair.x1, pair.y1)),
                "point": args.point.strip(),
                "image": image,
            }
        )
    else:
        print(image)
    return 0


def cmd_rrbasis(args) -> int:
    curve = _curve_from(args)
    D = parse_divisor(args.divisor, curve)
    P, k = reduce_divisor(curve, D)
    basis = riemann_roch_basis(curve, P, k)
    if args.format == "json":
        data = {
            "divisor": format_divisor(D),
            "reduced_point": format_point(P),
            "k": k,
            "dimension": len(basis),
            "basis": [formula_text(fn) for fn in basis],
        }
        if args.at:
            Q = parse_edwards_point(args.at, curve)
            data["values_at"] = [v.to_int() for v in evaluate_basis(curve, basis, Q)]
        _emit_json(data)
    else:
        print(f"divisor: {format_divisor(D)}")
        print(f"reduced: {format_point(P)} + {k}O")
        print(f"dimension = {len(basis)}")
        for fn in basis:
            print(formula_text(fn))
        if args.at:
            Q = parse_edwards_point(args.at, curve)
            values = evaluate_basis(curve, basis, Q)
            print(f"values at {args.at.strip()}: " + ",".join(str(v) for v in values))
    return 0


def cmd_code_build(args) -> int:
    curve = _curve_from(args)
    D = parse_divisor(args.divisor, curve)
    if (args.points is None) == (args.n is None):
        raise ValueError("pass exactly one of --points or --n")
    if args.points is not None:
        code = build_code(curve, D, points=_parse_point_list(args.points, curve))
    else:
        code = build_code(curve, D, count=args.n)
    if args.with_distance:
        code.d_exact = min_distance(code, budget=args.budget)
    data = code_to_json(code)
    if args.format == "json":
        _emit_json(data)
        return 0
    print(f"[n, k] = [{code.n}, {code.k}] over GF({code.field.q})")
    print(f"divisor: {format_divisor(code.divisor)}")
    print("points: " + " ".join(format_point(P) for P in code.points))
    print("G =")
    for line in _matrix_lines(data["G"]):
        print(line)
    print(f"perm = {data['perm']}")
    print("G_std =")
    for line in _matrix_lines(data["G_std"]):
        print(line)
    print("H =")
    for line in _matrix_lines(data["H"]):
        print(line)
    print(f"d_designed = {code.d_designed}")
    if code.d_exact is not None:
        print(f"d_exact = {code.d_exact}")
    return 0


def cmd_code_encode(args) -> int:
    code = _load_artifact(args.artifact)
    word = encode(code, _parse_vector(args.message))
    if args.format == "json":
        _emit_json({"codeword": [v.to_int() for v in word]})
    else:
        print(",".join(str(v) for v in word))
    return 0


def cmd_code_syndrome(args) -> int:
    code = _load_artifact(args.artifact)
    s = syndrome(code, _parse_vector(args.word))
    is_codeword = all(v.is_zero() for v in s)
    if args.format == "json":
        _emit_json(
            {
                "syndrome": [v.to_int() for v in s],
                "perm": list(code.perm),
                "is_codeword": is_codeword,
            }
        )
    else:
        print("syndrome = " + ",".join(str(v) for v in s))
        print(f"perm = {list(code.perm)}")
        print(f"codeword = {'true' if is_codeword else 'false'}")
    return 0


def cmd_code_distance(args) -> int:
    code = _load_artifact(args.artifact)
    exact = min_distance(code, budget=args.budget)
    mds = exact == code.n - code.k + 1
    if args.format == "json":
        _emit_json({"d_designed": code.d_designed, "d_exact": exact, "mds": mds})
    else:
        print(f"d_designed={code.d_designed} d_exact={exact} MDS={'true' if mds else 'false'}")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgoppa",
        description="Goppa codes from Edwards curves over GF(p^t).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    field = sub.add_parser("field", help="finite field utilities")
    field_sub = field.add_subparsers(dest="subcommand", required=True)
    info = field_sub.add_parser("info", help="describe GF(p^t)")
    _add_field_args(info)
    _add_format_arg(info)
    info.set_defaults(func=cmd_field_info)

    curve = sub.add_parser("curve", help="Edwards curve utilities")
    curve_sub = curve.add_subparsers(dest="subcommand", required=True)
    points = curve_sub.add_parser("points", help="list all affine points")
    _add_field_args(points)
    points.add_argument("--d", type=int, required=True, help="Edwards coefficient")
    _add_format_arg(points)
    points.set_defaults(func=cmd_curve_points)
    add = curve_sub.add_parser("add", help="add two points with the group law")
    _add_field_args(add)
    add.add_argument("--d", type=int, required=True)
    add.add_argument("--P", required=True, help='first point, e.g. "(5,8)"')
    add.add_argument("--Q", required=True, help="second point")
    _add_format_arg(add)
    add.set_defaults(func=cmd_curve_add)

    mp = sub.add_parser("map", help="move points between the curve models")
    map_sub = mp.add_subparsers(dest="direction", required=True)
    for direction, blurb in (
        ("alpha", "Edwards -> Weierstrass"),
        ("beta", "Weierstrass -> Edwards"),
    ):
        leg = map_sub.add_parser(direction, help=blurb)
        _add_field_args(leg)
        leg.add_argument("--d", type=int, required=True)
        leg.add_argument("--point", required=True, help='"(x,y)", "Omega", "Omega1", "Omega2"')
        _add_format_arg(leg)
        leg.set_defaults(func=cmd_map, direction=direction)

    rr = sub.add_parser("rrbasis", help="basis of the function space of a divisor")
    _add_field_args(rr)
    rr.add_argument("--d", type=int, required=True)
    rr.add_argument("--divisor", required=True, help='e.g. "(2,15) + 4O"')
    rr.add_argument("--at", default=None, help="also evaluate the basis at this point")
    _add_format_arg(rr)
    rr.set_defaults(func=cmd_rrbasis)

    code = sub.add_parser("code", help="Goppa code construction and use")
    code_sub = code.add_subparsers(dest="subcommand", required=True)

    build = code_sub.add_parser("build", help="construct generator and parity-check matrices")
    _add_field_args(build)
    build.add_argument("--d", type=int, required=True)
    build.add_argument("--divisor", required=True)
    build.add_argument("--points", default=None, help='explicit list "(5,8),(5,9),..."')
    build.add_argument("--n", type=int, default=None, help="take the first n usable points")
    build.add_argument(
        "--with-distance", action="store_true", help="also run the exact distance search"
    )
    build.add_argument("--budget", type=int, default=2_000_000)
    _add_format_arg(build)
    build.set_defaults(func=cmd_code_build)

    enc = code_sub.add_parser("encode", help="multiply a message by the generator")
    enc.add_argument("--artifact", required=True, help="code JSON from `code build` ('-' = stdin)")
    enc.add_argument("--message", required=True, help='k symbols, e.g. "1,0,2,0,1"')
    _add_format_arg(enc)
    enc.set_defaults(func=cmd_code_encode)

    syn = code_sub.add_parser("syndrome", help="parity-check a word")
    syn.add_argument("--artifact", required=True)
    syn.add_argument("--word", required=True, help="n symbols in point order")
    _add_format_arg(syn)
    syn.set_defaults(func=cmd_code_syndrome)

    dist = code_sub.add_parser("distance", help="exact minimum distance by enumeration")
    dist.add_argument("--artifact", required=True)
    dist.add_argument("--budget", type=int, default=2_000_000)
    _add_format_arg(dist)
    dist.set_defaults(func=cmd_code_distance)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (EdwardsGoppaError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
