"""Divisors on Edwards curves and bases of their function spaces.

A divisor of degree k+1 with support away from the two singular points
is linearly equivalent to P + k*O, where O = (0,1) and P is the group
sum of the divisor's terms.  For that reduced shape the space of
rational functions f with div(f) + D >= 0 has dimension k+1 and an
explicit basis, represented here by small symbolic variants (affine
formulas, Z = 1):

    One             1
    InvX            1/x                       first step when P = (0,-1)
    AxisPole(+1)    (x+1)(y+1)/(x*y)          first step when P = (1,0)
    AxisPole(-1)    (x-1)(y+1)/(x*y)          first step when P = (-1,0)
    PointPole(a,b)  (y+b)*x/((x-a)*(y-1))     first step for generic P
    Ladder(h,even)  1/(y-1)^h                 index 2h
    Ladder(h,odd)   (y+1)/(x*(y-1)^h)         index 2h+1

Ladder values obey two product recurrences: each even value is the
previous even value times 1/(y-1), and each odd value is the matching
even value times (y+1)/x.  evaluate_basis exploits this so that every
ladder entry beyond the first costs one field multiplication.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .curves import (
    EdwardsCurve,
    EdwardsPoint,
    EdwardsPointLike,
    SingularPoint,
    parse_edwards_point,
)
from .errors import (
    IncompleteCurveError,
    IndeterminateError,
    PointNotOnCurveError,
    SingularPointError,
)
from .fields import FieldElement


# ---------------------------------------------------------------------------
# Divisors


class Divisor:
    """Finite formal integer combination of curve points.

    Terms are kept normalized: zero multiplicities dropped, points
    deduplicated, and iteration order fixed by the coordinate encodings
    (singular points, when present, sort last).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict):
        self._terms = dict(sorted(terms.items(), key=_point_sort_key))

    @property
    def degree(self) -> int:
        return sum(self._terms.values())

    def support(self) -> list:
        return list(self._terms.keys())

    def multiplicity(self, point) -> int:
        return self._terms.get(point, 0)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"Divisor({format_divisor(self)!r})"


def _point_sort_key(item):
    point = item[0]
    if isinstance(point, SingularPoint):
        return (1, point.value, 0)
    return (0, point.x.to_int(), point.y.to_int())


def make_divisor(curve: EdwardsCurve, terms: Sequence[tuple[EdwardsPointLike, int]]) -> Divisor:
    """Normalized divisor from (point, multiplicity) pairs.

    Points must lie on the curve; duplicates merge and zero
    multiplicities vanish.
    """
    merged: dict = {}
    for point, mult in terms:
        if not curve.contains(point):  # raises FieldMismatchError on foreign points
            raise PointNotOnCurveError(f"{point!r} not on {curve!r}")
        merged[point] = merged.get(point, 0) + int(mult)
    return Divisor({pt: m for pt, m in merged.items() if m != 0})


def reduce_divisor(curve: EdwardsCurve, D: Divisor) -> tuple[EdwardsPoint, int]:
    """Reduce a divisor class to (P, k) with D ~ P + k*O.

    P is the group sum of the terms and k = degree - 1; when the sum is
    the neutral point the result reads as (k+1)*O.
    """
    for point in D.support():
        if isinstance(point, SingularPoint):
            raise SingularPointError(f"divisor support contains {point!r}")
    delta = D.degree
    if delta < 1:
        raise ValueError(f"divisor degree {delta} must be positive")
    acc = curve.neutral()
    for point, mult in D.items():
        acc = curve.add(acc, curve.scalar_mul(mult, point))
    return acc, delta - 1


# -- text and JSON formats ----------------------------------------------------

_TERM_RE = re.compile(r"^\((-?\d+),(-?\d+)\)(?:\^(-?\d+))?$")
_O_TERM_RE = re.compile(r"^(-?\d+)?O$")


def parse_divisor(text: str, curve: EdwardsCurve) -> Divisor:
    """Parse "(x,y)^m + (x,y) + kO"; whitespace-insensitive, O = (0,1)."""
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ValueError("empty divisor")
    terms = []
    for part in compact.split("+"):
        m = _TERM_RE.match(part)
        if m:
            x, y, mult = int(m.group(1)), int(m.group(2)), int(m.group(3) or 1)
            terms.append((curve.point(x, y), mult))
            continue
        m = _O_TERM_RE.match(part)
        if m:
            k = int(m.group(1)) if m.group(1) is not None else 1
            terms.append((curve.neutral(), k))
            continue
        raise ValueError(f"cannot parse divisor term {part!r}")
    return make_divisor(curve, terms)


def format_divisor(D: Divisor) -> str:
    """Inverse of parse_divisor; the neutral point prints as the trailing kO."""
    if len(D) == 0:
        return "0"
    plain, neutral_mult = [], 0
    for point, mult in D.items():
        if isinstance(point, SingularPoint):
            plain.append((point.value, mult))
        elif point.x.is_zero() and point.y == point.y.field.one:
            neutral_mult = mult
        else:
            plain.append((f"({point.x.to_int()},{point.y.to_int()})", mult))
    chunks = [name if m == 1 else f"{name}^{m}" for name, m in plain]
    if neutral_mult == 1:
        chunks.append("O")
    elif neutral_mult:
        chunks.append(f"{neutral_mult}O")
    return " + ".join(chunks)


def divisor_to_json(D: Divisor) -> list[dict]:
    out = []
    for point, mult in D.items():
        name = point.value if isinstance(point, SingularPoint) else \
            f"({point.x.to_int()},{point.y.to_int()})"
        out.append({"point": name, "mult": mult})
    return out


def divisor_from_json(data: Sequence[dict], curve: EdwardsCurve) -> Divisor:
    terms = [(parse_edwards_point(item["point"], curve), item["mult"]) for item in data]
    return make_divisor(curve, terms)


# ---------------------------------------------------------------------------
# Basis functions


@dataclass(frozen=True)
class One:
    """The constant function 1."""


@dataclass(frozen=True)
class InvX:
    """1/x."""


@dataclass(frozen=True)
class AxisPole:
    """(x + sign)*(y+1)/(x*y) for the points (sign, 0) on the x axis."""

    sign: int


@dataclass(frozen=True)
class PointPole:
    """(y+b)*x/((x-a)*(y-1)), the degree-one step for a generic point (a, b)."""

    a: FieldElement
    b: FieldElement


@dataclass(frozen=True)
class Ladder:
    """1/(y-1)^h (even index 2h) or (y+1)/(x*(y-1)^h) (odd index 2h+1)."""

    h: int
    odd: bool


BasisFunction = Union[One, InvX, AxisPole, PointPole, Ladder]


def _ladder_for_index(i: int) -> Ladder:
    return Ladder(h=i // 2, odd=bool(i % 2))


def riemann_roch_basis(curve: EdwardsCurve, P: EdwardsPointLike, k: int) -> list[BasisFunction]:
    """Basis of the function space of P + k*O, in evaluation order.

    For P = O the list is the constant followed by ladder indices
    2..k+1; otherwise the constant, the degree-one step picked by P, and
    ladder indices 2..k.  Either way it has k+1 entries.
    """
    if not curve.complete:
        raise IncompleteCurveError("basis construction requires a non-square d")
    if isinstance(P, SingularPoint):
        raise SingularPointError(f"no basis for divisors supported at {P!r}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if not curve.contains(P):
        raise PointNotOnCurveError(f"{P!r} not on {curve!r}")
    F = curve.field
    one = F.one
    if P.x.is_zero() and P.y == one:  # P = O
        return [One()] + [_ladder_for_index(i) for i in range(2, k + 2)]
    if P.x.is_zero() and P.y == -one:
        first: BasisFunction = InvX()
    elif P.y.is_zero() and P.x == one:
        first = AxisPole(1)
    elif P.y.is_zero() and P.x == -one:
        first = AxisPole(-1)
    else:
        first = PointPole(P.x, P.y)
    basis: list[BasisFunction] = [One()]
    if k >= 1:
        basis.append(first)
        basis.extend(_ladder_for_index(i) for i in range(2, k + 1))
    return basis


def formula_text(fn: BasisFunction) -> str:
    """Human-readable affine formula, for reports and the CLI."""
    if isinstance(fn, One):
        return "1"
    if isinstance(fn, InvX):
        return "1/x"
    if isinstance(fn, AxisPole):
        return f"(x{'+' if fn.sign > 0 else '-'}1)*(y+1)/(x*y)"
    if isinstance(fn, PointPole):
        return f"(y+{fn.b})*x/((x-{fn.a})*(y-1))"
    pole = "(y-1)" if fn.h == 1 else f"(y-1)^{fn.h}"
    if fn.odd:
        return f"(y+1)/(x*{pole})"
    return f"1/{pole}"


# ---------------------------------------------------------------------------
# Evaluation


def evaluate_function(curve: EdwardsCurve, fn: BasisFunction, Q: EdwardsPointLike) -> FieldElement:
    """Direct affine evaluation of one basis function.

    Q is taken to be a point of the curve; raises IndeterminateError
    when a denominator factor vanishes (including the 0/0 point (a,-b)
    of PointPole).
    """
    if isinstance(Q, SingularPoint):
        raise SingularPointError(f"evaluation needs an affine point, got {Q!r}")
    F = curve.field
    x, y = Q.x, Q.y
    if isinstance(fn, One):
        return F.one
    if isinstance(fn, InvX):
        if x.is_zero():
            raise IndeterminateError(f"1/x undefined at {Q!r}")
        return x.inverse()
    if isinstance(fn, AxisPole):
        if x.is_zero() or y.is_zero():
            raise IndeterminateError(f"{formula_text(fn)} undefined at {Q!r}")
        return (x + fn.sign) * (y + F.one) / (x * y)
    if isinstance(fn, PointPole):
        if x == fn.a or y == F.one:
            raise IndeterminateError(f"{formula_text(fn)} undefined at {Q!r}")
        return (y + fn.b) * x / ((x - fn.a) * (y - F.one))
    if isinstance(fn, Ladder):
        if y == F.one or (fn.odd and x.is_zero()):
            raise IndeterminateError(f"{formula_text(fn)} undefined at {Q!r}")
        base = (y - F.one).inverse() ** fn.h
        if fn.odd:
            return (y + F.one) * base / x
        return base
    raise TypeError(f"unknown basis function {fn!r}")


def ladder_values(
    curve: EdwardsCurve,
    fns: Sequence[Ladder],
    Q: EdwardsPoint,
    w: Optional[FieldElement] = None,
) -> list[FieldElement]:
    """Evaluate a run of Ladder functions with the product recurrences.

    The first even value costs one inversion; every other value is one
    multiplication away from an already-computed one.  w is the value of
    (y+1)/x and is computed on demand if not supplied.
    """
    F = curve.field
    x, y = Q.x, Q.y
    if y == F.one and fns:
        raise IndeterminateError(f"ladder functions undefined at {Q!r}")
    if any(f.odd for f in fns) and x.is_zero():
        raise IndeterminateError(f"odd ladder functions undefined at {Q!r}")
    even_vals: dict[int, FieldElement] = {}

    def even(h: int) -> FieldElement:
        if h not in even_vals:
            if h == 1:
                even_vals[1] = (y - F.one).inverse()
            else:
                even_vals[h] = even(h - 1) * even(1)
        return even_vals[h]

    out = []
    for fn in fns:
        v = even(fn.h)
        if fn.odd:
            if w is None:
                w = (y + F.one) / x
            v = w * v
        out.append(v)
    return out


def evaluate_basis(
    curve: EdwardsCurve, basis: Sequence[BasisFunction], Q: EdwardsPoint
) -> list[FieldElement]:
    """All basis values at Q; ladder entries use the incremental recurrences."""
    ladder = [(i, fn) for i, fn in enumerate(basis) if isinstance(fn, Ladder)]
    values: list = [None] * len(basis)
    for i, fn in enumerate(basis):
        if not isinstance(fn, Ladder):
            values[i] = evaluate_function(curve, fn, Q)
    for (i, _), v in zip(ladder, ladder_values(curve, [fn for _, fn in ladder], Q)):
        values[i] = v
    return values
