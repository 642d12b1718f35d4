"""Rational maps between an Edwards curve and its Weierstrass model.

For an Edwards curve with coefficient d, the attached Weierstrass model
is y^2 = x^3 + a*x^2 + b*x with

    a = (1 + d) / 2,    b = ((1 - d) / 4)^2,

and the distinguished point (x1, y1) with x1 = y1 = (1 - d)/4, which
doubles to the 2-torsion point (0, 0).  The forward map sends an affine
Edwards point (u, v) to

    ( x1*(1 + v)/(1 - v),  y1*(1 + v)/(u*(1 - v)) ),

and the inverse map sends a Weierstrass point (x, y) to

    ( y1*x/(x1*y),  (x - x1)/(x + x1) ).

Both maps extend to the points their formulas miss: (0,1) <-> infinity
and (0,-1) <-> (0,0).  The remaining gaps of the inverse map are the
nonzero roots of the cubic (mapped to the singular point [0:1:0]) and
the fiber over x = -x1 (mapped to [0:0:1]); on a complete curve neither
set has points over the base field, so the inverse map is total there.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .curves import (
    OMEGA1,
    OMEGA2,
    EdwardsCurve,
    EdwardsPoint,
    EdwardsPointLike,
    SingularPoint,
    WeierstrassCurve,
    WeierstrassPoint,
)
from .errors import (
    IncompleteCurveError,
    PointNotOnCurveError,
    SingularPointError,
)
from .fields import FieldElement


@dataclass(frozen=True)
class BirationalPair:
    """An Edwards curve with its Weierstrass model and map data.

    omega1_fiber / omega2_fiber list the Weierstrass points (if any over
    the base field) that the inverse map sends to the two singular
    points; each is empty whenever the corresponding equation has no
    solution in GF(q).
    """

    edwards: EdwardsCurve
    weierstrass: WeierstrassCurve
    x1: FieldElement
    y1: FieldElement
    omega1_fiber: tuple[WeierstrassPoint, ...] = dataclass_field(default=())
    omega2_fiber: tuple[WeierstrassPoint, ...] = dataclass_field(default=())


def _build_pair(curve: EdwardsCurve) -> BirationalPair:
    F = curve.field
    four = F.element(4)
    c = (F.one - curve.d) / four
    a = (F.one + curve.d) / F.element(2)
    b = c * c
    model = WeierstrassCurve(F, a, b)

    # nonzero roots of x^2 + a*x + b (the cubic over x); discriminant is d
    omega1 = []
    disc = a * a - four * b
    roots = disc.sqrt()
    if roots is not None:
        half = F.element(2).inverse()
        for r in {roots[0], roots[1]}:
            t = (r - a) * half
            if not t.is_zero():
                omega1.append(model.point(t, F.zero))

    # fiber over x = -x1
    omega2 = []
    mx = -c
    rhs = (mx * mx + a * mx + b) * mx
    roots = rhs.sqrt()
    if roots is not None and not roots[0].is_zero():
        omega2 = [model.point(mx, roots[0]), model.point(mx, roots[1])]

    return BirationalPair(
        edwards=curve,
        weierstrass=model,
        x1=c,
        y1=c,
        omega1_fiber=tuple(sorted(omega1, key=lambda P: P.x.to_int())),
        omega2_fiber=tuple(sorted(omega2, key=lambda P: P.y.to_int())),
    )


def canonical_pair(curve: EdwardsCurve) -> BirationalPair:
    """The Weierstrass model and map data for a complete Edwards curve."""
    if not curve.complete:
        raise IncompleteCurveError("the birational correspondence needs a non-square d")
    return _build_pair(curve)


def to_weierstrass(pair: BirationalPair, P: EdwardsPointLike) -> WeierstrassPoint:
    """Forward map; undefined at the two singular points."""
    if isinstance(P, SingularPoint):
        raise SingularPointError(f"the forward map has no coherent value at {P!r}")
    curve = pair.edwards
    if not curve.contains(P):
        raise PointNotOnCurveError(f"{P!r} not on {curve!r}")
    F = curve.field
    if P.x.is_zero():
        if P.y == F.one:
            return pair.weierstrass.infinity()
        return pair.weierstrass.point(F.zero, F.zero)  # P = (0, -1)
    ratio = (F.one + P.y) / (F.one - P.y)
    x = pair.x1 * ratio
    y = pair.y1 * (F.one + P.y) / (P.x * (F.one - P.y))
    return pair.weierstrass.point(x, y)


def to_edwards(pair: BirationalPair, Q: WeierstrassPoint) -> EdwardsPointLike:
    """Inverse map, including the extensions at its exceptional points."""
    model = pair.weierstrass
    if not model.contains(Q):
        raise PointNotOnCurveError(f"{Q!r} not on {model!r}")
    curve = pair.edwards
    F = curve.field
    if Q.is_infinity:
        return curve.point(F.zero, F.one)
    if Q.y.is_zero():
        if Q.x.is_zero():
            return curve.point(F.zero, -F.one)
        return OMEGA1
    if Q.x == -pair.x1:
        return OMEGA2
    u = pair.y1 * Q.x / (pair.x1 * Q.y)
    v = (Q.x - pair.x1) / (Q.x + pair.x1)
    return curve.point(u, v)
