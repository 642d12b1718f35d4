"""Edwards and Weierstrass curves over GF(q) with their group laws.

An Edwards curve x^2 + y^2 = 1 + d*x^2*y^2 (d*(d-1) != 0) carries two
singular points at infinity, [0:1:0] and [0:0:1]; they are representable
here as SingularPoint values but are rejected by the group law.  When d
is a non-square the curve is *complete*: the addition law works for every
pair of affine points because its denominators never vanish.

The Weierstrass model y^2 = x^3 + a*x^2 + b*x is smooth, with a single
point at infinity acting as the group identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Union

from .errors import (
    FieldMismatchError,
    IncompleteCurveError,
    InvalidDError,
    PointNotOnCurveError,
    SingularPointError,
)
from .fields import GF, FieldElement


@dataclass(frozen=True)
class EdwardsPoint:
    """Affine point on an Edwards curve."""

    x: FieldElement
    y: FieldElement

    def __repr__(self) -> str:
        return f"({self.x},{self.y})"


class SingularPoint(Enum):
    """The two singular points at infinity of an Edwards curve."""

    OMEGA1 = "Omega1"  # [0:1:0]
    OMEGA2 = "Omega2"  # [0:0:1]

    def __repr__(self) -> str:
        return self.value


OMEGA1 = SingularPoint.OMEGA1
OMEGA2 = SingularPoint.OMEGA2

EdwardsPointLike = Union[EdwardsPoint, SingularPoint]


@dataclass(frozen=True)
class WeierstrassPoint:
    """Point on a Weierstrass curve; x = y = None encodes infinity."""

    x: Optional[FieldElement]
    y: Optional[FieldElement]

    @classmethod
    def infinity(cls) -> "WeierstrassPoint":
        return cls(None, None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __repr__(self) -> str:
        if self.is_infinity:
            return "Omega"
        return f"({self.x},{self.y})"


class EdwardsCurve:
    """x^2 + y^2 = 1 + d*x^2*y^2 over a GF instance."""

    def __init__(self, field: GF, d):
        self.field = field
        d = field.element(d)
        if d.is_zero() or d == field.one:
            raise InvalidDError(f"d = {d} violates d*(d-1) != 0")
        self.d = d
        self.complete = not d.is_square()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdwardsCurve):
            return NotImplemented
        return self.field == other.field and self.d == other.d

    def __hash__(self) -> int:
        return hash((self.field, self.d))

    def __repr__(self) -> str:
        return f"EdwardsCurve({self.field!r}, d={self.d})"

    def point(self, x, y) -> EdwardsPoint:
        """Validated affine point from coordinates (ints or elements)."""
        P = EdwardsPoint(self.field.element(x), self.field.element(y))
        if not self.contains(P):
            raise PointNotOnCurveError(f"{P!r} not on {self!r}")
        return P

    def neutral(self) -> EdwardsPoint:
        """(0, 1), the identity of the group law."""
        return EdwardsPoint(self.field.zero, self.field.one)

    def contains(self, P: EdwardsPointLike) -> bool:
        """Equation check; the singular points always belong to the curve."""
        if isinstance(P, SingularPoint):
            return True
        if P.x.field != self.field:
            raise FieldMismatchError(f"{P!r} uses {P.x.field!r}, curve uses {self.field!r}")
        x2 = P.x * P.x
        y2 = P.y * P.y
        return x2 + y2 == self.field.one + self.d * x2 * y2

    def _require_affine(self, P: EdwardsPointLike) -> EdwardsPoint:
        if isinstance(P, SingularPoint):
            raise SingularPointError(f"{P!r} cannot enter the group law")
        return P

    def add(self, P: EdwardsPointLike, Q: EdwardsPointLike) -> EdwardsPoint:
        """Complete Edwards addition law.

        On a complete curve the denominators 1 +- d*x1*x2*y1*y2 are nonzero
        for every pair of affine points.
        """
        if not self.complete:
            raise IncompleteCurveError("group law requires a non-square d")
        P = self._require_affine(P)
        Q = self._require_affine(Q)
        one = self.field.one
        cross = self.d * P.x * Q.x * P.y * Q.y
        x3 = (P.x * Q.y + P.y * Q.x) / (one + cross)
        y3 = (P.y * Q.y - P.x * Q.x) / (one - cross)
        return EdwardsPoint(x3, y3)

    def neg(self, P: EdwardsPointLike) -> EdwardsPoint:
        P = self._require_affine(P)
        return EdwardsPoint(-P.x, P.y)

    def scalar_mul(self, n: int, P: EdwardsPointLike) -> EdwardsPoint:
        """n-fold sum by double-and-add; n may be negative."""
        P = self._require_affine(P)
        if n < 0:
            return self.scalar_mul(-n, self.neg(P))
        acc = self.neutral()
        base = P
        while n:
            if n & 1:
                acc = self.add(acc, base)
            n >>= 1
            if n:
                base = self.add(base, base)
        return acc

    def affine_points(self) -> list[EdwardsPoint]:
        """All affine points, sorted by the (x, y) integer encodings.

        For each x the equation gives y^2 = (1 - x^2) / (1 - d*x^2); on a
        complete curve the denominator cannot vanish.
        """
        if not self.complete:
            raise IncompleteCurveError("point enumeration requires a non-square d")
        one = self.field.one
        points = []
        for x in self.field.elements():
            x2 = x * x
            rhs = (one - x2) / (one - self.d * x2)
            roots = rhs.sqrt()
            if roots is None:
                continue
            r, s = roots
            points.append(EdwardsPoint(x, r))
            if s != r:
                points.append(EdwardsPoint(x, s))
        return points

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "d": self.d.to_int()}

    @classmethod
    def from_json(cls, data: dict) -> "EdwardsCurve":
        field = GF.from_json(data["field"])
        return cls(field, data["d"])


class WeierstrassCurve:
    """y^2 = x^3 + a*x^2 + b*x over a GF instance."""

    def __init__(self, field: GF, a, b):
        self.field = field
        self.a = field.element(a)
        self.b = field.element(b)
        if self.b.is_zero() or (self.a * self.a - 4 * self.b).is_zero():
            raise ValueError(
                f"cubic x^3 + {self.a}x^2 + {self.b}x has a repeated root; curve is singular"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeierstrassCurve):
            return NotImplemented
        return (self.field, self.a, self.b) == (other.field, other.a, other.b)

    def __hash__(self) -> int:
        return hash((self.field, self.a, self.b))

    def __repr__(self) -> str:
        return f"WeierstrassCurve({self.field!r}, a={self.a}, b={self.b})"

    def infinity(self) -> WeierstrassPoint:
        return WeierstrassPoint.infinity()

    def point(self, x, y) -> WeierstrassPoint:
        P = WeierstrassPoint(self.field.element(x), self.field.element(y))
        if not self.contains(P):
            raise PointNotOnCurveError(f"{P!r} not on {self!r}")
        return P

    def contains(self, P: WeierstrassPoint) -> bool:
        if P.is_infinity:
            return True
        if P.x.field != self.field:
            raise FieldMismatchError(f"{P!r} uses {P.x.field!r}, curve uses {self.field!r}")
        return P.y * P.y == (P.x * P.x + self.a * P.x + self.b) * P.x

    def _checked(self, P: WeierstrassPoint) -> WeierstrassPoint:
        if not self.contains(P):
            raise PointNotOnCurveError(f"{P!r} not on {self!r}")
        return P

    def neg(self, P: WeierstrassPoint) -> WeierstrassPoint:
        if P.is_infinity:
            return P
        return WeierstrassPoint(P.x, -P.y)

    def add(self, P: WeierstrassPoint, Q: WeierstrassPoint) -> WeierstrassPoint:
        """Chord-tangent addition with the point at infinity as identity."""
        P = self._checked(P)
        Q = self._checked(Q)
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        if P.x == Q.x:
            if P.y == -Q.y:
                # vertical chord, includes doubling a 2-torsion point (y = 0)
                return self.infinity()
            # tangent doubling, y != 0
            slope = (3 * P.x * P.x + 2 * self.a * P.x + self.b) / (2 * P.y)
        else:
            slope = (Q.y - P.y) / (Q.x - P.x)
        x3 = slope * slope - self.a - P.x - Q.x
        y3 = slope * (P.x - x3) - P.y
        return WeierstrassPoint(x3, y3)

    def scalar_mul(self, n: int, P: WeierstrassPoint) -> WeierstrassPoint:
        if n < 0:
            return self.scalar_mul(-n, self.neg(P))
        acc = self.infinity()
        base = P
        while n:
            if n & 1:
                acc = self.add(acc, base)
            n >>= 1
            if n:
                base = self.add(base, base)
        return acc

    def affine_points(self) -> list[WeierstrassPoint]:
        """All affine points, sorted by the (x, y) integer encodings."""
        points = []
        for x in self.field.elements():
            rhs = (x * x + self.a * x + self.b) * x
            roots = rhs.sqrt()
            if roots is None:
                continue
            r, s = roots
            points.append(WeierstrassPoint(x, r))
            if s != r:
                points.append(WeierstrassPoint(x, s))
        return points

    def to_json(self) -> dict:
        return {"field": self.field.to_json(), "a": self.a.to_int(), "b": self.b.to_int()}

    @classmethod
    def from_json(cls, data: dict) -> "WeierstrassCurve":
        field = GF.from_json(data["field"])
        return cls(field, data["a"], data["b"])


# ---------------------------------------------------------------------------
# Point text format: "(x,y)" with canonical integer encodings, or one of
# "Omega1", "Omega2" (Edwards infinities) and "Omega" (Weierstrass infinity).


def format_point(P) -> str:
    if isinstance(P, SingularPoint):
        return P.value
    if isinstance(P, WeierstrassPoint):
        if P.is_infinity:
            return "Omega"
        return f"({P.x.to_int()},{P.y.to_int()})"
    return f"({P.x.to_int()},{P.y.to_int()})"


def parse_edwards_point(text: str, curve: EdwardsCurve) -> EdwardsPointLike:
    text = text.strip()
    if text == "Omega1":
        return OMEGA1
    if text == "Omega2":
        return OMEGA2
    x, y = _parse_pair(text)
    return curve.point(x, y)


def parse_weierstrass_point(text: str, curve: WeierstrassCurve) -> WeierstrassPoint:
    text = text.strip()
    if text == "Omega":
        return curve.infinity()
    x, y = _parse_pair(text)
    return curve.point(x, y)


def _parse_pair(text: str) -> tuple[int, int]:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"expected a point like (x,y), got {text!r}")
    parts = body[1:-1].split(",")
    if len(parts) != 2:
        raise ValueError(f"expected two coordinates in {text!r}")
    return int(parts[0]), int(parts[1])
