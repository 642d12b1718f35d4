"""Exact arithmetic in GF(p^t) for odd primes p.

Elements are stored as little-endian coefficient tuples over GF(p); a
field is GF(p) itself (t = 1) or GF(p)[u] modulo a monic irreducible
polynomial of degree t.  Every element has a canonical integer encoding
(its coefficients read as base-p digits), which fixes the enumeration
order and the serialization format.

Each GF instance carries multiplication/inversion counters so callers
can audit operation counts.  Counters are plain attributes: keep counted
workloads on a single thread.
"""

from __future__ import annotations

from collections import namedtuple
from typing import Iterator, Optional, Sequence, Union

from .errors import (
    EvenCharacteristicError,
    FieldMismatchError,
    NotIrreducibleError,
    NotPrimeError,
)

OpCounts = namedtuple("OpCounts", ["mul", "inv"])


def is_prime(n: int) -> bool:
    """Trial-division primality test; fields here stay at desk scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# ---------------------------------------------------------------------------
# Polynomial helpers over GF(p).  Polynomials are lists of ints in [0, p)
# without trailing zeros; [] is the zero polynomial.


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _ptrim([(x - y) % p for x, y in zip(a, b)])


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pdivmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = _ptrim(list(a))
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    quot = [0] * max(len(rem) - db, 0)
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        factor = (rem[-1] * inv_lead) % p
        quot[shift] = factor
        for i, bi in enumerate(b):
            rem[shift + i] = (rem[shift + i] - factor * bi) % p
        _ptrim(rem)
    return _ptrim(quot), rem


def _pmulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    return _pdivmod(_pmul(a, b, p), mod, p)[1]


def _ppowmod(a: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pdivmod(a, mod, p)[1]
    while e:
        if e & 1:
            result = _pmulmod(result, base, mod, p)
        e >>= 1
        if e:
            base = _pmulmod(base, base, mod, p)
    return result


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return a


def _pinvmod(a: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    """Inverse of a modulo a monic irreducible polynomial, by extended Euclid."""
    r0, r1 = list(mod), _pdivmod(a, mod, p)[1]
    s0, s1 = [], [1]
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(q, s1, p), p)
    if len(r0) != 1:
        raise ZeroDivisionError("element is not invertible")
    scale = pow(r0[0], -1, p)
    return _ptrim([(c * scale) % p for c in s0])


def _poly_is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Rabin irreducibility test for a monic polynomial over GF(p)."""
    t = len(coeffs) - 1
    if t < 1 or coeffs[-1] != 1:
        return False
    if t == 1:
        return True
    x = [0, 1]
    # x^(p^t) == x (mod f)
    if _ppowmod(x, p**t, coeffs, p) != x:
        return False
    # gcd(x^(p^(t/r)) - x, f) == 1 for every prime r dividing t
    for r in _prime_factors(t):
        g = _psub(_ppowmod(x, p ** (t // r), coeffs, p), x, p)
        if len(_pgcd(list(coeffs), g, p)) != 1:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def find_irreducible(p: int, t: int) -> list[int]:
    """Smallest monic irreducible polynomial of degree t over GF(p).

    Candidates are scanned by their base-p encoding of the non-leading
    coefficients (constant term fastest), so the result is
    reproducible across runs.
    """
    if t < 2:
        raise ValueError("find_irreducible needs t >= 2")
    for n in range(p**t):
        coeffs = _digits(n, p, t) + [1]
        if _poly_is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _digits(n: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        n, r = divmod(n, p)
        out.append(r)
    return out


# ---------------------------------------------------------------------------


class GF:
    """The finite field GF(p^t), p an odd prime.

    Calling the instance converts a canonical integer encoding (or a
    coefficient sequence) into a FieldElement: ``F = GF(17); a = F(4)``.
    """

    def __init__(self, p: int, t: int = 1, modulus: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        if p == 2:
            raise EvenCharacteristicError("characteristic 2 is not supported")
        if t < 1:
            raise ValueError("extension degree t must be >= 1")
        self.p = p
        self.t = t
        self.q = p**t
        if t == 1:
            # degree-1 placeholder: u itself
            self.modulus = (0, 1)
        elif modulus is None:
            self.modulus = tuple(find_irreducible(p, t))
        else:
            mod = [c % p for c in modulus]
            if len(mod) != t + 1 or mod[-1] != 1:
                raise NotIrreducibleError(f"modulus must be monic of degree {t}")
            if not _poly_is_irreducible(mod, p):
                raise NotIrreducibleError(f"{mod} is reducible over GF({p})")
            self.modulus = tuple(mod)
        self.mul_count = 0
        self.inv_count = 0

    # -- identity / comparison ------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF):
            return NotImplemented
        return (self.p, self.t, self.modulus) == (other.p, other.t, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.t, self.modulus))

    def __repr__(self) -> str:
        if self.t == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.t})"

    # -- element construction --------------------------------------------------

    def __call__(self, value: Union[int, "FieldElement", Sequence[int]]) -> "FieldElement":
        return self.element(value)

    def element(self, value: Union[int, "FieldElement", Sequence[int]]) -> "FieldElement":
        """Element from a canonical integer encoding or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"{value!r} is not in {self!r}")
            return value
        if isinstance(value, int):
            coeffs = tuple(_digits(value % self.q, self.p, self.t))
        else:
            coeffs = list(value)
            if len(coeffs) > self.t:
                raise ValueError(f"too many coefficients for {self!r}")
            coeffs = tuple(c % self.p for c in coeffs) + (0,) * (self.t - len(coeffs))
        return FieldElement(coeffs, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement((0,) * self.t, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement((1,) + (0,) * (self.t - 1), self)

    def elements(self) -> Iterator["FieldElement"]:
        """All q elements in canonical integer-encoding order."""
        for n in range(self.q):
            yield self.element(n)

    # -- instrumentation --------------------------------------------------------

    def counters(self) -> OpCounts:
        return OpCounts(self.mul_count, self.inv_count)

    def reset_counters(self) -> None:
        self.mul_count = 0
        self.inv_count = 0

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> dict:
        return {"p": self.p, "t": self.t, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "GF":
        t = data["t"]
        modulus = data.get("modulus") if t > 1 else None
        return cls(data["p"], t, modulus)


class FieldElement:
    """One element of a GF instance; immutable and hashable."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: tuple[int, ...], field: GF):
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot mix {self.field!r} and {other.field!r}")
            return other
        if isinstance(other, int):
            return self.field.element(other)
        raise TypeError(f"cannot operate on FieldElement and {type(other).__name__}")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        b = self._coerce(other)
        p = self.field.p
        return FieldElement(tuple((x + y) % p for x, y in zip(self.coeffs, b.coeffs)), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        p = self.field.p
        return FieldElement(tuple((x - y) % p for x, y in zip(self.coeffs, b.coeffs)), self.field)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        p = self.field.p
        return FieldElement(tuple((-x) % p for x in self.coeffs), self.field)

    def __mul__(self, other):
        b = self._coerce(other)
        f = self.field
        f.mul_count += 1
        if f.t == 1:
            return FieldElement(((self.coeffs[0] * b.coeffs[0]) % f.p,), f)
        prod = _pmulmod(list(self.coeffs), list(b.coeffs), list(f.modulus), f.p)
        return FieldElement(tuple(prod) + (0,) * (f.t - len(prod)), f)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int) -> "FieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse by extended Euclid."""
        f = self.field
        if self.is_zero():
            raise ZeroDivisionError(f"inverse of zero in {f!r}")
        f.inv_count += 1
        if f.t == 1:
            return FieldElement((pow(self.coeffs[0], -1, f.p),), f)
        inv = _pinvmod(list(self.coeffs), list(f.modulus), f.p)
        return FieldElement(tuple(inv) + (0,) * (f.t - len(inv)), f)

    # -- predicates and square roots --------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_square(self) -> bool:
        """Euler criterion: a^((q-1)/2) == 1, with 0 counted as a square."""
        if self.is_zero():
            return True
        return self ** ((self.field.q - 1) // 2) == self.field.one

    def sqrt(self) -> Optional[tuple["FieldElement", "FieldElement"]]:
        """Both square roots (smaller canonical encoding first), or None.

        Uses direct exponentiation for q = 3 (mod 4) and Tonelli-Shanks
        otherwise.
        """
        f = self.field
        if self.is_zero():
            return (f.zero, f.zero)
        if not self.is_square():
            return None
        q = f.q
        if q % 4 == 3:
            r = self ** ((q + 1) // 4)
        else:
            r = self._tonelli_shanks()
        pair = sorted((r, -r), key=lambda e: e.to_int())
        return (pair[0], pair[1])

    def _tonelli_shanks(self) -> "FieldElement":
        f = self.field
        m = f.q - 1
        s = 0
        while m % 2 == 0:
            m //= 2
            s += 1
        z = next(e for e in f.elements() if not e.is_zero() and not e.is_square())
        c = z**m
        r = self ** ((m + 1) // 2)
        u = self**m
        while u != f.one:
            i = 0
            probe = u
            while probe != f.one:
                probe = probe * probe
                i += 1
            b = c ** (2 ** (s - i - 1))
            r = r * b
            c = b * b
            u = u * c
            s = i
        return r

    # -- encoding ------------------------------------------------------------

    def to_int(self) -> int:
        """Canonical integer encoding: coefficients as base-p digits."""
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.field.p + c
        return n

    __int__ = to_int

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == self.field.element(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeffs, self.field.p, self.field.t))

    def __repr__(self) -> str:
        return f"{self.field!r}({self.to_int()})"

    def __str__(self) -> str:
        return str(self.to_int())
