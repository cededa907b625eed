"""Weierstrass models over Q: invariants, coordinate changes, group law.

All arithmetic is exact (int / fractions.Fraction).  A model is the tuple
(a1,a2,a3,a4,a6) of y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 and is
required to be nonsingular (disc != 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .arith import factor

Coeff = int | Fraction


def _norm(x: Coeff) -> Coeff:
    """Collapse integral Fractions to int so reprs stay readable."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    if isinstance(x, (int, Fraction)):
        return x
    raise TypeError(f"coefficient {x!r} is not int or Fraction")


@dataclass(frozen=True)
class WeierstrassModel:
    a1: Coeff
    a2: Coeff
    a3: Coeff
    a4: Coeff
    a6: Coeff

    def __post_init__(self) -> None:
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, _norm(getattr(self, name)))
        if self.disc == 0:
            raise ValueError("singular model (discriminant zero)")

    # -- standard invariants ------------------------------------------------
    @property
    def b2(self) -> Coeff:
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self) -> Coeff:
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self) -> Coeff:
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self) -> Coeff:
        return (
            self.a1 * self.a1 * self.a6
            + 4 * self.a2 * self.a6
            - self.a1 * self.a3 * self.a4
            + self.a2 * self.a3 * self.a3
            - self.a4 * self.a4
        )

    @property
    def c4(self) -> Coeff:
        return self.b2 * self.b2 - 24 * self.b4

    @property
    def c6(self) -> Coeff:
        return -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def disc(self) -> Coeff:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def j_invariant(self) -> Fraction:
        return Fraction(self.c4 ** 3, self.disc)

    def coefficients(self) -> tuple[Coeff, Coeff, Coeff, Coeff, Coeff]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def is_integral(self) -> bool:
        return all(isinstance(a, int) for a in self.coefficients())

    def integral_model(self) -> tuple["WeierstrassModel", "Transform"]:
        """Clear denominators with a (u,0,0,0) change, u = 1/c."""
        if self.is_integral():
            return self, Transform.identity()
        c = lcm(*(Fraction(a).denominator for a in self.coefficients()))
        t = Transform(Fraction(1, c), 0, 0, 0)
        return apply_transform(self, t), t

    @classmethod
    def from_coefficients(cls, seq) -> "WeierstrassModel":
        vals = [Fraction(x) for x in seq]
        if len(vals) == 2:  # short form [a4, a6]
            vals = [Fraction(0), Fraction(0), Fraction(0), vals[0], vals[1]]
        if len(vals) != 5:
            raise ValueError("expected 5 coefficients [a1,a2,a3,a4,a6] (or 2 for short form)")
        return cls(*vals)


@dataclass(frozen=True)
class BInvariants:
    b2: Coeff
    b4: Coeff
    b6: Coeff
    b8: Coeff
    disc: Coeff


def b_invariants(e: WeierstrassModel) -> BInvariants:
    out = BInvariants(e.b2, e.b4, e.b6, e.b8, e.disc)
    assert 4 * out.b8 == out.b2 * out.b6 - out.b4 * out.b4
    return out


# -- coordinate changes -----------------------------------------------------


@dataclass(frozen=True)
class Transform:
    """x = u^2 x' + r, y = u^3 y' + s u^2 x' + t."""

    u: Coeff
    r: Coeff
    s: Coeff
    t: Coeff

    def __post_init__(self) -> None:
        for name in ("u", "r", "s", "t"):
            object.__setattr__(self, name, _norm(Fraction(getattr(self, name))))
        if self.u == 0:
            raise ValueError("u must be nonzero")

    @classmethod
    def identity(cls) -> "Transform":
        return cls(1, 0, 0, 0)

    def then(self, other: "Transform") -> "Transform":
        """The composite change: apply self first, then other."""
        u1, r1, s1, t1 = self.u, self.r, self.s, self.t
        u2, r2, s2, t2 = other.u, other.r, other.s, other.t
        return Transform(
            u1 * u2,
            r1 + u1 * u1 * r2,
            s1 + u1 * s2,
            t1 + u1 * u1 * s1 * r2 + u1 ** 3 * t2,
        )

    def inverse(self) -> "Transform":
        u, r, s, t = (Fraction(v) for v in (self.u, self.r, self.s, self.t))
        return Transform(1 / u, -r / u ** 2, -s / u, (r * s - t) / u ** 3)

    def is_identity(self) -> bool:
        return (self.u, self.r, self.s, self.t) == (1, 0, 0, 0)


def apply_transform(e: WeierstrassModel, t: Transform) -> WeierstrassModel:
    u, r, s, tt = (Fraction(v) for v in (t.u, t.r, t.s, t.t))
    a1, a2, a3, a4, a6 = (Fraction(a) for a in e.coefficients())
    na1 = (a1 + 2 * s) / u
    na2 = (a2 - s * a1 + 3 * r - s * s) / u ** 2
    na3 = (a3 + r * a1 + 2 * tt) / u ** 3
    na4 = (a4 - s * a3 + 2 * r * a2 - (tt + r * s) * a1 + 3 * r * r - 2 * s * tt) / u ** 4
    na6 = (a6 + r * a4 + r * r * a2 + r ** 3 - tt * a3 - tt * tt - r * tt * a1) / u ** 6
    return WeierstrassModel(na1, na2, na3, na4, na6)


def transform_point(pt, t: Transform):
    """Map a point on E to the corresponding point of apply_transform(E, t)."""
    if pt is INFINITY:
        return INFINITY
    u, r, s, tt = (Fraction(v) for v in (t.u, t.r, t.s, t.t))
    x = (Fraction(pt.x) - r) / u ** 2
    y = (Fraction(pt.y) - s * u * u * x - tt) / u ** 3
    return Point(x, y)


# -- points and the chord-tangent law ---------------------------------------


class _Infinity:
    __slots__ = ()

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return "INFINITY"


INFINITY = _Infinity()


@dataclass(frozen=True)
class Point:
    x: Coeff
    y: Coeff

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _norm(Fraction(self.x)))
        object.__setattr__(self, "y", _norm(Fraction(self.y)))


def on_curve(e: WeierstrassModel, pt) -> bool:
    if pt is INFINITY:
        return True
    x, y = Fraction(pt.x), Fraction(pt.y)
    a1, a2, a3, a4, a6 = e.coefficients()
    return y * y + a1 * x * y + a3 * y == x ** 3 + a2 * x * x + a4 * x + a6


def negate(e: WeierstrassModel, pt):
    if pt is INFINITY:
        return INFINITY
    return Point(pt.x, -pt.y - e.a1 * pt.x - e.a3)


def group_law_add(e: WeierstrassModel, p, q):
    """Chord-tangent addition on the full a1..a6 model."""
    if p is INFINITY:
        return q
    if q is INFINITY:
        return p
    a1, a2, a3, a4, a6 = (Fraction(a) for a in e.coefficients())
    x1, y1 = Fraction(p.x), Fraction(p.y)
    x2, y2 = Fraction(q.x), Fraction(q.y)
    if x1 == x2 and y1 + y2 + a1 * x2 + a3 == 0:
        return INFINITY
    if x1 == x2:
        den = 2 * y1 + a1 * x1 + a3
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / den
        nu = (-(x1 ** 3) + a4 * x1 + 2 * a6 - a3 * y1) / den
    else:
        lam = (y2 - y1) / (x2 - x1)
        nu = y1 - lam * x1
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return Point(x3, y3)


def scalar_mul(e: WeierstrassModel, n: int, pt):
    if n < 0:
        return scalar_mul(e, -n, negate(e, pt))
    acc = INFINITY
    add = pt
    while n:
        if n & 1:
            acc = group_law_add(e, acc, add)
        add = group_law_add(e, add, add)
        n >>= 1
    return acc


def double_x(e: WeierstrassModel, x: Coeff) -> Fraction:
    """x-coordinate of 2P in terms of x(P), via the division-polynomial ratio."""
    x = Fraction(x)
    b2, b4, b6, b8 = e.b2, e.b4, e.b6, e.b8
    den = 4 * x ** 3 + b2 * x * x + 2 * b4 * x + b6
    if den == 0:
        raise ValueError("x is the abscissa of a 2-torsion point; 2P is the origin")
    num = x ** 4 - b4 * x * x - 2 * b6 * x - b8
    return num / den


# -- rational 2-torsion ------------------------------------------------------


def _rational_cubic_roots(c3: int, c2: int, c1: int, c0: int) -> list[Fraction]:
    """All rational roots of c3 x^3 + c2 x^2 + c1 x + c0 (c3 != 0), exact."""
    if c3 == 0:
        raise ValueError("leading coefficient must be nonzero")
    roots = []
    coeffs = [c3, c2, c1, c0]
    while coeffs[-1] == 0 and len(coeffs) > 1:
        coeffs.pop()
        if Fraction(0) not in roots:
            roots.append(Fraction(0))
    lead, const = coeffs[0], coeffs[-1]
    if len(coeffs) == 1:
        return roots
    for p in factor(abs(const)).divisors():
        for q in factor(abs(lead)).divisors():
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                acc = Fraction(0)
                for c in [c3, c2, c1, c0]:
                    acc = acc * cand + c
                if acc == 0:
                    roots.append(cand)
    return sorted(roots)


@dataclass(frozen=True)
class TwoTorsion:
    label: str  # "trivial" | "Z/2" | "Z/2 x Z/2"
    roots: tuple[Fraction, ...]  # rational roots of 4x^3 + b2 x^2 + 2 b4 x + b6


def two_torsion_structure(e: WeierstrassModel) -> TwoTorsion:
    """Group structure of E(Q)[2], from the rational roots of the 2-division cubic."""
    b2, b4, b6 = e.b2, e.b4, e.b6
    m = lcm(*(Fraction(c).denominator for c in (b2, b4, b6)))
    roots = _rational_cubic_roots(4 * m, int(m * b2), int(m * 2 * b4), int(m * b6))
    if len(roots) == 0:
        label = "trivial"
    elif len(roots) == 1:
        label = "Z/2"
    elif len(roots) == 3:
        label = "Z/2 x Z/2"
    else:  # pragma: no cover - a cubic cannot have exactly two rational roots
        raise AssertionError("cubic with exactly two rational roots")
    return TwoTorsion(label, tuple(roots))
