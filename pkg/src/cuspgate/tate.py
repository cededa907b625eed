"""Kodaira types, conductor exponents and Tamagawa numbers at a prime.

This runs the standard step-by-step reduction analysis on an integral
Weierstrass model: locate the singular point of the reduction, translate
it to the origin, and walk the valuation tests, translating as needed,
restarting on a non-minimal model.  The conductor exponent is recovered
from v(disc) and the component count (f = v - m + 1), which is valid at
every prime, including the wildly ramified small ones.

The split/non-split and component-group decisions are made on the
*translated* model; deciding them on the input coefficients is a classic
mistake (it gives the wrong Tamagawa number already for the conductor-11
curve (0,-1,1,-10,-20)) and the tests pin this down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import factor, is_prime, valuation
from .curves import Transform, WeierstrassModel, apply_transform

# ---------------------------------------------------------------------------
# small F_p polynomial kit (dense, descending coefficients, trimmed)


def _ptrim(f: list[int], p: int) -> list[int]:
    f = [c % p for c in f]
    i = 0
    while i < len(f) and f[i] == 0:
        i += 1
    return f[i:]


def _pmul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = (out[i + j] + a * b) % p
    return _ptrim(out, p)


def _psub(f: list[int], g: list[int], p: int) -> list[int]:
    n = max(len(f), len(g))
    f = [0] * (n - len(f)) + f
    g = [0] * (n - len(g)) + g
    return _ptrim([(a - b) % p for a, b in zip(f, g)], p)


def _pmod(f: list[int], g: list[int], p: int) -> list[int]:
    f = _ptrim(f, p)
    g = _ptrim(g, p)
    if not g:
        raise ZeroDivisionError("polynomial mod zero")
    inv = pow(g[0], -1, p)
    f = f[:]
    while len(f) >= len(g):
        coef = f[0] * inv % p
        for i in range(len(g)):
            f[i] = (f[i] - coef * g[i]) % p
        while f and f[0] == 0:
            f.pop(0)
    return f


def _pgcd(f: list[int], g: list[int], p: int) -> list[int]:
    f, g = _ptrim(f, p), _ptrim(g, p)
    while g:
        f, g = g, _pmod(f, g, p)
    if not f:
        return []
    inv = pow(f[0], -1, p)
    return [c * inv % p for c in f]


def _tpow_mod(e: int, modpoly: list[int], p: int) -> list[int]:
    """T^e mod modpoly over F_p."""
    result = _pmod([1], modpoly, p)
    base = _pmod([1, 0], modpoly, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), modpoly, p)
        base = _pmod(_pmul(base, base, p), modpoly, p)
        e >>= 1
    return result


def _fp_root_count(poly: list[int], p: int) -> int:
    """Number of distinct roots of poly in F_p."""
    poly = _ptrim(poly, p)
    if len(poly) <= 1:
        return 0
    if p <= 97:
        cnt = 0
        for x in range(p):
            acc = 0
            for c in poly:
                acc = (acc * x + c) % p
            cnt += acc == 0
        return cnt
    frob = _psub(_tpow_mod(p, poly, p), [1, 0], p)
    return len(_pgcd(frob, poly, p)) - 1


# ---------------------------------------------------------------------------
# quadratic / cubic shape analysis mod p


def _quad(a: int, b: int, c: int, p: int) -> tuple[str, int | None]:
    """Shape of a*Y^2 + b*Y + c over F_p (a a unit).

    Returns ("distinct_split"|"distinct_nonsplit", None) or ("double", root).
    """
    a, b, c = a % p, b % p, c % p
    if a == 0:
        raise ValueError("leading coefficient vanishes mod p")
    if p == 2:
        if b == 1:
            return ("distinct_split" if c == 0 else "distinct_nonsplit", None)
        return ("double", c * a % 2)  # Y^2 + c/a = (Y + sqrt(c/a))^2
    disc = (b * b - 4 * a * c) % p
    if disc == 0:
        return ("double", -b * pow(2 * a, -1, p) % p)
    if pow(disc, (p - 1) // 2, p) == 1:
        return ("distinct_split", None)
    return ("distinct_nonsplit", None)


def _cubic(b: int, c: int, d: int, p: int) -> tuple[str, int]:
    """Shape of the monic cubic T^3 + b T^2 + c T + d over F_p.

    Returns ("distinct", #F_p-roots), ("double", root) or ("triple", root);
    the returned root is the repeated one.
    """
    b, c, d = b % p, c % p, d % p
    if p <= 97:
        roots = [x for x in range(p) if (((x + b) * x + c) * x + d) % p == 0]
        for x in roots:
            # multiplicity by repeated synthetic division (characteristic-proof)
            poly = [1, b, c, d]
            m = 0
            while len(poly) > 1:
                quot = []
                acc = 0
                for coef in poly[:-1]:
                    acc = (acc * x + coef) % p
                    quot.append(acc)
                if (acc * x + poly[-1]) % p != 0:
                    break
                m += 1
                poly = quot
            if m >= 3:
                return ("triple", x)
            if m == 2:
                return ("double", x)
        return ("distinct", len(roots))
    poly = [1, b, c, d]
    deriv = [3 % p, 2 * b % p, c % p]
    g = _pgcd(poly, deriv, p)
    if len(g) - 1 == 0:
        return ("distinct", _fp_root_count(poly, p))
    if len(g) - 1 == 1:
        return ("double", -g[1] % p)
    # gcd of degree 2: the cubic is a perfect cube (T - alpha)^3
    return ("triple", -g[1] * pow(2, -1, p) % p)


# ---------------------------------------------------------------------------


def _vp(n: int, p: int) -> float:
    return math.inf if n == 0 else valuation(n, p)


def _singular_point(e: WeierstrassModel, p: int) -> tuple[int, int]:
    """The unique singular point of the reduction mod p, as residues."""
    a1, a2, a3, a4, a6 = (a % p for a in e.coefficients())
    if p <= 97:
        for x in range(p):
            rhs = (((x + a2) * x + a4) * x + a6) % p
            fx = (3 * x * x + 2 * a2 * x + a4) % p
            for y in range(p):
                if (y * y + a1 * x * y + a3 * y - rhs) % p:
                    continue
                if (2 * y + a1 * x + a3) % p:
                    continue
                if (a1 * y - fx) % p:
                    continue
                return x, y
        raise AssertionError("no singular point found mod %d" % p)
    # p > 97 is odd: complete the square; the singular x0 is the repeated
    # root of 4x^3 + b2 x^2 + 2 b4 x + b6 and y0 = -(a1 x0 + a3)/2.
    inv4 = pow(4, -1, p)
    shape, x0 = _cubic(e.b2 * inv4, 2 * e.b4 * inv4, e.b6 * inv4, p)
    if shape == "distinct":
        raise AssertionError("reduction mod %d is smooth" % p)
    y0 = -(a1 * x0 + a3) * pow(2, -1, p) % p
    return x0 % p, y0


_COMPONENTS = {"I0": 1, "II": 1, "III": 2, "IV": 3, "I0*": 5, "IV*": 7, "III*": 8, "II*": 9}


@dataclass(frozen=True)
class TateResult:
    p: int
    kodaira: str  # "I0", "I5", "II", ..., "I2*", "II*"
    n: int  # the n of I_n / I_n*; 0 otherwise
    f: int  # conductor exponent
    c: int  # Tamagawa number [E(Qp) : E0(Qp)]
    m: int  # number of components of the special fiber (over F_p-bar)
    v_disc: int  # valuation of the *minimal* discriminant
    minimal: bool  # whether the input model was already minimal at p
    split: bool | None  # multiplicative case only
    model: WeierstrassModel  # the translated p-minimal model the decisions used
    transform: Transform  # input -> model


def _result(p, kodaira, n, c, v, minimal, split, cur, total) -> TateResult:
    if kodaira in _COMPONENTS:
        m = _COMPONENTS[kodaira]
    elif kodaira.endswith("*"):
        m = n + 5  # I_n*
    else:
        m = n  # I_n, n >= 1
    f = v - m + 1 if v > 0 else 0
    return TateResult(p, kodaira, n, f, c, m, v, minimal, split, cur, total)


def tate_algorithm(e: WeierstrassModel, p: int) -> TateResult:
    """Reduction type of an integral model at the prime p."""
    if not e.is_integral():
        raise ValueError("model must have integer coefficients")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    cur = e
    total = Transform.identity()
    minimal = True

    while True:
        v = _vp(cur.disc, p)
        assert v != math.inf
        v = int(v)
        if v == 0:
            return _result(p, "I0", 0, 1, 0, minimal, None, cur, total)

        x0, y0 = _singular_point(cur, p)
        cur, total = _shift(cur, total, x0, y0)
        assert all(_vp(a, p) >= 1 for a in (cur.a3, cur.a4, cur.a6))

        if cur.b2 % p != 0:
            # multiplicative reduction; tangent directions from T^2 + a1 T - a2
            kind, _ = _quad(1, cur.a1, -cur.a2, p)
            split = kind == "distinct_split"
            c = v if split else (2 if v % 2 == 0 else 1)
            return _result(p, f"I{v}", v, c, v, minimal, split, cur, total)

        if _vp(cur.a6, p) < 2:
            return _result(p, "II", 0, 1, v, minimal, None, cur, total)
        if _vp(cur.b8, p) < 3:
            return _result(p, "III", 0, 2, v, minimal, None, cur, total)
        if _vp(cur.b6, p) < 3:
            kind, _ = _quad(1, _exact(cur.a3, p, 1), -_exact(cur.a6, p, 2), p)
            assert kind != "double"
            c = 3 if kind == "distinct_split" else 1
            return _result(p, "IV", 0, c, v, minimal, None, cur, total)

        cur, total = _normalize(cur, total, p)

        # the reduced cubic T^3 + (a2/p) T^2 + (a4/p^2) T + (a6/p^3)
        shape, info = _cubic(_exact(cur.a2, p, 1), _exact(cur.a4, p, 2), _exact(cur.a6, p, 3), p)
        if shape == "distinct":
            return _result(p, "I0*", 0, 1 + info, v, minimal, None, cur, total)
        if shape == "double":
            if info:
                cur, total = _shift(cur, total, p * info, 0, 0)
            assert _vp(cur.a2, p) == 1 and _vp(cur.a4, p) >= 3 and _vp(cur.a6, p) >= 4
            return _in_star(cur, total, p, v, minimal)

        # triple root: translate it to T = 0
        if info:
            cur, total = _shift(cur, total, p * info, 0, 0)
        assert _vp(cur.a2, p) >= 2 and _vp(cur.a4, p) >= 3 and _vp(cur.a6, p) >= 4

        kind, root = _quad(1, _exact(cur.a3, p, 2), -_exact(cur.a6, p, 4), p)
        if kind != "double":
            c = 3 if kind == "distinct_split" else 1
            return _result(p, "IV*", 0, c, v, minimal, None, cur, total)
        if root:
            cur, total = _shift(cur, total, 0, p * p * root, 0)
        assert _vp(cur.a3, p) >= 3 and _vp(cur.a6, p) >= 5

        if _vp(cur.a4, p) < 4:
            return _result(p, "III*", 0, 2, v, minimal, None, cur, total)
        if _vp(cur.a6, p) < 6:
            return _result(p, "II*", 0, 1, v, minimal, None, cur, total)

        # non-minimal: all a_i divisible by p^i, divide out and restart
        assert _vp(cur.a1, p) >= 1 and _vp(cur.a2, p) >= 2
        rescale = Transform(p, 0, 0, 0)
        cur = apply_transform(cur, rescale)
        assert cur.is_integral()
        total = total.then(rescale)
        minimal = False


def _shift(cur, total, r, t, s=0):
    tr = Transform(1, r, s, t)
    nxt = apply_transform(cur, tr)
    assert nxt.is_integral()
    return nxt, total.then(tr)


def _exact(n: int, p: int, k: int) -> int:
    q, r = divmod(n, p**k)
    assert r == 0, f"{n} is not divisible by {p}^{k}"
    return q


def _normalize(cur, total, p):
    """Arrange v(a1)>=1, v(a2)>=1, v(a3)>=2, v(a4)>=2, v(a6)>=3."""
    if p == 2:
        assert cur.a1 % 2 == 0  # b2 = a1^2 + 4 a2 is even here
        s = cur.a2 % 2
        # v(b6)>=3 with v(a6)>=2 forces v(a3)>=2 already; pick t in {0,2}
        assert _vp(cur.a3, 2) >= 2
        t = 2 * (_exact(cur.a6, 2, 2) % 2)
    else:
        inv2 = pow(2, -1, p)
        s = -cur.a1 * inv2 % p
        t = -cur.a3 * pow(2, -1, p * p) % (p * p)
    cur, total = _shift(cur, total, 0, t, s)
    assert _vp(cur.a1, p) >= 1 and _vp(cur.a2, p) >= 1
    assert _vp(cur.a3, p) >= 2 and _vp(cur.a4, p) >= 2 and _vp(cur.a6, p) >= 3
    return cur, total


def _in_star(cur, total, p, v, minimal):
    """The I_n* chain: alternate Y- and X-direction tests, translating on
    double roots, until a quadratic with distinct roots appears."""
    n = 1
    mx = my = p * p
    while True:
        assert n <= v - 4, "I_n* chain exceeded the discriminant bound"
        kind, root = _quad(1, _exact(cur.a3, p, _ilog(my, p)), -_exact(cur.a6, p, _ilog(mx * my, p)), p)
        if kind != "double":
            c = 4 if kind == "distinct_split" else 2
            break
        if root:
            cur, total = _shift(cur, total, 0, my * root, 0)
        my *= p
        n += 1

        kind, root = _quad(
            _exact(cur.a2, p, 1),
            _exact(cur.a4, p, 1 + _ilog(mx, p)),
            _exact(cur.a6, p, _ilog(mx * my, p)),
            p,
        )
        if kind != "double":
            c = 4 if kind == "distinct_split" else 2
            break
        if root:
            cur, total = _shift(cur, total, mx * root, 0, 0)
        mx *= p
        n += 1
    return _result(p, f"I{n}*", n, c, v, minimal, None, cur, total)


def _ilog(q: int, p: int) -> int:
    k = 0
    while q % p == 0:
        q //= p
        k += 1
    assert q == 1
    return k


# ---------------------------------------------------------------------------


def conductor(e: WeierstrassModel) -> int:
    """Conductor of E/Q (the model need not be minimal, only integral up to
    clearing denominators)."""
    e = e.integral_model()[0]
    n = 1
    for p in factor(abs(int(e.disc))).primes():
        n *= p ** tate_algorithm(e, p).f
    return n


def reduction_point_count(e: WeierstrassModel, p: int) -> int:
    """#E(F_p) for a model with good reduction at p (counts naively)."""
    res = tate_algorithm(e, p)
    if res.f != 0:
        raise ValueError(f"bad reduction at {p} (type {res.kodaira})")
    a1, a2, a3, a4, a6 = (a % p for a in res.model.coefficients())
    count = 1
    for x in range(p):
        rhs = (((x + a2) * x + a4) * x + a6) % p
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y - rhs) % p == 0:
                count += 1
    return count


def hasse_bound_check_at_2(e: WeierstrassModel, claimed_order: int) -> bool:
    """Whether a rational torsion subgroup of the claimed order survives the
    injection into E(F_2).  Requires good reduction at 2; #E(F_2) <= 5, so
    claimed orders >= 6 always fail."""
    if claimed_order < 1:
        raise ValueError("order must be positive")
    count = reduction_point_count(e, 2)
    assert count <= 5  # Hasse: |#E(F_2) - 3| <= 2*sqrt(2)
    return count % claimed_order == 0
