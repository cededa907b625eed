"""Exact integer/rational primitives shared by every other module.

Rationals are stdlib ``fractions.Fraction`` (always reduced, positive
denominator), re-exported as ``Rat``.  Primality is deterministic
Miller-Rabin over the first twelve prime bases, which is a proven-correct
witness set for everything below ~3.3e24; all searches here stay far under
that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rat = Fraction

# Deterministic Miller-Rabin witness set (first 12 primes), valid for
# n < 3_317_044_064_679_887_385_961_981.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 3_317_044_064_679_887_385_961_981

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97,
)


def num(x) -> int:
    """Absolute numerator of x in lowest terms; num(0) = 0."""
    return abs(Fraction(x).numerator)


def valuation(n: int, p: int) -> int:
    """Largest e with p**e | n, for n != 0."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def is_square(n: int) -> tuple[bool, int | None]:
    """(True, isqrt(n)) when n is a perfect square, else (False, None)."""
    if n < 0:
        return False, None
    r = math.isqrt(n)
    if r * r == n:
        return True, r
    return False, None


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n >= _MR_LIMIT:
        raise ValueError(f"{n} exceeds the deterministic primality bound")
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    seed = 1
    while True:
        seed += 1
        y, c, m = seed, seed, 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        # cycle degenerated; retry with a new constant


@dataclass(frozen=True)
class Factorization:
    """n = prod(p**e) with primes strictly increasing."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        m = 1
        last = 0
        for p, e in self.pairs:
            assert p > last and e >= 1 and is_prime(p)
            last = p
            m *= p**e
        assert m == self.n

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.pairs)

    def divisors(self) -> list[int]:
        """All positive divisors, ascending."""
        divs = [1]
        for p, e in self.pairs:
            divs = [d * p**i for d in divs for i in range(e + 1)]
        return sorted(divs)


def factor(n: int) -> Factorization:
    """Full factorization of n >= 1 (trial division + rho)."""
    if n < 1:
        raise ValueError("factor expects n >= 1")
    remaining = n
    found: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        while remaining % p == 0:
            found[p] = found.get(p, 0) + 1
            remaining //= p
    stack = [remaining] if remaining > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(n, tuple(sorted(found.items())))


def is_qr(a: int, m: int) -> bool:
    """Whether x*x = a (mod m) is solvable (any modulus m >= 1, via CRT)."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return True
    a %= m
    for p, k in factor(m).pairs:
        pk = p**k
        r = a % pk
        if r == 0:
            continue
        v = valuation(r, p)
        if v % 2 == 1:
            return False
        u = r // p**v
        if p == 2:
            w = k - v
            if w == 1:
                continue
            if w == 2 and u % 4 != 1:
                return False
            if w >= 3 and u % 8 != 1:
                return False
        elif pow(u, (p - 1) // 2, p) != 1:
            return False
    return True
