"""Shared helpers and independent oracles for the test suite.

Everything here recomputes quantities from first principles (literal
enumeration, Euler's criterion, divisor sums) so the library is always
checked against a second route.
"""

from collections import Counter
from fractions import Fraction
from math import isqrt

import numpy as np


def primes_up_to(n: int) -> list[int]:
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    return np.flatnonzero(sieve).tolist()


def chi_euler(x: int, p: int) -> int:
    """Legendre symbol by Euler's criterion, one modular power per query."""
    x %= p
    if x == 0:
        return 0
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


def curve_point_count(p: int, lam: int) -> int:
    """Literal count of points on y^2 = (x-1)(x^2+lam) over F_p, plus infinity."""
    solutions = Counter(y * y % p for y in range(p))
    total = 1
    for x in range(p):
        total += solutions[((x - 1) * (x * x + lam)) % p]
    return total


def hurwitz_star_by_divisors(d: int, class_number) -> Fraction:
    """H*(D) recomputed from the f^2-divisor sum over primitive class numbers."""
    if d == 0:
        return Fraction(-1, 12)
    if d < 0 or d % 4 in (1, 2):
        return Fraction(0)
    total = Fraction(0)
    f = 1
    while f * f <= d:
        if d % (f * f) == 0:
            rest = d // (f * f)
            if rest % 4 in (0, 3):
                h, omega = class_number(rest)
                total += Fraction(h, omega)
        f += 1
    return total


def two_squares_exhaustive(p: int) -> list[tuple[int, int]]:
    """All (a odd, b > 0) with a^2 + b^2 = p, by full scan."""
    found = []
    for a in range(1, isqrt(p) + 1, 2):
        rest = p - a * a
        if rest <= 0:
            break
        b = isqrt(rest)
        if b * b == rest:
            found.append((a, b))
    return found


def mu_bat_quadrature(a: float, b: float, density_f) -> float:
    """Independent oracle: adaptive quadrature of f/4pi with the integrable
    poles declared as interior break points."""
    import math

    from scipy.integrate import quad

    def f(t):
        value = density_f(t)
        return value / (4.0 * math.pi) if math.isfinite(value) else 0.0

    interior = [x for x in (-1.0, 0.0, 1.0) if a < x < b]
    value, err = quad(f, a, b, points=interior or None, limit=300)
    assert err < 1e-7  # well inside the 1e-6 comparison tolerance
    return value


def mertens_by_scan(s: int, m: int, n: int) -> int:
    """Lattice correction coefficient by direct (t, r) enumeration."""
    root = isqrt(s)
    k = 2 * m + 1
    total = 0
    for t in range(1, (n + 1) // (2 * root) + 1):
        diff = s * t * t - n
        if diff < 1:
            continue
        r = isqrt(diff)
        if r * r == diff and r >= 1:
            total += 2 * (root * t - r) ** k
    q, rem = divmod(n, s)
    if rem == 0:
        base = isqrt(q)
        if base >= 1 and base * base == q:
            total += (root * base) ** k
    return total
