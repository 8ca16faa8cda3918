"""Exact Hurwitz class numbers and the class-number sides of the moment identities."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .field import two_squares


@dataclass(frozen=True)
class HurwitzTable:
    """twelve_h[D] = 12 H*(D) for 0 <= D <= d_max.

    Storing twelve times the value keeps the table integral: the unit
    weights are 1/2 and 1/3, so the denominator always divides 12.
    """

    d_max: int
    twelve_h: np.ndarray  # int64

    def star(self, d: int) -> Fraction:
        """H*(D); zero for D < 0 and off the 0,3 (mod 4) residues."""
        if d < 0:
            return Fraction(0)
        if d > self.d_max:
            raise ValueError(f"D={d} exceeds table range d_max={self.d_max}")
        return Fraction(int(self.twelve_h[d]), 12)


def hurwitz_star(table: HurwitzTable, d: int) -> Fraction:
    return table.star(d)


def class_number(d: int) -> tuple[int, int]:
    """(h, omega) for discriminant -d: h counts reduced primitive forms
    (a, b, c) with b^2 - 4ac = -d, -a < b <= a <= c and b >= 0 when a = c;
    omega is 3 for d = 3, 2 for d = 4, and 1 otherwise."""
    if d <= 0 or d % 4 in (1, 2):
        raise ValueError(f"-{d} is not a negative discriminant")
    h = 0
    a = 1
    while 3 * a * a <= d:
        four_a = 4 * a
        for b in range(-a + 1, a + 1):
            num = b * b + d
            if num % four_a:
                continue
            c = num // four_a
            if c < a or (a == c and b < 0):
                continue
            if math.gcd(math.gcd(a, b), c) == 1:
                h += 1
        a += 1
    omega = 3 if d == 3 else 2 if d == 4 else 1
    return h, omega


def build_hurwitz_table(d_max: int) -> HurwitzTable:
    """Batch-build 12 H*(D) for all D <= d_max in one reduced-form sweep.

    Every reduced form (primitive or not) of discriminant -(4ac - b^2) is
    visited once per (a, b) stratum as an arithmetic progression in c, so the
    total work is O(d_max^{3/2}) with no per-D factoring. A form contributes
    12 by default, 6 when it is a multiple of (1, 0, 1), 4 for a multiple of
    (1, 1, 1); strata with 0 < b < a < c count twice for the +-b pair.
    """
    if d_max < 0:
        raise ValueError("d_max must be >= 0")
    twelve = np.zeros(d_max + 1, dtype=np.int64)
    twelve[0] = -1
    a = 1
    while 3 * a * a <= d_max:
        four_a = 4 * a
        for b in range(a + 1):
            d0 = four_a * a - b * b  # c = a
            if d0 <= d_max:
                if b == a:
                    twelve[d0] += 4
                elif b == 0:
                    twelve[d0] += 6
                else:
                    twelve[d0] += 12
            c_max = (d_max + b * b) // four_a
            if c_max > a:
                start = four_a * (a + 1) - b * b
                stop = four_a * c_max - b * b + 1
                weight = 24 if 0 < b < a else 12
                twelve[start:stop:four_a] += weight
        a += 1
    table = HurwitzTable(d_max, twelve)
    table.twelve_h.setflags(write=False)
    return table


def c_pm(p: int, n: int, sign: str) -> int:
    """((2a)^(2n) +- (2b)^(2n)) / 2 from the two-square decomposition of p,
    zero when p = 3 (mod 4)."""
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    if n < 1:
        raise ValueError("n must be >= 1")
    squares = two_squares(p)
    if squares is None:
        return 0
    a, b = squares
    ta, tb = (2 * a) ** (2 * n), (2 * b) ** (2 * n)
    return (ta + tb) // 2 if sign == "+" else (ta - tb) // 2


def moment_rhs(table: HurwitzTable, p: int, n: int, twisted: bool = False) -> Fraction:
    """Class-number side of the 2n-th (twisted) trace moment, exact.

    Runs over even s with 0 < s < 2 sqrt(p); weights are
    2 H*((4p-s^2)/4) + H*(4p-s^2) untwisted and
    4 H*((4p-s^2)/4) - H*(4p-s^2) twisted, minus the two-square correction.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if table.d_max < 4 * p:
        raise ValueError(f"table covers D <= {table.d_max}, need 4p = {4 * p}")
    total = Fraction(0)
    for s in range(2, math.isqrt(4 * p - 1) + 1, 2):
        small = table.star(p - (s // 2) ** 2)  # (4p - s^2)/4
        big = table.star(4 * p - s * s)
        weight = 4 * small - big if twisted else 2 * small + big
        total += weight * s ** (2 * n)
    return total - c_pm(p, n, "-" if twisted else "+")
