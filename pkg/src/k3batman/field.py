"""Prime-field context: quadratic character table and two-square decompositions."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Deterministic Miller-Rabin witness set, valid for every n < 3.3e24 (so in
# particular for all 64-bit inputs).
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def miller_rabin_witness(n: int) -> int | None:
    """Return a witness proving ``n`` composite, or None when ``n`` is prime."""
    if n < 2:
        return n
    for small in _MR_WITNESSES:
        if n == small:
            return None
        if n % small == 0:
            return small
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return a
    return None


def is_prime(n: int) -> bool:
    return n >= 2 and miller_rabin_witness(n) is None


@dataclass(frozen=True)
class FieldContext:
    """A prime p >= 5 together with the full Legendre-symbol table.

    ``chi_table[x]`` is chi(x) in {-1, 0, +1}; the table is immutable after
    construction and safe for unlimited concurrent readers.
    """

    p: int
    chi_table: np.ndarray

    def chi(self, x: int) -> int:
        if not 0 <= x < self.p:
            raise ValueError(f"field element {x} out of range for p={self.p}")
        return int(self.chi_table[x])


def make_context(p: int) -> FieldContext:
    """Build the quadratic-character context for a prime p >= 5.

    The table is filled by marking the squares x^2 mod p for
    x = 1..(p-1)/2, which costs O(p) total instead of an Euler-criterion
    power per query.
    """
    witness = miller_rabin_witness(p) if p >= 2 else None
    if witness is not None:
        raise ValueError(f"p={p} is composite (Miller-Rabin witness {witness})")
    if p < 5:
        raise ValueError(f"p must be a prime >= 5, got {p}")
    chi = np.full(p, -1, dtype=np.int8)
    chi[0] = 0
    x = np.arange(1, (p - 1) // 2 + 1, dtype=np.int64)
    chi[(x * x) % p] = 1
    table = FieldContext(p, chi)
    table.chi_table.setflags(write=False)
    return table


def two_squares(p: int) -> tuple[int, int] | None:
    """Write p = a^2 + b^2 with a odd and b > 0; None when p = 3 (mod 4).

    Uses Cornacchia's descent: take a square root of -1 mod p, then run the
    Euclidean algorithm on (p, root) until the remainder drops below sqrt(p).
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"p must be a prime >= 5, got {p}")
    if p % 4 != 1:
        return None
    n = 2
    while pow(n, (p - 1) // 2, p) != p - 1:
        n += 1
    root = pow(n, (p - 1) // 4, p)
    hi, lo = p, root
    while lo * lo > p:
        hi, lo = lo, hi % lo
    other = math.isqrt(p - lo * lo)
    if lo * lo + other * other != p:  # cannot happen for prime p = 1 (mod 4)
        raise ArithmeticError(f"two-square descent failed for p={p}")
    a, b = (lo, other) if lo % 2 == 1 else (other, lo)
    return a, b
