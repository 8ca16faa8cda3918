"""Frobenius traces of the curves y^2 = (x-1)(x^2+lambda) and exact moments."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .brackets import chebyshev_coeffs
from .field import FieldContext, make_context


@dataclass(frozen=True)
class TraceTable:
    """Traces a_lambda and twist signs phi(-lambda) for lambda = 1..p-2.

    ``traces[i]`` and ``signs[i]`` belong to lambda = i+1; the singular
    members lambda = 0 and lambda = -1 are excluded.
    """

    p: int
    traces: np.ndarray  # int64
    signs: np.ndarray  # int8, values +-1

    def __len__(self) -> int:
        return self.p - 2

    def entries(self) -> Iterator[tuple[int, int, int]]:
        for i in range(self.p - 2):
            yield i + 1, int(self.traces[i]), int(self.signs[i])


def _curve_arrays(p: int) -> tuple[np.ndarray, np.ndarray]:
    x = np.arange(p, dtype=np.int64)
    return (x - 1) % p, (x * x) % p


def _trace_range(p: int, chi: np.ndarray, lo: int, hi: int) -> np.ndarray:
    """Traces for lambda in [lo, hi) via one character sum per curve."""
    u, v = _curve_arrays(p)
    out = np.empty(hi - lo, dtype=np.int64)
    w = np.empty(p, dtype=np.int64)
    for i, lam in enumerate(range(lo, hi)):
        # (x-1)(x^2+lam) stays below 2p^2 < 2^63, so a single final reduction
        # is enough; chi of the product is taken so that a vanishing factor
        # correctly yields chi(0) = 0.
        np.add(v, lam, out=w)
        np.multiply(w, u, out=w)
        np.remainder(w, p, out=w)
        out[i] = -int(chi[w].sum())
    return out


_WORKER_P: int | None = None
_WORKER_CHI: np.ndarray | None = None


def _worker_init(p: int) -> None:
    global _WORKER_P, _WORKER_CHI
    _WORKER_P = p
    _WORKER_CHI = make_context(p).chi_table


def _worker_span(span: tuple[int, int]) -> np.ndarray:
    assert _WORKER_P is not None and _WORKER_CHI is not None
    return _trace_range(_WORKER_P, _WORKER_CHI, span[0], span[1])


def clausen_trace(ctx: FieldContext, lam: int) -> int:
    """Trace p+1-#E for the curve with parameter lambda (not 0 or -1)."""
    p = ctx.p
    if lam % p in (0, p - 1):
        raise ValueError(f"lambda={lam} is a singular member (0 or -1 mod p)")
    lam %= p
    return int(_trace_range(p, ctx.chi_table, lam, lam + 1)[0])


def build_trace_table(ctx: FieldContext, workers: int = 1) -> TraceTable:
    """All p-2 traces in ascending lambda order.

    With ``workers`` > 1 the lambda range is partitioned across processes;
    results are merged in range order, so the output does not depend on the
    worker count.
    """
    p = ctx.p
    if workers <= 1 or p < 4096:
        traces = _trace_range(p, ctx.chi_table, 1, p - 1)
    else:
        spans = []
        chunk = max(1, (p - 2) // (4 * workers))
        lo = 1
        while lo < p - 1:
            hi = min(lo + chunk, p - 1)
            spans.append((lo, hi))
            lo = hi
        with ProcessPoolExecutor(
            max_workers=workers, initializer=_worker_init, initargs=(p,)
        ) as pool:
            parts = list(pool.map(_worker_span, spans))
        traces = np.concatenate(parts)
    signs = ctx.chi_table[2:p][::-1].copy()  # signs[i] = chi(p - (i+1))
    hasse = math.isqrt(4 * p)
    if int(np.abs(traces).max()) > hasse:
        raise ArithmeticError("Hasse bound violated; trace computation is broken")
    table = TraceTable(p, traces, signs)
    table.traces.setflags(write=False)
    table.signs.setflags(write=False)
    return table


@dataclass(frozen=True)
class AValue:
    """Normalized point-count error term A_mu(p) = value, an exact rational."""

    mu: int
    value: Fraction


def a_value(ctx: FieldContext, mu: int, trace: int | None = None) -> AValue:
    """A_mu(p) = phi(-lambda) (a_lambda^2 - p)/p with lambda = -(mu+1)^(-1)."""
    p = ctx.p
    if mu % p in (0, p - 1):
        raise ValueError(f"mu={mu} is outside the defined family (0 or -1 mod p)")
    mu %= p
    lam = (-pow(mu + 1, p - 2, p)) % p
    if trace is None:
        trace = clausen_trace(ctx, lam)
    sign = ctx.chi(p - lam)
    value = Fraction(sign * (trace * trace - p), p)
    if not -3 <= value <= 3:
        raise ArithmeticError(f"A_{mu}({p}) = {value} escapes [-3, 3]")
    return AValue(mu, value)


def moment(table: TraceTable, n: int, twisted: bool = False) -> int:
    """Exact 2n-th power moment, optionally twisted by phi(-lambda).

    Arbitrary precision throughout: a^(2n) reaches (4p)^n, which overflows
    fixed-width words already at modest (p, n).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    traces = table.traces.tolist()
    if twisted:
        signs = table.signs.tolist()
        return sum(s * (a * a) ** n for a, s in zip(traces, signs))
    return sum((a * a) ** n for a in traces)


def chebyshev_sum(table: TraceTable, m: int, twisted: bool = False) -> Fraction:
    """Exact sum of U_{2m}(a_lambda / 2 sqrt(p)), optionally twisted.

    Only even powers of the argument occur, so each term is a rational with
    denominator (4p)^m; the sum is assembled over a common denominator.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    p = table.p
    coeffs = chebyshev_coeffs(2 * m)
    q = 4 * p
    scale = [coeffs[2 * l] * q ** (m - l) for l in range(m + 1)]
    total = 0
    signs = table.signs.tolist() if twisted else None
    for i, a in enumerate(table.traces.tolist()):
        a2 = a * a
        acc, power = 0, 1
        for l in range(m + 1):
            acc += scale[l] * power
            power *= a2
        total += signs[i] * acc if twisted else acc
    return Fraction(total, q**m)
