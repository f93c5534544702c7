"""q-Pochhammer products, Euler functions f_m, and eta quotients.

All builders materialize truncated products by chaining sparse binomial
multiplies/divides, so every factor costs O(N) and no dense inversion is
needed. The pentagonal series is the independent cross-check for f_m.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import (
    EXACT,
    CoefficientRing,
    Series,
    mul_sparse_binomial,
    one_series,
)


def _check_sign(sign: int) -> None:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")


def pochhammer_inf(sign: int, s: int, m: int, order: int,
                   ring: CoefficientRing = EXACT) -> Series:
    """(sign*q^s; q^m)_inf = prod over j >= 0 of (1 - sign*q^(s+jm))."""
    _check_sign(sign)
    if s < 1:
        raise ValueError("offset s must be >= 1 so the product is a unit")
    if m < 1:
        raise ValueError("step m must be >= 1")
    out = one_series(ring, order)
    for j in range(s, order, m):
        out = mul_sparse_binomial(out, -sign, j)
    return out


def pochhammer_fin(sign: int, s: int, m: int, n: int, order: int,
                   ring: CoefficientRing = EXACT) -> Series:
    """(sign*q^s; q^m)_n = prod over 0 <= j < n of (1 - sign*q^(s+jm))."""
    _check_sign(sign)
    if s < 1 or m < 1:
        raise ValueError("offsets and steps must be >= 1")
    if n < 0:
        raise ValueError("factor count n must be >= 0")
    out = one_series(ring, order)
    for j in range(n):
        e = s + j * m
        if e >= order:
            break
        out = mul_sparse_binomial(out, -sign, e)
    return out


def euler_fm(m: int, order: int, ring: CoefficientRing = EXACT) -> Series:
    """f_m = (q^m; q^m)_inf."""
    return pochhammer_inf(1, m, m, order, ring)


def eta_quotient(exponents: dict[int, int], order: int,
                 ring: CoefficientRing = EXACT) -> Series:
    """prod over m of f_m^(e_m); all multiplies happen before any divide."""
    out = one_series(ring, order)
    items = sorted(exponents.items())
    for m, e in items:
        if m < 1:
            raise ValueError(f"eta index must be >= 1, got {m}")
        if e > 0:
            out = _fm_apply(out, m, e, "multiply")
    for m, e in items:
        if e < 0:
            out = _fm_apply(out, m, -e, "divide")
    return out


def _fm_apply(a: Series, m: int, reps: int, direction: str) -> Series:
    for _ in range(reps):
        for j in range(m, a.order, m):
            a = mul_sparse_binomial(a, -1, j, direction)
    return a


def pentagonal_series(m: int, order: int, ring: CoefficientRing = EXACT) -> Series:
    """f_m by Euler's pentagonal number theorem:
    sum over all integers j of (-1)^j * q^(m*j*(3j-1)/2)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    coeffs = [0] * order
    j = 0
    while True:
        hit = False
        for jj in (j, -j) if j else (0,):
            e = m * jj * (3 * jj - 1) // 2
            if e < order:
                coeffs[e] += -1 if j % 2 else 1
                hit = True
        if not hit:
            break
        j += 1
    return Series(ring, coeffs)


@dataclass(frozen=True)
class ProductSpec:
    """Symbolic product prod of (sign*q^s; q^m)_inf^e, built on demand."""

    factors: tuple[tuple[int, int, int, int], ...]  # (sign, s, m, e)

    def __post_init__(self) -> None:
        for sign, s, m, e in self.factors:
            _check_sign(sign)
            if s < 1 or m < 1:
                raise ValueError("every factor needs s >= 1 and m >= 1")
            if e == 0:
                raise ValueError("zero exponents must be omitted")

    def build(self, order: int, ring: CoefficientRing = EXACT) -> Series:
        out = one_series(ring, order)
        for sign, s, m, e in self.factors:
            direction = "multiply" if e > 0 else "divide"
            for _ in range(abs(e)):
                for j in range(s, order, m):
                    out = mul_sparse_binomial(out, -sign, j, direction)
        return out
