"""Constructors for the q-products used throughout: (q;q)_inf and its powers,
Euler products over arithmetic progressions, the Rogers-Ramanujan quotient
R(q), the eta quotient (q;q)_inf / (q (q^25;q^25)_inf), and Jacobi's cube.

Every constructor takes an explicit truncation order ``N`` and returns a
series known exactly below q**N.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from . import _kernels as K
from .series import (
    RingSpec,
    SeriesError,
    TruncSeries,
    invert,
    monomial,
    mul,
    pow_int,
    shift,
    substitute_power,
    truncate,
)


def _check_order(N):
    if N < 1:
        raise SeriesError(f"truncation order must be >= 1, got {N}")


def pentagonal_terms(N: int):
    """Yield (e, sign) for generalized pentagonal e = k(3k-1)/2 < N, k in Z."""
    yield 0, 1
    k = 1
    while True:
        a = k * (3 * k - 1) // 2
        if a >= N:
            return
        sign = -1 if k % 2 else 1
        yield a, sign
        b = k * (3 * k + 1) // 2
        if b < N:
            yield b, sign
        k += 1


def euler_phi(ring: RingSpec, N: int) -> TruncSeries:
    """(q;q)_inf to order N straight from the pentagonal number theorem."""
    _check_order(N)
    out = K.zeros(N, ring.dtype)
    for e, sign in pentagonal_terms(N):
        out[e] = sign
    out = K.reduce(out, ring.modulus)
    return TruncSeries(ring, 0, out)


def euler_product_ap(ring: RingSpec, a: int, m: int, N: int) -> TruncSeries:
    """(q^a; q^m)_inf = prod_{k>=0} (1 - q^(a+km)) to order N."""
    if a < 1 or m < 1:
        raise SeriesError(f"need a >= 1 and m >= 1, got a={a}, m={m}")
    _check_order(N)
    g = K.zeros(N, ring.dtype)
    g[0] = 1
    for e in range(a, N, m):
        g[e:] = K.reduce(g[e:] - g[:N - e], ring.modulus)
    return TruncSeries(ring, 0, g)


def jacobi_cube(ring: RingSpec, N: int) -> TruncSeries:
    """sum_{k>=0} (-1)^k (2k+1) q^(k(k+1)/2) to order N."""
    _check_order(N)
    out = K.zeros(N, ring.dtype)
    k = 0
    while k * (k + 1) // 2 < N:
        out[k * (k + 1) // 2] = (-1) ** k * (2 * k + 1)
        k += 1
    return TruncSeries(ring, 0, K.reduce(out, ring.modulus))


def pr_series(ring: RingSpec, r: int, N: int) -> TruncSeries:
    """Generating function of p_r(n): (q;q)_inf ** (-r), to order N."""
    if r == 0:
        raise SeriesError("p_r is defined for nonzero r only")
    _check_order(N)
    return pow_int(euler_phi(ring, N), -r)


def rogers_ramanujan(ring: RingSpec, N: int) -> TruncSeries:
    """R(q) = (q^2;q^5)(q^3;q^5) / ((q;q^5)(q^4;q^5)) to order N."""
    _check_order(N)
    num = mul(euler_product_ap(ring, 2, 5, N), euler_product_ap(ring, 3, 5, N))
    den = mul(euler_product_ap(ring, 1, 5, N), euler_product_ap(ring, 4, 5, N))
    return mul(num, invert(den))


def eta_quotient(ring: RingSpec, N: int) -> TruncSeries:
    """(q;q)_inf / (q (q^25;q^25)_inf), valuation -1, known below q**N."""
    _check_order(N)
    depth = N + 1
    phi25 = substitute_power(euler_phi(ring, K.ceil_div(depth, 25)), 25)
    body = mul(euler_phi(ring, depth), invert(truncate(phi25, depth)))
    return shift(body, -1)


@dataclass(frozen=True)
class ProductSpec:
    """q**leading_power * prod over factors (q^a; q^m)_inf ** exponent."""

    factors: Tuple[Tuple[int, int, int], ...] = ()
    leading_power: int = 0

    def __post_init__(self):
        for a, m, _ in self.factors:
            if a < 1 or m < 1:
                raise SeriesError(f"factor (q^{a}; q^{m}) needs a >= 1 and m >= 1")

    def expand(self, ring: RingSpec, N: int) -> TruncSeries:
        """The product known below q**N."""
        depth = N - self.leading_power
        if depth < 1:
            return monomial(ring, N, N)
        out = monomial(ring, 0, depth)
        for a, m, exponent in self.factors:
            if exponent:
                out = mul(out, pow_int(euler_product_ap(ring, a, m, depth), exponent))
        return shift(out, self.leading_power)
