"""Finite-depth verification of partition congruences and q-series identities.

A :class:`CongruenceClaim` ``(r, A, B, M)`` asserts p_r(A n + B) = 0 mod M for
every n >= 0.  Verification expands the generating function in Z/MZ,
dissects it along the progression and reports the first nonzero residue.
Nothing here proves anything: a pass means "holds to the stated depth".
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from .products import (
    euler_phi,
    eta_quotient,
    jacobi_cube,
    pr_series,
    rogers_ramanujan,
)
from .series import (
    EXACT,
    RingSpec,
    TruncSeries,
    component,
    dissect,
    first_difference,
    invert,
    monomial,
    mul,
    pow_int,
    reduce_mod,
    shift,
    substitute_power,
    truncate,
)

log = logging.getLogger(__name__)

HOLDS = "HoldsToDepth"
COUNTEREXAMPLE = "Counterexample"

MAX_SERIES_DEPTH = 5_000_000

# theorem id -> r(lambda) and the (A, B) progressions it asserts mod 5
THEOREMS = {
    "T1": dict(r=lambda lam: -(5 * lam + 1), progressions=[(5, 3), (5, 4)]),
    "T2": dict(r=lambda lam: -(5 * lam + 3), progressions=[(5, 2), (5, 3), (5, 4)]),
    "T3": dict(r=lambda lam: -(5 * lam + 4), progressions=[(5, 4)]),
    "T4": dict(r=lambda lam: -(25 * lam + 1), progressions=[(25, 5 * l + 1) for l in range(1, 5)]),
    "T5": dict(r=lambda lam: -(25 * lam + 2), progressions=[(25, 5 * l + 2) for l in range(1, 5)]),
}

H5_CONSTANTS = {1: -1, 2: -1, 3: 5, 4: -5}


@dataclass(frozen=True)
class CongruenceClaim:
    """p_r(A*n + B) = 0 (mod M) for all n >= 0."""

    r: int
    A: int
    B: int
    M: int

    def __post_init__(self):
        if self.r == 0:
            raise ValueError("r must be nonzero")
        if self.A < 1:
            raise ValueError(f"A must be positive, got {self.A}")
        if not 0 <= self.B < self.A:
            raise ValueError(f"B must satisfy 0 <= B < A, got B={self.B}, A={self.A}")
        if self.M < 2:
            raise ValueError(f"M must be >= 2, got {self.M}")

    def __str__(self):
        return f"p_{self.r}({self.A}n+{self.B}) = 0 mod {self.M}"

    def to_dict(self):
        return {"r": self.r, "A": self.A, "B": self.B, "M": self.M}


@dataclass(frozen=True)
class VerifyReport:
    claim: Union[CongruenceClaim, str]
    depth: int
    status: str
    witness: Optional[Tuple[int, int]] = None
    detail: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in (HOLDS, COUNTEREXAMPLE):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == COUNTEREXAMPLE and (self.witness is None or self.witness[1] == 0):
            raise ValueError("a counterexample needs a witness with a nonzero value")

    @property
    def holds(self) -> bool:
        return self.status == HOLDS

    def to_dict(self):
        claim = self.claim.to_dict() if isinstance(self.claim, CongruenceClaim) else self.claim
        witness = None
        if self.witness is not None:
            witness = {"n": self.witness[0], "value": str(self.witness[1])}
        return {
            "claim": claim,
            "depth": self.depth,
            "status": self.status,
            "witness": witness,
            "detail": {k: str(v) for k, v in self.detail.items()},
        }


def _series_depth(claim: CongruenceClaim, n_max: int) -> int:
    depth = claim.A * n_max + claim.B + 1
    if depth > MAX_SERIES_DEPTH:
        raise ValueError(
            f"verifying {claim} to n={n_max} needs series order {depth}, "
            f"above the limit {MAX_SERIES_DEPTH}"
        )
    return depth


def _check_progression(series: TruncSeries, claim: CongruenceClaim, n_max: int) -> VerifyReport:
    sub = dissect(series, claim.A, claim.B)
    values = sub.coeffs[: n_max + 1]
    if series.ring.modulus != claim.M:
        values = np.array([int(v) % claim.M for v in values], dtype=object)
    bad = np.flatnonzero(values)
    if bad.size:
        n = int(bad[0])
        return VerifyReport(claim, n_max, COUNTEREXAMPLE, (n, int(values[n])))
    return VerifyReport(claim, n_max, HOLDS)


def verify_claim(claim: CongruenceClaim, n_max: int, ring: Optional[RingSpec] = None) -> VerifyReport:
    """Check p_r(A n + B) mod M for 0 <= n <= n_max.

    ``ring`` defaults to Z/MZ; pass ``EXACT`` to expand over the integers and
    reduce afterwards (slower, for auditing the modular path).
    """
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    depth = _series_depth(claim, n_max)
    ring = RingSpec.modular(claim.M) if ring is None else ring
    return _check_progression(pr_series(ring, claim.r, depth), claim, n_max)


def theorem_claims(theorem: str, lam: int) -> List[CongruenceClaim]:
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem id {theorem!r}; expected one of {sorted(THEOREMS)}")
    spec = THEOREMS[theorem]
    r = spec["r"](lam)
    if r == 0:
        return []
    return [CongruenceClaim(r, A, B, 5) for A, B in spec["progressions"]]


def verify_theorem(theorem: str, lambda_min: int, lambda_max: int, n_max: int) -> List[VerifyReport]:
    """Expand a theorem over lambda_min..lambda_max (negative lambda included)."""
    if lambda_min > lambda_max:
        raise ValueError(f"empty lambda range [{lambda_min}, {lambda_max}]")
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    reports = []
    for lam in range(lambda_min, lambda_max + 1):
        claims = theorem_claims(theorem, lam)
        if not claims:
            log.warning("%s: lambda=%d gives r=0, skipped", theorem, lam)
            continue
        depth = max(_series_depth(c, n_max) for c in claims)
        series = pr_series(RingSpec.modular(5), claims[0].r, depth)
        reports.extend(_check_progression(series, c, n_max) for c in claims)
    return reports


def _identity_report(name, lhs, rhs, n, **detail):
    diff = first_difference(lhs, rhs, n)
    if diff is None:
        return VerifyReport(name, n, HOLDS, detail=detail)
    return VerifyReport(name, n, COUNTEREXAMPLE, diff, detail=detail)


def check_identity_dissection5(N: int) -> VerifyReport:
    """(q;q) = (q^25;q^25) (R(q^5) - q - q^2/R(q^5)) through q**(N-1)."""
    if N < 3:
        raise ValueError(f"N must be >= 3, got {N}")
    lhs = euler_phi(EXACT, N)
    r5 = truncate(substitute_power(rogers_ramanujan(EXACT, -(-N // 5)), 5), N)
    inner = r5 - monomial(EXACT, 1, N) - shift(invert(r5), 2)
    phi25 = truncate(substitute_power(euler_phi(EXACT, -(-N // 25)), 25), N)
    rhs = mul(phi25, inner)
    return _identity_report("dissection5", lhs, rhs, N)


def check_lemma_H5(k: int, N: int) -> VerifyReport:
    """H_5(eta**k) is the constant -1, -1, 5, -5 for k = 1..4."""
    if k not in H5_CONSTANTS:
        raise ValueError(f"k must be in 1..4, got {k}")
    if N < 5:
        raise ValueError(f"N must be >= 5, got {N}")
    # eta**k loses k-1 terms of precision to the negative valuation
    h = component(pow_int(eta_quotient(EXACT, N + k - 1), k), 5, 0)
    expected = monomial(EXACT, 0, h.order, H5_CONSTANTS[k])
    return _identity_report(f"lemma-h5[k={k}]", h, expected, h.order, constant=h[0])


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_frobenius(p: int, N: int) -> VerifyReport:
    """(q;q)**p = (q^p;q^p) mod p through q**(N-1)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime; the identity only holds for primes")
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    lhs = reduce_mod(pow_int(euler_phi(EXACT, N), p), p)
    rhs = reduce_mod(truncate(substitute_power(euler_phi(EXACT, -(-N // p)), p), N), p)
    return _identity_report(f"frobenius[p={p}]", lhs, rhs, N)


def check_jacobi(N: int) -> VerifyReport:
    """(q;q)**3 against the triangular-number series through q**(N-1)."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    return _identity_report("jacobi", jacobi_cube(EXACT, N), pow_int(euler_phi(EXACT, N), 3), N)


def pm4_claim(w: int) -> CongruenceClaim:
    """p_{-4}(w n - (w+1)/6) = 0 mod w, reindexed to start at n = 0."""
    if w % 6 != 5 or not is_prime(w):
        raise ValueError(f"{w} is not a prime congruent to 5 mod 6")
    return CongruenceClaim(-4, w, w - (w + 1) // 6, w)


def check_ramanujan_pm4(w_list: Iterable[int], n_max: int) -> List[VerifyReport]:
    """Check p_{-4}(w n - (w+1)/6) mod w for 1 <= n <= n_max.

    Reports use the reindexed claim, so a witness n' corresponds to
    n = n' + 1 in the original indexing.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    claims = [pm4_claim(w) for w in w_list]
    return [verify_claim(c, n_max - 1) for c in claims]


def scan(r_min: int, r_max: int, M: int, A: int, n_max: int) -> List[CongruenceClaim]:
    """Every (r, B) with p_r(A n + B) = 0 mod M for all n <= n_max.

    Results are candidates to depth n_max, not theorems.
    """
    rs = [r for r in range(r_min, r_max + 1) if r != 0]
    if not rs:
        raise ValueError(f"no nonzero r in [{r_min}, {r_max}]")
    if A < 2 or M < 2:
        raise ValueError(f"need A >= 2 and M >= 2, got A={A}, M={M}")
    if n_max < 10:
        raise ValueError(f"n_max must be >= 10 to avoid vacuous hits, got {n_max}")
    found = []
    ring = RingSpec.modular(M)
    for r in rs:
        series = pr_series(ring, r, A * (n_max + 1))
        for B in range(A):
            claim = CongruenceClaim(r, A, B, M)
            if _check_progression(series, claim, n_max).holds:
                found.append(claim)
    return found
