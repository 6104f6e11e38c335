"""Truncated Laurent series in q over the integers or the integers mod m.

A :class:`TruncSeries` stores a dense block of coefficients starting at its
valuation and an exclusive truncation order: the coefficient of q**e is known
exactly for every e < order and unknown from there on.  Every operation
returns the largest order it can guarantee, and nothing is ever normalized
behind the caller's back (leading zeros are kept).  Compare series with
:func:`equal_up_to`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import _kernels as K
from ._kernels import InexactDivisionError

__all__ = [
    "RingSpec",
    "EXACT",
    "TruncSeries",
    "SeriesError",
    "RingMismatchError",
    "TruncationError",
    "NonUnitError",
    "InexactDivisionError",
    "make_series",
    "monomial",
    "add",
    "sub",
    "neg",
    "scale",
    "mul",
    "invert",
    "pow_int",
    "substitute_power",
    "shift",
    "truncate",
    "component",
    "dissect",
    "reduce_mod",
    "coeff",
    "equal_up_to",
    "first_difference",
]

# residues at or above this are stored as Python ints, not int64
_WORD_MODULUS_LIMIT = 1 << 31


class SeriesError(ValueError):
    pass


class RingMismatchError(SeriesError):
    pass


class TruncationError(SeriesError):
    """A coefficient at or beyond the truncation order was requested."""


class NonUnitError(SeriesError, ArithmeticError):
    pass


@dataclass(frozen=True)
class RingSpec:
    """Coefficient ring: exact integers (``modulus=None``) or Z/mZ."""

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None and (int(self.modulus) != self.modulus or self.modulus < 2):
            raise SeriesError(f"modulus must be an integer >= 2, got {self.modulus!r}")

    @classmethod
    def exact(cls) -> "RingSpec":
        return cls(None)

    @classmethod
    def modular(cls, m: int) -> "RingSpec":
        return cls(int(m))

    @property
    def kind(self) -> str:
        return "ExactInteger" if self.modulus is None else "Modular"

    @property
    def is_exact(self) -> bool:
        return self.modulus is None

    @property
    def dtype(self):
        if self.modulus is None or self.modulus >= _WORD_MODULUS_LIMIT:
            return object
        return np.int64

    def __str__(self):
        return "ZZ" if self.modulus is None else f"ZZ/{self.modulus}"


EXACT = RingSpec.exact()


class TruncSeries:
    """Immutable truncated Laurent series; see the module docstring."""

    __slots__ = ("ring", "valuation", "coeffs")

    def __init__(self, ring: RingSpec, valuation: int, coeffs: np.ndarray):
        # trusted constructor: coeffs already reduced and of ring.dtype
        coeffs.flags.writeable = False
        self.ring = ring
        self.valuation = int(valuation)
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return self.valuation + len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, e: int) -> int:
        return coeff(self, e)

    def tolist(self) -> list:
        return [int(c) for c in self.coeffs]

    def terms(self):
        """Yield (exponent, coefficient) for the nonzero stored terms."""
        for i in np.flatnonzero(self.coeffs):
            yield self.valuation + int(i), int(self.coeffs[i])

    def __repr__(self):
        shown = []
        for e, c in self.terms():
            shown.append(f"{c}*q^{e}")
            if len(shown) == 6:
                shown.append("...")
                break
        body = " + ".join(shown) if shown else "0"
        return f"TruncSeries({body} + O(q^{self.order}) over {self.ring})"

    def __add__(self, other):
        if isinstance(other, int):
            other = monomial(self.ring, 0, self.order, other)
        return add(self, other) if isinstance(other, TruncSeries) else NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        return sub(self, other) if isinstance(other, TruncSeries) else NotImplemented

    def __rsub__(self, other):
        return neg(self) + other

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return scale(self, int(other))
        return mul(self, other) if isinstance(other, TruncSeries) else NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, np.integer)):
            return scale(self, int(other))
        return NotImplemented

    def __pow__(self, r):
        return pow_int(self, r)

    # series are compared up to truncation, never by identity of storage
    __hash__ = None

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if self.ring != other.ring:
            return False
        n = min(self.order, other.order)
        return equal_up_to(self, other, n)


def _array(ring: RingSpec, values) -> np.ndarray:
    m = ring.modulus
    vals = [int(v) for v in values]
    if m is not None:
        vals = [v % m for v in vals]
    if ring.dtype is object:
        out = np.empty(len(vals), dtype=object)
        out[:] = vals
        return out
    return np.array(vals, dtype=np.int64)


def _zero(ring, order, valuation=None):
    valuation = order if valuation is None else valuation
    return TruncSeries(ring, valuation, K.zeros(order - valuation, ring.dtype))


def make_series(ring: RingSpec, valuation: int, coeffs: Sequence[int], order: int) -> TruncSeries:
    """Build a series from coefficients of q**valuation .. q**(order-1)."""
    if len(coeffs) != order - valuation or order < valuation:
        raise SeriesError(
            f"expected {order - valuation} coefficients for valuation {valuation} "
            f"and order {order}, got {len(coeffs)}"
        )
    return TruncSeries(ring, valuation, _array(ring, coeffs))


def monomial(ring: RingSpec, exponent: int, order: int, c: int = 1) -> TruncSeries:
    """c*q**exponent known exactly below ``order``."""
    if order <= exponent:
        return _zero(ring, order, min(exponent, order))
    values = [0] * (order - exponent)
    values[0] = c
    return make_series(ring, exponent, values, order)


def _check_ring(f, g):
    if f.ring != g.ring:
        raise RingMismatchError(f"ring mismatch: {f.ring} vs {g.ring}")


def _window(f: TruncSeries, lo: int, hi: int) -> np.ndarray:
    """Coefficients of q**lo .. q**(hi-1); requires hi <= f.order."""
    out = K.zeros(hi - lo, f.ring.dtype)
    a = max(lo, f.valuation)
    if a < hi:
        out[a - lo:hi - lo] = f.coeffs[a - f.valuation:hi - f.valuation]
    return out


def add(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    _check_ring(f, g)
    v = min(f.valuation, g.valuation)
    order = min(f.order, g.order)
    out = K.reduce(_window(f, v, order) + _window(g, v, order), f.ring.modulus)
    return TruncSeries(f.ring, v, out)


def neg(f: TruncSeries) -> TruncSeries:
    return TruncSeries(f.ring, f.valuation, K.reduce(-f.coeffs, f.ring.modulus))


def sub(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    return add(f, neg(g))


def scale(f: TruncSeries, c: int) -> TruncSeries:
    m = f.ring.modulus
    if m is not None:
        c %= m
    return TruncSeries(f.ring, f.valuation, K.reduce(f.coeffs * c, m))


def mul(f: TruncSeries, g: TruncSeries, method: str = "auto") -> TruncSeries:
    """Cauchy product; the order is min(val f + order g, val g + order f)."""
    _check_ring(f, g)
    n = min(len(f), len(g))
    out = K.convolve(f.coeffs, g.coeffs, n, f.ring.modulus, f.ring.dtype, method)
    return TruncSeries(f.ring, f.valuation + g.valuation, out)


def _lead_inverse(f: TruncSeries) -> int:
    if len(f) == 0:
        raise NonUnitError("cannot invert a series with no known coefficients")
    c = int(f.coeffs[0])
    m = f.ring.modulus
    if not K.is_unit(c, m):
        where = f"at q^{f.valuation}"
        raise NonUnitError(f"leading coefficient {c} {where} is not a unit in {f.ring}")
    return c if m is None else pow(c, -1, m)


def invert(f: TruncSeries, method: str = "auto") -> TruncSeries:
    """1/f, known to order -val(f) + (order(f) - val(f)).

    ``method`` is "recurrence", "newton" or "auto"; both divide only by the
    leading unit, so they work in every modular ring.
    """
    inv_lead = _lead_inverse(f)
    n = len(f)
    g = K.invert(f.coeffs, n, f.ring.modulus, f.ring.dtype, inv_lead, method)
    return TruncSeries(f.ring, -f.valuation, g)


def _strip(f: TruncSeries) -> TruncSeries:
    nz = np.flatnonzero(f.coeffs)
    if nz.size == 0 or nz[0] == 0:
        return f
    k = int(nz[0])
    return TruncSeries(f.ring, f.valuation + k, f.coeffs[k:].copy())


def _one(ring, length, valuation=0):
    out = K.zeros(length, ring.dtype)
    if length:
        out[0] = 1
    return TruncSeries(ring, valuation, out)


def pow_int(f: TruncSeries, r: int, method: str = "auto") -> TruncSeries:
    """f**r for any integer r.

    Exact ring: Miller recurrence (one exact division per coefficient).
    Modular ring: binary exponentiation, inverting first when r < 0.
    ``method="binary"`` forces the multiplication route in either ring.
    """
    r = int(r)
    if r == 0:
        return _one(f.ring, len(f))
    if r < 0:
        _lead_inverse(f)
    if f.ring.is_exact and method in ("auto", "miller"):
        h = _strip(f) if r > 0 else f
        if len(h) == 0 or h.coeffs[0] == 0:
            # the zero series: every power is zero to at least r*val + len
            return _zero(f.ring, r * f.valuation + len(f), r * f.valuation)
        out = K.miller_power(h.coeffs, len(h), r)
        return TruncSeries(f.ring, r * h.valuation, out)
    base = invert(f) if r < 0 else f
    return _binary_power(base, abs(r))


def _binary_power(f, e):
    result = None
    square = f
    while True:
        if e & 1:
            result = square if result is None else mul(result, square)
        e >>= 1
        if not e:
            return result
        square = mul(square, square)


def substitute_power(f: TruncSeries, k: int) -> TruncSeries:
    """f(q**k)."""
    if k < 1:
        raise SeriesError(f"substitution power must be >= 1, got {k}")
    if k == 1:
        return f
    out = K.zeros(k * len(f), f.ring.dtype)
    out[::k] = f.coeffs
    return TruncSeries(f.ring, k * f.valuation, out)


def shift(f: TruncSeries, d: int) -> TruncSeries:
    """q**d * f."""
    return TruncSeries(f.ring, f.valuation + d, f.coeffs)


def truncate(f: TruncSeries, order: int) -> TruncSeries:
    """Forget coefficients from q**order on."""
    if order > f.order:
        raise TruncationError(f"cannot raise order {f.order} to {order}")
    if order <= f.valuation:
        return _zero(f.ring, order)
    return TruncSeries(f.ring, f.valuation, f.coeffs[:order - f.valuation].copy())


def component(f: TruncSeries, m: int, j: int) -> TruncSeries:
    """Terms of f whose exponent is congruent to j mod m, kept in place."""
    if m < 1:
        raise SeriesError(f"modulus of the component must be >= 1, got {m}")
    out = K.zeros(len(f), f.ring.dtype)
    start = (j - f.valuation) % m
    out[start::m] = f.coeffs[start::m]
    return TruncSeries(f.ring, f.valuation, out)


def dissect(f: TruncSeries, m: int, j: int) -> TruncSeries:
    """Series whose n-th coefficient is that of q**(m*n + j) in f."""
    if m < 1 or not 0 <= j < m:
        raise SeriesError(f"need m >= 1 and 0 <= j < m, got m={m}, j={j}")
    if f.valuation < 0:
        raise SeriesError(
            f"dissect needs an ordinary series (valuation {f.valuation} < 0); use component"
        )
    order = max(K.ceil_div(f.order - j, m), 0)
    out = _window(f, 0, f.order)[j::m][:order]
    return TruncSeries(f.ring, 0, out.copy())


def reduce_mod(f: TruncSeries, m: int) -> TruncSeries:
    """Map an exact series (or one mod a multiple of m) into Z/mZ."""
    if m < 2:
        raise SeriesError(f"modulus must be >= 2, got {m}")
    if not f.ring.is_exact and f.ring.modulus % m:
        raise RingMismatchError(f"cannot reduce {f.ring} modulo {m}")
    ring = RingSpec.modular(m)
    return TruncSeries(ring, f.valuation, _array(ring, f.coeffs))


def coeff(f: TruncSeries, e: int) -> int:
    if e >= f.order:
        raise TruncationError(f"coefficient of q^{e} is beyond the truncation order {f.order}")
    if e < f.valuation:
        return 0
    return int(f.coeffs[e - f.valuation])


def equal_up_to(f: TruncSeries, g: TruncSeries, n: int) -> bool:
    """True iff f and g agree on every coefficient of q**e with e < n."""
    _check_ring(f, g)
    if f.order < n or g.order < n:
        raise TruncationError(
            f"comparison to q^{n} needs both orders >= {n}, got {f.order} and {g.order}"
        )
    lo = min(f.valuation, g.valuation, n)
    return bool(np.array_equal(_window(f, lo, n), _window(g, lo, n)))


def first_difference(f: TruncSeries, g: TruncSeries, n: int):
    """(exponent, f_e - g_e) for the first disagreement below n, else None."""
    _check_ring(f, g)
    if f.order < n or g.order < n:
        raise TruncationError(
            f"comparison to q^{n} needs both orders >= {n}, got {f.order} and {g.order}"
        )
    lo = min(f.valuation, g.valuation, n)
    a, b = _window(f, lo, n), _window(g, lo, n)
    bad = np.flatnonzero(a != b)
    if bad.size == 0:
        return None
    i = int(bad[0])
    diff = int(a[i]) - int(b[i])
    if f.ring.modulus is not None:
        diff %= f.ring.modulus
    return lo + i, diff
