"""Truncated convolution and inversion kernels.

Every kernel returns the first ``n`` coefficients of its result as a numpy
array of the ring's dtype, already reduced into the ring.  The schoolbook
kernel is the reference; the faster ones must agree with it bit for bit.
"""

import math

import numpy as np

# products of this many bits or fewer survive a float64 FFT round trip
_FFT_SAFE_BITS = 42
_FFT_MIN_LEN = 48
_KRONECKER_MIN_LEN = 48
# recurrence inversion is used while nnz(f) * n stays below this
_RECURRENCE_BUDGET = 2_000_000


def reduce(arr, modulus):
    if modulus is None:
        return arr
    return arr % modulus


def zeros(n, dtype):
    if dtype is object:
        out = np.empty(n, dtype=object)
        out.fill(0)
        return out
    return np.zeros(n, dtype=dtype)


def schoolbook(a, b, n, modulus, dtype):
    """Plain double loop over Python ints; the reference convolution."""
    out = [0] * n
    a = [int(x) for x in a[:n]]
    b = [int(x) for x in b[:n]]
    for i, x in enumerate(a):
        if not x:
            continue
        for j in range(min(len(b), n - i)):
            out[i + j] += x * b[j]
    if modulus is not None:
        out = [c % modulus for c in out]
    return np.array(out, dtype=dtype) if n else zeros(0, dtype)


def _sparse_rows(a, b, n, dtype):
    # one vectorized row per nonzero entry of the sparser operand
    if np.count_nonzero(a) > np.count_nonzero(b):
        a, b = b, a
    out = zeros(n, dtype)
    for i in np.flatnonzero(a):
        i = int(i)
        if i >= n:
            break
        m = min(len(b), n - i)
        out[i:i + m] += a[i] * b[:m]
    return out


def kronecker(a, b, n):
    """Exact signed integer convolution by packing into one big integer."""
    a = [int(x) for x in a]
    b = [int(x) for x in b]
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    width = (bound.bit_length() + 2 + 7) // 8
    half = 1 << (8 * width - 1)

    def bias(length):
        return int.from_bytes(half.to_bytes(width, "little") * length, "little")

    def pack(coeffs):
        raw = b"".join((c + half).to_bytes(width, "little") for c in coeffs)
        return int.from_bytes(raw, "little") - bias(len(coeffs))

    total = len(a) + len(b) - 1
    product = pack(a) * pack(b) + bias(total)
    raw = product.to_bytes(width * total, "little")
    out = np.empty(n, dtype=object)
    for k in range(n):
        if k < total:
            out[k] = int.from_bytes(raw[k * width:(k + 1) * width], "little") - half
        else:
            out[k] = 0
    return out


def _fft(a, b, n):
    size = len(a) + len(b) - 1
    nfft = 1 << (size - 1).bit_length()
    fa = np.fft.rfft(a.astype(np.float64), nfft)
    fb = np.fft.rfft(b.astype(np.float64), nfft)
    raw = np.fft.irfft(fa * fb, nfft)[:min(n, size)]
    rounded = np.rint(raw)
    if raw.size and np.max(np.abs(raw - rounded)) > 0.25:
        return None
    out = np.zeros(n, dtype=np.int64)
    out[:rounded.size] = rounded.astype(np.int64)
    return out


def convolve(a, b, n, modulus, dtype, method="auto"):
    """First ``n`` coefficients of the product of coefficient arrays a, b."""
    a = a[:n]
    b = b[:n]
    if n <= 0 or len(a) == 0 or len(b) == 0:
        return zeros(max(n, 0), dtype)
    if method == "schoolbook":
        return schoolbook(a, b, n, modulus, dtype)
    short = min(len(a), len(b))
    if dtype is object:
        sparse = min(np.count_nonzero(a), np.count_nonzero(b))
        if short < _KRONECKER_MIN_LEN or sparse * 8 < short or method == "rows":
            out = _sparse_rows(a, b, n, object)
        else:
            out = kronecker(a, b, n)
        return reduce(out, modulus)
    # int64 residues in [0, modulus)
    bound = (modulus - 1) ** 2 * short
    if method in ("auto", "fft") and short >= _FFT_MIN_LEN and bound.bit_length() <= _FFT_SAFE_BITS:
        out = _fft(a, b, n)
        if out is not None:
            return out % modulus
    if bound.bit_length() < 63:
        full = np.convolve(a, b)[:n]
        out = np.zeros(n, dtype=np.int64)
        out[:full.size] = full
        return out % modulus
    out = kronecker(a, b, n)
    return np.array([c % modulus for c in out], dtype=np.int64)


def invert_recurrence(f, n, modulus, dtype, inv_lead):
    """Coefficientwise solve of f*g = 1, dividing only by the leading unit."""
    nz = [(int(k), int(f[k])) for k in np.flatnonzero(f[:n]) if k > 0]
    g = [0] * n
    g[0] = inv_lead
    for m in range(1, n):
        s = 0
        for k, fk in nz:
            if k > m:
                break
            s += fk * g[m - k]
        s = -s * inv_lead
        g[m] = s % modulus if modulus is not None else s
    return np.array(g, dtype=dtype)


def invert_newton(f, n, modulus, dtype, inv_lead):
    """Newton iteration g <- g(2 - fg); only multiplications after the seed."""
    g = zeros(1, dtype)
    g[0] = inv_lead
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        t = convolve(f, g, prec, modulus, dtype)
        t = -t
        t[0] += 2
        t = reduce(t, modulus)
        g = convolve(g, t, prec, modulus, dtype)
    return g


def invert(f, n, modulus, dtype, inv_lead, method="auto"):
    if method == "auto":
        nnz = int(np.count_nonzero(f[:n]))
        method = "recurrence" if nnz * n <= _RECURRENCE_BUDGET else "newton"
    if method == "recurrence":
        return invert_recurrence(f, n, modulus, dtype, inv_lead)
    return invert_newton(f, n, modulus, dtype, inv_lead)


def miller_power(f, n, r):
    """Exact integer power f**r by the J.C.P. Miller recurrence.

    ``f[0]`` must be nonzero (and ±1 when r < 0).  Each step divides by
    ``k * f[0]``; a remainder means a bug upstream, never bad input.
    """
    lead = int(f[0])
    nz = [(int(k), int(f[k])) for k in np.flatnonzero(f[:n]) if k > 0]
    g = [0] * n
    if r >= 0:
        g[0] = lead ** r
    else:
        g[0] = lead ** (-r)  # lead is ±1 here
    for m in range(1, n):
        s = 0
        for k, fk in nz:
            if k > m:
                break
            s += (k * (r + 1) - m) * fk * g[m - k]
        q, rem = divmod(s, m * lead)
        if rem:
            raise InexactDivisionError(
                f"Miller recurrence: {s} not divisible by {m * lead} at index {m}"
            )
        g[m] = q
    out = np.empty(n, dtype=object)
    out[:] = g
    return out


class InexactDivisionError(ArithmeticError):
    """Internal consistency failure in an exact-division recurrence."""


def ceil_div(a, b):
    return -((-a) // b)


def is_unit(c, modulus):
    if modulus is None:
        return c in (1, -1)
    return math.gcd(c, modulus) == 1
