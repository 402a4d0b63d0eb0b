"""Error-free-transform double-double arithmetic.

Compiled building blocks for summing power series whose partial sums cancel
far below the largest term.  A double-double value is an unevaluated pair
(hi, lo) with |lo| <= ulp(hi)/2, carrying roughly 32 significant digits; the
primitives below are the classical Knuth two_sum and Dekker split/two_prod,
which are exact in IEEE double arithmetic (no fused ops, no reassociation --
the kernels are compiled without fastmath for that reason).

Complex double-double values are passed around as flat 4-tuples
(re_hi, re_lo, im_hi, im_lo).
"""

from numba import njit

_SPLITTER = 134217729.0  # 2**27 + 1


@njit(cache=True, nogil=True)
def two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


@njit(cache=True, nogil=True)
def quick_two_sum(a, b):
    # requires |a| >= |b|
    s = a + b
    err = b - (s - a)
    return s, err


@njit(cache=True, nogil=True)
def split(a):
    t = _SPLITTER * a
    hi = t - (t - a)
    lo = a - hi
    return hi, lo


@njit(cache=True, nogil=True)
def two_prod(a, b):
    p = a * b
    ahi, alo = split(a)
    bhi, blo = split(b)
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


@njit(cache=True, nogil=True)
def dd_add(ah, al, bh, bl):
    # accurate (IEEE-style) double-double addition; robust under cancellation
    sh, se = two_sum(ah, bh)
    th, te = two_sum(al, bl)
    se += th
    sh, se = quick_two_sum(sh, se)
    se += te
    return quick_two_sum(sh, se)


@njit(cache=True, nogil=True)
def dd_sub(ah, al, bh, bl):
    return dd_add(ah, al, -bh, -bl)


@njit(cache=True, nogil=True)
def dd_mul(ah, al, bh, bl):
    p, e = two_prod(ah, bh)
    e += ah * bl + al * bh
    return quick_two_sum(p, e)


@njit(cache=True, nogil=True)
def dd_mul_d(ah, al, b):
    p, e = two_prod(ah, b)
    e += al * b
    return quick_two_sum(p, e)


@njit(cache=True, nogil=True)
def cdd_add(a, b):
    rh, rl = dd_add(a[0], a[1], b[0], b[1])
    ih, il = dd_add(a[2], a[3], b[2], b[3])
    return (rh, rl, ih, il)


@njit(cache=True, nogil=True)
def cdd_sub(a, b):
    rh, rl = dd_sub(a[0], a[1], b[0], b[1])
    ih, il = dd_sub(a[2], a[3], b[2], b[3])
    return (rh, rl, ih, il)


@njit(cache=True, nogil=True)
def cdd_mul(a, b):
    # (ar + i ai)(br + i bi)
    p1h, p1l = dd_mul(a[0], a[1], b[0], b[1])
    p2h, p2l = dd_mul(a[2], a[3], b[2], b[3])
    p3h, p3l = dd_mul(a[0], a[1], b[2], b[3])
    p4h, p4l = dd_mul(a[2], a[3], b[0], b[1])
    rh, rl = dd_sub(p1h, p1l, p2h, p2l)
    ih, il = dd_add(p3h, p3l, p4h, p4l)
    return (rh, rl, ih, il)


@njit(cache=True, nogil=True)
def cdd_mul_dd(a, ch, cl):
    # complex-dd times real-dd constant
    rh, rl = dd_mul(a[0], a[1], ch, cl)
    ih, il = dd_mul(a[2], a[3], ch, cl)
    return (rh, rl, ih, il)


@njit(cache=True, nogil=True)
def cdd_from(re, im):
    return (re, 0.0, im, 0.0)


@njit(cache=True, nogil=True)
def cdd_mag(a):
    # cheap magnitude estimate of the leading components
    return abs(a[0]) + abs(a[2])


def dd_from_fraction(p, q):
    """Exact-to-double-double value of the rational p/q (small integers)."""
    hi = p / q
    # remainder p - hi*q computed exactly: hi*q fits an exact two_prod
    prod = hi * q
    t = _SPLITTER * hi
    hh = t - (t - hi)
    hl = hi - hh
    err = ((hh * q - prod) + hl * q)
    rem = (p - prod) - err
    lo = rem / q
    return hi, lo
