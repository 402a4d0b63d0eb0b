"""Evaluation engine for the Airy equation's solution families.

Everything downstream (secular determinants, locus curves, zero hunts) reduces
to values of w'' = z w along rays and rotated arguments in the complex plane,
for the five families

    Ai, Bi, U- = -sqrt(3) Ai + Bi, U+ = sqrt(3) Ai + Bi, V_a = a Ai + Bi.

Two evaluation routes cover the plane:

* Taylor route, |z| <= 8.5.  The even/odd entire solutions f, g with
  f(0)=1, f'(0)=0 and g(0)=0, g'(0)=1 have hypergeometric-style series in
  w = z^3 whose coefficients obey a_k = a_{k-1}/(3k(3k-1)) and
  b_k = b_{k-1}/((3k+1)3k).  Their partial sums cancel catastrophically in the
  directions where a family is recessive (the final linear combination can sit
  thirteen decades below the largest term), so the series and the assembly
  with the frozen constants below run in error-free-transform double-double
  arithmetic and only the finished value is rounded to a complex double.

* Asymptotic route, |z| >= 8.5.  Optimally truncated Poincare expansions in
  zeta = (2/3) z^{3/2}, with the derivative coefficients v_s (not u_s; the two
  agree only at s=0) and explicit exponential scaling: results carry
  log_scale with true_value = value * exp(log_scale).  Ai is expanded
  directly for |arg z| <= 2pi/3 and assembled from two rotated evaluations
  beyond; Bi always goes through Ai via  Bi(z) = i Ai(z) +
  2 exp(-i pi/6) Ai(z exp(-2pi i/3))  (upper half plane; conjugate below),
  which keeps every sub-evaluation inside the reliable sector and never
  subtracts comparable exponentials.

Accuracy target: relative error <= 1e-12 against a higher-precision oracle for
|z| <= 20; the two routes agree to ~3e-12 throughout the overlap band
[7, 10].  Evaluation is pure and thread-safe; batched entry points release
the GIL.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .ddcore import (
    cdd_add,
    cdd_from,
    cdd_mag,
    cdd_mul,
    cdd_mul_dd,
    cdd_sub,
    dd_from_fraction,
)
from .exceptions import NonConvergence, SectorViolation, UnscaledOverflow

# ---------------------------------------------------------------------------
# frozen constants
#
# Derived once from a 50-digit evaluation of the Gamma function:
#   Gamma(1/3) = 2.678938534707747633656
#   Gamma(2/3) = 1.354117939426400416945
#   Ai(0)  =  3^(-2/3)/Gamma(2/3) = 0.3550280538878172392601
#   Ai'(0) = -3^(-1/3)/Gamma(1/3) = -0.2588194037928067984052
# Each constant is stored as an exact hi/lo double pair (hi+lo reconstructs
# the 50-digit value to ~1e-33 relative).

AI0_HI, AI0_LO = 0.3550280538878172, 2.05233632436212e-17
AIP0_HI, AIP0_LO = -0.2588194037928068, 2.522243111610832e-17
BI0_HI, BI0_LO = 0.6149266274460007, 5.0899207794891416e-17
BIP0_HI, BIP0_LO = 0.4482883573538264, -2.5363237774417305e-17
SQRT3 = 1.7320508075688772

#: series/asymptotics handover radius; the overlap band [7, 10] around it is
#: where both routes stay within ~3e-12 of each other in double precision.
SWITCH_RADIUS = 8.5

_TWO_PI_3 = 2.0943951023931953  # 2*pi/3
_HALF_SQRT3 = 0.8660254037844386
# exact-to-double rotations exp(+-2*pi*i/3) and exp(-i*pi/6)
_ROT_P = complex(-0.5, _HALF_SQRT3)
_ROT_M = complex(-0.5, -_HALF_SQRT3)
_E_M30 = complex(_HALF_SQRT3, -0.5)
_PREF = 1.0 / (2.0 * math.sqrt(math.pi))

_NMAX = 170  # Taylor term cap; reached only far outside the supported radius
_SMAX = 41  # asymptotic term cap; the optimal stop for |z|>=7 is below it


def _build_taylor_table() -> np.ndarray:
    # per-k double-double ratios for the four term chains:
    #   cols 0-1: 1/(3k(3k-1))          even solution f
    #   cols 2-3: k/((k-1) 3k (3k-1))   f'
    #   cols 4-5: 1/((3k+1) 3k)         odd solution g
    #   cols 6-7: 1/(3k (3k-2))         g'
    rt = np.zeros((_NMAX, 8))
    for k in range(1, _NMAX):
        tk = 3.0 * k
        rt[k, 0:2] = dd_from_fraction(1.0, tk * (tk - 1.0))
        if k >= 2:
            rt[k, 2:4] = dd_from_fraction(float(k), (k - 1.0) * tk * (tk - 1.0))
        rt[k, 4:6] = dd_from_fraction(1.0, (tk + 1.0) * tk)
        rt[k, 6:8] = dd_from_fraction(1.0, tk * (tk - 2.0))
    return rt


def _build_asym_tables() -> tuple[np.ndarray, np.ndarray]:
    # u_{s+1} = u_s (6s+1)(6s+3)(6s+5) / (216 (2s+1)(s+1)),  v_s = u_s (6s+1)/(1-6s)
    us = np.empty(_SMAX)
    vs = np.empty(_SMAX)
    us[0] = 1.0
    vs[0] = 1.0
    for s in range(_SMAX - 1):
        us[s + 1] = us[s] * (6 * s + 1) * (6 * s + 3) * (6 * s + 5) / (216.0 * (2 * s + 1) * (s + 1))
    for s in range(1, _SMAX):
        vs[s] = us[s] * (6 * s + 1) / (1.0 - 6 * s)
    return us, vs


_RT = _build_taylor_table()
_US, _VS = _build_asym_tables()


# ---------------------------------------------------------------------------
# compiled kernels


@njit(cache=True, nogil=True)
def _taylor_core(zr, zi, rt):
    """Double-double Ai, Ai', Bi, Bi' at one point, unrounded."""
    zc = cdd_from(zr, zi)
    z2 = cdd_mul(zc, zc)
    w = cdd_mul(z2, zc)

    # term chains and their accumulators
    tf = cdd_from(1.0, 0.0)  # a_k z^{3k}
    tfp = cdd_from(0.0, 0.0)  # a_k 3k z^{3k-1}
    tg = zc  # b_k z^{3k+1}
    tgp = cdd_from(1.0, 0.0)  # b_k (3k+1) z^{3k}
    f = tf
    fp = tfp
    g = tg
    gp = tgp

    big = max(1.0, cdd_mag(w))
    kused = _NMAX
    for k in range(1, _NMAX):
        tf = cdd_mul_dd(cdd_mul(tf, w), rt[k, 0], rt[k, 1])
        if k == 1:
            tfp = cdd_mul_dd(z2, 0.5, 0.0)
        else:
            tfp = cdd_mul_dd(cdd_mul(tfp, w), rt[k, 2], rt[k, 3])
        tg = cdd_mul_dd(cdd_mul(tg, w), rt[k, 4], rt[k, 5])
        tgp = cdd_mul_dd(cdd_mul(tgp, w), rt[k, 6], rt[k, 7])
        f = cdd_add(f, tf)
        fp = cdd_add(fp, tfp)
        g = cdd_add(g, tg)
        gp = cdd_add(gp, tgp)
        m = max(max(cdd_mag(tf), cdd_mag(tfp)), max(cdd_mag(tg), cdd_mag(tgp)))
        if m > big:
            big = m
        if k >= 6 and m < 1e-34 * big:
            kused = k
            break

    ai = cdd_add(cdd_mul_dd(f, AI0_HI, AI0_LO), cdd_mul_dd(g, AIP0_HI, AIP0_LO))
    aip = cdd_add(cdd_mul_dd(fp, AI0_HI, AI0_LO), cdd_mul_dd(gp, AIP0_HI, AIP0_LO))
    bi = cdd_add(cdd_mul_dd(f, BI0_HI, BI0_LO), cdd_mul_dd(g, BIP0_HI, BIP0_LO))
    bip = cdd_add(cdd_mul_dd(fp, BI0_HI, BI0_LO), cdd_mul_dd(gp, BIP0_HI, BIP0_LO))
    return ai, aip, bi, bip, kused


@njit(cache=True, nogil=True)
def _taylor_point(zr, zi, rt):
    """Ai, Ai', Bi, Bi' at one point by double-double Taylor summation."""
    ai, aip, bi, bip, kused = _taylor_core(zr, zi, rt)
    return (
        ai[0] + ai[1],
        ai[2] + ai[3],
        aip[0] + aip[1],
        aip[2] + aip[3],
        bi[0] + bi[1],
        bi[2] + bi[3],
        bip[0] + bip[1],
        bip[2] + bip[3],
        kused,
    )


@njit(cache=True, nogil=True)
def _taylor_wronskian(zr, zi, rt):
    """pi * W(Ai, Bi) - 1 with the cancellation done in double-double."""
    ai, aip, bi, bip, _ = _taylor_core(zr, zi, rt)
    w = cdd_sub(cdd_mul(ai, bip), cdd_mul(aip, bi))
    return complex(math.pi * (w[0] + w[1]) - 1.0, math.pi * (w[2] + w[3]))


@njit(cache=True, nogil=True)
def _asym_ai_direct(z, us, vs):
    """Scaled Ai, Ai' by the optimally truncated expansion; |arg z| <= 2pi/3."""
    lz = cmath.log(z)
    zeta = (2.0 / 3.0) * cmath.exp(1.5 * lz)
    miz = -1.0 / zeta
    sa = complex(1.0, 0.0)
    sb = complex(1.0, 0.0)
    t = complex(1.0, 0.0)
    prev = 1e308
    for s in range(1, len(us)):
        t = t * miz
        ta = t * us[s]
        m = abs(ta)
        if m >= prev:
            break
        sa += ta
        sb += t * vs[s]
        prev = m
    q4 = cmath.exp(0.25 * lz)  # z^{1/4}
    phase = cmath.exp(complex(0.0, -zeta.imag))
    val = _PREF * sa * phase / q4
    der = -_PREF * q4 * sb * phase
    return val, der, -zeta.real


@njit(cache=True, nogil=True)
def _ai_routed(z, us, vs):
    """Scaled Ai, Ai' anywhere in the closed upper half plane."""
    if math.atan2(z.imag, z.real) <= _TWO_PI_3 + 1e-13:
        return _asym_ai_direct(z, us, vs)
    # rotate both ways into the reliable sector and recombine
    v1, d1, l1 = _asym_ai_direct(z * _ROT_P, us, vs)
    v2, d2, l2 = _asym_ai_direct(z * _ROT_M, us, vs)
    ls = max(l1, l2)
    f1 = math.exp(l1 - ls)
    f2 = math.exp(l2 - ls)
    val = (-_ROT_P) * v1 * f1 + (-_ROT_M) * v2 * f2
    der = (-_ROT_M) * d1 * f1 + (-_ROT_P) * d2 * f2
    return val, der, ls


@njit(cache=True, nogil=True)
def _asym_point(zr, zi, us, vs):
    """Scaled Ai, Ai', Bi, Bi' at one point, any argument."""
    neg = zi < 0.0
    z = complex(zr, -zi if neg else zi)

    av, ad, la = _ai_routed(z, us, vs)
    # Bi(z) = i Ai(z) + 2 e^{-i pi/6} Ai(z e^{-2 pi i/3}); the rotated argument
    # lies in [-2pi/3, pi/3], inside the direct sector, and the two parts never
    # cancel exponentially anywhere in the upper half plane.
    wv, wd, lw = _asym_ai_direct(z * _ROT_M, us, vs)
    lb = max(la, lw)
    f1 = math.exp(la - lb)
    f2 = math.exp(lw - lb)
    bv = 1j * av * f1 + 2.0 * _E_M30 * wv * f2
    bd = 1j * ad * f1 + 2.0 * (_E_M30 * _ROT_M) * wd * f2

    if neg:
        av = av.conjugate()
        ad = ad.conjugate()
        bv = bv.conjugate()
        bd = bd.conjugate()
    return av, ad, la, bv, bd, lb


@njit(cache=True, nogil=True)
def _maybe_unscale(v, d, ls):
    if ls == 0.0:
        return v, d, 0.0
    m = max(abs(v), abs(d))
    if m > 0.0 and abs(ls) < 690.0:
        e = ls + math.log(m)
        if -690.0 < e < 690.0:
            s = math.exp(ls)
            return v * s, d * s, 0.0
    return v, d, ls


@njit(cache=True, nogil=True)
def _core_loop(zr, zi, mode, rt, us, vs):
    """Ai/Bi value, derivative and log-scale arrays for a batch of points.

    mode 0 routes on |z| vs the switchover radius, 1 forces the Taylor route,
    2 forces the asymptotic route.
    """
    n = zr.shape[0]
    av = np.empty(n, np.complex128)
    ad = np.empty(n, np.complex128)
    la = np.zeros(n)
    bv = np.empty(n, np.complex128)
    bd = np.empty(n, np.complex128)
    lb = np.zeros(n)
    terms = np.zeros(n, np.int64)
    for i in range(n):
        r = math.hypot(zr[i], zi[i])
        if mode == 1 or (mode == 0 and r <= SWITCH_RADIUS):
            a0, a1, p0, p1, b0, b1, q0, q1, k = _taylor_point(zr[i], zi[i], rt)
            av[i] = complex(a0, a1)
            ad[i] = complex(p0, p1)
            bv[i] = complex(b0, b1)
            bd[i] = complex(q0, q1)
            terms[i] = k
        else:
            x, xd, lx, y, yd, ly = _asym_point(zr[i], zi[i], us, vs)
            x, xd, lx = _maybe_unscale(x, xd, lx)
            y, yd, ly = _maybe_unscale(y, yd, ly)
            av[i] = x
            ad[i] = xd
            la[i] = lx
            bv[i] = y
            bd[i] = yd
            lb[i] = ly
    return av, ad, la, bv, bd, lb, terms


# ---------------------------------------------------------------------------
# public surface


@dataclass(frozen=True)
class SolutionFamily:
    """One solution of w'' = z w, written as coeff_ai * Ai + coeff_bi * Bi.

    ``kind`` is one of "Ai", "Bi", "Uminus", "Uplus", "Va"; ``a`` is the mixing
    parameter and is meaningful only for kind "Va" (U-/U+ coincide with
    Va(-sqrt3)/Va(+sqrt3)).
    """

    kind: str
    a: float | None = None

    def __post_init__(self):
        if self.kind not in ("Ai", "Bi", "Uminus", "Uplus", "Va"):
            raise ValueError(f"unknown solution family {self.kind!r}")
        if self.kind == "Va":
            if self.a is None or not math.isfinite(self.a):
                raise ValueError("family Va needs a finite real parameter a")
        elif self.a is not None:
            raise ValueError(f"family {self.kind} takes no parameter")

    @property
    def coefficients(self) -> tuple[float, float]:
        if self.kind == "Ai":
            return 1.0, 0.0
        if self.kind == "Bi":
            return 0.0, 1.0
        if self.kind == "Uminus":
            return -SQRT3, 1.0
        if self.kind == "Uplus":
            return SQRT3, 1.0
        return float(self.a), 1.0


AI = SolutionFamily("Ai")
BI = SolutionFamily("Bi")
U_MINUS = SolutionFamily("Uminus")
U_PLUS = SolutionFamily("Uplus")


def Va(a: float) -> SolutionFamily:
    return SolutionFamily("Va", float(a))


@dataclass(frozen=True)
class AiryEval:
    """A scaled function evaluation: true value = value * exp(log_scale).

    log_scale is 0 whenever the unscaled value and derivative are both
    representable in double precision; it is nonzero only deep in the
    exponential regimes, where callers should work with the scaled pair.
    """

    value: complex
    derivative: complex
    log_scale: float

    def unscaled_value(self) -> complex:
        if self.log_scale != 0.0:
            raise UnscaledOverflow(
                f"value magnitude exp({self.log_scale:.6g}) * {abs(self.value):.6g} "
                "is outside double range"
            )
        return self.value

    def unscaled_derivative(self) -> complex:
        if self.log_scale != 0.0:
            raise UnscaledOverflow(
                f"derivative magnitude exp({self.log_scale:.6g}) * {abs(self.derivative):.6g} "
                "is outside double range"
            )
        return self.derivative


def airy_pair_arrays(z: np.ndarray, force: str | None = None):
    """(Ai, Ai', log_scale_Ai, Bi, Bi', log_scale_Bi) arrays for a batch.

    ``force`` pins the route ("series"/"asymptotic") for seam diagnostics;
    the default routes on |z| against SWITCH_RADIUS.
    """
    z = np.ascontiguousarray(np.atleast_1d(np.asarray(z, dtype=np.complex128)))
    if not np.all(np.isfinite(z)):
        raise ValueError("non-finite evaluation point")
    mode = {None: 0, "series": 1, "asymptotic": 2}[force]
    av, ad, la, bv, bd, lb, terms = _core_loop(
        np.ascontiguousarray(z.real), np.ascontiguousarray(z.imag), mode, _RT, _US, _VS
    )
    if int(terms.max(initial=0)) >= _NMAX:
        raise NonConvergence(
            f"Taylor series did not reach its stopping rule within {_NMAX} terms"
        )
    return av, ad, la, bv, bd, lb


def family_arrays(z: np.ndarray, family: SolutionFamily = AI, force: str | None = None):
    """(value, derivative, log_scale, scale) arrays for one solution family.

    ``scale`` is the local evaluation scale |cA*Ai| + |cB*Bi| in the same
    scaling as ``value``; residuals of near-zero combinations should be
    measured against it.
    """
    ca, cb = family.coefficients
    av, ad, la, bv, bd, lb = airy_pair_arrays(z, force)
    if cb == 0.0:
        val, der, ls = ca * av, ca * ad, la.copy()
        scale = np.abs(val)
    elif ca == 0.0:
        val, der, ls = cb * bv, cb * bd, lb.copy()
        scale = np.abs(val)
    else:
        ls = np.maximum(la, lb)
        f1 = np.exp(la - ls)
        f2 = np.exp(lb - ls)
        val = ca * av * f1 + cb * bv * f2
        der = ca * ad * f1 + cb * bd * f2
        scale = np.abs(ca * av) * f1 + np.abs(cb * bv) * f2
    # renormalise to log_scale 0 wherever the true values are representable
    m = np.maximum(np.abs(val), np.abs(der))
    with np.errstate(divide="ignore"):
        e = ls + np.where(m > 0, np.log(np.where(m > 0, m, 1.0)), -np.inf)
    ok = (ls != 0.0) & (np.abs(ls) < 690.0) & (e > -690.0) & (e < 690.0)
    if np.any(ok):
        s = np.exp(np.where(ok, ls, 0.0))
        val = np.where(ok, val * s, val)
        der = np.where(ok, der * s, der)
        scale = np.where(ok, scale * s, scale)
        ls = np.where(ok, 0.0, ls)
    return val, der, ls, scale


def eval_airy(z: complex, family: SolutionFamily = AI, force: str | None = None) -> AiryEval:
    """Evaluate one solution family at one point.

    Routes between the double-double Taylor series (|z| <= 8.5) and the scaled
    asymptotic expansions; accurate to ~1e-12 relative for |z| <= 20 and
    well-scaled far beyond that.
    """
    val, der, ls, _ = family_arrays(complex(z), family, force)
    return AiryEval(complex(val[0]), complex(der[0]), float(ls[0]))


def evaluation_scale(z: complex, family: SolutionFamily = AI) -> float:
    """Local magnitude scale of the family's two components at z.

    Same scaling convention as eval_airy(z, family).value; used to normalise
    residuals of evaluations that sit near a zero of the family.
    """
    _, _, _, scale = family_arrays(complex(z), family)
    return float(scale[0])


def eval_phi_series(w: complex) -> tuple[complex, complex]:
    """The two auxiliary entire sums (phi0, phi1) at w.

    phi0(w) = sum_k [prod_{s<k}(2+3s)] w^k/(3k+1)! and
    phi1(w) = sum_k [prod_{s<k}(1+3s)] w^k/(3k)!; the odd/even Airy solutions
    are g(z) = z*phi0(z^3) and f(z) = phi1(z^3).  Plain compensated summation,
    truncated when both next terms drop below 1e-17 of their running sums;
    supported for |w| up to SWITCH_RADIUS**3.
    """
    w = complex(w)
    if abs(w) > SWITCH_RADIUS**3:
        raise ValueError(f"|w| = {abs(w):.3g} outside the series domain")
    s0 = _Neumaier()
    s1 = _Neumaier()
    s0.add(1.0 + 0j)
    s1.add(1.0 + 0j)
    t0 = 1.0 + 0j
    t1 = 1.0 + 0j
    for k in range(1, 501):
        tk = 3.0 * k
        t1 *= w / (tk * (tk - 1.0))
        t0 *= w / ((tk + 1.0) * tk)
        s0.add(t0)
        s1.add(t1)
        if abs(t0) <= 1e-17 * abs(s0.total()) and abs(t1) <= 1e-17 * abs(s1.total()):
            return s0.total(), s1.total()
    raise NonConvergence("phi series did not converge within 500 terms")


class _Neumaier:
    # second-order compensated accumulator for complex terms
    def __init__(self):
        self._sr = self._cr = 0.0
        self._si = self._ci = 0.0

    @staticmethod
    def _step(s, c, x):
        t = s + x
        if abs(s) >= abs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        return t, c

    def add(self, x: complex):
        self._sr, self._cr = self._step(self._sr, self._cr, x.real)
        self._si, self._ci = self._step(self._si, self._ci, x.imag)

    def total(self) -> complex:
        return complex(self._sr + self._cr, self._si + self._ci)


def asymptotic_airy(z: complex, family: SolutionFamily = AI) -> AiryEval:
    """Raw large-|z| expansion of one family, with explicit scaling.

    For Ai the single optimally truncated expansion (valid |arg z| < pi, with
    accuracy degrading beyond 2pi/3 where the recessive partner is dropped);
    for Bi its own expansion, valid only for |arg z| <= pi/3 (SectorViolation
    outside -- route through eval_airy for a connection-formula evaluation);
    the mixed families evaluate through the rotated-Ai combination used by
    eval_airy.  log_scale carries -+Re(2 z^{3/2}/3) for Ai/Bi.
    """
    z = complex(z)
    r = abs(z)
    if r < SWITCH_RADIUS:
        raise ValueError(f"|z| = {r:.3g} below the asymptotic switchover radius")
    ang = abs(cmath.phase(z))
    if family.kind == "Ai":
        if ang > math.pi - 1e-9:
            raise SectorViolation("Ai expansion undefined on the negative real cut")
        v, d, ls = _asym_ai_direct(z, _US, _VS)
        v, d, ls = _maybe_unscale(v, d, ls)
        return AiryEval(complex(v), complex(d), float(ls))
    if family.kind == "Bi":
        if ang > math.pi / 3 - 1e-9:
            raise SectorViolation(
                f"Bi expansion valid only for |arg z| <= pi/3; got {ang:.6f}"
            )
        lz = cmath.log(z)
        zeta = (2.0 / 3.0) * cmath.exp(1.5 * lz)
        iz = 1.0 / zeta
        sa = sb = 1.0 + 0j
        t = 1.0 + 0j
        prev = 1e308
        for s in range(1, _SMAX):
            t = t * iz
            ta = t * _US[s]
            if abs(ta) >= prev:
                break
            sa += ta
            sb += t * _VS[s]
            prev = abs(ta)
        q4 = cmath.exp(0.25 * lz)
        phase = cmath.exp(complex(0.0, zeta.imag))
        v = 2.0 * _PREF * sa * phase / q4
        d = 2.0 * _PREF * q4 * sb * phase
        v, d, ls = _maybe_unscale(v, d, zeta.real)
        return AiryEval(complex(v), complex(d), float(ls))
    val, der, ls, _ = family_arrays(z, family, force="asymptotic")
    return AiryEval(complex(val[0]), complex(der[0]), float(ls[0]))


def wronskian_residual(z: complex) -> float:
    """|pi * (Ai Bi' - Ai' Bi) - 1| at z; identically 0 in exact arithmetic.

    Where both functions are exponentially large the cancellation down to 1/pi
    sits far below double precision, so the residual is not formed from the
    rounded values: the Taylor route subtracts in double-double, and the
    asymptotic route uses  W(Ai, Bi)(z) = 2 exp(-i pi/6) W(Ai(z), Ai(z r))
    with r = exp(-2 pi i/3), whose two factors carry cancelling log-scales.
    """
    z = complex(z)
    if not cmath.isfinite(z):
        raise ValueError("non-finite evaluation point")
    if z.imag < 0.0:
        z = z.conjugate()  # the residual is conjugation-symmetric
    if abs(z) <= SWITCH_RADIUS:
        return abs(_taylor_wronskian(z.real, z.imag, _RT))
    av, ad, la = _ai_routed(z, _US, _VS)
    wv, wd, lw = _asym_ai_direct(z * _ROT_M, _US, _VS)
    cross = _ROT_M * av * wd - ad * wv
    w = 2.0 * _E_M30 * cross * math.exp(la + lw)
    return abs(math.pi * w - 1.0)


def warmup() -> None:
    """Force JIT compilation of the evaluation kernels."""
    airy_pair_arrays(np.array([0.5 + 0.5j, 11.0 + 3.0j]))
    airy_pair_arrays(np.array([8.0 + 0.1j]), force="asymptotic")
