"""Distinguished zeros of the solution families and the derived critical values.

The eigenvalue collisions and knot crossings of the boundary-value problem are
governed by where U- and U+ vanish on the ray arg z = pi/3.  Both families are
(up to a unimodular factor) real there, and their ray zeros are exact
e^{-2 pi i/3} rotations of their negative-axis zeros, so the hunt reduces to
sign-change scans on the real line plus a complex Newton polish.  From the
ray moduli come the two interleaved parameter sequences

    delta_k = (|beta_k| sqrt(3)/2)^3   (knot crossings,  U+ zeros beta_k)
    eps_k   = (|alpha_k| sqrt(3)/2)^3  (collisions,      U- zeros alpha_k)

with 0 < delta_1 < eps_1 < delta_2 < ...  The first-quadrant zeros z_k of Bi
(all in the open sector (pi/3, pi/2)) bound the trajectory minima.  The
classification of V_a zeros by sector, as a crosses the thresholds +-sqrt(3),
is exposed as a report for property checks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .airy import (
    SQRT3,
    SolutionFamily,
    U_MINUS,
    U_PLUS,
    BI,
    Va,
    eval_airy,
    family_arrays,
)
from .exceptions import BracketingFailure, SeedDivergence, Unstable
from .rootfind import Rectangle, complex_roots, newton_complex

#: the knot value 1/sqrt(3), the real coordinate every colliding pair meets at
KNOT = 1.0 / math.sqrt(3.0)

#: U- vanishes at the origin exactly; ray-zero indexing starts at k = 1 and
#: this zeroth modulus is exposed only as a constant
U_MINUS_ORIGIN = 0.0

_ROT_M = complex(-0.5, -0.5 * SQRT3)  # e^{-2 pi i/3}


@dataclass(frozen=True)
class RayZero:
    """A zero of U-, U+ or Bi away from the real axis.

    For the U families the location lies on the ray arg z = pi/3; for Bi it
    lies strictly inside the sector (pi/3, pi/2).
    """

    family: str
    k: int
    location: complex
    modulus: float


@dataclass(frozen=True)
class CriticalPair:
    """k-th pair of parameter landmarks derived from the ray zeros."""

    k: int
    beta: RayZero
    alpha: RayZero
    delta_k: float
    eps_k: float
    knot: float = KNOT


def _real_values(family: SolutionFamily, xs: np.ndarray) -> np.ndarray:
    vals, _, ls, _ = family_arrays(xs.astype(np.complex128), family)
    # real family on the real axis; the asymptotic route leaves conjugate dust
    if np.any(ls != 0.0):
        raise Unstable("real-axis evaluation left the representable range")
    return vals.real


def _scan_brackets(family: SolutionFamily, step: float, reach: float):
    xs = -np.arange(1, int(reach / step) + 1) * step
    vals = _real_values(family, xs)
    flips = np.nonzero(np.sign(vals[1:]) * np.sign(vals[:-1]) < 0)[0]
    return [(float(xs[i + 1]), float(xs[i])) for i in flips]


def negative_axis_zeros(family: SolutionFamily, count: int) -> list[float]:
    """First `count` strictly negative zeros, decreasing (growing modulus).

    Sign-change scan with step 0.05 (halved until the bracket count is stable
    twice, BracketingFailure after 4 halvings), then bisection and a Newton
    polish to ~1e-13.  The origin zero of U- is excluded by the strict-sign
    contract.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    # enough reach for `count` zeros: their moduli grow like ((3 pi k)/2)^{2/3}
    reach = min(35.0, 1.5 * (1.5 * math.pi * (count + 2)) ** (2.0 / 3.0) + 3.0)
    step = 0.05
    brackets = _scan_brackets(family, step, reach)
    for _ in range(4):
        finer = _scan_brackets(family, step * 0.5, reach)
        if len(finer) == len(brackets) and len(brackets) >= count:
            break
        step *= 0.5
        brackets = finer
    else:
        raise BracketingFailure(
            f"bracket count did not stabilise down to step {step:.4g}"
        )

    def fr(x: float) -> float:
        return float(_real_values(family, np.array([x]))[0])

    out = []
    for lo, hi in brackets[:count]:
        x = brentq(fr, lo, hi, xtol=1e-14, rtol=8.9e-16)
        v, d, _, _ = family_arrays(complex(x), family)
        if d[0].real != 0.0:
            x -= v[0].real / d[0].real
        out.append(float(x))
    return out


def _normalise_u_family(family) -> SolutionFamily:
    if isinstance(family, SolutionFamily):
        if family.kind not in ("Uminus", "Uplus"):
            raise ValueError("ray zeros exist for the Uminus/Uplus families")
        return family
    return {"UMinus": U_MINUS, "Uminus": U_MINUS, "UPlus": U_PLUS, "Uplus": U_PLUS}[family]


def ray_zeros(family, count: int) -> list[RayZero]:
    """alpha_k (U-) or beta_k (U+) on the ray arg z = pi/3, by modulus.

    Each is the exact e^{-2 pi i/3} rotation of the matching negative-axis
    zero (the families are rotation-symmetric), refreshed by a complex Newton
    step to absorb the rotation rounding.
    """
    fam = _normalise_u_family(family)
    zeros = negative_axis_zeros(fam, count)

    def f_df(z: complex):
        ev = eval_airy(z, fam)
        return ev.value, ev.derivative

    out = []
    for k, t in enumerate(zeros, start=1):
        z0 = t * _ROT_M
        z, ok, _ = newton_complex(f_df, z0, tol=1e-14)
        if not ok or abs(z - z0) > 1e-6 * abs(z0):
            raise SeedDivergence(
                f"ray polish moved k={k} from {z0:.9g} to {z:.9g}"
            )
        out.append(RayZero(fam.kind, k, complex(z), abs(z)))
    return out


def critical_pairs(count: int) -> list[CriticalPair]:
    """First `count` (delta_k, eps_k) pairs from the ray-zero moduli."""
    betas = ray_zeros(U_PLUS, count)
    alphas = ray_zeros(U_MINUS, count)
    out = []
    for k in range(1, count + 1):
        b, a = betas[k - 1], alphas[k - 1]
        out.append(
            CriticalPair(
                k=k,
                beta=b,
                alpha=a,
                delta_k=(b.modulus * SQRT3 / 2.0) ** 3,
                eps_k=(a.modulus * SQRT3 / 2.0) ** 3,
            )
        )
    return out


def bi_quadrant_zeros(count: int) -> list[RayZero]:
    """First-quadrant zeros z_k of Bi, sorted by modulus.

    Seeds: on the ray arg = pi/3 the two oscillatory components of Bi have
    amplitude ratio 2:1, so zeros sit at phase (2/3) r^{3/2} = pi (m - 1/4)
    and just above the ray by ln(2)/(2 r^{3/2}) where the exponential tilt
    restores balance.  Each seed is polished by complex Newton and must land
    in the open sector (pi/3, pi/2).
    """
    if count < 1:
        raise ValueError("count must be >= 1")

    def f_df(z: complex):
        ev = eval_airy(z, BI)
        return ev.value, ev.derivative

    out = []
    for m in range(1, count + 1):
        r = (1.5 * math.pi * (m - 0.25)) ** (2.0 / 3.0)
        tilt = 0.5 * math.log(2.0) / r**1.5
        z = None
        for bump in (1.0, 0.97, 1.03, 0.92, 1.08):
            seed = r * bump * cmath.exp(1j * (math.pi / 3.0 + tilt / bump**1.5))
            cand, ok, _ = newton_complex(f_df, seed, tol=1e-14)
            ang = cmath.phase(cand)
            if ok and math.pi / 3.0 < ang < math.pi / 2.0 and abs(cand - seed) < 0.6:
                z = cand
                break
        if z is None:
            raise SeedDivergence(f"no quadrant zero settled near seed index {m}")
        out.append(RayZero("Bi", m, complex(z), abs(z)))
    out.sort(key=lambda rz: rz.modulus)
    for k, rz in enumerate(out, start=1):
        if rz.k != k:
            raise Unstable("quadrant zero seeds collided or skipped an index")
    return out


@dataclass(frozen=True)
class ZeroClassification:
    """Sector census of the zeros of V_a and of its derivative, |z| <= radius.

    Each zero is (location, multiplicity, label) with labels: origin,
    negative-axis, positive-axis, sector-0-pi3, ray-pi3, sector-pi3-pi2,
    left-half-plane (never expected), conjugate (lower half plane partner).
    """

    a: float
    search_radius: float
    zeros: tuple
    derivative_zeros: tuple
    counts: dict
    derivative_counts: dict


_ANGULAR_TOL = 1e-9


def _label(z: complex) -> str:
    if abs(z) <= 1e-8:
        return "origin"
    if abs(z.imag) <= 1e-8 * max(1.0, abs(z.real)):
        return "negative-axis" if z.real < 0 else "positive-axis"
    if z.imag < 0:
        return "conjugate"
    ang = cmath.phase(z)
    if abs(ang - math.pi / 3.0) <= _ANGULAR_TOL:
        return "ray-pi3"
    if 0.0 < ang < math.pi / 3.0:
        return "sector-0-pi3"
    if math.pi / 3.0 < ang < math.pi / 2.0:
        return "sector-pi3-pi2"
    return "left-half-plane"


def classify_va_zeros(a: float, search_radius: float) -> ZeroClassification:
    """Census of V_a and dV_a/dz zeros in the disk |z| <= search_radius.

    The census drives the sector-dichotomy checks: V_a's non-real zeros sit in
    (pi/3, pi/2) for |a| < sqrt(3) and in (0, pi/3) for |a| > sqrt(3), with
    the positive axis gaining one V_a zero below a = -sqrt(3) and one
    derivative zero above a = +sqrt(3).
    """
    if not (0.0 < search_radius <= 15.0):
        raise ValueError("search_radius must lie in (0, 15]")
    fam = Va(float(a))
    r = float(search_radius)
    # slightly uneven pads keep contour corners off the zero sets
    rect = Rectangle(-r - 0.11, r + 0.13, -r - 0.12, r + 0.11)

    def v_df(zs):
        val, der, _, _ = family_arrays(zs, fam)
        return val, der

    def dv_df(zs):
        # the derivative solves w''' = (z w)' so its own derivative is z V_a
        val, der, _, _ = family_arrays(zs, fam)
        return der, zs * val

    def census(f_df):
        roots = complex_roots(f_df, rect, resolution=1e-8,
                              max_roots=400, budget_limit=12_000_000)
        kept = [(z, m, _label(z)) for z, m in roots if abs(z) <= r]
        counts: dict[str, int] = {}
        for _, m, lab in kept:
            counts[lab] = counts.get(lab, 0) + m
        return tuple(kept), counts

    zeros, counts = census(v_df)
    dzeros, dcounts = census(dv_df)
    return ZeroClassification(float(a), r, zeros, dzeros, counts, dcounts)
