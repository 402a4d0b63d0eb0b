"""Characteristic determinant of the complex-potential Dirichlet problem.

The two-point problem -(1/eps) y'' + i x y = lam y on [-1, 1] with
y(-1) = y(1) = 0 maps, through eta(x) = eps**(1/3) * (lam - i x), onto the
Airy equation w'' = eta w.  An eigenvalue is a value of lam where the
solution pinned to zero at x = -1 also vanishes at x = +1, i.e. a zero of
the boundary determinant

    determinant(eps, lam) = Ai(eta(-1)) Bi(eta(+1)) - Bi(eta(-1)) Ai(eta(+1)).

Both Airy factors are evaluated in scaled form (value * exp(log_scale)), so
the determinant here carries one overall positive factor exp(log_scale);
zero sets and Newton steps are unaffected by it.  The whole spectrum lives
in the strip {Re lam > 0, |Im lam| < 1}, which is what eigenvalues()
searches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .airy import airy_pair_arrays, family_arrays, U_MINUS, U_PLUS
from .exceptions import Unstable
from .rootfind import Rectangle, complex_roots, newton_complex
from .zeros import KNOT, critical_pairs

__all__ = [
    "SpectralPoint",
    "EigenvalueRecord",
    "DeterminantValue",
    "DeterminantPartials",
    "determinant",
    "determinant_partials",
    "eigenvalues",
    "multiplicity_at",
    "eigenfunction_boundary_residual",
    "REAL_AXIS_TOL",
]

# |Im lam| below this counts as "on the real axis"; continuation noise in
# double precision sits around 1e-12, two orders below.
REAL_AXIS_TOL = 1e-10


@dataclass(frozen=True)
class SpectralPoint:
    """One point (eps, lam) of the spectral locus, tagged with its branch."""

    eps: float
    lam: complex
    branch: int
    on_real_axis: bool

    def __post_init__(self):
        if not (self.eps > 0.0 and math.isfinite(self.eps)):
            raise ValueError(f"eps must be positive and finite, got {self.eps}")
        if self.branch < 1:
            raise ValueError(f"branch index must be >= 1, got {self.branch}")
        lam = complex(self.lam)
        if not (lam.real > 0.0 and abs(lam.imag) < 1.0):
            raise ValueError(
                f"lam = {lam} outside the admissible strip Re > 0, |Im| < 1"
            )
        xi = self.xi
        if not (xi.real > 0.0 and xi.imag > 0.0):
            raise ValueError(f"mapped point xi = {xi} left the open first quadrant")
        if self.on_real_axis != (abs(lam.imag) <= REAL_AXIS_TOL):
            raise ValueError(
                f"on_real_axis flag inconsistent with Im lam = {lam.imag:.3e}"
            )

    @property
    def xi(self) -> complex:
        """The first-quadrant image eps**(1/3) * (lam + i)."""
        return self.eps ** (1.0 / 3.0) * (complex(self.lam) + 1j)

    @classmethod
    def at(cls, eps: float, lam: complex, branch: int) -> "SpectralPoint":
        return cls(float(eps), complex(lam), int(branch),
                   abs(complex(lam).imag) <= REAL_AXIS_TOL)


@dataclass(frozen=True)
class EigenvalueRecord:
    """An eigenvalue found by the determinant solver.

    ``residual`` is |determinant| divided by the local term scale (the sum of
    the two product magnitudes), so 1e-16-ish means converged to rounding.
    """

    point: SpectralPoint
    multiplicity: int
    residual: float
    newton_iters: int


class DeterminantValue(NamedTuple):
    value: complex
    log_scale: float
    scale: float


class DeterminantPartials(NamedTuple):
    dlam: complex
    deps: complex
    log_scale: float


def _det_arrays(eps: float, lams: np.ndarray):
    """Scaled determinant bundle at a batch of spectral parameters.

    Returns (value, dlam, deps, log_scale, scale) arrays sharing one scaling
    exp(log_scale) per point.  Ai and Bi keep separate log scales internally;
    collapsing them per product keeps both cross terms alive even when the
    decaying factor underflows a shared per-point scale.
    """
    lams = np.ascontiguousarray(np.atleast_1d(np.asarray(lams, dtype=np.complex128)))
    c = eps ** (1.0 / 3.0)
    em = c * (lams + 1j)
    ep = c * (lams - 1j)
    n = lams.shape[0]
    av, ad, la, bv, bd, lb = airy_pair_arrays(np.concatenate([em, ep]))
    am, ap = av[:n], av[n:]
    amd, apd = ad[:n], ad[n:]
    lam_m, lam_p = la[:n], la[n:]
    bm, bp = bv[:n], bv[n:]
    bmd, bpd = bd[:n], bd[n:]
    lb_m, lb_p = lb[:n], lb[n:]
    s1 = lam_m + lb_p
    s2 = lb_m + lam_p
    big = np.maximum(s1, s2)
    f1 = np.exp(s1 - big)
    f2 = np.exp(s2 - big)
    value = am * bp * f1 - bm * ap * f2
    scale = np.abs(am * bp) * f1 + np.abs(bm * ap) * f2
    dlam = c * ((amd * bp + am * bpd) * f1 - (bmd * ap + bm * apd) * f2)
    deps = (em * (amd * bp * f1 - bmd * ap * f2)
            + ep * (am * bpd * f1 - bm * apd * f2)) / (3.0 * eps)
    return value, dlam, deps, big, scale


def determinant(eps: float, lam: complex) -> DeterminantValue:
    """Boundary determinant at (eps, lam), scaled by exp(-log_scale).

    ``scale`` is the sum of the two product magnitudes in the same scaling;
    residual tests should compare |value| against it.
    """
    if not eps > 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    v, _, _, ls, sc = _det_arrays(eps, lam)
    return DeterminantValue(complex(v[0]), float(ls[0]), float(sc[0]))


def determinant_partials(eps: float, lam: complex) -> DeterminantPartials:
    """Analytic partial derivatives of the determinant, same scaling."""
    if not eps > 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    _, dl, de, ls, _ = _det_arrays(eps, lam)
    return DeterminantPartials(complex(dl[0]), complex(de[0]), float(ls[0]))


def _strip_rectangle(re_max: float) -> Rectangle:
    # slightly asymmetric imaginary bounds keep the real axis away from any
    # midline the subdivision might favour
    return Rectangle(1e-6, re_max, -0.99991, 0.99987)


def default_re_max(eps: float, max_count: int) -> float:
    """Real-part cap covering the first max_count branches with margin.

    In the small-eps limit eps * lam_n approaches (pi n / 2)**2, so a cap at
    branch max_count + 2 keeps the requested count safely inside the box.
    """
    return (math.pi * (max_count + 2) / 2.0) ** 2 / eps + 2.0


def eigenvalues(eps: float, re_max: float | None = None,
                max_count: int = 32) -> list[EigenvalueRecord]:
    """All eigenvalues with 0 < Re lam <= re_max, |Im lam| < 1, sorted.

    Roots of the determinant are isolated by argument-principle winding
    counts on a subdivided rectangle and polished by Newton; the returned
    total (with multiplicity) equals the winding number of the full contour.
    Records are sorted by Re lam then Im lam.  Branch indices number the
    records in sorted order, except that within a conjugate pair the
    Im lam > 0 member takes the smaller index; a multiplicity-m record
    consumes m consecutive indices.
    """
    if not (eps > 0.0 and math.isfinite(eps)):
        raise ValueError(f"eps must be positive and finite, got {eps}")
    if re_max is None:
        re_max = default_re_max(eps, max_count)
    if not re_max > KNOT:
        raise ValueError(f"re_max must exceed {KNOT:.6f}, got {re_max}")

    def f_df(zs):
        v, dl, _, _, _ = _det_arrays(eps, zs)
        return v, dl

    def f_scalar(z):
        v, dl, _, _, _ = _det_arrays(eps, z)
        return complex(v[0]), complex(dl[0])

    # cluster scale 1e-7: a collision pair split by rounding noise
    # (~1e-8 at the fold) reports as one double root, while genuinely
    # distinct eigenvalues are never this close away from a collision
    roots = complex_roots(f_df, _strip_rectangle(re_max), resolution=1e-7,
                          max_roots=max_count + 8, budget_limit=60_000_000)

    entries = []
    for root, mult in roots:
        # final polish; for double roots Newton wanders at the rounding
        # floor, so keep whichever endpoint has the smaller residual
        polished, _, iters = newton_complex(f_scalar, root, tol=1e-13, max_iter=24)
        cand = min((root, polished), key=lambda z: abs(f_scalar(z)[0]))
        v, _, _, _, sc = _det_arrays(eps, cand)
        residual = float(abs(v[0]) / sc[0])
        entries.append((complex(cand), mult, residual, iters))

    entries.sort(key=lambda t: (t[0].real, t[0].imag))
    records: list[EigenvalueRecord] = []
    branch = 1
    i = 0
    while i < len(entries):
        z, mult, residual, iters = entries[i]
        paired = False
        if i + 1 < len(entries) and z.imag < -REAL_AXIS_TOL:
            z2, mult2, residual2, iters2 = entries[i + 1]
            paired = (abs(z2.real - z.real) <= 1e-8 * max(1.0, abs(z.real))
                      and abs(z2.imag + z.imag) <= 1e-8)
        if paired:
            # conjugate pair: the upper-half member takes the smaller index
            records.append(EigenvalueRecord(
                SpectralPoint.at(eps, z, branch + mult2), mult, residual, iters))
            records.append(EigenvalueRecord(
                SpectralPoint.at(eps, z2, branch), mult2, residual2, iters2))
            branch += mult + mult2
            i += 2
        else:
            records.append(EigenvalueRecord(
                SpectralPoint.at(eps, z, branch), mult, residual, iters))
            branch += mult
            i += 1
    return records


def multiplicity_at(eps: float, lam: complex, radius: float = 1e-3) -> int:
    """Winding number of the determinant on shrinking circles around lam.

    The radius shrinks by 4x until two consecutive counts agree; raises
    Unstable when the ladder runs out without agreement.
    """
    if not eps > 0.0:
        raise ValueError(f"eps must be positive, got {eps}")
    lam = complex(lam)
    t = np.linspace(0.0, 2.0 * math.pi, 257)
    ring = np.exp(1j * t)
    prev = None
    r = float(radius)
    for _ in range(8):
        v, _, _, _, _ = _det_arrays(eps, lam + r * ring)
        if np.abs(v).min() == 0.0:
            r *= 0.25
            continue
        dphi = np.angle(v[1:] / v[:-1])
        if np.abs(dphi).max() > 1.2:
            r *= 0.25
            continue
        m = int(round(dphi.sum() / (2.0 * math.pi)))
        if prev is not None and m == prev:
            return m
        prev = m
        r *= 0.25
    raise Unstable(
        f"winding count around {lam:.8g} kept changing down to radius {r:.3g}"
    )


def eigenfunction_boundary_residual(kind: str, k: int) -> float:
    """Boundary smallness of a closed-form eigenfunction at a critical point.

    kind "AtDelta": y(x) = Uplus(delta_k**(1/3) * (1/sqrt3 - i x)), the
    eigenfunction at the parameter where branch 2k-1 crosses the knot.
    kind "AtEps":  y(x) = Uminus(eps_k**(1/3) * (1/sqrt3 - i x)), the
    eigenfunction at the pairwise collision.

    Returns max(|y(-1)|, |y(+1)|) / max over a 64-point grid of |y| on
    [-1, 1]; a correct build stays below 1e-8 because the mapped endpoints
    are exact ray zeros of the corresponding solution family.
    """
    if k < 1:
        raise ValueError(f"critical index k must be >= 1, got {k}")
    pair = critical_pairs(k)[k - 1]
    if kind == "AtDelta":
        c = pair.delta_k ** (1.0 / 3.0)
        family = U_PLUS
    elif kind == "AtEps":
        c = pair.eps_k ** (1.0 / 3.0)
        family = U_MINUS
    else:
        raise ValueError(f"kind must be 'AtDelta' or 'AtEps', got {kind!r}")
    grid = np.linspace(-1.0, 1.0, 64)
    vals, _, ls, _ = family_arrays(c * (KNOT - 1j * grid), family)
    mags = np.abs(vals) * np.exp(ls - ls.max())
    peak = float(mags.max())
    if peak == 0.0:
        raise Unstable("eigenfunction grid evaluated to all zeros")
    return float(max(mags[0], mags[-1]) / peak)
