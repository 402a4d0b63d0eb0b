"""Continuation of eigenvalue trajectories and of the real-locus curves.

Two complementary parametrizations of the same locus:

* trace_lambda follows one eigenvalue branch lam_n(eps) by predictor and
  corrector steps on the boundary determinant, detecting knot crossings,
  minima, pairwise collisions, and the departure into the complex plane.
* trace_gamma follows the curve of first-quadrant zeros xi(a) of the real
  solution family a*Ai + Bi, which obeys the closed-form velocity
  xi'(a) = -pi * Ai(xi)**2 (from the Wronskian of Ai with the family).
  On that curve eps = (Im xi)**3 and lam = Re xi / Im xi, so its markers at
  a = -sqrt3, 0, +sqrt3 are the collision, the Bi-zero, and the knot
  crossing of the corresponding eigenvalue pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .airy import AI, SQRT3, airy_pair_arrays, family_arrays
from .exceptions import BranchLost, DriftUnrecoverable, NotABranch
from .locus import REAL_AXIS_TOL, SpectralPoint, _det_arrays, eigenvalues
from .rootfind import newton2
from .zeros import KNOT, critical_pairs

__all__ = [
    "Trajectory",
    "TrajectoryEvent",
    "GammaCurve",
    "GammaMarkers",
    "trace_lambda",
    "trace_gamma",
    "find_lambda_min",
    "detect_criticals_on_gamma",
]


class TrajectoryEvent(NamedTuple):
    kind: str  # KnotCrossing | Minimum | Collision | Departure
    eps: float
    lam: complex


@dataclass(frozen=True)
class Trajectory:
    """One traced eigenvalue branch with its event log."""

    branch: int
    samples: list[SpectralPoint]
    events: list[TrajectoryEvent]


class GammaMarkers(NamedTuple):
    alpha: complex | None  # xi at a = -sqrt3 (collision point)
    z_point: complex | None  # xi at a = 0 (first-quadrant Bi zero)
    beta: complex | None  # xi at a = +sqrt3 (knot crossing)


@dataclass(frozen=True)
class GammaCurve:
    """Polyline approximation of one real-locus curve in the xi plane."""

    index: int
    samples: list[tuple[float, complex]]
    markers: GammaMarkers

    def xi_at(self, a: float) -> complex:
        """Linear interpolation of the stored samples (no reprojection)."""
        avals = [s[0] for s in self.samples]
        if not avals:
            raise ValueError("empty curve")
        i = int(np.searchsorted(avals, a))
        if i == 0:
            return self.samples[0][1]
        if i == len(avals):
            return self.samples[-1][1]
        a0, x0 = self.samples[i - 1]
        a1, x1 = self.samples[i]
        t = (a - a0) / (a1 - a0)
        return x0 + t * (x1 - x0)


def _va_bundle(a: float, xis: np.ndarray):
    """(value, derivative, scale) of a*Ai + Bi at a batch of points."""
    av, ad, la, bv, bd, lb = airy_pair_arrays(xis)
    ls = np.maximum(la, lb)
    f1 = np.exp(la - ls)
    f2 = np.exp(lb - ls)
    val = a * av * f1 + bv * f2
    der = a * ad * f1 + bd * f2
    scale = np.abs(a * av) * f1 + np.abs(bv) * f2
    return val, der, scale


def _project_va(a: float, xi: complex) -> tuple[complex, float]:
    """Newton step onto the zero set of a*Ai + Bi.

    Returns (point, residual), where the residual is the Newton-step estimate
    of the remaining distance to the zero set, relative to 1 + |xi|.  (The
    value itself is not a usable yardstick: at a = 0 the combination has a
    single term and any cancellation-based measure degenerates.)
    """
    xi = complex(xi)
    rel = math.inf
    for _ in range(12):
        v, d, _ = _va_bundle(a, np.array([xi], dtype=np.complex128))
        if d[0] == 0:
            break
        step = -v[0] / d[0]
        rel = abs(step) / (1.0 + abs(xi))
        xi += step
        if rel <= 1e-13:
            break
    return xi, float(rel)


def _gamma_velocity(xi: complex) -> complex:
    av, _, ls, _ = family_arrays(np.array([xi], dtype=np.complex128), AI)
    if ls[0] != 0.0:
        raise DriftUnrecoverable(f"curve point {xi:.6g} left the tracked region")
    return complex(-math.pi * av[0] ** 2)


_DRIFT_TOL = 1e-9


def _gamma_step(a: float, xi: complex, h: float) -> complex:
    """One classical RK4 step of xi'(a) = -pi Ai(xi)^2."""
    k1 = _gamma_velocity(xi)
    k2 = _gamma_velocity(xi + 0.5 * h * k1)
    k3 = _gamma_velocity(xi + 0.5 * h * k2)
    k4 = _gamma_velocity(xi + h * k3)
    return xi + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _march_gamma(a0: float, xi0: complex, a1: float, step_hint: float,
                 record: list[tuple[float, complex]]):
    """Integrate from (a0, xi0) to a1, appending (a, xi) samples after a0.

    Every accepted point is reprojected onto the zero set; a step whose
    reprojection residual stays above the drift tolerance is halved.
    """
    a, xi = a0, complex(xi0)
    direction = 1.0 if a1 >= a0 else -1.0
    while direction * (a1 - a) > 1e-13:
        speed = abs(_gamma_velocity(xi))
        h = step_hint / max(speed, step_hint)  # cap |dxi| ~ step_hint, da <= 1
        h = min(h, abs(a1 - a))
        while True:
            cand = _gamma_step(a, xi, direction * h)
            cand, rel = _project_va(a + direction * h, cand)
            if rel <= _DRIFT_TOL and cand.real > 0.0 and cand.imag > 0.0:
                break
            h *= 0.5
            if h < 1e-6:
                raise DriftUnrecoverable(
                    f"reprojection stuck near a = {a:.6g} (residual {rel:.3g})"
                )
        a = a + direction * h
        xi = cand
        record.append((a, xi))
    return xi


def trace_gamma(n: int, a_from: float, a_to: float,
                step_hint: float = 0.05) -> GammaCurve:
    """Trace the n-th real-locus curve over the parameter window [a_from, a_to].

    The curve is anchored at an exact landmark: the rotated ray zero of the
    respective U family at a = -sqrt3 (or +sqrt3 when -sqrt3 is outside the
    window), then integrated with RK4 plus Newton reprojection.  Samples are
    strictly increasing in a; markers are filled for whichever of -sqrt3, 0,
    +sqrt3 fall inside the window.
    """
    if n < 1:
        raise ValueError(f"curve index must be >= 1, got {n}")
    if not (math.isfinite(a_from) and math.isfinite(a_to)) or a_from > a_to:
        raise ValueError(f"bad parameter window [{a_from}, {a_to}]")
    if step_hint <= 0:
        raise ValueError("step_hint must be positive")
    pair = critical_pairs(n)[n - 1]
    anchors = [(-SQRT3, pair.alpha.location), (SQRT3, pair.beta.location)]
    inside = [(aa, xx) for aa, xx in anchors if a_from <= aa <= a_to]
    if inside:
        a_anchor, xi_anchor = inside[0]
    else:
        # window on one side of both anchors: start from the nearer one
        a_anchor, xi_anchor = min(
            anchors, key=lambda t: min(abs(t[0] - a_from), abs(t[0] - a_to))
        )
    xi_anchor, rel = _project_va(a_anchor, xi_anchor)
    if rel > _DRIFT_TOL:
        raise DriftUnrecoverable(f"anchor projection failed (residual {rel:.3g})")

    # must-hit parameter values inside the window, in increasing order
    hits = sorted({a_from, a_to}
                  | {aa for aa in (-SQRT3, 0.0, SQRT3) if a_from < aa < a_to})

    samples: list[tuple[float, complex]] = []
    if a_anchor <= a_from:
        # walk up to the window start without recording, then across
        xi = _march_gamma(a_anchor, xi_anchor, a_from, step_hint, [])
        xi, _ = _project_va(a_from, xi)
        samples.append((a_from, xi))
        for target in hits[1:]:
            xi = _march_gamma(samples[-1][0], samples[-1][1], target,
                              step_hint, samples)
    elif a_anchor >= a_to:
        xi = _march_gamma(a_anchor, xi_anchor, a_to, step_hint, [])
        xi, _ = _project_va(a_to, xi)
        down: list[tuple[float, complex]] = [(a_to, xi)]
        for target in reversed(hits[:-1]):
            xi = _march_gamma(down[-1][0], down[-1][1], target, step_hint, down)
        samples = down[::-1]
    else:
        # anchor strictly inside: integrate outward both ways
        left: list[tuple[float, complex]] = []
        for target in reversed([h for h in hits if h < a_anchor]):
            start = left[-1] if left else (a_anchor, xi_anchor)
            _march_gamma(start[0], start[1], target, step_hint, left)
        right: list[tuple[float, complex]] = []
        for target in [h for h in hits if h > a_anchor]:
            start = right[-1] if right else (a_anchor, xi_anchor)
            _march_gamma(start[0], start[1], target, step_hint, right)
        samples = left[::-1] + [(a_anchor, xi_anchor)] + right

    # collapse duplicate a values the marker forcing may have produced
    dedup: list[tuple[float, complex]] = []
    for a, xi in samples:
        if dedup and abs(a - dedup[-1][0]) < 1e-12:
            dedup[-1] = (a, xi)
        else:
            dedup.append((a, xi))
    samples = dedup

    def marker(at: float) -> complex | None:
        for a, xi in samples:
            if abs(a - at) < 1e-9:
                return xi
        return None

    return GammaCurve(n, samples,
                      GammaMarkers(marker(-SQRT3), marker(0.0), marker(SQRT3)))


def find_lambda_min(k: int) -> tuple[float, float]:
    """Deepest point of the k-th real branch pair: (eps at min, lam min).

    Minimizes lam(a) = Re xi / Im xi along the k-th curve over a in
    [-sqrt3, sqrt3] (the real segment between collision and knot crossing),
    reporting eps = (Im xi)**3 at the minimizer.
    """
    curve = trace_gamma(k, -SQRT3, SQRT3, step_hint=0.03)
    avals = np.array([s[0] for s in curve.samples])
    xis = np.array([s[1] for s in curve.samples])
    ratios = xis.real / xis.imag
    i0 = int(np.argmin(ratios))
    lo = avals[max(i0 - 1, 0)]
    hi = avals[min(i0 + 1, len(avals) - 1)]

    def lam_of(a: float) -> float:
        xi, _ = _project_va(a, curve.xi_at(a))
        return xi.real / xi.imag

    res = minimize_scalar(lam_of, bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-11})
    xi, _ = _project_va(float(res.x), curve.xi_at(float(res.x)))
    return float(xi.imag ** 3), float(xi.real / xi.imag)


def detect_criticals_on_gamma(k: int) -> list[tuple[float, complex]]:
    """Points of the k-th curve where the tangent is parallel to the real axis.

    Scans Im xi'(a) for sign changes over a in [-10, 10] and bisects each; in
    the working regime there is exactly one such point, the collision marker.
    """
    curve = trace_gamma(k, -10.0, 10.0, step_hint=0.05)
    out: list[tuple[float, complex]] = []

    def imvel(a: float) -> float:
        xi, _ = _project_va(a, curve.xi_at(a))
        return _gamma_velocity(xi).imag

    vals = [(a, _gamma_velocity(xi).imag) for a, xi in curve.samples]
    for (a0, v0), (a1, v1) in zip(vals, vals[1:]):
        if v0 == 0.0:
            root = a0
        elif v0 * v1 < 0.0:
            root = float(brentq(imvel, a0, a1, xtol=1e-12))
        else:
            continue
        xi, _ = _project_va(root, curve.xi_at(root))
        if not any(abs(root - r) < 1e-6 for r, _ in out):
            out.append((root, xi))
    return out


# ---------------------------------------------------------------------------
# eigenvalue-branch continuation


def _det_scalar(eps: float, lam: complex):
    v, dl, de, _, sc = _det_arrays(eps, np.array([lam], dtype=np.complex128))
    return complex(v[0]), complex(dl[0]), complex(de[0]), float(sc[0])


def _correct(eps: float, lam: complex, max_iter: int = 8):
    """Newton on the determinant in lam at fixed eps.

    Returns (lam, converged, iterations, relative residual).
    """
    lam = complex(lam)
    for it in range(1, max_iter + 1):
        v, dl, _, sc = _det_scalar(eps, lam)
        if dl == 0:
            return lam, False, it, abs(v) / sc
        step = -v / dl
        lam += step
        if abs(step) <= 1e-12 * (1.0 + abs(lam)):
            v, _, _, sc = _det_scalar(eps, lam)
            return lam, True, it, abs(v) / sc
    v, _, _, sc = _det_scalar(eps, lam)
    rel = abs(v) / sc
    # a step stalled at the rounding floor of the scaled residual still
    # counts as converged; far from the locus rel stays many orders larger
    return lam, rel <= 1e-11, max_iter, rel


_ON_LOCUS_TOL = 1e-9


def _solve_collision(eps0: float, lam0: float):
    """Solve Im D = 0, Im dD/dlam = 0 for a real-axis double point near
    (eps0, lam0).  On the real axis the determinant is purely imaginary, so
    these two real equations pin the fold exactly."""

    def F(e: float, l: float):
        v, dl, _, _ = _det_scalar(e, complex(l))
        return v.imag, dl.imag

    e, l, ok, _ = newton2(F, eps0, lam0, tol=1e-12)
    return float(e), float(l), ok


def _fold_constant(eps: float, lam: float) -> float:
    """|d lam / d sqrt(eps - eps_fold)| at a collision, from the local model
    (lam - lam*)^2 = -2 D_eps / D_lamlam * (eps - eps*)."""
    _, _, de, _ = _det_scalar(eps, lam)
    d = 1e-5
    _, dl_p, _, _ = _det_scalar(eps, lam + d)
    _, dl_m, _, _ = _det_scalar(eps, lam - d)
    dll = (dl_p - dl_m) / (2.0 * d)
    if dll == 0:
        return 1e-3
    return math.sqrt(abs(2.0 * de.imag / dll.imag))


def trace_lambda(n: int, eps_from: float, eps_to: float) -> Trajectory:
    """Follow branch n of the spectrum from eps_from to eps_to.

    Euler predictor d lam / d eps = -(dD/deps)/(dD/dlam) plus Newton
    corrector; adaptive steps (floor 1e-8, cap 0.1, halve on failure, grow
    1.5x on quick success).  Events recorded along the way:

    * KnotCrossing: a real sample path crosses 1/sqrt3,
    * Minimum:      d lam / d eps changes sign on a real path,
    * Collision:    the branch meets its partner at a fold; continuation
                    switches to the square-root unfolding and leaves the
                    axis, the Im > 0 side for odd n, Im < 0 for even n,
    * Departure:    first sample off the real axis after a collision.
    """
    if not (0 < eps_from <= eps_to):
        raise ValueError(f"need 0 < eps_from <= eps_to, got [{eps_from}, {eps_to}]")
    if n < 1:
        raise NotABranch(f"branch index must be >= 1, got {n}")
    if eps_from == eps_to:
        return Trajectory(n, [], [])

    recs = eigenvalues(eps_from, max_count=max(n + 2, 6))
    lam = None
    for rec in recs:
        if rec.point.branch <= n < rec.point.branch + rec.multiplicity:
            lam = complex(rec.point.lam)
            break
    if lam is None:
        raise NotABranch(f"branch {n} not found at eps = {eps_from}")

    samples = [SpectralPoint.at(eps_from, lam, n)]
    events: list[TrajectoryEvent] = []
    eps = eps_from
    h = min(0.05, (eps_to - eps_from) / 4.0)
    collided = False
    departed = False

    def on_axis(z: complex) -> bool:
        return abs(z.imag) <= REAL_AXIS_TOL

    def velocity(e: float, l: complex) -> complex:
        v, dl, de, _ = _det_scalar(e, l)
        if dl == 0:
            return complex(math.inf, 0.0)
        return -de / dl

    while eps < eps_to - 1e-13:
        h = min(h, eps_to - eps)
        fails = 0
        advanced = False
        while True:
            vel = velocity(eps, lam)
            pred = lam + vel * h if np.isfinite(vel.real) else lam
            cand, ok, iters, rel = _correct(eps + h, pred)
            if ok and rel <= _ON_LOCUS_TOL:
                break
            fails += 1
            h *= 0.5
            if not collided and on_axis(lam) and (fails >= 3 or h < 1e-6):
                # a stalled real pair is pressing against its fold: Newton
                # from a real seed cannot leave the axis (the determinant is
                # purely imaginary there), so resolve the collision directly
                e_c, l_c, okc = _solve_collision(min(eps + 4.0 * h, eps_to),
                                                 lam.real)
                if okc and -1e-9 < e_c - eps <= 1e-3 and e_c <= eps_to + 1e-9:
                    e_c = min(e_c, eps_to)
                    events.append(TrajectoryEvent("Collision", e_c, complex(l_c)))
                    if e_c > eps + 1e-15:
                        samples.append(SpectralPoint.at(e_c, complex(l_c), n))
                    collided = True
                    de0 = min(1e-6, eps_to - e_c)
                    if de0 <= 0.0:
                        return Trajectory(n, samples, events)
                    # square-root unfolding: re-enter continuation just past
                    # the fold with the perpendicular-departure seed
                    c = _fold_constant(e_c, l_c)
                    sign = 1.0 if n % 2 == 1 else -1.0
                    seed = complex(l_c, sign * c * math.sqrt(de0))
                    cand, ok, _, rel = _correct(e_c + de0, seed)
                    if not ok or rel > _ON_LOCUS_TOL or on_axis(cand):
                        raise BranchLost(
                            f"could not leave the fold at eps = {e_c:.8g}"
                        )
                    eps, lam = e_c + de0, cand
                    samples.append(SpectralPoint.at(eps, lam, n))
                    events.append(TrajectoryEvent("Departure", eps, lam))
                    departed = True
                    h = 1e-5
                    advanced = True
                    break
            if h < 1e-8:
                raise BranchLost(
                    f"corrector diverged near eps = {eps:.8g} (branch {n})"
                )
        if advanced:
            continue

        prev_eps, prev_lam = eps, lam
        new_eps, new_lam = eps + h, cand
        if on_axis(prev_lam) and on_axis(new_lam) and not collided:
            # event sweep on an uninterrupted real segment
            def real_branch(e: float) -> float:
                t = (e - prev_eps) / (new_eps - prev_eps)
                seed = prev_lam + t * (new_lam - prev_lam)
                z, _, _, _ = _correct(e, seed)
                return z.real

            g0 = prev_lam.real - KNOT
            g1 = new_lam.real - KNOT
            if g0 * g1 < 0.0:
                e_k = float(brentq(lambda e: real_branch(e) - KNOT,
                                   prev_eps, new_eps, xtol=1e-12))
                events.append(TrajectoryEvent("KnotCrossing", e_k, complex(KNOT)))
            v0 = velocity(prev_eps, prev_lam).real
            v1 = velocity(new_eps, new_lam).real
            if v0 * v1 < 0.0:
                e_m = float(brentq(
                    lambda e: velocity(e, complex(real_branch(e))).real,
                    prev_eps, new_eps, xtol=1e-12))
                events.append(TrajectoryEvent("Minimum", e_m,
                                              complex(real_branch(e_m))))
        eps, lam = new_eps, new_lam
        samples.append(SpectralPoint.at(eps, lam, n))
        if collided and not departed and not on_axis(lam):
            events.append(TrajectoryEvent("Departure", eps, lam))
            departed = True
        if iters <= 3:
            h = min(h * 1.5, 0.1)
    return Trajectory(n, samples, events)
