"""Root isolation and refinement utilities for analytic functions.

The spectral modules reduce their hunts to three primitives:

* boundary_winding: the argument-principle count of zeros inside a rectangle,
  by tracking the continuous phase of f along the boundary with adaptive
  per-edge refinement.  Phase is immune to any positive rescaling, so scaled
  evaluations (value * exp(L) with real L varying along the contour) can be
  fed in directly.
* complex_roots: winding-guided rectangle subdivision down to isolating cells,
  then Newton polish with deflation; reports multiplicities for genuinely
  multiple zeros (shrinking-circle winding check).
* newton_complex / newton2: damped Newton iterations for one complex unknown
  and for two real unknowns.

Callables passed in must accept a complex ndarray and return a complex
ndarray of values (boundary_winding), or additionally derivatives
(complex_roots).  An evaluation budget caps runaway refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import (
    ContourThroughRoot,
    MaxCountExceeded,
    NonConvergence,
)


@dataclass(frozen=True)
class Rectangle:
    """Axis-aligned closed rectangle in the complex plane."""

    re_min: float
    re_max: float
    im_min: float
    im_max: float

    def __post_init__(self):
        if not (self.re_min < self.re_max and self.im_min < self.im_max):
            raise ValueError("degenerate rectangle")

    @property
    def corners(self) -> list[complex]:
        return [
            complex(self.re_min, self.im_min),
            complex(self.re_max, self.im_min),
            complex(self.re_max, self.im_max),
            complex(self.re_min, self.im_max),
        ]

    @property
    def center(self) -> complex:
        return complex(0.5 * (self.re_min + self.re_max), 0.5 * (self.im_min + self.im_max))

    @property
    def diameter(self) -> float:
        return math.hypot(self.re_max - self.re_min, self.im_max - self.im_min)

    def contains(self, z: complex, pad: float = 0.0) -> bool:
        return (
            self.re_min - pad <= z.real <= self.re_max + pad
            and self.im_min - pad <= z.imag <= self.im_max + pad
        )

    def expanded(self, fraction: float) -> "Rectangle":
        dr = fraction * (self.re_max - self.re_min)
        di = fraction * (self.im_max - self.im_min)
        return Rectangle(self.re_min - dr, self.re_max + dr, self.im_min - di, self.im_max + di)


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def charge(self, n: int):
        self.used += n
        if self.used > self.limit:
            raise MaxCountExceeded(
                f"evaluation budget exhausted ({self.used} > {self.limit})"
            )


def _edge_winding(f, a: complex, b: complex, budget: _Budget, phase_step: float,
                  floor_ratio: float) -> float:
    """Total phase change of f along segment a->b, adaptively refined.

    Small wrapped steps alone do not prove the phase is resolved: a phase
    rate near 2*pi per sample aliases to near zero.  Acceptance therefore
    needs two consecutive levels whose steps pass AND whose totals agree;
    the non-doubling refinement (2n + 7) breaks resonant aliasing.
    """
    n = 16
    prev_sum = None
    while True:
        t = np.linspace(0.0, 1.0, n + 1)
        zs = a + (b - a) * t
        budget.charge(len(zs))
        vals = np.asarray(f(zs))
        mags = np.abs(vals)
        # a zero on the contour shows as a local dip far below its neighbours;
        # a global min/max test would misfire on exponential scale swings
        if mags.min() == 0.0:
            raise ContourThroughRoot("|f| vanishes at a contour sample")
        if n >= 64:
            local = mags[1:-1] / np.sqrt(mags[:-2] * mags[2:])
            if local.min() <= floor_ratio:
                raise ContourThroughRoot(
                    f"|f| dips {local.min():.3g} below its neighbourhood on a contour edge"
                )
        dphi = np.angle(vals[1:] / vals[:-1])
        s = float(dphi.sum())
        if np.abs(dphi).max() <= phase_step:
            if prev_sum is not None and abs(s - prev_sum) <= 0.3:
                return s
            prev_sum = s
        else:
            prev_sum = None
        if n > 60_000:
            # unresolvable phase almost always means a zero hugging the edge
            raise ContourThroughRoot(
                "contour phase refinement stalled; a zero sits on or hugs the edge"
            )
        n = 2 * n + 7


def boundary_winding(f, rect: Rectangle, *, budget: _Budget | None = None,
                     phase_step: float = 1.0, floor_ratio: float = 1e-8,
                     jitter: float = 0.015, max_jitter: int = 5) -> int:
    """Number of zeros of f inside rect, counted with multiplicity.

    If the contour runs too close to a zero the rectangle is grown by
    ``jitter`` (compounding, up to ``max_jitter`` times) before giving up;
    the returned count then refers to the grown rectangle, which callers
    absorb by treating cell membership with a matching pad.
    """
    budget = budget or _Budget(2_000_000)
    r = rect
    for attempt in range(max_jitter + 1):
        try:
            total = 0.0
            cs = r.corners
            for i in range(4):
                total += _edge_winding(f, cs[i], cs[(i + 1) % 4], budget,
                                       phase_step, floor_ratio)
            turns = total / (2.0 * math.pi)
            if abs(turns - round(turns)) > 0.05:
                raise NonConvergence(
                    f"winding sum {turns:.4f} is not near an integer"
                )
            return int(round(turns))
        except ContourThroughRoot:
            if attempt == max_jitter:
                raise
            r = r.expanded(jitter)
    raise ContourThroughRoot("unreachable")  # pragma: no cover


def newton_complex(f_df, z0: complex, *, tol: float, max_iter: int = 60,
                   deflate: tuple[complex, ...] = (), step_cap: float | None = None):
    """Damped Newton for one complex root; f_df(z) -> (value, derivative).

    ``deflate`` lists already-found roots to repel from (derivative-of-log
    correction).  Returns (root, converged, iterations); the caller decides
    whether non-convergence is fatal.
    """
    z = complex(z0)
    fv, dv = f_df(z)
    for it in range(1, max_iter + 1):
        if fv == 0:
            return z, True, it
        g = dv / fv
        for r in deflate:
            dz = z - r
            if dz == 0:
                dz = complex(tol, 0.0)
            g -= 1.0 / dz
        if g == 0 or not np.isfinite(g.real) or not np.isfinite(g.imag):
            return z, False, it
        step = -1.0 / g
        if step_cap is not None and abs(step) > step_cap:
            step *= step_cap / abs(step)
        # backtrack while the residual grows
        scale = 1.0
        for _ in range(10):
            zn = z + scale * step
            fn, dn = f_df(zn)
            if abs(fn) <= abs(fv) or abs(scale * step) < tol:
                break
            scale *= 0.5
        moved = abs(zn - z)
        z, fv, dv = zn, fn, dn
        if moved < tol:
            return z, True, it
    return z, False, max_iter


def _multiplicity(f, root: complex, radius: float, budget: _Budget) -> int:
    """Winding of shrinking circles about root until two counts agree."""
    prev = None
    r = radius
    for _ in range(8):
        t = np.linspace(0.0, 2.0 * math.pi, 129)
        zs = root + r * np.exp(1j * t)
        budget.charge(len(zs))
        vals = np.asarray(f(zs))
        if np.abs(vals).min() == 0.0:
            r *= 0.25
            continue
        dphi = np.angle(vals[1:] / vals[:-1])
        if np.abs(dphi).max() > 1.2:
            r *= 0.25
            continue
        m = int(round(dphi.sum() / (2.0 * math.pi)))
        if prev is not None and m == prev and m >= 1:
            return m
        prev = m
        r *= 0.25
    return prev if prev and prev >= 1 else 1


def complex_roots(f_df, rect: Rectangle, *, resolution: float,
                  max_roots: int = 200, budget_limit: int = 4_000_000,
                  floor_ratio: float = 1e-8) -> list[tuple[complex, int]]:
    """All zeros of f in rect as (root, multiplicity), winding-complete.

    f_df(z_array) -> (values, derivatives), both complex arrays; any common
    positive rescaling per point is harmless.  ``resolution`` is the scale
    below which a cluster is treated as one multiple zero.
    """
    budget = _Budget(budget_limit)

    def fv(zs):
        return f_df(np.asarray(zs, dtype=np.complex128))[0]

    def f_scalar(z):
        v, d = f_df(np.array([z], dtype=np.complex128))
        return complex(v[0]), complex(d[0])

    total = boundary_winding(fv, rect, budget=budget, floor_ratio=floor_ratio)
    if total == 0:
        return []
    if total > max_roots:
        raise MaxCountExceeded(f"{total} zeros in search rectangle (cap {max_roots})")

    found: list[tuple[complex, int]] = []
    stack: list[tuple[Rectangle, int]] = [(rect, total)]
    guard = 0
    while stack:
        guard += 1
        if guard > 64 * max_roots + 256:
            raise MaxCountExceeded("subdivision did not terminate")
        cell, count = stack.pop()
        if count == 0:
            continue
        small = cell.diameter <= max(resolution * 64, 1e-9)
        if count == 1 or small:
            pad = 0.02 * cell.diameter + 2.0 * resolution
            root, ok, _ = newton_complex(f_scalar, cell.center,
                                         tol=resolution * 1e-4,
                                         step_cap=2.0 * cell.diameter)
            if not ok or not cell.contains(root, pad=pad):
                # fall back: best of a coarse grid inside the cell
                gr = np.linspace(cell.re_min, cell.re_max, 7)[1:-1]
                gi = np.linspace(cell.im_min, cell.im_max, 7)[1:-1]
                gz = (gr[:, None] + 1j * gi[None, :]).ravel()
                budget.charge(len(gz))
                vals, _ = f_df(gz)
                z0 = complex(gz[int(np.argmin(np.abs(vals)))])
                root, ok, _ = newton_complex(f_scalar, z0, tol=resolution * 1e-4,
                                             step_cap=2.0 * cell.diameter)
            settled = ok and cell.contains(root, pad=pad)
            if not settled and small:
                raise NonConvergence(
                    f"Newton failed to settle in cell centred at {cell.center:.6g}"
                )
            if settled:
                if count == 1:
                    mult = 1
                else:
                    # distinguish one multiple zero from a tight cluster
                    others = []
                    for _ in range(count - 1):
                        r2, ok2, _ = newton_complex(
                            f_scalar, root + 3.0 * resolution * (0.6 + 0.8j),
                            tol=resolution * 1e-4,
                            deflate=tuple([root] + others),
                            step_cap=2.0 * cell.diameter,
                        )
                        if ok2 and abs(r2 - root) > resolution and cell.contains(r2, pad=0.3 * cell.diameter):
                            others.append(r2)
                    mult = _multiplicity(fv, root, max(4.0 * resolution, 0.02 * cell.diameter), budget)
                    for r2 in others:
                        found.append((r2, 1))
                    if mult < count - len(others):
                        mult = count - len(others)
                found.append((root, mult))
                continue
            # Newton kept escaping a cell big enough to subdivide:
            # corner the root by splitting instead
        # split along the longer side; nudge the cut if a zero sits on it.
        # im-cuts avoid the exact midline: in symmetric searches it is the
        # real axis, where whole root pairs can hide between samples.
        horizontal = (cell.re_max - cell.re_min) >= (cell.im_max - cell.im_min)
        fracs = (0.5, 0.53, 0.47, 0.561, 0.439) if horizontal else (0.53, 0.47, 0.516, 0.561, 0.439)
        for frac in fracs:
            try:
                if horizontal:
                    cut = cell.re_min + frac * (cell.re_max - cell.re_min)
                    kids = (
                        Rectangle(cell.re_min, cut, cell.im_min, cell.im_max),
                        Rectangle(cut, cell.re_max, cell.im_min, cell.im_max),
                    )
                else:
                    cut = cell.im_min + frac * (cell.im_max - cell.im_min)
                    kids = (
                        Rectangle(cell.re_min, cell.re_max, cell.im_min, cut),
                        Rectangle(cell.re_min, cell.re_max, cut, cell.im_max),
                    )
                w0 = boundary_winding(fv, kids[0], budget=budget, max_jitter=0,
                                      floor_ratio=floor_ratio)
                break
            except (ContourThroughRoot, NonConvergence):
                continue
        else:
            raise ContourThroughRoot(
                f"could not place a zero-free cut through cell at {cell.center:.6g}"
            )
        stack.append((kids[0], w0))
        stack.append((kids[1], count - w0))

    # merge duplicates that slipped through adjacent cells, then audit each
    # merge: summed claims can double-count one root while a partner nearby
    # went unseen (cells whose shared cut ran through a real-axis pair)
    merged: list[list] = []
    for r, m in sorted(found, key=lambda t: (t[0].real, t[0].imag)):
        if merged and abs(merged[-1][0] - r) <= resolution:
            merged[-1][1] += m
            merged[-1][2] = True
        else:
            merged.append([r, m, False])
    final: list[tuple[complex, int]] = []
    for r, m, suspect in merged:
        if suspect and m >= 2:
            seen = _multiplicity(fv, r, 16.0 * resolution, budget)
            if seen < m:
                recovered = _recover_missing(f_scalar, r, seen, m - seen,
                                             rect, resolution)
                final.extend((q, 1) for q in recovered)
                m = seen + (m - seen - len(recovered))
        final.append((r, m))
    return final


def _recover_missing(f_scalar, root: complex, mult: int, missing: int,
                     rect: Rectangle, resolution: float) -> list[complex]:
    """Hunt roots hidden near a double-counted one by deflated Newton."""
    out: list[complex] = []
    base = [root] * mult
    for radius in (16.0, 128.0, 1024.0, 8192.0):
        for k in range(8):
            z0 = root + radius * resolution * complex(
                math.cos(0.25 * math.pi * k), math.sin(0.25 * math.pi * k)
            )
            cand, ok, _ = newton_complex(
                f_scalar, z0, tol=resolution * 1e-4,
                deflate=tuple(base + out),
            )
            if (
                ok
                and rect.contains(cand, pad=8.0 * resolution)
                and abs(cand - root) > resolution
                and all(abs(cand - q) > resolution for q in out)
            ):
                out.append(cand)
                if len(out) == missing:
                    return out
    if not out and missing > 0:
        raise NonConvergence(
            f"lost track of {missing} zero(s) adjacent to {root:.8g}"
        )
    return out


def newton2(F, x0: float, y0: float, *, tol: float, max_iter: int = 50,
            fd_step: float = 1e-7):
    """Damped Newton for F(x, y) -> (f1, f2) = (0, 0), two real unknowns.

    The Jacobian is forward-differenced with relative step ``fd_step``.
    Returns (x, y, converged, iterations).
    """
    x, y = float(x0), float(y0)
    f1, f2 = F(x, y)
    for it in range(1, max_iter + 1):
        hx = fd_step * max(1.0, abs(x))
        hy = fd_step * max(1.0, abs(y))
        g1x, g2x = F(x + hx, y)
        g1y, g2y = F(x, y + hy)
        j11 = (g1x - f1) / hx
        j21 = (g2x - f2) / hx
        j12 = (g1y - f1) / hy
        j22 = (g2y - f2) / hy
        det = j11 * j22 - j12 * j21
        if det == 0 or not math.isfinite(det):
            return x, y, False, it
        dx = -(f1 * j22 - f2 * j12) / det
        dy = -(j11 * f2 - j21 * f1) / det
        norm0 = math.hypot(f1, f2)
        scale = 1.0
        for _ in range(12):
            xn, yn = x + scale * dx, y + scale * dy
            g1, g2 = F(xn, yn)
            if math.hypot(g1, g2) <= norm0 or scale * math.hypot(dx, dy) < tol:
                break
            scale *= 0.5
        moved = math.hypot(xn - x, yn - y)
        x, y, f1, f2 = xn, yn, g1, g2
        if moved < tol:
            return x, y, True, it
    return x, y, False, max_iter
