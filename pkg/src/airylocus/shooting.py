"""Shooting-method eigenvalue solver, independent of the Airy machinery.

Integrates the boundary problem directly with a high-order Runge-Kutta
method: y'' = eps*(i*x - lam)*y on [-1, 1] with y(-1) = 0, y'(-1) = 1.
The miss distance m(lam) = y(1) vanishes exactly at eigenvalues, and for
real lam it is real up to integration error (the boundary determinant is
purely imaginary on the real axis), so real eigenvalues are bracketed by
sign changes of Re y(1).

This path shares no code with the determinant evaluation and serves as the
cross-check oracle for it.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

__all__ = ["shoot", "real_eigenvalues_shooting"]

_RTOL = 1e-12
_ATOL = 1e-14


def shoot(eps: float, lam: complex) -> complex:
    """Endpoint value y(1) of the initial value problem at one (eps, lam)."""
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")
    lam = complex(lam)

    def rhs(x, u):
        y = u[0] + 1j * u[1]
        dd = eps * (1j * x - lam) * y
        return [u[2], u[3], dd.real, dd.imag]

    sol = solve_ivp(rhs, (-1.0, 1.0), [0.0, 0.0, 1.0, 0.0],
                    method="DOP853", rtol=_RTOL, atol=_ATOL)
    if not sol.success:
        raise RuntimeError(f"integration failed: {sol.message}")
    return complex(sol.y[0, -1], sol.y[1, -1])


def _shoot_grid(eps: float, lams: np.ndarray) -> np.ndarray:
    """y(1) for a whole batch of real lam values in one integrator run."""
    k = len(lams)

    def rhs(x, u):
        z = u.reshape(2, 2 * k)
        y = z[0, :k] + 1j * z[0, k:]
        dd = eps * (1j * x - lams) * y
        out = np.empty_like(z)
        out[0] = z[1]
        out[1, :k] = dd.real
        out[1, k:] = dd.imag
        return out.ravel()

    u0 = np.zeros(4 * k)
    u0[2 * k:3 * k] = 1.0
    sol = solve_ivp(rhs, (-1.0, 1.0), u0, method="DOP853",
                    rtol=_RTOL, atol=_ATOL)
    if not sol.success:
        raise RuntimeError(f"integration failed: {sol.message}")
    end = sol.y[:, -1].reshape(2, 2 * k)
    return end[0, :k] + 1j * end[0, k:]


def real_eigenvalues_shooting(eps: float, count: int = 3,
                              lam_max: float | None = None,
                              grid: int = 400) -> list[float]:
    """The smallest ``count`` real eigenvalues at this eps, by bracketing.

    Scans Re y(1) on a lam grid, then refines each sign change with Brent's
    method.  The grid ceiling defaults to a margin past the small-eps
    estimate lam_n ~ (pi n / 2)**2 / eps of the last requested eigenvalue.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if lam_max is None:
        lam_max = 1.3 * (math.pi * (count + 1) / 2.0) ** 2 / eps + 3.0
    lams = np.linspace(1e-3, lam_max, grid)
    vals = _shoot_grid(eps, lams).real

    roots: list[float] = []
    for i in range(len(lams) - 1):
        if vals[i] == 0.0:
            roots.append(float(lams[i]))
        elif vals[i] * vals[i + 1] < 0.0:
            r = brentq(lambda l: shoot(eps, l).real, lams[i], lams[i + 1],
                       xtol=1e-13, rtol=8.9e-16)
            roots.append(float(r))
        if len(roots) >= count:
            break
    if len(roots) < count:
        raise RuntimeError(
            f"found only {len(roots)} of {count} eigenvalues up to {lam_max}"
        )
    return roots[:count]
