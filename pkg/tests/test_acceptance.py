"""Acceptance gate: one check per shipped claim, each with a visible verdict.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL line
per criterion including the measured runtime.
"""

import math
import time

import numpy as np

from airylocus import (
    determinant,
    determinant_partials,
    eigenfunction_boundary_residual,
    eigenvalues,
    find_lambda_min,
    multiplicity_at,
    real_eigenvalues_shooting,
    trace_gamma,
    trace_lambda,
)
from airylocus.curves import _correct
from airylocus.verify import (
    _check_classification,
    _check_identities,
    _check_large_eps,
)
from airylocus.zeros import KNOT, bi_quadrant_zeros, critical_pairs


def _verdict(num: int, label: str, ok: bool, detail: str, dt: float,
             budget: float) -> None:
    word = "PASS" if ok and dt < budget else "FAIL"
    print(f"ACCEPTANCE {num:02d} {word} {label}: {detail} "
          f"[{dt:.2f}s / budget {budget:.0f}s]", flush=True)
    assert ok, f"criterion {num}: {detail}"
    assert dt < budget, f"criterion {num}: runtime {dt:.2f}s over {budget}s"


def test_criterion_01_critical_landmarks():
    t0 = time.perf_counter()
    p = critical_pairs(1)[0]
    dt = time.perf_counter() - t0
    ok = 5.0 <= p.delta_k <= 5.2 and 12.2 <= p.eps_k <= 12.4
    _verdict(1, "critical landmarks", ok,
             f"delta_1={p.delta_k:.6f} in [5.0,5.2], "
             f"eps_1={p.eps_k:.6f} in [12.2,12.4]", dt, 1.0)


def test_criterion_02_minimum_landmark():
    t0 = time.perf_counter()
    e_min, l_min = find_lambda_min(1)
    dt = time.perf_counter() - t0
    ok = 9.2 <= e_min <= 9.4 and 0.44 <= l_min <= 0.46
    _verdict(2, "deepest point of first branch pair", ok,
             f"eps_min={e_min:.6f} in [9.2,9.4], "
             f"lam_min={l_min:.6f} in [0.44,0.46]", dt, 5.0)


def test_criterion_03_jordan_cell():
    t0 = time.perf_counter()
    eps_1 = critical_pairs(1)[0].eps_k
    val = determinant(eps_1, complex(KNOT))
    par = determinant_partials(eps_1, complex(KNOT))
    mult = multiplicity_at(eps_1, complex(KNOT))
    dt = time.perf_counter() - t0
    r_val = abs(val.value) / val.scale
    r_dl = abs(par.dlam) / val.scale
    ok = r_val <= 1e-9 and r_dl <= 1e-8 and mult == 2
    _verdict(3, "double eigenvalue at the knot", ok,
             f"|D|/scale={r_val:.2e}<=1e-9, |dD/dlam|/scale={r_dl:.2e}<=1e-8, "
             f"multiplicity={mult}==2", dt, 1.0)


def test_criterion_04_eigenfunction_formulas():
    t0 = time.perf_counter()
    worst = 0.0
    for kind in ("AtDelta", "AtEps"):
        for k in range(1, 6):
            worst = max(worst, eigenfunction_boundary_residual(kind, k))
    dt = time.perf_counter() - t0
    ok = worst <= 1e-8
    _verdict(4, "closed-form eigenfunctions k=1..5", ok,
             f"worst boundary residual {worst:.2e} <= 1e-8", dt, 1.0)


def test_criterion_05_lambda_min_chain():
    t0 = time.perf_counter()
    zs = bi_quadrant_zeros(5)
    margins = []
    ok = True
    for k in range(1, 6):
        _, lam_min = find_lambda_min(k)
        cot = zs[k - 1].location.real / zs[k - 1].location.imag
        ok = ok and lam_min < cot < KNOT
        margins.append(min(cot - lam_min, KNOT - cot))
    dt = time.perf_counter() - t0
    ok = ok and all(m > 0.0 for m in margins)
    _verdict(5, "minimum below quadrant-zero cotangent below knot", ok,
             "margins " + ", ".join(f"{m:.2e}" for m in margins), dt, 20.0)


def test_criterion_06_shooting_oracle():
    t0 = time.perf_counter()
    worst = 0.0
    for eps in (0.5, 1.0, 2.0, 5.0):
        mine = [r.point.lam.real for r in eigenvalues(eps, max_count=8)
                if r.point.on_real_axis][:3]
        other = real_eigenvalues_shooting(eps, count=3)
        worst = max(worst, max(abs(a - b) for a, b in zip(mine, other)))
    dt = time.perf_counter() - t0
    ok = worst <= 1e-7
    _verdict(6, "determinant vs shooting integration", ok,
             f"worst |difference| {worst:.2e} <= 1e-7 over eps in "
             "{0.5,1,2,5}", dt, 30.0)


def test_criterion_07_small_coupling_limit():
    t0 = time.perf_counter()
    ok = True
    details = []
    for n in (1, 2):
        lam_devs = []
        mu_devs = []
        for eps in (1e-2, 1e-3):
            target = (math.pi * n / 2.0) ** 2
            lam, okc, _, _ = _correct(eps, complex(target / eps), max_iter=20)
            ok = ok and okc
            lam_devs.append(abs(lam.real - target / eps))
            mu_devs.append(abs(eps * lam.real - target))
        # the rescaled eigenvalue converges; the raw deviation shrinks one
        # order per parameter decade (the leading perturbation order)
        ratio = lam_devs[0] / lam_devs[1]
        ok = ok and mu_devs[1] < mu_devs[0] < 1e-3
        ok = ok and 10.0 / 3.0 <= ratio <= 30.0
        details.append(f"n={n} ratio={ratio:.2f} "
                       f"residual {mu_devs[1]:.1e}->0")
    dt = time.perf_counter() - t0
    _verdict(7, "first-order scaling toward eps=0", ok,
             ", ".join(details) + " (want ~10 within factor 3)", dt, 5.0)


def test_criterion_08_special_function_suite():
    t0 = time.perf_counter()
    checks = _check_identities("full")
    dt = time.perf_counter() - t0
    ok = bool(checks) and all(c.passed for c in checks)
    worst = max(float(c.observed) for c in checks)
    _verdict(8, "function identities on 1000 points |z|<=15", ok,
             f"worst residual {worst:.2e} <= 1e-10", dt, 5.0)


def test_criterion_09_zero_classification():
    t0 = time.perf_counter()
    checks = _check_classification("full")
    dt = time.perf_counter() - t0
    names = {c.name for c in checks}
    ok = (bool(checks) and all(c.passed for c in checks)
          and {f"classification-a{a:g}" for a in (-5, -2, 0, 2, 5)} <= names)
    _verdict(9, "sector census for a in {-5,-2,0,2,5}, |z|<=12", ok,
             f"{len(checks)} exact table comparisons", dt, 60.0)


def test_criterion_10_trajectory_locus_consistency():
    t0 = time.perf_counter()
    pair = critical_pairs(1)[0]
    tr_d = trace_lambda(1, pair.delta_k - 0.6, pair.delta_k + 0.6)
    tr_e = trace_lambda(1, pair.eps_k - 2.0, pair.eps_k + 0.4)
    knot_ev = next(e for e in tr_d.events if e.kind == "KnotCrossing")
    coll_ev = next(e for e in tr_e.events if e.kind == "Collision")
    knot_err = abs(knot_ev.eps - pair.delta_k)
    coll_err = abs(coll_ev.eps - pair.eps_k)
    lam_err = abs(coll_ev.lam.real - KNOT)

    curve = trace_gamma(1, -math.sqrt(3.0), math.sqrt(3.0), step_hint=3e-4)
    poly = np.array([xi for _, xi in curve.samples])
    dmax = 0.0
    for s in tr_d.samples + tr_e.samples:
        if not s.on_real_axis or s.eps < pair.delta_k:
            continue
        xi = s.eps ** (1.0 / 3.0) * (s.lam + 1j)
        seg = np.abs(poly - xi)
        i = int(np.argmin(seg))
        best = seg[i]
        for j in (i - 1, i + 1):
            if 0 <= j < len(poly):
                a, b = poly[i], poly[j]
                t = np.clip(((xi - a) * np.conj(b - a)).real
                            / abs(b - a) ** 2, 0.0, 1.0)
                best = min(best, abs(xi - (a + t * (b - a))))
        dmax = max(dmax, float(best))
    dt = time.perf_counter() - t0
    ok = knot_err <= 1e-8 and coll_err <= 1e-8 and lam_err <= 1e-8 and dmax <= 1e-7
    _verdict(10, "events vs landmarks, trajectory vs curve", ok,
             f"knot {knot_err:.2e}, collision {coll_err:.2e}, "
             f"lam {lam_err:.2e} (<=1e-8); curve distance {dmax:.2e} <= 1e-7",
             dt, 60.0)


def test_criterion_11_large_coupling_shape():
    # qualitative stand-in for the asymptotic distribution along the two
    # limit segments, checked at eps = 200 with tolerance 0.1
    t0 = time.perf_counter()
    checks = _check_large_eps("full")
    dt = time.perf_counter() - t0
    ok = bool(checks) and all(c.passed for c in checks)
    detail = ", ".join(f"{c.name} observed {c.observed}" for c in checks)
    _verdict(11, "eps=200 spectrum hugs the limit segments", ok,
             detail + " (<= 0.1)", dt, 60.0)
