"""Built-in verification suite.

Runs the library's cross-checks end to end: landmark intervals for the
critical values, the Jordan-cell structure at the first collision, boundary
residuals of the closed-form eigenfunctions, the lambda-minimum bound chain,
agreement with an independent shooting integrator, the small-eps limit rate,
analytic identities of the special-function layer, the zero-classification
table, trajectory/curve cross-consistency, and the qualitative large-eps
spectrum shape.

Every check reports (name, expected, observed, tolerance, passed) plus its
wall time and the provenance of the expected value (which oracle or identity
produced it).  The report is JSON-serializable with a stable schema.
"""

from __future__ import annotations

import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from . import zeros as _zeros
from .airy import (AI, SQRT3, airy_pair_arrays, family_arrays, warmup,
                   wronskian_residual)
from .curves import _correct, find_lambda_min, trace_gamma, trace_lambda
from .locus import (determinant, determinant_partials,
                    eigenfunction_boundary_residual, eigenvalues,
                    multiplicity_at)
from .shooting import real_eigenvalues_shooting
from .zeros import bi_quadrant_zeros, classify_va_zeros, critical_pairs

__all__ = ["CheckResult", "VerificationReport", "run_verification",
           "SCHEMA_VERSION"]

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: str
    observed: str
    tolerance: str
    passed: bool
    runtime_ms: float
    provenance: str


@dataclass(frozen=True)
class VerificationReport:
    level: str
    checks: list[CheckResult]
    overall: bool
    schema_version: int = SCHEMA_VERSION
    produced_by: str = "verify"

    def to_json(self) -> str:
        doc = {
            "schema_version": self.schema_version,
            "produced_by": self.produced_by,
            "level": self.level,
            "overall": self.overall,
            "checks": [asdict(c) for c in self.checks],
        }
        return json.dumps(doc, indent=2)


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, (time.perf_counter() - t0) * 1e3


def _interval_check(name, value, lo, hi, ms, provenance):
    return CheckResult(name, f"[{lo}, {hi}]", _fmt(value), "interval",
                       lo <= value <= hi, ms, provenance)


def _bound_check(name, value, bound, ms, provenance):
    return CheckResult(name, "0", _fmt(value), _fmt(bound),
                       value <= bound, ms, provenance)


# ---------------------------------------------------------------------------
# individual criteria


def _check_critical_landmarks(level):
    pairs, ms = _timed(lambda: critical_pairs(1))
    p = pairs[0]
    prov = "two-digit landmark interval"
    return [
        _interval_check("critical-delta-1", p.delta_k, 5.0, 5.2, ms, prov),
        _interval_check("critical-eps-1", p.eps_k, 12.2, 12.4, 0.0, prov),
    ]


def _check_minimum_landmark(level):
    (em, lm), ms = _timed(lambda: find_lambda_min(1))
    prov = "two-digit landmark interval"
    return [
        _interval_check("minimum-eps-1", em, 9.2, 9.4, ms, prov),
        _interval_check("minimum-lambda-1", lm, 0.44, 0.46, 0.0, prov),
    ]


def _check_jordan_cell(level):
    def body():
        p = critical_pairs(1)[0]
        knot = _zeros.KNOT
        d = determinant(p.eps_k, complex(knot))
        dp = determinant_partials(p.eps_k, complex(knot))
        m = multiplicity_at(p.eps_k, complex(knot))
        return (abs(d.value) / d.scale, abs(dp.dlam) / d.scale, m)

    (rd, rdl, mult), ms = _timed(body)
    return [
        _bound_check("jordan-determinant", rd, 1e-9, ms,
                     "double-root structure at the collision"),
        _bound_check("jordan-dlambda", rdl, 1e-8, 0.0,
                     "double-root structure at the collision"),
        CheckResult("jordan-multiplicity", "2", str(mult), "exact",
                    mult == 2, 0.0, "argument-principle count"),
    ]


def _check_eigenfunctions(level):
    kmax = 2 if level == "fast" else 5
    out = []
    for k in range(1, kmax + 1):
        for kind in ("AtDelta", "AtEps"):
            r, ms = _timed(
                lambda k=k, kind=kind: eigenfunction_boundary_residual(kind, k))
            out.append(_bound_check(f"eigenfunction-{kind.lower()}-k{k}",
                                    r, 1e-8, ms, "closed-form boundary values"))
    return out


def _check_lambda_min_chain(level):
    kmax = 2 if level == "fast" else 5
    out = []
    for k in range(1, kmax + 1):
        def body(k=k):
            _, lm = find_lambda_min(k)
            z = bi_quadrant_zeros(k)[k - 1].location
            cot = z.real / z.imag
            return min(cot - lm, _zeros.KNOT - cot)

        margin, ms = _timed(body)
        out.append(CheckResult(
            f"lambda-min-chain-k{k}", "> 0", _fmt(margin), "strict",
            margin > 0.0, ms, "curve minimum vs quadrant-zero cotangent"))
    return out


def _check_shooting(level):
    eps_list = (1.0, 5.0) if level == "fast" else (0.5, 1.0, 2.0, 5.0)
    out = []
    for eps in eps_list:
        def body(eps=eps):
            sh = real_eigenvalues_shooting(eps, 3)
            mine = [r.point.lam.real for r in eigenvalues(eps, max_count=6)
                    if r.point.on_real_axis][:3]
            return max(abs(a - b) for a, b in zip(sh, mine))

        err, ms = _timed(body)
        out.append(_bound_check(f"shooting-eps-{eps:g}", err, 1e-7, ms,
                                "independent shooting integrator"))
    return out


def _check_small_eps(level):
    # per-eps deviation of lam_n from the leading term (pi n / 2)^2 / eps;
    # that deviation is first order in eps, so tenfold eps gives a tenfold
    # deviation.  Newton from the leading-term seed is safe: the deviation
    # is O(eps) while the level spacing is O(1/eps).
    def body():
        ratios = []
        for n in (1, 2):
            devs = []
            for eps in (1e-2, 1e-3):
                seed = (math.pi * n / 2.0) ** 2 / eps
                lam, ok, _, _ = _correct(eps, complex(seed), max_iter=20)
                if not ok:
                    return None
                devs.append(abs(lam.real - seed))
            ratios.append(devs[0] / devs[1])
        return ratios

    ratios, ms = _timed(body)
    out = []
    if ratios is None:
        return [CheckResult("small-eps-rate", "10", "no convergence",
                            "factor 3", False, ms,
                            "first-order perturbation scaling")]
    for n, ratio in zip((1, 2), ratios):
        out.append(CheckResult(
            f"small-eps-rate-n{n}", "10", _fmt(ratio), "factor 3",
            10.0 / 3.0 <= ratio <= 30.0, ms if n == 1 else 0.0,
            "first-order perturbation scaling"))
    return out


_ROT_P = complex(-0.5, 0.5 * math.sqrt(3.0))   # exp(+2 pi i / 3)
_ROT_M = complex(-0.5, -0.5 * math.sqrt(3.0))  # exp(-2 pi i / 3)
_E16P = complex(0.5 * math.sqrt(3.0), 0.5)     # exp(+ i pi / 6)
_E16M = complex(0.5 * math.sqrt(3.0), -0.5)    # exp(- i pi / 6)


def _identity_points(count: int) -> np.ndarray:
    rng = np.random.default_rng(20260822)
    r = 15.0 * np.sqrt(rng.random(count))
    th = 2.0 * math.pi * rng.random(count)
    return r * np.exp(1j * th)


def _check_identities(level):
    count = 200 if level == "fast" else 1000
    z = _identity_points(count)
    out = []

    def wron():
        return float(max(wronskian_residual(complex(w)) for w in z))

    r, ms = _timed(wron)
    out.append(_bound_check("identity-wronskian", r, 1e-10, ms,
                            "Wronskian of the fundamental pair"))

    def rotations():
        a0, _, l0, b0, _, lb0 = airy_pair_arrays(z)
        ap, _, lp, _, _, _ = airy_pair_arrays(z * _ROT_P)
        am, _, lm, _, _, _ = airy_pair_arrays(z * _ROT_M)
        v0 = a0 * np.exp(l0)
        bv = b0 * np.exp(lb0)
        vp = ap * np.exp(lp)
        vm = am * np.exp(lm)
        # connection: Ai(z) + w*Ai(wz) + conj(w)*Ai(conj(w)z) = 0
        conn = v0 + _ROT_P * vp + _ROT_M * vm
        scale_c = np.abs(v0) + np.abs(vp) + np.abs(vm)
        # the two real combinations against their rotated forms
        up = SQRT3 * v0 + bv
        um = -SQRT3 * v0 + bv
        rot_p = 2.0 * (_E16M * vp + _E16P * vm)
        rot_m = 2.0j * (vp - vm)
        scale_u = np.abs(up) + np.abs(rot_p) + np.abs(um) + np.abs(rot_m)
        e1 = float(np.max(np.abs(conn) / scale_c))
        e2 = float(np.max(np.abs(up - rot_p) / scale_u))
        e3 = float(np.max(np.abs(um - rot_m) / scale_u))
        return e1, e2, e3

    (e1, e2, e3), ms = _timed(rotations)
    out.append(_bound_check("identity-connection", e1, 1e-10, ms,
                            "three-ray connection identity"))
    out.append(_bound_check("identity-rotation-plus", e2, 1e-10, 0.0,
                            "rotation form of the plus combination"))
    out.append(_bound_check("identity-rotation-minus", e3, 1e-10, 0.0,
                            "rotation form of the minus combination"))

    def seam():
        # same angular sample, radii squeezed into the route-switch annulus;
        # value and derivative share a denominator so points adjacent to a
        # zero of one of them stay well posed
        zs = (7.2 + 2.6 * np.abs(z) / 15.0) * np.exp(1j * np.angle(z))
        rel = []
        for fam in (AI,):
            vs, ds, ls, _ = family_arrays(zs, fam, force="series")
            va, da, la2, _ = family_arrays(zs, fam, force="asymptotic")
            f = np.exp(ls - la2)
            den = np.abs(va) + np.abs(da)
            rel.append(float(np.max(np.abs(vs * f - va) / den)))
            rel.append(float(np.max(np.abs(ds * f - da) / den)))
        return float(max(rel))

    r, ms = _timed(seam)
    out.append(_bound_check("identity-seam", r, 1e-10, ms,
                            "series vs asymptotic route agreement"))
    return out


# expected zero-pattern table: per sign of a, the counts that must be equal
# and the sector the complex zeros occupy
def _expected_pattern(a: float) -> dict:
    if a == 0.0:
        return {"value_axis": 0, "deriv_axis": 0, "sector": "sector-pi3-pi2"}
    if a < 0.0:
        return {"value_axis": 1, "deriv_axis": 0, "sector": "sector-0-pi3"}
    return {"value_axis": 0, "deriv_axis": 1, "sector": "sector-0-pi3"}


def _check_classification(level):
    avals = (-2.0, 0.0, 2.0) if level == "fast" else (-5.0, -2.0, 0.0, 2.0, 5.0)
    out = []
    for a in avals:
        def body(a=a):
            cls = classify_va_zeros(a, 12.0)
            want = _expected_pattern(a)
            got_axis_v = cls.counts.get("positive-axis", 0)
            got_axis_d = cls.derivative_counts.get("positive-axis", 0)
            bad_sectors_v = [s for s in cls.counts
                             if s not in ("negative-axis", "positive-axis",
                                          "conjugate", want["sector"])]
            bad_sectors_d = [s for s in cls.derivative_counts
                             if s not in ("negative-axis", "positive-axis",
                                          "conjugate", want["sector"])]
            ok = (got_axis_v == want["value_axis"]
                  and got_axis_d == want["deriv_axis"]
                  and not bad_sectors_v and not bad_sectors_d
                  and cls.counts.get(want["sector"], 0) > 0)
            desc = (f"axis {got_axis_v}/{got_axis_d}, stray "
                    f"{bad_sectors_v + bad_sectors_d}")
            want_desc = (f"axis {want['value_axis']}/{want['deriv_axis']}, "
                         f"complex zeros in {want['sector']}")
            return ok, want_desc, desc

        (ok, want_desc, desc), ms = _timed(body)
        out.append(CheckResult(f"classification-a{a:g}", want_desc, desc,
                               "exact", ok, ms, "sector classification table"))
    return out


def _check_cross_consistency(level):
    out = []

    def body():
        p = critical_pairs(1)[0]
        tr_knot = trace_lambda(1, p.delta_k - 0.6, p.delta_k + 0.6)
        tr_coll = trace_lambda(1, p.eps_k - 2.0, p.eps_k + 0.4)
        ev_k = [e for e in tr_knot.events if e.kind == "KnotCrossing"]
        ev_c = [e for e in tr_coll.events if e.kind == "Collision"]
        knot_err = abs(ev_k[0].eps - p.delta_k) if ev_k else math.inf
        coll_err = abs(ev_c[0].eps - p.eps_k) if ev_c else math.inf
        lam_err = (abs(ev_c[0].lam - _zeros.KNOT) if ev_c else math.inf)

        curve = trace_gamma(1, -SQRT3, SQRT3, step_hint=3e-4)
        pts = np.array([s[1] for s in curve.samples])
        seg_a = pts[:-1]
        seg_v = pts[1:] - pts[:-1]

        def poly_dist(w):
            t = np.clip(((w - seg_a) * np.conj(seg_v)).real
                        / np.abs(seg_v) ** 2, 0.0, 1.0)
            return float(np.min(np.abs(w - (seg_a + t * seg_v))))

        dmax = 0.0
        for s in tr_coll.samples:
            if s.on_real_axis and s.eps >= p.delta_k:
                w = s.eps ** (1.0 / 3.0) * (s.lam + 1j)
                dmax = max(dmax, poly_dist(w))
        return knot_err, coll_err, lam_err, dmax

    (knot_err, coll_err, lam_err, dmax), ms = _timed(body)
    out.append(_bound_check("cross-knot-event", knot_err, 1e-8, ms,
                            "ray-zero critical table"))
    out.append(_bound_check("cross-collision-event", coll_err, 1e-8, 0.0,
                            "ray-zero critical table"))
    out.append(_bound_check("cross-collision-lambda", lam_err, 1e-8, 0.0,
                            "stored knot constant"))
    out.append(_bound_check("cross-point-to-curve", dmax, 1e-7, 0.0,
                            "curve polyline from the zero-set flow"))
    return out


def _check_large_eps(level):
    def body():
        knot = _zeros.KNOT
        recs = eigenvalues(200.0, max_count=24)

        def seg_dist(w, a, b):
            ab = b - a
            t = min(max(((w - a) * (ab).conjugate()).real / abs(ab) ** 2, 0.0),
                    1.0)
            return abs(w - (a + t * ab))

        worst = 0.0
        for r in recs:
            w = complex(r.point.lam)
            d = min(seg_dist(w, complex(knot), 1j),
                    seg_dist(w, complex(knot), -1j),
                    abs(w.imag) if w.real >= knot else abs(w - complex(knot)))
            worst = max(worst, d)
        return worst

    worst, ms = _timed(body)
    return [_bound_check("large-eps-shape", worst, 0.1, ms,
                         "limit-segment geometry")]


_CHECKS = [
    ("critical", _check_critical_landmarks, ("fast", "full")),
    ("minimum", _check_minimum_landmark, ("fast", "full")),
    ("jordan", _check_jordan_cell, ("fast", "full")),
    ("eigenfunctions", _check_eigenfunctions, ("fast", "full")),
    ("lambda-min", _check_lambda_min_chain, ("fast", "full")),
    ("shooting", _check_shooting, ("fast", "full")),
    ("small-eps", _check_small_eps, ("fast", "full")),
    ("identities", _check_identities, ("fast", "full")),
    ("classification", _check_classification, ("fast", "full")),
    ("cross-consistency", _check_cross_consistency, ("fast", "full")),
    ("large-eps", _check_large_eps, ("full",)),
]


def run_verification(level: str = "fast", jobs: int | None = None) -> VerificationReport:
    """Run the suite at the given level; ``jobs`` bounds the worker pool."""
    if level not in ("fast", "full"):
        raise ValueError(f"level must be 'fast' or 'full', got {level!r}")
    warmup()
    active = [(name, fn) for name, fn, levels in _CHECKS if level in levels]
    if jobs is None:
        jobs = os.cpu_count() or 1
    jobs = max(1, min(jobs, len(active)))
    results: list[list[CheckResult]] = [None] * len(active)  # type: ignore
    if jobs == 1:
        for i, (_, fn) in enumerate(active):
            results[i] = fn(level)
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            futs = [pool.submit(fn, level) for _, fn in active]
            for i, fut in enumerate(futs):
                results[i] = fut.result()
    checks = [c for group in results for c in group]
    overall = all(c.passed for c in checks)
    return VerificationReport(level=level, checks=checks, overall=overall,
                              produced_by=f"verify --level {level}")
