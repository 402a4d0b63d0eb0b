"""Real-locus curve tracing and eigenvalue branch continuation."""

import cmath
import math

import numpy as np
import pytest

from airylocus import (
    NotABranch,
    SQRT3,
    Va,
    detect_criticals_on_gamma,
    find_lambda_min,
    trace_gamma,
    trace_lambda,
)
from airylocus.airy import family_arrays
from airylocus.curves import GammaCurve, GammaMarkers, _gamma_velocity
from airylocus.locus import _det_arrays
from airylocus.zeros import KNOT, bi_quadrant_zeros

ALPHA_1 = 1.3331763452034688 + 2.3091291653413926j
BETA_1 = 0.99317635371523638 + 1.7202319055107882j
Z_1 = 0.97754488673162065 + 2.1412907060387445j
DELTA_1 = 5.0905064853074737
EPS_1 = 12.312455672260523
DELTA_2 = 36.358147299275558
EPS_2 = 53.186896075934243


@pytest.fixture(scope="module")
def curve1():
    return trace_gamma(1, -SQRT3, SQRT3)


@pytest.fixture(scope="module")
def branch1():
    return trace_lambda(1, 1.0, 14.0)


def test_markers_hit_the_landmarks(curve1):
    m = curve1.markers
    assert abs(m.alpha - ALPHA_1) < 1e-9
    assert abs(m.beta - BETA_1) < 1e-9
    assert abs(m.z_point - Z_1) < 1e-9
    a0, x0 = curve1.samples[0]
    a1, x1 = curve1.samples[-1]
    assert a0 == -SQRT3 and abs(x0 - ALPHA_1) < 1e-12
    assert a1 == SQRT3 and abs(x1 - BETA_1) < 1e-12


def test_samples_increase_and_stay_in_quadrant(curve1):
    avals = [a for a, _ in curve1.samples]
    assert all(b > a for a, b in zip(avals, avals[1:]))
    for _, xi in curve1.samples:
        assert xi.real > 0.0 and xi.imag > 0.0


def test_samples_sit_on_the_curve(curve1):
    # each stored point satisfies the defining two-term combination; near
    # a = 0 the combination degenerates to a single term, so skip the seam
    worst = 0.0
    for a, xi in curve1.samples:
        if abs(a) < 0.1:
            continue
        val, _, _, scale = family_arrays(np.array([xi]), Va(a))
        worst = max(worst, abs(val[0]) / scale[0])
    assert worst < 1e-10


def test_tangent_directions(curve1):
    va = _gamma_velocity(curve1.markers.alpha)
    assert abs(va.imag) < 1e-9 * abs(va)
    assert va.real < 0.0
    vb = _gamma_velocity(curve1.markers.beta)
    assert abs(math.remainder(cmath.phase(vb) - 2.0 * math.pi / 3.0, math.pi)) < 1e-8
    vz = _gamma_velocity(curve1.markers.z_point)
    assert abs(math.degrees(cmath.phase(vz)) - (-122.5905)) < 1e-3


def test_height_peaks_at_the_collision_marker():
    curve = trace_gamma(1, -10.0, 10.0)
    ims = [(a, xi.imag) for a, xi in curve.samples]
    before = [v for a, v in ims if a <= -SQRT3 + 1e-12]
    after = [v for a, v in ims if a >= -SQRT3 - 1e-12]
    assert all(b > a for a, b in zip(before, before[1:]))
    assert all(b < a for a, b in zip(after, after[1:]))
    assert max(v for _, v in ims) == pytest.approx(EPS_1 ** (1.0 / 3.0), rel=1e-9)


def test_find_lambda_min_values():
    e1, l1 = find_lambda_min(1)
    assert abs(e1 - 9.2688148622) < 1e-6
    assert abs(l1 - 0.4548390990) < 1e-8
    e2, l2 = find_lambda_min(2)
    assert abs(e2 - 47.1955476181) < 1e-5
    assert abs(l2 - 0.5227674102) < 1e-8


def test_lambda_min_ordering_chain():
    # the deepest point sits below cot(arg z_k), which sits below the knot
    zs = bi_quadrant_zeros(2)
    for k in (1, 2):
        _, lam_min = find_lambda_min(k)
        cot = zs[k - 1].location.real / zs[k - 1].location.imag
        assert lam_min < cot < KNOT


def test_detect_criticals_is_the_collision():
    got = detect_criticals_on_gamma(1)
    assert len(got) == 1
    a_star, xi_star = got[0]
    assert abs(a_star + SQRT3) < 1e-6
    assert abs(xi_star - ALPHA_1) < 1e-8
    assert abs(xi_star.imag ** 3 - EPS_1) < 1e-9 * EPS_1


def test_branch_one_event_sequence(branch1):
    kinds = [e.kind for e in branch1.events]
    assert kinds == ["KnotCrossing", "Minimum", "Collision", "Departure"]
    knot_e, min_e, col_e, dep_e = branch1.events
    assert abs(knot_e.eps - DELTA_1) < 1e-8
    assert abs(knot_e.lam.real - KNOT) < 1e-10
    assert abs(min_e.eps - 9.2688148622) < 1e-5
    assert abs(min_e.lam.real - 0.4548390990) < 1e-8
    assert abs(col_e.eps - EPS_1) < 1e-8
    assert abs(col_e.lam.real - KNOT) < 1e-8
    assert dep_e.eps > col_e.eps


def test_branch_one_geometry(branch1):
    es = [s.eps for s in branch1.samples]
    assert es[0] == 1.0 and es[-1] == 14.0
    assert all(b > a for a, b in zip(es, es[1:]))
    col_eps = branch1.events[2].eps
    for s in branch1.samples:
        if s.eps <= col_eps:
            assert s.on_real_axis
        else:
            assert s.lam.imag > 0.0


def test_branch_leaves_perpendicular(branch1):
    col_eps = branch1.events[2].eps
    idx = next(i for i, s in enumerate(branch1.samples)
               if abs(s.eps - col_eps) < 1e-9 and s.on_real_axis)
    lam_c = branch1.samples[idx].lam
    for s in branch1.samples[idx + 1:idx + 3]:
        d = s.lam - lam_c
        assert math.degrees(math.atan2(abs(d.real), d.imag)) < 1.0


def test_branch_samples_stay_on_locus(branch1):
    worst = 0.0
    for s in branch1.samples:
        v, _, _, _, sc = _det_arrays(s.eps, np.array([s.lam]))
        worst = max(worst, abs(v[0]) / sc[0])
    assert worst < 1e-9


def test_branch_two_is_the_mirror(branch1):
    t2 = trace_lambda(2, 1.0, 14.0)
    assert [e.kind for e in t2.events] == ["Collision", "Departure"]
    assert abs(t2.events[0].eps - branch1.events[2].eps) < 1e-9
    for s in t2.samples:
        if not s.on_real_axis:
            assert s.lam.imag < 0.0
    assert t2.samples[-1].eps == 14.0
    assert abs(t2.samples[-1].lam - branch1.samples[-1].lam.conjugate()) < 1e-10
    # mirrored trajectory agrees pointwise, not just at the ends
    e1 = np.array([s.eps for s in branch1.samples])
    l1 = np.array([s.lam for s in branch1.samples])
    for s in t2.samples[:-1]:
        if s.eps <= branch1.events[2].eps:
            continue
        i = int(np.searchsorted(e1, s.eps))
        if 0 < i < len(e1) and e1[i] - e1[i - 1] > 0:
            w = (s.eps - e1[i - 1]) / (e1[i] - e1[i - 1])
            interp = (1.0 - w) * l1[i - 1] + w * l1[i]
            assert abs(s.lam - interp.conjugate()) < 1e-6


def test_branch_three_long_trace():
    t = trace_lambda(3, 1.0, 60.0)
    kinds = [e.kind for e in t.events]
    assert kinds == ["KnotCrossing", "Minimum", "Collision", "Departure"]
    assert abs(t.events[0].eps - DELTA_2) < 1e-7
    assert abs(t.events[1].eps - 47.1955476181) < 1e-4
    assert abs(t.events[2].eps - EPS_2) < 1e-7
    tail = [s for s in t.samples if s.eps > t.events[2].eps]
    assert tail and all(s.lam.imag > 0.0 for s in tail)


def test_branch_three_short_trace_has_no_events():
    t = trace_lambda(3, 1.0, 30.0)
    assert t.events == []
    assert all(s.on_real_axis for s in t.samples)


def test_trace_from_complex_start():
    t = trace_lambda(1, 13.0, 20.0)
    assert t.events == []
    assert t.samples[0].eps == 13.0 and t.samples[-1].eps == 20.0
    assert all(not s.on_real_axis for s in t.samples)
    assert all(s.lam.imag > 0.0 for s in t.samples)


def test_trace_validation():
    with pytest.raises(NotABranch):
        trace_lambda(0, 1.0, 2.0)
    with pytest.raises(ValueError):
        trace_lambda(1, -1.0, 2.0)
    with pytest.raises(ValueError):
        trace_lambda(1, 3.0, 2.0)


def test_trace_degenerate_range_is_empty():
    t = trace_lambda(1, 2.0, 2.0)
    assert t.branch == 1
    assert t.samples == [] and t.events == []


def test_gamma_validation():
    with pytest.raises(ValueError):
        trace_gamma(0, -1.0, 1.0)
    with pytest.raises(ValueError):
        trace_gamma(1, 1.0, -1.0)
    with pytest.raises(ValueError):
        trace_gamma(1, -1.0, 1.0, step_hint=0.0)


def test_gamma_windows_off_the_anchors():
    right = trace_gamma(1, 2.5, 4.0)
    assert right.markers == GammaMarkers(None, None, None)
    avals = [a for a, _ in right.samples]
    assert avals[0] == 2.5 and avals[-1] == 4.0
    assert all(b > a for a, b in zip(avals, avals[1:]))

    left = trace_gamma(1, -6.0, -3.0)
    assert left.markers == GammaMarkers(None, None, None)
    avals = [a for a, _ in left.samples]
    assert avals[0] == -6.0 and avals[-1] == -3.0
    for a, xi in left.samples:
        val, _, _, scale = family_arrays(np.array([xi]), Va(a))
        assert abs(val[0]) < 1e-9 * scale[0]


def test_xi_at_interpolates(curve1):
    assert curve1.xi_at(-SQRT3) == curve1.samples[0][1]
    a0, x0 = curve1.samples[10]
    a1, x1 = curve1.samples[11]
    mid = 0.5 * (a0 + a1)
    assert abs(curve1.xi_at(mid) - 0.5 * (x0 + x1)) < 1e-12
    assert curve1.xi_at(-99.0) == curve1.samples[0][1]
    assert curve1.xi_at(99.0) == curve1.samples[-1][1]
    empty = GammaCurve(1, [], GammaMarkers(None, None, None))
    with pytest.raises(ValueError):
        empty.xi_at(0.0)
