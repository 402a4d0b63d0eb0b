"""Ray zeros, landmark pairs, first-quadrant zeros, and the sector census."""

import cmath
import math

import pytest

from airylocus import (
    AI,
    SQRT3,
    U_MINUS,
    U_PLUS,
)
from airylocus.zeros import (
    KNOT,
    bi_quadrant_zeros,
    classify_va_zeros,
    critical_pairs,
    negative_axis_zeros,
    ray_zeros,
)

# reference roots pinned from high-precision evaluation of the same
# two-term combinations; regenerating them needs only mpmath
U_MINUS_NEG = [
    -2.6663526904069381,
    -4.3424775680395573,
    -5.74102881611224,
    -6.9861423742603472,
    -8.1287791262163012,
]
U_PLUS_NEG = [
    -1.9863527074304728,
    -3.8253391911604528,
    -5.2956211368427555,
    -6.5843078684860812,
    -7.7573206393945231,
]
LANDMARKS = [
    (5.0905064853074737, 12.312455672260523),
    (36.358147299275558, 53.186896075934243),
    (96.458969050015043, 122.90260136967589),
    (185.40535912556263, 221.46453630090338),
    (303.19855252268559, 348.87340543008327),
]
BI_QUADRANT = [
    0.97754488673162065 + 2.1412907060387445j,
    1.8967750138953363 + 3.6272917643589193j,
    2.6331577393549468 + 4.8554681799798454j,
    3.2785312361567462 + 5.9445042811790518j,
    3.8658527317333462 + 6.9416922095821114j,
]


def test_knot_constant():
    assert KNOT == 1.0 / math.sqrt(3.0)
    for p in critical_pairs(2):
        assert p.knot == KNOT


def test_negative_axis_zeros_frozen():
    got_m = negative_axis_zeros(U_MINUS, 5)
    got_p = negative_axis_zeros(U_PLUS, 5)
    for g, w in zip(got_m, U_MINUS_NEG):
        assert abs(g - w) < 1e-12
    for g, w in zip(got_p, U_PLUS_NEG):
        assert abs(g - w) < 1e-12
    with pytest.raises(ValueError):
        negative_axis_zeros(U_MINUS, 0)


def test_landmark_pairs_frozen():
    for p, (dk, ek) in zip(critical_pairs(5), LANDMARKS):
        assert abs(p.delta_k - dk) < 1e-12 * dk
        assert abs(p.eps_k - ek) < 1e-12 * ek


def test_landmark_interleaving():
    ps = critical_pairs(5)
    for p in ps:
        assert p.delta_k < p.eps_k
    for lo, hi in zip(ps, ps[1:]):
        assert lo.eps_k < hi.delta_k
        assert lo.beta.modulus < lo.alpha.modulus < hi.beta.modulus


def test_ray_zeros_sit_on_the_ray():
    for fam in (U_MINUS, U_PLUS):
        for z in ray_zeros(fam, 5):
            assert abs(cmath.phase(z.location) - math.pi / 3.0) < 1e-14
            assert z.modulus == abs(z.location)


def test_landmarks_are_modulus_cubes():
    # both landmark families are pure functions of the ray-zero moduli
    for p in critical_pairs(5):
        assert p.eps_k == (p.alpha.modulus * SQRT3 / 2.0) ** 3
        assert p.delta_k == (p.beta.modulus * SQRT3 / 2.0) ** 3


def test_ray_zeros_family_forms():
    by_const = ray_zeros(U_MINUS, 2)
    by_name = ray_zeros("Uminus", 2)
    assert [z.location for z in by_const] == [z.location for z in by_name]
    with pytest.raises(ValueError):
        ray_zeros(AI, 2)


def test_bi_quadrant_zeros_frozen():
    zs = bi_quadrant_zeros(5)
    for z, w in zip(zs, BI_QUADRANT):
        assert abs(z.location - w) < 1e-12
        assert math.pi / 3.0 < cmath.phase(z.location) < math.pi / 2.0
    assert [z.modulus for z in zs] == sorted(z.modulus for z in zs)
    with pytest.raises(ValueError):
        bi_quadrant_zeros(0)


# sector census oracles at search radius 12; the dichotomy flips at
# |a| = sqrt(3) and the positive real axis trades one zero between the
# combination and its derivative as a crosses the two thresholds
CENSUS = {
    -5.0: (
        {"conjugate": 8, "negative-axis": 9, "positive-axis": 1, "sector-0-pi3": 8},
        {"conjugate": 9, "negative-axis": 9, "sector-0-pi3": 9},
    ),
    -2.0: (
        {"conjugate": 8, "negative-axis": 8, "positive-axis": 1, "sector-0-pi3": 8},
        {"conjugate": 9, "negative-axis": 9, "sector-0-pi3": 9},
    ),
    0.0: (
        {"conjugate": 9, "negative-axis": 9, "sector-pi3-pi2": 9},
        {"conjugate": 9, "negative-axis": 9, "sector-pi3-pi2": 9},
    ),
    2.0: (
        {"conjugate": 9, "negative-axis": 9, "sector-0-pi3": 9},
        {"conjugate": 8, "negative-axis": 9, "positive-axis": 1, "sector-0-pi3": 8},
    ),
    5.0: (
        {"conjugate": 9, "negative-axis": 9, "sector-0-pi3": 9},
        {"conjugate": 8, "negative-axis": 9, "positive-axis": 1, "sector-0-pi3": 8},
    ),
}


@pytest.mark.parametrize("a", sorted(CENSUS))
def test_sector_census(a):
    got = classify_va_zeros(a, 12.0)
    want_v, want_d = CENSUS[a]
    assert got.counts == want_v
    assert got.derivative_counts == want_d


def test_census_radius_validation():
    with pytest.raises(ValueError):
        classify_va_zeros(1.0, 0.0)
    with pytest.raises(ValueError):
        classify_va_zeros(1.0, 16.0)
