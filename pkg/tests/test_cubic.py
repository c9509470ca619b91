import numpy as np
import pytest

from asymotto.cubic import CubicCoefficients, cubic_real_roots


def test_unit_cube_root():
    assert cubic_real_roots(CubicCoefficients(1, 0, 0, -1)) == pytest.approx([1.0], abs=1e-15)


def test_three_real_roots():
    roots = cubic_real_roots(CubicCoefficients(1, -0.9, 0, 0.06))
    assert len(roots) == 3
    assert roots == sorted(roots)
    assert any(abs(r - 0.80816) < 1e-4 for r in roots)


def test_exact_rational_root():
    roots = cubic_real_roots(CubicCoefficients(2, -0.3, 0, -0.08))
    assert any(abs(r - 0.4) < 1e-10 for r in roots)


def test_repeated_root():
    # (x - 1)^2 (x + 2)
    roots = cubic_real_roots(CubicCoefficients(1, 0, -3, 2))
    assert roots == pytest.approx([-2.0, 1.0, 1.0], abs=1e-7)


def test_triple_root():
    roots = cubic_real_roots(CubicCoefficients(1, -3, 3, -1))
    assert all(abs(r - 1.0) < 1e-5 for r in roots)


def test_monotone_cubic_has_one_root():
    cub = CubicCoefficients(1, 0, 1, 1)
    assert cub.discriminant < 0
    (r,) = cubic_real_roots(cub)
    assert abs(cub(r)) < 1e-14


def test_large_root_scaling():
    cub = CubicCoefficients(1, -1e4, 0, 1)
    roots = cubic_real_roots(cub)
    assert max(roots) == pytest.approx(1e4 - 1e-8, rel=1e-15)
    assert all(abs(cub(r)) <= 1e-10 * cub.scale(r) for r in roots)
    # the two small roots must not be lost to cancellation
    assert roots[:2] == pytest.approx([-0.01, 0.01], rel=1e-6)


def test_random_cubics_against_numpy():
    rng = np.random.default_rng(0)
    for a, b, c, d in rng.standard_normal((500, 4)):
        cub = CubicCoefficients(a, b, c, d)
        ours = cubic_real_roots(cub)
        ref = np.roots([a, b, c, d])
        real = np.sort(ref[np.abs(ref.imag) < 1e-9].real)
        if cub.discriminant > 1e-6:
            assert ours == pytest.approx(list(real), abs=1e-7)


@pytest.mark.parametrize("coeffs", [(0, 1, 1, 1), (1, float("nan"), 0, 0), (1, 0, float("inf"), 0)])
def test_invalid_coefficients(coeffs):
    with pytest.raises(ValueError):
        CubicCoefficients(*coeffs)


def test_tiny_complex_pair_is_not_reported():
    cub = CubicCoefficients(0.001, 24.0, 0.0, 1.0)
    assert cub.discriminant < 0
    (r,) = cubic_real_roots(cub)
    assert abs(cub(r)) <= 1e-10 * cub.scale(r)
