import math

import pytest

from gausscalc import HermiteExpansion, SpectralMultiplier


@pytest.mark.parametrize(
    "mult,n,want",
    [
        (SpectralMultiplier.ou(0.5), 4, math.exp(-2.0)),
        (SpectralMultiplier.poisson(0.5), 4, math.exp(-1.0)),
        (SpectralMultiplier.poisson_deriv(1.0, 1), 4, -2.0 * math.exp(-2.0)),
        (SpectralMultiplier.poisson_deriv(1.0, 2), 4, 4.0 * math.exp(-2.0)),
        (SpectralMultiplier.poisson_deriv(0.3, 0), 0, 1.0),
        (SpectralMultiplier.riesz_potential(2.0), 4, 0.25),
        (SpectralMultiplier.riesz_potential(2.0), 0, 0.0),
        (SpectralMultiplier.bessel_potential(3.0), 4, 1.0 / 27.0),
        (SpectralMultiplier.bessel_potential(3.0), 0, 1.0),
        (SpectralMultiplier.riesz_derivative(1.0), 9, 3.0),
        (SpectralMultiplier.riesz_derivative(1.0), 0, 0.0),
        (SpectralMultiplier.bessel_derivative(2.0), 4, 9.0),
    ],
)
def test_multiplier_table(mult, n, want):
    assert abs(mult(n) - want) < 1e-15


def test_poisson_deriv_kills_constants_for_positive_k():
    assert SpectralMultiplier.poisson_deriv(1.0, 3)(0) == 0.0


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        SpectralMultiplier("heat")(1)


def test_apply_maps_coefficients():
    f = HermiteExpansion(1, {(0,): 1.0, (2,): 2.0})
    g = SpectralMultiplier.ou(1.0).apply(f)
    assert g.coefficient((0,)) == 1.0
    assert abs(g.coefficient((2,)) - 2.0 * math.exp(-2.0)) < 1e-15
