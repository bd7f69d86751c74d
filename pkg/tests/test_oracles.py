"""Freeze the oracle outputs so a drift in the oracle itself is caught."""

import pytest

from oracles import mie_pec_backscatter_efficiency, sinc, swing_geometry


@pytest.mark.parametrize(
    "standoff, beta, rng",
    [
        (2000, 0.2996104906, 2000.05915728),
        (3000, 0.1997423975, 3000.05004239),
        (4000, 0.1498074608, 4000.04548487),
        (5000, 0.1198462576, 5000.04275034),
    ],
)
def test_swing_geometry_frozen(standoff, beta, rng):
    b, r = swing_geometry(standoff, 2, 60, 10)
    assert b == pytest.approx(beta, rel=1e-9)
    assert r == pytest.approx(rng, rel=1e-11)


def test_sinc_frozen():
    assert float(sinc("0.5988")) == pytest.approx(0.50617796, abs=1e-8)
    assert float(sinc("0.2395")) == pytest.approx(0.90828125, abs=1e-8)


@pytest.mark.parametrize(
    "x, eff",
    [
        (0.01, 8.999833337495852e-08),
        (1.0, 3.637566542851703),
        (29.5309, 0.9775700202265246),
    ],
)
def test_mie_oracle_frozen(x, eff):
    assert mie_pec_backscatter_efficiency(x) == pytest.approx(eff, rel=1e-12)
