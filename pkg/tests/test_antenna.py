import math

import pytest
from hypothesis import given, strategies as st

from oracles import sinc
from spherecal.antenna import AntennaPattern, normalized_sinc, pattern_factor, pattern_loss_db
from spherecal.errors import DomainError, OutOfLobeError

ONE_DEG = AntennaPattern(beamwidth_deg=1.0, pattern_exponent=2)


def test_sinc_special_points():
    assert normalized_sinc(0) == 1.0
    assert normalized_sinc(1) == 0.0
    assert normalized_sinc(-3) == 0.0


@pytest.mark.parametrize("x", [0.5988, 0.2395, -0.7, 1.4303, 2.5, 1e-9])
def test_sinc_matches_oracle(x):
    assert normalized_sinc(x) == pytest.approx(float(sinc(x)), rel=1e-14, abs=1e-16)


def test_sinc_operating_point():
    assert normalized_sinc(0.5988) == pytest.approx(0.50617, abs=1e-5)


@given(st.floats(-1e3, 1e3))
def test_sinc_range(x):
    assert -0.2173 <= normalized_sinc(x) <= 1.0


def test_pattern_factor_examples():
    assert pattern_factor(0.0, AntennaPattern(3.7)) == 1.0
    assert pattern_factor(0.2994, ONE_DEG) == pytest.approx(0.50617, abs=1e-5)
    assert pattern_factor(0.1198, ONE_DEG) == pytest.approx(0.90826, abs=1e-4)


def test_pattern_loss_examples():
    assert pattern_loss_db(0.0, ONE_DEG) == 0.0
    assert pattern_loss_db(0.2994, ONE_DEG) == pytest.approx(5.91, abs=0.005)
    assert pattern_loss_db(0.1198, ONE_DEG) == pytest.approx(0.836, abs=0.001)


def test_out_of_lobe():
    with pytest.raises(OutOfLobeError):
        pattern_loss_db(0.5, ONE_DEG)
    with pytest.raises(OutOfLobeError):
        pattern_loss_db(0.8, ONE_DEG)
    # sidelobe factor is still defined for the single-factor RCS
    assert pattern_factor(0.5, ONE_DEG) == 0.0


def test_negative_beta_rejected():
    with pytest.raises(DomainError):
        pattern_factor(-0.1, ONE_DEG)


@pytest.mark.parametrize("kw", [dict(beamwidth_deg=0), dict(pattern_exponent=3), dict(pattern_exponent=0)])
def test_pattern_validation(kw):
    with pytest.raises(DomainError):
        AntennaPattern(**kw)


betas = st.floats(0, 0.4999)


@given(betas)
def test_loss_nonnegative_and_doubling(beta):
    one = pattern_loss_db(beta, AntennaPattern(1.0, 1))
    two = pattern_loss_db(beta, AntennaPattern(1.0, 2))
    assert one >= 0
    assert two == 2 * one


@given(betas, betas)
def test_factor_monotone_in_main_lobe(a, b):
    lo, hi = sorted((a, b))
    assert pattern_factor(hi, ONE_DEG) <= pattern_factor(lo, ONE_DEG)


@given(betas)
def test_single_factor_literal(beta):
    f = pattern_factor(beta, AntennaPattern(1.0, 1))
    assert pattern_loss_db(beta, AntennaPattern(1.0, 1)) == pytest.approx(
        -10 * math.log10(f), abs=1e-12
    )
