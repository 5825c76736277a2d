import math

import pytest

from magnomech.errors import (NegativeOccupation, NonPositiveRate,
                              NonPositiveRatio)
from magnomech.params import (DriveConfig, DriveMode, SystemParams,
                              reference_params, thermal_occupation,
                              tone_frequencies, validate)


def test_reference_set_is_valid():
    p = reference_params()
    assert validate(p) is p
    assert p.delta_a == p.delta_m == 1000.0
    assert p.g == 0.28 and p.kappa_m == 0.3


def test_zero_rate_rejected():
    p = reference_params().replace(kappa_a=0.0)
    with pytest.raises(NonPositiveRate) as exc:
        validate(p)
    assert "kappa_a" in str(exc.value)


def test_negative_occupation_rejected():
    p = reference_params().replace(nbar_b=-1.0)
    with pytest.raises(NegativeOccupation):
        validate(p)


def test_omega_b_fixed_to_unity():
    p = reference_params().replace(omega_b=2.0)
    with pytest.raises(NonPositiveRate):
        validate(p)


def test_validate_idempotent():
    p = reference_params()
    assert validate(validate(p)) is p


def test_thermal_occupation_values():
    assert thermal_occupation(math.log(2)) == pytest.approx(1.0, abs=1e-15)
    assert thermal_occupation(50.0) == pytest.approx(0.0, abs=1e-20)
    assert thermal_occupation(0.1) == pytest.approx(9.5083, abs=1e-4)


def test_thermal_occupation_domain():
    for x in (0.0, -0.5):
        with pytest.raises(NonPositiveRatio):
            thermal_occupation(x)


def test_thermal_occupation_decreasing_and_bounded():
    xs = [0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 20.0]
    vals = [thermal_occupation(x) for x in xs]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert all(v < 1.0 / x for v, x in zip(vals, xs))


def test_tone_frequencies():
    w1, w2 = tone_frequencies(reference_params())
    assert w1 == 1001.0
    assert w2 == 999.0


def test_drive_config_modes():
    d = DriveConfig.amplitudes(2.0)
    assert d.mode is DriveMode.AMPLITUDES
    assert d.e1 == 2.0 and d.e2 == 0.0
    c = DriveConfig.couplings(0.21)
    assert c.mode is DriveMode.COUPLINGS
    assert c.g1 == 0.21 and c.g2 == 0


def test_params_are_immutable():
    p = reference_params()
    with pytest.raises(AttributeError):
        p.gamma = 0.1
