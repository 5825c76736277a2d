import math

import numpy as np
import pytest

from magnomech.dynamics import DriftModel, diffusion, drift_rwa, steady_state
from magnomech.errors import DegenerateDiscriminant, SingularState
from magnomech.measures import (ReducedCM, SteeringClass,
                                bogoliubov_occupation, classify_steering,
                                log_negativity, physicality_check,
                                quadrature_variances, reduce_photon_phonon,
                                steering_a_to_b, steering_b_to_a)
from magnomech.meanfield import effective_couplings
from magnomech.params import DriveConfig, reference_params

# reference steady-state values, frozen at first computation
EN_GOLDEN = 1.219085241204485
GA_GOLDEN = 0.38132429878090085
GB_GOLDEN = 0.6864826518476476
NBETA_GOLDEN = 0.13086093375897789


def tmsv(r):
    ch, sh = math.cosh(2 * r) / 2, math.sinh(2 * r) / 2
    s = np.diag([ch, ch, ch, ch]).astype(float)
    s[0, 2] = s[2, 0] = sh
    s[1, 3] = s[3, 1] = -sh
    return ReducedCM.from_matrix(s)


@pytest.fixture(scope="module")
def ref_steady(ref_params, ref_couplings):
    m = drift_rwa(DriftModel.rwa(ref_params, ref_couplings))
    return steady_state(m, diffusion(ref_params))


def test_reduce_identity():
    red = reduce_photon_phonon(0.5 * np.eye(6))
    assert np.allclose(red.sigma1, 0.5 * np.eye(2))
    assert np.allclose(red.sigma2, 0.5 * np.eye(2))
    assert np.allclose(red.sigma3, 0.0)


def test_reduce_block_structure():
    sig = np.diag([0.5, 0.5, 3.5, 3.5, 0.5, 0.5])
    red = reduce_photon_phonon(sig)
    assert np.allclose(red.sigma2, np.diag([3.5, 3.5]))


def test_reduce_reference_has_correlations(ref_steady):
    red = reduce_photon_phonon(ref_steady)
    assert np.max(np.abs(red.sigma3)) > 1e-3


def test_tmsv_exact_half_r():
    # sigma blocks cosh(1)/2 and sinh(1)/2 correspond to r = 0.5
    red = tmsv(0.5)
    assert log_negativity(red) == pytest.approx(1.0, abs=1e-12)
    assert steering_a_to_b(red) == pytest.approx(math.log(math.cosh(1.0)),
                                                 abs=1e-5)
    assert steering_a_to_b(red) == pytest.approx(0.43378, abs=1e-5)


def test_tmsv_family():
    for r in np.linspace(0.0, 2.0, 21):
        red = tmsv(r)
        assert log_negativity(red) == pytest.approx(2 * r, abs=1e-9)
        target = math.log(math.cosh(2 * r))
        assert steering_a_to_b(red) == pytest.approx(target, abs=1e-9)
        assert steering_b_to_a(red) == pytest.approx(target, abs=1e-9)


def test_product_vacuum_all_zero():
    red = ReducedCM.from_matrix(0.5 * np.eye(4))
    assert log_negativity(red) == 0.0
    assert steering_a_to_b(red) == 0.0
    assert steering_b_to_a(red) == 0.0


def test_reference_goldens(ref_steady):
    red = reduce_photon_phonon(ref_steady)
    assert log_negativity(red) == pytest.approx(EN_GOLDEN, rel=1e-9)
    assert steering_a_to_b(red) == pytest.approx(GA_GOLDEN, rel=1e-9)
    assert steering_b_to_a(red) == pytest.approx(GB_GOLDEN, rel=1e-9)
    assert steering_a_to_b(red) != steering_b_to_a(red)


def test_local_rotation_invariance(ref_steady):
    red = reduce_photon_phonon(ref_steady)
    rng = np.random.default_rng(3)
    for _ in range(10):
        ra, rb = rng.uniform(0, 2 * math.pi, size=2)
        rot = np.zeros((4, 4))
        rot[:2, :2] = [[math.cos(ra), math.sin(ra)],
                       [-math.sin(ra), math.cos(ra)]]
        rot[2:, 2:] = [[math.cos(rb), math.sin(rb)],
                       [-math.sin(rb), math.cos(rb)]]
        rotated = ReducedCM.from_matrix(rot @ red.matrix @ rot.T)
        for a, b in ((red.i1, rotated.i1), (red.i2, rotated.i2),
                     (red.i3, rotated.i3), (red.i4, rotated.i4)):
            assert b == pytest.approx(a, rel=1e-12, abs=1e-12)


def test_isotropic_noise_never_increases_measures():
    rng = np.random.default_rng(5)
    states = [tmsv(r).matrix for r in (0.3, 0.8, 1.5)]
    for _ in range(5):
        # random physical state: rotated thermal-squeezed product
        a = rng.normal(size=(4, 4)) * 0.1
        states.append(tmsv(rng.uniform(0, 1)).matrix + a @ a.T)
    for base in states:
        prev = None
        for eps in (0.0, 0.01, 0.05, 0.2, 1.0):
            red = ReducedCM.from_matrix(base + eps * np.eye(4))
            vals = (log_negativity(red), steering_a_to_b(red),
                    steering_b_to_a(red))
            if prev is not None:
                assert all(v <= u + 1e-12 for v, u in zip(vals, prev))
            prev = vals


def test_steerable_implies_entangled():
    rng = np.random.default_rng(9)
    for _ in range(50):
        a = rng.normal(size=(4, 4)) * 0.3
        red = ReducedCM.from_matrix(tmsv(rng.uniform(0, 1.5)).matrix
                                    + a @ a.T)
        if steering_a_to_b(red) > 0 or steering_b_to_a(red) > 0:
            assert log_negativity(red) > 0


def test_degenerate_discriminant_raises():
    bad = ReducedCM(matrix=np.eye(4), i1=0.25, i2=0.25, i3=0.0, i4=10.0)
    with pytest.raises(DegenerateDiscriminant):
        log_negativity(bad)


def test_singular_state_raises():
    bad = ReducedCM(matrix=np.zeros((4, 4)), i1=0.25, i2=0.25, i3=0.0, i4=0.0)
    with pytest.raises(SingularState):
        steering_a_to_b(bad)


def test_physicality_check_verdicts():
    ok = physicality_check(0.5 * np.eye(6))
    assert ok.physical and ok.min_symplectic_eig == pytest.approx(0.5)
    assert not physicality_check(0.25 * np.eye(6)).physical


def test_bogoliubov_occupation_vacuum():
    vac = 0.5 * np.eye(6)
    assert bogoliubov_occupation(vac, 0.0) == pytest.approx(0.0, abs=1e-12)
    assert bogoliubov_occupation(vac, 0.973) == pytest.approx(
        math.sinh(0.973) ** 2, abs=1e-12)
    assert bogoliubov_occupation(vac, 0.973) == pytest.approx(1.2855, abs=1e-3)


def test_bogoliubov_cooling_at_reference(ref_steady, ref_couplings):
    n_beta = bogoliubov_occupation(ref_steady, ref_couplings.r2)
    assert n_beta == pytest.approx(NBETA_GOLDEN, rel=1e-9)
    assert n_beta < math.sinh(ref_couplings.r2) ** 2


def test_quadrature_variances_trivial():
    assert quadrature_variances(0.5 * np.eye(6), "photon") == \
        pytest.approx((0.5, 0.5, 0.5))
    thermal = np.diag([0.5, 0.5, 3.5, 3.5, 0.5, 0.5])
    assert quadrature_variances(thermal, "phonon") == \
        pytest.approx((3.5, 3.5, 3.5))


def test_two_tone_mechanical_squeezing():
    # with the red tone dominant the phonon sees an effective squeezing
    # channel and its minimum rotated variance drops below vacuum
    p = reference_params()
    c = effective_couplings(p, DriveConfig.couplings(0.1, 0.2))
    sig = steady_state(drift_rwa(DriftModel.rwa(p, c)), diffusion(p))
    assert quadrature_variances(sig, "phonon")[2] < 0.5


def test_classification_thresholds():
    assert classify_steering(0.3, 0.4) is SteeringClass.TWO_WAY
    assert classify_steering(0.3, 0.0) is SteeringClass.ONE_WAY_A_TO_B
    assert classify_steering(0.0, 0.3) is SteeringClass.ONE_WAY_B_TO_A
    assert classify_steering(0.0, 0.0) is SteeringClass.NO_STEERING
    # dead band between the zero and positive thresholds stays conservative
    assert classify_steering(1e-8, 0.3) is SteeringClass.ONE_WAY_B_TO_A
