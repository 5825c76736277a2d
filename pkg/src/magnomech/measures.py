"""Entanglement and steering measures on two-mode Gaussian states.

All measures act on the reduced photon-phonon covariance matrix in block
form [[A, C], [C^T, B]] with 2x2 blocks, vacuum variance 1/2.  Symplectic
invariants are I1 = det A, I2 = det B, I3 = det C, I4 = det(full).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .errors import DegenerateDiscriminant, SingularState

__all__ = [
    "ReducedCM",
    "reduce_photon_phonon",
    "log_negativity",
    "steering_a_to_b",
    "steering_b_to_a",
    "physicality_check",
    "bogoliubov_occupation",
    "quadrature_variances",
    "SteeringClass",
    "classify_steering",
    "ZERO_CLAMP",
]

ZERO_CLAMP = 1e-12
_DISCRIMINANT_TOL = 1e-12
_SINGULAR_FLOOR = 1e-300


def _det2(m) -> float:
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def _det4(m) -> float:
    # cofactor expansion along the first row, 2x2 minors cached by column pair
    c01 = m[2, 0] * m[3, 1] - m[2, 1] * m[3, 0]
    c02 = m[2, 0] * m[3, 2] - m[2, 2] * m[3, 0]
    c03 = m[2, 0] * m[3, 3] - m[2, 3] * m[3, 0]
    c12 = m[2, 1] * m[3, 2] - m[2, 2] * m[3, 1]
    c13 = m[2, 1] * m[3, 3] - m[2, 3] * m[3, 1]
    c23 = m[2, 2] * m[3, 3] - m[2, 3] * m[3, 2]
    return (m[0, 0] * (m[1, 1] * c23 - m[1, 2] * c13 + m[1, 3] * c12)
            - m[0, 1] * (m[1, 0] * c23 - m[1, 2] * c03 + m[1, 3] * c02)
            + m[0, 2] * (m[1, 0] * c13 - m[1, 1] * c03 + m[1, 3] * c01)
            - m[0, 3] * (m[1, 0] * c12 - m[1, 1] * c02 + m[1, 2] * c01))


@dataclass(frozen=True)
class ReducedCM:
    """4x4 photon-phonon covariance matrix and its symplectic invariants."""

    matrix: np.ndarray
    i1: float
    i2: float
    i3: float
    i4: float

    @property
    def sigma1(self) -> np.ndarray:
        return self.matrix[:2, :2]

    @property
    def sigma2(self) -> np.ndarray:
        return self.matrix[2:, 2:]

    @property
    def sigma3(self) -> np.ndarray:
        return self.matrix[:2, 2:]

    @classmethod
    def from_matrix(cls, sigma4: np.ndarray) -> "ReducedCM":
        sigma4 = np.asarray(sigma4, dtype=float)
        if sigma4.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got {sigma4.shape}")
        return cls(matrix=sigma4,
                   i1=_det2(sigma4[:2, :2]),
                   i2=_det2(sigma4[2:, 2:]),
                   i3=_det2(sigma4[:2, 2:]),
                   i4=_det4(sigma4))


def reduce_photon_phonon(sigma: np.ndarray) -> ReducedCM:
    """Drop the magnon rows and columns of a 6x6 covariance matrix."""
    sigma = np.asarray(sigma, dtype=float)
    if sigma.shape != (6, 6):
        raise ValueError(f"expected a 6x6 matrix, got {sigma.shape}")
    return ReducedCM.from_matrix(sigma[:4, :4])


def log_negativity(red: ReducedCM) -> float:
    """Logarithmic negativity of the photon-phonon bipartition.

    E_N = max(0, -ln 2 nu~) with nu~ the smaller symplectic eigenvalue of
    the partially transposed state.  Non-negative by clamping; values below
    1e-12 are reported as exactly 0.
    """
    s_minus = red.i1 + red.i2 - 2 * red.i3
    disc = s_minus * s_minus - 4 * red.i4
    if disc < 0:
        if disc > -_DISCRIMINANT_TOL:
            disc = 0.0
        else:
            raise DegenerateDiscriminant(
                f"negative discriminant {disc} in the partial-transpose "
                f"eigenvalue formula")
    nu_sq = (s_minus - math.sqrt(disc)) / 2
    if nu_sq <= 0.0:
        raise DegenerateDiscriminant(
            f"nonpositive partial-transpose eigenvalue {nu_sq}")
    val = max(0.0, -math.log(2 * math.sqrt(nu_sq)))
    return 0.0 if val < ZERO_CLAMP else val


def _steering(num_det: float, red: ReducedCM) -> float:
    if red.i4 <= _SINGULAR_FLOOR:
        raise SingularState(f"vanishing total determinant {red.i4}")
    val = max(0.0, 0.5 * math.log(num_det / (4 * red.i4)))
    return 0.0 if val < ZERO_CLAMP else val


def steering_a_to_b(red: ReducedCM) -> float:
    """Gaussian steering of the phonon by measurements on the photon."""
    return _steering(red.i1, red)


def steering_b_to_a(red: ReducedCM) -> float:
    """Gaussian steering of the photon by measurements on the phonon."""
    return _steering(red.i2, red)


class PhysicalityResult(NamedTuple):
    physical: bool
    min_symplectic_eig: float


def physicality_check(sigma: np.ndarray, tol: float = 1e-9) -> PhysicalityResult:
    """Heisenberg-bound verdict and smallest symplectic eigenvalue."""
    sigma = np.asarray(sigma, dtype=float)
    n = sigma.shape[0] // 2
    j = np.array([[0.0, 1.0], [-1.0, 0.0]])
    omega = np.kron(np.eye(n), j)
    nu = float(np.min(np.abs(np.linalg.eigvals(1j * omega @ sigma))))
    return PhysicalityResult(physical=nu >= 0.5 - tol, min_symplectic_eig=nu)


_MODE_INDEX = {"photon": 0, "phonon": 1, "magnon": 2, 0: 0, 1: 1, 2: 2}


def quadrature_variances(sigma: np.ndarray,
                         mode: int | str) -> tuple[float, float, float]:
    """(var_q, var_p, min rotated variance) of one mode.

    The last entry is the variance of the optimally rotated quadrature,
    the smaller eigenvalue of the mode's 2x2 block.
    """
    if mode not in _MODE_INDEX:
        raise ValueError(f"mode must be photon, phonon, or magnon, got {mode!r}")
    sigma = np.asarray(sigma, dtype=float)
    k = 2 * _MODE_INDEX[mode]
    block = sigma[k:k + 2, k:k + 2]
    return (float(sigma[k, k]), float(sigma[k + 1, k + 1]),
            float(np.min(np.linalg.eigvalsh(block))))


def bogoliubov_occupation(sigma: np.ndarray, r2: float) -> float:
    """Occupation of the squeezed photon-phonon collective mode.

    The collective mode mixes photon and phonon through a two-mode squeeze
    of parameter r2; its occupation combines the local occupations and the
    q_a q_b / p_a p_b cross covariances.
    """
    sigma = np.asarray(sigma, dtype=float)
    n_a = (sigma[0, 0] + sigma[1, 1]) / 2 - 0.5
    n_b = (sigma[2, 2] + sigma[3, 3]) / 2 - 0.5
    ch, sh = math.cosh(r2), math.sinh(r2)
    return float(ch * ch * n_a + sh * sh * (n_b + 1)
                 + ch * sh * (sigma[0, 2] - sigma[1, 3]))


class SteeringClass(Enum):
    NO_STEERING = "none"
    ONE_WAY_A_TO_B = "one-way a->b"
    ONE_WAY_B_TO_A = "one-way b->a"
    TWO_WAY = "two-way"


def classify_steering(g_a: float, g_b: float,
                      positive_tol: float = 1e-6,
                      zero_tol: float = 1e-12) -> SteeringClass:
    """Directional classification with an explicit dead band.

    A direction counts as present above `positive_tol` and absent at or
    below `zero_tol`; the band in between is treated as absent so that
    borderline numerics never flip the label to a stronger class.
    """
    a_on = g_a > positive_tol
    b_on = g_b > positive_tol
    if a_on and b_on:
        return SteeringClass.TWO_WAY
    if a_on:
        return SteeringClass.ONE_WAY_A_TO_B
    if b_on:
        return SteeringClass.ONE_WAY_B_TO_A
    return SteeringClass.NO_STEERING
