"""State descriptions for the one-dimensional shear shallow water model.

The model tracks a water column of depth ``h`` moving with depth-averaged
velocity ``(v1, v2)`` and carrying a symmetric tensor ``P`` that measures the
distortion of the horizontal velocity profile (a Reynolds-stress-like
quantity).  Two equivalent six-component descriptions are used throughout:

    primitive   Q = (h, v1, v2, P11, P12, P22)
    conserved   U = (h, h*v1, h*v2, E11, E12, E22)

with the depth-weighted stress ``R_ij = h*P_ij`` and the energy tensor
``E_ij = (R_ij + h*v_i*v_j) / 2``.  The one-dimensional evolution is

    U_t + F(U)_x + B(U) h_x = 0

where ``F`` is the physical flux of :func:`physical_flux` and the column
``B(U) = (0, 0, 0, g*h*v1, g*h*v2/2, 0)`` couples the energy components to
depth gradients.  ``B`` is linear in the momentum ``m = h*v``, so its average
along a straight segment between two states is ``B`` evaluated at the
midpoint momentum; :func:`noncons_term` relies on that.

Admissible states have ``h > 0`` and positive definite ``P``.  Dry (vacuum)
regions are represented by ``h = 0`` with every other field zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

GRAVITY = 9.81

# P11 threshold below which the 2/3/5-eigenvectors become dependent and the
# system loses strict hyperbolicity.
EPS_DEGENERATE = 1.0e-12

# component indices of the conserved vector
IH, IHU, IHV, IE11, IE12, IE22 = range(6)


class NonPositiveDepth(ValueError):
    """Depth is zero or negative where a wet state is required."""


class NonSPDStress(ValueError):
    """Recovered stress tensor is not symmetric positive definite."""


class DomainError(ValueError):
    """Argument lies outside the validity range of a closed-form relation."""


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters.  Gravity is configurable; the bottom is flat."""

    g: float = GRAVITY

    def __post_init__(self):
        if self.g <= 0.0:
            raise ValueError(f"gravity must be positive, got {self.g}")


@dataclass(frozen=True)
class PrimitiveState:
    """Primitive variables (h, v1, v2, P11, P12, P22) at a point."""

    h: float
    v1: float
    v2: float
    P11: float
    P12: float
    P22: float

    def a(self, g: float) -> float:
        """Fast characteristic speed sqrt(g*h + 3*P11)."""
        return math.sqrt(g * self.h + 3.0 * self.P11)

    def b(self) -> float:
        """Shear characteristic speed sqrt(P11)."""
        return math.sqrt(self.P11)

    def det_P(self) -> float:
        return self.P11 * self.P22 - self.P12 ** 2

    def is_vacuum(self) -> bool:
        return self.h == 0.0

    def is_admissible(self) -> bool:
        if self.is_vacuum():
            return (self.v1 == self.v2 == 0.0
                    and self.P11 == self.P12 == self.P22 == 0.0)
        return (self.h > 0.0 and self.P11 > 0.0 and self.P22 > 0.0
                and self.det_P() > 0.0)

    def validate(self) -> "PrimitiveState":
        if self.h < 0.0 or (self.h == 0.0 and not self.is_admissible()):
            raise NonPositiveDepth(f"h = {self.h}")
        if not self.is_vacuum() and not (
                self.P11 > 0.0 and self.P22 > 0.0 and self.det_P() > 0.0):
            raise NonSPDStress(
                f"P = [[{self.P11}, {self.P12}], [{self.P12}, {self.P22}]]")
        return self

    def as_array(self) -> np.ndarray:
        return np.array([self.h, self.v1, self.v2,
                         self.P11, self.P12, self.P22])


VACUUM = PrimitiveState(0.0, 0.0, 0.0, 0.0, 0.0, 0.0)


@dataclass(frozen=True)
class ConservedState:
    """Conserved variables (h, m1, m2, E11, E12, E22) at a point."""

    h: float
    m1: float
    m2: float
    E11: float
    E12: float
    E22: float

    def as_array(self) -> np.ndarray:
        return np.array([self.h, self.m1, self.m2,
                         self.E11, self.E12, self.E22])


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues (ascending) and right eigenvectors in primitive variables.

    ``rvecs[k]`` is the eigenvector belonging to ``lambdas[k]``.  The flag
    marks near-zero P11, where the 2-, 3/4- and 5-eigenvectors degenerate.
    """

    lambdas: np.ndarray
    rvecs: np.ndarray
    degenerate: bool


def prim_to_cons(q: PrimitiveState) -> ConservedState:
    """Map primitive variables to the conserved vector."""
    h = q.h
    return ConservedState(
        h,
        h * q.v1,
        h * q.v2,
        0.5 * h * q.P11 + 0.5 * h * q.v1 * q.v1,
        0.5 * h * q.P12 + 0.5 * h * q.v1 * q.v2,
        0.5 * h * q.P22 + 0.5 * h * q.v2 * q.v2,
    )


def cons_to_prim(u: ConservedState) -> PrimitiveState:
    """Recover primitive variables; reject inadmissible states.

    Raises NonPositiveDepth for h <= 0 and NonSPDStress when the recovered
    stress tensor fails positive definiteness (including the P11 = 0
    boundary, which already breaks strict hyperbolicity).
    """
    h = u.h
    if h <= 0.0:
        raise NonPositiveDepth(f"h = {h}")
    v1 = u.m1 / h
    v2 = u.m2 / h
    q = PrimitiveState(
        h, v1, v2,
        (2.0 * u.E11 - h * v1 * v1) / h,
        (2.0 * u.E12 - h * v1 * v2) / h,
        (2.0 * u.E22 - h * v2 * v2) / h,
    )
    if not (q.P11 > 0.0 and q.P22 > 0.0 and q.det_P() > 0.0):
        raise NonSPDStress(
            f"P = [[{q.P11}, {q.P12}], [{q.P12}, {q.P22}]]")
    return q


def physical_flux(u: ConservedState, params: ModelParams) -> np.ndarray:
    """Physical flux F(U) of the quasi-conservative form."""
    q = cons_to_prim(u)
    h, v1, v2 = q.h, q.v1, q.v2
    R11 = h * q.P11
    R12 = h * q.P12
    return np.array([
        u.m1,
        R11 + h * v1 * v1 + 0.5 * params.g * h * h,
        R12 + h * v1 * v2,
        (u.E11 + R11) * v1,
        u.E12 * v1 + 0.5 * (R11 * v2 + R12 * v1),
        u.E22 * v1 + R12 * v2,
    ])


def noncons_term(m_avg, dh: float, params: ModelParams) -> np.ndarray:
    """Path integral of the non-conservative column across a depth jump.

    ``m_avg`` is the midpoint momentum pair ((m1_L + m1_R)/2, (m2_L + m2_R)/2);
    linearity of B in m makes B(m_avg)*dh the exact segment average.
    """
    out = np.zeros(6)
    out[IE11] = params.g * m_avg[0] * dh
    out[IE12] = 0.5 * params.g * m_avg[1] * dh
    return out


def eigensystem(q: PrimitiveState, params: ModelParams) -> EigenDecomposition:
    """Characteristic speeds and right eigenvectors at a state.

    Speeds, ascending: u-a, u-b, u, u, u+b, u+a with a = sqrt(g*h + 3*P11)
    and b = sqrt(P11).  The extreme pair is genuinely nonlinear
    (shock/rarefaction), the inner four are linearly degenerate
    (shear/contact).
    """
    g = params.g
    h, u, P12 = q.h, q.v1, q.P12
    a = q.a(g)
    b = q.b()
    lambdas = np.array([u - a, u - b, u, u, u + b, u + a])
    gn = a * a - b * b  # = g*h + 2*P11
    rvecs = np.array([
        [h * gn, -a * gn, -2.0 * a * P12, 2.0 * b * b * gn,
         (a * a + b * b) * P12, 4.0 * P12 * P12],
        [0.0, 0.0, -b, 0.0, b * b, 2.0 * P12],
        [0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
        [-h, 0.0, 0.0, g * h + q.P11, P12, 0.0],
        [0.0, 0.0, b, 0.0, b * b, 2.0 * P12],
        [h * gn, a * gn, 2.0 * a * P12, 2.0 * b * b * gn,
         (a * a + b * b) * P12, 4.0 * P12 * P12],
    ])
    return EigenDecomposition(lambdas, rvecs, degenerate=q.P11 < EPS_DEGENERATE)


def total_pressure(q: PrimitiveState, params: ModelParams) -> float:
    """Pi = g*h^2/2 + R11; constant across shear and contact waves."""
    return 0.5 * params.g * q.h * q.h + q.h * q.P11


def total_energy(q: PrimitiveState, params: ModelParams) -> float:
    """E = tr(R)/2 + h*|v|^2/2 + g*h^2/2 (flat bottom)."""
    h = q.h
    return (0.5 * h * (q.P11 + q.P22)
            + 0.5 * h * (q.v1 * q.v1 + q.v2 * q.v2)
            + 0.5 * params.g * h * h)


def specific_entropy(q: PrimitiveState) -> float:
    """det(P)/h^2, conserved along smooth flow and all degenerate waves."""
    return q.det_P() / (q.h * q.h)


# ---------------------------------------------------------------------------
# Array forms used by the finite-volume kernels.  Layout is component-major:
# Q[0] is the depth array, Q[1] the v1 array, and so on.

def prim_to_cons_array(Q: np.ndarray) -> np.ndarray:
    h, v1, v2, P11, P12, P22 = Q
    return np.stack([
        h,
        h * v1,
        h * v2,
        0.5 * h * (P11 + v1 * v1),
        0.5 * h * (P12 + v1 * v2),
        0.5 * h * (P22 + v2 * v2),
    ])


def cons_to_prim_array(U: np.ndarray) -> np.ndarray:
    """Array inverse of prim_to_cons_array.  No admissibility check here;
    callers gate on admissible_mask so vectorized code can decide how to
    react to bad cells."""
    h = U[IH]
    v1 = U[IHU] / h
    v2 = U[IHV] / h
    return np.stack([
        h, v1, v2,
        2.0 * U[IE11] / h - v1 * v1,
        2.0 * U[IE12] / h - v1 * v2,
        2.0 * U[IE22] / h - v2 * v2,
    ])


def admissible_mask(Q: np.ndarray) -> np.ndarray:
    h, _, _, P11, P12, P22 = Q
    return (h > 0.0) & (P11 > 0.0) & (P22 > 0.0) & (P11 * P22 - P12 * P12 > 0.0)


def flux_array(Q: np.ndarray, g: float) -> np.ndarray:
    h, v1, v2, P11, P12, P22 = Q
    R11 = h * P11
    R12 = h * P12
    E11 = 0.5 * (R11 + h * v1 * v1)
    E12 = 0.5 * (R12 + h * v1 * v2)
    E22 = 0.5 * (h * P22 + h * v2 * v2)
    return np.stack([
        h * v1,
        R11 + h * v1 * v1 + 0.5 * g * h * h,
        R12 + h * v1 * v2,
        (E11 + R11) * v1,
        E12 * v1 + 0.5 * (R11 * v2 + R12 * v1),
        E22 * v1 + R12 * v2,
    ])


def noncons_array(m1_avg: np.ndarray, m2_avg: np.ndarray, dh: np.ndarray,
                  g: float) -> np.ndarray:
    out = np.zeros((6,) + np.shape(dh))
    out[IE11] = g * m1_avg * dh
    out[IE12] = 0.5 * g * m2_avg * dh
    return out


def total_energy_array(Q: np.ndarray, g: float) -> np.ndarray:
    h, v1, v2, P11, _, P22 = Q
    return 0.5 * h * (P11 + P22 + v1 * v1 + v2 * v2 + g * h)
