"""Angular-momentum ladders, basis rotations, and concrete electron eigenfunctions.

A ladder of 2j+1 levels carries eigenvalues m*hbar, m = -j..j ascending.
States are coefficient vectors over a ladder; measuring along an arbitrary
unit axis b re-expresses the coefficients in the eigenbasis of the
angular-momentum component along b.

Half-integer j is admitted for two-outcome harnesses even though orbital
angular momentum is integer; such ladders are flagged as spin-analog mode.

The concrete electron eigenfunctions live in the (x_e, y_e) plane,

    phi_m(x, y) = N_m r^|m| e^{i m theta} e^{-r^2/(4 s^2)},

orthonormal under the 2D area measure; the z_e coordinate is cyclic and
carries no dynamics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

NORM_TOL = 1e-12


@dataclass(frozen=True)
class AngularLadder:
    """Eigenvalue ladder m*hbar, m = -j..j in ascending order."""

    j: float
    hbar: float = 1.0

    def __post_init__(self) -> None:
        two_j = 2.0 * self.j
        if self.j < 0.0 or abs(two_j - round(two_j)) > 1e-12:
            raise ValueError("j must be a non-negative half-integer")
        if self.hbar <= 0.0:
            raise ValueError("hbar must be positive")

    @property
    def n_levels(self) -> int:
        return int(round(2.0 * self.j)) + 1

    @property
    def m_values(self) -> np.ndarray:
        return -self.j + np.arange(self.n_levels, dtype=np.float64)

    @property
    def eigenvalues(self) -> np.ndarray:
        return self.m_values * self.hbar

    @property
    def spin_analog(self) -> bool:
        """True for half-integer j (not realizable as orbital angular momentum)."""
        return int(round(2.0 * self.j)) % 2 == 1


@dataclass(frozen=True)
class AngularState:
    """Normalized complex coefficient vector over a ladder (z-basis by default)."""

    ladder: AngularLadder
    coeffs: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        coeffs = np.asarray(self.coeffs, dtype=np.complex128)
        object.__setattr__(self, "coeffs", coeffs)
        if coeffs.shape != (self.ladder.n_levels,):
            raise ValueError("coefficient vector must have 2j+1 entries")
        if abs(float(np.sum(np.abs(coeffs) ** 2)) - 1.0) > NORM_TOL:
            raise ValueError("state must be normalized to within 1e-12")

    @classmethod
    def from_coeffs(cls, ladder: AngularLadder, coeffs: np.ndarray) -> "AngularState":
        """Build a state from an unnormalized coefficient vector."""
        coeffs = np.asarray(coeffs, dtype=np.complex128)
        norm = float(np.linalg.norm(coeffs))
        if norm == 0.0:
            raise ValueError("coefficient vector must be nonzero")
        return cls(ladder=ladder, coeffs=coeffs / norm)

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.coeffs) ** 2


@dataclass(frozen=True)
class Axis:
    """Unit 3-vector giving the magnet orientation."""

    b: np.ndarray

    def __post_init__(self) -> None:
        b = np.asarray(self.b, dtype=np.float64)
        object.__setattr__(self, "b", b)
        if b.shape != (3,):
            raise ValueError("axis must be a 3-vector")
        if abs(float(np.linalg.norm(b)) - 1.0) > NORM_TOL:
            raise ValueError("axis must be a unit vector to within 1e-12")

    @classmethod
    def from_vector(cls, v) -> "Axis":
        v = np.asarray(v, dtype=np.float64)
        norm = float(np.linalg.norm(v))
        if norm == 0.0:
            raise ValueError("axis vector must be nonzero")
        return cls(v / norm)

    @classmethod
    def z(cls) -> "Axis":
        return cls(np.array([0.0, 0.0, 1.0]))

    @classmethod
    def x(cls) -> "Axis":
        return cls(np.array([1.0, 0.0, 0.0]))

    @classmethod
    def y(cls) -> "Axis":
        return cls(np.array([0.0, 1.0, 0.0]))

    @classmethod
    def from_polar(cls, theta: float, phi: float = 0.0) -> "Axis":
        return cls(np.array([
            math.sin(theta) * math.cos(phi),
            math.sin(theta) * math.sin(phi),
            math.cos(theta),
        ]))

    @property
    def theta(self) -> float:
        return float(math.acos(max(-1.0, min(1.0, self.b[2]))))

    @property
    def phi(self) -> float:
        return float(math.atan2(self.b[1], self.b[0]))

    def is_z(self) -> bool:
        return bool(np.allclose(self.b, (0.0, 0.0, 1.0), atol=NORM_TOL, rtol=0.0))


def wigner_small_d(j: float, beta: float) -> np.ndarray:
    """Rotation by beta about the y-axis in the spin-j representation.

    Returns the real orthogonal (2j+1)x(2j+1) matrix of exp(i*beta*J_y/hbar)
    in the ascending-m basis, computed by the factorial sum formula.  Its
    transpose is the matrix of exp(-i*beta*J_y/hbar).
    """
    two_j = int(round(2.0 * j))
    if j < 0.0 or abs(2.0 * j - two_j) > 1e-12:
        raise ValueError("j must be a non-negative half-integer")
    n = two_j + 1
    half = 0.5 * beta
    cos_h, sin_h = math.cos(half), math.sin(half)

    # Powers of cos/sin can hit 0^0 at beta = 0 or pi; math.pow(0,0)=1 is wanted.
    d = np.zeros((n, n))
    for a in range(n):          # a = j + m'
        for b in range(n):      # b = j + m
            pref = math.sqrt(
                math.factorial(a) * math.factorial(two_j - a)
                * math.factorial(b) * math.factorial(two_j - b)
            )
            k_lo = max(0, b - a)
            k_hi = min(b, two_j - a)
            acc = 0.0
            for k in range(k_lo, k_hi + 1):
                denom = (
                    math.factorial(b - k) * math.factorial(k)
                    * math.factorial(two_j - a - k) * math.factorial(k + a - b)
                )
                term = ((-1.0) ** (a - b + k)) / denom
                term *= cos_h ** (two_j + b - a - 2 * k)
                term *= sin_h ** (a - b + 2 * k)
                acc += term
            d[a, b] = pref * acc
    # The loop builds exp(-i beta J_y); the staged convention here is its
    # transpose (= inverse, the matrix is orthogonal).
    return d.T


def rotation_matrix(ladder: AngularLadder, axis: Axis) -> np.ndarray:
    """Unitary whose columns are the axis-eigenvectors (ascending m) in the z-basis."""
    theta, phi = axis.theta, axis.phi
    d_back = wigner_small_d(ladder.j, theta).T  # exp(-i theta J_y)
    phases = np.exp(-1j * phi * ladder.m_values)
    return phases[:, None] * d_back


def rotate_state(state: AngularState, to_axis: Axis, from_axis: Axis | None = None) -> AngularState:
    """Express a state's coefficients in the eigenbasis along `to_axis`.

    The input coefficients are read in the `from_axis` eigenbasis (the
    z-basis when omitted).  Norm is preserved exactly up to roundoff.
    """
    coeffs = state.coeffs
    if from_axis is not None and not from_axis.is_z():
        coeffs = rotation_matrix(state.ladder, from_axis) @ coeffs
    if not to_axis.is_z():
        coeffs = rotation_matrix(state.ladder, to_axis).conj().T @ coeffs
    return AngularState.from_coeffs(state.ladder, coeffs)


def electron_eigenfunction(m: float, x_e, y_e, s: float):
    """Planar angular-momentum eigenfunction N r^|m| e^{i m theta} e^{-r^2/4s^2}.

    Normalized so that distinct m are orthonormal under dx dy.  Satisfies
    -i d/dtheta phi_m = m phi_m.
    """
    if s <= 0.0:
        raise ValueError("length scale s must be positive")
    x = np.asarray(x_e, dtype=np.float64)
    y = np.asarray(y_e, dtype=np.float64)
    r2 = x * x + y * y
    theta = np.arctan2(y, x)
    am = abs(m)
    norm = 1.0 / math.sqrt(math.pi * math.gamma(am + 1.0) * (2.0 * s * s) ** (am + 1.0))
    values = norm * r2 ** (0.5 * am) * np.exp(-r2 / (4.0 * s * s)) * np.exp(1j * m * theta)
    if np.ndim(x_e) == 0 and np.ndim(y_e) == 0:
        return complex(values)
    return values


def random_state(ladder: AngularLadder, rng: np.random.Generator) -> AngularState:
    """Haar-like random state: iid complex Gaussian coefficients, normalized."""
    raw = rng.normal(size=ladder.n_levels) + 1j * rng.normal(size=ladder.n_levels)
    return AngularState.from_coeffs(ladder, raw)


def state_to_json(state: AngularState) -> dict:
    """JSON shape {"j": float, "coeffs": [[re, im], ...]} (ascending m)."""
    doc = {
        "j": float(state.ladder.j),
        "coeffs": [[float(c.real), float(c.imag)] for c in state.coeffs],
    }
    if state.ladder.hbar != 1.0:
        doc["hbar"] = float(state.ladder.hbar)
    return doc


def state_from_json(doc: dict) -> AngularState:
    ladder = AngularLadder(j=float(doc["j"]), hbar=float(doc.get("hbar", 1.0)))
    coeffs = np.array([complex(re, im) for re, im in doc["coeffs"]])
    return AngularState(ladder=ladder, coeffs=coeffs)
