"""Stochastic micro-law for deviations from infinitesimal stationary action.

The elementary random quantity is the signed deviation dev = dS - dA of a
short path's action increment from its stationary value.  For a fixed scale
gamma (units of action, never zero) the deviation follows a one-sided
exponential law,

    p(dev) = (2/|gamma|) exp(-2 dev / gamma),   sign(dev) = sign(gamma),

so |dev| has mean |gamma|/2 and the classical limit is |gamma| -> 0.

The scale rides on a three-level time hierarchy: the sign of gamma flips
together with the sign of the chaotic parameter xi every dt, the envelope
magnitude ||xi|| redraws every tau_xi, and |gamma| redraws every tau_gamma,
with tau_gamma >> tau_xi >> dt.  Both signs of xi (hence of gamma) are
equally likely at all times.

For two non-interacting subsystems the compound law factorizes into the
product of the single-system laws; `joint_deviation` realizes that product
directly, with one global gamma shared by both draws.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

DEFAULT_HIERARCHY_FACTOR = 100.0


@dataclass(frozen=True)
class FluctuationScales:
    """Time-scale hierarchy tau_gamma >> tau_xi >> dt for the sign/envelope processes."""

    dt: float = 1e-3
    tau_xi: float = 1e-1
    tau_gamma: float = 1e1
    hierarchy_factor: float = DEFAULT_HIERARCHY_FACTOR

    def __post_init__(self) -> None:
        for name in ("dt", "tau_xi", "tau_gamma", "hierarchy_factor"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be strictly positive")
        if self.tau_xi < self.hierarchy_factor * self.dt:
            raise ValueError("tau_xi must be at least hierarchy_factor * dt")
        if self.tau_gamma < self.hierarchy_factor * self.tau_xi:
            raise ValueError("tau_gamma must be at least hierarchy_factor * tau_xi")


@dataclass(frozen=True)
class DeviationSample:
    """One signed action-deviation draw together with its scale gamma."""

    gamma: float
    deviation: float

    def __post_init__(self) -> None:
        if self.gamma == 0.0:
            raise ValueError("gamma must be non-vanishing")
        if self.deviation != 0.0 and math.copysign(1.0, self.deviation) != math.copysign(1.0, self.gamma):
            raise ValueError("deviation must carry the sign of gamma")


@dataclass(frozen=True)
class MassFluctuation:
    """Mass m0 + f(xi) with an odd perturbation f, |f(xi)| <= amplitude*|xi| for small xi."""

    m0: float
    amplitude: float
    f: Callable[[float], float] | None = None

    def __post_init__(self) -> None:
        if self.m0 <= 0.0:
            raise ValueError("base mass must be positive")
        if self.amplitude < 0.0:
            raise ValueError("amplitude must be non-negative")
        if self.f is None:
            amp = self.amplitude
            object.__setattr__(self, "f", lambda xi: amp * xi)
        # Probe the declared symmetry: f must be exactly odd, and bounded by
        # amplitude*|xi| near zero.
        for xi in (1e-6, 1e-3, 1e-1):
            if self.f(-xi) != -self.f(xi):
                raise ValueError("perturbation f must be odd: f(-xi) == -f(xi)")
            if abs(self.f(xi)) > self.amplitude * xi * (1.0 + 1e-9):
                raise ValueError("perturbation f must satisfy |f(xi)| <= amplitude*|xi| for small xi")

    def mass(self, xi: float) -> float:
        return self.m0 + self.f(xi)

    def inverse_mass_split(self, xi: float) -> tuple[float, float]:
        """Even/odd split of 1/mass at +-xi (see `effective_average`)."""
        return effective_average(lambda u: 1.0 / self.mass(u), xi)


@dataclass(frozen=True)
class SignProcessTrack:
    """Piecewise-constant realization of (sign(xi), ||xi||, |gamma|) on a dt grid.

    Segment k covers [k*dt, (k+1)*dt).  The sign redraws every segment,
    the envelope every tau_xi, the gamma magnitude every tau_gamma;
    sign(gamma) always equals sign(xi).
    """

    dt: float
    sign: np.ndarray = field(repr=False)
    xi_mag: np.ndarray = field(repr=False)
    gamma_mag: np.ndarray = field(repr=False)

    @property
    def n_segments(self) -> int:
        return self.sign.size

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.n_segments) * self.dt

    @property
    def gamma(self) -> np.ndarray:
        return self.sign * self.gamma_mag

    @property
    def xi(self) -> np.ndarray:
        return self.sign * self.xi_mag


def sample_deviation(gamma: float, rng: np.random.Generator) -> DeviationSample:
    """Draw one deviation: |dev| ~ Exponential(mean |gamma|/2), sign(dev) = sign(gamma)."""
    if gamma == 0.0:
        raise ValueError("gamma must be non-vanishing")
    magnitude = rng.exponential(scale=abs(gamma) / 2.0)
    return DeviationSample(gamma=gamma, deviation=math.copysign(magnitude, gamma))


def sample_deviations(gamma: float, n: int, rng: np.random.Generator) -> np.ndarray:
    """Vectorized batch of `n` signed deviations for a fixed gamma."""
    if gamma == 0.0:
        raise ValueError("gamma must be non-vanishing")
    if n < 1:
        raise ValueError("n must be positive")
    return math.copysign(1.0, gamma) * rng.exponential(scale=abs(gamma) / 2.0, size=n)


def joint_deviation(
    gamma: float,
    dA_1: float,
    dA_2: float,
    rng: np.random.Generator,
) -> tuple[DeviationSample, DeviationSample]:
    """Deviation pair for a decomposable action dA = dA_1 + dA_2.

    The two subsystem deviations are independent draws from the same
    exponential law (the product form of the compound law); the stationary
    increments dA_i shift the realized dS_i but not the deviations, so they
    do not enter the sampling.  One global gamma is shared by both draws.
    """
    del dA_1, dA_2  # the law depends only on dS - dA
    return sample_deviation(gamma, rng), sample_deviation(gamma, rng)


def effective_average(h: Callable[[float], float], xi: float) -> tuple[float, float]:
    """Even/odd split of h at +-xi: tilde = (h(xi)+h(-xi))/2, delta = (h(xi)-h(-xi))/2."""
    plus = h(xi)
    minus = h(-xi)
    return 0.5 * (plus + minus), 0.5 * (plus - minus)


def sample_sign_process(
    scales: FluctuationScales,
    duration: float,
    rng: np.random.Generator,
    xi_nominal: float = 1.0,
    gamma_nominal: float = 1.0,
    envelope_range: tuple[float, float] = (0.5, 2.0),
) -> SignProcessTrack:
    """Generate a piecewise-constant track of (sign(xi), ||xi||, |gamma|).

    The sign is an unbiased coin per dt segment.  The envelope magnitudes
    redraw log-uniformly from envelope_range * nominal on their own time
    scales (the underlying law fixes only the hierarchy and the sign
    symmetry, not the envelope marginals).
    """
    if duration < scales.dt:
        raise ValueError("duration must be at least one dt segment")
    lo, hi = envelope_range
    if not (0.0 < lo <= hi):
        raise ValueError("envelope_range must satisfy 0 < lo <= hi")

    n = int(math.ceil(duration / scales.dt - 1e-9))
    sign = rng.integers(0, 2, size=n).astype(np.float64) * 2.0 - 1.0

    k = np.arange(n, dtype=np.float64)
    xi_idx = np.floor(k * scales.dt / scales.tau_xi).astype(np.int64)
    gamma_idx = np.floor(k * scales.dt / scales.tau_gamma).astype(np.int64)

    def _log_uniform(count: int, nominal: float) -> np.ndarray:
        return np.exp(rng.uniform(math.log(lo * nominal), math.log(hi * nominal), size=count))

    xi_values = _log_uniform(int(xi_idx[-1]) + 1, xi_nominal)
    gamma_values = _log_uniform(int(gamma_idx[-1]) + 1, gamma_nominal)
    return SignProcessTrack(
        dt=scales.dt,
        sign=sign,
        xi_mag=xi_values[xi_idx],
        gamma_mag=gamma_values[gamma_idx],
    )


def check_identity_fluctuation_decomposition(omega: np.ndarray, dz: float) -> float:
    """Max interior residual of (1/4)(dW/W)^2 = (1/2)(d2W/W) - d2R/R with R = sqrt(W).

    Both sides are evaluated by second-order central differences on the
    uniform grid, so for smooth positive fields the residual is pure
    discretization error, O(dz^2).
    """
    omega = np.asarray(omega, dtype=np.float64)
    if omega.ndim != 1 or omega.size < 3:
        raise ValueError("omega must be a 1D field with at least 3 points")
    if dz <= 0.0:
        raise ValueError("dz must be positive")
    if np.any(omega <= 0.0):
        raise ValueError("omega must be strictly positive")

    root = np.sqrt(omega)
    d_omega = (omega[2:] - omega[:-2]) / (2.0 * dz)
    dd_omega = (omega[2:] - 2.0 * omega[1:-1] + omega[:-2]) / dz**2
    dd_root = (root[2:] - 2.0 * root[1:-1] + root[:-2]) / dz**2

    mid = omega[1:-1]
    lhs = 0.25 * (d_omega / mid) ** 2
    rhs = 0.5 * dd_omega / mid - dd_root / root[1:-1]
    return float(np.max(np.abs(lhs - rhs)))
