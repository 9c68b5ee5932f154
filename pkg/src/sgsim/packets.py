"""Closed-form pointer-packet evolution through a Stern-Gerlach sequence.

The impulsive magnet multiplies each ladder branch by a plane-wave kick
exp(i k_m z) with k_m = mu*omega_m*T/hbar, leaving the pointer density
untouched.  Free flight for a time t then carries each branch as an exact
Gaussian solution of i hbar dPsi/dt = -(hbar^2/2 m) d^2Psi/dz^2:

    center_m(t) = (hbar k_m / m) t,
    sigma_t     = sigma0 (1 + i hbar t / (2 m sigma0^2)),
    phase       = k_m (z - center_m(t)/2),

so neighboring branch centers separate linearly in mu, T and t while all
widths spread together.  Everything here is analytic; the split-step grid
propagator in `sgsim.oracles` provides the independent numerical check.

Internal units default to hbar = 1, m_a = 1.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace

import numpy as np

from sgsim.eigenbasis import AngularLadder, AngularState

DEFAULT_EPS_OVERLAP = 1e-4
DEFAULT_EPS_NODE = 1e-8

_WEIGHT_NORM_TOL = 1e-10


@dataclass(frozen=True)
class SternGerlachSetup:
    """Magnet coupling, interaction/flight durations, atom mass, and packet widths.

    mu is the field-gradient coupling in g(z) = mu*z; the per-branch momentum
    kick is Delta_m = mu*omega_m*T.  s_e is the length scale of the concrete
    planar electron eigenfunctions (observable statistics must not depend
    on it).
    """

    mu: float = 100.0
    T: float = 1.0
    t_M: float = 1.0
    m_a: float = 1.0
    sigma_x0: float = 0.1
    sigma_z0: float = 0.1
    hbar: float = 1.0
    s_e: float = 1.0

    def __post_init__(self) -> None:
        for name in ("mu", "T", "t_M", "m_a", "sigma_x0", "sigma_z0", "hbar", "s_e"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be strictly positive")

    def momentum_kick(self, omega: float) -> float:
        """Delta = mu*omega*T (action per length)."""
        return self.mu * omega * self.T

    def kick_wavenumber(self, omega: float) -> float:
        return self.momentum_kick(omega) / self.hbar

    def branch_center(self, omega: float, t: float) -> float:
        return self.momentum_kick(omega) * t / self.m_a


@dataclass(frozen=True)
class GaussianPacket:
    """One freely evolving Gaussian branch with a plane-wave kick.

    The packet is anchored at its kick-time parameters (center0, sigma0,
    kick); `time` selects the instant along the exact free-flight solution.
    """

    kick: float
    sigma0: float
    mass: float = 1.0
    hbar: float = 1.0
    center0: float = 0.0
    phase0: float = 0.0
    time: float = 0.0

    def __post_init__(self) -> None:
        if self.sigma0 <= 0.0 or self.mass <= 0.0 or self.hbar <= 0.0:
            raise ValueError("sigma0, mass and hbar must be positive")
        if self.time < 0.0:
            raise ValueError("time must be non-negative")

    @property
    def velocity(self) -> float:
        return self.hbar * self.kick / self.mass

    @property
    def center(self) -> float:
        return self.center0 + self.velocity * self.time

    @property
    def sigma_t(self) -> complex:
        tau = self.hbar * self.time / (2.0 * self.mass * self.sigma0**2)
        return self.sigma0 * (1.0 + 1j * tau)

    @property
    def sigma_abs(self) -> float:
        return abs(self.sigma_t)

    def at_time(self, t: float) -> "GaussianPacket":
        if t < 0.0:
            raise ValueError("free-flight time must be non-negative")
        return replace(self, time=t)

    def value(self, z):
        """Complex amplitude of the normalized packet at position(s) z."""
        z = np.asarray(z, dtype=np.float64)
        amp = (2.0 * math.pi * self.sigma0**2) ** -0.25 * cmath.sqrt(self.sigma0 / self.sigma_t)
        shift = z - self.center
        phase = self.kick * (z - self.center0 - 0.5 * self.velocity * self.time) + self.phase0
        return amp * np.exp(-(shift * shift) / (4.0 * self.sigma0 * self.sigma_t) + 1j * phase)

    def dlog_value(self, z):
        """Logarithmic derivative d/dz log value(z)."""
        z = np.asarray(z, dtype=np.float64)
        return -(z - self.center) / (2.0 * self.sigma0 * self.sigma_t) + 1j * self.kick

    def density(self, z):
        """|value|^2: a normal density with mean center and std |sigma_t|."""
        z = np.asarray(z, dtype=np.float64)
        s = self.sigma_abs
        return np.exp(-((z - self.center) ** 2) / (2.0 * s * s)) / (math.sqrt(2.0 * math.pi) * s)

    def quadratic_coefficients(self) -> tuple[complex, complex, complex]:
        """(alpha, beta, delta) with value(z) = exp(alpha z^2 + beta z + delta)."""
        inv = 1.0 / (4.0 * self.sigma0 * self.sigma_t)
        alpha = -inv
        beta = 2.0 * self.center * inv + 1j * self.kick
        log_amp = (
            -0.25 * math.log(2.0 * math.pi * self.sigma0**2)
            + 0.5 * (math.log(self.sigma0) - cmath.log(self.sigma_t))
        )
        delta = (
            -self.center**2 * inv
            + 1j * (-self.kick * (self.center0 + 0.5 * self.velocity * self.time) + self.phase0)
            + log_amp
        )
        return alpha, beta, delta


@dataclass(frozen=True)
class PointerWave:
    """Weighted superposition of Gaussian branches at a common flight time."""

    branches: tuple = field(repr=False)

    def __post_init__(self) -> None:
        branches = tuple((complex(w), p) for w, p in self.branches)
        object.__setattr__(self, "branches", branches)
        if not branches:
            raise ValueError("pointer wave needs at least one branch")
        times = {p.time for _, p in branches}
        if len(times) > 1:
            raise ValueError("all branches must share one flight time")
        total = sum(abs(w) ** 2 for w, _ in branches)
        if abs(total - 1.0) > _WEIGHT_NORM_TOL:
            raise ValueError("branch weights must be normalized to within 1e-10")

    @property
    def time(self) -> float:
        return self.branches[0][1].time

    @property
    def weights(self) -> np.ndarray:
        return np.array([w for w, _ in self.branches], dtype=np.complex128)

    @property
    def packets(self) -> tuple:
        return tuple(p for _, p in self.branches)

    @property
    def centers(self) -> np.ndarray:
        return np.array([p.center for p in self.packets])

    @property
    def sigma_abs(self) -> float:
        return max(p.sigma_abs for p in self.packets)

    def value(self, z, weights=None):
        w = self.weights if weights is None else np.asarray(weights, dtype=np.complex128)
        acc = None
        for wm, packet in zip(w, self.packets):
            term = wm * packet.value(z)
            acc = term if acc is None else acc + term
        return acc

    def with_weights(self, weights) -> "PointerWave":
        """Same packet geometry with new (normalized) branch weights."""
        w = np.asarray(weights, dtype=np.complex128)
        norm = float(np.linalg.norm(w))
        if norm == 0.0:
            raise ValueError("weights must be nonzero")
        return PointerWave(tuple((wm / norm, p) for wm, p in zip(w, self.packets)))

    def at_time(self, t: float) -> "PointerWave":
        return PointerWave(tuple((w, p.at_time(t)) for w, p in self.branches))


def interaction_phase(setup: SternGerlachSetup, state: AngularState) -> PointerWave:
    """Pointer wave at the magnet exit: per-branch plane-wave kicks, density unchanged."""
    branches = tuple(
        (
            c_m,
            GaussianPacket(
                kick=setup.kick_wavenumber(float(omega)),
                sigma0=setup.sigma_z0,
                mass=setup.m_a,
                hbar=setup.hbar,
            ),
        )
        for c_m, omega in zip(state.coeffs, state.ladder.eigenvalues)
    )
    return PointerWave(branches)


def free_evolve(wave: PointerWave, t_M: float) -> PointerWave:
    """Exact free flight: advance every branch to absolute time t_M after the magnet."""
    if t_M < 0.0:
        raise ValueError("free-flight time must be non-negative")
    return wave.at_time(t_M)


def packet_separation(setup: SternGerlachSetup, ladder: AngularLadder) -> float:
    """Distance between neighboring branch centers, (mu T t_M / m_a) * (omega_m - omega_{m-1})."""
    if ladder.n_levels < 2:
        raise ValueError("packet separation needs at least two ladder levels")
    spacing = float(ladder.eigenvalues[1] - ladder.eigenvalues[0])
    return setup.mu * setup.T * setup.t_M * spacing / setup.m_a


def overlap(p_i: GaussianPacket, p_j: GaussianPacket) -> complex:
    """Closed-form inner product <phi_i, phi_j> of two branches at equal time."""
    if p_i.time != p_j.time:
        raise ValueError("overlap requires packets at equal time")
    a_i, b_i, d_i = p_i.quadratic_coefficients()
    a_j, b_j, d_j = p_j.quadratic_coefficients()
    a = -(a_i.conjugate() + a_j)
    b = b_i.conjugate() + b_j
    d = d_i.conjugate() + d_j
    return cmath.sqrt(math.pi / a) * cmath.exp(b * b / (4.0 * a) + d)


def resolution_ratio(wave: PointerWave) -> float:
    """Minimum adjacent center distance over twice the largest |sigma_t|."""
    centers = np.sort(wave.centers)
    if centers.size < 2:
        raise ValueError("resolution ratio needs at least two branches")
    gap = float(np.min(np.diff(centers)))
    return gap / (2.0 * wave.sigma_abs)


def is_resolved(wave: PointerWave, eps_overlap: float = DEFAULT_EPS_OVERLAP) -> bool:
    """True when every adjacent-branch |overlap| is below eps_overlap."""
    order = np.argsort(wave.centers)
    packets = wave.packets
    return all(
        abs(overlap(packets[order[i]], packets[order[i + 1]])) < eps_overlap
        for i in range(len(order) - 1)
    )


def pointer_density(wave: PointerWave, z, weights=None):
    """Coherent pointer density |sum_m w_m phi_m(z)|^2 for fixed branch weights."""
    return np.abs(wave.value(z, weights=weights)) ** 2


def pointer_marginal_mixture(wave: PointerWave, z):
    """Electron-marginalized pointer density sum_m |w_m|^2 |phi_m(z)|^2.

    Exact for any regime: the cross terms integrate to zero against the
    orthonormal electron eigenfunctions.
    """
    w2 = np.abs(wave.weights) ** 2
    acc = None
    for pm, packet in zip(w2, wave.packets):
        term = pm * packet.density(z)
        acc = term if acc is None else acc + term
    return acc


def mixture_cdf(wave: PointerWave, z):
    """CDF of the pointer mixture (sum of Gaussian branch CDFs)."""
    from scipy.stats import norm

    z = np.asarray(z, dtype=np.float64)
    w2 = np.abs(wave.weights) ** 2
    acc = np.zeros_like(z, dtype=np.float64)
    for pm, packet in zip(w2, wave.packets):
        acc = acc + pm * norm.cdf(z, loc=packet.center, scale=packet.sigma_abs)
    return acc
