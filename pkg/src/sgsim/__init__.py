"""Hidden-variable Stern-Gerlach simulator.

Subpackages cover the stochastic micro-law (microdynamics), angular-momentum
ladders and rotations (eigenbasis), closed-form pointer packets (packets),
independent grid/Madelung oracles (oracles), hidden-variable trajectories
(trajectories), outcome statistics (measurement), and two-wing Bell
experiments (bell).  The `sgsim` console script drives reproducible runs.
"""

from sgsim.eigenbasis import AngularLadder, AngularState, Axis
from sgsim.packets import GaussianPacket, PointerWave, SternGerlachSetup

__version__ = "0.1.0"

__all__ = [
    "AngularLadder",
    "AngularState",
    "Axis",
    "GaussianPacket",
    "PointerWave",
    "SternGerlachSetup",
    "__version__",
]
