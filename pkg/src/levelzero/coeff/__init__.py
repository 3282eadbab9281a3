from .orbits import OrbitSystem, build_orbit_system, LevelTooSmall
from .systems import (CoefficientSystem, constant_system, chain_complex,
                      ChainComplex, homology, to_coefficient_system)
from .local_maps import epsilon_local, epsilon_step
from .projectors import ProjectorFamily, projectors, \
    verify_level0_reconstruction

__all__ = [
    "OrbitSystem", "build_orbit_system", "LevelTooSmall",
    "CoefficientSystem", "constant_system", "chain_complex", "ChainComplex",
    "homology", "to_coefficient_system",
    "epsilon_local", "epsilon_step",
    "ProjectorFamily", "projectors", "verify_level0_reconstruction",
]
