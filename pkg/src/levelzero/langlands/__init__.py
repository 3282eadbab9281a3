"""Level-zero Jacquet-Langlands bookkeeping.

Tame characters and admissible pairs, character values on the division
algebra side, the JL character sum, the elliptic character identity
assembled from independently computed sign factors, and summary tables.
"""

from .tame import TameCharacter, AdmissiblePair, extend_tame, theta_on_D
from .jl import jl_character, elliptic_character_identity, find_witness
from .harris import harris_summary
from ..dl.characters import enumerate_primitive

__all__ = [
    "TameCharacter", "AdmissiblePair", "extend_tame", "theta_on_D",
    "jl_character", "elliptic_character_identity", "find_witness",
    "harris_summary", "enumerate_primitive",
]
