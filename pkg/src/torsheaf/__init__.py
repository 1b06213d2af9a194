"""Birational geometry of moduli of one-dimensional sheaves on the projective plane."""

from .cones import effective_cone, interpolation_check
from .errors import InvariantViolation, TorsheafError
from .kclass import ChernCharacter, onedim, tor_pairing
from .moduli import ModuliSpace, is_isomorphic, normalize_chi
from .picard import Cone2, ConeStatus, PicardClass
from .report import analyze
from .stability import largest_wall, nef_cone

__version__ = "0.1.0"
