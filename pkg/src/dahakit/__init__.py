"""Exact computations with extended affine Weyl groups, the graded double affine
Hecke algebra and double-coset convolution algebras."""

from .afflattice import AffCoweight, AffWeight, K_can, Lambda_can, delta, pair
from .convolution import DCosetFn, av_embed, convolve, identity, indicator
from .daha import Daha, DahaElt, InvariantViolation
from .extweyl import CoxOmegaWord, ExtendedAffineWeylGroup, ExtWeylElt
from .parahoric import ParahoricType, enumerate_standard, from_classical_index, to_classical_index
from .rootsys import RootDatum, build_root_datum

__all__ = [
    "AffCoweight", "AffWeight", "K_can", "Lambda_can", "delta", "pair",
    "DCosetFn", "av_embed", "convolve", "identity", "indicator",
    "Daha", "DahaElt", "InvariantViolation",
    "CoxOmegaWord", "ExtendedAffineWeylGroup", "ExtWeylElt",
    "ParahoricType", "enumerate_standard", "from_classical_index", "to_classical_index",
    "RootDatum", "build_root_datum",
]
