"""Group-theoretic invariants of mixed quotient surfaces (C x C)/G."""

from .albanese import AlbaneseReport, albanese_report, canonical_kernel, polarization_type
from .cover import (
    GeneratingVector,
    MixedAction,
    genus_of_C,
    irregularity,
    is_semi_isogenous,
    make_generating_vector,
    make_mixed_action,
    minimality_verdict,
    sigma_set,
)
from .groups import FiniteGroup, GroupHom, SquareExtension, SubgroupRef
from .invariants import dihedral_invariants, semi_isogenous_ksq
from .lattice import FurtherQuotient, admissible_kernels, build_GK, is_GK_normal, quotient_lattice
from .ramification import order_two_outer, ramification_report
from .report import analyze, catalog

__version__ = "0.1.0"
