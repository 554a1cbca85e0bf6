"""Module labels and fusion rules of lattice vertex operator algebras V_L.

Given the Gram matrix of a positive-definite even lattice L this package
computes the discriminant group L°/L, the finite group L^/K with its central
characters and the modules T_chi, the complete fusion ring of untwisted and
twisted V_L-modules, and (in :mod:`lattice_voa.fock`) exact truncated
expansions of the twisted intertwining operators.
"""

from .cocycle import BilinearCocycle, build_cocycle, eval_epsilon, verify_cocycle_identities
from .errors import *  # noqa: F401,F403
from .fusion import (
    AS_STATED,
    CONTRAGREDIENT,
    FusionRing,
    FusionTable,
    Twisted,
    Untwisted,
    contragredient,
    enumerate_labels,
    fuse,
    fusion_table,
    verify_ring_axioms,
)
from .lattice import (
    DiscriminantGroup,
    Lattice,
    canonicalize_coset,
    discriminant_group,
    inner_product,
    validate_lattice,
)
from .twisted import (
    CentralCharacter,
    QuotientGroupElement,
    SectorRep,
    build_quotient_group,
    build_sector_rep,
    contragredient_character,
    enumerate_central_characters,
    eta_map,
    solve_intertwiner,
    twist_character,
)

__version__ = "0.1.0"
