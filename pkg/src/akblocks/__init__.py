"""Abacus calculus for blocks of Ariki-Koike algebras.

Multipartition abacus displays, elementary bead moves and moving
vectors, block invariants (residue content, defect, affine Weyl action),
the representation-type classification of blocks, and the cell-chain
combinatorics of straight-line Brauer tree algebras.
"""

from .abacus import AbacusPair, UglovImage, dual, is_complete, pair_from_beads, render, uglov
from .blocks import (
    BlockId,
    BudgetExceeded,
    CartanData,
    OrbitResult,
    block_id,
    defect,
    enumerate_block_members,
    normalize_multicharge,
    orbit_reachable,
    weyl_sigma,
)
from .brauer import BrauerLine, Cell, cell_chains, multiplication_poset, projective_structure
from .classify import (
    IncomparabilityWitness,
    ReprTypeReport,
    block_moving_vector,
    derived_equivalent_weight1,
    find_incomparable_pair,
    incomparable_abaci,
    is_incomparable_witness,
    permutation_for_incomparability,
    repr_type,
    schur_repr_type,
    subabacus_moving_vector,
)
from .moves import (
    ElementaryOp,
    apply_op,
    construct_from_vector,
    core,
    moving_vector_between,
    operation_set_between,
    remove_rim_hook,
    rotate_rows,
)
from .partitions import (
    INFINITY,
    DominanceRel,
    conjugate,
    conjugate_multi,
    count_standard_tableaux,
    dominance_compare,
    in_A,
    in_Abar,
    multipartitions_of,
    partitions_of,
    permute,
    permute_charge,
    residue_content,
)

__version__ = "0.1.0"
