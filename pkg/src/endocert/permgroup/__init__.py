"""Exact permutation-group engine.

Orders and membership via deterministic Schreier-Sims chains; transitivity
degree, derived series, simplicity and normal-subgroup queries; bounded
least-index subgroup search; and constructors for the standard families.
"""

from .chain import StabilizerChain, closure_elements
from .groups import EXHAUSTIVE_BOUND, SUBGROUP_LATTICE_BOUND, PermGroup
from .perms import Perm, parse_generators
from .structure import (
    conjugacy_class_representatives,
    commutator_subgroup,
    derived_series,
    has_normal_subgroup_of_index_dividing,
    is_perfect,
    is_simple,
    is_solvable,
    normal_closure,
)
from .subsearch import (
    SubgroupSearchReport,
    has_proper_subgroup_of_index,
    min_proper_subgroup_index,
    psl2_subgroup_criterion,
)

__all__ = [
    "EXHAUSTIVE_BOUND",
    "SUBGROUP_LATTICE_BOUND",
    "Perm",
    "PermGroup",
    "StabilizerChain",
    "SubgroupSearchReport",
    "closure_elements",
    "commutator_subgroup",
    "conjugacy_class_representatives",
    "derived_series",
    "has_normal_subgroup_of_index_dividing",
    "has_proper_subgroup_of_index",
    "is_perfect",
    "is_simple",
    "is_solvable",
    "min_proper_subgroup_index",
    "normal_closure",
    "parse_generators",
    "psl2_subgroup_criterion",
]
