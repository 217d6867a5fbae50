"""Exact-arithmetic orbifold cohomology of symmetric products.

The ring of a power of a closed manifold under a permutation group,
computed from a graded Frobenius algebra model of the base.  Everything
is done over exact rationals; floating point never appears.
"""

from .algebras import builtin_algebra, builtin_names, dump_algebra, load_algebra
from .checks import (
    Certificate,
    check_associativity,
    check_inverse_obstruction,
    check_kummer_associativity,
    check_pairing,
    check_skew,
    ring_basis,
)
from .frobenius import FrobeniusAlgebra, TensorClass, ValidationReport
from .kummer import (
    KummerClass,
    division_count,
    kummer_act,
    kummer_multiply,
    kummer_poincare,
    kummer_poincare_reduced,
    kummer_symmetrize,
    m_of,
)
from .oracles import (
    goettsche_series,
    invariant_dim_two_ways,
    invariant_dims_by_trace,
    pushforward_bruteforce,
)
from .orbifold import (
    CRClass,
    OrbifoldClass,
    cr_triple_pairing,
    expand_cr,
    group_act,
    integral,
    invariant_dims,
    is_invariant,
    multiply,
    obstruction_class,
    orbifold_poincare,
    pairing,
    restrict_cr,
    sector_partition,
    symmetrize,
)
from .permgroup import (
    GroupTable,
    OrbitPartition,
    Permutation,
    age,
    close_subgroup,
    graph_defect,
    min_transpositions,
    orbit_partition,
    symmetric_group,
)
from .poincare import PoincarePolynomial
from .rdp import orbifold_gram, rescaling_obstruction, resolution_gram

__all__ = [
    "Certificate",
    "CRClass",
    "FrobeniusAlgebra",
    "GroupTable",
    "KummerClass",
    "OrbifoldClass",
    "OrbitPartition",
    "Permutation",
    "PoincarePolynomial",
    "TensorClass",
    "ValidationReport",
    "age",
    "builtin_algebra",
    "builtin_names",
    "check_associativity",
    "check_inverse_obstruction",
    "check_kummer_associativity",
    "check_pairing",
    "check_skew",
    "close_subgroup",
    "cr_triple_pairing",
    "division_count",
    "dump_algebra",
    "expand_cr",
    "goettsche_series",
    "graph_defect",
    "group_act",
    "integral",
    "invariant_dim_two_ways",
    "invariant_dims",
    "invariant_dims_by_trace",
    "is_invariant",
    "kummer_act",
    "kummer_multiply",
    "kummer_poincare",
    "kummer_poincare_reduced",
    "kummer_symmetrize",
    "load_algebra",
    "m_of",
    "min_transpositions",
    "multiply",
    "obstruction_class",
    "orbifold_gram",
    "orbifold_poincare",
    "orbit_partition",
    "pairing",
    "pushforward_bruteforce",
    "rescaling_obstruction",
    "resolution_gram",
    "restrict_cr",
    "ring_basis",
    "sector_partition",
    "symmetrize",
    "symmetric_group",
]
