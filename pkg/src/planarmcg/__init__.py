"""Exact mapping class computations on the disk with n holes."""

from .words import (
    AlphabetMismatchError,
    CyclicWord,
    MalformedWordError,
    Word,
    abelianize,
    conjugacy_equal,
    cyclic_canonical,
    reduce,
)
from .mcg import (
    BoundaryViolationError,
    Curve,
    MappingClass,
    SizeMismatchError,
    apply,
    boundary_twist,
    compose,
    convex_twist,
    curve,
    equals,
    from_braid,
    half_twist,
    identity,
    invert,
    twist_about,
)
from .factorization import (
    Factorization,
    MultiplicityProfile,
    factorization,
    global_conjugate,
    hurwitz_inverse,
    hurwitz_move,
    multiplicity_profile,
    product,
    verify_relation_disjoint,
    verify_relation_lantern,
)
from .pa import AffineRep, NTClass, classify, growth_rate, stretch_from_z, thurston_rep, z_from_stretch
from .filling import (
    FillingInvariants,
    compare_invariants,
    euler_characteristic,
    h1,
    paper_family,
    twist_knot_family,
)
from .search import (
    FactorizationClass,
    ResourceLimitError,
    SearchConfig,
    enumerate_curves,
    enumerate_factorizations,
    profile_multisets,
    verify_unique_filling,
)

__version__ = "0.1.0"
