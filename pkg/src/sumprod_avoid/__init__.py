"""Large sets in F_p avoiding 1 as a sum and as a product of two elements.

For every prime p >= 5 the package builds a set A of size (p - 1)/2 with
1 not in A+A and 1 not in AA, verifies it directly, and checks by brute
force that (p - 1)/2 is the largest size possible.
"""

from .exceptions import (
    BoundError,
    CapError,
    DomainError,
    FeasibilityError,
    NonGenericVertexError,
    ResourceError,
    SizeCeilingError,
)
from .extremal import ExtremalSet, cardinality_formula, construct, implicit, member
from .fp_arith import PrimeModulus, inv, is_prime, next_prime_at_least, roots_of_unit_trinomial, sqrt_mod
from .oracle import OracleResult, count_optima, max_avoiding_componentwise, max_avoiding_subset_enum
from .orbit import Census, Component, ComponentKind, GroupWord, Orbit, apply_word, census, classify, compose, fixed_words, orbit_of
from .refute import RefutationWitness, refute
from .relation_graph import ComponentSet, RelationGraph
from .verify import Method, VerificationReport, check_avoidance, check_sumset_covers, productset, sumset, verify_implicit

__version__ = "0.1.0"
