"""Exact computational algebra for generalized virtual braid monoids,
shuffle lifts, and quantum quasi-shuffle products.

The package machine-checks, with exact Laurent-polynomial arithmetic and no
floating point anywhere, that the two standard constructions of the quantum
quasi-shuffle product coincide: the three-branch inductive recursion, and
the action of a canonical two-generator word-sum lift of the (p,q)-shuffles
through the symmetric-group quotient of the generalized virtual braid
monoid.  Alongside sit the supporting combinatorics (bubble decompositions
of shuffles), braided-algebra axiom checkers, and R-matrix/twist matrix
representations of the same monoid.
"""

from .braided import (
    AxiomCheck,
    BraidedAlgebra,
    acts_as_gvb,
    builtin_algebras,
    check_axioms,
    diagonal_braiding,
    from_json,
    hoffman_stuffle,
    is_associative,
    product_braiding_braids,
    qpoly,
    to_json,
)
from .qshuffle import (
    Tensor,
    act_word,
    act_word_sum,
    delete_units,
    quantum_shuffle,
    quasi_shuffle_inductive,
    quasi_shuffle_section,
    verify_quasi_shuffle,
    verify_shuffle_specialization,
)
from .report import VerificationReport
from .rmatrix import (
    braided_r_matrix,
    check_gvb_matrix_relations,
    check_twist_axioms,
    fundamental_twist,
    gvb_generator_tables,
)
from .scalars import ONE, ZERO, Scalar, parse_scalar, rational, variable
from .section import (
    braid_lift,
    involutive_lift,
    lift_shuffle,
    lift_sum_block_identities,
    lift_sum_recursion_holds,
    section_table,
    shuffle_lift_sum,
)
from .symgroup import (
    BubbleDecomposition,
    Permutation,
    bubble_decompose,
    enumerate_shuffles,
    from_word,
    is_pq_shuffle,
    profile_law_violations,
    shuffle_partition,
)
from .words import (
    GvbWord,
    WordSum,
    braid_gen,
    cancel_double_crossings,
    drop_virtual_terms,
    equivalent_bounded,
    parse_word,
    relation_instances,
    to_permutation,
    virtual_gen,
    word,
)

__version__ = "0.1.0"
