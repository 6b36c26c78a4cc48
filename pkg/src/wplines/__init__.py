"""Weighted projective lines of Dynkin type, their graded rings, and the
K-theoretic comparison with Dynkin quivers."""
from .collection import (
    ExceptionalCollection,
    build_collection,
    check_strong_exceptional,
    euler_matrix,
    ext1_dim,
    hom_dim,
)
from .grading import (
    Degree,
    GradingGroup,
    InvalidWeightError,
    WeightSequence,
    dualizing_element,
    invariant_factors,
    linear_combine,
    make_group,
    normalize,
)
from .presentation import (
    PresentationRow,
    check_generator_degrees,
    check_hilbert_match,
    check_relation_membership,
    dynkin_classify,
    gorenstein_parameter,
    overall_pass,
    table_row,
    verify_all,
)
from .quiver import (
    build_quiver,
    cartan_from_euler,
    cartan_from_quiver,
    compare_lattices,
    coxeter_matrix,
    enumerate_roots,
    path_count,
)
from .matrices import matrix_order
from .report import VerificationReport
from .ring import (
    Polynomial,
    closed_form_series,
    degree_of_monomial,
    graded_dim,
    hilbert_Rprime,
    monomial_count,
    parse_polynomial,
    reduce_mod_f,
)
