"""Exact pfaffian algebra over a nilpotent skew-matrix scheme: symplectic
standard even-tableau bases, straightening, and brute-force verification."""

from .indices import (
    Index,
    compare_numeric,
    compare_symp,
    enumerate_even_shapes,
    numeric_key,
    symp_key,
)
from .scalars import FpElement, PrimeField, RationalField, parse_field
from .poly import Poly
from .pfaffians import (
    PfBracket,
    SympGenerator,
    apply_symplectic_generator,
    bracket_value,
    evaluate,
    normalize_pf,
    pf_bracket_PQ,
    pf_to_polynomial,
    pfaffian_value,
    tableau_to_polynomial,
)
from .tableaux import (
    Tableau,
    compare_type,
    count_symplectic_standard_even,
    enumerate_symplectic_standard_even,
    is_canonical,
    is_standard,
    is_symplectic_standard,
    type_tuple,
)
from .exterior import ExtVector, check_contraction_vanishing, e_PQ, form, phi, w_vector, wedge, wedge_power
from .straighten import (
    TabCombo,
    exchange_straighten,
    find_symp_violation,
    multiply_basis,
    symp_normal_form,
    symp_relation_rhs,
)
from .oracle import (
    basis_evaluation_rank,
    dimension_agreement,
    graded_ideal_dimension,
    normal_form_modulo_ideal,
    point_violations,
    random_symplectic,
    sample_point,
    verify_point_relations,
    verify_points,
)
from .chart import (
    ChartDatum,
    chart_point,
    chart_suite,
    f_minor,
    nzd_closure_check,
    random_chart_datum,
    trace_identity_check,
)

__version__ = "0.1.0"
