import random

import pytest

from sympfaff.linalg import J_matrix, identity, mat_eq, mat_mul, transpose
from sympfaff.oracle import (
    GradedIdealBasis,
    basis_evaluation_rank,
    basis_tableaux,
    dimension_agreement,
    graded_ideal_dimension,
    ideal_generators,
    normal_form_modulo_ideal,
    point_violations,
    random_symplectic,
    sample_point,
    verify_point_relations,
    verify_points,
)
from sympfaff.pfaffians import pf_to_polynomial, normalize_pf
from sympfaff.poly import Poly, substitute_conjugate
from sympfaff.scalars import PrimeField, RationalField
from sympfaff.tableaux import count_symplectic_standard_even


@pytest.fixture
def rng():
    return random.Random(31337)


def test_dimension_examples():
    assert graded_ideal_dimension(4, 0) == 1
    assert graded_ideal_dimension(4, 1) == 5
    assert graded_ideal_dimension(4, 2) == 14


def test_dimension_agreement_small():
    for n, mmax in ((4, 3), (6, 2)):
        for m in range(mmax + 1):
            res = dimension_agreement(n, m)
            assert res["agree"], res


def test_dimension_over_prime_field_matches():
    fld = PrimeField(10007, 2)
    for m in range(4):
        assert graded_ideal_dimension(4, m, fld) == graded_ideal_dimension(4, m)


def test_prime_field_must_exceed_rank():
    with pytest.raises(ValueError):
        graded_ideal_dimension(8, 1, PrimeField(3))
    with pytest.raises(ValueError):
        PrimeField(5, r=7)


def test_budget_refusal():
    with pytest.raises(RuntimeError, match="refusing"):
        GradedIdealBasis(8, 6, max_monomials=1000)


def test_normal_form_examples():
    n = 4
    trace = Poly.variable(n, 1, 3) + Poly.variable(n, 2, 4)
    assert normal_form_modulo_ideal(trace, 1) == {}
    # bracket on {1,1bar} plus bracket on {2,2bar}
    p = pf_to_polynomial(normalize_pf([1, -1]), n) + pf_to_polynomial(
        normalize_pf([2, -2]), n
    )
    assert normal_form_modulo_ideal(p, 1) == {}
    nonzero = normal_form_modulo_ideal(Poly.variable(n, 1, 2), 1)
    assert nonzero


def test_normal_form_requires_homogeneous():
    n = 4
    p = Poly.variable(n, 1, 2) + Poly.const(n, 1)
    with pytest.raises(ValueError):
        normal_form_modulo_ideal(p)


def test_normal_form_is_linear(rng):
    n = 4
    a = pf_to_polynomial(normalize_pf([1, 2, -1, -2]), n)
    b = Poly.variable(n, 1, 2) * Poly.variable(n, 3, 4)
    ra = normal_form_modulo_ideal(a, 2)
    rb = normal_form_modulo_ideal(b, 2)
    rsum = normal_form_modulo_ideal(a + b, 2)
    merged = dict(ra)
    for mono, c in rb.items():
        merged[mono] = merged.get(mono, 0) + c
        if not merged[mono]:
            del merged[mono]
    assert merged == rsum


def test_ideal_generators_shape():
    gens = ideal_generators(4)
    assert gens[0].degree == 1  # trace
    assert all(g.degree == 2 for g in gens[1:])
    assert all(g.is_homogeneous() for g in gens)


def test_ideal_is_symplectically_stable(rng):
    # conjugating a generator by the group keeps it inside the ideal
    n = 4
    for _ in range(5):
        g = random_symplectic(n, rng, steps=3)
        for h in ideal_generators(n):
            moved = substitute_conjugate(h, g)
            assert not normal_form_modulo_ideal(moved, h.degree)


def test_random_symplectic_identity_and_invariant(rng):
    n = 6
    assert mat_eq(random_symplectic(n, 5, steps=0), identity(n))
    j = J_matrix(n)
    for seed in range(5):
        g = random_symplectic(n, seed, steps=8)
        assert mat_eq(mat_mul(mat_mul(transpose(g), j), g), j)


def test_block_point_examples():
    # explicit block matrix: only the barred corner is filled
    y = [[0] * 4 for _ in range(4)]
    y[2][3], y[3][2] = 1, -1
    assert point_violations(y) == []
    assert point_violations([[0] * 4 for _ in range(4)]) == []


def test_sample_point_validates(rng):
    for n in (4, 6, 8):
        for seed in range(3):
            y = sample_point(n, seed)
            assert point_violations(y) == []


def test_sample_point_deterministic():
    assert sample_point(4, 9) == sample_point(4, 9)
    assert sample_point(4, 9) != sample_point(4, 10)


def test_point_violations_detects_each_break():
    y = sample_point(4, 0)
    bad = [row[:] for row in y]
    bad[0][2] += 1
    bad[2][0] -= 1
    out = point_violations(bad)
    assert "trace_sum" in out


def test_verify_point_relations_passes(rng):
    for n in (4, 6, 8):
        rep = verify_point_relations(sample_point(n, rng))
        assert rep["pass"], rep
        names = {f["name"] for f in rep["families"]}
        assert names == {
            "trace_sum",
            "bracket_family_sum",
            "bracket_exchange",
            "oversized_brackets",
            "wedge_power_coeffs",
            "contraction_vanishing",
        }
        assert all(f["instances"] > 0 for f in rep["families"])


def test_verify_point_relations_fails_on_corruption():
    y = sample_point(4, 3)
    y[0][2] += 1
    y[2][0] -= 1
    rep = verify_point_relations(y)
    assert not rep["pass"]
    failing = {f["name"] for f in rep["families"] if f["failures"]}
    assert "trace_sum" in failing


def test_verify_points_aggregate():
    agg = verify_points(4, 3, seed=11)
    assert agg["pass"] and len(agg["reports"]) == 3


def test_basis_evaluation_rank_small():
    res = basis_evaluation_rank(4, 1, seed=2)
    assert res["full_rank"] and res["basis_size"] == 5
    assert len(basis_tableaux(4, 2)) == count_symplectic_standard_even(2, 2)


def test_rationals_field_round_trip():
    fld = RationalField()
    assert fld.from_str("3/4") + fld.from_str("1/4") == 1
    assert fld.to_str(fld.from_str("-5")) == "-5"
