import random

import pytest

from sympfaff.chart import (
    ChartDatum,
    barred_row_tableau,
    chart_point,
    chart_suite,
    f_minor,
    nzd_closure_check,
    random_chart_datum,
    trace_identity_check,
)
from sympfaff.oracle import basis_tableaux, point_violations
from sympfaff.pfaffians import normalize_pf, pf_to_polynomial
from sympfaff.tableaux import Tableau


@pytest.fixture
def rng():
    return random.Random(555)


def test_chart_datum_validation():
    with pytest.raises(ValueError):
        ChartDatum(((1, 2), (3, 4)), ((0, 1), (-1, 0)))  # not symmetric
    with pytest.raises(ValueError):
        ChartDatum(((1, 0), (0, 1)), ((0, 0), (0, 0)))  # singular skew
    with pytest.raises(ValueError):
        ChartDatum(((1,),), ((0,),))  # odd block size


def test_chart_point_examples():
    d = ChartDatum(((1, 0), (0, 1)), ((0, 1), (-1, 0)))
    y = chart_point(d)
    assert point_violations(y) == []
    assert f_minor(y) != 0
    d0 = ChartDatum(((0, 0), (0, 0)), ((0, 1), (-1, 0)))
    y0 = chart_point(d0)
    assert point_violations(y0) == []


def test_chart_points_random(rng):
    for _ in range(15):
        d = random_chart_datum(2, rng)
        y = chart_point(d)
        assert point_violations(y) == []
        assert f_minor(y) != 0


def test_trace_identity_examples(rng):
    assert trace_identity_check(ChartDatum(((1, 2), (2, 5)), ((0, 3), (-3, 0)))) == 0
    assert trace_identity_check(ChartDatum(((0, 0), (0, 0)), ((0, 1), (-1, 0)))) == 0
    for r in (2, 4):
        for _ in range(10):
            assert trace_identity_check(random_chart_datum(r, rng)) == 0


def test_f_minor_generic():
    # n=4: the barred corner is 2x2, determinant Y[3,4]^2
    from sympfaff.poly import Poly

    assert f_minor(n=4) == Poly.variable(4, 3, 4) ** 2
    pf = pf_to_polynomial(normalize_pf([-1, -2]), 4)
    assert f_minor(n=4) == pf * pf
    pf8 = pf_to_polynomial(normalize_pf([-1, -2, -3, -4]), 8)
    assert f_minor(n=8) == pf8 * pf8
    with pytest.raises(ValueError):
        f_minor(n=6)


def test_f_minor_value_block_zero():
    y = [[0] * 4 for _ in range(4)]
    assert f_minor(y) == 0


def test_nzd_closure_examples():
    assert nzd_closure_check(Tableau(()), 2)
    assert nzd_closure_check(Tableau(((1, 2),)), 2)
    with pytest.raises(ValueError):
        nzd_closure_check(Tableau(((1, -1),)), 2)  # not symplectic standard
    with pytest.raises(ValueError):
        nzd_closure_check(Tableau(()), 3)  # odd rank


def test_nzd_closure_injective_degree_two():
    from sympfaff.straighten import multiply_basis

    row = barred_row_tableau(2)
    images = set()
    tabs = basis_tableaux(4, 0) + basis_tableaux(4, 1) + basis_tableaux(4, 2)
    for t in tabs:
        assert nzd_closure_check(t, 2)
        prod = multiply_basis(row, t, 2)
        (image, _), = prod.terms.items()
        assert image not in images
        images.add(image)


def test_chart_suite_aggregate():
    rep = chart_suite(4, seed=3, count=4)
    assert rep["pass"] and len(rep["results"]) == 4
    with pytest.raises(ValueError):
        chart_suite(6, seed=0, count=1)
