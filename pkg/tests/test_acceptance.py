"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

All arithmetic is exact, so every tolerance is literal equality.  Run with
`pytest tests/test_acceptance.py -v` (the summary lines print through the
capture).
"""

import random
from itertools import combinations
from math import factorial

from sympfaff.chart import (
    barred_row_tableau,
    chart_point,
    f_minor,
    nzd_closure_check,
    random_chart_datum,
    trace_identity_check,
)
from sympfaff.exterior import ExtVector, e_PQ, phi
from sympfaff.linalg import det_exact
from sympfaff.oracle import (
    basis_evaluation_rank,
    basis_tableaux,
    graded_ideal_dimension,
    normal_form_modulo_ideal,
    point_violations,
    sample_point,
    verify_point_relations,
)
from sympfaff.pfaffians import pfaffian_value
from sympfaff.straighten import TabCombo, multiply_basis, symp_normal_form
from sympfaff.tableaux import Tableau, count_symplectic_standard_even, is_symplectic_standard

from conftest import random_even_rows


def _report(capsys, num, name, ok, detail=""):
    with capsys.disabled():
        print(f"\nACCEPTANCE {num} [{name}]: {'PASS' if ok else 'FAIL'}"
              + (f" ({detail})" if detail else ""))
    assert ok, f"criterion {num} failed: {detail}"


def test_criterion_1_dimension_agreement(capsys):
    cases = [(4, m) for m in range(5)] + [(6, m) for m in range(4)] + [(8, m) for m in range(3)]
    mismatches = []
    values = {}
    for n, m in cases:
        dim = graded_ideal_dimension(n, m)
        cnt = count_symplectic_standard_even(m, n // 2)
        values[(n, m)] = (dim, cnt)
        if dim != cnt:
            mismatches.append((n, m, dim, cnt))
    anchors_ok = values[(4, 1)] == (5, 5) and values[(4, 2)] == (14, 14)
    _report(
        capsys,
        1,
        "graded dimension equals tableau count",
        not mismatches and anchors_ok,
        f"checked {len(cases)} pairs, anchors (4,1)->5 (4,2)->14",
    )


def test_criterion_2_relation_suite(capsys):
    bad = []
    total = 0
    for n in (4, 6, 8):
        rng = random.Random(10_000 + n)
        for k in range(100):
            y = sample_point(n, rng)
            rep = verify_point_relations(y)
            total += 1
            if not rep["pass"]:
                bad.append((n, k))
    _report(
        capsys,
        2,
        "relation suite at sampled points",
        not bad,
        f"{total} points across n=4,6,8, zero residuals",
    )


def test_criterion_3_straightening_soundness(capsys):
    rng = random.Random(777_001)
    points = {n: [sample_point(n, random.Random(50_000 + n * 100 + i)) for i in range(25)]
              for n in (4, 6)}
    failures = []
    for trial in range(200):
        r = rng.choice([2, 3])
        n = 2 * r
        items = []
        for _ in range(rng.choice([1, 2, 3])):
            cells = rng.choice([2, 4, 6])
            items.append((rng.randint(-9, 9), Tableau(random_even_rows(rng, r, cells))))
        combo = TabCombo.build(r, items)
        nf = symp_normal_form(combo)
        for t, c in nf.terms.items():
            if not (is_symplectic_standard(t) and t.is_even()):
                failures.append((trial, "non-basis output"))
            if not (isinstance(c, int) or c.denominator == 1):
                failures.append((trial, "non-integer coefficient"))
        diff = combo.to_polynomial() - nf.to_polynomial()
        for d, comp in diff.homogeneous_components().items():
            if normal_form_modulo_ideal(comp, d):
                failures.append((trial, f"nonzero normal form in degree {d}"))
        p, q = combo.to_polynomial(), nf.to_polynomial()
        for y in points[n]:
            if p.evaluate(y) != q.evaluate(y):
                failures.append((trial, "point evaluation mismatch"))
                break
    _report(
        capsys,
        3,
        "straightening soundness on 200 random combos",
        not failures,
        "basis outputs, ideal membership, 25-point agreement, integrality",
    )


def test_criterion_4_independence_evidence(capsys):
    bad = []
    for n, m in [(4, 1), (4, 2), (4, 3), (6, 1), (6, 2)]:
        res = basis_evaluation_rank(n, m, seed=4_000 + 10 * n + m)
        if not res["full_rank"] or res["points"] != 2 * res["basis_size"]:
            bad.append(res)
    _report(
        capsys,
        4,
        "basis evaluation matrices have full column rank",
        not bad,
        "(n,m) in {(4,1),(4,2),(4,3),(6,1),(6,2)} at 2x points",
    )


def test_criterion_5_chart_suite(capsys):
    failures = []
    for n in (4, 8):
        r = n // 2
        rng = random.Random(60_000 + n)
        for k in range(50):
            d = random_chart_datum(r, rng)
            if trace_identity_check(d) != 0:
                failures.append((n, k, "trace"))
            y = chart_point(d)
            if point_violations(y) or f_minor(y) == 0:
                failures.append((n, k, "point"))
    # closure of the basis under the full barred row, with injectivity
    images = set()
    count = 0
    for m in range(4):
        for t in basis_tableaux(4, m):
            count += 1
            if not nzd_closure_check(t, 2):
                failures.append((4, t, "closure"))
            prod = multiply_basis(barred_row_tableau(2), t, 2)
            (image, _), = prod.terms.items()
            if image in images:
                failures.append((4, t, "not injective"))
            images.add(image)
    _report(
        capsys,
        5,
        "chart points, trace identity, barred-row closure",
        not failures,
        f"50 charts at n=4 and n=8, {count} closure products injective",
    )


def test_criterion_6_algebraic_identities(capsys):
    failures = []
    # pfaffian squares to the determinant (independent elimination)
    rng = random.Random(88_001)
    for size in (2, 4, 6, 8):
        for _ in range(50):
            m = [[0] * size for _ in range(size)]
            for i in range(size):
                for j in range(i + 1, size):
                    v = rng.randint(-9, 9)
                    m[i][j], m[j][i] = v, -v
            if pfaffian_value(m) ** 2 != det_exact(m):
                failures.append(("pf^2", size))
    # contraction recursion on random vectors
    rng = random.Random(88_002)
    n = 8
    for _ in range(100):
        k = rng.choice([4, 6])
        terms = {}
        for _ in range(rng.choice([1, 2, 3])):
            key = tuple(sorted(rng.sample(range(1, n + 1), k)))
            terms[key] = rng.randint(-4, 4)
        v = ExtVector(n, terms)
        for t in range(1, k // 2 + 1):
            direct = phi(v, t)
            composed = v
            for _ in range(t):
                composed = phi(composed, 1)
            if direct != composed:
                failures.append(("recursion", terms, t))
    # contraction of the subset basis vectors, exhaustively to rank 4
    for r in (2, 3, 4):
        levels = list(range(1, r + 1))
        for pa in range(r + 1):
            for p in combinations(levels, pa):
                for qa in range(r + 1):
                    if pa + qa > 6:
                        continue
                    for q in combinations(levels, qa):
                        shared = set(p) & set(q)
                        k = pa + qa
                        for t in range(1, k // 2 + 1):
                            got = phi(e_PQ(set(p), set(q), r), t)
                            if t > len(shared):
                                if got:
                                    failures.append(("vanishing", p, q, t))
                                continue
                            expected = ExtVector.zero(2 * r)
                            for gt in combinations(sorted(shared), t):
                                expected = expected + e_PQ(set(p) - set(gt), set(q) - set(gt), r)
                            if got != factorial(t) * expected:
                                failures.append(("expansion", p, q, t))
    _report(
        capsys,
        6,
        "algebraic identities",
        not failures,
        "pf^2=det (50x sizes 2-8), contraction recursion (100), subset-basis "
        "contraction exhaustive to rank 4",
    )
