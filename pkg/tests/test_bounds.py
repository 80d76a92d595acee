from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given

from rprime.bounds import (
    BoundQuery,
    ConstraintReport,
    bound_theorem1,
    bound_theorem2,
    build_extremal,
    check_identity_eq6,
    check_stationarity,
    conjecture_p,
    conjectured_bound,
    determinant,
    gamma,
    gamma1,
    gamma1_max,
    hessian_by_differences,
    hessian_minor,
    minor_by_determinant,
    reduced_gamma1,
    substituted_profile,
    substituted_rows,
    verify_system,
)
from rprime.constructions import (
    complete_split,
    extremal_profile,
    family_gnpk,
    family_gnpkm,
    regular_feasible,
    regular_graph,
)
from rprime.errors import DomainError, FeasibilityError, InputError
from rprime.graph import complete_graph, graph_from_edges
from rprime.indices import DegreeProfile, degree_profile, variation_randic

from test_graph import graphs

F = Fraction


def test_theorem1_examples():
    assert bound_theorem1(6, 2).value == F(9, 5) == variation_randic(complete_split(6, 2))
    assert bound_theorem1(6, 3).value == F(12, 5) == variation_randic(family_gnpk(6, 3, 3))
    assert bound_theorem1(8, 4).value == F(22, 7) == variation_randic(family_gnpk(8, 4, 4))
    for n in range(2, 15):
        assert bound_theorem1(n, 1).value == 1


def test_theorem1_regimes():
    assert bound_theorem1(6, 3).regime == "split"
    assert bound_theorem1(6, 3).coincident
    assert bound_theorem1(7, 4).regime == "half"
    for n in range(4, 15, 2):
        k = n // 2
        split = F(n, 2) - (F(1, k) - F(1, n - 1)) * k * (n - k) / 2
        half = F(n, 2) - (F(1, k) - F(1, n - 1)) * F(n * n, 4) / 2
        assert split == half == bound_theorem1(n, k).value


@pytest.mark.parametrize("n, k", [(6, 0), (6, 5), (6, 6), (3, 2)])
def test_theorem1_out_of_range(n, k):
    with pytest.raises(InputError):
        bound_theorem1(n, k)


def test_theorem2_examples():
    r = bound_theorem2(6, 2, 4)
    assert r.value == 2
    assert variation_randic(family_gnpkm(6, 4, 2, 4)) == 2
    assert bound_theorem2(8, 4, 5).value == F(18, 5)
    with pytest.raises(DomainError):
        bound_theorem2(8, 2, 5)
    with pytest.raises(InputError):
        bound_theorem2(8, 4, 3)


def test_theorem2_reduces_to_theorem1():
    for n in range(3, 15):
        for k in range(1, n - 1):
            assert bound_theorem2(n, k, n - 1).value == bound_theorem1(n, k).value


def test_bound_result_invariants():
    for n in range(3, 15):
        for k in range(1, n - 1):
            for m in [None, *range(k, n - 1)]:
                try:
                    r = bound_theorem1(n, k) if m is None else bound_theorem2(n, k, m)
                except DomainError:
                    continue
                assert 0 < r.value <= F(n, 2)
                g = build_extremal(r)
                if g is not None:
                    assert variation_randic(g) == r.value, (n, k, m)


def test_bound_monotone_in_k():
    # exploratory: not claimed in the source, checked numerically
    for n in range(3, 15):
        vals = [bound_theorem1(n, k).value for k in range(1, n - 1)]
        assert vals == sorted(vals)


def test_conjecture_p_table():
    assert conjecture_p(7, 4).values == {3, 4}
    assert conjecture_p(9, 5).values == {4}
    assert conjecture_p(10, 6).values == {4, 6}
    assert conjecture_p(7, 5).values == {4}
    assert conjecture_p(9, 6).values == {4, 5}
    assert conjecture_p(11, 7).values == {6}
    for n, k in [(8, 5), (8, 6), (10, 7), (12, 8)]:
        r = conjecture_p(n, k)
        assert r.theorem_regime and r.values == {n // 2}
    for n, k in [(7, 3), (7, 6), (6, 3)]:
        with pytest.raises(InputError):
            conjecture_p(n, k)


def test_conjectured_bound_examples():
    assert conjectured_bound(7, 4, 3) == conjectured_bound(7, 4, 4) == 3
    assert conjectured_bound(7, 5, 4) == F(33, 10)


def test_conjectured_p_always_buildable():
    for n in range(5, 31):
        for k in range(n // 2 + 1, n - 1):
            r = conjecture_p(n, k)
            for p in r.values:
                assert regular_feasible(p, n - k - 1), (n, k, p)


def test_gamma_examples():
    c4 = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert gamma(degree_profile(c4)) == 0
    assert gamma(degree_profile(complete_split(6, 2))) == F(12, 5)
    star = graph_from_edges(6, [(0, v) for v in range(1, 6)])
    assert gamma(degree_profile(star)) == 4
    with pytest.raises(InputError):
        gamma(DegreeProfile(3, {0: 1, 2: 2}, {(0, 2): 1}))


def test_identity_examples():
    assert check_identity_eq6(complete_graph(4)) == (2, 2)
    assert check_identity_eq6(complete_split(6, 2)) == (F(9, 5), F(9, 5))
    import networkx as nx
    from conftest import from_nx

    assert check_identity_eq6(from_nx(nx.petersen_graph())) == (5, 5)


def test_identity_on_corpus(connected_corpus):
    for g in connected_corpus:
        lhs, rhs = check_identity_eq6(g)
        assert lhs == rhs


def test_regular_graphs_have_zero_gamma():
    for p in range(2, 13):
        for d in range(1, p):
            if regular_feasible(p, d):
                g = regular_graph(p, d)
                assert gamma(degree_profile(g)) == 0
                assert variation_randic(g) == F(p, 2)


def test_verify_system_synthetic():
    rep = verify_system(DegreeProfile(3, {2: 3}, {(2, 2): 4}))
    assert not rep.ok
    assert rep.capacity_violations == [(2, 2)]
    assert rep.row_residuals == {2: 2}
    assert rep.total_vertices_residual == 0
    assert verify_system(DegreeProfile(4, {2: 3}, {})).total_vertices_residual == -1


def test_verify_system_extremal_profiles():
    assert verify_system(extremal_profile(8, 4).profile).ok
    for n in range(3, 15):
        for k in range(1, n - 1):
            e = extremal_profile(n, k)
            if e.profile is not None:
                assert verify_system(e.profile).ok, (n, k)


def test_verify_system_and_substitution_on_corpus(connected_corpus):
    for g in connected_corpus:
        prof = degree_profile(g)
        assert verify_system(prof) == ConstraintReport(
            row_residuals={i: 0 for i in prof.degrees()}
        )
        y = substituted_profile(prof)
        assert all(v >= 0 for v in y.values())
        assert not any(substituted_rows(prof, y).values())
        top = g.order - 1
        assert all(v == 0 for (i, j), v in y.items() if top in (i, j))


def test_substituted_examples():
    assert set(substituted_profile(degree_profile(complete_graph(6))).values()) == {0}
    p = degree_profile(complete_split(6, 2))
    y = substituted_profile(p)
    assert y == {(2, 2): 6, (2, 5): 0, (5, 5): 0}
    assert 2 * y[2, 2] == (6 - 2 - 1) * 4
    k6t = degree_profile(family_gnpk(6, 3, 3))
    y = substituted_profile(k6t)
    assert y[3, 3] == comb(3, 2) == 3
    assert 2 * y[3, 3] == (6 - 3 - 1) * 3
    with pytest.raises(FeasibilityError):
        substituted_profile(DegreeProfile(3, {2: 3}, {(2, 2): 4}))


def test_gamma1_max_examples():
    v, pt = gamma1_max(6, 3)
    assert v == F(6, 5)
    assert pt == [3, 0, 3]
    assert F(6, 2) - v / 2 == bound_theorem1(6, 3).value
    assert gamma1_max(8, 4)[0] == F(12, 7)
    for n in range(4, 15):
        v, pt = gamma1_max(n, n - 2)
        assert v == F(n * n, 4) * (F(1, n - 2) - F(1, n - 1))
        assert gamma1(n, n - 2, pt) == v
    with pytest.raises(DomainError):
        gamma1_max(8, 3)


def compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first, *rest)


@pytest.mark.parametrize("n", range(4, 11))
def test_gamma1_max_dominates_integer_points(n):
    for k in range((n + 1) // 2, n - 1):
        best, pt = gamma1_max(n, k)
        assert gamma1(n, k, pt) == best
        for counts in compositions(n, n - k):
            assert gamma1(n, k, list(counts)) <= best
            assert gamma1(n, k, list(counts)) == reduced_gamma1(n, k, [F(c) for c in counts[:-1]])


def test_hessian_minor_examples():
    assert hessian_minor(6, 3, 1) == F(-4, 15) == minor_by_determinant(6, 3, 1)
    assert hessian_minor(6, 3, 2) == F(1, 60) == minor_by_determinant(6, 3, 2)
    with pytest.raises(InputError):
        hessian_minor(6, 3, 3)
    with pytest.raises(InputError):
        hessian_minor(6, 3, 0)


def test_hessian_matches_displayed_matrix():
    # entries -2(1/max(i,l) - 1/(n-1)), cross-checked with sympy's determinant
    for n in range(4, 13):
        for k in range((n + 1) // 2, n - 1):
            h = hessian_by_differences(n, k)
            dim = n - k - 1
            for a in range(dim):
                for b in range(dim):
                    assert h[a][b] == -2 * (F(1, k + max(a, b)) - F(1, n - 1))
            for j in range(1, dim + 1):
                sym = sympy.Matrix(j, j, lambda a, b: sympy.Rational(1, k + max(a, b)) - sympy.Rational(1, n - 1))
                assert (-2) ** j * sym.det() == sympy.Rational(hessian_minor(n, k, j).numerator, hessian_minor(n, k, j).denominator)


def test_determinant_helper():
    assert determinant([[F(0), F(1)], [F(1), F(0)]]) == -1
    assert determinant([[F(1), F(2)], [F(2), F(4)]]) == 0
    assert determinant([[F(2)]]) == 2


def test_stationarity():
    assert check_stationarity(6, 3) == [0, 0]
    assert check_stationarity(8, 4) == [0, 0, 0]
    for n, k in [(6, 3), (8, 5), (10, 7)]:
        c = F(1, k) - F(1, n - 1)
        pt = [F(n, 2) + 1] + [F(0)] * (n - k - 2)
        assert check_stationarity(n, k, pt)[0] == -2 * c


def test_stationarity_is_gradient():
    # the rows equal the exact gradient of the reduced objective
    for n in range(4, 11):
        for k in range((n + 1) // 2, n - 1):
            dim = n - k - 1
            pt = [F(a * 7 % 5, 3) for a in range(dim)]
            grad = []
            for a in range(dim):
                up = pt[:]
                dn = pt[:]
                up[a] += 1
                dn[a] -= 1
                grad.append((reduced_gamma1(n, k, up) - reduced_gamma1(n, k, dn)) / 2)
            assert check_stationarity(n, k, pt) == grad


def test_bound_query_validation():
    with pytest.raises(InputError):
        BoundQuery(6, 2, 1)
    assert BoundQuery(2, 1).max_degree == 1


@given(graphs())
def test_identity_holds_for_any_graph(g):
    lhs, rhs = check_identity_eq6(g)
    isolated = sum(1 for row in g.adj if row == 0)
    # isolated vertices sit in n but carry no edges
    assert lhs == rhs - F(isolated, 2)
