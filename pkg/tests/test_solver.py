import itertools

import pytest
import sympy as sp
from hypothesis import given, settings

from quartic_thue import (
    GaussRat,
    I,
    InvalidParameter,
    Poly,
    QuadExtElem,
    SearchSpaceTooLarge,
    X,
    solver,
)
from quartic_thue.solver import (
    Shape,
    SolutionFamily,
    ThueInstance,
    Verdict,
    brute_search,
    classify_solution,
    express_in_lambda,
    form_decomposition_check,
    form_eval,
    outside_solution_set,
    quadratic_factors,
    solution_set,
)

from .oracles import T as ST
from .oracles import thue_form, to_sympy
from .strategies import nonconstant_polys, polys, small_gaussints

T = X
ONE = Poly([1])
UNITS = [0, 1, -1, I, -I]


def inst(lam=T, xi=1):
    return ThueInstance(lam, xi)


def test_instance_validation():
    with pytest.raises(InvalidParameter):
        ThueInstance(Poly([2]), 1)
    with pytest.raises(InvalidParameter):
        ThueInstance(T, 0)


class TestFormEval:
    def test_examples(self):
        for lam in (T, T**2 + 1, 3 * T**3 - T):
            assert form_eval(inst(lam), ONE, ONE) == 1
            assert form_eval(inst(lam), lam, ONE) == 1
        assert form_eval(inst(), T, T) == T**4

    @settings(max_examples=60)
    @given(nonconstant_polys, polys(3, small_gaussints), polys(3, small_gaussints))
    def test_matches_sympy_expansion(self, lam, x, y):
        ours = to_sympy(form_eval(inst(lam), x, y), ST)
        assert ours == thue_form(to_sympy(lam, ST), to_sympy(x, ST), to_sympy(y, ST))

    @given(nonconstant_polys, polys(3), polys(3))
    def test_symmetries(self, lam, x, y):
        i = inst(lam)
        f = form_eval(i, x, y)
        assert form_eval(i, -x, -y) == f
        assert form_eval(i, -y, x) == f


class TestDecomposition:
    def test_examples(self):
        assert form_decomposition_check(inst(), ONE, Poly())
        first, second = quadratic_factors(inst(), T, ONE)
        ring = inst().ring
        assert first == ring.u_power(-2)
        assert second == ring.conj(ring.u_power(-2))
        assert form_decomposition_check(inst(), T, ONE)

    @settings(max_examples=60)
    @given(polys(3, small_gaussints), polys(3, small_gaussints))
    def test_lambda_t_squared_plus_one(self, x, y):
        assert form_decomposition_check(inst(T**2 + 1), x, y)

    @given(nonconstant_polys, polys(3), polys(3))
    def test_random(self, lam, x, y):
        assert form_decomposition_check(inst(lam), x, y)


class TestSolutionSet:
    def test_xi_one(self):
        sols = solution_set(inst())
        assert len(sols) == 24 and sols.complete_over_field
        assert len(set(sols.pairs())) == 24

    def test_xi_minus_four(self):
        sols = solution_set(inst(xi=-4))
        assert len(sols) == 24
        assert {f.zeta for f in sols} == {GaussRat(1, 1), GaussRat(-1, 1), GaussRat(-1, -1), GaussRat(1, -1)}

    def test_xi_without_fourth_root(self):
        sols = solution_set(inst(xi=3))
        assert len(sols) == 0 and not sols.complete_over_field
        assert "fourth root" in sols.note

    @pytest.mark.parametrize("lam", [T, T**2 + 1, T**3 - 2 * T + GaussRat(1, 1)])
    def test_round_trip_through_classifier(self, lam):
        i = inst(lam)
        for fam in solution_set(i):
            result = classify_solution(i, *fam.pair(lam))
            assert result.verdict is Verdict.SOLUTION and result.family == fam
            cert = result.certificate
            assert cert.m in (-2, 0, 1)
            assert cert.c in (1, -1, I, -I)
            assert i.ring.u_power(cert.m).scale(cert.c) == cert.theta

    def test_coordinates_are_polynomials_in_lambda(self):
        lam = T**3 - 2 * T + GaussRat(1, 1)
        i = inst(lam)
        for fam in solution_set(i):
            for coord, in_lam in zip(fam.pair(lam), fam.shape.as_polys_in_lambda(fam.zeta)):
                assert express_in_lambda(i, coord) == in_lam
                assert in_lam.compose(lam) == coord
        assert express_in_lambda(i, T) is None


class TestClassify:
    def test_examples(self):
        r = classify_solution(inst(), T, ONE)
        assert r.family == SolutionFamily(Shape.E5, GaussRat(1))
        assert (r.certificate.c, r.certificate.m) == (1, -2)
        r = classify_solution(inst(), -ONE, T)
        assert r.family == SolutionFamily(Shape.E6, GaussRat(1))
        assert (r.certificate.c, r.certificate.m) == (-1, -2)
        assert r.certificate.theta == QuadExtElem(1 - T**2, T)
        r = classify_solution(inst(), T, T)
        assert r.verdict is Verdict.NOT_A_SOLUTION and r.residual == T**4 - 1

    def test_theorem_violation_is_reachable_in_principle(self, monkeypatch):
        # hide the fourth roots: a genuine solution now matches no family
        monkeypatch.setattr(solver, "gq_fourth_roots", lambda xi: ())
        assert classify_solution(inst(), T, ONE).verdict is Verdict.THEOREM_VIOLATION


def naive_search(i, max_deg, coeffs):
    """Every pair, straight through form_eval; no evaluation filter."""
    cands = [Poly(s) for s in itertools.product(coeffs, repeat=max_deg + 1)]
    target = Poly([i.xi])
    return [(x, y) for x in cands for y in cands if form_eval(i, x, y) == target]


class TestBruteSearch:
    def test_lambda_t_degree_one(self):
        i = inst()
        found = brute_search(i, 1, UNITS)
        assert len(found) == 24
        assert set(found) == set(solution_set(i).pairs())

    def test_lambda_t_degree_zero(self):
        found = list(brute_search(inst(), 0, UNITS))
        assert len(found) == 16
        shapes = {classify_solution(inst(), x, y).family.shape for x, y in found}
        assert shapes == {Shape.E1, Shape.E2, Shape.E3, Shape.E4}

    def test_lambda_quadratic_degree_one(self):
        found = list(brute_search(inst(T**2 + 1), 1, UNITS))
        assert len(found) == 16 and all(x.degree <= 0 and y.degree <= 0 for x, y in found)

    def test_lambda_quadratic_degree_two_finds_all_families(self):
        i = inst(T**2 + 1)
        found = brute_search(i, 2, UNITS)
        assert set(found) == set(solution_set(i).pairs())

    @pytest.mark.parametrize(
        "lam, xi, coeffs",
        [
            (T, 1, UNITS),
            (T + 1, -4, [0, 1, -1, GaussRat(1, 1), GaussRat(-1, 1), GaussRat(1, -1), GaussRat(-1, -1)]),
            (2 * T, 1, [0, 1, -1, 2]),
            (T * (GaussRat(1) / 2), GaussRat(1) / 16, [0, GaussRat(1) / 2, GaussRat(-1) / 2, GaussRat(0, 1) / 2, 1]),
        ],
    )
    def test_matches_naive_enumeration(self, lam, xi, coeffs):
        i = inst(lam, xi)
        coeffs = solver.canonical_coeff_set(coeffs)
        expected = naive_search(i, 1, coeffs)
        assert list(brute_search(i, 1, coeffs)) == expected
        assert outside_solution_set(i, expected) == []

    def test_enumeration_order_is_lexicographic(self):
        found = list(brute_search(inst(), 1, [1, 0, -I, I, -1]))
        order = {c: k for k, c in enumerate(solver.canonical_coeff_set(UNITS))}

        def key(pair):
            return tuple(order[p[k]] for p in pair for k in range(2))

        assert found == sorted(found, key=key)

    def test_budget(self):
        with pytest.raises(SearchSpaceTooLarge):
            brute_search(inst(), 2, UNITS, budget=10_000)
        r = brute_search(inst(), 0, UNITS, budget=25)
        assert r.candidates == 25
        with pytest.raises(SearchSpaceTooLarge):
            brute_search(inst(), 11, UNITS)

    def test_duplicate_coefficients_collapse(self):
        r = brute_search(inst(), 0, [1, 1, 0, -1, I, -I, GaussRat(2) / 2])
        assert len(r.coeff_set) == 5 and len(r) == 16


def test_sympy_oracle_agrees_on_a_solution():
    lam = ST**2 + 1
    assert thue_form(lam, -1, lam) == 1
    assert sp.expand(thue_form(lam, ST, 1)) != 1
