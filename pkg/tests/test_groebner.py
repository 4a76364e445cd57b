import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groebner.buchberger import NotAnOverlap, buchberger, s_polynomial
from groebner.dimensions import (
    count_normal_forms,
    dimension_table,
    ideal_dimension_oracle,
    is_product_of_lie_monomials,
    normal_forms,
    rational_rank,
)
from groebner.polynomial import TreePolynomial, ZeroPolynomial, leading_monomial, multidegree
from groebner.reduction import autoreduce, random_ideal_element, reduce
from orders.monomial_order import build_pathlex_order, build_poisson_order
from presentations.presentation import LAM, MU
from trees.divisors import Overlap, divides, enumerate_overlaps, first_occurrence
from trees.enumeration import enumerate_trees
from trees.syntax import parse_tree

GENS = {"mu": MU, "lam": LAM}
LEIBNIZ_LEADING = ["lam(1, mu(2, 3))", "lam(mu(1, 3), 2)", "lam(mu(1, 2), 3)"]


def poly(text):
    return TreePolynomial.parse(text, GENS)


def trees(*texts):
    return [parse_tree(t, GENS) for t in texts]


class TestPolynomials:
    def test_like_terms_merge(self):
        p = poly("mu(1, 2) + 1/2 mu(1, 2) - lam(1, 2)")
        assert p.coefficient(parse_tree("mu(1, 2)", GENS)) == Fraction(3, 2)
        assert len(p) == 2

    def test_cancellation_gives_zero(self):
        p = poly("mu(1, 2) - mu(1, 2)")
        assert p.is_zero
        assert not p

    def test_zero_has_no_leading_term(self, poisson_order):
        with pytest.raises(ZeroPolynomial):
            TreePolynomial(arity=3).leading_term(poisson_order)

    def test_mixed_arities(self):
        with pytest.raises(ValueError):
            poly("mu(1, 2) + mu(1, mu(2, 3))")

    def test_format_is_reparsable(self, pois, poisson_order):
        for relation in pois.shuffle_relations:
            text = relation.format(poisson_order)
            assert poly(text) == relation

    def test_format_puts_leading_term_first(self, poisson_order):
        p = poly("mu(lam(1, 2), 3) + 2 lam(1, mu(2, 3))")
        assert p.format(poisson_order) == "2 lam(1, mu(2, 3)) + mu(lam(1, 2), 3)"
        assert p.monic(poisson_order).format(poisson_order) == "lam(1, mu(2, 3)) + 1/2 mu(lam(1, 2), 3)"

    def test_leibniz_leading_terms(self, pois, poisson_order):
        found = [leading_monomial(r, poisson_order).text for r in pois.shuffle_relations[:3]]
        assert found == LEIBNIZ_LEADING

    def test_jacobi_leading_term(self, pois, poisson_order):
        assert pois.shuffle_relations[3].leading_term(poisson_order).text == "lam(lam(1, 2), 3)"

    def test_homogeneity(self, pois):
        assert all(r.is_homogeneous() for r in pois.shuffle_relations)
        assert not poly("mu(1, mu(2, 3)) - lam(1, mu(2, 3)) + lam(1, lam(2, 3))").is_homogeneous()
        assert multidegree(parse_tree("lam(1, mu(2, 3))", GENS)) == (("lam", 1), ("mu", 1))


class TestReduction:
    def test_leibniz_rewrites_bracket_of_product(self, pois, poisson_order):
        result = reduce(poly("lam(1, mu(2, 3))"), pois.shuffle_relations, poisson_order)
        assert result == poly("mu(lam(1, 2), 3) + mu(lam(1, 3), 2)")

    def test_associativity(self, com, poisson_order):
        result = reduce(poly("mu(1, mu(2, 3))"), com.shuffle_relations, poisson_order)
        assert result == poly("mu(mu(1, 2), 3)")

    def test_normal_monomial_is_unchanged(self, pois_basis, poisson_order):
        p = poly("mu(lam(1, 2), 3)")
        assert reduce(p, pois_basis, poisson_order) == p

    def test_basis_elements_reduce_to_zero(self, pois_basis, poisson_order):
        for g in pois_basis:
            assert reduce(g, pois_basis, poisson_order).is_zero

    def test_remainder_is_normal(self, pois_basis, poisson_order):
        leading = [g.leading_term(poisson_order) for g in pois_basis]
        for tree in enumerate_trees([MU, LAM], 3):
            remainder = reduce(TreePolynomial.monomial(tree), pois_basis, poisson_order)
            for term in remainder.trees():
                assert not any(divides(term, lt) for lt in leading)

    def test_autoreduce_is_monic_and_sorted(self, pois_basis, poisson_order):
        assert len(pois_basis) == 6
        keys = [poisson_order.key(g.leading_term(poisson_order)) for g in pois_basis]
        assert keys == sorted(keys)
        assert all(g.leading_coefficient(poisson_order) == 1 for g in pois_basis)

    @settings(max_examples=25, deadline=None)
    @given(seed=st.integers(0, 10_000), arity=st.integers(3, 4))
    def test_ideal_elements_reduce_to_zero(self, pois, pois_basis, poisson_order, seed, arity):
        rng = np.random.default_rng(seed)
        element = random_ideal_element(pois.shuffle_relations, pois.generators, arity, rng)
        assert reduce(element, pois_basis, poisson_order).is_zero

    @settings(max_examples=25, deadline=None)
    @given(seed=st.integers(0, 10_000))
    def test_reduction_is_idempotent(self, pois_basis, poisson_order, seed):
        rng = np.random.default_rng(seed)
        candidates = enumerate_trees([MU, LAM], 4)
        picks = rng.choice(len(candidates), size=3, replace=False)
        p = TreePolynomial([(int(rng.integers(1, 5)), candidates[int(i)]) for i in picks])
        once = reduce(p, pois_basis, poisson_order)
        assert reduce(once, pois_basis, poisson_order) == once


class TestSPolynomials:
    def test_overlap_tree_cancels(self, com, poisson_order):
        g = autoreduce(com.shuffle_relations, poisson_order)[-1]
        lt = g.leading_term(poisson_order)
        for overlap in enumerate_overlaps(lt, lt, 4):
            s = s_polynomial(g, g, overlap, poisson_order)
            assert s.coefficient(overlap.tree) == 0

    def test_same_occurrence_gives_zero(self, com, poisson_order):
        g = com.shuffle_relations[0]
        lt = g.leading_term(poisson_order)
        occurrence = first_occurrence(lt, lt)
        s = s_polynomial(g, g, Overlap(lt, occurrence, occurrence), poisson_order)
        assert s.is_zero

    def test_wrong_patterns(self, pois, com, poisson_order):
        g = com.shuffle_relations[0]
        lt = g.leading_term(poisson_order)
        overlap = enumerate_overlaps(lt, lt, 4)[0]
        with pytest.raises(NotAnOverlap):
            s_polynomial(pois.shuffle_relations[0], g, overlap, poisson_order)

    def test_leibniz_has_no_self_overlaps(self, pois, poisson_order):
        lt = pois.shuffle_relations[0].leading_term(poisson_order)
        assert enumerate_overlaps(lt, lt, 4) == []


class TestBuchberger:
    def test_poisson_is_quadratic_groebner_basis(self, pois, poisson_order):
        report = buchberger(pois.shuffle_relations, poisson_order, max_arity=4)
        assert report.is_groebner
        assert report.survivors == []
        assert not report.bound_exceeded
        assert len(report.basis) == 6
        assert report.processed_overlaps > 0
        assert [row.normal_forms for row in report.dimensions] == [1, 2, 6, 24]

    def test_basis_is_the_self_reduced_input(self, pois, pois_basis, poisson_order):
        report = buchberger(pois.shuffle_relations, poisson_order, max_arity=4)
        assert [record.text for record in report.basis] == [g.format(poisson_order) for g in pois_basis]

    def test_leading_terms(self, pois, poisson_order):
        report = buchberger(pois.shuffle_relations, poisson_order, max_arity=4)
        assert set(LEIBNIZ_LEADING) <= set(report.leading_terms)
        assert "lam(lam(1, 2), 3)" in report.leading_terms
        assert "mu(1, mu(2, 3))" in report.leading_terms

    @pytest.mark.parametrize("name", ["com", "lie"])
    def test_sub_presentations_under_two_orders(self, name, request):
        presentation = request.getfixturevalue(name)
        for order in (build_poisson_order(presentation.generators), build_pathlex_order(presentation.generators)):
            assert buchberger(presentation.shuffle_relations, order, max_arity=4).is_groebner

    def test_bound_exceeded_is_reported(self, pois, poisson_order):
        report = buchberger(pois.shuffle_relations, poisson_order, max_arity=3)
        assert report.bound_exceeded
        assert report.processed_overlaps == 0

    def test_max_arity_below_relations(self, pois, poisson_order):
        with pytest.raises(ValueError):
            buchberger(pois.shuffle_relations, poisson_order, max_arity=2)

    def test_empty_relations(self, poisson_order):
        report = buchberger([], poisson_order, max_arity=4, generators=[MU, LAM])
        assert report.is_groebner
        assert report.basis == []
        assert [row.normal_forms for row in report.dimensions] == [1, 2, 12, 120]

    def test_json_report(self, pois, poisson_order):
        first = buchberger(pois.shuffle_relations, poisson_order, max_arity=4).to_json()
        second = buchberger(pois.shuffle_relations, poisson_order, max_arity=4).to_json()
        assert first == second
        data = json.loads(first)
        assert data["schema"] == 1
        assert data["is_groebner"] is True
        assert data["order"] == "poisson-qm"
        assert len(data["basis"]) == 6

    def test_basis_round_trips(self, pois, poisson_order):
        report = buchberger(pois.shuffle_relations, poisson_order, max_arity=4)
        for record in report.basis:
            assert poly(record.text).format(poisson_order) == record.text
            for term in record.terms:
                assert parse_tree(term.tree, GENS).text == term.tree


class TestNormalForms:
    def test_poisson_arity_three(self, pois_basis, poisson_order):
        leading = [g.leading_term(poisson_order) for g in pois_basis]
        assert count_normal_forms(leading, [MU, LAM], 3) == 6

    def test_no_leading_terms(self):
        assert count_normal_forms([], [MU], 3) == 3

    def test_jacobi_alone_at_arity_four(self):
        assert count_normal_forms(trees("lam(lam(1, 2), 3)"), [LAM], 4) == 6

    def test_arity_one(self):
        assert count_normal_forms(trees("mu(1, 2)"), [MU], 1) == 1

    def test_matches_brute_force(self, pois_basis, poisson_order):
        leading = [g.leading_term(poisson_order) for g in pois_basis]
        expected = [t for t in enumerate_trees([MU, LAM], 4) if not any(divides(t, lt) for lt in leading)]
        assert set(normal_forms(leading, [MU, LAM], 4)) == set(expected)

    def test_normal_forms_are_products_of_lie_monomials(self, pois_basis, poisson_order):
        leading = [g.leading_term(poisson_order) for g in pois_basis]
        assert all(is_product_of_lie_monomials(t) for t in normal_forms(leading, [MU, LAM], 4))
        assert not is_product_of_lie_monomials(parse_tree("lam(1, mu(2, 3))", GENS))


class TestOracle:
    def test_rank(self):
        rows = [{0: Fraction(1), 1: Fraction(-1)}, {1: Fraction(1), 2: Fraction(-1)}, {0: Fraction(1), 2: Fraction(-1)}]
        assert rational_rank(rows, 3) == 2
        assert rational_rank([], 3) == 0

    def test_poisson_arity_three(self, pois):
        assert ideal_dimension_oracle(pois.shuffle_relations, pois.generators, 3) == 6

    def test_com_arity_four(self, com):
        assert ideal_dimension_oracle(com.shuffle_relations, com.generators, 4) == 1

    def test_no_relations(self):
        assert ideal_dimension_oracle([], [MU, LAM], 2) == 2

    def test_arity_one(self, pois):
        assert ideal_dimension_oracle(pois.shuffle_relations, pois.generators, 1) == 1

    def test_table(self, pois, pois_basis, poisson_order):
        leading = [g.leading_term(poisson_order) for g in pois_basis]
        table = dimension_table(leading, pois.shuffle_relations, pois.generators, 4, poisson_order)
        assert list(table.columns) == ["arity", "normal_forms", "oracle", "match"]
        assert table["match"].all()
        assert table["oracle"].tolist() == [1, 2, 6, 24]

    @pytest.mark.slow
    @pytest.mark.parametrize(
        "name,expected",
        [
            ("pois", math.factorial),
            ("lie", lambda n: math.factorial(n - 1)),
            ("com", lambda n: 1),
        ],
    )
    def test_dimensions_up_to_arity_six(self, name, expected, request):
        presentation = request.getfixturevalue(name)
        order = build_poisson_order(presentation.generators)
        leading = [g.leading_term(order) for g in autoreduce(presentation.shuffle_relations, order)]
        for n in range(1, 7):
            counted = count_normal_forms(leading, presentation.generators, n)
            assert counted == expected(n)
            assert ideal_dimension_oracle(presentation.shuffle_relations, presentation.generators, n, order) == counted
