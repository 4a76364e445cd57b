from itertools import product

import pytest

from monoids.base import Comparison
from monoids.quantum import QMVariant
from orders.admissibility import check_admissible, check_total
from orders.monomial_order import ArityMismatch, MonomialOrder, WrongSignature, build_poisson_order
from orders.order_spec import OrderSpecError, order_by_name, parse_order_spec
from presentations.presentation import LAM, MU, M
from trees.enumeration import enumerate_trees
from trees.syntax import parse_tree

POISSON_SPEC = "word(qm; mu=(x,x), lam=(y,y)) > pathlex(mu<lam) > perm"


def tree(text, generators):
    return parse_tree(text, generators)


class TestPoissonOrder:
    def test_leibniz_leading_term(self, poisson_order, generators):
        t1 = tree("lam(1, mu(2, 3))", generators)
        t2 = tree("mu(lam(1, 2), 3)", generators)
        assert poisson_order.compare(t1, t2) is Comparison.GREATER
        assert poisson_order.compare(t2, t1) is Comparison.LESS

    def test_trace_stops_at_the_word_stage(self, poisson_order, generators):
        trace = poisson_order.trace(tree("lam(1, mu(2, 3))", generators), tree("mu(lam(1, 2), 3)", generators))
        assert len(trace) == 1
        assert trace[0].left == "(y, xyq, xyq)"
        assert trace[0].right == "(xy, xy, x)"
        assert trace[0].verdict is Comparison.GREATER

    def test_associativity(self, poisson_order, generators):
        t1 = tree("mu(1, mu(2, 3))", generators)
        t2 = tree("mu(mu(1, 2), 3)", generators)
        assert poisson_order.compare(t1, t2) is Comparison.GREATER
        trace = poisson_order.trace(t1, t2)
        assert (trace[0].left, trace[0].right) == ("(x, x^2, x^2)", "(x^2, x^2, x)")

    def test_ties_fall_through_to_permutations(self, poisson_order, generators):
        t1 = tree("mu(mu(1, 3), mu(2, 4))", generators)
        t2 = tree("mu(mu(1, 2), mu(3, 4))", generators)
        trace = poisson_order.trace(t1, t2)
        assert [step.verdict for step in trace] == [Comparison.EQUAL, Comparison.EQUAL, Comparison.GREATER]
        assert poisson_order.compare(t1, t2) is Comparison.GREATER

    def test_equal(self, poisson_order, generators):
        t = tree("lam(mu(1, 3), 2)", generators)
        assert poisson_order.compare(t, t) is Comparison.EQUAL

    def test_arity_mismatch(self, poisson_order, generators):
        with pytest.raises(ArityMismatch):
            poisson_order.compare(tree("mu(1, 2)", generators), tree("mu(1, mu(2, 3))", generators))

    def test_wrong_signature(self):
        with pytest.raises(WrongSignature):
            build_poisson_order([MU, M])

    def test_total(self, poisson_order):
        report = check_total(poisson_order, [MU, LAM], max_arity=4)
        assert report.passed, report.counterexamples

    def test_admissible(self, poisson_order):
        report = check_admissible(poisson_order, [MU, LAM], trials=300, seed=7, max_arity=4)
        assert report.passed, report.counterexamples
        assert report.checked > 0

    def test_reversed_m_variant_admissible(self):
        order = build_poisson_order([MU, LAM], QMVariant.REVERSED_M)
        assert order.name == "poisson-qm-reversed-m"
        assert check_admissible(order, [MU, LAM], trials=200, seed=3, max_arity=4).passed


class TestExhaustive:
    @pytest.mark.parametrize("arity", [3, 4])
    def test_strict_total_order(self, poisson_order, arity):
        trees = enumerate_trees([MU, LAM], arity)
        ordered = poisson_order.sort(trees, descending=False)
        for i, smaller in enumerate(ordered):
            assert poisson_order.compare(smaller, smaller) is Comparison.EQUAL
            for larger in ordered[i + 1 :]:
                assert poisson_order.compare(smaller, larger) is Comparison.LESS
                assert poisson_order.compare(larger, smaller) is Comparison.GREATER

    @pytest.mark.parametrize("arity", [3, 4])
    def test_keys_agree_with_stagewise_comparison(self, poisson_order, arity):
        trees = enumerate_trees([MU, LAM], arity)
        images = [[stage.image(t) for t in trees] for stage in poisson_order.stages]
        for i, j in product(range(len(trees)), repeat=2):
            verdict = Comparison.EQUAL
            for stage, image in zip(poisson_order.stages, images):
                verdict = stage.compare_images(image[i], image[j])
                if verdict is not Comparison.EQUAL:
                    break
            assert poisson_order.compare(trees[i], trees[j]) is verdict

    @pytest.mark.parametrize("arity", [3, 4])
    def test_each_stage_refines_the_previous(self, poisson_order, arity):
        trees = enumerate_trees([MU, LAM], arity)
        prefixes = [MonomialOrder(f"prefix{k}", poisson_order.stages[:k]) for k in range(1, 4)]
        ties = []
        for coarse, fine in zip(prefixes, prefixes[1:]):
            for a, b in product(trees, repeat=2):
                verdict = coarse.compare(a, b)
                if verdict is not Comparison.EQUAL:
                    assert fine.compare(a, b) is verdict
        for prefix in prefixes:
            ties.append(sum(prefix.compare(a, b) is Comparison.EQUAL for a, b in product(trees, repeat=2)))
        assert ties == sorted(ties, reverse=True)
        assert ties[-1] == len(trees)

    def test_key_cache_is_bounded(self, poisson_order):
        small = MonomialOrder("small", poisson_order.stages, key_cache_size=8)
        trees = enumerate_trees([MU, LAM], 4)
        assert small.sort(trees) == poisson_order.sort(trees)
        assert small.cache_info().currsize <= 8
        assert small.cache_info().maxsize == 8


class TestPathLex:
    def test_total_and_admissible(self, pathlex_order):
        assert check_total(pathlex_order, [MU, LAM], max_arity=4).passed
        assert check_admissible(pathlex_order, [MU, LAM], trials=200, seed=7, max_arity=4).passed

    def test_shorter_paths_are_smaller(self, pathlex_order, generators):
        t1 = tree("mu(mu(1, 2), 3)", generators)
        t2 = tree("mu(1, mu(2, 3))", generators)
        assert pathlex_order.compare(t1, t2) is Comparison.GREATER


class TestOrderSpec:
    def test_spec_matches_builtin(self, poisson_order):
        parsed = parse_order_spec(POISSON_SPEC, [MU, LAM])
        trees = enumerate_trees([MU, LAM], 3)
        for t1, t2 in product(trees, trees):
            assert parsed.compare(t1, t2) is poisson_order.compare(t1, t2)

    def test_describe(self, poisson_order):
        assert poisson_order.describe() == "word(qm; mu=(x, x), lam=(y, y)) > pathlex(mu<lam) > perm"

    def test_free_word_stage(self, generators):
        order = parse_order_spec("word(free; mu=(a,a), lam=(b,b)) > perm", [MU, LAM])
        assert order.compare(tree("mu(1, 2)", generators), tree("lam(1, 2)", generators)) is Comparison.LESS

    def test_variant(self):
        order = parse_order_spec("word(qm:reversed-m; mu=(x,x), lam=(y,y)) > perm", [MU, LAM])
        assert "qm:reversed-m" in order.describe()

    @pytest.mark.parametrize(
        "text",
        [
            "word(qm; mu=(x,x))",
            "word(qm; mu=(x), lam=(y,y))",
            "word(qm; mu=(x,z), lam=(y,y))",
            "word(",
            "pathlex(mu)",
        ],
    )
    def test_errors(self, text):
        with pytest.raises(OrderSpecError):
            parse_order_spec(text, [MU, LAM])

    def test_named_orders(self):
        assert order_by_name("poisson-qm", [MU, LAM]).name == "poisson-qm"
        assert order_by_name("pathlex", [MU, LAM]).name == "pathlex"
        assert order_by_name("perm", [MU, LAM]).describe() == "perm"
        with pytest.raises(OrderSpecError):
            order_by_name("deglex", [MU, LAM])
