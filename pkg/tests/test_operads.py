import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoids.base import Comparison
from monoids.free import FreeMonoid
from monoids.laws import free_word_sampler, qm_sampler
from monoids.quantum import QMElement, QMVariant, QuantumMonoid, X, Y
from operads.laws import check_injectivity, check_morphism_laws, check_ordered_operad, random_surjection
from operads.word_operad import (
    GeneratorAssignment,
    LengthMismatch,
    MissingGenerator,
    WordSequence,
    compare_sequences,
    composition_fibers,
    compose_permutations,
    evaluate_tree,
    fibers,
    is_shuffle_surjection,
    partial_word_compose,
    path_sequence,
    permutation_of,
    word_compose,
)
from presentations.presentation import LAM, MU
from trees.shuffle_tree import LeafAssignment, compose
from trees.syntax import parse_tree

QM = QuantumMonoid()
POISSON = GeneratorAssignment(QM, {"mu": (X, X), "lam": (Y, Y)})
GENS = {"mu": MU, "lam": LAM}


def seq(*entries):
    return WordSequence(tuple(entries), QM)


class TestPathSequences:
    def test_example_tree(self):
        tree = parse_tree("a(b(1, 3), 2)")
        assert path_sequence(tree).format() == "(ab, a, ab)"
        assert permutation_of(tree) == (1, 3, 2)

    def test_leaf(self):
        assert permutation_of(parse_tree("1")) == (1,)


class TestEvaluation:
    def test_leibniz_leading_term(self):
        image = evaluate_tree(parse_tree("lam(1, mu(2, 3))", GENS), POISSON)
        assert image.format() == "(y, xyq, xyq)"

    def test_leibniz_other_term(self):
        image = evaluate_tree(parse_tree("mu(lam(1, 2), 3)", GENS), POISSON)
        assert image.format() == "(xy, xy, x)"

    def test_associativity_terms(self):
        assert evaluate_tree(parse_tree("mu(1, mu(2, 3))", GENS), POISSON).format() == "(x, x^2, x^2)"
        assert evaluate_tree(parse_tree("mu(mu(1, 2), 3)", GENS), POISSON).format() == "(x^2, x^2, x)"

    def test_missing_generator(self):
        assignment = GeneratorAssignment(QM, {"mu": (X, X)})
        with pytest.raises(MissingGenerator):
            evaluate_tree(parse_tree("lam(1, 2)", GENS), assignment)

    def test_image_length(self):
        assignment = GeneratorAssignment(QM, {"mu": (X,)})
        with pytest.raises(LengthMismatch):
            assignment.validate([MU])


class TestComposition:
    def test_word_compose(self):
        # f sends leaves 1, 3 to slot 1 and leaf 2 to slot 2
        result = word_compose((1, 2, 1), seq(X, Y), [seq(Y, X), seq(X)])
        assert result.entries == (QMElement(1, 1, 0), QMElement(1, 1, 1), QMElement(2, 0, 0))

    def test_fiber_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            word_compose((1, 2, 1), seq(X, Y), [seq(Y), seq(X)])

    def test_shuffle_surjections(self):
        assert is_shuffle_surjection((1, 1, 2))
        assert is_shuffle_surjection((1, 2, 1))
        assert not is_shuffle_surjection((2, 1))
        assert not is_shuffle_surjection((1, 3, 3))

    @settings(max_examples=50, deadline=None)
    @given(seed=st.integers(0, 10_000), total=st.integers(1, 6))
    def test_random_surjection_is_shuffle(self, seed, total):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(1, total + 1))
        f = random_surjection(total, n, rng)
        assert len(f) == total
        assert is_shuffle_surjection(f)
        assert max(f) == n

    def test_partial_composition_matches_trees(self):
        outer = parse_tree("lam(1, 2)", GENS)
        inner = parse_tree("mu(1, 2)", GENS)
        assignment = LeafAssignment(inner=(1, 3))
        tree = compose(outer, 1, inner, assignment)
        assert tree.text == "lam(mu(1, 3), 2)"
        assert composition_fibers(2, 1, 2, assignment) == (1, 2, 1)
        composed = partial_word_compose(
            evaluate_tree(outer, POISSON), 1, evaluate_tree(inner, POISSON), assignment
        )
        assert composed == evaluate_tree(tree, POISSON)
        assert compose_permutations((1, 2), 1, (1, 2), assignment) == permutation_of(tree)

    @settings(max_examples=100, deadline=None)
    @given(seed=st.integers(0, 10_000), shuffle_only=st.booleans())
    def test_associativity(self, seed, shuffle_only):
        rng = np.random.default_rng(seed)
        sample = qm_sampler(3)

        def draw(length):
            return WordSequence(tuple(sample(rng) for _ in range(length)), QM)

        n = int(rng.integers(1, 4))
        m = int(rng.integers(n, 6))
        p = int(rng.integers(m, 8))
        f = random_surjection(m, n, rng, shuffle_only)
        g = random_surjection(p, m, rng, shuffle_only)
        a = draw(n)
        bs = [draw(len(block)) for block in fibers(f, n)]
        cs = [draw(len(block)) for block in fibers(g, m)]
        left = word_compose(g, word_compose(f, a, bs), cs)

        inner = []
        for j, block in enumerate(fibers(f, n), start=1):
            leaves = [leaf for leaf, target in enumerate(g, start=1) if f[target - 1] == j]
            restricted = [block.index(g[leaf - 1]) + 1 for leaf in leaves]
            inner.append(word_compose(restricted, bs[j - 1], [cs[i - 1] for i in block]))
        right = word_compose([f[target - 1] for target in g], a, inner)
        assert left == right


class TestComparison:
    def test_first_difference_decides(self):
        assert compare_sequences(seq(X, Y), seq(X, X)) is Comparison.GREATER
        assert compare_sequences(seq(X, Y), seq(X, Y)) is Comparison.EQUAL

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            compare_sequences(seq(X), seq(X, X))


class TestLaws:
    def test_ordered_over_qm(self):
        report = check_ordered_operad(QM, qm_sampler(4), trials=300, seed=7, max_arity=4)
        assert report.passed, report.counterexamples
        assert report.checked > 0

    def test_ordered_over_free_monoid(self):
        free = FreeMonoid(("a", "b"))
        report = check_ordered_operad(free, free_word_sampler(free, 4), trials=300, seed=7, max_arity=4)
        assert report.passed, report.counterexamples

    def test_non_shuffle_composition_breaks_the_order(self):
        free = FreeMonoid(("a", "b"))
        one = WordSequence(((),), free)
        lower = WordSequence((("a",), ("b",)), free)
        upper = WordSequence((("b",), ("a",)), free)
        assert compare_sequences(lower, upper) is Comparison.LESS
        low = word_compose((2, 1), lower, [one, one])
        high = word_compose((2, 1), upper, [one, one])
        assert compare_sequences(low, high) is Comparison.GREATER

    def test_arbitrary_compositions_are_reported(self):
        free = FreeMonoid(("a", "b"))
        report = check_ordered_operad(
            free, free_word_sampler(free, 3), trials=1000, seed=7, max_arity=4, shuffle_only=False
        )
        assert not report.passed
        assert report.counterexamples

    def test_q_first_variant_is_caught(self):
        broken = QuantumMonoid(QMVariant.Q_FIRST)
        report = check_ordered_operad(broken, qm_sampler(4), trials=2000, seed=7, max_arity=3)
        assert report.failures > 0
        assert report.counterexamples

    def test_arbitrary_compositions_over_qm_are_reported(self):
        report = check_ordered_operad(QM, qm_sampler(4), trials=2000, seed=7, max_arity=4, shuffle_only=False)
        assert report.failures > 0
        assert report.counterexamples

    def test_morphisms(self):
        reports = check_morphism_laws([MU, LAM], POISSON, trials=200, seed=7, max_arity=4)
        assert len(reports) == 3
        assert all(r.passed for r in reports), [r.counterexamples for r in reports]

    def test_injectivity(self):
        report = check_injectivity([MU, LAM], max_arity=4)
        assert report.passed
        assert report.checked == 1 + 2 + 12 + 120
