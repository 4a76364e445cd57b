"""
Law Harnesses for Word Operads

* ``check_ordered_operad``: composition in W_M is increasing in each argument
  for the lexicographic order of sequences, provided M is an ordered monoid
  and the composition is a shuffle one. With ``shuffle_only=False`` arbitrary
  surjections are sampled and the harness is expected to fail.
* ``check_morphism_laws``: path sequences, permutations and a generator
  assignment all commute with partial composition of trees.
* ``check_injectivity``: a tree is determined by its path sequence together
  with its permutation.
"""

import logging
from typing import Callable, Sequence

import numpy as np

from monoids.base import Comparison, Monoid
from monoids.laws import LawReport
from operads.word_operad import (
    GeneratorAssignment,
    WordSequence,
    compare_sequences,
    compose_permutations,
    evaluate_tree,
    fibers,
    partial_word_compose,
    path_monoid,
    path_sequence,
    permutation_of,
    word_compose,
)
from trees.enumeration import enumerate_trees, random_tree
from trees.shuffle_tree import Generator, compose, shuffle_assignments

logger = logging.getLogger(__name__)


def random_surjection(total: int, n: int, rng: np.random.Generator, shuffle_only: bool = True) -> tuple[int, ...]:
    """
    A surjection {1..total} -> {1..n}.

    With ``shuffle_only`` the slots are renumbered by first occurrence, so the
    fiber minima increase with the slot.
    """
    order = [int(v) for v in rng.permutation(total)]
    f = [0] * total
    for slot, leaf in enumerate(order[:n], start=1):
        f[leaf] = slot
    for leaf in order[n:]:
        f[leaf] = int(rng.integers(1, n + 1))
    if shuffle_only:
        rank: dict[int, int] = {}
        for value in f:
            rank.setdefault(value, len(rank) + 1)
        f = [rank[value] for value in f]
    return tuple(f)


def _random_sequence(monoid: Monoid, sampler: Callable, length: int, rng: np.random.Generator) -> WordSequence:
    return WordSequence(tuple(sampler(rng) for _ in range(length)), monoid)


def check_ordered_operad(
    monoid: Monoid,
    sampler: Callable[[np.random.Generator], object],
    trials: int,
    seed: int = 7,
    max_arity: int = 5,
    shuffle_only: bool = True,
) -> LawReport:
    """
    Check that compositions in the word operad are increasing in each argument.

    Each trial draws a surjection f onto n slots, an outer sequence and one
    inner sequence per fiber, then replaces one of these arguments by a
    random alternative. When the two arguments compare, the two composites
    must compare the same way.

    Args:
        monoid: Ordered monoid
        sampler: Draws one monoid element from a numpy generator
        trials: Number of composition contexts
        seed: Seed of the numpy generator
        max_arity: Largest arity of the composite
        shuffle_only: Restrict f to shuffle surjections

    Returns:
        LawReport; ``checked`` counts trials whose two arguments compared
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = np.random.default_rng(seed)
    kind = "shuffle" if shuffle_only else "arbitrary"
    report = LawReport(name=f"ordered word operad over {monoid.name} ({kind} compositions)", trials=trials)

    for _ in range(trials):
        total = int(rng.integers(1, max_arity + 1))
        n = int(rng.integers(1, total + 1))
        f = random_surjection(total, n, rng, shuffle_only)
        a = _random_sequence(monoid, sampler, n, rng)
        bs = [_random_sequence(monoid, sampler, len(block), rng) for block in fibers(f, n)]

        position = int(rng.integers(0, n + 1))
        original = a if position == 0 else bs[position - 1]
        alternative = _random_sequence(monoid, sampler, len(original), rng)
        verdict = compare_sequences(original, alternative)
        if verdict not in (Comparison.LESS, Comparison.GREATER):
            continue
        report.checked += 1
        lower, upper = (original, alternative) if verdict is Comparison.LESS else (alternative, original)

        def composite(argument: WordSequence) -> WordSequence:
            if position == 0:
                return word_compose(f, argument, bs)
            replaced = list(bs)
            replaced[position - 1] = argument
            return word_compose(f, a, replaced)

        low, high = composite(lower), composite(upper)
        if compare_sequences(low, high) is not Comparison.LESS:
            where = "outer argument" if position == 0 else f"inner argument {position}"
            report.record(
                f"f={f}, {where}: {lower} < {upper} but composites {low} and {high} are not in order"
            )

    logger.info(report.summary())
    return report


def check_morphism_laws(
    generators: Sequence[Generator],
    assignment: GeneratorAssignment,
    trials: int,
    seed: int = 7,
    max_arity: int = 5,
) -> list[LawReport]:
    """
    Compose random trees and compare with composing their images.

    Returns:
        Reports for the path sequence, the permutation and ``assignment``
    """
    rng = np.random.default_rng(seed)
    paths = path_monoid(generators)
    theta = LawReport(name="path sequences respect composition", trials=trials)
    sigma = LawReport(name="permutations respect composition", trials=trials)
    psi = LawReport(
        name=f"evaluation in {assignment.monoid.name} ({assignment.describe()}) respects composition",
        trials=trials,
    )

    for _ in range(trials):
        total = int(rng.integers(1, max_arity + 1))
        outer_arity = int(rng.integers(1, total + 1))
        inner_arity = total - outer_arity + 1
        outer = random_tree(generators, outer_arity, rng)
        inner = random_tree(generators, inner_arity, rng)
        slot = int(rng.integers(1, outer_arity + 1))
        options = list(shuffle_assignments(outer_arity, slot, inner_arity))
        relabeling = options[int(rng.integers(len(options)))]
        tree = compose(outer, slot, inner, relabeling)
        context = f"{outer.text} o_{slot} {inner.text} with {relabeling.inner} = {tree.text}"

        for report, image, composed in (
            (
                theta,
                path_sequence(tree, paths),
                partial_word_compose(path_sequence(outer, paths), slot, path_sequence(inner, paths), relabeling),
            ),
            (
                psi,
                evaluate_tree(tree, assignment),
                partial_word_compose(
                    evaluate_tree(outer, assignment), slot, evaluate_tree(inner, assignment), relabeling
                ),
            ),
        ):
            report.checked += 1
            if image != composed:
                report.record(f"{context}: image {image}, composed images {composed}")

        sigma.checked += 1
        expected = compose_permutations(permutation_of(outer), slot, permutation_of(inner), relabeling)
        if permutation_of(tree) != expected:
            sigma.record(f"{context}: reading {permutation_of(tree)}, composed {expected}")

    for report in (theta, sigma, psi):
        logger.info(report.summary())
    return [theta, sigma, psi]


def check_injectivity(generators: Sequence[Generator], max_arity: int = 5) -> LawReport:
    """Every tree of arity <= ``max_arity`` has a distinct (path sequence, permutation) pair."""
    paths = path_monoid(generators)
    report = LawReport(name=f"(path sequence, permutation) injective up to arity {max_arity}", trials=0)
    for arity in range(1, max_arity + 1):
        seen: dict[tuple, str] = {}
        for tree in enumerate_trees(generators, arity):
            report.trials += 1
            report.checked += 1
            key = (path_sequence(tree, paths).entries, permutation_of(tree))
            if key in seen:
                report.record(f"{seen[key]} and {tree.text} share their image")
            else:
                seen[key] = tree.text
    logger.info(report.summary())
    return report
