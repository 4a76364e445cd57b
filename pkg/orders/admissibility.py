"""
Admissibility and totality harnesses for monomial orders.

An order is admissible when every partial composition is increasing in both
arguments: t < t' implies C[t] < C[t'] for a tree C with a marked slot, and
also t o_i s < t' o_i s with t, t' on the outside.
"""

import logging
from itertools import combinations
from typing import Sequence

import numpy as np

from monoids.base import Comparison
from monoids.laws import LawReport
from orders.monomial_order import MonomialOrder
from trees.enumeration import enumerate_trees, random_tree
from trees.shuffle_tree import Generator, compose, shuffle_assignments

logger = logging.getLogger(__name__)


def check_admissible(
    order: MonomialOrder,
    generators: Sequence[Generator],
    trials: int,
    seed: int = 7,
    max_arity: int = 5,
) -> LawReport:
    """
    Sample composition contexts and pairs of trees and check monotonicity.

    Each trial draws a pair of trees of one arity and a partner tree, then
    composes the pair into a random slot of the partner (inner position) or
    the partner into a random slot of the pair (outer position), with a
    random shuffle relabeling.

    Returns:
        LawReport; ``checked`` counts trials whose pair was not tied
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = np.random.default_rng(seed)
    report = LawReport(name=f"admissibility of {order.name}", trials=trials)

    for _ in range(trials):
        total = int(rng.integers(2, max_arity + 1))
        pair_arity = int(rng.integers(1, total + 1))
        partner_arity = total - pair_arity + 1
        t1 = random_tree(generators, pair_arity, rng)
        t2 = random_tree(generators, pair_arity, rng)
        partner = random_tree(generators, partner_arity, rng)
        verdict = order.compare(t1, t2)
        if verdict in (Comparison.EQUAL, Comparison.INCOMPARABLE):
            continue
        report.checked += 1
        lower, upper = (t1, t2) if verdict is Comparison.LESS else (t2, t1)

        inner_position = bool(rng.integers(2))
        outer_arity, inner_arity = (partner_arity, pair_arity) if inner_position else (pair_arity, partner_arity)
        slot = int(rng.integers(1, outer_arity + 1))
        options = list(shuffle_assignments(outer_arity, slot, inner_arity))
        relabeling = options[int(rng.integers(len(options)))]
        if inner_position:
            low = compose(partner, slot, lower, relabeling)
            high = compose(partner, slot, upper, relabeling)
        else:
            low = compose(lower, slot, partner, relabeling)
            high = compose(upper, slot, partner, relabeling)

        if order.compare(low, high) is not Comparison.LESS:
            where = "inside" if inner_position else "around"
            report.record(
                f"{lower.text} < {upper.text} but composing {where} {partner.text} at slot {slot} "
                f"gives {low.text} vs {high.text}"
            )

    logger.info(report.summary())
    return report


def check_total(order: MonomialOrder, generators: Sequence[Generator], max_arity: int = 5) -> LawReport:
    """No two distinct trees of arity <= ``max_arity`` compare equal."""
    report = LawReport(name=f"totality of {order.name} up to arity {max_arity}", trials=0)
    for arity in range(1, max_arity + 1):
        trees = enumerate_trees(generators, arity)
        report.trials += len(trees)
        if order.has_keys:
            seen: dict[tuple, str] = {}
            for tree in trees:
                report.checked += 1
                key = order.key(tree)
                if key in seen:
                    report.record(f"{seen[key]} and {tree.text} compare equal")
                seen.setdefault(key, tree.text)
        else:
            for t1, t2 in combinations(trees, 2):
                report.checked += 1
                if order.compare(t1, t2) is Comparison.EQUAL:
                    report.record(f"{t1.text} and {t2.text} compare equal")
    logger.info(report.summary())
    return report
