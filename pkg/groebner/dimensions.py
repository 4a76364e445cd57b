"""
Dimension Counting

Two independent ways to get the dimension of an arity component of a
quotient operad:

* ``count_normal_forms``: trees divisible by no leading term of a basis.
  Only correct when the basis is Groebner.
* ``ideal_dimension_oracle``: number of trees minus the exact rank of the
  arity component of the ideal, spanned by lifting every relation along
  every context.

When both agree for every arity up to a bound, the basis is confirmed by
linear algebra and not only by S-polynomial reduction.
"""

import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Mapping, Optional, Sequence

import pandas as pd
from pydantic import BaseModel, Field
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from groebner.polynomial import TreePolynomial, multidegree
from groebner.reduction import substitute_polynomial
from orders.monomial_order import MonomialOrder
from trees.divisors import find_occurrences, match_at
from trees.enumeration import enumerate_trees, ordered_partitions
from trees.shuffle_tree import Generator, Leaf, Node, ShuffleTree, relabel

logger = logging.getLogger(__name__)


class DimensionRow(BaseModel):
    arity: int = Field(ge=1)
    normal_forms: int = Field(ge=0, description="Trees divisible by no leading term")


@lru_cache(maxsize=None)
def _standard_normal_forms(
    generators: tuple[Generator, ...], leading: tuple[ShuffleTree, ...], arity: int
) -> tuple[ShuffleTree, ...]:
    if arity == 1:
        return (Leaf(1),)
    found: list[ShuffleTree] = []
    labels = tuple(range(1, arity + 1))
    for generator in generators:
        for blocks in ordered_partitions(labels, generator.arity):
            options = [
                [
                    relabel(tree, {i + 1: label for i, label in enumerate(block)})
                    for tree in _standard_normal_forms(generators, leading, len(block))
                ]
                for block in blocks
            ]
            for children in product(*options):
                tree = Node(generator, children)
                if all(match_at(tree, (), pattern) is None for pattern in leading):
                    found.append(tree)
    return tuple(found)


def normal_forms(
    leading_terms: Sequence[ShuffleTree], generators: Sequence[Generator], arity: int
) -> list[ShuffleTree]:
    """
    Trees of the given arity with no occurrence of any leading term.

    Every subtree of a normal tree is normal (up to standardizing its labels),
    so trees are grown from normal subtrees and only the root needs checking.

    Args:
        leading_terms: Leading terms of a basis
        generators: Generators of arity >= 2
        arity: Number of leaves (>= 1)
    """
    if arity < 1:
        raise ValueError(f"Arity must be >= 1, got {arity}")
    leading = tuple(sorted({t for t in leading_terms if not t.is_leaf}))
    return list(_standard_normal_forms(tuple(generators), leading, arity))


def count_normal_forms(
    leading_terms: Sequence[ShuffleTree], generators: Sequence[Generator], arity: int
) -> int:
    return len(normal_forms(leading_terms, generators, arity))


def rational_rank(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> int:
    """Exact rank over QQ of a sparse matrix given as column -> value rows."""
    entries = [
        {j: QQ(value.numerator, value.denominator) for j, value in row.items() if value != 0} for row in rows
    ]
    entries = [row for row in entries if row]
    if not entries or ncols == 0:
        return 0
    matrix = DomainMatrix(dict(enumerate(entries)), (len(entries), ncols), QQ)
    return int(matrix.rank())


def _ideal_rows(
    relations: Sequence[TreePolynomial], trees: Sequence[ShuffleTree]
) -> list[TreePolynomial]:
    rows = []
    for relation in relations:
        # any fixed term marks every place the relation can be plugged in
        pattern = sorted(relation.terms)[0]
        for host in trees:
            for occurrence in find_occurrences(host, pattern):
                rows.append(substitute_polynomial(occurrence, relation))
    return rows


def ideal_dimension_oracle(
    relations: Sequence[TreePolynomial],
    generators: Sequence[Generator],
    arity: int,
    order: Optional[MonomialOrder] = None,
) -> int:
    """
    Dimension of the arity component of the quotient by the ideal of ``relations``.

    Args:
        relations: Shuffle relations
        generators: Generators of the free operad
        arity: Component to measure; arity 1 is the unit and counts 1
        order: Sorts the matrix columns when given; the rank does not depend on it

    Returns:
        (#trees of this arity) - rank of the ideal component
    """
    if arity == 1:
        return 1
    trees = enumerate_trees(generators, arity)
    relations = [r for r in relations if r and r.arity <= arity]
    rows = _ideal_rows(relations, trees)

    homogeneous = all(r.is_homogeneous() for r in relations)
    blocks: dict[tuple, list[ShuffleTree]] = defaultdict(list)
    for tree in trees:
        blocks[multidegree(tree) if homogeneous else ()].append(tree)
    block_rows: dict[tuple, list[TreePolynomial]] = defaultdict(list)
    for row in rows:
        block_rows[multidegree(next(iter(row.terms))) if homogeneous else ()].append(row)

    rank = 0
    for degree, columns in sorted(blocks.items()):
        columns = order.sort(columns) if order is not None and order.has_keys else sorted(columns)
        index = {tree: j for j, tree in enumerate(columns)}
        matrix = [{index[t]: c for t, c in row.terms.items()} for row in block_rows.get(degree, [])]
        block_rank = rational_rank(matrix, len(columns))
        logger.debug(f"Arity {arity} block {degree}: {len(matrix)} rows, {len(columns)} columns, rank {block_rank}")
        rank += block_rank

    dimension = len(trees) - rank
    logger.info(f"Arity {arity}: {len(trees)} trees, ideal rank {rank}, dimension {dimension}")
    return dimension


def dimension_table(
    leading_terms: Sequence[ShuffleTree],
    relations: Sequence[TreePolynomial],
    generators: Sequence[Generator],
    max_arity: int,
    order: Optional[MonomialOrder] = None,
) -> pd.DataFrame:
    """
    Normal-form counts next to oracle dimensions for arities 1..max_arity.

    Returns:
        DataFrame with columns arity, normal_forms, oracle, match
    """
    records = []
    for arity in range(1, max_arity + 1):
        counted = count_normal_forms(leading_terms, generators, arity)
        oracle = ideal_dimension_oracle(relations, generators, arity, order)
        records.append({"arity": arity, "normal_forms": counted, "oracle": oracle, "match": counted == oracle})
    table = pd.DataFrame.from_records(records, columns=["arity", "normal_forms", "oracle", "match"])
    mismatches = int((~table["match"]).sum())
    if mismatches:
        logger.warning(f"{mismatches} arities where normal forms and oracle disagree")
    return table


def is_product_of_lie_monomials(tree: ShuffleTree, lie: str = "lam", product: str = "mu") -> bool:
    """No ``lie`` vertex has a ``product`` vertex below it."""

    def has_product(node: ShuffleTree) -> bool:
        if node.is_leaf:
            return False
        return node.generator.name == product or any(has_product(c) for c in node.children)

    def check(node: ShuffleTree) -> bool:
        if node.is_leaf:
            return True
        if node.generator.name == lie:
            return not any(has_product(c) for c in node.children)
        return all(check(c) for c in node.children)

    return check(tree)
