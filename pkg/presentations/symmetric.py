"""
Symmetric Relations and their Shuffle Expansion

A symmetric relation is written with placeholders 1..n in any order, e.g. the
Leibniz rule ``lam(1, mu(2, 3)) = mu(lam(1, 2), 3) + mu(lam(1, 3), 2)``. The
shuffle operad sees it once per relabeling of the placeholders: each
relabeled term is rewritten into a shuffle tree by putting the two children
of every vertex in min-leaf order. A swap at a ``skew`` generator flips the
sign, at a ``symmetric`` one it does nothing, and at a generator without
symmetry it switches to the opposite generator ``<name>_op``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Mapping, Optional, Sequence

from groebner.dimensions import rational_rank
from groebner.polynomial import TreePolynomial
from trees.shuffle_tree import Generator, InvalidTree, Leaf, Node, ShuffleTree, Symmetry, generators_of
from trees.syntax import parse_linear_combination

logger = logging.getLogger(__name__)


class UnsupportedArity(ValueError):
    """Raised when a symmetric relation uses a generator that is not binary"""


class UnknownSymmetry(ValueError):
    """Raised when a generator's symmetry is not none, symmetric or skew"""


def symmetry_of(text: str) -> Symmetry:
    """
    Raises:
        UnknownSymmetry: For anything but ``none``, ``symmetric`` or ``skew``
    """
    try:
        return Symmetry(text)
    except ValueError as e:
        raise UnknownSymmetry(
            f"Unknown symmetry '{text}'; expected one of {', '.join(s.value for s in Symmetry)}"
        ) from e


@dataclass(frozen=True)
class SymmetricRelation:
    """
    A linear combination of planar trees over placeholders 1..n.

    Args:
        terms: (coefficient, tree) pairs; every tree uses each placeholder once
        source: Text the relation was read from, kept for provenance
    """

    terms: tuple[tuple[Fraction, ShuffleTree], ...]
    source: str = ""

    def __post_init__(self):
        if not self.terms:
            raise ValueError("A symmetric relation needs at least one term")
        arity = self.terms[0][1].arity
        for _, tree in self.terms:
            if sorted(tree.reading) != list(range(1, arity + 1)):
                raise InvalidTree(f"Term {tree.text} must use each placeholder 1..{arity} exactly once")

    @classmethod
    def parse(cls, text: str, generators: Optional[Mapping[str, Generator]] = None) -> "SymmetricRelation":
        """Read ``lam(1, mu(2, 3)) = mu(lam(1, 2), 3) + mu(lam(1, 3), 2)``; arguments may be in any order."""
        return cls(tuple(parse_linear_combination(text, generators, validate=False)), source=text)

    @property
    def arity(self) -> int:
        return self.terms[0][1].arity

    def generators(self) -> dict[str, Generator]:
        found: dict[str, Generator] = {}
        for _, tree in self.terms:
            for name, generator in generators_of(tree).items():
                found.setdefault(name, generator)
        return found


def normalize_tree(tree: ShuffleTree) -> tuple[int, ShuffleTree]:
    """
    Put the children of every binary vertex in min-leaf order.

    Returns:
        (sign, shuffle tree) with the sign collected from skew swaps
    """
    if tree.is_leaf:
        return 1, tree
    sign = 1
    children = []
    for child in tree.children:
        child_sign, normalized = normalize_tree(child)
        sign *= child_sign
        children.append(normalized)
    generator = tree.generator
    if children[0].min_leaf > children[1].min_leaf:
        children.reverse()
        if generator.symmetry is Symmetry.NONE:
            generator = generator.opposite()
        else:
            sign *= generator.sign
    return sign, Node(generator, tuple(children))


def _relabel_placeholders(tree: ShuffleTree, mapping: Mapping[int, int]) -> ShuffleTree:
    if tree.is_leaf:
        return Leaf(mapping[tree.label])
    return Node(tree.generator, tuple(_relabel_placeholders(c, mapping) for c in tree.children))


def _canonical(polynomial: TreePolynomial) -> TreePolynomial:
    first = sorted(polynomial.terms)[0]
    return polynomial * (1 / polynomial.terms[first])


def expand_symmetric(relation: SymmetricRelation) -> list[TreePolynomial]:
    """
    The shuffle relations coming from one symmetric relation.

    Placeholders are relabeled by every permutation (lexicographic order, the
    identity first) and each result is normalized into shuffle trees. Zero
    results and results proportional to an earlier one are dropped.

    Raises:
        UnsupportedArity: If a generator is not binary
        UnknownSymmetry: If a generator carries an unknown symmetry
    """
    for generator in relation.generators().values():
        if generator.arity != 2:
            raise UnsupportedArity(
                f"Generator '{generator.name}' has arity {generator.arity}; only binary generators expand"
            )
        if not isinstance(generator.symmetry, Symmetry):
            raise UnknownSymmetry(f"Generator '{generator.name}' has unknown symmetry '{generator.symmetry}'")

    expanded: list[TreePolynomial] = []
    seen: list[TreePolynomial] = []
    labels = range(1, relation.arity + 1)
    for image in permutations(labels):
        mapping = dict(zip(labels, image))
        terms = []
        for coefficient, tree in relation.terms:
            sign, normalized = normalize_tree(_relabel_placeholders(tree, mapping))
            terms.append((sign * coefficient, normalized))
        polynomial = TreePolynomial(terms, arity=relation.arity)
        if not polynomial:
            continue
        canonical = _canonical(polynomial)
        if canonical in seen:
            continue
        seen.append(canonical)
        expanded.append(polynomial)
    logger.debug(f"Expanded '{relation.source}' into {len(expanded)} shuffle relations")
    return expanded


def independent_subset(
    polynomials: Sequence[TreePolynomial],
) -> tuple[list[TreePolynomial], list[TreePolynomial]]:
    """
    Greedy maximal linearly independent subset, in input order.

    Returns:
        (kept, discarded)
    """
    columns: dict[ShuffleTree, int] = {}
    for polynomial in polynomials:
        for tree in sorted(polynomial.terms):
            columns.setdefault(tree, len(columns))

    kept: list[TreePolynomial] = []
    discarded: list[TreePolynomial] = []
    rows: list[dict[int, Fraction]] = []
    for polynomial in polynomials:
        candidate = rows + [{columns[t]: c for t, c in polynomial.terms.items()}]
        if rational_rank(candidate, len(columns)) > len(rows):
            rows = candidate
            kept.append(polynomial)
        else:
            discarded.append(polynomial)
    return kept, discarded
