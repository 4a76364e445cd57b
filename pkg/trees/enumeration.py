"""
Exhaustive enumeration of shuffle trees by arity.

A shuffle tree on the label set L has a root generator g of arity a and
children living on the blocks of a partition of L into a blocks, the blocks
ordered by their minima. Every child is again a shuffle tree on its block, so
trees are generated from standardized trees of smaller arity relabeled onto
each block.
"""

import logging
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, Sequence

import numpy as np

from trees.shuffle_tree import Generator, InvalidGenerator, Leaf, Node, ShuffleTree, relabel

logger = logging.getLogger(__name__)


def ordered_partitions(labels: tuple[int, ...], parts: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Partitions of ``labels`` into ``parts`` non-empty blocks, blocks ordered by minimum."""
    if parts == 1:
        if labels:
            yield (labels,)
        return
    if len(labels) < parts:
        return
    first, rest = labels[0], labels[1:]
    for size in range(0, len(rest) - (parts - 1) + 1):
        for chosen in combinations(rest, size):
            remaining = tuple(label for label in rest if label not in chosen)
            for tail in ordered_partitions(remaining, parts - 1):
                yield ((first,) + chosen,) + tail


@lru_cache(maxsize=None)
def _standard_trees(generators: tuple[Generator, ...], arity: int) -> tuple[ShuffleTree, ...]:
    if arity == 1:
        return (Leaf(1),)
    trees: list[ShuffleTree] = []
    labels = tuple(range(1, arity + 1))
    for generator in generators:
        for blocks in ordered_partitions(labels, generator.arity):
            options = [
                [
                    relabel(tree, {i + 1: label for i, label in enumerate(block)})
                    for tree in _standard_trees(generators, len(block))
                ]
                for block in blocks
            ]
            for children in product(*options):
                trees.append(Node(generator, children))
    return tuple(trees)


def enumerate_trees(generators: Sequence[Generator], arity: int) -> list[ShuffleTree]:
    """
    All shuffle trees of the given arity over ``generators``, each exactly once.

    Args:
        generators: Generators of arity >= 2
        arity: Number of leaves (>= 1); arity 1 gives the bare leaf

    Returns:
        Trees in a deterministic order (generator order, then block partitions)
    """
    if arity < 1:
        raise ValueError(f"Arity must be >= 1, got {arity}")
    for generator in generators:
        if generator.arity < 2:
            raise InvalidGenerator(
                f"Generator '{generator.name}' has arity {generator.arity}; enumeration needs arity >= 2"
            )
    trees = list(_standard_trees(tuple(generators), arity))
    logger.debug(f"Enumerated {len(trees)} trees of arity {arity}")
    return trees


def random_tree(generators: Sequence[Generator], arity: int, rng: np.random.Generator) -> ShuffleTree:
    """A uniformly random shuffle tree of the given arity."""
    trees = _standard_trees(tuple(generators), arity)
    return trees[int(rng.integers(len(trees)))]
