"""
Order Stages

A monomial order is a chain of stages. Each stage maps a tree to an image
and compares images; the first stage that separates two trees decides.

* ``WordStage``: image in a word operad under a generator assignment,
  compared lexicographically with the monoid order
* ``PathLexStage``: path sequence in the free monoid on the generators,
  words compared by length then letter order
* ``PermutationStage``: planar leaf reading, compared lexicographically

Stages over a totally ordered monoid also provide a sort key, so whole
orders can sort and take maxima without pairwise comparisons.
"""

from abc import ABC, abstractmethod
from typing import Any, Optional, Sequence

from monoids.base import Comparison
from monoids.free import FreeMonoid
from operads.word_operad import (
    GeneratorAssignment,
    WordSequence,
    compare_sequences,
    evaluate_tree,
    path_sequence,
    permutation_of,
)
from trees.shuffle_tree import ShuffleTree


class OrderStage(ABC):
    name: str = "stage"

    @abstractmethod
    def image(self, tree: ShuffleTree) -> Any:
        ...

    @abstractmethod
    def compare_images(self, left: Any, right: Any) -> Comparison:
        ...

    @abstractmethod
    def describe(self) -> str:
        """The stage in order-spec syntax."""

    def format_image(self, image: Any) -> str:
        return str(image)

    @property
    def is_total(self) -> bool:
        return True

    def key(self, tree: ShuffleTree) -> Optional[tuple]:
        return None

    def compare(self, t1: ShuffleTree, t2: ShuffleTree) -> Comparison:
        return self.compare_images(self.image(t1), self.image(t2))


class WordStage(OrderStage):
    """Compare images under a generator assignment into an ordered monoid."""

    name = "word"

    def __init__(self, assignment: GeneratorAssignment):
        if not assignment.monoid.is_ordered:
            raise ValueError(f"Monoid {assignment.monoid.name} carries no order")
        self.assignment = assignment

    def image(self, tree: ShuffleTree) -> WordSequence:
        return evaluate_tree(tree, self.assignment)

    def compare_images(self, left: WordSequence, right: WordSequence) -> Comparison:
        return compare_sequences(left, right)

    @property
    def is_total(self) -> bool:
        return self.assignment.monoid.is_total

    def key(self, tree: ShuffleTree) -> Optional[tuple]:
        if not self.is_total:
            return None
        monoid = self.assignment.monoid
        return tuple(monoid.sort_key(entry) for entry in self.image(tree).entries)

    def describe(self) -> str:
        return f"word({self.assignment.monoid.name}; {self.assignment.describe()})"


class PathLexStage(OrderStage):
    """
    Path-lexicographic comparison.

    Args:
        alphabet: Generator names, smallest first
    """

    name = "pathlex"

    def __init__(self, alphabet: Sequence[str]):
        self.monoid = FreeMonoid(alphabet, name="paths")

    def image(self, tree: ShuffleTree) -> WordSequence:
        return path_sequence(tree, self.monoid)

    def compare_images(self, left: WordSequence, right: WordSequence) -> Comparison:
        return compare_sequences(left, right, self.monoid)

    def key(self, tree: ShuffleTree) -> tuple:
        return tuple(self.monoid.sort_key(word) for word in self.image(tree).entries)

    def describe(self) -> str:
        return f"pathlex({'<'.join(self.monoid.alphabet)})"


class PermutationStage(OrderStage):
    """Planar leaf readings compared lexicographically; larger reading, larger tree."""

    name = "perm"

    def image(self, tree: ShuffleTree) -> tuple[int, ...]:
        return permutation_of(tree)

    def compare_images(self, left: tuple[int, ...], right: tuple[int, ...]) -> Comparison:
        return Comparison.of_keys(left, right)

    def key(self, tree: ShuffleTree) -> tuple[int, ...]:
        return permutation_of(tree)

    def describe(self) -> str:
        return "perm"
