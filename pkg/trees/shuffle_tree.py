"""
Shuffle Tree Monomials

A tree monomial of the free shuffle operad is a planar rooted tree whose
internal vertices are labeled by generators and whose leaves carry the labels
1..n bijectively. The shuffle condition asks that, at every vertex, the
minimal leaf labels of the children increase from left to right.

Trees are immutable. Each tree caches its canonical text (``mu(1, lam(2, 3))``)
and its planar leaf reading; equality, hashing and ordering go through the
canonical text, so trees can be used as dictionary keys everywhere in the
Gröbner machinery.

Construction never reorders children. ``Node`` accepts anything structurally
well-formed, ``validate_tree`` decides whether it is a shuffle tree, and the
parsers and ``compose`` reject invalid results instead of repairing them.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterator, Mapping, Optional, Sequence, Union

logger = logging.getLogger(__name__)


class InvalidGenerator(ValueError):
    """Raised when a generator declaration is malformed"""


class InvalidTree(ValueError):
    """Raised when a tree violates the shuffle tree invariants"""


class InvalidComposition(ValueError):
    """Raised when a relabeled composite is not a shuffle tree"""


class SlotOutOfRange(ValueError):
    """Raised when a composition slot does not name a leaf of the outer tree"""


class Symmetry(str, Enum):
    """Sign behaviour of a binary generator under swapping its arguments."""

    NONE = "none"
    SYMMETRIC = "symmetric"
    SKEW = "skew"


@dataclass(frozen=True)
class Generator:
    """
    A generating operation of a free shuffle operad.

    Args:
        name: Identifier used in the tree syntax (``mu``, ``lam``)
        arity: Number of inputs
        symmetry: Sign behaviour, only meaningful for binary generators
    """

    name: str
    arity: int
    symmetry: Symmetry = Symmetry.NONE

    def __post_init__(self):
        if self.arity < 1:
            raise InvalidGenerator(f"Generator '{self.name}' must have arity >= 1, got {self.arity}")
        if not self.name or not (self.name[0].isalpha() and self.name.replace("_", "").isalnum()):
            raise InvalidGenerator(f"Generator name must be an identifier, got '{self.name}'")

    @property
    def sign(self) -> int:
        """Sign picked up when the two arguments are swapped."""
        return -1 if self.symmetry is Symmetry.SKEW else 1

    def opposite(self) -> "Generator":
        """The generator ``g_op(a, b) = g(b, a)`` of an asymmetric binary generator."""
        if self.name.endswith("_op"):
            return Generator(self.name[: -len("_op")], self.arity, self.symmetry)
        return Generator(f"{self.name}_op", self.arity, self.symmetry)

    def __str__(self) -> str:
        return self.name


class _TreeBase:
    """Equality, hashing and ordering by canonical text."""

    text: str
    reading: tuple[int, ...]
    min_leaf: int

    @property
    def arity(self) -> int:
        return len(self.reading)

    def __eq__(self, other) -> bool:
        if not isinstance(other, _TreeBase):
            return NotImplemented
        return self.text == other.text

    def __hash__(self) -> int:
        return hash(self.text)

    def __lt__(self, other: "_TreeBase") -> bool:
        return self.text < other.text

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True, eq=False)
class Leaf(_TreeBase):
    label: int
    text: str = field(init=False, repr=False)
    reading: tuple[int, ...] = field(init=False, repr=False)
    min_leaf: int = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "text", str(self.label))
        object.__setattr__(self, "reading", (self.label,))
        object.__setattr__(self, "min_leaf", self.label)

    @property
    def is_leaf(self) -> bool:
        return True


@dataclass(frozen=True, eq=False)
class Node(_TreeBase):
    generator: Generator
    children: tuple["ShuffleTree", ...]
    text: str = field(init=False, repr=False)
    reading: tuple[int, ...] = field(init=False, repr=False)
    min_leaf: int = field(init=False, repr=False)

    def __post_init__(self):
        children = tuple(self.children)
        if not children:
            raise InvalidTree(f"Vertex '{self.generator.name}' has no children")
        object.__setattr__(self, "children", children)
        object.__setattr__(
            self, "text", f"{self.generator.name}({', '.join(c.text for c in children)})"
        )
        object.__setattr__(self, "reading", tuple(label for c in children for label in c.reading))
        object.__setattr__(self, "min_leaf", min(c.min_leaf for c in children))

    @property
    def is_leaf(self) -> bool:
        return False


ShuffleTree = Union[Leaf, Node]
Path = tuple[int, ...]


def validate_tree(tree: ShuffleTree) -> bool:
    """
    Check every shuffle tree invariant.

    Returns:
        True iff the leaves are exactly 1..n, each vertex has as many children
        as its generator's arity, and children appear by increasing minimal leaf
    """
    if sorted(tree.reading) != list(range(1, tree.arity + 1)):
        return False
    return _locally_valid(tree)


def _locally_valid(tree: ShuffleTree) -> bool:
    if tree.is_leaf:
        return True
    if len(tree.children) != tree.generator.arity:
        return False
    mins = [child.min_leaf for child in tree.children]
    if any(left >= right for left, right in zip(mins, mins[1:])):
        return False
    return all(_locally_valid(child) for child in tree.children)


def weight(tree: ShuffleTree) -> int:
    """Number of internal vertices."""
    if tree.is_leaf:
        return 0
    return 1 + sum(weight(child) for child in tree.children)


def internal_paths(tree: ShuffleTree, prefix: Path = ()) -> list[Path]:
    """Paths (child indices from the root) of all internal vertices, in preorder."""
    if tree.is_leaf:
        return []
    paths = [prefix]
    for index, child in enumerate(tree.children):
        paths.extend(internal_paths(child, prefix + (index,)))
    return paths


def subtree_at(tree: ShuffleTree, path: Path) -> ShuffleTree:
    for index in path:
        tree = tree.children[index]
    return tree


def replace_at(tree: ShuffleTree, path: Path, replacement: ShuffleTree) -> ShuffleTree:
    """Return ``tree`` with the subtree at ``path`` swapped for ``replacement``."""
    if not path:
        return replacement
    head, rest = path[0], path[1:]
    children = list(tree.children)
    children[head] = replace_at(children[head], rest, replacement)
    return Node(tree.generator, tuple(children))


def relabel(tree: ShuffleTree, mapping: Mapping[int, int]) -> ShuffleTree:
    if tree.is_leaf:
        return Leaf(mapping[tree.label])
    return Node(tree.generator, tuple(relabel(child, mapping) for child in tree.children))


def generators_of(tree: ShuffleTree) -> dict[str, Generator]:
    """Generators used in ``tree``, keyed by name, in preorder of first use."""
    found: dict[str, Generator] = {}

    def visit(node: ShuffleTree) -> None:
        if node.is_leaf:
            return
        found.setdefault(node.generator.name, node.generator)
        for child in node.children:
            visit(child)

    visit(tree)
    return found


@dataclass(frozen=True)
class LeafAssignment:
    """
    Relabeling datum of a shuffle composition.

    Args:
        inner: New labels of the inner tree's leaves 1..k, in that order
        outer: New labels of the outer leaves other than the slot, in order;
            defaults to the complement of ``inner`` in increasing order
    """

    inner: tuple[int, ...]
    outer: Optional[tuple[int, ...]] = None

    @classmethod
    def consecutive(cls, slot: int, inner_arity: int) -> "LeafAssignment":
        """Inner leaves become ``slot..slot+k-1``, outer leaves shift past them."""
        return cls(inner=tuple(range(slot, slot + inner_arity)))

    def resolve(self, outer_arity: int, slot: int, inner_arity: int) -> tuple[dict[int, int], dict[int, int]]:
        """
        Leaf maps of the composite.

        Returns:
            (inner leaf -> new label, outer leaf other than ``slot`` -> new label)

        Raises:
            InvalidComposition: If the sizes do not fit the arities, the labels
                are not a permutation of 1..n, or either map reorders leaves
        """
        total = outer_arity + inner_arity - 1
        inner_labels = tuple(self.inner)
        if self.outer is None:
            outer_labels = tuple(sorted(set(range(1, total + 1)) - set(inner_labels)))
        else:
            outer_labels = tuple(self.outer)
        if len(inner_labels) != inner_arity or len(outer_labels) != outer_arity - 1:
            raise InvalidComposition(
                f"Assignment sizes ({len(inner_labels)}, {len(outer_labels)}) do not match "
                f"arities ({inner_arity}, {outer_arity - 1})"
            )
        if sorted(inner_labels + outer_labels) != list(range(1, total + 1)):
            raise InvalidComposition(f"Assignment labels are not a permutation of 1..{total}")
        for labels in (inner_labels, outer_labels):
            if any(left >= right for left, right in zip(labels, labels[1:])):
                raise InvalidComposition(f"Assignment {labels} does not preserve the order of leaves")
        others = [label for label in range(1, outer_arity + 1) if label != slot]
        return (
            {j + 1: label for j, label in enumerate(inner_labels)},
            dict(zip(others, outer_labels)),
        )


def shuffle_assignments(outer_arity: int, slot: int, inner_arity: int) -> Iterator[LeafAssignment]:
    """
    Every relabeling for which grafting at ``slot`` gives a shuffle composite.

    The inner block must contain ``slot`` as its minimum; the outer leaves keep
    their relative order.
    """
    total = outer_arity + inner_arity - 1
    for rest in combinations(range(slot + 1, total + 1), inner_arity - 1):
        yield LeafAssignment(inner=(slot,) + rest)


def compose(
    outer: ShuffleTree,
    slot: int,
    inner: ShuffleTree,
    assignment: Optional[LeafAssignment] = None,
) -> ShuffleTree:
    """
    Graft ``inner`` at leaf ``slot`` of ``outer`` and relabel the leaves.

    Args:
        outer: Outer tree
        slot: Leaf label of ``outer`` receiving the inner tree
        inner: Tree grafted at the slot
        assignment: Relabeling; defaults to inner leaves ``slot..slot+k-1``

    Returns:
        Shuffle tree of arity ``arity(outer) + arity(inner) - 1``

    Raises:
        SlotOutOfRange: If ``slot`` is not a leaf label of ``outer``
        InvalidComposition: If the labels are not a permutation of 1..n or the
            composite violates the shuffle condition
    """
    outer_arity, inner_arity = outer.arity, inner.arity
    if not 1 <= slot <= outer_arity:
        raise SlotOutOfRange(f"Slot {slot} outside 1..{outer_arity}")
    if assignment is None:
        assignment = LeafAssignment.consecutive(slot, inner_arity)
    inner_map, outer_map = assignment.resolve(outer_arity, slot, inner_arity)
    grafted = relabel(inner, inner_map)

    def graft(node: ShuffleTree) -> ShuffleTree:
        if node.is_leaf:
            return grafted if node.label == slot else Leaf(outer_map[node.label])
        return Node(node.generator, tuple(graft(child) for child in node.children))

    result = graft(outer)
    if not validate_tree(result):
        raise InvalidComposition(f"Composite {result.text} violates the shuffle condition")
    return result


def corolla(generator: Generator, labels: Optional[Sequence[int]] = None) -> Node:
    """The one-vertex tree ``g(1, ..., n)``, or with the given leaf labels."""
    labels = labels or range(1, generator.arity + 1)
    return Node(generator, tuple(Leaf(label) for label in labels))
