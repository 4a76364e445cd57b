"""
Word Operads

For a monoid (M, *), the word operad has M^n in arity n and composes along
a surjection f: I -> {1..n} by

    compose_f(a; b_1, ..., b_n)(i) = a(f(i)) * b_f(i)(i)

where b_j is indexed by the fiber of j, identified with 1..|fiber| in
increasing order. Sequences are indexed by leaf label, not by planar
position.

A generator assignment sends each generator g of a free shuffle operad to a
sequence of length arity(g); the induced morphism ``evaluate_tree`` gives, at
leaf i, the product of the entries met on the way from the root down to i.
Two instances matter:

* path sequence: every generator sent to (g, ..., g) in the free monoid on the
  generator names, so leaf i carries the word read along its path;
* psi: mu -> (x, x), lam -> (y, y) in QM, the source of the Poisson order.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional, Sequence

from monoids.base import Comparison, Monoid
from monoids.free import FreeMonoid
from trees.shuffle_tree import Generator, LeafAssignment, ShuffleTree, generators_of

logger = logging.getLogger(__name__)


class LengthMismatch(ValueError):
    """Raised when sequence lengths do not fit the fibers of a composition"""


class MissingGenerator(ValueError):
    """Raised when an assignment has no image for a generator of the tree"""


@dataclass(frozen=True)
class WordSequence:
    """An element of W_M(n): one monoid element per leaf label 1..n."""

    entries: tuple
    monoid: Monoid = field(compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise LengthMismatch("A word sequence needs at least one entry")

    def __len__(self) -> int:
        return len(self.entries)

    def at(self, label: int) -> Any:
        """Entry of leaf ``label`` (1-based)."""
        return self.entries[label - 1]

    def format(self) -> str:
        return "(" + ", ".join(self.monoid.format(e) for e in self.entries) + ")"

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class GeneratorAssignment:
    """
    Images of generators in a word operad.

    Args:
        monoid: Target monoid
        images: Generator name -> tuple of monoid elements of length arity(g)
    """

    monoid: Monoid
    images: Mapping[str, tuple]

    def image(self, generator: Generator) -> tuple:
        if generator.name not in self.images:
            raise MissingGenerator(f"No image for generator '{generator.name}'")
        image = tuple(self.images[generator.name])
        if len(image) != generator.arity:
            raise LengthMismatch(
                f"Image of '{generator.name}' has length {len(image)}, arity is {generator.arity}"
            )
        return image

    def validate(self, generators: Sequence[Generator]) -> None:
        for generator in generators:
            self.image(generator)

    @classmethod
    def diagonal(
        cls, monoid: Monoid, generators: Sequence[Generator], values: Mapping[str, Any]
    ) -> "GeneratorAssignment":
        """Send each generator g to (values[g], ..., values[g])."""
        return cls(monoid, {g.name: (values[g.name],) * g.arity for g in generators})

    def describe(self) -> str:
        parts = [
            f"{name}=(" + ", ".join(self.monoid.format(e) for e in image) + ")"
            for name, image in self.images.items()
        ]
        return ", ".join(parts)


def fibers(f: Sequence[int], n: int) -> list[list[int]]:
    """Leaves of each fiber f^-1(j), j = 1..n, in increasing order."""
    blocks: list[list[int]] = [[] for _ in range(n)]
    for leaf, target in enumerate(f, start=1):
        if not 1 <= target <= n:
            raise LengthMismatch(f"f({leaf}) = {target} outside 1..{n}")
        blocks[target - 1].append(leaf)
    return blocks


def is_shuffle_surjection(f: Sequence[int]) -> bool:
    """True iff f is onto 1..n and the fiber minima increase with j."""
    n = max(f, default=0)
    blocks = fibers(f, n)
    if any(not block for block in blocks):
        return False
    minima = [block[0] for block in blocks]
    return minima == sorted(minima)


def word_compose(f: Sequence[int], a: WordSequence, bs: Sequence[WordSequence]) -> WordSequence:
    """
    Compose in the word operad along ``f``.

    Args:
        f: ``f[i-1]`` is the slot of leaf i; must be onto 1..len(a)
        a: Outer sequence
        bs: One sequence per slot, ``len(bs[j-1]) == |f^-1(j)|``

    Raises:
        LengthMismatch: If lengths do not fit the fibers of ``f``
    """
    n = len(a)
    if len(bs) != n:
        raise LengthMismatch(f"Outer sequence has length {n} but {len(bs)} inner sequences were given")
    blocks = fibers(f, n)
    for j, (block, b) in enumerate(zip(blocks, bs), start=1):
        if len(block) != len(b):
            raise LengthMismatch(f"Fiber {j} has {len(block)} leaves, inner sequence has {len(b)}")

    monoid = a.monoid
    position = {}
    for block in blocks:
        for index, leaf in enumerate(block):
            position[leaf] = index
    entries = [
        monoid.multiply(a.entries[target - 1], bs[target - 1].entries[position[leaf]])
        for leaf, target in enumerate(f, start=1)
    ]
    return WordSequence(tuple(entries), monoid)


def evaluate_tree(tree: ShuffleTree, assignment: GeneratorAssignment) -> WordSequence:
    """
    Image of ``tree`` under the morphism extending ``assignment``.

    Leaf i gets the root-to-leaf product of the entries selected at each
    vertex by the child slot the path goes through.

    Raises:
        MissingGenerator: If a generator of the tree has no image
    """
    monoid = assignment.monoid
    entries: dict[int, Any] = {}

    def walk(node: ShuffleTree, prefix: Any) -> None:
        if node.is_leaf:
            entries[node.label] = prefix
            return
        image = assignment.image(node.generator)
        for slot, child in enumerate(node.children):
            walk(child, monoid.multiply(prefix, image[slot]))

    walk(tree, monoid.identity)
    return WordSequence(tuple(entries[label] for label in range(1, tree.arity + 1)), monoid)


def path_monoid(generators: Sequence[Generator]) -> FreeMonoid:
    """Free monoid on the generator names, letters in the given order."""
    return FreeMonoid([g.name for g in generators], name="paths")


def path_sequence(tree: ShuffleTree, monoid: Optional[FreeMonoid] = None) -> WordSequence:
    """
    Word of generator names along each root-to-leaf path.

    Args:
        tree: Shuffle tree
        monoid: Free monoid to read the words in; defaults to the tree's own
            generators in order of first use
    """
    generators = list(generators_of(tree).values())
    if monoid is None:
        monoid = path_monoid(generators)
    assignment = GeneratorAssignment.diagonal(monoid, generators, {g.name: (g.name,) for g in generators})
    return evaluate_tree(tree, assignment)


def permutation_of(tree: ShuffleTree) -> tuple[int, ...]:
    """Leaf labels in planar left-to-right order."""
    return tree.reading


def compare_sequences(s: WordSequence, t: WordSequence, monoid: Optional[Monoid] = None) -> Comparison:
    """
    Lexicographic comparison entry by entry in leaf-label order.

    The first entry that is not equal decides, including an incomparable one.

    Raises:
        LengthMismatch: If the sequences have different lengths
    """
    if len(s) != len(t):
        raise LengthMismatch(f"Cannot compare sequences of lengths {len(s)} and {len(t)}")
    monoid = monoid or s.monoid
    for left, right in zip(s.entries, t.entries):
        verdict = monoid.compare(left, right)
        if verdict is not Comparison.EQUAL:
            return verdict
    return Comparison.EQUAL


def composition_fibers(
    outer_arity: int, slot: int, inner_arity: int, assignment: Optional[LeafAssignment] = None
) -> tuple[int, ...]:
    """
    The map f of a partial shuffle composition: composite leaf -> outer leaf.

    Inner leaves go to ``slot``; every other leaf goes to the outer leaf it
    came from.
    """
    assignment = assignment or LeafAssignment.consecutive(slot, inner_arity)
    inner_map, outer_map = assignment.resolve(outer_arity, slot, inner_arity)
    total = outer_arity + inner_arity - 1
    f = [0] * total
    for new_label in inner_map.values():
        f[new_label - 1] = slot
    for old_label, new_label in outer_map.items():
        f[new_label - 1] = old_label
    return tuple(f)


def partial_word_compose(
    outer: WordSequence, slot: int, inner: WordSequence, assignment: Optional[LeafAssignment] = None
) -> WordSequence:
    """Partial composition: ``inner`` at ``slot``, identities everywhere else."""
    f = composition_fibers(len(outer), slot, len(inner), assignment)
    one = WordSequence((outer.monoid.identity,), outer.monoid)
    bs = [inner if j == slot else one for j in range(1, len(outer) + 1)]
    return word_compose(f, outer, bs)


def compose_permutations(
    outer: Sequence[int], slot: int, inner: Sequence[int], assignment: Optional[LeafAssignment] = None
) -> tuple[int, ...]:
    """
    Composition in the shuffle associative operad on planar readings.

    The reading of ``inner`` replaces ``slot`` in the reading of ``outer``,
    both relabeled by the assignment.
    """
    assignment = assignment or LeafAssignment.consecutive(slot, len(inner))
    inner_map, outer_map = assignment.resolve(len(outer), slot, len(inner))
    result: list[int] = []
    for label in outer:
        if label == slot:
            result.extend(inner_map[x] for x in inner)
        else:
            result.append(outer_map[label])
    return tuple(result)


def hadamard_image(tree: ShuffleTree, monoid: Optional[FreeMonoid] = None) -> tuple[WordSequence, tuple[int, ...]]:
    """(path sequence, permutation): the tree's image in the Hadamard product."""
    return path_sequence(tree, monoid), permutation_of(tree)
