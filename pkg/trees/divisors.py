"""
Divisibility of Shuffle Tree Monomials

A pattern tree P divides a host tree T when some vertex v of T is the root of
a copy of P: the pattern's vertices map downward onto T's vertices with the
same generators and child slots, the pattern's leaves land on subtrees of T
(the blocks), and ordering the blocks by their minimal leaf reproduces the
pattern's leaf labels. Replacing the matched region by another tree of the
pattern's arity, with the blocks plugged back in, again gives a shuffle tree.
This is the operation behind reduction, S-polynomials and the ideal oracle.
"""

import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional

from trees.enumeration import enumerate_trees
from trees.shuffle_tree import (
    Node,
    Path,
    ShuffleTree,
    generators_of,
    internal_paths,
    replace_at,
    subtree_at,
    weight,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Occurrence:
    """
    One embedding of ``pattern`` into ``host``.

    Attributes:
        host: The divisible tree
        pattern: The divisor
        anchor: Host path of the pattern root
        vertices: Host paths of the pattern's internal vertices, pattern preorder
        blocks: Host subtrees glued at pattern leaves 1..k
    """

    host: ShuffleTree
    pattern: ShuffleTree
    anchor: Path
    vertices: tuple[Path, ...]
    blocks: tuple[ShuffleTree, ...]

    @property
    def vertex_map(self) -> dict[Path, Path]:
        """Pattern vertex path -> host vertex path."""
        return dict(zip(internal_paths(self.pattern), self.vertices))


class Overlap(NamedTuple):
    tree: ShuffleTree
    first: Occurrence
    second: Occurrence


def match_at(host: ShuffleTree, anchor: Path, pattern: ShuffleTree) -> Optional[Occurrence]:
    """Return the occurrence of ``pattern`` rooted at ``anchor``, if there is one."""
    if pattern.is_leaf:
        return None
    blocks: dict[int, ShuffleTree] = {}
    vertices: list[Path] = []

    def walk(node: ShuffleTree, piece: ShuffleTree, path: Path) -> bool:
        if piece.is_leaf:
            blocks[piece.label] = node
            return True
        if node.is_leaf or node.generator.name != piece.generator.name:
            return False
        if len(node.children) != len(piece.children):
            return False
        vertices.append(path)
        return all(
            walk(child, sub, path + (index,))
            for index, (child, sub) in enumerate(zip(node.children, piece.children))
        )

    if not walk(subtree_at(host, anchor), pattern, anchor):
        return None
    order = sorted(blocks, key=lambda label: blocks[label].min_leaf)
    if order != list(range(1, len(blocks) + 1)):
        return None
    return Occurrence(
        host=host,
        pattern=pattern,
        anchor=anchor,
        vertices=tuple(vertices),
        blocks=tuple(blocks[label] for label in order),
    )


def find_occurrences(host: ShuffleTree, pattern: ShuffleTree) -> list[Occurrence]:
    """
    All occurrences of ``pattern`` as a divisor of ``host``, anchors in preorder.

    An empty list means the pattern does not divide the host.
    """
    if pattern.is_leaf or pattern.arity > host.arity:
        return []
    found = []
    for path in internal_paths(host):
        occurrence = match_at(host, path, pattern)
        if occurrence is not None:
            found.append(occurrence)
    return found


def first_occurrence(host: ShuffleTree, pattern: ShuffleTree) -> Optional[Occurrence]:
    """The occurrence with the first anchor in preorder, if any."""
    if pattern.is_leaf or pattern.arity > host.arity:
        return None
    for path in internal_paths(host):
        occurrence = match_at(host, path, pattern)
        if occurrence is not None:
            return occurrence
    return None


def divides(host: ShuffleTree, pattern: ShuffleTree) -> bool:
    return first_occurrence(host, pattern) is not None


def substitute(occurrence: Occurrence, replacement: ShuffleTree) -> ShuffleTree:
    """
    Replace the matched region of the host by ``replacement``.

    ``replacement`` must have the pattern's arity; its leaf i receives the
    block glued at pattern leaf i. Substituting the pattern itself gives the
    host back.
    """
    if replacement.arity != occurrence.pattern.arity:
        raise ValueError(
            f"Replacement arity {replacement.arity} differs from pattern arity "
            f"{occurrence.pattern.arity}"
        )

    def plug(node: ShuffleTree) -> ShuffleTree:
        if node.is_leaf:
            return occurrence.blocks[node.label - 1]
        return Node(node.generator, tuple(plug(child) for child in node.children))

    return replace_at(occurrence.host, occurrence.anchor, plug(replacement))


def enumerate_overlaps(p1: ShuffleTree, p2: ShuffleTree, max_arity: int) -> list[Overlap]:
    """
    Small common multiples of two patterns.

    Scans every tree over the patterns' generators, of arity at most
    ``max_arity`` (and at most ``arity(p1) + arity(p2) - 2``, the largest union
    two patterns sharing a vertex can have), and keeps the pairs of
    occurrences that share an internal vertex and together cover the tree.
    The trivial pair (same pattern, same vertices) is skipped.

    Args:
        p1: First pattern
        p2: Second pattern
        max_arity: Upper bound on the arity of the overlap trees

    Returns:
        Overlaps sorted by arity, then tree text, then vertex sets
    """
    if p1.is_leaf or p2.is_leaf:
        return []
    generators = {**generators_of(p1), **generators_of(p2)}
    cap = min(max_arity, p1.arity + p2.arity - 2)
    max_weight = weight(p1) + weight(p2) - 1

    found: dict[tuple, Overlap] = {}
    for arity in range(max(p1.arity, p2.arity), cap + 1):
        for tree in enumerate_trees(list(generators.values()), arity):
            if weight(tree) > max_weight:
                continue
            firsts = find_occurrences(tree, p1)
            if not firsts:
                continue
            seconds = find_occurrences(tree, p2)
            every_vertex = set(internal_paths(tree))
            for first in firsts:
                for second in seconds:
                    if p1 == p2 and first.vertices == second.vertices:
                        continue
                    shared = set(first.vertices) & set(second.vertices)
                    if not shared:
                        continue
                    if set(first.vertices) | set(second.vertices) != every_vertex:
                        continue
                    key = (arity, tree.text, first.vertices, second.vertices)
                    found.setdefault(key, Overlap(tree, first, second))

    overlaps = [found[key] for key in sorted(found)]
    logger.debug(f"{len(overlaps)} overlaps of {p1.text} and {p2.text} up to arity {cap}")
    return overlaps

