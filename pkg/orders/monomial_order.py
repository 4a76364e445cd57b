"""
Monomial Orders on Shuffle Trees

A ``MonomialOrder`` runs its stages in sequence: the first stage telling two
trees apart decides, and trees are equal only if every stage ties. Orders
whose stages all have sort keys are total and compare through a cached key,
which is what reduction and Buchberger use to find leading terms.

The Poisson order is the chain

    word(qm; mu=(x, x), lam=(y, y)) > pathlex(mu<lam) > perm

The path-lexicographic tiebreak followed by the permutation makes it total
on every arity.
"""

import logging
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

from pydantic import BaseModel, Field

from monoids.base import Comparison
from monoids.quantum import QMVariant, QuantumMonoid, X, Y
from operads.word_operad import GeneratorAssignment
from orders.stages import OrderStage, PathLexStage, PermutationStage, WordStage
from trees.shuffle_tree import Generator, ShuffleTree

logger = logging.getLogger(__name__)

KEY_CACHE_SIZE = 1 << 16


class ArityMismatch(ValueError):
    """Raised when trees of different arities are compared"""


class WrongSignature(ValueError):
    """Raised when an order does not fit the generators it is built for"""


class StageVerdict(BaseModel):
    """One stage of a comparison trace."""

    stage: str = Field(description="Stage in order-spec syntax")
    left: str = Field(description="Image of the first tree")
    right: str = Field(description="Image of the second tree")
    verdict: Comparison


class MonomialOrder:
    """
    Lexicographic superposition of order stages.

    Args:
        name: Name used in reports and on the command line
        stages: Stages, most significant first
        key_cache_size: Most recently used sort keys kept per order
    """

    def __init__(self, name: str, stages: Sequence[OrderStage], key_cache_size: int = KEY_CACHE_SIZE):
        if not stages:
            raise ValueError("An order needs at least one stage")
        self.name = name
        self.stages = tuple(stages)
        self._cached_key = lru_cache(maxsize=key_cache_size)(self._compute_key)

    @property
    def is_total(self) -> bool:
        """Keys exist and the last stage separates distinct trees."""
        return all(stage.is_total for stage in self.stages) and isinstance(
            self.stages[-1], PermutationStage
        )

    @property
    def has_keys(self) -> bool:
        return all(stage.is_total for stage in self.stages)

    def describe(self) -> str:
        return " > ".join(stage.describe() for stage in self.stages)

    def key(self, tree: ShuffleTree) -> tuple:
        """Sort key: comparing keys is comparing trees."""
        if not self.has_keys:
            raise TypeError(f"Order {self.name} has stages without sort keys")
        return self._cached_key(tree)

    def _compute_key(self, tree: ShuffleTree) -> tuple:
        return tuple(stage.key(tree) for stage in self.stages)

    def cache_info(self):
        return self._cached_key.cache_info()

    def compare(self, t1: ShuffleTree, t2: ShuffleTree) -> Comparison:
        """
        Raises:
            ArityMismatch: If the trees have different arities
        """
        if t1.arity != t2.arity:
            raise ArityMismatch(f"Cannot compare arity {t1.arity} with arity {t2.arity}")
        if self.has_keys:
            return Comparison.of_keys(self.key(t1), self.key(t2))
        for stage in self.stages:
            verdict = stage.compare(t1, t2)
            if verdict is not Comparison.EQUAL:
                return verdict
        return Comparison.EQUAL

    def trace(self, t1: ShuffleTree, t2: ShuffleTree) -> list[StageVerdict]:
        """Per-stage images and verdicts, up to and including the deciding stage."""
        if t1.arity != t2.arity:
            raise ArityMismatch(f"Cannot compare arity {t1.arity} with arity {t2.arity}")
        steps = []
        for stage in self.stages:
            left, right = stage.image(t1), stage.image(t2)
            verdict = stage.compare_images(left, right)
            steps.append(
                StageVerdict(
                    stage=stage.describe(),
                    left=stage.format_image(left),
                    right=stage.format_image(right),
                    verdict=verdict,
                )
            )
            if verdict is not Comparison.EQUAL:
                break
        return steps

    def leading(self, trees: Iterable[ShuffleTree]) -> ShuffleTree:
        return max(trees, key=self.key)

    def sort(self, trees: Iterable[ShuffleTree], descending: bool = True) -> list[ShuffleTree]:
        return sorted(trees, key=self.key, reverse=descending)

    def __repr__(self) -> str:
        return f"MonomialOrder({self.name!r}: {self.describe()})"


POISSON_SIGNATURE = {"mu": 2, "lam": 2}
POISSON_IMAGES = {"mu": (X, X), "lam": (Y, Y)}


def _check_signature(generators: Sequence[Generator]) -> None:
    for generator in generators:
        if POISSON_SIGNATURE.get(generator.name) != generator.arity:
            raise WrongSignature(
                f"The Poisson order is defined on binary mu and lam, got {generator.name}/{generator.arity}"
            )


def build_poisson_order(
    generators: Optional[Sequence[Generator]] = None,
    variant: Union[QMVariant, str] = QMVariant.STANDARD,
) -> MonomialOrder:
    """
    The QM order with psi(mu) = (x, x), psi(lam) = (y, y), then path-lex with
    mu < lam, then permutations.

    Args:
        generators: Any subset of binary mu and lam; both by default
        variant: QM order variant of the word stage

    Raises:
        WrongSignature: On any other generator
    """
    if generators is None:
        generators = [Generator("mu", 2), Generator("lam", 2)]
    _check_signature(generators)
    names = [name for name in POISSON_SIGNATURE if name in {g.name for g in generators}]
    monoid = QuantumMonoid(variant)
    assignment = GeneratorAssignment(monoid, {name: POISSON_IMAGES[name] for name in names})
    name = "poisson-qm" if monoid.variant is QMVariant.STANDARD else f"poisson-qm-{monoid.variant.value}"
    order = MonomialOrder(name, [WordStage(assignment), PathLexStage(names), PermutationStage()])
    logger.debug(f"Built {order!r}")
    return order


def build_pathlex_order(generators: Sequence[Generator]) -> MonomialOrder:
    """Path-lexicographic order, generators smallest first, then permutations."""
    return MonomialOrder("pathlex", [PathLexStage([g.name for g in generators]), PermutationStage()])
