"""
Operad presentations and the built-in ones (com, ass, lie, pois).
"""

import logging
from dataclasses import dataclass, field
from typing import Sequence

from groebner.polynomial import TreePolynomial
from presentations.symmetric import SymmetricRelation, expand_symmetric, independent_subset
from trees.shuffle_tree import Generator, Symmetry

logger = logging.getLogger(__name__)


class UnknownName(ValueError):
    """Raised when a built-in presentation name is not known"""


class InvalidPresentation(ValueError):
    """Raised when relations use undeclared generators or are zero"""


MU = Generator("mu", 2, Symmetry.SYMMETRIC)
LAM = Generator("lam", 2, Symmetry.SKEW)
M = Generator("m", 2, Symmetry.NONE)

ASSOCIATIVITY = "mu(mu(1, 2), 3) = mu(1, mu(2, 3))"
JACOBI = "lam(1, lam(2, 3)) = lam(lam(1, 2), 3) - lam(lam(1, 3), 2)"
LEIBNIZ = "lam(1, mu(2, 3)) = mu(lam(1, 2), 3) + mu(lam(1, 3), 2)"
ASS_ASSOCIATIVITY = "m(m(1, 2), 3) = m(1, m(2, 3))"

BUILTIN_NAMES = ("com", "ass", "lie", "pois")


@dataclass(frozen=True)
class Provenance:
    """Where the shuffle relations of a presentation came from."""

    symmetric: tuple[SymmetricRelation, ...] = ()
    discarded: tuple[TreePolynomial, ...] = ()


@dataclass(frozen=True)
class OperadPresentation:
    """
    Generators and shuffle relations of an operad.

    Args:
        name: Built-in name or file name
        generators: Generators of the free shuffle operad (including ``_op`` ones)
        shuffle_relations: Nonzero tree polynomials over ``generators``
        provenance: Symmetric source relations and discarded dependent expansions

    Raises:
        InvalidPresentation: If a relation is zero or uses an undeclared generator
    """

    name: str
    generators: tuple[Generator, ...]
    shuffle_relations: tuple[TreePolynomial, ...]
    provenance: Provenance = field(default_factory=Provenance)

    def __post_init__(self):
        declared = {g.name for g in self.generators}
        for relation in self.shuffle_relations:
            if not relation:
                raise InvalidPresentation(f"Presentation '{self.name}' has a zero relation")
            unknown = set(relation.generators()) - declared
            if unknown:
                raise InvalidPresentation(
                    f"Relation {relation.format()} uses undeclared generators {sorted(unknown)}"
                )

    @property
    def generator_map(self) -> dict[str, Generator]:
        return {g.name: g for g in self.generators}

    @property
    def max_relation_arity(self) -> int:
        return max((r.arity for r in self.shuffle_relations), default=1)


def from_symmetric(
    name: str,
    generators: Sequence[Generator],
    symmetric: Sequence[str],
    shuffle: Sequence[TreePolynomial] = (),
) -> OperadPresentation:
    """
    Expand symmetric relations and keep a maximal independent set of shuffle relations.

    Explicit ``shuffle`` relations come first, then the expansions in the
    order of ``symmetric``.
    """
    by_name = {g.name: g for g in generators}
    relations = [SymmetricRelation.parse(text, by_name) for text in symmetric]
    candidates = list(shuffle)
    for relation in relations:
        candidates.extend(expand_symmetric(relation))
    kept, discarded = independent_subset(candidates)
    if discarded:
        logger.debug(f"{name}: {len(discarded)} dependent shuffle relations discarded")

    declared = list(generators)
    for generator in generators:
        if generator.arity == 2 and generator.symmetry is Symmetry.NONE:
            opposite = generator.opposite()
            if opposite.name not in by_name:
                declared.append(opposite)
    return OperadPresentation(
        name=name,
        generators=tuple(declared),
        shuffle_relations=tuple(kept),
        provenance=Provenance(symmetric=tuple(relations), discarded=tuple(discarded)),
    )


def builtin(name: str) -> OperadPresentation:
    """
    Built-in presentations.

    * ``com``: mu symmetric, associativity (2 shuffle relations)
    * ``ass``: m without symmetry, associativity (generators m, m_op; 6 relations)
    * ``lie``: lam skew, Jacobi (1 relation)
    * ``pois``: mu and lam, Leibniz (3), Jacobi (1), associativity (2)

    Raises:
        UnknownName: For any other name
    """
    if name == "com":
        return from_symmetric("com", [MU], [ASSOCIATIVITY])
    if name == "ass":
        return from_symmetric("ass", [M], [ASS_ASSOCIATIVITY])
    if name == "lie":
        return from_symmetric("lie", [LAM], [JACOBI])
    if name == "pois":
        return from_symmetric("pois", [MU, LAM], [LEIBNIZ, JACOBI, ASSOCIATIVITY])
    raise UnknownName(f"Unknown presentation '{name}'; expected one of {', '.join(BUILTIN_NAMES)}")
