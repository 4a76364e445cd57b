"""
Buchberger Completion for Shuffle Operads

The input relations are made monic and self-reduced. Each round takes a
frozen snapshot of the basis, visits every unprocessed pair of basis
elements (including an element with itself), enumerates the overlaps of
their leading terms up to ``max_arity`` and reduces each S-polynomial
against the snapshot. Nonzero remainders are the survivors; they are added
between rounds and the basis is self-reduced again. Completion stops when a
round adds nothing.

Pairs are visited in order of the snapshot (sorted by leading term) and
overlaps in order of arity then canonical text, so reports are
deterministic.

Only overlaps of arity <= ``max_arity`` are checked. A pair whose overlaps
could be larger is recorded as ``bound_exceeded``: the verdict is then a
statement about arities up to the bound and nothing more.
"""

import logging
from typing import Optional, Sequence

from pydantic import BaseModel, Field, computed_field

from groebner.dimensions import DimensionRow, count_normal_forms
from groebner.polynomial import PolynomialRecord, TreePolynomial
from groebner.reduction import autoreduce, reduce, substitute_polynomial
from orders.monomial_order import MonomialOrder
from trees.divisors import Overlap, enumerate_overlaps
from trees.shuffle_tree import Generator

logger = logging.getLogger(__name__)


class NotAnOverlap(ValueError):
    """Raised when an overlap does not embed the two leading terms"""


class GroebnerError(RuntimeError):
    """Raised when completion does not stabilize within the round limit"""


class GroebnerReport(BaseModel):
    """Outcome of a bounded Buchberger completion."""

    schema_version: int = Field(default=1, serialization_alias="schema")
    order: str = Field(description="Order name")
    order_spec: str = Field(description="Order stages in order-spec syntax")
    max_arity: int = Field(ge=1)
    relations: list[PolynomialRecord] = Field(description="Input relations as given")
    basis: list[PolynomialRecord] = Field(description="Reduced basis, monic, by increasing leading term")
    leading_terms: list[str]
    processed_overlaps: int = Field(ge=0)
    rounds: int = Field(ge=0)
    survivors: list[PolynomialRecord] = Field(
        description="S-polynomials that did not reduce to zero; empty iff the input is a Groebner basis"
    )
    bound_exceeded: bool = Field(description="Some pair had overlaps above max_arity that were not checked")
    dimensions: list[DimensionRow] = Field(description="Normal-form counts for arities 1..max_arity")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def is_groebner(self) -> bool:
        return not self.survivors

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


def s_polynomial(
    p1: TreePolynomial, p2: TreePolynomial, overlap: Overlap, order: MonomialOrder
) -> TreePolynomial:
    """
    Difference of the two lifts of ``p1`` and ``p2`` to the overlap tree,
    each scaled to leading coefficient 1 so the overlap tree cancels.

    Raises:
        NotAnOverlap: If the overlap's occurrences are not of the two leading terms
    """
    lt1, lt2 = p1.leading_term(order), p2.leading_term(order)
    first, second = overlap.first, overlap.second
    if first.pattern != lt1 or second.pattern != lt2:
        raise NotAnOverlap(
            f"Overlap embeds {first.pattern.text} and {second.pattern.text}, "
            f"leading terms are {lt1.text} and {lt2.text}"
        )
    if first.host != overlap.tree or second.host != overlap.tree:
        raise NotAnOverlap(f"Occurrences do not live in {overlap.tree.text}")
    lift1 = substitute_polynomial(first, p1) * (1 / p1.leading_coefficient(order))
    lift2 = substitute_polynomial(second, p2) * (1 / p2.leading_coefficient(order))
    return lift1 - lift2


def _pair_key(g: TreePolynomial, h: TreePolynomial) -> tuple[str, str]:
    return g.format(), h.format()


def buchberger(
    relations: Sequence[TreePolynomial],
    order: MonomialOrder,
    max_arity: int,
    generators: Optional[Sequence[Generator]] = None,
    max_rounds: int = 50,
) -> GroebnerReport:
    """
    Complete ``relations`` to a Groebner basis up to overlap arity ``max_arity``.

    Args:
        relations: Nonzero tree polynomials
        order: Total monomial order
        max_arity: Largest overlap arity to check (>= largest relation arity)
        generators: Generators for the normal-form counts; taken from the
            relations when omitted
        max_rounds: Safety limit on completion rounds

    Returns:
        GroebnerReport with the reduced basis, survivors and dimension counts

    Raises:
        GroebnerError: If completion is still adding elements after ``max_rounds``
    """
    inputs = [r for r in relations if r]
    if len(inputs) != len(relations):
        logger.warning(f"Dropped {len(relations) - len(inputs)} zero relations")
    if inputs and max_arity < max(r.arity for r in inputs):
        raise ValueError(f"max_arity {max_arity} is below the largest relation arity")
    if generators is None:
        found: dict[str, Generator] = {}
        for r in inputs:
            for name, generator in r.generators().items():
                found.setdefault(name, generator)
        generators = list(found.values())

    logger.info(f"Completing {len(inputs)} relations under {order.name} up to arity {max_arity}")
    basis = autoreduce(inputs, order)
    seen_pairs: set[tuple[tuple[str, str], tuple[str, str]]] = set()
    survivors: list[TreePolynomial] = []
    processed = 0
    bound_exceeded = False
    rounds = 0

    while True:
        rounds += 1
        if rounds > max_rounds:
            raise GroebnerError(f"Completion did not stabilize within {max_rounds} rounds")
        snapshot = list(basis)
        added: list[TreePolynomial] = []
        for i, g in enumerate(snapshot):
            for h in snapshot[i:]:
                key = (_pair_key(g, h), _pair_key(h, g))
                if key in seen_pairs:
                    continue
                seen_pairs.add(key)
                lt_g, lt_h = g.leading_term(order), h.leading_term(order)
                if lt_g.arity + lt_h.arity - 2 > max_arity:
                    bound_exceeded = True
                for overlap in enumerate_overlaps(lt_g, lt_h, max_arity):
                    processed += 1
                    remainder = reduce(s_polynomial(g, h, overlap, order), snapshot, order)
                    if remainder:
                        logger.info(f"Survivor at {overlap.tree.text}: {remainder.format(order)}")
                        survivors.append(remainder)
                        added.append(remainder)
        logger.info(f"Round {rounds}: {processed} overlaps processed, {len(added)} new elements")
        if not added:
            break
        basis = autoreduce(snapshot + added, order)

    leading = [g.leading_term(order) for g in basis]
    dimensions = [
        DimensionRow(arity=n, normal_forms=count_normal_forms(leading, generators, n))
        for n in range(1, max_arity + 1)
    ]
    report = GroebnerReport(
        order=order.name,
        order_spec=order.describe(),
        max_arity=max_arity,
        relations=[r.to_record(order) for r in relations],
        basis=[g.to_record(order) for g in basis],
        leading_terms=[t.text for t in leading],
        processed_overlaps=processed,
        rounds=rounds,
        survivors=[s.to_record(order) for s in survivors],
        bound_exceeded=bound_exceeded,
        dimensions=dimensions,
    )
    logger.info(
        f"Basis of {len(basis)} elements, {len(survivors)} survivors, "
        f"{'Groebner basis' if report.is_groebner else 'not a Groebner basis'} up to arity {max_arity}"
    )
    return report
