"""
Operadic Division

A basis element g reduces a tree T when the leading term of g divides T.
The reduction step replaces T by T minus the lift of g along the
occurrence, scaled to cancel T; the other terms of the lift are smaller
than T because the order is admissible, so repeated reduction terminates.
"""

import logging
from fractions import Fraction
from typing import Sequence

import numpy as np

from groebner.polynomial import TreePolynomial
from orders.monomial_order import MonomialOrder
from trees.divisors import Occurrence, find_occurrences, first_occurrence, substitute
from trees.enumeration import random_tree
from trees.shuffle_tree import Generator

logger = logging.getLogger(__name__)


def substitute_polynomial(occurrence: Occurrence, polynomial: TreePolynomial) -> TreePolynomial:
    """Plug every term of ``polynomial`` into the matched region of the occurrence's host."""
    return TreePolynomial(
        [(c, substitute(occurrence, tree)) for tree, c in polynomial.terms.items()],
        arity=occurrence.host.arity,
    )


def reduce(p: TreePolynomial, basis: Sequence[TreePolynomial], order: MonomialOrder) -> TreePolynomial:
    """
    Full reduction of ``p`` modulo ``basis``.

    At each step the largest remaining tree is reduced by the first basis
    element (in list order) whose leading term divides it, at its first
    occurrence in preorder; trees without a divisor move to the remainder.

    Returns:
        A polynomial none of whose terms is divisible by a basis leading term
    """
    reducers = [(g.leading_term(order), g, g.leading_coefficient(order)) for g in basis if g]
    remainder: dict = {}
    current = p
    steps = 0
    while current:
        tree = current.leading_term(order)
        coefficient = current.terms[tree]
        for pattern, g, lead in reducers:
            occurrence = first_occurrence(tree, pattern)
            if occurrence is not None:
                current = current - substitute_polynomial(occurrence, g) * (coefficient / lead)
                steps += 1
                break
        else:
            remainder[tree] = coefficient
            current = current - TreePolynomial.monomial(tree, coefficient)
    logger.debug(f"Reduced in {steps} steps to {len(remainder)} terms")
    return TreePolynomial(remainder, arity=p.arity)


def autoreduce(polynomials: Sequence[TreePolynomial], order: MonomialOrder) -> list[TreePolynomial]:
    """
    Self-reduce a list: monic elements, no leading term divides a term of
    another element, sorted by increasing leading term.
    """
    basis = [g.monic(order) for g in polynomials if g]
    changed = True
    while changed:
        changed = False
        for index, g in enumerate(basis):
            others = basis[:index] + basis[index + 1 :]
            reduced = reduce(g, others, order)
            if reduced != g:
                changed = True
                if reduced:
                    basis[index] = reduced.monic(order)
                else:
                    del basis[index]
                break
    return sorted(basis, key=lambda g: order.key(g.leading_term(order)))


def random_ideal_element(
    relations: Sequence[TreePolynomial],
    generators: Sequence[Generator],
    arity: int,
    rng: np.random.Generator,
    summands: int = 3,
) -> TreePolynomial:
    """
    A random element of the arity-``arity`` component of the ideal.

    Each summand lifts a relation along an occurrence of one of its trees in
    a random tree, with a small random rational coefficient.
    """
    element = TreePolynomial(arity=arity)
    candidates = [r for r in relations if r and r.arity <= arity]
    if not candidates:
        return element
    added = attempts = 0
    while added < summands and attempts < 1000:
        attempts += 1
        relation = candidates[int(rng.integers(len(candidates)))]
        pattern = sorted(relation.terms)[0]
        host = random_tree(generators, arity, rng)
        occurrences = find_occurrences(host, pattern)
        if not occurrences:
            continue
        occurrence = occurrences[int(rng.integers(len(occurrences)))]
        scale = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))
        element = element + substitute_polynomial(occurrence, relation) * scale
        added += 1
    return element
