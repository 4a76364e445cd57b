"""
Tree Polynomials

Finite linear combinations of shuffle trees of one arity with exact rational
coefficients (``fractions.Fraction``). Zero coefficients are never stored.
Leading terms depend on a monomial order and are computed on demand.
"""

from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from pydantic import BaseModel, Field

from orders.monomial_order import MonomialOrder
from trees.shuffle_tree import Generator, ShuffleTree, generators_of
from trees.syntax import parse_linear_combination

Scalar = Union[int, Fraction]


class ZeroPolynomial(ValueError):
    """Raised when the leading term of the zero polynomial is requested"""


class MixedArity(ValueError):
    """Raised when one polynomial mixes trees of different arities"""


class TermRecord(BaseModel):
    tree: str = Field(description="Tree in canonical syntax")
    coefficient: str = Field(description="Exact rational as 'p/q' or integer string")


class PolynomialRecord(BaseModel):
    """Serialized polynomial, terms in decreasing order."""

    text: str
    terms: list[TermRecord]


class TreePolynomial:
    """
    A linear combination of trees of equal arity.

    Args:
        terms: (coefficient, tree) pairs or a tree -> coefficient mapping;
            repeated trees are added up
        arity: Required when ``terms`` is empty
    """

    __hash__ = None  # type: ignore[assignment]

    def __init__(
        self,
        terms: Union[Mapping[ShuffleTree, Scalar], Iterable[tuple[Scalar, ShuffleTree]]] = (),
        arity: Optional[int] = None,
    ):
        pairs = [(c, t) for t, c in terms.items()] if isinstance(terms, Mapping) else list(terms)
        collected: dict[ShuffleTree, Fraction] = {}
        for coefficient, tree in pairs:
            if arity is None:
                arity = tree.arity
            elif tree.arity != arity:
                raise MixedArity(f"Mixed arities in polynomial: {tree.text} is not of arity {arity}")
            collected[tree] = collected.get(tree, Fraction(0)) + Fraction(coefficient)
        self.terms: dict[ShuffleTree, Fraction] = {t: c for t, c in collected.items() if c != 0}
        self.arity = arity

    @classmethod
    def parse(cls, text: str, generators: Optional[Mapping[str, Generator]] = None) -> "TreePolynomial":
        """Read ``lam(1, mu(2, 3)) - mu(lam(1, 2), 3) - mu(lam(1, 3), 2)`` or ``lhs = rhs``."""
        return cls(parse_linear_combination(text, generators))

    @classmethod
    def monomial(cls, tree: ShuffleTree, coefficient: Scalar = 1) -> "TreePolynomial":
        return cls([(coefficient, tree)])

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, tree: ShuffleTree) -> Fraction:
        return self.terms.get(tree, Fraction(0))

    def trees(self) -> list[ShuffleTree]:
        return list(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TreePolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "TreePolynomial") -> "TreePolynomial":
        merged = [(c, t) for t, c in self.terms.items()] + [(c, t) for t, c in other.terms.items()]
        return TreePolynomial(merged, arity=self.arity if self.arity is not None else other.arity)

    def __neg__(self) -> "TreePolynomial":
        return TreePolynomial([(-c, t) for t, c in self.terms.items()], arity=self.arity)

    def __sub__(self, other: "TreePolynomial") -> "TreePolynomial":
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> "TreePolynomial":
        return TreePolynomial([(c * scalar, t) for t, c in self.terms.items()], arity=self.arity)

    __rmul__ = __mul__

    def leading_term(self, order: MonomialOrder) -> ShuffleTree:
        """
        Raises:
            ZeroPolynomial: If there are no terms
        """
        if not self.terms:
            raise ZeroPolynomial("The zero polynomial has no leading term")
        return order.leading(self.terms)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self.terms[self.leading_term(order)]

    def monic(self, order: MonomialOrder) -> "TreePolynomial":
        """Scale so the leading coefficient is 1."""
        return self * (1 / self.leading_coefficient(order))

    def sorted_terms(self, order: Optional[MonomialOrder] = None) -> list[tuple[Fraction, ShuffleTree]]:
        """Terms in decreasing order, or by canonical text without an order."""
        trees = order.sort(self.terms) if order is not None else sorted(self.terms)
        return [(self.terms[t], t) for t in trees]

    def format(self, order: Optional[MonomialOrder] = None) -> str:
        """Text that ``TreePolynomial.parse`` reads back, e.g. ``mu(1, 2) - 1/2 lam(1, 2)``."""
        if not self.terms:
            return "0"
        parts = []
        for index, (coefficient, tree) in enumerate(self.sorted_terms(order)):
            sign = "-" if coefficient < 0 else "+"
            magnitude = abs(coefficient)
            body = tree.text if magnitude == 1 else f"{magnitude} {tree.text}"
            if index == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def to_record(self, order: Optional[MonomialOrder] = None) -> PolynomialRecord:
        return PolynomialRecord(
            text=self.format(order),
            terms=[TermRecord(tree=t.text, coefficient=str(c)) for c, t in self.sorted_terms(order)],
        )

    def generators(self) -> dict[str, Generator]:
        found: dict[str, Generator] = {}
        for tree in self.terms:
            for name, generator in generators_of(tree).items():
                found.setdefault(name, generator)
        return found

    def is_homogeneous(self) -> bool:
        """All terms use every generator the same number of times."""
        return len({multidegree(t) for t in self.terms}) <= 1

    def __repr__(self) -> str:
        return f"TreePolynomial({self.format()!r})"

    def __str__(self) -> str:
        return self.format()


def multidegree(tree: ShuffleTree) -> tuple[tuple[str, int], ...]:
    """Number of vertices per generator name, sorted by name."""
    counts: Counter[str] = Counter()

    def visit(node: ShuffleTree) -> None:
        if node.is_leaf:
            return
        counts[node.generator.name] += 1
        for child in node.children:
            visit(child)

    visit(tree)
    return tuple(sorted(counts.items()))


def leading_monomial(p: TreePolynomial, order: MonomialOrder) -> ShuffleTree:
    """
    Raises:
        ZeroPolynomial: If ``p`` is zero
    """
    return p.leading_term(order)
