"""
Monoid Contract

Every order source in the project is a monoid: an identity, an associative
product and, optionally, a strict order invariant under left and right
translation. Comparators everywhere in the repository answer with a
``Comparison`` rather than a boolean so partial orders can say
"incomparable".
"""

from abc import ABC, abstractmethod
from enum import Enum
from functools import reduce
from typing import Any, Generic, Hashable, Iterable, TypeVar

Element = TypeVar("Element", bound=Hashable)


class UnknownLetter(ValueError):
    """Raised when a word uses a letter outside the monoid's alphabet"""


class Comparison(str, Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"

    def flip(self) -> "Comparison":
        """The verdict with the arguments swapped."""
        if self is Comparison.LESS:
            return Comparison.GREATER
        if self is Comparison.GREATER:
            return Comparison.LESS
        return self

    @classmethod
    def of_keys(cls, left: Any, right: Any) -> "Comparison":
        """Compare two sort keys of a total order."""
        if left < right:
            return cls.LESS
        if left > right:
            return cls.GREATER
        return cls.EQUAL


class Monoid(ABC, Generic[Element]):
    """
    Abstract monoid with an optional translation-invariant order.

    Subclasses implement ``identity``, ``multiply``, ``format`` and ``parse``.
    Ordered monoids either override ``compare`` (partial orders) or
    ``sort_key`` (total orders, smaller key means smaller element).
    """

    name: str = "monoid"

    @property
    @abstractmethod
    def identity(self) -> Element:
        ...

    @abstractmethod
    def multiply(self, a: Element, b: Element) -> Element:
        ...

    @abstractmethod
    def format(self, a: Element) -> str:
        ...

    @abstractmethod
    def parse(self, text: str) -> Element:
        ...

    def product(self, elements: Iterable[Element]) -> Element:
        return reduce(self.multiply, elements, self.identity)

    @property
    def is_ordered(self) -> bool:
        return self.is_total or type(self).compare is not Monoid.compare

    @property
    def is_total(self) -> bool:
        return type(self).sort_key is not Monoid.sort_key

    def sort_key(self, a: Element) -> Any:
        raise NotImplementedError(f"{self.name} does not carry a total order")

    def compare(self, a: Element, b: Element) -> Comparison:
        if not self.is_total:
            raise NotImplementedError(f"{self.name} does not carry an order")
        return Comparison.of_keys(self.sort_key(a), self.sort_key(b))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"
