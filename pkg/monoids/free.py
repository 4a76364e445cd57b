"""
Free monoid on a finite alphabet, ordered by length then lexicographically.

Words are tuples of letters. Path sequences of trees live here, with the
generator names as the alphabet.
"""

from typing import Sequence

from monoids.base import Monoid, UnknownLetter

Word = tuple[str, ...]


class FreeMonoid(Monoid[Word]):
    """
    Free monoid T(alphabet) with the length-then-lexicographic order.

    Args:
        alphabet: Letters in increasing order; the order is used by ``sort_key``
    """

    def __init__(self, alphabet: Sequence[str], name: str = "free"):
        if len(set(alphabet)) != len(alphabet):
            raise ValueError(f"Alphabet has repeated letters: {list(alphabet)}")
        self.alphabet = tuple(alphabet)
        self.name = name
        self._rank = {letter: i for i, letter in enumerate(self.alphabet)}

    @property
    def identity(self) -> Word:
        return ()

    def letter(self, name: str) -> Word:
        if name not in self._rank:
            raise UnknownLetter(f"'{name}' is not in the alphabet {list(self.alphabet)}")
        return (name,)

    def multiply(self, a: Word, b: Word) -> Word:
        return a + b

    def sort_key(self, a: Word) -> tuple[int, tuple[int, ...]]:
        return len(a), tuple(self._rank[letter] for letter in a)

    def format(self, a: Word) -> str:
        if not a:
            return "1"
        if all(len(letter) == 1 for letter in self.alphabet):
            return "".join(a)
        return ".".join(a)

    def parse(self, text: str) -> Word:
        text = text.strip()
        if text in ("", "1"):
            return ()
        if text in self._rank:
            return (text,)
        if "." in text:
            letters = tuple(part.strip() for part in text.split("."))
        else:
            letters = tuple(text)
        for letter in letters:
            if letter not in self._rank:
                raise UnknownLetter(f"'{letter}' is not in the alphabet {list(self.alphabet)}")
        return letters
