"""
Quantum Monomials

QM is the monoid generated by x, y, q subject to xq = qx, yq = qy and
yx = xyq. Every element has a unique representative x^k y^l q^m, so elements
are stored as exponent triples and multiplied in constant time:

    (k, l, m) * (k', l', m') = (k + k', l + l', m + m' + l k')

The admissible order compares k first with the larger exponent being
SMALLER, then l, then m:

    x^k y^l q^m < x^k' y^l' q^m'  iff  k > k', or k = k' and l < l',
                                        or k = k', l = l' and m < m'

so x < xy < y. Three more variants exist for experiments; ``q-first`` is the
one that is not translation invariant and is used to show the harnesses do
catch broken orders.

Example:
    >>> qm_from_word("yxx")
    QMElement(k=2, l=1, m=2)
    >>> QuantumMonoid().format(QMElement(1, 1, 1))
    'xyq'
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Sequence, Union

import numpy as np
import pyparsing as pp

from monoids.base import Comparison, Monoid, UnknownLetter

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QMElement:
    """x^k y^l q^m as an exponent triple."""

    k: int = 0
    l: int = 0
    m: int = 0

    def __post_init__(self):
        if min(self.k, self.l, self.m) < 0:
            raise ValueError(f"QM exponents must be >= 0, got {(self.k, self.l, self.m)}")

    def __mul__(self, other: "QMElement") -> "QMElement":
        return qm_mul(self, other)

    def __str__(self) -> str:
        return format_qm(self)


QM_IDENTITY = QMElement()
X, Y, Q = QMElement(1, 0, 0), QMElement(0, 1, 0), QMElement(0, 0, 1)
_LETTERS = {"x": X, "y": Y, "q": Q}

# Oriented so that q travels right and x travels left of y.
QM_RULES: tuple[tuple[str, str], ...] = (("qx", "xq"), ("qy", "yq"), ("yx", "xyq"))


def qm_mul(a: QMElement, b: QMElement) -> QMElement:
    return QMElement(a.k + b.k, a.l + b.l, a.m + b.m + a.l * b.k)


def qm_power(a: QMElement, exponent: int) -> QMElement:
    result = QM_IDENTITY
    for _ in range(exponent):
        result = qm_mul(result, a)
    return result


def qm_from_word(word: Union[str, Iterable[str]]) -> QMElement:
    """
    Normal form of a word over {x, y, q}.

    Raises:
        UnknownLetter: If the word uses any other letter
    """
    result = QM_IDENTITY
    for letter in word:
        if letter not in _LETTERS:
            raise UnknownLetter(f"'{letter}' is not one of x, y, q")
        result = qm_mul(result, _LETTERS[letter])
    return result


def qm_compare(a: QMElement, b: QMElement) -> Comparison:
    return _STANDARD.compare(a, b)


def normal_word(a: QMElement) -> str:
    """The word x^k y^l q^m spelled out letter by letter."""
    return "x" * a.k + "y" * a.l + "q" * a.m


def format_qm(a: QMElement) -> str:
    if a == QM_IDENTITY:
        return "1"
    parts = []
    for letter, exponent in (("x", a.k), ("y", a.l), ("q", a.m)):
        if exponent == 1:
            parts.append(letter)
        elif exponent > 1:
            parts.append(f"{letter}^{exponent}")
    return "".join(parts)


_POWER = pp.Group(
    pp.one_of("x y q") + pp.Opt(pp.Suppress("^") + pp.Word(pp.nums), default="1")
)
_QM_WORD = pp.OneOrMore(_POWER)


def parse_qm(text: str) -> QMElement:
    """
    Parse ``x^2 y q``, ``x^2yq`` or any product of powers such as ``yx``.

    The product is evaluated in QM, so non-normal words are accepted and
    normalized.
    """
    text = text.strip()
    if text in ("", "1"):
        return QM_IDENTITY
    try:
        powers = _QM_WORD.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise UnknownLetter(f"Cannot read '{text}' as a QM element: {e}") from e
    result = QM_IDENTITY
    for letter, exponent in powers:
        result = qm_mul(result, qm_power(_LETTERS[letter], int(exponent)))
    return result


class QMVariant(str, Enum):
    STANDARD = "standard"
    REVERSED_L = "reversed-l"
    REVERSED_M = "reversed-m"
    Q_FIRST = "q-first"


class QuantumMonoid(Monoid[QMElement]):
    """QM with one of the exponent orders; ``standard`` is the admissible one."""

    def __init__(self, variant: Union[QMVariant, str] = QMVariant.STANDARD):
        self.variant = QMVariant(variant)
        self.name = "qm" if self.variant is QMVariant.STANDARD else f"qm:{self.variant.value}"

    @property
    def identity(self) -> QMElement:
        return QM_IDENTITY

    def multiply(self, a: QMElement, b: QMElement) -> QMElement:
        return qm_mul(a, b)

    def sort_key(self, a: QMElement) -> tuple[int, int, int]:
        if self.variant is QMVariant.STANDARD:
            return -a.k, a.l, a.m
        if self.variant is QMVariant.REVERSED_L:
            return -a.k, -a.l, a.m
        if self.variant is QMVariant.REVERSED_M:
            return -a.k, a.l, -a.m
        return a.m, -a.k, a.l

    def format(self, a: QMElement) -> str:
        return format_qm(a)

    def parse(self, text: str) -> QMElement:
        return parse_qm(text)


_STANDARD = QuantumMonoid()


def redexes(word: str) -> list[tuple[int, int]]:
    """(position, rule index) of every rule application available in ``word``."""
    found = []
    for position in range(len(word) - 1):
        pair = word[position : position + 2]
        for index, (left, _) in enumerate(QM_RULES):
            if pair == left:
                found.append((position, index))
    return found


def apply_rule(word: str, position: int, rule_index: int) -> str:
    left, right = QM_RULES[rule_index]
    if word[position : position + len(left)] != left:
        raise ValueError(f"Rule {left}->{right} does not apply to '{word}' at {position}")
    return word[:position] + right + word[position + len(left) :]


# Row encoding for batched rewriting; _PAD fills the unused tail of a row.
_X, _Y, _Q, _PAD = 0, 1, 2, 3
_CODES = {"x": _X, "y": _Y, "q": _Q}
REWRITE_MAX_STEPS = 10_000


def rewrite_width(max_length: int) -> int:
    """Row width for words up to ``max_length``: every yx inversion adds one q."""
    return max_length + max_length * max_length // 4 + 1


def encode_words(words: Sequence[str], width: int) -> np.ndarray:
    rows = np.full((len(words), width), _PAD, dtype=np.int8)
    for i, word in enumerate(words):
        if len(word) >= width:
            raise ValueError(f"'{word}' does not fit a row of width {width}")
        rows[i, : len(word)] = [_CODES[letter] for letter in word]
    return rows


def decode_row(row: np.ndarray) -> str:
    return "".join("xyq"[code] for code in row.tolist() if code != _PAD)


def rewrite_rows(rows: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    """
    Rewrite every encoded row until irreducible, each row on its own schedule.

    At every step each unfinished row applies one redex drawn uniformly from
    the redexes it has; the draws for all rows come from one batch of
    uniforms per step. Rows must leave room for the q letters that yx -> xyq
    inserts (see ``rewrite_width``).

    Raises:
        RuntimeError: If some row is still reducible after REWRITE_MAX_STEPS steps
    """
    state = rows.copy()
    columns = np.arange(state.shape[1])
    active = np.arange(len(state))
    for _ in range(REWRITE_MAX_STEPS):
        words = state[active]
        left, right = words[:, :-1], words[:, 1:]
        mask = ((left == _Q) & ((right == _X) | (right == _Y))) | ((left == _Y) & (right == _X))
        live = mask.any(axis=1)
        active, words, mask = active[live], words[live], mask[live]
        if len(active) == 0:
            return state
        # Redex cells score in [1, 2), the rest in [0, 1): argmax is uniform over redexes.
        position = (rng.random(mask.shape, dtype=np.float32) + mask).argmax(axis=1)
        index = np.arange(len(active))
        moves_q = words[index, position] == _Q

        # qx -> xq and qy -> yq swap in place.
        qi, qp = index[moves_q], position[moves_q]
        words[qi, qp] = words[qi, qp + 1]
        words[qi, qp + 1] = _Q

        # yx -> xyq shifts the tail one cell right; the last cell is always padding.
        yi, yp = index[~moves_q], position[~moves_q][:, None]
        if len(yi):
            block = words[yi]
            shifted = np.concatenate([block[:, :1], block[:, :-1]], axis=1)
            words[yi] = np.select(
                [columns < yp, columns == yp, columns == yp + 1, columns == yp + 2],
                [block, _X, _Y, _Q],
                default=shifted,
            )
        state[active] = words
    raise RuntimeError(f"Rewriting did not terminate within {REWRITE_MAX_STEPS} steps for {len(active)} rows")


def rewrite_randomly(word: str, rng: np.random.Generator) -> str:
    """Rewrite until irreducible, choosing the next redex uniformly at random."""
    rows = encode_words([word], rewrite_width(len(word)))
    return decode_row(rewrite_rows(rows, rng)[0])


@lru_cache(maxsize=None)
def reachable_normal_forms(word: str) -> frozenset[str]:
    """Every irreducible word reachable from ``word``, over all rewrite schedules."""
    available = redexes(word)
    if not available:
        return frozenset({word})
    result: set[str] = set()
    for position, rule_index in available:
        result |= reachable_normal_forms(apply_rule(word, position, rule_index))
    return frozenset(result)


def critical_pairs() -> list[tuple[str, str, str]]:
    """
    Overlaps of two rule left-hand sides with both one-step rewrites.

    Returns:
        (overlap word, result of the first rule, result of the second rule)
    """
    pairs = []
    for i, (left_i, _) in enumerate(QM_RULES):
        for j, (left_j, _) in enumerate(QM_RULES):
            if left_i[1] == left_j[0]:
                word = left_i + left_j[1]
                pairs.append((word, apply_rule(word, 0, i), apply_rule(word, 1, j)))
    return pairs
