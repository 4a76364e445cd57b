"""
Law Harnesses for Ordered Monoids

Sampling and exhaustive checks of the monoid axioms, translation invariance
of the order, and confluence of the QM rewriting system. Harnesses never
raise on a broken law: they return a ``LawReport`` listing the first
counterexamples, so a caller can print them or turn them into an exit code.
"""

import logging
from itertools import product
from typing import Callable, Hashable, Sequence

import numpy as np
from pydantic import BaseModel, Field

from monoids.base import Comparison, Monoid
from monoids.free import FreeMonoid, Word
from monoids.quantum import (
    QMElement,
    critical_pairs,
    decode_row,
    encode_words,
    normal_word,
    qm_from_word,
    reachable_normal_forms,
    rewrite_rows,
    rewrite_width,
)

logger = logging.getLogger(__name__)

MAX_COUNTEREXAMPLES = 10

Sampler = Callable[[np.random.Generator], Hashable]


class LawReport(BaseModel):
    """Outcome of one law harness."""

    name: str = Field(description="Which law was checked, and on what")
    trials: int = Field(ge=0, description="Cases drawn or enumerated")
    checked: int = Field(default=0, ge=0, description="Cases where the law's premise applied")
    failures: int = Field(default=0, ge=0, description="Cases violating the law")
    counterexamples: list[str] = Field(
        default_factory=list,
        description=f"First {MAX_COUNTEREXAMPLES} violations, rendered as text",
    )

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, description: str) -> None:
        self.failures += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(description)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{verdict} {self.name}: {self.checked}/{self.trials} checked, {self.failures} failures"


def qm_sampler(max_exponent: int = 10) -> Callable[[np.random.Generator], QMElement]:
    """Uniform QM elements with every exponent in 0..max_exponent."""

    def sample(rng: np.random.Generator) -> QMElement:
        k, l, m = (int(e) for e in rng.integers(0, max_exponent + 1, size=3))
        return QMElement(k, l, m)

    return sample


def free_word_sampler(monoid: FreeMonoid, max_length: int = 6) -> Callable[[np.random.Generator], Word]:
    def sample(rng: np.random.Generator) -> Word:
        length = int(rng.integers(0, max_length + 1))
        return tuple(monoid.alphabet[int(i)] for i in rng.integers(0, len(monoid.alphabet), size=length))

    return sample


def qm_elements(max_exponent: int) -> list[QMElement]:
    """Every QM element with all exponents at most ``max_exponent``."""
    bound = range(max_exponent + 1)
    return [QMElement(k, l, m) for k, l, m in product(bound, bound, bound)]


def _check_translations(monoid: Monoid, a, b, c, report: LawReport) -> None:
    """Record a violation if a < b does not survive multiplying by c on either side."""
    fmt = monoid.format
    if monoid.compare(monoid.multiply(a, c), monoid.multiply(b, c)) is not Comparison.LESS:
        report.record(f"right translation: {fmt(a)} < {fmt(b)} but not {fmt(a)}*{fmt(c)} < {fmt(b)}*{fmt(c)}")
    if monoid.compare(monoid.multiply(c, a), monoid.multiply(c, b)) is not Comparison.LESS:
        report.record(f"left translation: {fmt(a)} < {fmt(b)} but not {fmt(c)}*{fmt(a)} < {fmt(c)}*{fmt(b)}")


def check_ordered_monoid(monoid: Monoid, sampler: Sampler, trials: int, seed: int = 7) -> LawReport:
    """
    Sample triples and check associativity, the identity laws and translation
    invariance of the order.

    Args:
        monoid: Ordered monoid under test
        sampler: Draws one element from a numpy generator
        trials: Number of triples (>= 1)
        seed: Seed of the numpy generator

    Returns:
        LawReport; ``checked`` counts triples whose first two elements compared
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = np.random.default_rng(seed)
    report = LawReport(name=f"ordered monoid {monoid.name}", trials=trials)
    fmt, one = monoid.format, monoid.identity

    for _ in range(trials):
        a, b, c = sampler(rng), sampler(rng), sampler(rng)
        if monoid.multiply(monoid.multiply(a, b), c) != monoid.multiply(a, monoid.multiply(b, c)):
            report.record(f"associativity fails on ({fmt(a)}, {fmt(b)}, {fmt(c)})")
        if monoid.multiply(a, one) != a or monoid.multiply(one, a) != a:
            report.record(f"identity law fails on {fmt(a)}")
        verdict = monoid.compare(a, b)
        if verdict is Comparison.INCOMPARABLE or verdict is Comparison.EQUAL:
            continue
        report.checked += 1
        if verdict is Comparison.GREATER:
            a, b = b, a
        _check_translations(monoid, a, b, c, report)

    logger.info(report.summary())
    return report


def check_translation_invariance(monoid: Monoid, elements: Sequence) -> LawReport:
    """
    Exhaustive translation invariance over all triples of ``elements``.

    Pairs are visited once each (a < b after sorting), every element serving
    as the translating factor.
    """
    ordered = sorted(elements, key=monoid.sort_key)
    report = LawReport(name=f"translation invariance of {monoid.name}", trials=len(ordered) ** 3)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if monoid.compare(a, b) is not Comparison.LESS:
                continue
            for c in ordered:
                report.checked += 1
                _check_translations(monoid, a, b, c, report)
    logger.info(report.summary())
    return report


def check_rewriting(max_length: int, schedules: int = 50, seed: int = 7) -> LawReport:
    """
    Rewrite every word over {x, y, q} of length <= ``max_length`` with
    ``schedules`` random redex choices each and compare with the normal form.

    All words and schedules run as one batch of encoded rows. Also resolves
    the critical pairs of the three rules, which together with termination
    makes the system confluent on all words.
    """
    rng = np.random.default_rng(seed)
    words = ["".join(letters) for n in range(max_length + 1) for letters in product("xyq", repeat=n)]
    report = LawReport(name=f"QM rewriting, words of length <= {max_length}", trials=len(words) * schedules)

    for overlap, left, right in critical_pairs():
        if reachable_normal_forms(left) != reachable_normal_forms(right):
            report.record(f"critical pair {overlap} splits into {left} and {right}")

    width = rewrite_width(max_length)
    expected = np.repeat(encode_words([normal_word(qm_from_word(w)) for w in words], width), schedules, axis=0)
    reached = rewrite_rows(np.repeat(encode_words(words, width), schedules, axis=0), rng)
    report.checked += len(reached)
    for row in np.flatnonzero((reached != expected).any(axis=1)):
        word = words[row // schedules]
        report.record(f"{word or '1'} rewrote to {decode_row(reached[row])}, expected {decode_row(expected[row])}")

    logger.info(report.summary())
    return report
