"""
Acceptance Runner

Runs the ten acceptance criteria at full size, times each one and writes a
summary report plus a detailed log.

What this runs:
1. QM rewriting: every word of length <= 8, 50 random schedules each
2. QM ordered monoid: exhaustive triples with exponents <= 4, 10^4 random triples
3. Ordered word operads over QM and the free monoid, 10^4 contexts each
4. Path sequence and permutation of a(b(1, 3), 2)
5. Leading terms of the expanded Leibniz relations
6. Poisson relations form a Groebner basis up to arity 4
7. Poisson dimensions n! for n <= 6, normal forms against the oracle
8. Com and Lie dimensions and bases under two orders
9. Morphism laws on 10^4 compositions, injectivity up to arity 5
10. Two identical gb runs print byte-identical JSON

Usage:
    python scripts/run_acceptance.py

    # Skip the arity-6 dimension checks
    python scripts/run_acceptance.py --quick
"""

import argparse
import contextlib
import io
import logging
import math
import sys
import time
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Optional

# Add project root to path so we can import our modules
sys.path.insert(0, str(Path(__file__).parent.parent))

from cli.main import main as cli_main
from groebner.buchberger import buchberger
from groebner.dimensions import count_normal_forms, ideal_dimension_oracle
from groebner.reduction import autoreduce
from monoids.free import FreeMonoid
from monoids.laws import (
    check_ordered_monoid,
    check_rewriting,
    check_translation_invariance,
    free_word_sampler,
    qm_elements,
    qm_sampler,
)
from monoids.quantum import QuantumMonoid
from operads.laws import check_injectivity, check_morphism_laws, check_ordered_operad
from operads.word_operad import path_sequence, permutation_of
from orders.monomial_order import build_pathlex_order, build_poisson_order
from orders.stages import WordStage
from presentations.presentation import builtin
from trees.syntax import parse_tree

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    handlers=[logging.StreamHandler(sys.stderr), logging.FileHandler("acceptance.log", mode="w")],
)
logger = logging.getLogger(__name__)

SEED = 7
TRIALS = 10_000


class AcceptanceReport:
    """Container for criterion results and metrics"""

    def __init__(self):
        self.start_time = datetime.now()
        self.steps: list[dict[str, Any]] = []
        self.metrics: dict[str, Any] = {}
        self.errors: list[str] = []

    def log_step(self, name: str, status: str, duration: Optional[float] = None, details: Optional[str] = None):
        self.steps.append(
            {
                "name": name,
                "status": status,
                "timestamp": datetime.now().isoformat(),
                "duration_seconds": duration,
                "details": details,
            }
        )
        duration_str = f" ({duration:.2f}s)" if duration is not None else ""
        logger.info(f"{'✓' if status == 'PASS' else '✗'} {name}: {status}{duration_str}")
        if details:
            logger.info(f"  Details: {details}")

    def add_metric(self, name: str, value: Any):
        self.metrics[name] = value
        logger.info(f"Metric - {name}: {value}")

    def add_error(self, error: str):
        self.errors.append(error)
        logger.error(f"Error: {error}")

    def generate_summary(self) -> str:
        duration = (datetime.now() - self.start_time).total_seconds()
        passed = sum(1 for s in self.steps if s["status"] == "PASS")
        failed = sum(1 for s in self.steps if s["status"] == "FAIL")

        summary = f"""
{'=' * 80}
ACCEPTANCE REPORT
{'=' * 80}
Start Time:     {self.start_time.isoformat()}
Duration:       {duration:.2f} seconds
Criteria:       {len(self.steps)}
Passed:         {passed}
Failed:         {failed}
{'=' * 80}

METRICS:
"""
        for name, value in self.metrics.items():
            summary += f"  {name:40s}: {value}\n"

        summary += f"\n{'=' * 80}\nCRITERIA:\n"
        for i, step in enumerate(self.steps, 1):
            summary += f"\n{i}. {'✓' if step['status'] == 'PASS' else '✗'} {step['name']} - {step['status']}\n"
            if step["duration_seconds"] is not None:
                summary += f"   Duration: {step['duration_seconds']:.2f}s\n"
            if step["details"]:
                summary += f"   {step['details']}\n"

        if self.errors:
            summary += f"\n{'=' * 80}\nERRORS:\n"
            for err in self.errors:
                summary += f"  {err}\n"

        summary += f"\n{'=' * 80}\n"
        summary += f"Overall Status: {'PASS' if failed == 0 else 'FAIL'}\n"
        summary += f"{'=' * 80}\n"
        return summary


def run_criterion(report: AcceptanceReport, name: str, body: Callable[[], tuple[bool, str]]) -> None:
    """Time ``body``; it returns (passed, details)."""
    logger.info("=" * 80)
    logger.info(name)
    logger.info("=" * 80)
    start = time.time()
    try:
        passed, details = body()
    except Exception as e:
        report.log_step(name, "FAIL", time.time() - start, str(e))
        report.add_error(f"{name}: {e}")
        return
    report.log_step(name, "PASS" if passed else "FAIL", time.time() - start, details)
    if not passed:
        report.add_error(f"{name}: {details}")


def rewriting() -> tuple[bool, str]:
    law = check_rewriting(max_length=8, schedules=50, seed=SEED)
    return law.passed, law.summary()


def ordered_monoid() -> tuple[bool, str]:
    qm = QuantumMonoid()
    exhaustive = check_translation_invariance(qm, qm_elements(4))
    sampled = check_ordered_monoid(qm, qm_sampler(10), TRIALS, SEED)
    return exhaustive.passed and sampled.passed, f"{exhaustive.summary()}; {sampled.summary()}"


def ordered_operads() -> tuple[bool, str]:
    free = FreeMonoid(("a", "b"))
    over_qm = check_ordered_operad(QuantumMonoid(), qm_sampler(), TRIALS, SEED, max_arity=5)
    over_free = check_ordered_operad(free, free_word_sampler(free), TRIALS, SEED, max_arity=5)
    return over_qm.passed and over_free.passed, f"{over_qm.summary()}; {over_free.summary()}"


def path_example() -> tuple[bool, str]:
    tree = parse_tree("a(b(1, 3), 2)")
    paths, reading = path_sequence(tree).format(), permutation_of(tree)
    return paths == "(ab, a, ab)" and reading == (1, 3, 2), f"paths {paths}, permutation {reading}"


def leibniz_leading_terms() -> tuple[bool, str]:
    pois = builtin("pois")
    order = build_poisson_order(pois.generators)
    expected = ["lam(1, mu(2, 3))", "lam(mu(1, 3), 2)", "lam(mu(1, 2), 3)"]
    found = [r.leading_term(order).text for r in pois.shuffle_relations[:3]]
    return found == expected, f"leading terms {found}"


def poisson_basis() -> tuple[bool, str]:
    pois = builtin("pois")
    order = build_poisson_order(pois.generators)
    result = buchberger(pois.shuffle_relations, order, max_arity=4)
    inputs = [g.format(order) for g in autoreduce(pois.shuffle_relations, order)]
    basis = [record.text for record in result.basis]
    same = inputs == basis and len(basis) == len(pois.shuffle_relations)
    return result.is_groebner and same, (
        f"{result.processed_overlaps} overlaps, {len(result.survivors)} survivors, "
        f"basis is the self-reduced input: {same}"
    )


def _dimension_rows(name: str, max_arity: int, expected: Callable[[int], int]) -> tuple[bool, str]:
    presentation = builtin(name)
    order = build_poisson_order(presentation.generators)
    result = buchberger(presentation.shuffle_relations, order, max_arity=4)
    leading = [parse_tree(t, presentation.generator_map) for t in result.leading_terms]
    ok = result.is_groebner
    rows = []
    for n in range(1, max_arity + 1):
        counted = count_normal_forms(leading, presentation.generators, n)
        oracle = ideal_dimension_oracle(presentation.shuffle_relations, presentation.generators, n, order)
        ok = ok and counted == oracle == expected(n)
        rows.append(f"{n}:{counted}/{oracle}")
    return ok, f"{name} normal forms/oracle " + ", ".join(rows)


def poisson_dimensions(max_arity: int) -> Callable[[], tuple[bool, str]]:
    return lambda: _dimension_rows("pois", max_arity, math.factorial)


def sub_presentations(max_arity: int) -> Callable[[], tuple[bool, str]]:
    def body() -> tuple[bool, str]:
        com_ok, com_details = _dimension_rows("com", max_arity, lambda n: 1)
        lie_ok, lie_details = _dimension_rows("lie", max_arity, lambda n: math.factorial(n - 1))
        verdicts = []
        for name in ("com", "lie"):
            presentation = builtin(name)
            for order in (build_poisson_order(presentation.generators), build_pathlex_order(presentation.generators)):
                result = buchberger(presentation.shuffle_relations, order, max_arity=4)
                verdicts.append(result.is_groebner)
        return com_ok and lie_ok and all(verdicts), f"{com_details}; {lie_details}; bases {verdicts}"

    return body


def morphisms() -> tuple[bool, str]:
    pois = builtin("pois")
    order = build_poisson_order(pois.generators)
    stage = next(s for s in order.stages if isinstance(s, WordStage))
    laws = check_morphism_laws(pois.generators, stage.assignment, TRIALS, SEED, max_arity=5)
    injective = check_injectivity(pois.generators, max_arity=5)
    passed = all(law.passed for law in laws) and injective.passed
    return passed, "; ".join(law.summary() for law in laws + [injective])


def determinism() -> tuple[bool, str]:
    outputs = []
    for _ in range(2):
        buffer = io.StringIO()
        with contextlib.redirect_stdout(buffer):
            status = cli_main(["gb", "--preset", "pois", "--order", "poisson-qm", "--format", "json", "--seed", "7"])
        outputs.append((status, buffer.getvalue()))
    same = outputs[0] == outputs[1]
    return same and outputs[0][0] == 0, f"exit {outputs[0][0]}, {len(outputs[0][1])} bytes, identical: {same}"


def main():
    """Run every acceptance criterion"""
    parser = argparse.ArgumentParser(description="Run the acceptance criteria and write a report")
    parser.add_argument("--quick", action="store_true", help="Dimensions up to arity 5 instead of 6")
    args = parser.parse_args()

    max_arity = 5 if args.quick else 6
    report = AcceptanceReport()
    logger.info(f"Running acceptance criteria (dimensions up to arity {max_arity})")

    run_criterion(report, "1. QM normal forms are unique", rewriting)
    run_criterion(report, "2. QM is an ordered monoid", ordered_monoid)
    run_criterion(report, "3. Word operads are ordered", ordered_operads)
    run_criterion(report, "4. Path sequence and permutation example", path_example)
    run_criterion(report, "5. Leibniz leading terms", leibniz_leading_terms)
    run_criterion(report, "6. Poisson quadratic Groebner basis", poisson_basis)
    run_criterion(report, "7. Poisson dimensions", poisson_dimensions(max_arity))
    run_criterion(report, "8. Com and Lie sub-presentations", sub_presentations(max_arity))
    run_criterion(report, "9. Morphism laws and injectivity", morphisms)
    run_criterion(report, "10. Deterministic JSON reports", determinism)

    report.add_metric("Dimension arity bound", max_arity)
    summary = report.generate_summary()
    print(summary)

    report_path = Path("acceptance_report.txt")
    report_path.write_text(summary, encoding="utf-8")
    logger.info(f"Full report saved to: {report_path.absolute()}")
    logger.info("Detailed log saved to: acceptance.log")

    return 1 if report.errors else 0


if __name__ == "__main__":
    sys.exit(main())
