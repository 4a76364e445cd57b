"""
wordorders command line

Commands:
    gb         Complete the relations of a presentation and report the basis
    dims       Normal-form counts next to exact-rank ideal dimensions
    check      Property suites (ordered monoids, word operads, admissibility, ...)
    compare    Compare two trees stage by stage
    normalize  Reduce a polynomial modulo the completed relations

Usage:
    wordorders gb --preset pois --order poisson-qm --max-arity 4
    wordorders gb --preset pois --format json > report.json
    wordorders dims --preset lie --max-arity 6
    wordorders check --suite qm --trials 10000
    wordorders compare "lam(1, mu(2, 3))" "mu(lam(1, 2), 3)"
    wordorders normalize "lam(1, mu(2, 3))"

Exit status: 0 on success, 1 on a negative verdict (survivors, dimension
mismatch, failed law, completion that does not stabilize), 2 on
configuration or parse errors, 3 on an unexpected failure (logged with its
traceback). Logs go to stderr, reports to stdout.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import BaseModel, Field, ValidationError, computed_field

from cli.config import CommandError, RunConfig, Settings
from groebner.buchberger import GroebnerError, buchberger
from groebner.dimensions import dimension_table
from groebner.polynomial import MixedArity, TreePolynomial, ZeroPolynomial
from groebner.reduction import reduce
from monoids.base import Comparison, UnknownLetter
from monoids.free import FreeMonoid
from monoids.laws import (
    LawReport,
    check_ordered_monoid,
    check_rewriting,
    check_translation_invariance,
    free_word_sampler,
    qm_elements,
    qm_sampler,
)
from monoids.quantum import QuantumMonoid
from operads.laws import check_injectivity, check_morphism_laws, check_ordered_operad
from operads.word_operad import LengthMismatch, MissingGenerator
from orders.admissibility import check_admissible
from orders.monomial_order import ArityMismatch, MonomialOrder, StageVerdict, WrongSignature
from orders.order_spec import OrderSpecError, order_by_name
from orders.stages import WordStage
from presentations.loader import PresentationSyntaxError, load_presentation
from presentations.presentation import InvalidPresentation, OperadPresentation, UnknownName, builtin
from presentations.symmetric import UnknownSymmetry, UnsupportedArity
from trees.shuffle_tree import InvalidComposition, InvalidGenerator, InvalidTree
from trees.syntax import TreeSyntaxError, parse_tree

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_NEGATIVE, EXIT_CONFIG, EXIT_INTERNAL = 0, 1, 2, 3
CHECK_MAX_ARITY = 5
REWRITING_MAX_LENGTH = 6
SUITES = ("qm", "free", "word-operad", "admissible", "morphisms", "injectivity", "rewriting")

# Bad flags, files, trees or order specs; anything else is a bug.
INPUT_ERRORS = (
    ValidationError,
    CommandError,
    FileNotFoundError,
    PresentationSyntaxError,
    InvalidPresentation,
    UnknownName,
    UnknownSymmetry,
    UnsupportedArity,
    TreeSyntaxError,
    InvalidTree,
    InvalidGenerator,
    InvalidComposition,
    OrderSpecError,
    WrongSignature,
    ArityMismatch,
    MissingGenerator,
    LengthMismatch,
    UnknownLetter,
    MixedArity,
    ZeroPolynomial,
)


class CheckReport(BaseModel):
    """All law reports of one ``check`` run."""

    suite: str
    seed: int
    reports: list[LawReport]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(report.passed for report in self.reports)


class ComparisonReport(BaseModel):
    order: str
    left: str
    right: str
    verdict: Comparison
    decided_by: Optional[str] = Field(description="Stage that separated the trees, None when equal")
    trace: list[StageVerdict]


def load(config: RunConfig) -> OperadPresentation:
    if config.file is not None:
        return load_presentation(config.file)
    return builtin(config.preset or "pois")


def _completion_bound(presentation: OperadPresentation, max_arity: int) -> int:
    """Overlap bound for completing relations of arity r: 2r - 2, capped by max_arity."""
    r = presentation.max_relation_arity
    return max(r, min(max_arity, 2 * r - 2))


def cmd_gb(config: RunConfig) -> int:
    presentation = load(config)
    order = order_by_name(config.order, presentation.generators)
    report = buchberger(presentation.shuffle_relations, order, config.max_arity, presentation.generators)
    if config.format == "json":
        print(report.to_json())
    else:
        print(f"Presentation: {presentation.name}")
        print(f"Order: {report.order} = {report.order_spec}")
        print(f"Basis ({len(report.basis)} elements):")
        for record in report.basis:
            print(f"  {record.text}")
        print(f"Leading terms: {', '.join(report.leading_terms) or '-'}")
        print(f"Overlaps processed: {report.processed_overlaps} in {report.rounds} rounds")
        print(f"Survivors: {len(report.survivors)}")
        for record in report.survivors:
            print(f"  {record.text}")
        print("Normal forms: " + ", ".join(f"{row.arity}:{row.normal_forms}" for row in report.dimensions))
        bound = " (some overlaps above the bound were not checked)" if report.bound_exceeded else ""
        verdict = "Groebner basis" if report.is_groebner else "NOT a Groebner basis"
        print(f"Verdict: {verdict} up to arity {report.max_arity}{bound}")
    return EXIT_OK if report.is_groebner else EXIT_NEGATIVE


def cmd_dims(config: RunConfig) -> int:
    presentation = load(config)
    order = order_by_name(config.order, presentation.generators)
    bound = _completion_bound(presentation, config.max_arity)
    report = buchberger(presentation.shuffle_relations, order, bound, presentation.generators)
    table = dimension_table(
        [parse_tree(t, presentation.generator_map) for t in report.leading_terms],
        presentation.shuffle_relations,
        presentation.generators,
        config.max_arity,
        order,
    )
    if config.format == "json":
        rows = json.loads(table.to_json(orient="records"))
        print(json.dumps({"presentation": presentation.name, "order": order.name, "rows": rows}, indent=2))
    else:
        print(f"Presentation: {presentation.name}, order {order.name}")
        print(table.to_string(index=False))
    return EXIT_OK if bool(table["match"].all()) else EXIT_NEGATIVE


def _word_assignment(order: MonomialOrder):
    for stage in order.stages:
        if isinstance(stage, WordStage):
            return stage.assignment
    raise CommandError(f"Order {order.name} has no word stage to check morphism laws against")


def run_suite(name: str, config: RunConfig, presentation: OperadPresentation) -> list[LawReport]:
    trials, seed, arity = config.trials, config.seed, config.max_arity
    if name == "qm":
        qm = QuantumMonoid()
        return [check_ordered_monoid(qm, qm_sampler(), trials, seed), check_translation_invariance(qm, qm_elements(2))]
    if name == "free":
        free = FreeMonoid(("a", "b"))
        return [check_ordered_monoid(free, free_word_sampler(free), trials, seed)]
    if name == "word-operad":
        if config.monoid == "qm":
            return [check_ordered_operad(QuantumMonoid(), qm_sampler(), trials, seed, arity)]
        free = FreeMonoid(("a", "b"))
        return [check_ordered_operad(free, free_word_sampler(free), trials, seed, arity)]
    if name == "admissible":
        order = order_by_name(config.order, presentation.generators)
        return [check_admissible(order, presentation.generators, trials, seed, arity)]
    if name == "morphisms":
        order = order_by_name(config.order, presentation.generators)
        return check_morphism_laws(presentation.generators, _word_assignment(order), trials, seed, arity)
    if name == "injectivity":
        return [check_injectivity(presentation.generators, arity)]
    if name == "rewriting":
        return [check_rewriting(REWRITING_MAX_LENGTH, seed=seed)]
    raise CommandError(f"Unknown suite '{name}'")


def cmd_check(config: RunConfig) -> int:
    presentation = load(config)
    names = SUITES if config.suite == "all" else (config.suite,)
    reports: list[LawReport] = []
    for name in names:
        reports.extend(run_suite(name, config, presentation))
    result = CheckReport(suite=config.suite, seed=config.seed, reports=reports)
    if config.format == "json":
        print(result.model_dump_json(indent=2))
    else:
        for report in reports:
            print(report.summary())
            for counterexample in report.counterexamples:
                print(f"  {counterexample}")
    return EXIT_OK if result.passed else EXIT_NEGATIVE


def cmd_compare(config: RunConfig, left: str, right: str) -> int:
    presentation = load(config)
    t1 = parse_tree(left, presentation.generator_map)
    t2 = parse_tree(right, presentation.generator_map)
    order = order_by_name(config.order, presentation.generators)
    trace = order.trace(t1, t2)
    verdict = order.compare(t1, t2)
    decided = trace[-1].stage if verdict is not Comparison.EQUAL else None
    result = ComparisonReport(
        order=order.name, left=t1.text, right=t2.text, verdict=verdict, decided_by=decided, trace=trace
    )
    if config.format == "json":
        print(result.model_dump_json(indent=2))
    else:
        for step in trace:
            print(f"{step.stage}: {step.left} vs {step.right} -> {step.verdict.value}")
        where = f" (decided at {decided})" if decided else ""
        print(f"{t1.text} {verdict.value} {t2.text}{where}")
    return EXIT_OK


def cmd_normalize(config: RunConfig, text: str) -> int:
    presentation = load(config)
    order = order_by_name(config.order, presentation.generators)
    polynomial = TreePolynomial.parse(text, presentation.generator_map)
    report = buchberger(presentation.shuffle_relations, order, config.max_arity, presentation.generators)
    basis = [TreePolynomial.parse(record.text, presentation.generator_map) for record in report.basis]
    normal = reduce(polynomial, basis, order)
    if config.format == "json":
        record = normal.to_record(order).model_dump()
        print(json.dumps({"input": polynomial.format(order), "normal_form": record}, indent=2))
    else:
        print(normal.format(order))
    return EXIT_OK


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    source = shared.add_mutually_exclusive_group()
    source.add_argument("--preset", help="Built-in presentation: com, ass, lie, pois (default pois)")
    source.add_argument("--file", type=Path, help="Presentation file")
    shared.add_argument(
        "--order", default="poisson-qm", help="poisson-qm, pathlex, poisson-qm-reversed-m or an order spec"
    )
    shared.add_argument("--max-arity", type=int, help="Overlap bound (gb, normalize) or largest arity (dims)")
    shared.add_argument("--trials", type=int, default=settings.trials, help="Random trials per suite")
    shared.add_argument("--seed", type=int, default=settings.seed, help="Random seed")
    shared.add_argument("--format", choices=["text", "json"], default="text", help="Output format")
    shared.add_argument(
        "--log-level", default=settings.log_level, help="Logging level (default from WORDORDERS_LOG_LEVEL)"
    )

    parser = argparse.ArgumentParser(
        prog="wordorders",
        description="Groebner bases for shuffle operads with orders from word operads",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  wordorders gb --preset pois --order poisson-qm --max-arity 4
  wordorders dims --preset pois --max-arity 6
  wordorders check --suite admissible --order poisson-qm
  wordorders compare "mu(1, mu(2, 3))" "mu(mu(1, 2), 3)"
        """,
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("gb", parents=[shared], help="Complete relations to a Groebner basis")
    commands.add_parser("dims", parents=[shared], help="Dimension table per arity")
    check = commands.add_parser("check", parents=[shared], help="Run property suites")
    check.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    check.add_argument("--monoid", choices=["qm", "free"], default="qm", help="Monoid for the word-operad suite")
    compare = commands.add_parser("compare", parents=[shared], help="Compare two trees")
    compare.add_argument("left", help="First tree, e.g. 'lam(1, mu(2, 3))'")
    compare.add_argument("right", help="Second tree")
    normalize = commands.add_parser("normalize", parents=[shared], help="Reduce a polynomial to normal form")
    normalize.add_argument("polynomial", help="Polynomial in tree syntax")
    return parser


def _default_max_arity(command: str, settings: Settings) -> int:
    if command == "dims":
        return settings.dims_max_arity
    if command == "check":
        return CHECK_MAX_ARITY
    return settings.gb_max_arity


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Command-line interface"""
    settings = Settings()
    args = build_parser(settings).parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.INFO),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )

    try:
        config = RunConfig(
            command=args.command,
            preset=args.preset,
            file=args.file,
            order=args.order,
            max_arity=args.max_arity if args.max_arity is not None else _default_max_arity(args.command, settings),
            trials=args.trials,
            seed=args.seed,
            format=args.format,
            suite=getattr(args, "suite", "all"),
            monoid=getattr(args, "monoid", "qm"),
        )
        logger.debug(f"Run configuration: {config.model_dump_json()}")
        if config.command == "gb":
            return cmd_gb(config)
        if config.command == "dims":
            return cmd_dims(config)
        if config.command == "check":
            return cmd_check(config)
        if config.command == "compare":
            return cmd_compare(config, args.left, args.right)
        return cmd_normalize(config, args.polynomial)
    except INPUT_ERRORS as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_CONFIG
    except GroebnerError as e:
        logger.error(f"{args.command} gave up: {e}")
        return EXIT_NEGATIVE
    except Exception as e:
        logger.error(f"{args.command} failed unexpectedly: {e}", exc_info=True)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
