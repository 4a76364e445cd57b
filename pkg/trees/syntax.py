"""
Textual syntax for trees and linear combinations of trees.

    tree   := name "(" tree ("," tree)* ")" | label
    term   := [sign] [coefficient ["*"]] tree
    combo  := term (sign term)*
    input  := combo ["=" combo]

Generator names are identifiers, leaves are positive integers and
coefficients are integers or ``p/q`` rationals. ``lhs = rhs`` is read as
``lhs - rhs``. Canonical output is ``mu(1, lam(2, 3))``; everything printed by
the package parses back to the same tree.
"""

from fractions import Fraction
from typing import Mapping, Optional

import pyparsing as pp

from trees.shuffle_tree import Generator, InvalidTree, Leaf, Node, ShuffleTree, validate_tree


class TreeSyntaxError(ValueError):
    """Raised when tree or polynomial text cannot be parsed"""


_LPAR, _RPAR = map(pp.Suppress, "()")
_LABEL = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
_NAME = pp.Word(pp.alphas, pp.alphanums + "_")
_TREE = pp.Forward()
_NODE = pp.Group(_NAME + _LPAR + pp.Group(pp.DelimitedList(_TREE)) + _RPAR)
_TREE <<= _NODE | _LABEL

_COEFF = pp.Regex(r"\d+(?:/\d+)?").set_parse_action(lambda t: Fraction(t[0]))
_SIGN = pp.one_of("+ -")
# Each term parses to [sign, [coefficient, tree]] or [sign, [tree]].
_SCALED = pp.Group(_COEFF + pp.Opt(pp.Suppress("*")) + _TREE)
_BARE = pp.Group(_TREE)
_FIRST = pp.Group(pp.Opt(_SIGN, default="+") + (_SCALED | _BARE))
_NEXT = pp.Group(_SIGN + (_SCALED | _BARE))
_COMBO = pp.Group(_FIRST + pp.ZeroOrMore(_NEXT))
_EQUATION = _COMBO("lhs") + pp.Opt(pp.Suppress("=") + _COMBO("rhs"))


def _build(token, generators: Optional[Mapping[str, Generator]]) -> ShuffleTree:
    if isinstance(token, int):
        return Leaf(token)
    name, children = token[0], token[1]
    built = tuple(_build(child, generators) for child in children)
    if generators is None:
        generator = Generator(name, len(built))
    elif name not in generators:
        raise TreeSyntaxError(f"Unknown generator '{name}'")
    else:
        generator = generators[name]
        if generator.arity != len(built):
            raise TreeSyntaxError(
                f"Generator '{name}' has arity {generator.arity}, got {len(built)} arguments"
            )
    return Node(generator, built)


def parse_tree(
    text: str,
    generators: Optional[Mapping[str, Generator]] = None,
    validate: bool = True,
) -> ShuffleTree:
    """
    Parse ``mu(1, lam(2, 3))`` into a tree.

    Args:
        text: Tree in canonical syntax (whitespace is ignored)
        generators: Known generators by name; inferred from the text when None
        validate: Reject trees violating the shuffle invariants

    Raises:
        TreeSyntaxError: On malformed text or unknown generators
        InvalidTree: If ``validate`` is set and the tree is not a shuffle tree
    """
    try:
        parsed = _TREE.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise TreeSyntaxError(f"Cannot parse tree '{text}': {e}") from e
    tree = _build(parsed[0], generators)
    if validate and not validate_tree(tree):
        raise InvalidTree(f"'{text}' is not a shuffle tree")
    return tree


def parse_linear_combination(
    text: str,
    generators: Optional[Mapping[str, Generator]] = None,
    validate: bool = True,
) -> list[tuple[Fraction, ShuffleTree]]:
    """
    Parse ``lam(1, mu(2, 3)) - mu(lam(1, 2), 3) - 1/2 mu(lam(1, 3), 2)``.

    Returns:
        (coefficient, tree) pairs in input order, right-hand side negated;
        repeated trees are not merged here
    """
    try:
        parsed = _EQUATION.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise TreeSyntaxError(f"Cannot parse linear combination '{text}': {e}") from e

    terms: list[tuple[Fraction, ShuffleTree]] = []
    sides = [(parsed["lhs"], 1)]
    if "rhs" in parsed:
        sides.append((parsed["rhs"], -1))
    for combo, side_sign in sides:
        for term in combo:
            sign, body = term[0], term[1]
            coefficient = body[0] if len(body) == 2 else Fraction(1)
            if sign == "-":
                coefficient = -coefficient
            tree = _build(body[-1], generators)
            if validate and not validate_tree(tree):
                raise InvalidTree(f"'{tree.text}' is not a shuffle tree")
            terms.append((side_sign * coefficient, tree))
    return terms
