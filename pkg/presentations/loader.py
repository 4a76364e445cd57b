"""
Presentation files.

Line-oriented, ``#`` starts a comment::

    name: pois
    generators:
      mu 2 symmetric
      lam 2 skew
    relations:
      lam(1, mu(2, 3)) - mu(lam(1, 2), 3) - mu(lam(1, 3), 2)
      symmetric: lam(1, lam(2, 3)) = lam(lam(1, 2), 3) - lam(lam(1, 3), 2)

Plain relation lines are shuffle relations in tree syntax; ``symmetric:``
lines are expanded on load. A binary generator with symmetry ``none`` also
declares its opposite ``<name>_op``. Dependent relations are dropped and
recorded in the provenance.
"""

import logging
from pathlib import Path
from typing import Union

from pydantic import BaseModel, Field, ValidationError, field_validator

from groebner.polynomial import TreePolynomial
from presentations.presentation import OperadPresentation, from_symmetric
from presentations.symmetric import UnknownSymmetry, UnsupportedArity, symmetry_of
from trees.shuffle_tree import Generator, InvalidTree, Symmetry
from trees.syntax import TreeSyntaxError

logger = logging.getLogger(__name__)


class PresentationSyntaxError(ValueError):
    """Raised when a presentation file cannot be read"""


class GeneratorSpec(BaseModel):
    """One line of the ``generators:`` section."""

    name: str = Field(pattern=r"^[A-Za-z][A-Za-z0-9_]*$", description="Identifier used in relations")
    arity: int = Field(ge=2, description="Number of inputs")
    symmetry: str = Field(default="none", description="none, symmetric or skew")

    @field_validator("symmetry")
    @classmethod
    def validate_symmetry(cls, v: str) -> str:
        symmetry_of(v)
        return v

    def to_generator(self) -> Generator:
        """
        Raises:
            UnsupportedArity: For a symmetric or skew generator that is not binary
        """
        symmetry = symmetry_of(self.symmetry)
        if symmetry is not Symmetry.NONE and self.arity != 2:
            raise UnsupportedArity(f"Generator '{self.name}': only binary generators may be {symmetry.value}")
        return Generator(self.name, self.arity, symmetry)


def parse_presentation(text: str, name: str = "file") -> OperadPresentation:
    """
    Read a presentation from text.

    Raises:
        PresentationSyntaxError: On unknown sections, bad generator lines or
            relations that do not parse (the message carries the line number)
    """
    section = None
    generators: list[Generator] = []
    shuffle_lines: list[tuple[int, str]] = []
    symmetric_lines: list[tuple[int, str]] = []

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("name:"):
            name = line[len("name:") :].strip() or name
            continue
        if line in ("generators:", "relations:"):
            section = line[:-1]
            continue
        if section == "generators":
            parts = line.split()
            if len(parts) not in (2, 3):
                raise PresentationSyntaxError(f"Line {number}: expected '<name> <arity> [symmetry]', got '{line}'")
            try:
                spec = GeneratorSpec(
                    name=parts[0], arity=parts[1], symmetry=parts[2] if len(parts) == 3 else "none"
                )
                generators.append(spec.to_generator())
            except (ValidationError, UnknownSymmetry, UnsupportedArity) as e:
                raise PresentationSyntaxError(f"Line {number}: invalid generator '{line}': {e}") from e
        elif section == "relations":
            if line.startswith("symmetric:"):
                symmetric_lines.append((number, line[len("symmetric:") :].strip()))
            else:
                shuffle_lines.append((number, line))
        else:
            raise PresentationSyntaxError(f"Line {number}: '{line}' is outside a generators: or relations: section")

    names = [g.name for g in generators]
    if len(set(names)) != len(names):
        raise PresentationSyntaxError(f"Duplicate generator names in {names}")
    known = {g.name: g for g in generators}
    for generator in generators:
        if generator.arity == 2 and generator.symmetry is Symmetry.NONE:
            known.setdefault(generator.opposite().name, generator.opposite())

    shuffle: list[TreePolynomial] = []
    for number, line in shuffle_lines:
        try:
            polynomial = TreePolynomial.parse(line, known)
        except (TreeSyntaxError, InvalidTree, ValueError) as e:
            raise PresentationSyntaxError(f"Line {number}: {e}") from e
        if not polynomial:
            logger.warning(f"Line {number}: relation is zero and is skipped")
            continue
        shuffle.append(polynomial)

    try:
        presentation = from_symmetric(name, generators, [t for _, t in symmetric_lines], shuffle)
    except (TreeSyntaxError, InvalidTree, UnknownSymmetry, UnsupportedArity) as e:
        raise PresentationSyntaxError(f"Invalid symmetric relation: {e}") from e
    logger.info(
        f"Loaded presentation '{presentation.name}': {len(presentation.generators)} generators, "
        f"{len(presentation.shuffle_relations)} shuffle relations"
    )
    return presentation


def load_presentation(path: Union[str, Path]) -> OperadPresentation:
    """
    Raises:
        PresentationSyntaxError: If the file is malformed
        FileNotFoundError: If it does not exist
    """
    path = Path(path)
    return parse_presentation(path.read_text(encoding="utf-8"), name=path.stem)
