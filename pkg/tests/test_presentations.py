from pathlib import Path

import pytest

from groebner.dimensions import ideal_dimension_oracle
from groebner.polynomial import TreePolynomial
from presentations.loader import PresentationSyntaxError, load_presentation, parse_presentation
from presentations.presentation import (
    JACOBI,
    LAM,
    LEIBNIZ,
    MU,
    InvalidPresentation,
    OperadPresentation,
    UnknownName,
    builtin,
)
from presentations.symmetric import (
    SymmetricRelation,
    UnknownSymmetry,
    UnsupportedArity,
    expand_symmetric,
    independent_subset,
    normalize_tree,
    symmetry_of,
)
from trees.shuffle_tree import Generator, Symmetry, validate_tree
from trees.syntax import parse_tree

DATA = Path(__file__).resolve().parent.parent / "presentations" / "data"
GENS = {"mu": MU, "lam": LAM}


class TestNormalizeTree:
    def test_skew_swap_flips_sign(self):
        sign, tree = normalize_tree(parse_tree("lam(2, 1)", GENS, validate=False))
        assert (sign, tree.text) == (-1, "lam(1, 2)")

    def test_symmetric_swap(self):
        sign, tree = normalize_tree(parse_tree("mu(lam(3, 2), 1)", GENS, validate=False))
        assert (sign, tree.text) == (-1, "mu(1, lam(2, 3))")

    def test_asymmetric_swap_uses_opposite(self):
        m = Generator("m", 2)
        sign, tree = normalize_tree(parse_tree("m(2, 1)", {"m": m}, validate=False))
        assert (sign, tree.text) == (1, "m_op(1, 2)")


class TestExpansion:
    def test_leibniz(self):
        relations = expand_symmetric(SymmetricRelation.parse(LEIBNIZ, GENS))
        assert len(relations) == 3
        assert relations[0] == TreePolynomial.parse("lam(1, mu(2, 3)) - mu(lam(1, 2), 3) - mu(lam(1, 3), 2)", GENS)
        assert relations[1] == TreePolynomial.parse(
            "-lam(mu(1, 3), 2) + mu(lam(1, 2), 3) - mu(1, lam(2, 3))", GENS
        )
        assert relations[2] == TreePolynomial.parse(
            "-lam(mu(1, 2), 3) + mu(lam(1, 3), 2) + mu(1, lam(2, 3))", GENS
        )

    def test_expanded_trees_are_shuffle_trees(self):
        for text in (LEIBNIZ, JACOBI):
            for relation in expand_symmetric(SymmetricRelation.parse(text, GENS)):
                assert all(validate_tree(t) for t in relation.trees())

    def test_jacobi_gives_one_relation(self):
        assert len(expand_symmetric(SymmetricRelation.parse(JACOBI, GENS))) == 1

    def test_commutativity_is_empty(self):
        assert expand_symmetric(SymmetricRelation.parse("mu(1, 2) = mu(2, 1)", GENS)) == []

    def test_placeholder_names_do_not_matter(self):
        original = expand_symmetric(SymmetricRelation.parse(LEIBNIZ, GENS))
        renamed = expand_symmetric(
            SymmetricRelation.parse("lam(1, mu(3, 2)) = mu(lam(1, 3), 2) + mu(lam(1, 2), 3)", GENS)
        )
        kept, discarded = independent_subset(original + renamed)
        assert len(kept) == 3
        assert len(discarded) == 3

    def test_ternary_generator(self):
        t = Generator("t", 3)
        relation = SymmetricRelation.parse("t(1, 2, 3) = t(2, 1, 3)", {"t": t})
        with pytest.raises(UnsupportedArity):
            expand_symmetric(relation)

    def test_placeholders_must_be_a_permutation(self):
        with pytest.raises(ValueError):
            SymmetricRelation.parse("mu(1, 1) = mu(1, 2)", GENS)

    def test_unknown_symmetry(self):
        with pytest.raises(UnknownSymmetry):
            symmetry_of("antisymmetric")
        assert symmetry_of("skew") is Symmetry.SKEW


class TestIndependentSubset:
    def test_drops_combinations(self):
        a = TreePolynomial.parse("mu(mu(1, 2), 3) - mu(1, mu(2, 3))", GENS)
        b = TreePolynomial.parse("mu(mu(1, 3), 2) - mu(1, mu(2, 3))", GENS)
        kept, discarded = independent_subset([a, b, a - b, a * 2])
        assert kept == [a, b]
        assert discarded == [a - b, a * 2]


class TestBuiltins:
    @pytest.mark.parametrize("name,count", [("com", 2), ("lie", 1), ("pois", 6), ("ass", 6)])
    def test_relation_counts(self, name, count):
        assert len(builtin(name).shuffle_relations) == count

    def test_pois_order_of_relations(self, pois):
        assert [g.name for g in pois.generators] == ["mu", "lam"]
        leibniz = pois.shuffle_relations[:3]
        assert all("lam" in r.generators() and "mu" in r.generators() for r in leibniz)
        assert set(pois.shuffle_relations[3].generators()) == {"lam"}
        assert all(set(r.generators()) == {"mu"} for r in pois.shuffle_relations[4:])

    def test_pois_provenance(self, pois):
        assert len(pois.provenance.symmetric) == 3
        assert len(pois.provenance.discarded) == 1

    def test_ass_declares_opposite(self):
        assert [g.name for g in builtin("ass").generators] == ["m", "m_op"]

    def test_lie_generator_is_skew(self, lie):
        assert lie.generators == (LAM,)
        assert LAM.symmetry is Symmetry.SKEW

    def test_unknown_name(self):
        with pytest.raises(UnknownName):
            builtin("gerst")

    def test_rejects_undeclared_generator(self):
        relation = TreePolynomial.parse("lam(1, 2)", GENS)
        with pytest.raises(InvalidPresentation):
            OperadPresentation("bad", (MU,), (relation,))

    def test_rejects_zero_relation(self):
        with pytest.raises(InvalidPresentation):
            OperadPresentation("bad", (MU,), (TreePolynomial(arity=2),))

    def test_oracle_on_expanded_relations(self, pois):
        assert ideal_dimension_oracle(pois.shuffle_relations, pois.generators, 3) == 6


class TestLoader:
    def test_data_file_matches_builtin(self, pois):
        loaded = load_presentation(DATA / "pois.txt")
        assert loaded.name == "pois"
        assert loaded.shuffle_relations == pois.shuffle_relations

    def test_shuffle_and_symmetric_lines(self):
        text = """
        # Lie with one extra shuffle relation
        generators:
          lam 2 skew
        relations:
          symmetric: lam(1, lam(2, 3)) = lam(lam(1, 2), 3) - lam(lam(1, 3), 2)
          lam(lam(1, 3), 2) - 1/2 lam(1, lam(2, 3))
        """
        presentation = parse_presentation(text, name="lie2")
        assert presentation.name == "lie2"
        assert len(presentation.shuffle_relations) == 2
        assert presentation.shuffle_relations[0] == TreePolynomial.parse(
            "lam(lam(1, 3), 2) - 1/2 lam(1, lam(2, 3))", GENS
        )

    def test_empty_relations(self):
        presentation = parse_presentation("generators:\n  mu 2 symmetric\nrelations:\n")
        assert presentation.shuffle_relations == ()

    def test_asymmetric_generator_declares_opposite(self):
        presentation = parse_presentation("generators:\n  m 2\nrelations:\n  m(1, 2) - m_op(1, 2)\n")
        assert [g.name for g in presentation.generators] == ["m", "m_op"]

    @pytest.mark.parametrize(
        "text",
        [
            "generators:\n  mu 1\n",
            "generators:\n  mu 2 antisymmetric\n",
            "generators:\n  t 3 skew\n",
            "generators:\n  mu\n",
            "mu 2 symmetric\n",
            "generators:\n  mu 2\n  mu 2\n",
            "generators:\n  mu 2 symmetric\nrelations:\n  mu(1, 2\n",
            "generators:\n  mu 2 symmetric\nrelations:\n  lam(1, 2)\n",
        ],
    )
    def test_syntax_errors(self, text):
        with pytest.raises(PresentationSyntaxError):
            parse_presentation(text)

    def test_error_names_the_line(self):
        with pytest.raises(PresentationSyntaxError, match="Line 2"):
            parse_presentation("generators:\n  mu one\n")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_presentation(tmp_path / "missing.txt")
