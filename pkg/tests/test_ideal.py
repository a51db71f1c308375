"""Tests for rank-condition determinantal ideals and their initial ideals.

The essential-box generators are certified against the full grid of
rank conditions (every northwest cell, not just the corners), and the
combinatorial antidiagonal initial ideal is certified against an
actual Buchberger run.  Small diagrams and generator lists are pinned
from hand computations.
"""

from __future__ import annotations

import pytest

from asmschub.groebner import ideal_equals, initial_ideal
from asmschub.ideal import (
    DIAG_VARIANTS,
    anti_diag_init,
    as_partial_asm,
    asm_diagram,
    asm_essential_boxes,
    determinantal_ideal_from_cells,
    diag_init,
    diag_order,
    fulton_generators,
    schubert_codim,
    schubert_determinantal_ideal,
)
from asmschub.asm import make_partial_asm, permutation_matrix
from asmschub.monomial import codim as monomial_codim, mono_to_text
from asmschub.perm import (
    Permutation,
    all_permutations,
    coxeter_length,
    essential_set,
    identity,
    rothe_diagram,
)
from asmschub.poly import antidiagonal_order, generic_minor, poly_from_text, z_

FULCRUM = make_partial_asm([[0, 1, 0], [1, -1, 1], [0, 1, 0]])


def mono_texts(J):
    return [mono_to_text(g) for g in J.generators]


class TestDiagram:
    def test_permutation_diagram_matches_rothe(self):
        for w in all_permutations(4):
            assert asm_diagram(w) == rothe_diagram(w)
            cells = [b.cell for b in asm_essential_boxes(w)]
            assert tuple(cells) == essential_set(w)

    def test_small_asm(self):
        assert asm_diagram(FULCRUM) == ((1, 1), (2, 2))
        boxes = asm_essential_boxes(FULCRUM)
        assert [(b.cell, b.rank_bound) for b in boxes] == [((1, 1), 0), ((2, 2), 1)]

    def test_partial_permutation_matrix(self):
        A = make_partial_asm([[0, 1, 0], [0, 0, 0]])
        assert asm_diagram(A) == ((1, 1), (2, 1), (2, 3))
        boxes = asm_essential_boxes(A)
        assert [(b.cell, b.rank_bound) for b in boxes] == [((2, 1), 0), ((2, 3), 1)]

    def test_identity_has_empty_diagram(self):
        assert asm_diagram(identity(4)) == ()
        assert asm_essential_boxes(identity(4)) == ()


class TestFultonGenerators:
    def test_one_descent(self):
        w = Permutation((3, 1, 4, 2))
        gens = fulton_generators(w)
        expected = (
            poly_from_text("z[1,1]"),
            poly_from_text("z[1,2]"),
            generic_minor((1, 2), (1, 2)),
            generic_minor((1, 3), (1, 2)),
            generic_minor((2, 3), (1, 2)),
        )
        assert gens == expected

    def test_shared_minors_listed_once(self):
        # both essential boxes of the longest element contribute z[1,1]
        gens = fulton_generators(Permutation((3, 2, 1)))
        assert gens == (
            poly_from_text("z[1,1]"),
            poly_from_text("z[1,2]"),
            poly_from_text("z[2,1]"),
        )

    def test_asm_generators(self):
        gens = fulton_generators(FULCRUM)
        assert gens == (
            poly_from_text("z[1,1]"),
            generic_minor((1, 2), (1, 2)),
        )

    def test_identity_generates_zero_ideal(self):
        assert fulton_generators(identity(3)) == ()
        I = schubert_determinantal_ideal(identity(3))
        assert I.generators == ()

    def test_rectangular_ambient(self):
        A = make_partial_asm([[0, 1, 0], [0, 0, 0]])
        I = schubert_determinantal_ideal(A)
        assert I.ambient == (2, 3)
        assert len(I.generators) == 5

    def test_ideal_caches_rank_data(self):
        I = schubert_determinantal_ideal(FULCRUM)
        assert I.cache["asm"] == FULCRUM
        assert I.cache["rank_table"](2, 2) == 1


class TestEssentialBoxesSuffice:
    """The corner rank conditions generate the same ideal as all of them."""

    @pytest.mark.parametrize("n", [2, 3])
    def test_exhaustive(self, n):
        grid = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
        for w in all_permutations(n):
            I = schubert_determinantal_ideal(w)
            J = determinantal_ideal_from_cells(w, grid)
            assert ideal_equals(I, J)

    @pytest.mark.parametrize(
        "entries", [(2, 1, 4, 3), (1, 4, 2, 3), (3, 1, 4, 2), (4, 2, 1, 3)]
    )
    def test_sampled_degree_four(self, entries):
        w = Permutation(entries)
        grid = [(i, j) for i in range(1, 5) for j in range(1, 5)]
        assert ideal_equals(
            schubert_determinantal_ideal(w),
            determinantal_ideal_from_cells(w, grid),
        )

    def test_asm_case(self):
        grid = [(i, j) for i in range(1, 4) for j in range(1, 4)]
        assert ideal_equals(
            schubert_determinantal_ideal(FULCRUM),
            determinantal_ideal_from_cells(FULCRUM, grid),
        )


class TestAntiDiagInit:
    def test_matches_buchberger_for_all_degree_four(self):
        for w in all_permutations(4):
            I = schubert_determinantal_ideal(w)
            combinatorial = anti_diag_init(w)
            computed = initial_ideal(I, antidiagonal_order(4, 4))
            assert combinatorial.generators == computed.generators
            assert combinatorial.is_squarefree

    def test_pinned_small_example(self):
        J = anti_diag_init(Permutation((3, 1, 4, 2)))
        assert mono_texts(J) == ["z[1,1]", "z[1,2]", "z[2,2]*z[3,1]"]

    def test_two_descents(self):
        # corner (3,3) carries rank bound 2, so a single 3x3 determinant
        J = anti_diag_init(Permutation((2, 1, 4, 3)))
        assert mono_texts(J) == ["z[1,1]", "z[1,3]*z[2,2]*z[3,1]"]

    def test_asm_initial_ideal(self):
        J = anti_diag_init(FULCRUM)
        assert mono_texts(J) == ["z[1,1]", "z[1,2]*z[2,1]"]

    def test_zero_for_identity(self):
        assert anti_diag_init(identity(3)).is_zero


class TestCodim:
    def test_permutations_use_diagram_size(self):
        for w in all_permutations(4):
            assert schubert_codim(w) == coxeter_length(w)
            assert schubert_codim(permutation_matrix(w)) == coxeter_length(w)

    def test_asm_goes_through_initial_ideal(self):
        assert schubert_codim(FULCRUM) == 2
        assert monomial_codim(anti_diag_init(FULCRUM)) == 2

    def test_identity(self):
        assert schubert_codim(identity(5)) == 0


class TestDiagonalOrders:
    def test_unknown_variant_rejected(self):
        with pytest.raises(ValueError, match="unknown diagonal variant"):
            diag_order("LexNE", 3, 3)

    def test_lead_term_of_a_minor_is_its_diagonal(self):
        f = generic_minor((1, 2, 3), (1, 2, 3))
        from asmschub.poly import lead_monomial, monomial

        diag = monomial([(z_(1, 1), 1), (z_(2, 2), 1), (z_(3, 3), 1)])
        for variant in DIAG_VARIANTS:
            order = diag_order(variant, 3, 3)
            assert lead_monomial(f, order) == diag

    def test_southeast_equals_revlex_on_small_group(self):
        for w in all_permutations(3):
            se = diag_init(w, "LexSE")
            assert se.generators == diag_init(w, "RevLex").generators

    def test_codimension_preserved_by_degeneration(self):
        for w in all_permutations(3):
            length = coxeter_length(w)
            for variant in DIAG_VARIANTS:
                J = diag_init(w, variant)
                assert (0 if J.is_zero else monomial_codim(J)) == length


class TestDiagonalDegreeSixPins:
    """Three diagonal initial ideals of the 21 43 65 pattern.

    Only two distinct ideals arise, with the two southeast flavors
    agreeing, and they differ from the antidiagonal one.
    """

    W = Permutation((2, 1, 4, 3, 6, 5))

    SE = {
        "z[1,1]",
        "z[1,2]*z[2,1]*z[3,3]",
        "z[1,2]*z[2,1]*z[3,4]*z[4,3]*z[5,5]",
        "z[1,2]^2*z[2,3]*z[3,1]*z[3,4]*z[4,3]*z[5,5]",
        "z[1,3]*z[2,1]*z[3,2]*z[3,4]*z[4,3]*z[5,5]",
    }
    NW = {
        "z[1,1]",
        "z[1,2]*z[2,1]*z[3,3]",
        "z[1,2]*z[2,1]*z[3,4]*z[4,3]*z[5,5]",
        "z[1,2]*z[2,3]*z[3,1]*z[3,4]*z[4,3]*z[5,5]",
        "z[1,3]*z[2,1]^2*z[3,2]*z[3,4]*z[4,3]*z[5,5]",
    }

    def test_southeast_lex(self):
        assert set(mono_texts(diag_init(self.W, "LexSE"))) == self.SE

    def test_northwest_lex(self):
        assert set(mono_texts(diag_init(self.W, "LexNW"))) == self.NW

    def test_revlex_agrees_with_southeast(self):
        assert (
            diag_init(self.W, "RevLex").generators
            == diag_init(self.W, "LexSE").generators
        )

    def test_antidiagonal_differs(self):
        adi = set(mono_texts(anti_diag_init(self.W)))
        assert adi == {
            "z[1,1]",
            "z[1,3]*z[2,2]*z[3,1]",
            "z[1,5]*z[2,4]*z[3,3]*z[4,2]*z[5,1]",
        }
        assert adi != self.SE and adi != self.NW


class TestCoercion:
    def test_passthrough(self):
        assert as_partial_asm(FULCRUM) is FULCRUM

    def test_permutation_becomes_its_matrix(self):
        w = Permutation((2, 1))
        assert as_partial_asm(w) == permutation_matrix(w)

    def test_raw_rows(self):
        assert as_partial_asm([[1, 0], [0, 1]]) == make_partial_asm([[1, 0], [0, 1]])
