"""Tests for the Buchberger engine and ideal arithmetic.

Pinned answers are classical triangularizations that can be checked by
hand (symmetric-function elimination, the twisted cubic).  Everything
else is certified by postconditions that characterize a reduced
Groebner basis without trusting the code that produced it: every
S-polynomial reduces to zero, no term of a basis element is divisible
by another lead term, input generators are members, and the result is
invariant under shuffling the input.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from asmschub.groebner import (
    DEFAULT_BUDGET,
    GroebnerBudgetError,
    Ideal,
    buchberger,
    canonical_order,
    ideal_contains,
    ideal_equals,
    initial_ideal,
    intersect_ideals,
    make_ideal,
    minimal_generators,
    normal_form,
)
from asmschub.monomial import mono_to_text
from asmschub.poly import (
    Polynomial,
    antidiagonal_order,
    grevlex_order,
    lead_coefficient,
    lead_monomial,
    lex_order,
    mono_divides,
    monomial,
    poly_from_text,
    variable,
    z_,
)

X, Y, Z = z_(1, 1), z_(1, 2), z_(1, 3)
LEX = lex_order([X, Y, Z])
GREVLEX = grevlex_order([X, Y, Z])


def P(text: str) -> Polynomial:
    return poly_from_text(text)


def spoly(f, g, order):
    from asmschub.poly import mono_div, mono_lcm

    lf, lg = lead_monomial(f, order), lead_monomial(g, order)
    lcm = mono_lcm(lf, lg)
    a = Polynomial.from_dict({mono_div(lcm, lf): Fraction(1) / lead_coefficient(f, order)})
    b = Polynomial.from_dict({mono_div(lcm, lg): Fraction(1) / lead_coefficient(g, order)})
    return a * f - b * g


def assert_reduced_groebner(gens, basis, order):
    """Postconditions that pin down THE reduced Groebner basis."""
    assert basis, "basis of a nonzero ideal must be nonempty"
    leads = [lead_monomial(g, order) for g in basis]
    for g in basis:
        assert lead_coefficient(g, order) == 1
    # pairwise reduced: no term divisible by another lead
    for i, g in enumerate(basis):
        for m, _ in g.terms:
            for j, lt in enumerate(leads):
                if i != j:
                    assert not mono_divides(lt, m)
    # Buchberger criterion on the output
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            rem = normal_form(spoly(basis[i], basis[j], order), basis, order)
            assert rem.is_zero
    # the input lives inside the output's ideal
    for f in gens:
        assert normal_form(f, basis, order).is_zero
    # sorted ascending by lead term
    keys = [order.key(lt) for lt in leads]
    assert keys == sorted(keys)


class TestBuchbergerPinned:
    def test_linear_triangularization(self):
        gens = [P("z[1,1] - z[1,2]"), P("z[1,2] - z[1,3]")]
        basis = buchberger(gens, LEX)
        assert set(basis) == {P("z[1,1] - z[1,3]"), P("z[1,2] - z[1,3]")}

    def test_single_generator_made_monic(self):
        basis = buchberger([P("3*z[1,1]^2*z[1,2]")], LEX)
        assert basis == (P("z[1,1]^2*z[1,2]"),)

    def test_symmetric_functions_of_cube_roots(self):
        # e1, e2, e3 - 1 triangularizes by back-substitution
        gens = [
            P("z[1,1] + z[1,2] + z[1,3]"),
            P("z[1,1]*z[1,2] + z[1,2]*z[1,3] + z[1,1]*z[1,3]"),
            P("z[1,1]*z[1,2]*z[1,3] - 1"),
        ]
        basis = buchberger(gens, LEX)
        assert set(basis) == {
            P("z[1,1] + z[1,2] + z[1,3]"),
            P("z[1,2]^2 + z[1,2]*z[1,3] + z[1,3]^2"),
            P("z[1,3]^3 - 1"),
        }
        assert_reduced_groebner(gens, basis, LEX)

    def test_twisted_cubic_grevlex(self):
        gens = [P("z[1,1]^2 - z[1,2]"), P("z[1,1]^3 - z[1,3]")]
        basis = buchberger(gens, GREVLEX)
        assert set(basis) == {
            P("z[1,1]^2 - z[1,2]"),
            P("z[1,1]*z[1,2] - z[1,3]"),
            P("z[1,2]^2 - z[1,1]*z[1,3]"),
        }
        assert_reduced_groebner(gens, basis, GREVLEX)

    def test_twisted_cubic_lex_eliminates_first_variable(self):
        gens = [P("z[1,1]^2 - z[1,2]"), P("z[1,1]^3 - z[1,3]")]
        basis = buchberger(gens, LEX)
        assert_reduced_groebner(gens, basis, LEX)
        free_of_x = [g for g in basis if X not in g.variables()]
        assert free_of_x == [P("z[1,2]^3 - z[1,3]^2")]

    def test_zero_ideal(self):
        assert buchberger([], LEX) == ()


class TestNormalForm:
    def test_remainder_uses_no_lead_divisible_terms(self):
        basis = buchberger([P("z[1,1]^2 - z[1,2]"), P("z[1,1]*z[1,2] - z[1,3]")], GREVLEX)
        f = P("z[1,1]^4 + z[1,1]*z[1,2]^2 + z[1,2]")
        r = normal_form(f, basis, GREVLEX)
        leads = [lead_monomial(g, GREVLEX) for g in basis]
        for m, _ in r.terms:
            assert not any(mono_divides(lt, m) for lt in leads)
        assert normal_form(f - r, basis, GREVLEX).is_zero

    def test_linearity_against_a_groebner_basis(self):
        basis = buchberger(
            [P("z[1,1]^2 - z[1,3]"), P("z[1,2]^2 - 2*z[1,3]")], GREVLEX
        )
        f, g = P("z[1,1]^3*z[1,2] + 1"), P("z[1,2]^3 - z[1,1]")
        nf = lambda h: normal_form(h, basis, GREVLEX)
        assert nf(f + g) == nf(f) + nf(g)
        assert nf(nf(f)) == nf(f)

    def test_empty_basis_is_identity(self):
        f = P("z[1,1]^2 - 5")
        assert normal_form(f, (), LEX) == f


class TestIdealClass:
    def test_rejects_zero_generator(self):
        with pytest.raises(ValueError, match="nonzero"):
            make_ideal([Polynomial.from_dict({})], (2, 2))

    def test_rejects_variable_outside_grid(self):
        with pytest.raises(ValueError, match="outside the 2x2 ambient grid"):
            make_ideal([variable(z_(3, 1))], (2, 2))

    def test_groebner_basis_is_cached_per_order(self):
        I = make_ideal([P("z[1,1]*z[2,2] - z[1,2]*z[2,1]")], (2, 2))
        order = canonical_order((2, 2))
        b1 = buchberger(I, order)
        assert I.cache[("gb", order)] == b1
        assert buchberger(I, order) is b1

    def test_equality_ignores_cache(self):
        I = make_ideal([P("z[1,1]")], (1, 1))
        J = make_ideal([P("z[1,1]")], (1, 1))
        buchberger(I, canonical_order((1, 1)))
        assert I == J


class TestIdealPredicates:
    def test_equals_differing_generating_sets(self):
        I = make_ideal([P("z[1,1]"), P("z[1,2]")], (1, 2))
        J = make_ideal([P("z[1,1] + z[1,2]"), P("z[1,1] - z[1,2]")], (1, 2))
        assert ideal_equals(I, J)

    def test_equals_is_not_fooled_by_scaling(self):
        I = make_ideal([P("2*z[1,1] - 4*z[1,2]")], (1, 2))
        J = make_ideal([P("z[1,1] - 2*z[1,2]")], (1, 2))
        assert ideal_equals(I, J)

    def test_not_equal(self):
        I = make_ideal([P("z[1,1]")], (1, 2))
        J = make_ideal([P("z[1,2]")], (1, 2))
        assert not ideal_equals(I, J)

    def test_mismatched_ambient_raises(self):
        I = make_ideal([P("z[1,1]")], (1, 1))
        J = make_ideal([P("z[1,1]")], (2, 2))
        with pytest.raises(ValueError, match="different ambient grids"):
            ideal_equals(I, J)

    def test_contains(self):
        I = make_ideal([P("z[1,1]^2 - z[1,2]")], (1, 2))
        assert ideal_contains(I, P("z[1,1]^4 - z[1,2]^2"))
        assert not ideal_contains(I, P("z[1,1]"))


class TestIntersection:
    def test_principal_times_principal(self):
        I = make_ideal([P("z[1,1]")], (1, 2))
        J = make_ideal([P("z[1,2]")], (1, 2))
        K = intersect_ideals(I, J)
        assert ideal_equals(K, make_ideal([P("z[1,1]*z[1,2]")], (1, 2)))

    def test_self_intersection(self):
        I = make_ideal([P("z[1,1]*z[2,2] - z[1,2]*z[2,1]"), P("z[1,1]^2")], (2, 2))
        assert ideal_equals(intersect_ideals(I, I), I)

    def test_nested_ideals(self):
        I = make_ideal([P("z[1,1]"), P("z[1,2]")], (1, 2))
        J = make_ideal([P("z[1,1] + z[1,2]")], (1, 2))
        assert ideal_equals(intersect_ideals(I, J), J)

    def test_no_elimination_variable_leaks(self):
        I = make_ideal([P("z[1,1]")], (1, 2))
        J = make_ideal([P("z[1,1] - z[1,2]")], (1, 2))
        K = intersect_ideals(I, J)
        for g in K.generators:
            for v in g.variables():
                assert v[0] == "z"


class TestInitialIdeal:
    def test_depends_on_order(self):
        I = make_ideal([P("z[1,1]^2 - z[1,2]")], (1, 2))
        assert [mono_to_text(g) for g in initial_ideal(I, LEX).generators] == [
            "z[1,1]^2"
        ]
        rev = lex_order([Y, X])
        assert [mono_to_text(g) for g in initial_ideal(I, rev).generators] == [
            "z[1,2]"
        ]

    def test_generators_are_minimalized(self):
        I = make_ideal([P("z[1,1]"), P("z[1,1]*z[1,2] - z[1,1]")], (1, 2))
        init = initial_ideal(I, LEX)
        assert [mono_to_text(g) for g in init.generators] == ["z[1,1]"]


class TestBudget:
    def test_budget_exceeded(self):
        gens = [
            P("z[1,1] + z[1,2] + z[1,3]"),
            P("z[1,1]*z[1,2] + z[1,2]*z[1,3] + z[1,1]*z[1,3]"),
            P("z[1,1]*z[1,2]*z[1,3] - 1"),
        ]
        with pytest.raises(GroebnerBudgetError):
            buchberger(gens, LEX, budget=1)

    def test_default_budget_is_generous(self):
        assert DEFAULT_BUDGET >= 10_000


class TestMinimalGenerators:
    def test_drops_multiples(self):
        gens = (P("z[1,1]"), P("z[1,1]*z[1,2]"), P("z[1,1]^2 + z[1,1]"))
        kept = minimal_generators(make_ideal(gens, (1, 2)))
        assert kept == (P("z[1,1]"),)

    def test_keeps_independent_generators(self):
        gens = (P("z[1,1] + z[1,2]"), P("z[1,1]"))
        kept = minimal_generators(make_ideal(gens, (1, 2)))
        assert len(kept) == 2


# -- randomized certification ----------------------------------------------

VARS = [z_(1, 1), z_(1, 2), z_(2, 1), z_(2, 2)]

small_monomials = st.builds(
    monomial,
    st.lists(st.tuples(st.sampled_from(VARS), st.integers(1, 2)), max_size=2),
)
small_polys = st.builds(
    Polynomial.from_dict,
    st.dictionaries(small_monomials, st.integers(-3, 3).map(Fraction), min_size=1, max_size=3),
)
orders = st.sampled_from(
    [
        lex_order(VARS),
        grevlex_order(VARS),
        antidiagonal_order(2, 2),
        lex_order(list(reversed(VARS))),
    ]
)


@settings(max_examples=60, deadline=None)
@given(st.lists(small_polys, min_size=1, max_size=3), orders, st.randoms())
def test_random_bases_are_reduced_groebner(gens, order, rng):
    gens = [g for g in gens if not g.is_zero]
    basis = buchberger(gens, order, budget=20_000)
    if not gens:
        assert basis == ()
        return
    assert_reduced_groebner(gens, basis, order)
    shuffled = gens[:]
    rng.shuffle(shuffled)
    assert buchberger(shuffled, order, budget=20_000) == basis


@settings(max_examples=25, deadline=None)
@given(st.lists(small_polys, min_size=1, max_size=2), st.lists(small_polys, min_size=1, max_size=2))
def test_random_intersections_contain_products(f_gens, g_gens):
    f_gens = [f for f in f_gens if not f.is_zero]
    g_gens = [g for g in g_gens if not g.is_zero]
    if not f_gens or not g_gens:
        return
    I = make_ideal(f_gens, (2, 2))
    J = make_ideal(g_gens, (2, 2))
    try:
        K = intersect_ideals(I, J, budget=40_000)
    except GroebnerBudgetError:
        return
    # products land in the intersection, and members of K lie in both
    for f in f_gens:
        for g in g_gens:
            assert ideal_contains(K, f * g, budget=40_000)
    for h in K.generators:
        assert ideal_contains(I, h, budget=40_000)
        assert ideal_contains(J, h, budget=40_000)
