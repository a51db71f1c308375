"""Schubert, double Schubert, and Grothendieck polynomials.

All three families start from the staircase monomial of the longest
element and descend through (isobaric) divided differences; the
transition recursion and the signed pipe-dream sum provide independent
routes to the same polynomials.  The Rajchgot index, the degree of the
Grothendieck polynomial, yields the regularity of the rank-condition
quotient ring: raj(w) - length(w) for a permutation, and the graded
Betti table of the antidiagonal degeneration in general.
"""

from __future__ import annotations

from .asm import as_permutation
from .ideal import Schubertable, anti_diag_init, as_partial_asm
from .monomial import reg_quotient
from .perm import (
    Permutation,
    coxeter_length,
    descents,
    is_dominant,
    lehmer_code,
    longest_element,
    times_transposition,
)
from .pipedream import (
    NON_REDUCED_LIMIT,
    cross_monomial,
    pipe_dreams_non_reduced,
)
from .poly import (
    ONE,
    Polynomial,
    divided_difference,
    isobaric_divided_difference,
    monomial,
    variable,
    x_,
    y_,
)

_schubert_cache: dict[Permutation, Polynomial] = {}
_double_cache: dict[Permutation, Polynomial] = {}
_grothendieck_cache: dict[Permutation, Polynomial] = {}
_transition_cache: dict[Permutation, Polynomial] = {}


def _staircase(n: int) -> Polynomial:
    return Polynomial.from_dict(
        {monomial((x_(i), n - i) for i in range(1, n)): 1}
    )


def _last_ascent(w: Permutation) -> int:
    line = w.one_line
    for i in range(len(line) - 1, 0, -1):
        if line[i - 1] < line[i]:
            return i
    return 0


def _descend(w: Permutation, cache, base, step) -> Polynomial:
    """Shared recursion: climb to the longest element, apply step down."""
    if w in cache:
        return cache[w]
    i = _last_ascent(w)
    if i == 0:
        out = base(len(w))
    else:
        out = step(_descend(times_transposition(w, i, i + 1), cache, base, step), i)
    cache[w] = out
    return out


def schubert_polynomial(w: Permutation, algorithm: str = "DividedDifference") -> Polynomial:
    if algorithm == "DividedDifference":
        return _descend(w, _schubert_cache, _staircase, divided_difference)
    if algorithm == "Transition":
        return _transition(w)
    raise ValueError(f"unknown Schubert algorithm {algorithm!r}")


def _double_staircase(n: int) -> Polynomial:
    out = ONE
    for i in range(1, n + 1):
        for j in range(1, n + 1 - i):
            out = out * (variable(x_(i)) - variable(y_(j)))
    return out


def double_schubert_polynomial(w: Permutation) -> Polynomial:
    """Divided differences act on the x variables; y ride along."""
    return _descend(w, _double_cache, _double_staircase, divided_difference)


GROTHENDIECK_ALGORITHMS = ("DividedDifference", "PipeDream")


def grothendieck_polynomial(w: Permutation, algorithm: str = "DividedDifference") -> Polynomial:
    if algorithm == "DividedDifference":
        return _descend(
            w, _grothendieck_cache, _staircase, isobaric_divided_difference
        )
    if algorithm == "PipeDream":
        if len(w) > NON_REDUCED_LIMIT:
            raise ValueError(
                f"pipe dream formula is limited to n <= {NON_REDUCED_LIMIT}"
            )
        ell = coxeter_length(w)
        out = Polynomial.from_dict({})
        for D in pipe_dreams_non_reduced(w):
            sign = -1 if (len(D.crosses) - ell) % 2 else 1
            out = out + Polynomial.from_dict({cross_monomial(D): sign})
        return out
    raise ValueError(f"unknown Grothendieck algorithm {algorithm!r}")


def _transition(w: Permutation) -> Polynomial:
    if w in _transition_cache:
        return _transition_cache[w]
    des = descents(w)
    if not des:
        out = ONE
    elif is_dominant(w):
        # dominant permutations are fixed points of the recursion
        out = Polynomial.from_dict(
            {monomial((x_(i + 1), c) for i, c in enumerate(lehmer_code(w))): 1}
        )
    else:
        r = des[-1]
        line = w.one_line
        s = max(t for t in range(r + 1, len(line) + 1) if line[t - 1] < line[r - 1])
        v = times_transposition(w, r, s)
        target = coxeter_length(w)
        out = variable(x_(r)) * _transition(v)
        for q in range(1, r):
            u = times_transposition(v, q, r)
            if coxeter_length(u) == target:
                out = out + _transition(u)
    _transition_cache[w] = out
    return out


def raj_index(w: Permutation) -> int:
    """Sum over i of (suffix length) - (longest increasing run from w(i)).

    Dynamic programming from the right: best[i] = 1 + max best[j] over
    j > i with w(j) > w(i).
    """
    line = w.one_line
    n = len(line)
    best = [1] * n
    for i in range(n - 2, -1, -1):
        tails = [best[j] for j in range(i + 1, n) if line[j] > line[i]]
        if tails:
            best[i] = 1 + max(tails)
    return sum((n - i) - best[i] for i in range(n))


def schubert_regularity(A: Schubertable, **guards) -> int:
    """Regularity of the rank-condition quotient.

    Permutations (and permutation matrices) go through the Rajchgot
    index; every other partial ASM goes through the graded Betti table
    of the squarefree antidiagonal degeneration.
    """
    if isinstance(A, Permutation):
        return raj_index(A) - coxeter_length(A)
    M = as_partial_asm(A)
    if M.is_asm:
        w = as_permutation(M)
        if w is not None:
            return raj_index(w) - coxeter_length(w)
    return reg_quotient(anti_diag_init(M), **guards)
