"""Schubert determinantal ideals and ASM ideals from rank conditions.

The generators attached to a partial alternating sign matrix are the
minors coming from its essential boxes: for each maximally-southeast
cell (i, j) of the diagram with rank bound r, all (r+1)-minors of the
northwest i x j submatrix of the generic matrix.  The antidiagonal
initial ideal is read off combinatorially (the generators form a
Groebner basis under any antidiagonal order); the three diagonal
initial ideals go through the Buchberger engine.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Union

from .asm import PartialASM, RankTable, make_partial_asm, permutation_matrix, rank_table
from .groebner import DEFAULT_BUDGET, Ideal, initial_ideal
from .monomial import MonomialIdeal, codim as monomial_codim, monomial_ideal
from .perm import Permutation
from .poly import Polynomial, TermOrder, generic_minor, monomial, z_

Schubertable = Union[PartialASM, Permutation]


@dataclass(frozen=True)
class EssentialBox:
    cell: tuple[int, int]
    rank_bound: int


def as_partial_asm(A: Schubertable) -> PartialASM:
    if isinstance(A, Permutation):
        return permutation_matrix(A)
    if isinstance(A, PartialASM):
        return A
    rows = list(A)
    if rows and isinstance(rows[0], int):
        # flat sequence of ints: one-line permutation notation
        return permutation_matrix(Permutation(tuple(rows)))
    return make_partial_asm(rows)


def asm_diagram(A: Schubertable) -> tuple[tuple[int, int], ...]:
    """Cells whose row and column prefix sums both vanish, row-major."""
    A = as_partial_asm(A)
    cells = []
    for i in range(1, A.nrows + 1):
        row_sum = 0
        for j in range(1, A.ncols + 1):
            row_sum += A(i, j)
            col_sum = sum(A(k, j) for k in range(1, i + 1))
            if row_sum == 0 and col_sum == 0:
                cells.append((i, j))
    return tuple(cells)


def asm_essential_boxes(A: Schubertable) -> tuple[EssentialBox, ...]:
    """Maximally-southeast diagram cells with their rank bounds."""
    A = as_partial_asm(A)
    cells = set(asm_diagram(A))
    T = rank_table(A)
    return tuple(
        EssentialBox((i, j), T(i, j))
        for (i, j) in sorted(cells)
        if (i + 1, j) not in cells and (i, j + 1) not in cells
    )


def _minors(box: EssentialBox) -> Iterable[Polynomial]:
    (i, j), r = box.cell, box.rank_bound
    size = r + 1
    if size > min(i, j):
        return
    for rows in itertools.combinations(range(1, i + 1), size):
        for cols in itertools.combinations(range(1, j + 1), size):
            yield generic_minor(rows, cols)


def fulton_generators(A: Schubertable) -> tuple[Polynomial, ...]:
    """All defining minors, boxes row-major, minors lex by index sets."""
    gens: list[Polynomial] = []
    for box in asm_essential_boxes(A):
        gens.extend(_minors(box))
    return tuple(dict.fromkeys(gens))


def determinantal_ideal_from_cells(
    A: Schubertable, cells: Iterable[tuple[int, int]]
) -> Ideal:
    """Ideal of all (rank+1)-minors at the given cells; used to certify
    that the essential boxes lose nothing."""
    A = as_partial_asm(A)
    T = rank_table(A)
    gens: list[Polynomial] = []
    for (i, j) in cells:
        gens.extend(_minors(EssentialBox((i, j), T(i, j))))
    return Ideal(tuple(dict.fromkeys(gens)), (A.nrows, A.ncols))


def schubert_determinantal_ideal(A: Schubertable) -> Ideal:
    A = as_partial_asm(A)
    I = Ideal(fulton_generators(A), (A.nrows, A.ncols))
    I.cache["asm"] = A
    I.cache["rank_table"] = rank_table(A)
    return I


def _antidiagonal_monomial(rows, cols):
    size = len(rows)
    return monomial([(z_(rows[k], cols[size - 1 - k]), 1) for k in range(size)])


def anti_diag_init(A: Schubertable) -> MonomialIdeal:
    """Antidiagonal terms of the defining minors, minimalized.

    No Groebner computation: the generators are already a basis for
    any antidiagonal order, so their lead terms generate the initial
    ideal.
    """
    A = as_partial_asm(A)
    monos = []
    for box in asm_essential_boxes(A):
        (i, j), r = box.cell, box.rank_bound
        size = r + 1
        if size > min(i, j):
            continue
        for rows in itertools.combinations(range(1, i + 1), size):
            for cols in itertools.combinations(range(1, j + 1), size):
                monos.append(_antidiagonal_monomial(rows, cols))
    ambient = [
        z_(i, j)
        for i in range(1, A.nrows + 1)
        for j in range(1, A.ncols + 1)
    ]
    return monomial_ideal(monos, ambient)


def schubert_codim(A: Schubertable) -> int:
    """Diagram size for a permutation, else the initial-ideal codimension."""
    from .asm import as_permutation

    if isinstance(A, Permutation):
        return len(asm_diagram(A))
    M = as_partial_asm(A)
    if M.is_asm and as_permutation(M) is not None:
        return len(asm_diagram(M))
    J = anti_diag_init(M)
    return 0 if J.is_zero else monomial_codim(J)


DIAG_VARIANTS = ("LexSE", "LexNW", "RevLex")


def diag_order(variant: str, m: int, n: int) -> TermOrder:
    """Term orders whose lead term on every minor is its diagonal."""
    if variant == "LexSE":
        priority = [
            z_(i, j) for i in range(m, 0, -1) for j in range(n, 0, -1)
        ]
        return TermOrder("lex", tuple(priority))
    if variant == "LexNW":
        priority = [z_(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
        return TermOrder("lex", tuple(priority))
    if variant == "RevLex":
        # most-penalized variable z[m,1]; within each row the western
        # entries are cheaper, rows from the top are dearer
        priority = [
            z_(i, j) for i in range(1, m + 1) for j in range(n, 0, -1)
        ]
        return TermOrder("grevlex", tuple(priority))
    raise ValueError(f"unknown diagonal variant {variant!r}")


def diag_init(
    A: Schubertable, variant: str, budget: int = DEFAULT_BUDGET
) -> MonomialIdeal:
    I = schubert_determinantal_ideal(A)
    return initial_ideal(I, diag_order(variant, *I.ambient), budget)
