"""Pipe dreams: staircase fillings of crosses and elbows.

A pipe dream on n strands is a set of crosses in the staircase region
{(i, j) : i + j <= n}; everything below the main antidiagonal is an
elbow.  Reading the crosses row by row from the top, right to left
within each row, gives a word in the simple transpositions whose
Demazure product is the permutation of the dream.  Reduced pipe dreams
of w index the minimal primes of the antidiagonal initial ideal of the
rank-condition ideal of w, with the facets of the associated
Stanley-Reisner complex appearing as cross-set complements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .perm import Permutation, coxeter_length, demazure_product, lehmer_code
from .poly import Monomial, Var, monomial, x_, z_

Cell = tuple[int, int]

PIPE_DREAM_LIMIT = 8
NON_REDUCED_LIMIT = 6


@dataclass(frozen=True)
class PipeDream:
    size: int
    crosses: tuple[Cell, ...]

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("pipe dream size must be positive")
        seen = set()
        for (i, j) in self.crosses:
            if i < 1 or j < 1 or i + j > self.size:
                raise ValueError(
                    f"cross ({i},{j}) lies outside the staircase region"
                )
            seen.add((i, j))
        if len(seen) != len(self.crosses) or tuple(sorted(seen)) != self.crosses:
            raise ValueError("crosses must be sorted and distinct")


def pipe_dream(size: int, crosses) -> PipeDream:
    """Canonicalizing constructor; accepts any iterable of cells."""
    return PipeDream(size, tuple(sorted(set(map(tuple, crosses)))))


def reading_word(D: PipeDream) -> tuple[int, ...]:
    """Rows top to bottom, right to left within a row; (i,j) -> i+j-1."""
    crosses = set(D.crosses)
    word = []
    for i in range(1, D.size + 1):
        for j in range(D.size - i, 0, -1):
            if (i, j) in crosses:
                word.append(i + j - 1)
    return tuple(word)


def permutation_of(D: PipeDream) -> Permutation:
    return demazure_product(reading_word(D), D.size)


def is_reduced(D: PipeDream) -> bool:
    return len(D.crosses) == coxeter_length(permutation_of(D))


def cross_monomial(D: PipeDream) -> Monomial:
    """The weight x^D, one x_i for every cross in row i."""
    return monomial((x_(i), 1) for (i, j) in D.crosses)


def bottom_pipe_dream(w: Permutation) -> PipeDream:
    """Left-justified crosses: row i holds columns 1..code(w)_i."""
    code = lehmer_code(w)
    cells = [
        (i, j)
        for i, c in enumerate(code, start=1)
        for j in range(1, c + 1)
    ]
    return pipe_dream(len(w), cells)


def _ladder_moves(D: PipeDream):
    """Moves (i,j) -> (i-k, j+1) over a column of doubled crosses."""
    crosses = set(D.crosses)
    n = D.size
    for (i, j) in D.crosses:
        if (i, j + 1) in crosses:
            continue
        k = 1
        while i - k >= 1:
            above, right = (i - k, j), (i - k, j + 1)
            if above not in crosses and right not in crosses:
                if (i - k) + (j + 1) <= n:
                    moved = crosses - {(i, j)} | {right}
                    yield pipe_dream(n, moved)
                break
            if above in crosses and right in crosses:
                k += 1
                continue
            break


def pipe_dreams(w: Permutation) -> tuple[PipeDream, ...]:
    """All reduced pipe dreams of w, sorted by their cross sets.

    Ladder-move closure starting from the bottom dream; completeness
    is certified against brute-force enumeration in the test suite.
    """
    n = len(w)
    if n > PIPE_DREAM_LIMIT:
        raise ValueError(
            f"pipe dream enumeration is limited to n <= {PIPE_DREAM_LIMIT}"
        )
    start = bottom_pipe_dream(w)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for D in frontier:
            for E in _ladder_moves(D):
                if E not in seen:
                    seen.add(E)
                    nxt.append(E)
        frontier = nxt
    return tuple(sorted(seen, key=lambda D: D.crosses))


def _staircase(n: int) -> list[Cell]:
    return [(i, j) for i in range(1, n) for j in range(1, n - i + 1)]


def pipe_dreams_non_reduced(w: Permutation) -> tuple[PipeDream, ...]:
    """Every staircase cross set whose Demazure product is w."""
    n = len(w)
    if n > NON_REDUCED_LIMIT:
        raise ValueError(
            f"non-reduced enumeration is limited to n <= {NON_REDUCED_LIMIT}"
        )
    cells = _staircase(n)
    found = []
    for size in range(len(cells) + 1):
        for combo in itertools.combinations(cells, size):
            D = PipeDream(n, combo)
            if permutation_of(D) == w:
                found.append(D)
    return tuple(sorted(found, key=lambda D: D.crosses))


def subword_complex_facets(w: Permutation) -> tuple[tuple[Var, ...], ...]:
    """Cross-set complements inside the full n x n grid, one per dream."""
    n = len(w)
    grid = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    facets = []
    for D in pipe_dreams(w):
        crosses = set(D.crosses)
        facets.append(
            tuple(z_(i, j) for (i, j) in grid if (i, j) not in crosses)
        )
    return tuple(facets)


def render_pipe_dream(D: PipeDream) -> str:
    crosses = set(D.crosses)
    return "\n".join(
        "".join("+" if (i, j) in crosses else "/" for j in range(1, D.size + 1))
        for i in range(1, D.size + 1)
    )


def pipe_dream_from_text(text: str) -> PipeDream:
    lines = [line for line in text.strip().splitlines()]
    n = len(lines)
    cells = []
    for i, line in enumerate(lines, start=1):
        row = line.strip()
        if len(row) != n:
            raise ValueError("pipe dream rendering must be a square grid")
        for j, ch in enumerate(row, start=1):
            if ch == "+":
                cells.append((i, j))
            elif ch != "/":
                raise ValueError(f"unexpected tile {ch!r} in pipe dream text")
    return pipe_dream(n, cells)


def pipe_dream_to_json(D: PipeDream) -> dict:
    return {"size": D.size, "crosses": [list(c) for c in D.crosses]}


def pipe_dream_from_json(data: dict) -> PipeDream:
    return pipe_dream(data["size"], [tuple(c) for c in data["crosses"]])
