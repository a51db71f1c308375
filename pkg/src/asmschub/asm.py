"""Partial alternating sign matrices and their rank tables.

A partial ASM is a rectangular {-1,0,1} matrix whose row and column
prefix sums all lie in {0,1}.  A (full) ASM is a square partial ASM
whose rows and columns each sum to 1.  Rank tables are the double
prefix sums; they form a lattice under entrywise min/max, which is what
makes sums of matrix Schubert varieties tractable.
"""

from __future__ import annotations

import itertools
import json
import os
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .perm import Permutation, all_permutations, bruhat_leq

DATA_DIR_ENV = "ASMSCHUB_DATA_DIR"

ASM_COUNTS = (1, 2, 7, 42, 429, 7436, 218348)  # n = 1..7
ENUM_LIMIT = 7


def _as_grid(matrix: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    grid = tuple(tuple(row) for row in matrix)
    if not grid or not grid[0]:
        raise ValueError("matrix must be nonempty")
    if any(len(row) != len(grid[0]) for row in grid):
        raise ValueError("matrix rows must all have the same length")
    return grid


@dataclass(frozen=True)
class PartialASM:
    """A validated partial alternating sign matrix.

    >>> PartialASM(((0, 1, 0), (1, -1, 0))).is_asm
    False
    >>> PartialASM(((1,),)).is_asm
    True
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        grid = _as_grid(self.rows)
        object.__setattr__(self, "rows", grid)
        for i, row in enumerate(grid, start=1):
            s = 0
            for j, e in enumerate(row, start=1):
                if e not in (-1, 0, 1):
                    raise ValueError(f"entry {e!r} at ({i},{j}) not in -1,0,1")
                s += e
                if s not in (0, 1):
                    raise ValueError(f"row {i} prefix sum {s} at column {j}")
        for j in range(len(grid[0])):
            s = 0
            for i, row in enumerate(grid, start=1):
                s += row[j]
                if s not in (0, 1):
                    raise ValueError(f"column {j + 1} prefix sum {s} at row {i}")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def is_asm(self) -> bool:
        if self.nrows != self.ncols:
            return False
        if any(sum(row) != 1 for row in self.rows):
            return False
        return all(sum(row[j] for row in self.rows) == 1 for j in range(self.ncols))

    def __call__(self, i: int, j: int) -> int:
        return self.rows[i - 1][j - 1]

    def transpose(self) -> "PartialASM":
        return PartialASM(tuple(zip(*self.rows)))


def make_partial_asm(matrix: Iterable[Iterable[int]]) -> PartialASM:
    return PartialASM(_as_grid(matrix))


@dataclass(frozen=True)
class RankTable:
    """Double prefix sums of a partial ASM.

    Validity means both discrete partials take values in {0,1}; every
    such table is the rank table of exactly one partial ASM.
    """

    values: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        grid = _as_grid(self.values)
        object.__setattr__(self, "values", grid)
        for i, row in enumerate(grid):
            for j, v in enumerate(row):
                up = grid[i - 1][j] if i > 0 else 0
                left = row[j - 1] if j > 0 else 0
                if v - up not in (0, 1):
                    raise ValueError(
                        f"vertical increment {v - up} at ({i + 1},{j + 1})"
                    )
                if v - left not in (0, 1):
                    raise ValueError(
                        f"horizontal increment {v - left} at ({i + 1},{j + 1})"
                    )

    @property
    def nrows(self) -> int:
        return len(self.values)

    @property
    def ncols(self) -> int:
        return len(self.values[0])

    def __call__(self, i: int, j: int) -> int:
        # zero outside the grid's northwest edge, handy for corner sums
        if i == 0 or j == 0:
            return 0
        return self.values[i - 1][j - 1]


def rank_table(A: PartialASM) -> RankTable:
    """Rank table of a partial ASM: rk(a,b) = sum of A over the NW a x b corner.

    >>> rank_table(PartialASM(((0, 1, 0), (1, -1, 0)))).values
    ((0, 1, 1), (1, 1, 1))
    """
    out = []
    col_acc = [0] * A.ncols
    for row in A.rows:
        acc = 0
        line = []
        for j, e in enumerate(row):
            col_acc[j] += e
            acc += col_acc[j]
            line.append(acc)
        out.append(tuple(line))
    return RankTable(tuple(out))


def rank_table_to_asm(T: RankTable) -> PartialASM:
    """Inverse of rank_table: inclusion-exclusion on the corner sums."""
    rows = []
    for i in range(1, T.nrows + 1):
        rows.append(
            tuple(
                T(i, j) - T(i - 1, j) - T(i, j - 1) + T(i - 1, j - 1)
                for j in range(1, T.ncols + 1)
            )
        )
    return PartialASM(tuple(rows))


def rank_table_from_matrix(matrix: Iterable[Iterable[int]]) -> RankTable:
    """Greatest valid rank table lying entrywise below the given grid.

    Valid tables below a fixed grid are closed under entrywise max, so
    the greatest one exists; a decreasing fixpoint reaches it.  Acting
    on a table that is already valid changes nothing.

    >>> rank_table_from_matrix([[0, 1, 2], [0, 4, 1], [8, 2, 4]]).values
    ((0, 1, 1), (0, 1, 1), (1, 2, 2))
    """
    grid = _as_grid(matrix)
    m, n = len(grid), len(grid[0])
    if any(v < 0 for row in grid for v in row):
        raise ValueError("matrix entries must be nonnegative")
    r = [[min(grid[i][j], i + 1, j + 1) for j in range(n)] for i in range(m)]
    changed = True
    while changed:
        changed = False
        for i in range(m):
            for j in range(n):
                v = r[i][j]
                if i > 0:
                    v = min(v, r[i - 1][j] + 1)
                if j > 0:
                    v = min(v, r[i][j - 1] + 1)
                if i + 1 < m:
                    v = min(v, r[i + 1][j])
                if j + 1 < n:
                    v = min(v, r[i][j + 1])
                if v < r[i][j]:
                    r[i][j] = v
                    changed = True
    return RankTable(tuple(tuple(row) for row in r))


def entrywise_extreme_rank_table(
    tables: Sequence[RankTable], mode: str
) -> RankTable:
    """Entrywise min or max of rank tables of equal shape.

    Both operations preserve validity: if each argument has 0/1
    increments, so does the pointwise extreme.
    """
    if not tables:
        raise ValueError("need at least one rank table")
    if mode not in ("min", "max"):
        raise ValueError(f"mode must be 'min' or 'max', got {mode!r}")
    shape = (tables[0].nrows, tables[0].ncols)
    if any((t.nrows, t.ncols) != shape for t in tables):
        raise ValueError("rank tables must share dimensions")
    pick = min if mode == "min" else max
    vals = tuple(
        tuple(pick(t.values[i][j] for t in tables) for j in range(shape[1]))
        for i in range(shape[0])
    )
    return RankTable(vals)


def _try_complete(A: PartialASM, k: int) -> PartialASM | None:
    m, n = A.nrows, A.ncols
    grid = [[A(i + 1, j + 1) if i < m and j < n else 0 for j in range(k)] for i in range(k)]
    # deficient original rows take a 1 in the first unused new column
    next_col = n
    for i in range(m):
        if sum(grid[i]) == 0:
            if next_col >= k:
                return None
            grid[i][next_col] = 1
            next_col += 1
    # columns still summing to zero take a 1 in the first unused new row
    free_rows = [i for i in range(m, k) if sum(grid[i]) == 0]
    for j in range(k):
        if sum(grid[i][j] for i in range(k)) == 0:
            if not free_rows:
                return None
            grid[free_rows.pop(0)][j] = 1
    done = PartialASM(tuple(tuple(row) for row in grid))
    return done if done.is_asm else None


def complete_asm(A: PartialASM) -> PartialASM:
    """Extend a partial ASM to a full ASM containing it as the NW corner.

    Greedy and deterministic; some square size at most nrows+ncols
    always works, but no minimality of the output size is promised.

    >>> complete_asm(PartialASM(((0,),))).rows
    ((0, 1), (1, 0))
    """
    if A.is_asm:
        return A
    for k in range(max(A.nrows, A.ncols), A.nrows + A.ncols + 1):
        done = _try_complete(A, k)
        if done is not None:
            return done
    raise RuntimeError("completion failed below the guaranteed bound")


def pad_asm(A: PartialASM, n: int) -> PartialASM:
    """Pad a full ASM to size n by extending with 1s on the new diagonal."""
    if not A.is_asm:
        raise ValueError("can only pad a full ASM")
    k = A.nrows
    if n < k:
        raise ValueError(f"target size {n} smaller than matrix size {k}")
    if n == k:
        return A
    rows = [row + (0,) * (n - k) for row in A.rows]
    for i in range(k, n):
        rows.append(tuple(1 if j == i else 0 for j in range(n)))
    return PartialASM(tuple(rows))


def asm_sum(asms: Sequence[PartialASM]) -> PartialASM:
    """ASM whose rank table is the entrywise min of the summands' tables.

    Each summand is completed to a full ASM, all are padded to a common
    size, and the minimum table is converted back to a matrix.
    """
    if not asms:
        raise ValueError("need at least one summand")
    completed = [complete_asm(A) for A in asms]
    size = max(A.nrows for A in completed)
    tables = [rank_table(pad_asm(A, size)) for A in completed]
    return rank_table_to_asm(entrywise_extreme_rank_table(tables, "min"))


def permutation_matrix(w: Permutation) -> PartialASM:
    n = len(w)
    return PartialASM(
        tuple(tuple(1 if w(i) == j else 0 for j in range(1, n + 1)) for i in range(1, n + 1))
    )


def as_permutation(A: PartialASM) -> Permutation | None:
    """The permutation of a permutation matrix, else None."""
    if not A.is_asm:
        return None
    if any(e == -1 for row in A.rows for e in row):
        return None
    return Permutation(tuple(row.index(1) + 1 for row in A.rows))


def _row_candidates(n: int) -> list[tuple[int, ...]]:
    # all ASM rows: prefix sums in {0,1}, total 1
    rows = []

    def build(prefix: list[int], s: int):
        if len(prefix) == n:
            if s == 1:
                rows.append(tuple(prefix))
            return
        for e in (-1, 0, 1):
            if s + e in (0, 1):
                prefix.append(e)
                build(prefix, s + e)
                prefix.pop()

    build([], 0)
    return rows


def _enumerate(n: int) -> list[PartialASM]:
    rows = _row_candidates(n)
    out: list[PartialASM] = []
    chosen: list[tuple[int, ...]] = []

    def place(i: int, colsums: tuple[int, ...], coltotals: tuple[int, ...]):
        if i == n:
            if all(t == 1 for t in coltotals):
                out.append(PartialASM(tuple(chosen)))
            return
        remaining = n - i
        for row in rows:
            new_sums = []
            new_totals = []
            ok = True
            for j, e in enumerate(row):
                s = colsums[j] + e
                if s not in (0, 1):
                    ok = False
                    break
                t = coltotals[j] + e
                # a column short of its 1 needs a later row to supply it
                if remaining == 1 and t != 1:
                    ok = False
                    break
                new_sums.append(s)
                new_totals.append(t)
            if ok:
                chosen.append(row)
                place(i + 1, tuple(new_sums), tuple(new_totals))
                chosen.pop()

    place(0, (0,) * n, (0,) * n)
    return out


_ENUM_CACHE: dict[int, tuple[PartialASM, ...]] = {}


def _cache_path(n: int, data_dir: str | None) -> str | None:
    root = data_dir if data_dir is not None else os.environ.get(DATA_DIR_ENV)
    if not root:
        return None
    return os.path.join(root, f"asm{n}.txt")


def enumerate_asms(
    n: int, force: bool = False, data_dir: str | None = None
) -> list[PartialASM]:
    """All n x n ASMs in row-major lexicographic order on entries.

    Sizes above 7 are refused unless force is set; the n = 6, 7 lists
    are large, so a text cache under the data directory is consulted
    before enumerating.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > ENUM_LIMIT and not force:
        raise ValueError(f"n = {n} exceeds the enumeration guard ({ENUM_LIMIT}); pass force to override")
    if n in _ENUM_CACHE:
        return list(_ENUM_CACHE[n])
    path = _cache_path(n, data_dir)
    if path and os.path.exists(path):
        with open(path) as fh:
            asms = matrices_from_text(fh.read())
    else:
        asms = _enumerate(n)
    _ENUM_CACHE[n] = tuple(asms)
    return list(asms)


def random_asms(
    n: int, m: int, seed: int, replace: bool = True
) -> list[PartialASM]:
    """m ASMs of size n drawn uniformly from the full enumeration."""
    if n > ENUM_LIMIT:
        raise ValueError(f"n = {n} exceeds the enumeration guard ({ENUM_LIMIT})")
    pool = enumerate_asms(n)
    rng = random.Random(seed)
    if replace:
        return [pool[rng.randrange(len(pool))] for _ in range(m)]
    return rng.sample(pool, m)


def perm_set_brute_force(A: PartialASM) -> list[Permutation]:
    """Bruhat-minimal permutations whose rank table is bounded by A's.

    Exhaustive scan of S_n, so the completed size must stay at most 5.
    """
    B = complete_asm(A)
    n = B.nrows
    if n > 5:
        raise ValueError(f"brute force limited to n <= 5, got {n}")
    bound = rank_table(B)
    above = []
    for w in all_permutations(n):
        tw = rank_table(permutation_matrix(w))
        if all(
            tw.values[i][j] <= bound.values[i][j]
            for i in range(n)
            for j in range(n)
        ):
            above.append(w)
    minimal = [
        w
        for w in above
        if not any(u != w and bruhat_leq(u, w) for u in above)
    ]
    return sorted(minimal, key=lambda w: w.one_line)


def matrix_to_text(rows: Sequence[Sequence[int]]) -> str:
    return "\n".join(" ".join(str(e) for e in row) for row in rows)


def matrix_from_text(text: str) -> tuple[tuple[int, ...], ...]:
    rows = [
        tuple(int(tok) for tok in line.split())
        for line in text.strip().splitlines()
        if line.strip()
    ]
    return _as_grid(rows)


def matrices_from_text(text: str) -> list[PartialASM]:
    """Parse blank-line-separated matrix blocks."""
    blocks = [b for b in text.split("\n\n") if b.strip()]
    return [PartialASM(matrix_from_text(b)) for b in blocks]


def matrices_to_text(asms: Iterable[PartialASM]) -> str:
    return "\n\n".join(matrix_to_text(A.rows) for A in asms) + "\n"


def asm_to_json(A: PartialASM) -> str:
    return json.dumps([list(row) for row in A.rows])


def asm_from_json(text: str) -> PartialASM:
    return PartialASM(_as_grid(json.loads(text)))


def rank_table_to_json(T: RankTable) -> str:
    return json.dumps([list(row) for row in T.values])


def rank_table_from_json(text: str) -> RankTable:
    return RankTable(_as_grid(json.loads(text)))
