"""Exact sparse multivariate polynomials over the rationals.

Variables come in three families: a generic matrix z[i,j] and two
alphabets x[i], y[i].  Polynomials store their terms in a canonical
descending order (degree first, then reverse-lex on the fixed variable
priority x < y < z, each family ascending), which makes rendering and
structural equality deterministic.  Term orders for Groebner work are
separate values so the same polynomial can be read under several
orders.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Var = tuple
Monomial = tuple  # ((var, exp), ...) sorted by _var_key, exps positive

_FAMILY_RANK = {"x": 0, "y": 1, "z": 2, "t": 3}


def x_(i: int) -> Var:
    return ("x", i)


def y_(i: int) -> Var:
    return ("y", i)


def z_(i: int, j: int) -> Var:
    return ("z", i, j)


def _var_key(v: Var):
    return (_FAMILY_RANK[v[0]],) + tuple(v[1:])


def var_to_text(v: Var) -> str:
    return f"{v[0]}[{','.join(str(k) for k in v[1:])}]"


def monomial(pairs: Iterable[tuple[Var, int]]) -> Monomial:
    acc: dict[Var, int] = {}
    for v, e in pairs:
        if e < 0:
            raise ValueError(f"negative exponent {e} on {var_to_text(v)}")
        if e:
            acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items(), key=lambda it: _var_key(it[0])))


MONE: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return monomial(itertools.chain(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(e for _, e in a)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    bd = dict(b)
    return all(bd.get(v, 0) >= e for v, e in a)


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, defined only when b divides a."""
    bd = dict(b)
    out = []
    for v, e in a:
        r = e - bd.pop(v, 0)
        if r < 0:
            raise ValueError("inexact monomial division")
        if r:
            out.append((v, r))
    if bd:
        raise ValueError("inexact monomial division")
    return tuple(out)


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    acc = dict(a)
    for v, e in b:
        acc[v] = max(acc.get(v, 0), e)
    return tuple(sorted(acc.items(), key=lambda it: _var_key(it[0])))


def mono_support(a: Monomial) -> tuple[Var, ...]:
    return tuple(v for v, _ in a)


def _display_sort(terms: Iterable[tuple[Monomial, Fraction]]):
    terms = list(terms)
    vs = sorted({v for m, _ in terms for v, _ in m}, key=_var_key)
    pos = {v: k for k, v in enumerate(vs)}

    def key(item):
        m, _ = item
        vec = [0] * len(vs)
        for v, e in m:
            vec[pos[v]] = e
        return (mono_degree(m), tuple(-e for e in reversed(vec)))

    terms.sort(key=key, reverse=True)
    return tuple(terms)


@dataclass(frozen=True)
class Polynomial:
    """Immutable polynomial with exact rational coefficients.

    >>> f = variable(x_(1)) + variable(x_(2))
    >>> poly_to_text(f * f)
    'x[1]^2 + 2*x[1]*x[2] + x[2]^2'
    """

    terms: tuple[tuple[Monomial, Fraction], ...]

    @staticmethod
    def from_dict(d: Mapping[Monomial, Fraction | int]) -> "Polynomial":
        cleaned = {}
        for m, c in d.items():
            c = Fraction(c)
            if c:
                cleaned[m] = c
        return Polynomial(_display_sort(cleaned.items()))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self.terms)

    def coefficient(self, m: Monomial) -> Fraction:
        for mono_, c in self.terms:
            if mono_ == m:
                return c
        return Fraction(0)

    def degree(self) -> int:
        """Total degree; the zero polynomial gets -1."""
        if self.is_zero:
            return -1
        return max(mono_degree(m) for m, _ in self.terms)

    def variables(self) -> set:
        return {v for m, _ in self.terms for v, _ in m}

    def constant_term(self) -> Fraction:
        return self.coefficient(MONE)

    def __add__(self, other) -> "Polynomial":
        other = as_polynomial(other)
        acc = dict(self.terms)
        for m, c in other.terms:
            s = acc.get(m, Fraction(0)) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return Polynomial(_display_sort(acc.items()))

    def __radd__(self, other) -> "Polynomial":
        return self.__add__(other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other) -> "Polynomial":
        return self + (-as_polynomial(other))

    def __rsub__(self, other) -> "Polynomial":
        return as_polynomial(other) + (-self)

    def __mul__(self, other) -> "Polynomial":
        other = as_polynomial(other)
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = mono_mul(m1, m2)
                s = acc.get(m, Fraction(0)) + c1 * c2
                if s:
                    acc[m] = s
                else:
                    del acc[m]
        return Polynomial(_display_sort(acc.items()))

    def __rmul__(self, other) -> "Polynomial":
        return self.__mul__(other)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __str__(self) -> str:
        return poly_to_text(self)


ZERO = Polynomial(())
ONE = Polynomial(((MONE, Fraction(1)),))


def as_polynomial(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return constant(value)
    raise TypeError(f"cannot coerce {value!r} to a polynomial")


def constant(c) -> Polynomial:
    c = Fraction(c)
    return Polynomial(((MONE, c),)) if c else ZERO


def variable(v: Var) -> Polynomial:
    return Polynomial(((monomial([(v, 1)]), Fraction(1)),))


def term(c, pairs: Iterable[tuple[Var, int]]) -> Polynomial:
    c = Fraction(c)
    return Polynomial(((monomial(pairs), c),)) if c else ZERO


@dataclass(frozen=True)
class TermOrder:
    """Lex or graded reverse-lex over an explicit variable priority.

    The priority sequence lists variables highest first and must cover
    every variable of any monomial it compares.
    """

    kind: str
    priority: tuple[Var, ...]
    _pos: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        object.__setattr__(self, "priority", tuple(self.priority))
        object.__setattr__(
            self, "_pos", {v: k for k, v in enumerate(self.priority)}
        )

    def _vector(self, m: Monomial) -> tuple[int, ...]:
        vec = [0] * len(self.priority)
        for v, e in m:
            k = self._pos.get(v)
            if k is None:
                raise ValueError(f"variable {var_to_text(v)} not covered by the term order")
            vec[k] = e
        return tuple(vec)

    def key(self, m: Monomial):
        """Sort key: larger key means larger monomial."""
        vec = self._vector(m)
        if self.kind == "lex":
            return vec
        return (sum(vec), tuple(-e for e in reversed(vec)))


def lex_order(priority: Sequence[Var]) -> TermOrder:
    return TermOrder("lex", tuple(priority))


def grevlex_order(priority: Sequence[Var]) -> TermOrder:
    return TermOrder("grevlex", tuple(priority))


def antidiagonal_order(m: int, n: int) -> TermOrder:
    """Lex order making every minor of Z lead with its antidiagonal.

    Priority runs through rows top to bottom, columns right to left, so
    the top-right entry of any submatrix dominates.
    """
    if m < 1 or n < 1:
        raise ValueError("matrix dimensions must be positive")
    priority = [z_(i, j) for i in range(1, m + 1) for j in range(n, 0, -1)]
    return lex_order(priority)


def lead_term(f: Polynomial, order: TermOrder) -> Polynomial:
    m, c = max(f.terms, key=lambda it: order.key(it[0])) if f.terms else (None, None)
    if m is None:
        raise ValueError("zero polynomial has no lead term")
    return Polynomial(((m, c),))


def lead_monomial(f: Polynomial, order: TermOrder) -> Monomial:
    if f.is_zero:
        raise ValueError("zero polynomial has no lead term")
    return max((m for m, _ in f.terms), key=order.key)


def lead_coefficient(f: Polynomial, order: TermOrder) -> Fraction:
    return f.coefficient(lead_monomial(f, order))


def generic_minor(rows: Iterable[int], cols: Iterable[int]) -> Polynomial:
    """Determinant of the z-submatrix on the given rows and columns.

    >>> poly_to_text(generic_minor([1, 2], [1, 2]))
    '-z[1,2]*z[2,1] + z[1,1]*z[2,2]'
    """
    rows = sorted(rows)
    cols = sorted(cols)
    if len(rows) != len(cols) or not rows:
        raise ValueError("row and column sets must be nonempty and of equal size")
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise ValueError("row and column indices must be distinct")

    def expand(rs: tuple[int, ...], cs: tuple[int, ...]) -> Polynomial:
        if len(rs) == 1:
            return variable(z_(rs[0], cs[0]))
        out = ZERO
        rest = rs[1:]
        for k, c in enumerate(cs):
            cofactor = expand(rest, cs[:k] + cs[k + 1 :])
            piece = variable(z_(rs[0], c)) * cofactor
            out = out + (piece if k % 2 == 0 else -piece)
        return out

    return expand(tuple(rows), tuple(cols))


def map_variables(f: Polynomial, mapping: Mapping[Var, Var]) -> Polynomial:
    acc: dict[Monomial, Fraction] = {}
    for m, c in f.terms:
        nm = monomial((mapping.get(v, v), e) for v, e in m)
        acc[nm] = acc.get(nm, Fraction(0)) + c
    return Polynomial.from_dict(acc)


def substitute(f: Polynomial, values: Mapping[Var, Polynomial]) -> Polynomial:
    out = ZERO
    for m, c in f.terms:
        piece = constant(c)
        for v, e in m:
            base = values.get(v)
            piece = piece * (base**e if base is not None else term(1, [(v, e)]))
        out = out + piece
    return out


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """Newton divided difference (f - swap_i f) / (x_i - x_{i+1}).

    Computed term by term via the telescoping identity, so no division
    ever happens and exactness is automatic.

    >>> poly_to_text(divided_difference(variable(x_(1)) ** 2, 1))
    'x[1] + x[2]'
    """
    if i < 1:
        raise ValueError("index must be positive")
    u, v = x_(i), x_(i + 1)
    acc: dict[Monomial, Fraction] = {}
    for m, c in f.terms:
        d = dict(m)
        a = d.pop(u, 0)
        b = d.pop(v, 0)
        if a == b:
            continue
        rest = tuple(sorted(d.items(), key=lambda it: _var_key(it[0])))
        sign = 1 if a > b else -1
        for p in range(min(a, b), max(a, b)):
            q = a + b - 1 - p
            nm = mono_mul(rest, monomial([(u, p), (v, q)]))
            s = acc.get(nm, Fraction(0)) + sign * c
            if s:
                acc[nm] = s
            else:
                del acc[nm]
    return Polynomial(_display_sort(acc.items()))


def isobaric_divided_difference(f: Polynomial, i: int) -> Polynomial:
    """Demazure operator f -> partial_i(f - x_{i+1} f)."""
    return divided_difference(f - variable(x_(i + 1)) * f, i)


def swap_variables(f: Polynomial, i: int) -> Polynomial:
    return map_variables(f, {x_(i): x_(i + 1), x_(i + 1): x_(i)})


def poly_to_text(f: Polynomial) -> str:
    if f.is_zero:
        return "0"
    chunks = []
    for k, (m, c) in enumerate(f.terms):
        neg = c < 0
        mag = -c if neg else c
        parts = []
        if mag != 1 or not m:
            parts.append(str(mag))
        for v, e in m:
            parts.append(var_to_text(v) + (f"^{e}" if e > 1 else ""))
        body = "*".join(parts)
        if k == 0:
            chunks.append(("-" if neg else "") + body)
        else:
            chunks.append(("- " if neg else "+ ") + body)
    return " ".join(chunks)


_VAR_RE = re.compile(r"^([xyz])\[(\d+(?:,\d+)*)\](?:\^(\d+))?$")
_COEFF_RE = re.compile(r"^\d+(?:/\d+)?$")


def poly_from_text(text: str) -> Polynomial:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    if s == "0":
        return ZERO
    out: dict[Monomial, Fraction] = {}
    for piece in re.findall(r"[+-]?[^+-]+", s):
        sign = Fraction(1)
        if piece[0] in "+-":
            if piece[0] == "-":
                sign = Fraction(-1)
            piece = piece[1:]
        coeff = sign
        pairs: list[tuple[Var, int]] = []
        for factor in piece.split("*"):
            mv = _VAR_RE.match(factor)
            if mv:
                fam, idx, exp = mv.group(1), mv.group(2), mv.group(3)
                v = (fam,) + tuple(int(t) for t in idx.split(","))
                if (fam == "z") != (len(v) == 3):
                    raise ValueError(f"bad variable {factor!r}")
                pairs.append((v, int(exp) if exp else 1))
            elif _COEFF_RE.match(factor):
                coeff *= Fraction(factor)
            else:
                raise ValueError(f"cannot parse factor {factor!r}")
        m = monomial(pairs)
        out[m] = out.get(m, Fraction(0)) + coeff
    return Polynomial.from_dict(out)


def poly_to_json(f: Polynomial) -> str:
    data = [
        {
            "coefficient": str(c),
            "exponents": [list(v) + [e] for v, e in m],
        }
        for m, c in f.terms
    ]
    return json.dumps(data)


def poly_from_json(text: str) -> Polynomial:
    data = json.loads(text)
    acc: dict[Monomial, Fraction] = {}
    for entry in data:
        pairs = [(tuple(item[:-1]), item[-1]) for item in entry["exponents"]]
        m = monomial(pairs)
        acc[m] = acc.get(m, Fraction(0)) + Fraction(entry["coefficient"])
    return Polynomial.from_dict(acc)
