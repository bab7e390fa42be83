"""Exact arithmetic substrate: homogeneous polynomials, monomial bases and
rank computations over the rationals.

Rationals are :class:`fractions.Fraction` throughout; nothing in the package
ever touches a float.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, lcm
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

Exponent = Tuple[int, ...]

__all__ = [
    "Fraction",
    "HomPoly",
    "RationalMatrix",
    "monomial_basis",
    "poly_mul",
    "rank",
    "kernel_dim",
    "det3",
]


def monomial_basis(num_vars: int, degree: int) -> List[Exponent]:
    """All exponent vectors of total ``degree`` in graded-lex order.

    >>> monomial_basis(3, 1)
    [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    """
    if num_vars not in (2, 3):
        raise ValueError(f"num_vars must be 2 or 3, got {num_vars}")
    if degree < 0:
        return []
    out = []
    # multisets of variable indices, sorted, enumerate lex-descending exponents
    for idx in combinations_with_replacement(range(num_vars), degree):
        exp = [0] * num_vars
        for i in idx:
            exp[i] += 1
        out.append(tuple(exp))
    assert len(out) == comb(degree + num_vars - 1, num_vars - 1)
    return out


class HomPoly:
    """Sparse homogeneous polynomial with rational coefficients.

    ``terms`` maps exponent tuples to nonzero :class:`Fraction` values. The
    zero polynomial keeps a declared ``degree`` (possibly negative, e.g. a
    section of ``O(-1)``) so degree bookkeeping stays total.
    """

    __slots__ = ("num_vars", "degree", "_terms", "_hash")

    def __init__(self, num_vars: int, degree: int, terms: Optional[Mapping[Exponent, object]] = None):
        if num_vars not in (2, 3):
            raise ValueError(f"num_vars must be 2 or 3, got {num_vars}")
        clean: Dict[Exponent, Fraction] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(x) for x in exp)
            if len(exp) != num_vars or min(exp) < 0 or sum(exp) != degree:
                raise ValueError(f"exponent {exp} invalid for degree {degree} in {num_vars} variables")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        self.num_vars = num_vars
        self.degree = degree
        self._terms = clean
        self._hash = None

    @classmethod
    def zero(cls, num_vars: int, degree: int) -> "HomPoly":
        return cls(num_vars, degree)

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff=1) -> "HomPoly":
        exp = tuple(exp)
        return cls(len(exp), sum(exp), {exp: coeff})

    @classmethod
    def variable(cls, i: int, num_vars: int = 3) -> "HomPoly":
        exp = [0] * num_vars
        exp[i] = 1
        return cls.monomial(exp)

    @classmethod
    def from_coefficients(cls, num_vars: int, degree: int, coeffs: Iterable[object]) -> "HomPoly":
        """Build from a coefficient list aligned with :func:`monomial_basis`."""
        basis = monomial_basis(num_vars, degree)
        coeffs = list(coeffs)
        if len(coeffs) != len(basis):
            raise ValueError(f"expected {len(basis)} coefficients, got {len(coeffs)}")
        return cls(num_vars, degree, dict(zip(basis, coeffs)))

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def coeff(self, exp: Exponent) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def coefficients(self) -> List[Fraction]:
        """Dense coefficient vector in graded-lex order."""
        return [self.coeff(e) for e in monomial_basis(self.num_vars, self.degree)]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check_compatible(self, other: "HomPoly") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError("mismatched variable counts")
        if self.degree != other.degree:
            raise ValueError(f"cannot add degree {self.degree} and degree {other.degree}")

    def __add__(self, other: "HomPoly") -> "HomPoly":
        if not isinstance(other, HomPoly):
            return NotImplemented
        self._check_compatible(other)
        terms = dict(self._terms)
        for exp, c in other._terms.items():
            terms[exp] = terms.get(exp, 0) + c
        return HomPoly(self.num_vars, self.degree, terms)

    def __neg__(self) -> "HomPoly":
        return HomPoly(self.num_vars, self.degree, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HomPoly):
            return poly_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return HomPoly(self.num_vars, self.degree, {e: c * other for e, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "HomPoly":
        if n < 0:
            raise ValueError("negative power")
        out = HomPoly(self.num_vars, 0, {(0,) * self.num_vars: 1})
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomPoly):
            return NotImplemented
        return (self.num_vars, self.degree, self._terms) == (other.num_vars, other.degree, other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vars, self.degree, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"HomPoly({self.num_vars}, {self.degree}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp in sorted(self._terms, reverse=True):
            c = self._terms[exp]
            mono = "*".join(f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in enumerate(exp) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_mul(p: HomPoly, q: HomPoly) -> HomPoly:
    if p.num_vars != q.num_vars:
        raise ValueError("mismatched variable counts")
    terms: Dict[Exponent, Fraction] = {}
    for e1, c1 in p._terms.items():
        for e2, c2 in q._terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            terms[e] = terms.get(e, 0) + c1 * c2
    return HomPoly(p.num_vars, p.degree + q.degree, terms)


class RationalMatrix:
    """Sparse rational matrix stored as ``{(row, col): value}``."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, rows: int, cols: int, entries: Optional[Mapping[Tuple[int, int], object]] = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative shape")
        clean = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"entry ({i}, {j}) outside {rows}x{cols}")
            v = Fraction(v)
            if v:
                clean[(i, j)] = v
        self.rows = rows
        self.cols = cols
        self._entries = clean

    @classmethod
    def from_rows(cls, rows: List[List[object]]) -> "RationalMatrix":
        ncols = len(rows[0]) if rows else 0
        entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)}
        return cls(len(rows), ncols, entries)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @property
    def entries(self) -> Dict[Tuple[int, int], Fraction]:
        return dict(self._entries)

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        return self._entries.get(key, Fraction(0))

    def to_rows(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._entries.items():
            out[i][j] = v
        return out

    def __repr__(self) -> str:
        return f"RationalMatrix({self.rows}x{self.cols}, nnz={len(self._entries)})"


def _integer_rows(M: RationalMatrix) -> List[List[int]]:
    """Clear denominators row by row; the row space is unchanged."""
    rows = M.to_rows()
    out = []
    for row in rows:
        if not any(row):
            continue
        scale = lcm(*(v.denominator for v in row))
        out.append([int(v * scale) for v in row])
    return out


def rank(M: RationalMatrix) -> int:
    """Exact rank by fraction-free (Bareiss) elimination."""
    a = _integer_rows(M)
    n, ncols = len(a), M.cols
    r = 0
    prev = 1
    for col in range(ncols):
        if r == n:
            break
        piv = next((i for i in range(r, n) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][col]
        pivot_row = a[r]
        for i in range(r + 1, n):
            row = a[i]
            f = row[col]
            for j in range(col + 1, ncols):
                # exact division is the Bareiss invariant
                row[j] = (row[j] * p - f * pivot_row[j]) // prev
            row[col] = 0
        prev = p
        r += 1
    return r


def kernel_dim(M: RationalMatrix) -> int:
    return M.cols - rank(M)


def det3(rows: List[List[Fraction]]) -> Fraction:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
