"""Exact scalars, sparse multivariate polynomials, and determinant kernels.

Everything in this module is immutable and pure: values can be shared
freely between threads.  Scalars are ``fractions.Fraction`` (always in
lowest terms with a positive denominator), so no rounding ever occurs.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]

#: Marker returned by :func:`order_at_zero` for the zero polynomial.
INFINITE_ORDER = math.inf


class ContractError(ValueError):
    """A documented precondition of an operation was violated."""


class PropertyViolation(RuntimeError):
    """An identity that should hold unconditionally failed on concrete data."""


class InconclusiveError(RuntimeError):
    """A bounded search could neither certify nor refute; treated as an error."""


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, strings like ``"3/4"``, and Fractions to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ContractError(f"not a rational literal: {value!r}") from exc
    raise ContractError(f"cannot interpret {type(value).__name__} as a rational")


def format_rational(value: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is one."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    return as_rational(text)


# ---------------------------------------------------------------------------
# Variables and monomials
# ---------------------------------------------------------------------------

_VAR_RE = re.compile(r"^(?:t|[XY][1-9][0-9]*)$")

#: Fixed variable ordering: X1 < X2 < ... < Y1 < Y2 < ... < t.
_KIND_ORDER = {"X": 0, "Y": 1, "t": 2}


def variable_key(name: str) -> tuple[int, int]:
    if name == "t":
        return (2, 0)
    return (_KIND_ORDER[name[0]], int(name[1:]))


def check_variable(name: str) -> str:
    if not _VAR_RE.match(name):
        raise ContractError(f"illegal variable name {name!r}; expected Xk, Yk or t")
    return name


Monomial = tuple  # tuple[tuple[str, int], ...] sorted by variable_key, exponents > 0


def _make_monomial(pairs: Iterable[tuple[str, int]]) -> Monomial:
    merged: dict[str, int] = {}
    for name, exp in pairs:
        check_variable(name)
        if exp < 0:
            raise ContractError("negative exponents are not supported")
        if exp:
            merged[name] = merged.get(name, 0) + exp
    return tuple(sorted(merged.items(), key=lambda kv: variable_key(kv[0])))


def _monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for name, exp in b:
        merged[name] = merged.get(name, 0) + exp
    return tuple(sorted(merged.items(), key=lambda kv: variable_key(kv[0])))


def _monomial_degree(mono: Monomial) -> int:
    return sum(exp for _, exp in mono)


class SparsePolynomial:
    """Multivariate polynomial over exact rationals in canonical sparse form.

    Terms are stored as a map from monomials to nonzero coefficients; the
    zero polynomial is the empty map, and two polynomials are equal exactly
    when their term maps are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        cleaned: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = as_rational(coeff)
                if coeff:
                    cleaned[mono] = coeff
        self._terms = cleaned

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "SparsePolynomial":
        return cls()

    @classmethod
    def constant(cls, value: RationalLike) -> "SparsePolynomial":
        value = as_rational(value)
        return cls({(): value}) if value else cls()

    @classmethod
    def one(cls) -> "SparsePolynomial":
        return cls.constant(1)

    @classmethod
    def variable(cls, name: str) -> "SparsePolynomial":
        check_variable(name)
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def monomial(cls, pairs: Iterable[tuple[str, int]],
                 coeff: RationalLike = 1) -> "SparsePolynomial":
        return cls({_make_monomial(pairs): as_rational(coeff)})

    # -- inspection ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, pairs: Iterable[tuple[str, int]]) -> Fraction:
        return self._terms.get(_make_monomial(pairs), Fraction(0))

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; error if any variable occurs."""
        if self.variables():
            raise ContractError("polynomial is not constant")
        return self._terms.get((), Fraction(0))

    def variables(self) -> tuple[str, ...]:
        names = {name for mono in self._terms for name, _ in mono}
        return tuple(sorted(names, key=variable_key))

    def total_degree(self) -> int:
        """Degree of the polynomial; the zero polynomial reports -1."""
        if not self._terms:
            return -1
        return max(_monomial_degree(m) for m in self._terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        if not self._terms:
            return True
        degrees = {_monomial_degree(m) for m in self._terms}
        if len(degrees) > 1:
            return False
        return degree is None or degrees == {degree}

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending graded-lexicographic order (deterministic)."""
        names = self.variables()
        index = {name: pos for pos, name in enumerate(names)}

        def dense_key(mono: Monomial) -> tuple:
            vec = [0] * len(names)
            for name, exp in mono:
                vec[index[name]] = exp
            return (_monomial_degree(mono), tuple(vec))

        return sorted(self._terms.items(), key=lambda kv: dense_key(kv[0]),
                      reverse=True)

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SparsePolynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial({m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> "SparsePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self._terms)
        for mono, coeff in other._terms.items():
            total = merged.get(mono, Fraction(0)) + coeff
            if total:
                merged[mono] = total
            else:
                merged.pop(mono, None)
        result = SparsePolynomial.__new__(SparsePolynomial)
        result._terms = merged
        return result

    __radd__ = __add__

    def __sub__(self, other) -> "SparsePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "SparsePolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "SparsePolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        product: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _monomial_mul(m1, m2)
                total = product.get(mono, Fraction(0)) + c1 * c2
                if total:
                    product[mono] = total
                else:
                    product.pop(mono, None)
        result = SparsePolynomial.__new__(SparsePolynomial)
        result._terms = product
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "SparsePolynomial":
        if exponent < 0:
            raise ContractError("negative powers are not supported")
        result = SparsePolynomial.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @staticmethod
    def _coerce(value) -> "SparsePolynomial":
        if isinstance(value, SparsePolynomial):
            return value
        if isinstance(value, (int, Fraction)):
            return SparsePolynomial.constant(value)
        return NotImplemented

    # -- evaluation and substitution ----------------------------------------

    def evaluate(self, values: Mapping[str, RationalLike]) -> Fraction:
        """Evaluate at a rational point; every occurring variable must be bound."""
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            term = coeff
            for name, exp in mono:
                if name not in values:
                    raise ContractError(f"no value supplied for variable {name}")
                term *= as_rational(values[name]) ** exp
            total += term
        return total

    def substitute(self, mapping: Mapping[str, "SparsePolynomial | RationalLike"],
                   ) -> "SparsePolynomial":
        """Substitute polynomials or constants for variables; others are kept."""
        resolved = {name: (value if isinstance(value, SparsePolynomial)
                           else SparsePolynomial.constant(value))
                    for name, value in mapping.items()}
        total = SparsePolynomial.zero()
        for mono, coeff in self._terms.items():
            term = SparsePolynomial.constant(coeff)
            for name, exp in mono:
                factor = resolved.get(name)
                if factor is None:
                    factor = SparsePolynomial.variable(name)
                term = term * factor ** exp
            total = total + term
        return total

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> list[dict]:
        return [{"coeff": format_rational(coeff),
                 "exps": {name: exp for name, exp in mono}}
                for mono, coeff in self.sorted_terms()]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, coeff in self.sorted_terms():
            factors = "*".join(name if exp == 1 else f"{name}^{exp}"
                               for name, exp in mono)
            if not factors:
                parts.append(format_rational(coeff))
            elif coeff == 1:
                parts.append(factors)
            elif coeff == -1:
                parts.append(f"-{factors}")
            else:
                parts.append(f"{format_rational(coeff)}*{factors}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"SparsePolynomial({self})"


# ---------------------------------------------------------------------------
# Determinants and rank
# ---------------------------------------------------------------------------


def _check_square(matrix: Sequence[Sequence]) -> int:
    n = len(matrix)
    for row in matrix:
        if len(row) != n:
            raise ContractError(f"matrix is not square: {n} rows, "
                                f"row of length {len(row)}")
    return n


def determinant_exact(matrix: Sequence[Sequence[RationalLike]]) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    The 0x0 determinant is 1 by the empty-product convention.
    """
    n = _check_square(matrix)
    if n == 0:
        return Fraction(1)
    work = [[as_rational(entry) for entry in row] for row in matrix]
    sign = 1
    previous = Fraction(1)
    for k in range(n - 1):
        if work[k][k] == 0:
            for swap in range(k + 1, n):
                if work[swap][k] != 0:
                    work[k], work[swap] = work[swap], work[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = work[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss update: the division by the previous pivot is exact.
                work[i][j] = (work[i][j] * pivot - work[i][k] * work[k][j]) / previous
            work[i][k] = Fraction(0)
        previous = pivot
    return sign * work[n - 1][n - 1]


def determinant_polynomial(
        matrix: Sequence[Sequence[SparsePolynomial]]) -> SparsePolynomial:
    """Exact determinant of a polynomial matrix.

    Uses cofactor expansion with memoization on column subsets, so no
    division by a possibly-zero polynomial ever happens.
    """
    n = _check_square(matrix)
    if n == 0:
        return SparsePolynomial.one()
    cache: dict[tuple[int, ...], SparsePolynomial] = {}

    def expand(cols: tuple[int, ...]) -> SparsePolynomial:
        if not cols:
            return SparsePolynomial.one()
        known = cache.get(cols)
        if known is not None:
            return known
        row = n - len(cols)
        total = SparsePolynomial.zero()
        for pos, col in enumerate(cols):
            entry = matrix[row][col]
            if entry.is_zero:
                continue
            rest = cols[:pos] + cols[pos + 1:]
            term = entry * expand(rest)
            total = total - term if pos % 2 else total + term
        cache[cols] = total
        return total

    return expand(tuple(range(n)))


def matrix_rank(matrix: Sequence[Sequence[RationalLike]]) -> int:
    """Exact rank via Gaussian elimination over the rationals."""
    work = [[as_rational(entry) for entry in row] for row in matrix]
    if not work or not work[0]:
        return 0
    n_rows, n_cols = len(work), len(work[0])
    rank = 0
    for col in range(n_cols):
        pivot_row = next((r for r in range(rank, n_rows) if work[r][col] != 0), None)
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        pivot = work[rank][col]
        for r in range(rank + 1, n_rows):
            if work[r][col]:
                factor = work[r][col] / pivot
                for c in range(col, n_cols):
                    work[r][c] -= factor * work[rank][c]
        rank += 1
        if rank == n_rows:
            break
    return rank


def order_at_zero(poly: SparsePolynomial) -> int | float:
    """Minimal exponent of ``t`` with nonzero coefficient.

    Returns :data:`INFINITE_ORDER` for the zero polynomial.  The input must
    involve no variable other than ``t``.
    """
    bad = [name for name in poly.variables() if name != "t"]
    if bad:
        raise ContractError(f"polynomial is not univariate in t: found {bad}")
    if poly.is_zero:
        return INFINITE_ORDER
    orders = []
    for mono, _ in poly._terms.items():
        orders.append(mono[0][1] if mono else 0)
    return min(orders)


def univariate_coefficients(poly: SparsePolynomial) -> list[Fraction]:
    """Dense coefficient list c[k] of a polynomial in ``t`` (ascending)."""
    bad = [name for name in poly.variables() if name != "t"]
    if bad:
        raise ContractError(f"polynomial is not univariate in t: found {bad}")
    if poly.is_zero:
        return []
    coeffs = [Fraction(0)] * (poly.total_degree() + 1)
    for mono, coeff in poly._terms.items():
        coeffs[mono[0][1] if mono else 0] = coeff
    return coeffs


def iter_index_subsets(universe: int, size: int) -> Iterator[tuple[int, ...]]:
    """All strictly increasing ``size``-subsets of ``range(universe)``."""
    from itertools import combinations

    return combinations(range(universe), size)
