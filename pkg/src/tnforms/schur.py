"""Schur polynomial evaluation: tableau sums and Jacobi-Trudi determinants.

Two independent routes are provided.  ``schur_eval`` sums monomials over all
semistandard fillings; ``jacobi_trudi_eval`` takes the determinant of a
matrix of complete homogeneous symmetric polynomials with exponent
``outer[p] - inner[q] - p + q``.  (The exponent convention was fixed by
checking the determinant route against the tableau sum on small shapes; the
opposite sign of ``p - q`` makes already the shape (2,1) fail.)  A fully
symbolic mode over sparse polynomials is available for small shapes.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .core import (ContractError, RationalLike, SparsePolynomial, as_rational,
                   determinant_exact, determinant_polynomial)
from .tableaux import SkewShape, as_partition, enumerate_ssyt

EvaluationPoint = tuple[Fraction, ...]


def as_point(values: Sequence[RationalLike]) -> EvaluationPoint:
    point = tuple(as_rational(v) for v in values)
    if not point:
        raise ContractError("evaluation points need at least one coordinate")
    return point


def complete_homogeneous(i: int, point: Sequence[RationalLike]) -> Fraction:
    """h_i at the point: the sum over weakly increasing i-tuples of products.

    h_0 = 1 and h_i = 0 for negative i.
    """
    point = as_point(point)
    if i < 0:
        return Fraction(0)
    # h_i(x_1..x_k) = h_i(x_1..x_{k-1}) + x_k * h_{i-1}(x_1..x_k)
    table = [Fraction(1)] + [Fraction(0)] * i
    for x in point:
        for m in range(1, i + 1):
            table[m] += x * table[m - 1]
    return table[i]


@lru_cache(maxsize=None)
def _content_multiplicities(shape: SkewShape,
                            n: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    counts: dict[tuple[int, ...], int] = {}
    for tableau in enumerate_ssyt(shape, n):
        content = tableau.content(length=n)
        counts[content] = counts.get(content, 0) + 1
    return tuple(sorted(counts.items()))


def schur_eval(shape: SkewShape, point: Sequence[RationalLike]) -> Fraction:
    """Tableau-sum value: sum over fillings of prod_i x_i^(count of i-1)."""
    point = as_point(point)
    total = Fraction(0)
    for content, count in _content_multiplicities(shape, len(point)):
        term = Fraction(count)
        for x, exp in zip(point, content):
            term *= x ** exp
        total += term
    return total


def jacobi_trudi_eval(shape: SkewShape, point: Sequence[RationalLike]) -> Fraction:
    """Determinant route: det(h_{outer_p - inner_q - p + q})."""
    point = as_point(point)
    length = shape.n_rows
    if length == 0:
        return Fraction(1)
    matrix = [[complete_homogeneous(shape.outer[p] - shape.inner[q] - p + q, point)
               for q in range(length)] for p in range(length)]
    return determinant_exact(matrix)


# -- symbolic mode ----------------------------------------------------------


def _x_vars(n: int) -> list[SparsePolynomial]:
    return [SparsePolynomial.variable(f"X{k}") for k in range(1, n + 1)]


def complete_homogeneous_polynomial(i: int, n: int) -> SparsePolynomial:
    """h_i as a polynomial in X1..Xn."""
    if n < 1:
        raise ContractError("need at least one variable")
    if i < 0:
        return SparsePolynomial.zero()
    table = [SparsePolynomial.one()] + [SparsePolynomial.zero()] * i
    for x in _x_vars(n):
        for m in range(1, i + 1):
            table[m] = table[m] + x * table[m - 1]
    return table[i]


def schur_polynomial(shape: SkewShape, n: int) -> SparsePolynomial:
    """Tableau-sum Schur polynomial in X1..Xn."""
    if n < 1:
        raise ContractError("need at least one variable")
    total = SparsePolynomial.zero()
    for content, count in _content_multiplicities(shape, n):
        mono = SparsePolynomial.monomial(
            [(f"X{k + 1}", exp) for k, exp in enumerate(content)], count)
        total = total + mono
    return total


def jacobi_trudi_polynomial(shape: SkewShape, n: int) -> SparsePolynomial:
    length = shape.n_rows
    if length == 0:
        return SparsePolynomial.one()
    matrix = [[complete_homogeneous_polynomial(
        shape.outer[p] - shape.inner[q] - p + q, n)
        for q in range(length)] for p in range(length)]
    return determinant_polynomial(matrix)


def straight_shape(parts: Sequence[int]) -> SkewShape:
    return SkewShape.straight(as_partition(parts))
