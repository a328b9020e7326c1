"""Toeplitz matrices of bivariate forms and their positivity structure.

The band matrix of index ``i`` of a degree-``d`` form has shape
``(i+1) x (d-i+1)`` with entry ``(p, q) = c_{i+q-p}``; it is constant along
diagonals.  Total positivity is decided through consecutive minors (Fekete's
criterion), total nonnegativity by exhaustive exact minor enumeration with a
negative-minor witness on failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .core import ContractError, determinant_exact, format_rational, matrix_rank
from .forms import BivariateForm, first_nonzero_index

IndexSet = tuple[int, ...]


def as_index_set(indices: Sequence[int]) -> IndexSet:
    out = tuple(int(v) for v in indices)
    if any(v < 0 for v in out):
        raise ContractError("index sets contain nonnegative integers only")
    if any(a >= b for a, b in zip(out, out[1:])):
        raise ContractError(f"index set must be strictly increasing: {out}")
    return out


@dataclass(frozen=True)
class ToeplitzMatrix:
    i: int
    d: int
    rows: tuple[tuple[Fraction, ...], ...]

    @property
    def n_rows(self) -> int:
        return self.i + 1

    @property
    def n_cols(self) -> int:
        return self.d - self.i + 1

    def entry(self, p: int, q: int) -> Fraction:
        return self.rows[p][q]

    def to_json_obj(self) -> dict:
        return {"i": self.i, "d": self.d,
                "rows": [[format_rational(e) for e in row] for row in self.rows]}

    def __str__(self) -> str:
        cells = [[format_rational(e) for e in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def build(form: BivariateForm, i: int) -> ToeplitzMatrix:
    """The band matrix with entry (p, q) = c_{i+q-p}; needs 0 <= i <= d."""
    d = form.degree
    if not 0 <= i <= d:
        raise ContractError(f"band index {i} outside [0, {d}]")
    rows = tuple(tuple(form.coeffs[i + q - p] for q in range(d - i + 1))
                 for p in range(i + 1))
    return ToeplitzMatrix(i, d, rows)


def submatrix(matrix: ToeplitzMatrix, row_set: Sequence[int],
              col_set: Sequence[int]) -> tuple[tuple[Fraction, ...], ...]:
    rows = as_index_set(row_set)
    cols = as_index_set(col_set)
    if rows and rows[-1] >= matrix.n_rows:
        raise ContractError(f"row index {rows[-1]} out of range")
    if cols and cols[-1] >= matrix.n_cols:
        raise ContractError(f"column index {cols[-1]} out of range")
    return tuple(tuple(matrix.rows[p][q] for q in cols) for p in rows)


def minor(matrix: ToeplitzMatrix, row_set: Sequence[int],
          col_set: Sequence[int]) -> Fraction:
    rows = as_index_set(row_set)
    cols = as_index_set(col_set)
    if len(rows) != len(cols):
        raise ContractError("minor needs equally many rows and columns")
    return determinant_exact(submatrix(matrix, rows, cols))


def maximal_minor(matrix: ToeplitzMatrix, col_set: Sequence[int]) -> Fraction:
    """Minor using all rows; the column set has size i+1."""
    return minor(matrix, tuple(range(matrix.n_rows)), col_set)


def is_consecutive(row_set: Sequence[int], col_set: Sequence[int]) -> bool:
    rows, cols = as_index_set(row_set), as_index_set(col_set)
    run = lambda s: all(b == a + 1 for a, b in zip(s, s[1:]))
    return run(rows) and run(cols)


def is_initial(row_set: Sequence[int], col_set: Sequence[int]) -> bool:
    if not is_consecutive(row_set, col_set):
        return False
    rows, cols = as_index_set(row_set), as_index_set(col_set)
    return (bool(rows) and rows[0] == 0) or (bool(cols) and cols[0] == 0)


def translate_to_initial(matrix: ToeplitzMatrix, row_set: Sequence[int],
                         col_set: Sequence[int]) -> tuple[IndexSet, IndexSet]:
    """Slide a consecutive submatrix along its diagonals until it is initial.

    The shift is t = min(a_0, b_0); entries are unchanged because the matrix
    is constant along diagonals.
    """
    rows, cols = as_index_set(row_set), as_index_set(col_set)
    if len(rows) != len(cols) or not rows:
        raise ContractError("need nonempty index sets of equal size")
    if not is_consecutive(rows, cols):
        raise ContractError("index sets must be consecutive runs")
    submatrix(matrix, rows, cols)  # bounds check
    t = min(rows[0], cols[0])
    return (tuple(a - t for a in rows), tuple(b - t for b in cols))


@dataclass(frozen=True)
class ConsecutiveCorrespondence:
    """Size-preserving bijection between consecutive submatrices of the band
    matrices of index ``i-1`` and index ``i`` (sizes up to ``i``)."""

    form: BivariateForm
    i: int

    def forward(self, row_set: Sequence[int],
                col_set: Sequence[int]) -> tuple[IndexSet, IndexSet]:
        """Consecutive (A, B) of index i-1 to an equal submatrix of index i."""
        rows, cols = as_index_set(row_set), as_index_set(col_set)
        if not is_consecutive(rows, cols):
            raise ContractError("index sets must be consecutive runs")
        lower = build(self.form, self.i - 1)
        submatrix(lower, rows, cols)  # bounds check
        if cols[-1] <= lower.n_cols - 2:
            return (tuple(a + 1 for a in rows), cols)
        return (rows, tuple(b - 1 for b in cols))

    def inverse(self, row_set: Sequence[int],
                col_set: Sequence[int]) -> tuple[IndexSet, IndexSet]:
        """Consecutive (A, B) of index i, size <= i, back to index i-1."""
        rows, cols = as_index_set(row_set), as_index_set(col_set)
        if not is_consecutive(rows, cols):
            raise ContractError("index sets must be consecutive runs")
        if len(rows) > self.i:
            raise ContractError(
                f"only submatrices of size <= {self.i} descend one level")
        upper = build(self.form, self.i)
        submatrix(upper, rows, cols)  # bounds check
        if rows[-1] <= self.i - 1:
            return (rows, tuple(b + 1 for b in cols))
        return (tuple(a - 1 for a in rows), cols)


def consecutive_correspondence(form: BivariateForm,
                               i: int) -> ConsecutiveCorrespondence:
    if not 1 <= i <= form.degree // 2:
        raise ContractError("need 1 <= i <= floor(d/2)")
    return ConsecutiveCorrespondence(form, i)


def iter_consecutive_sets(matrix: ToeplitzMatrix, size: int,
                          ) -> Iterator[tuple[IndexSet, IndexSet]]:
    for a0 in range(matrix.n_rows - size + 1):
        rows = tuple(range(a0, a0 + size))
        for b0 in range(matrix.n_cols - size + 1):
            yield rows, tuple(range(b0, b0 + size))


@dataclass(frozen=True)
class MinorWitness:
    rows: IndexSet
    cols: IndexSet
    value: Fraction

    def to_json_obj(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols),
                "value": format_rational(self.value)}


@dataclass(frozen=True)
class TNResult:
    ok: bool
    witness: Optional[MinorWitness] = None

    def __bool__(self) -> bool:
        return self.ok


def is_totally_positive(matrix: ToeplitzMatrix, oracle: bool = False) -> bool:
    """All minors positive.

    The default mode checks consecutive minors of every size, which suffices
    by Fekete's criterion; ``oracle=True`` checks every minor of every size.
    """
    max_size = min(matrix.n_rows, matrix.n_cols)
    if oracle:
        for size in range(1, max_size + 1):
            for rows in combinations(range(matrix.n_rows), size):
                for cols in combinations(range(matrix.n_cols), size):
                    if minor(matrix, rows, cols) <= 0:
                        return False
        return True
    for size in range(1, max_size + 1):
        for rows, cols in iter_consecutive_sets(matrix, size):
            if minor(matrix, rows, cols) <= 0:
                return False
    return True


def is_totally_nonnegative(matrix: ToeplitzMatrix) -> TNResult:
    """All minors nonnegative, checked exhaustively with exact arithmetic.

    On failure the first negative minor (smallest size, lexicographic index
    sets) is reported as a witness.
    """
    max_size = min(matrix.n_rows, matrix.n_cols)
    for size in range(1, max_size + 1):
        for rows in combinations(range(matrix.n_rows), size):
            for cols in combinations(range(matrix.n_cols), size):
                value = minor(matrix, rows, cols)
                if value < 0:
                    return TNResult(False, MinorWitness(rows, cols, value))
    return TNResult(True)


def is_tp_k(matrix: ToeplitzMatrix, k: int, oracle: bool = False) -> bool:
    """All minors of size <= k positive (consecutive ones suffice)."""
    if not 1 <= k <= min(matrix.n_rows, matrix.n_cols):
        raise ContractError(f"order {k} outside [1, {min(matrix.n_rows, matrix.n_cols)}]")
    for size in range(1, k + 1):
        if oracle:
            for rows in combinations(range(matrix.n_rows), size):
                for cols in combinations(range(matrix.n_cols), size):
                    if minor(matrix, rows, cols) <= 0:
                        return False
        else:
            for rows, cols in iter_consecutive_sets(matrix, size):
                if minor(matrix, rows, cols) <= 0:
                    return False
    return True


def rank(matrix: ToeplitzMatrix) -> int:
    return matrix_rank(matrix.rows)


def sperner_number(form: BivariateForm) -> int:
    """max over 0 <= i <= floor(d/2) of rank of the index-i band matrix."""
    if form.is_zero:
        raise ContractError("the zero form has no Sperner number")
    return max(rank(build(form, i)) for i in range(form.degree // 2 + 1))


@dataclass(frozen=True)
class StrongTNResult:
    ok: bool
    level: Optional[int] = None
    witness: Optional[MinorWitness] = None

    def __bool__(self) -> bool:
        return self.ok


def is_strongly_totally_nonnegative(form: BivariateForm, i: int) -> StrongTNResult:
    """Total nonnegativity of every band matrix of index j <= i."""
    if not 0 <= i <= form.degree // 2:
        raise ContractError("need 0 <= i <= floor(d/2)")
    for j in range(i + 1):
        result = is_totally_nonnegative(build(form, j))
        if not result.ok:
            return StrongTNResult(False, j, result.witness)
    return StrongTNResult(True)


# Re-exported for callers that phrase things in terms of the form.
__all__ = [
    "IndexSet", "ToeplitzMatrix", "MinorWitness", "TNResult", "StrongTNResult",
    "ConsecutiveCorrespondence", "as_index_set", "build", "submatrix", "minor",
    "maximal_minor", "is_consecutive", "is_initial", "translate_to_initial",
    "consecutive_correspondence", "iter_consecutive_sets", "is_totally_positive",
    "is_totally_nonnegative", "is_tp_k", "rank", "sperner_number",
    "is_strongly_totally_nonnegative", "first_nonzero_index",
]
