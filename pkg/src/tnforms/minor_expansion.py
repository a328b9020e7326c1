"""Expansion of band-matrix minors into maximal minors of shorter bands.

Any (r+1)x(r+1) minor of the index-``i`` band matrix of a form, for
``a <= r <= i <= floor(d/2)`` with ``a`` the first nonzero coefficient index,
equals a nonnegative integer combination of maximal minors of the index-``r``
band matrix.  The combination is governed by the Littlewood-Richardson
fillings of a skew shape read off the row and column index sets; the
``alpha`` statistic of a column set singles out the unique leading term of
the inverse construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import ContractError, PropertyViolation, format_rational
from .forms import BivariateForm, first_nonzero_index
from .tableaux import Partition, SkewShape, as_partition, lr_partitions
from .toeplitz import IndexSet, as_index_set, build, maximal_minor, minor


def _check_frame(i: int, d: int, a: int, r: int) -> None:
    if not 0 <= a <= r <= i <= d // 2:
        raise ContractError(
            f"need 0 <= a <= r <= i <= floor(d/2); got a={a}, r={r}, i={i}, d={d}")


@dataclass(frozen=True)
class MinorShapeData:
    i: int
    d: int
    r: int
    a: int
    rows: IndexSet
    cols: IndexSet
    outer: Partition
    inner: Partition

    @property
    def skew_shape(self) -> SkewShape:
        """The shape outer/(inner+a) whose fillings drive the expansion."""
        shifted = tuple(m + self.a for m in self.inner)
        return SkewShape(self.outer, shifted)


def shape_from_indices(i: int, d: int, a: int, rows: Sequence[int],
                       cols: Sequence[int]) -> MinorShapeData:
    """Partitions attached to a minor: outer_p = (j_r - r) + i - (i_p - p) and
    inner_q = (j_r - r) - (j_q - q)."""
    rows = as_index_set(rows)
    cols = as_index_set(cols)
    if len(rows) != len(cols) or not rows:
        raise ContractError("need nonempty row and column sets of equal size")
    r = len(rows) - 1
    _check_frame(i, d, a, r)
    if rows[-1] > i:
        raise ContractError(f"row indices must lie in [0, {i}]")
    if cols[-1] > d - i:
        raise ContractError(f"column indices must lie in [0, {d - i}]")
    base = cols[-1] - r
    outer = tuple(base + i - (rows[p] - p) for p in range(r + 1))
    inner = tuple(base - (cols[q] - q) for q in range(r + 1))
    outer = as_partition(outer)
    inner = as_partition(inner)
    if any(outer[p] < inner[p] + a for p in range(r + 1)):
        raise PropertyViolation(
            f"shifted inner shape escapes the outer shape: {outer} vs {inner}+{a}")
    return MinorShapeData(i, d, r, a, rows, cols, outer, inner)


def column_set_from_partition(nu: Sequence[int], r: int, a: int,
                              d: int) -> IndexSet:
    """Column set K with k_q = nu_{r-q} - (r - a) + q."""
    nu = as_partition(nu, r + 1)
    if a > r:
        raise ContractError("need a <= r")
    ks = tuple(nu[r - q] - (r - a) + q for q in range(r + 1))
    if any(k < 0 for k in ks) or any(x >= y for x, y in zip(ks, ks[1:])):
        raise ContractError(f"partition {nu} yields no valid column set: {ks}")
    if ks[-1] > d - r:
        raise ContractError(f"column index {ks[-1]} exceeds {d - r}")
    return ks


def partition_from_column_set(cols: Sequence[int], r: int, a: int) -> Partition:
    cols = as_index_set(cols)
    if len(cols) != r + 1:
        raise ContractError("column set must have r+1 elements")
    return tuple((cols[q] - q) + (r - a) for q in reversed(range(r + 1)))


def alpha_statistic(cols: Sequence[int], i: int, r: int) -> int:
    """sum over q of max((i - r) - (k_q - q), 0)."""
    cols = as_index_set(cols)
    if len(cols) != r + 1:
        raise ContractError("column set must have r+1 elements")
    return sum(max((i - r) - (k - q), 0) for q, k in enumerate(cols))


def alpha_statistic_partition(nu: Sequence[int], i: int, a: int) -> int:
    """Partition form of the statistic: sum of max((i - a) - nu_q, 0)."""
    nu = as_partition(nu)
    return sum(max((i - a) - part, 0) for part in nu)


@dataclass(frozen=True)
class ExpansionTerm:
    coefficient: int
    content: Partition
    cols: IndexSet
    minor_value: Fraction
    alpha: int

    def to_json_obj(self) -> dict:
        return {"coefficient": self.coefficient,
                "content": list(self.content),
                "cols": list(self.cols),
                "minor": format_rational(self.minor_value),
                "alpha": self.alpha}


@dataclass(frozen=True)
class MinorExpansion:
    shape_data: MinorShapeData
    lhs: Fraction
    terms: tuple[ExpansionTerm, ...]
    rhs: Fraction
    boundary_a_equals_r: bool

    def term_for(self, cols: Sequence[int]) -> ExpansionTerm | None:
        cols = tuple(cols)
        for term in self.terms:
            if term.cols == cols:
                return term
        return None

    def to_json_obj(self) -> dict:
        return {"i": self.shape_data.i, "d": self.shape_data.d,
                "r": self.shape_data.r, "a": self.shape_data.a,
                "rows": list(self.shape_data.rows),
                "cols": list(self.shape_data.cols),
                "outer": list(self.shape_data.outer),
                "inner": list(self.shape_data.inner),
                "lhs": format_rational(self.lhs),
                "rhs": format_rational(self.rhs),
                "boundary_a_equals_r": self.boundary_a_equals_r,
                "terms": [t.to_json_obj() for t in self.terms]}


def expand_minor(form: BivariateForm, i: int, r: int, rows: Sequence[int],
                 cols: Sequence[int]) -> MinorExpansion:
    """Expand a minor of the index-``i`` band matrix over the index-``r`` one.

    The expansion is computed from the Littlewood-Richardson fillings of the
    attached skew shape and verified against the directly computed minor;
    a mismatch raises :class:`PropertyViolation`.  Every content is checked
    against the bounds ``nu_0 <= d - r - a`` and ``nu_r >= r - a``.
    """
    d = form.degree
    a = first_nonzero_index(form)
    rows = as_index_set(rows)
    cols = as_index_set(cols)
    if len(rows) != r + 1 or len(cols) != r + 1:
        raise ContractError("row and column sets must have r+1 elements")
    _check_frame(i, d, a, r)
    data = shape_from_indices(i, d, a, rows, cols)
    lhs = minor(build(form, i), rows, cols)
    short = build(form, r)
    terms = []
    rhs = Fraction(0)
    for content, count in lr_partitions(data.skew_shape).items():
        content = as_partition(content, r + 1)
        if content[0] > d - r - a or content[r] < r - a:
            raise PropertyViolation(
                f"content {content} violates the expansion bounds for "
                f"d={d}, r={r}, a={a}")
        k_set = column_set_from_partition(content, r, a, d)
        value = maximal_minor(short, k_set)
        rhs += count * value
        terms.append(ExpansionTerm(count, content, k_set, value,
                                   alpha_statistic(k_set, i, r)))
    terms.sort(key=lambda t: (-t.alpha, t.cols))
    if lhs != rhs:
        raise PropertyViolation(
            f"minor expansion mismatch: minor={lhs} but sum={rhs} "
            f"(i={i}, r={r}, rows={rows}, cols={cols}, form={form})")
    return MinorExpansion(data, lhs, tuple(terms), rhs, a == r)


def indices_from_partition(nu: Sequence[int], i: int, r: int, a: int,
                           d: int) -> tuple[IndexSet, IndexSet, IndexSet]:
    """Inverse construction: the (rows, cols, K) triple attached to ``nu``.

    Requires ``i - a <= nu_0 <= d - r - a`` and ``nu_r >= r - a``.  The
    reconstructed partitions are checked against :func:`shape_from_indices`
    and the bound ``i <= k_r <= d - r`` is asserted.
    """
    nu = as_partition(nu, r + 1)
    _check_frame(i, d, a, r)
    if not (i - a <= nu[0] <= d - r - a):
        raise ContractError(
            f"need i - a <= nu_0 <= d - r - a; got nu_0={nu[0]}, i={i}, "
            f"a={a}, d={d}, r={r}")
    if nu[r] < r - a:
        raise ContractError(f"need nu_r >= r - a; got nu_r={nu[r]}")
    rows = tuple(max((i - a) - nu[p], 0) + p for p in range(r + 1))
    cols = tuple(max(nu[r - q] - (i - a), 0) + q for q in range(r + 1))
    k_set = column_set_from_partition(nu, r, a, d)
    data = shape_from_indices(i, d, a, rows, cols)
    expected_outer = tuple(nu[0] + a - max((i - a) - nu[p], 0)
                           for p in range(r + 1))
    expected_inner = tuple(nu[0] + a - i - max(nu[r - q] - (i - a), 0)
                           for q in range(r + 1))
    if data.outer != expected_outer or data.inner != expected_inner:
        raise PropertyViolation(
            f"inverse construction inconsistent for nu={nu}: "
            f"{data.outer}/{data.inner} vs {expected_outer}/{expected_inner}")
    if not i <= k_set[-1] <= d - r:
        raise PropertyViolation(f"k_r = {k_set[-1]} outside [{i}, {d - r}]")
    return rows, cols, k_set


@dataclass(frozen=True)
class LeadingTermReport:
    nu: Partition
    rows: IndexSet
    cols: IndexSet
    k_set: IndexSet
    alpha: int
    expansion: MinorExpansion

    def to_json_obj(self) -> dict:
        return {"nu": list(self.nu), "rows": list(self.rows),
                "cols": list(self.cols), "k_set": list(self.k_set),
                "alpha": self.alpha,
                "expansion": self.expansion.to_json_obj()}


def leading_term_check(nu: Sequence[int], form: BivariateForm, i: int, r: int,
                       a: int, d: int) -> LeadingTermReport:
    """Verify that ``K(nu)`` is the unique leading term of its own expansion.

    The term must occur with coefficient exactly 1, and every other term of
    the expansion must have a strictly smaller ``alpha`` statistic.
    """
    if form.degree != d:
        raise ContractError("degree mismatch between form and d")
    if first_nonzero_index(form) != a:
        raise ContractError("a must be the form's first nonzero index")
    rows, cols, k_set = indices_from_partition(nu, i, r, a, d)
    expansion = expand_minor(form, i, r, rows, cols)
    target = expansion.term_for(k_set)
    alpha = alpha_statistic(k_set, i, r)
    if target is None or target.coefficient != 1:
        raise PropertyViolation(
            f"leading term K={k_set} missing or with coefficient != 1 in "
            f"{expansion.to_json_obj()}")
    for term in expansion.terms:
        if term.cols != k_set and term.alpha >= alpha:
            raise PropertyViolation(
                f"term K'={term.cols} has alpha {term.alpha} >= {alpha}: "
                f"{expansion.to_json_obj()}")
    return LeadingTermReport(as_partition(nu, r + 1), rows, cols, k_set,
                             alpha, expansion)
