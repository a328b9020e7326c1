"""Weighted NE lattice paths and mixed Hessian determinants.

Geometry conventions.  Sources sit on the anti-diagonal x + y = 0 at
``A_p = (-p, p)`` and sinks on x + y = n at ``B_q = (-q, n + q)`` where
``n = d - 2r`` is the common path length.  An edge leaving the diagonal
x + y = z - 1 carries weight ``X_z`` (East) or ``Y_z`` (North).  The column
set ``K`` of a maximal band-matrix minor is translated by ``r``: path ``q``
runs from ``A_{k_q + r}`` to ``B_{r + q}``, i.e. to ``(-q - r, d - r + q)``.

The permuted mixed Hessian matrix is defined here as the finite block
``d! * (T * W)_{IJ}`` of the product of the two-sided infinite band matrix
``T = (c_{q-p})`` with the single-path weight matrix ``W``, with rows
``I = {0..r}`` and columns ``J = {r..2r}``.  Only finitely many entries of
the product contribute: single-path weights vanish unless the source lies
between ``r + q`` and ``d - r + q`` rows down, and coefficients ``c_k``
vanish outside ``0 <= k <= d``, so each entry is the finite sum over
``e = 0..d-2r`` of ``c_{(r + q - p) + e}`` times the weight sum over paths
with exactly ``e`` East steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .core import (ContractError, RationalLike, SparsePolynomial, as_rational,
                   determinant_exact)
from .forms import BivariateForm
from .toeplitz import IndexSet, as_index_set, build, maximal_minor, sperner_number

GridPoint = tuple[int, int]


@dataclass(frozen=True)
class LatticePath:
    start: GridPoint
    end: GridPoint
    steps: tuple[str, ...]

    def __post_init__(self):
        if any(s not in ("E", "N") for s in self.steps):
            raise ContractError("steps must be 'E' or 'N'")
        x, y = self.start
        dx = sum(1 for s in self.steps if s == "E")
        dy = len(self.steps) - dx
        if (x + dx, y + dy) != self.end:
            raise ContractError("steps do not lead from start to end")

    def vertices(self) -> tuple[GridPoint, ...]:
        x, y = self.start
        out = [(x, y)]
        for s in self.steps:
            x, y = (x + 1, y) if s == "E" else (x, y + 1)
            out.append((x, y))
        return tuple(out)

    def weight_exponents(self) -> dict[str, int]:
        """Variable exponents: an edge leaving the diagonal x + y = z - 1
        contributes X_z (East) or Y_z (North)."""
        exps: dict[str, int] = {}
        x, y = self.start
        for s in self.steps:
            z = x + y + 1
            name = f"X{z}" if s == "E" else f"Y{z}"
            exps[name] = exps.get(name, 0) + 1
            x, y = (x + 1, y) if s == "E" else (x, y + 1)
        return exps

    def monomial_poly(self) -> SparsePolynomial:
        return SparsePolynomial.monomial(sorted(self.weight_exponents().items()))


@dataclass(frozen=True)
class PathSystem:
    paths: tuple[LatticePath, ...]

    def monomial(self) -> SparsePolynomial:
        exps: dict[str, int] = {}
        for path in self.paths:
            for name, e in path.weight_exponents().items():
                exps[name] = exps.get(name, 0) + e
        return SparsePolynomial.monomial(sorted(exps.items()))


def _enumerate_paths(start: GridPoint, end: GridPoint) -> Iterator[tuple[str, ...]]:
    """All NE step sequences from start to end, East-first lexicographic."""
    dx = end[0] - start[0]
    dy = end[1] - start[1]
    if dx < 0 or dy < 0:
        return

    def rec(e_left: int, n_left: int, prefix: tuple[str, ...]):
        if e_left == 0 and n_left == 0:
            yield prefix
            return
        if e_left:
            yield from rec(e_left - 1, n_left, prefix + ("E",))
        if n_left:
            yield from rec(e_left, n_left - 1, prefix + ("N",))

    yield from rec(dx, dy, ())


def sources_for(cols: Sequence[int], r: int) -> tuple[GridPoint, ...]:
    cols = as_index_set(cols)
    return tuple((-k - r, k + r) for k in cols)


def sinks_for(r: int, d: int) -> tuple[GridPoint, ...]:
    return tuple((-q - r, d - r + q) for q in range(r + 1))


def _check_column_set(cols: IndexSet, r: int, d: int) -> IndexSet:
    cols = as_index_set(cols)
    if len(cols) != r + 1:
        raise ContractError("column set must have r+1 elements")
    if d - 2 * r < 0:
        raise ContractError("need r <= floor(d/2)")
    if cols[-1] > d - r:
        raise ContractError(f"column index {cols[-1]} exceeds {d - r}")
    return cols


def enumerate_systems_from(sources: Sequence[GridPoint],
                           sinks: Sequence[GridPoint]) -> Iterator[PathSystem]:
    """Vertex-disjoint systems joining source q to sink q, in a fixed order."""
    if len(sources) != len(sinks):
        raise ContractError("need equally many sources and sinks")

    n = len(sources)
    chosen: list[LatticePath] = []
    occupied: set[GridPoint] = set()

    def rec(q: int) -> Iterator[PathSystem]:
        if q == n:
            yield PathSystem(tuple(chosen))
            return
        for steps in _enumerate_paths(sources[q], sinks[q]):
            path = LatticePath(sources[q], sinks[q], steps)
            verts = path.vertices()
            if any(v in occupied for v in verts):
                continue
            occupied.update(verts)
            chosen.append(path)
            yield from rec(q + 1)
            chosen.pop()
            occupied.difference_update(verts)

    yield from rec(0)


def enumerate_path_systems(cols: Sequence[int], r: int,
                           d: int) -> Iterator[PathSystem]:
    """Vertex-disjoint systems for the translated column set ``K + r``."""
    cols = _check_column_set(tuple(cols), r, d)
    yield from enumerate_systems_from(sources_for(cols, r), sinks_for(r, d))


@lru_cache(maxsize=None)
def path_minor(cols: IndexSet, r: int, d: int) -> SparsePolynomial:
    """Sum of the weight monomials of all vertex-disjoint path systems."""
    cols = _check_column_set(cols, r, d)
    total = SparsePolynomial.zero()
    for system in enumerate_systems_from(sources_for(cols, r), sinks_for(r, d)):
        total = total + system.monomial()
    return total


def single_path_polynomial(source: GridPoint, sink: GridPoint) -> SparsePolynomial:
    """Weight sum over all NE paths from source to sink (no disjointness)."""
    total = SparsePolynomial.zero()
    for steps in _enumerate_paths(source, sink):
        total = total + LatticePath(source, sink, steps).monomial_poly()
    return total


@lru_cache(maxsize=None)
def _east_step_weight_sum(east: int, length: int) -> SparsePolynomial:
    """Sum over step positions S (|S| = east) of prod X_z, z in S, times
    prod Y_z elsewhere; this is the single-path weight sum for any path with
    ``east`` East steps out of ``length``."""
    if east < 0 or east > length:
        return SparsePolynomial.zero()
    total = SparsePolynomial.zero()
    for positions in combinations(range(1, length + 1), east):
        chosen = set(positions)
        pairs = [(f"X{z}" if z in chosen else f"Y{z}", 1)
                 for z in range(1, length + 1)]
        total = total + SparsePolynomial.monomial(pairs)
    return total


def path_weight_matrix_entry(row: int, col: int, length: int) -> SparsePolynomial:
    """Entry (row, col) of the single-path weight matrix: paths from
    ``(-row, row)`` to ``(-col, length + col)`` take ``row - col`` East steps."""
    return _east_step_weight_sum(row - col, length)


def mixed_hessian_permuted(form: BivariateForm,
                           r: int) -> tuple[tuple[SparsePolynomial, ...], ...]:
    """The (r+1)x(r+1) permuted mixed Hessian matrix of the form.

    Entries are homogeneous of degree d - 2r in the step-weight variables.
    Requires 0 <= r <= s(F) - 1.
    """
    d = form.degree
    if r < 0 or r >= sperner_number(form):
        raise ContractError("need 0 <= r <= Sperner number - 1")
    if r > d // 2:
        raise ContractError("need r <= floor(d/2)")
    length = d - 2 * r
    scale = Fraction(math.factorial(d))
    rows = []
    for p in range(r + 1):
        out_row = []
        for q in range(r + 1):
            entry = SparsePolynomial.zero()
            for e in range(length + 1):
                k = (r + q - p) + e
                if 0 <= k <= d and form.coeffs[k]:
                    entry = entry + (scale * form.coeffs[k]) * \
                        _east_step_weight_sum(e, length)
            out_row.append(entry)
        rows.append(tuple(out_row))
    return tuple(rows)


def plucker_determinant(form: BivariateForm, r: int) -> SparsePolynomial:
    """(d!)^(r+1) times the sum over column sets K of the maximal minor of
    the index-r band matrix times the disjoint-path weight sum of K."""
    d = form.degree
    if not 0 <= r <= d // 2:
        raise ContractError("need 0 <= r <= floor(d/2)")
    band = build(form, r)
    scale = Fraction(math.factorial(d)) ** (r + 1)
    total = SparsePolynomial.zero()
    for cols in combinations(range(d - r + 1), r + 1):
        value = maximal_minor(band, cols)
        if value:
            total = total + (scale * value) * path_minor(cols, r, d)
    return total


def specialize_path_minor(cols: Sequence[int], r: int, i: int,
                          d: int) -> SparsePolynomial:
    """Path minor with Y_1..Y_{i-r} set to t and every other variable to 1."""
    if not r <= i <= d // 2:
        raise ContractError("need r <= i <= floor(d/2)")
    poly = path_minor(as_index_set(cols), r, d)
    t = SparsePolynomial.variable("t")
    mapping: dict[str, SparsePolynomial | int] = {}
    for z in range(1, d - 2 * r + 1):
        mapping[f"X{z}"] = 1
        mapping[f"Y{z}"] = t if z <= i - r else 1
    return poly.substitute(mapping)


def m_polynomial(form: BivariateForm, j: int, i: int) -> SparsePolynomial:
    """The specialized permuted mixed Hessian determinant in ``t``.

    Equals (d!)^(j+1) times the sum over K of the maximal minor times the
    specialized path minor; requires 0 <= j <= min(i, s(F)-1) and j < i.
    """
    d = form.degree
    if not 0 <= j <= min(i, sperner_number(form) - 1):
        raise ContractError("need 0 <= j <= min(i, Sperner number - 1)")
    if not j < i <= d // 2:
        raise ContractError("need j < i <= floor(d/2)")
    band = build(form, j)
    scale = Fraction(math.factorial(d)) ** (j + 1)
    total = SparsePolynomial.zero()
    for cols in combinations(range(d - j + 1), j + 1):
        value = maximal_minor(band, cols)
        if value:
            total = total + (scale * value) * \
                specialize_path_minor(cols, j, i, d)
    return total


def evaluate_permuted_hessian_determinant(
        form: BivariateForm, r: int,
        x_values: Sequence[RationalLike],
        y_values: Sequence[RationalLike]) -> Fraction:
    """Exact value of det of the permuted mixed Hessian at a rational point.

    Evaluates the weight sums numerically first, so only one (r+1)x(r+1)
    rational determinant is needed.
    """
    d = form.degree
    length = d - 2 * r
    if len(x_values) != length or len(y_values) != length:
        raise ContractError(f"need {length} X and Y values")
    xs = [as_rational(v) for v in x_values]
    ys = [as_rational(v) for v in y_values]
    # weight_sum[e] = sum over |S| = e of prod_{z in S} x_z prod_{z not in S} y_z
    weight_sum = [Fraction(1)] + [Fraction(0)] * length
    for x, y in zip(xs, ys):
        for e in range(len(weight_sum) - 1, 0, -1):
            weight_sum[e] = weight_sum[e] * y + weight_sum[e - 1] * x
        weight_sum[0] *= y
    scale = Fraction(math.factorial(d))
    matrix = []
    for p in range(r + 1):
        row = []
        for q in range(r + 1):
            total = Fraction(0)
            for e in range(length + 1):
                k = (r + q - p) + e
                if 0 <= k <= d:
                    total += form.coeffs[k] * weight_sum[e]
            row.append(scale * total)
        matrix.append(row)
    return determinant_exact(matrix)


def path_system_ascii(system: PathSystem) -> str:
    """Plain-text rendering of a path system on its bounding grid."""
    verts = [v for path in system.paths for v in path.vertices()]
    xs = [v[0] for v in verts]
    ys = [v[1] for v in verts]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    width = 2 * (x1 - x0) + 1
    height = 2 * (y1 - y0) + 1
    canvas = [[" "] * width for _ in range(height)]

    def put(x: int, y: int, ch: str):
        canvas[2 * (y1 - y)][2 * (x - x0)] = ch

    for x in range(x0, x1 + 1):
        for y in range(y0, y1 + 1):
            put(x, y, ".")
    for path in system.paths:
        vv = path.vertices()
        for (ax, ay), (bx, by) in zip(vv, vv[1:]):
            if bx > ax:
                canvas[2 * (y1 - ay)][2 * (ax - x0) + 1] = "-"
            else:
                canvas[2 * (y1 - ay) - 1][2 * (ax - x0)] = "|"
        for x, y in vv:
            put(x, y, "o")
        sx, sy = vv[0]
        put(sx, sy, "A")
        ex, ey = vv[-1]
        put(ex, ey, "B")
    return "\n".join("".join(row).rstrip() for row in canvas)
