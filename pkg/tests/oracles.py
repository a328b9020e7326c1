"""Independent oracles for the test suite.

Everything here is deliberately naive (direct definitions, brute-force
enumeration, no shared code paths with the library) so that agreement with
the library is meaningful.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


def det_cofactor(rows):
    """Textbook cofactor expansion along the first row."""
    n = len(rows)
    for row in rows:
        assert len(row) == n
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        sub = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = Fraction(rows[0][j]) * det_cofactor(sub)
        total += term if j % 2 == 0 else -term
    return total


def det_cofactor_generic(rows, zero, one):
    """Cofactor expansion over any commutative ring."""
    n = len(rows)
    if n == 0:
        return one
    if n == 1:
        return rows[0][0]
    total = zero
    for j in range(n):
        sub = [list(row[:j]) + list(row[j + 1:]) for row in rows[1:]]
        term = rows[0][j] * det_cofactor_generic(sub, zero, one)
        total = total + term if j % 2 == 0 else total - term
    return total


def rand_fraction(rng, span=9, max_den=6, nonzero=False):
    while True:
        value = Fraction(rng.randint(-span, span), rng.randint(1, max_den))
        if value or not nonzero:
            return value


def rand_form_coeffs(rng, d, first_nonzero=None, span=9, max_den=6):
    coeffs = [rand_fraction(rng, span, max_den) for _ in range(d + 1)]
    if first_nonzero is not None:
        for k in range(first_nonzero):
            coeffs[k] = Fraction(0)
        coeffs[first_nonzero] = rand_fraction(rng, span, max_den, nonzero=True)
    return tuple(coeffs)


# -- tableaux ---------------------------------------------------------------


def skew_boxes(outer, inner):
    return [(p, c) for p, (o, i) in enumerate(zip(outer, inner))
            for c in range(i, o)]


def filling_is_semistandard(outer, inner, grid):
    """grid maps (row, col) -> value for every skew box."""
    for (p, c), value in grid.items():
        if (p, c - 1) in grid and grid[p, c - 1] > value:
            return False
        if (p - 1, c) in grid and grid[p - 1, c] >= value:
            return False
    return True


def brute_force_ssyt(outer, inner, max_entry):
    """All semistandard fillings by filtering every possible assignment."""
    boxes = skew_boxes(outer, inner)
    found = []
    for values in itertools.product(range(max_entry), repeat=len(boxes)):
        grid = dict(zip(boxes, values))
        if filling_is_semistandard(outer, inner, grid):
            rows = tuple(tuple(grid[p, c] for c in range(inner[p], outer[p]))
                         for p in range(len(outer)))
            found.append(rows)
    return found


def reverse_lattice(word):
    seen = {}
    for letter in reversed(list(word)):
        seen[letter] = seen.get(letter, 0) + 1
        if letter > 0 and seen[letter] > seen.get(letter - 1, 0):
            return False
    return True


def brute_force_lr(outer, inner):
    """Littlewood-Richardson fillings via the brute-force SSYT filter."""
    found = []
    for rows in brute_force_ssyt(outer, inner, max(len(outer), 1)):
        word = [v for row in reversed(rows) for v in row]
        if reverse_lattice(word):
            found.append(rows)
    return found


def content_of(rows):
    flat = [v for row in rows for v in row]
    top = max(flat, default=-1)
    return tuple(flat.count(v) for v in range(top + 1))


# -- symmetric polynomials ----------------------------------------------------


def complete_homogeneous_brute(i, point):
    """Direct sum over weakly increasing index tuples."""
    if i < 0:
        return Fraction(0)
    total = Fraction(0)
    for combo in itertools.combinations_with_replacement(point, i):
        total += math.prod(combo, start=Fraction(1))
    return total


# -- bivariate forms ----------------------------------------------------------


def form_value(coeffs, x, y):
    d = len(coeffs) - 1
    return sum(math.comb(d, k) * coeffs[k] * x ** k * y ** (d - k)
               for k in range(d + 1))


def forms_equal_by_evaluation(f, g):
    """Degree-d forms agree iff they agree at d+1 distinct slopes."""
    assert f.degree == g.degree
    for k in range(f.degree + 1):
        y = Fraction(k)
        if form_value(f.coeffs, Fraction(1), y) != form_value(g.coeffs,
                                                              Fraction(1), y):
            return False
    return True


def alpha_tail_sum(nu, i, a):
    """Tail-sum form of the alpha statistic, defined when nu_0 >= i - a."""
    assert nu[0] >= i - a
    t = max(q for q, part in enumerate(nu) if part >= i - a)
    return sum((i - a) - nu[q] for q in range(t + 1, len(nu)))
