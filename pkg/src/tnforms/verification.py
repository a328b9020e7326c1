"""Executable verification suite: every identity the library is built on,
replayed on concrete data with exact arithmetic.

Each check returns a :class:`CheckResult` with a status of ``pass``,
``pass-with-note``, ``fail`` or ``inconclusive``.  The worked examples are
frozen below as golden data; the reference path table for d=6, r=2 carries
one misprint (the second monomial of the K={1,3,4} row has total degree 5
while every disjoint-system monomial is homogeneous of degree 6), so that
row is checked against the independently derived value and reported as
``pass-with-note`` with both versions attached.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import corpus as corpus_mod
from .core import (InconclusiveError, PropertyViolation, SparsePolynomial,
                   determinant_polynomial, format_rational, order_at_zero)
from .forms import BivariateForm
from .hessian import (mixed_hessian_permuted, path_minor,
                      path_weight_matrix_entry, plucker_determinant,
                      specialize_path_minor)
from .lorentzian import is_normally_stable, lorentzian_chain
from .minor_expansion import (alpha_statistic, column_set_from_partition,
                              expand_minor, leading_term_check,
                              shape_from_indices)
from .schur import jacobi_trudi_eval, schur_eval
from .tableaux import (SkewShape, as_partition, enumerate_lr_tableaux,
                       iter_partitions, lr_coefficient)
from .toeplitz import (build, is_totally_nonnegative,
                       is_totally_positive, is_tp_k, iter_consecutive_sets,
                       maximal_minor, minor, rank, sperner_number, submatrix,
                       translate_to_initial, consecutive_correspondence)

CHECK_NAMES = (
    "d9-expansion-identity",
    "d9-tableau-data",
    "d6-path-table",
    "jacobi-trudi-vs-tableaux",
    "lr-expansion-random",
    "alpha-leading-term",
    "specialization-order",
    "cauchy-binet-hessian",
    "band-matrix-lemmas",
    "main-theorem-agreement",
)

PAPER_EXAMPLE_CHECKS = CHECK_NAMES[:3]

#: Stated wall-clock budgets in seconds, one per check.
RUNTIME_LIMITS = {
    "d9-expansion-identity": 1.0,
    "d9-tableau-data": 1.0,
    "d6-path-table": 5.0,
    "jacobi-trudi-vs-tableaux": 60.0,
    "lr-expansion-random": 120.0,
    "alpha-leading-term": 60.0,
    "specialization-order": 60.0,
    "cauchy-binet-hessian": 120.0,
    "band-matrix-lemmas": 120.0,
    "main-theorem-agreement": 300.0,
}


@dataclass
class CheckResult:
    name: str
    status: str
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status in ("pass", "pass-with-note")

    def to_json_obj(self) -> dict:
        return {"name": self.name, "status": self.status,
                "seconds": round(self.seconds, 3), "details": self.details}


def _parse_monomials(text: str) -> SparsePolynomial:
    """Parse sums of unit-coefficient monomials like 'X1*Y1^2 + X2*Y1^3'."""
    total = SparsePolynomial.zero()
    for chunk in text.split("+"):
        pairs = []
        for factor in chunk.strip().split("*"):
            if "^" in factor:
                name, exp = factor.split("^")
                pairs.append((name.strip(), int(exp)))
            else:
                pairs.append((factor.strip(), 1))
        total = total + SparsePolynomial.monomial(pairs)
    return total


# Golden rows for d=6, r=2: column set, derived weight sum, printed weight
# sum, and the alpha statistic at i=3.  The printed K={1,3,4} row contains a
# degree-5 monomial; the derived value replaces it with the homogeneous one.
D6_PATH_TABLE = (
    ((0, 1, 2), "Y1^3*Y2^3", "Y1^3*Y2^3", 3),
    ((0, 1, 3), "X1*Y1^2*Y2^3 + X2*Y1^3*Y2^2",
     "X1*Y1^2*Y2^3 + X2*Y1^3*Y2^2", 2),
    ((0, 1, 4), "X1*X2*Y1^2*Y2^2", "X1*X2*Y1^2*Y2^2", 2),
    ((0, 2, 3), "X1^2*Y1*Y2^3 + X1*X2*Y1^2*Y2^2 + X2^2*Y1^3*Y2",
     "X1^2*Y1*Y2^3 + X1*X2*Y1^2*Y2^2 + X2^2*Y1^3*Y2", 1),
    ((0, 2, 4), "X1^2*X2*Y1*Y2^2 + X1*X2^2*Y1^2*Y2",
     "X1^2*X2*Y1*Y2^2 + X1*X2^2*Y1^2*Y2", 1),
    ((0, 3, 4), "X1^2*X2^2*Y1*Y2", "X1^2*X2^2*Y1*Y2", 1),
    ((1, 2, 3), "X1^3*Y2^3 + X1^2*X2*Y1*Y2^2 + X1*X2^2*Y1^2*Y2 + X2^3*Y1^3",
     "X1^3*Y2^3 + X1^2*X2*Y1*Y2^2 + X1*X2^2*Y1^2*Y2 + X2^3*Y1^3", 0),
    ((1, 2, 4), "X1^3*X2*Y2^2 + X1^2*X2^2*Y1*Y2 + X1*X2^3*Y1^2",
     "X1^3*X2*Y2^2 + X1^2*X2^2*Y1*Y2 + X1*X2^3*Y1^2", 0),
    ((1, 3, 4), "X1^3*X2^2*Y2 + X1^2*X2^3*Y1",
     "X1^3*X2^2*Y2 + X1^2*X2^2*Y1", 0),
    ((2, 3, 4), "X1^3*X2^3", "X1^3*X2^3", 0),
)

D9_ROWS = (0, 1, 3)
D9_COLS = (0, 4, 6)
D9_OUTER = (7, 7, 6)
D9_INNER = (4, 1, 0)
D9_CONTENTS = ((6, 5, 1), (6, 4, 2), (5, 5, 2))
D9_COLUMN_SETS = ((0, 5, 7), (1, 4, 7), (1, 5, 6))


def _rand_fraction(rng: random.Random, span: int = 9,
                   max_den: int = 6, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-span, span), rng.randint(1, max_den))
        if value or not nonzero:
            return value


def _random_form_with_gap(rng: random.Random, d: int, a: int) -> BivariateForm:
    coeffs = [Fraction(0)] * (d + 1)
    coeffs[a] = _rand_fraction(rng, nonzero=True)
    for k in range(a + 1, d + 1):
        coeffs[k] = _rand_fraction(rng)
    return BivariateForm(d, tuple(coeffs))


# ---------------------------------------------------------------------------
# The individual checks
# ---------------------------------------------------------------------------


def check_d9_expansion_identity(seed: int) -> CheckResult:
    rng = random.Random(f"{seed}:d9")
    trials = 25
    for _ in range(trials):
        form = _random_form_with_gap(rng, 9, 1)
        lhs = minor(build(form, 3), D9_ROWS, D9_COLS)
        short = build(form, 2)
        rhs = sum((maximal_minor(short, k) for k in D9_COLUMN_SETS), Fraction(0))
        if lhs != rhs:
            return CheckResult("d9-expansion-identity", "fail",
                               {"form": form.to_json_obj(),
                                "lhs": format_rational(lhs),
                                "rhs": format_rational(rhs)})
        expansion = expand_minor(form, 3, 2, D9_ROWS, D9_COLS)
        got = tuple(sorted(term.cols for term in expansion.terms))
        if got != D9_COLUMN_SETS or any(t.coefficient != 1
                                        for t in expansion.terms):
            return CheckResult("d9-expansion-identity", "fail",
                               {"terms": [t.to_json_obj()
                                          for t in expansion.terms]})
    return CheckResult("d9-expansion-identity", "pass", {"trials": trials})


def check_d9_tableau_data(seed: int) -> CheckResult:
    del seed
    shape = SkewShape(D9_OUTER, (5, 2, 1))
    tableaux = list(enumerate_lr_tableaux(shape))
    contents = sorted(t.content(length=3) for t in tableaux)
    expected = sorted(D9_CONTENTS)
    details: dict = {"count": len(tableaux),
                     "contents": [list(c) for c in contents]}
    if len(tableaux) != 3 or contents != expected:
        return CheckResult("d9-tableau-data", "fail", details)
    coeffs = {nu: lr_coefficient(D9_OUTER, (5, 2, 1), nu) for nu in D9_CONTENTS}
    if any(v != 1 for v in coeffs.values()):
        details["coefficients"] = {str(k): v for k, v in coeffs.items()}
        return CheckResult("d9-tableau-data", "fail", details)
    mapped = tuple(column_set_from_partition(nu, 2, 1, 9) for nu in D9_CONTENTS)
    if mapped != D9_COLUMN_SETS:
        details["column_sets"] = [list(k) for k in mapped]
        return CheckResult("d9-tableau-data", "fail", details)
    data = shape_from_indices(3, 9, 1, D9_ROWS, D9_COLS)
    if data.outer != D9_OUTER or data.inner != D9_INNER:
        details["shape"] = {"outer": list(data.outer), "inner": list(data.inner)}
        return CheckResult("d9-tableau-data", "fail", details)
    return CheckResult("d9-tableau-data", "pass", details)


def check_d6_path_table(seed: int) -> CheckResult:
    del seed
    rows = []
    all_ok = True
    note = None
    for cols, derived_text, printed_text, alpha in D6_PATH_TABLE:
        derived = _parse_monomials(derived_text)
        printed = _parse_monomials(printed_text)
        computed = path_minor(cols, 2, 6)
        lgv_matrix = [[path_weight_matrix_entry(k + 2, q + 2, 2)
                       for q in range(3)] for k in cols]
        det = determinant_polynomial(lgv_matrix)
        row_ok = (computed == derived and det == derived
                  and alpha_statistic(cols, 3, 2) == alpha)
        all_ok &= row_ok
        row = {"K": list(cols), "match": row_ok,
               "printed_matches_derived": printed == derived}
        if printed != derived:
            row["printed"] = printed_text
            row["derived"] = derived_text
            note = (f"printed row K={list(cols)} contains a degree-5 "
                    f"monomial; the derived homogeneous value is used")
        rows.append(row)
    details = {"rows": rows}
    if note:
        details["note"] = note
    if not all_ok:
        return CheckResult("d6-path-table", "fail", details)
    return CheckResult("d6-path-table", "pass-with-note" if note else "pass",
                       details)


def _subpartitions(outer, max_size):
    """Partitions contained in ``outer`` with at most ``max_size`` boxes."""
    outer = as_partition(outer)
    seen = set()
    for mu in iter_partitions(min(max_size, sum(outer)), max_part=outer[0]
                              if outer else 0, max_length=len(outer)):
        mu = as_partition(mu, len(outer))
        if all(m <= o for m, o in zip(mu, outer)) and mu not in seen:
            seen.add(mu)
            yield mu


def check_jacobi_trudi(seed: int) -> CheckResult:
    rng = random.Random(f"{seed}:jt")
    shapes = 0
    evaluations = 0
    for lam in iter_partitions(8):
        if not lam:
            lam = (0,)
        lam = as_partition(lam)
        for mu in _subpartitions(lam, 4):
            shape = SkewShape(lam, mu)
            shapes += 1
            for _ in range(20):
                n = rng.randint(1, 4)
                point = tuple(_rand_fraction(rng, span=5, max_den=4)
                              for _ in range(n))
                left = jacobi_trudi_eval(shape, point)
                right = schur_eval(shape, point)
                evaluations += 1
                if left != right:
                    return CheckResult(
                        "jacobi-trudi-vs-tableaux", "fail",
                        {"outer": list(lam), "inner": list(mu),
                         "point": [format_rational(x) for x in point],
                         "determinant": format_rational(left),
                         "tableau_sum": format_rational(right)})
    return CheckResult("jacobi-trudi-vs-tableaux", "pass",
                       {"shapes": shapes, "evaluations": evaluations})


def check_lr_expansion(seed: int) -> CheckResult:
    rng = random.Random(f"{seed}:lr")
    trials = 200
    boundary = 0
    nontrivial = 0
    for trial in range(trials):
        # Bias three quarters of the trials toward large instances with
        # r strictly between a and i so the expansions carry several terms.
        if trial % 4:
            d = rng.randint(6, 10)
            i = rng.randint(max(2, d // 2 - 1), d // 2)
            r = rng.randint(1, i - 1)
            a = rng.randint(0, min(r, 2))
        else:
            d = rng.randint(2, 10)
            i = rng.randint(0, d // 2)
            r = rng.randint(0, i)
            a = rng.randint(0, r)
        form = _random_form_with_gap(rng, d, a)
        rows = tuple(sorted(rng.sample(range(i + 1), r + 1)))
        cols = tuple(sorted(rng.sample(range(d - i + 1), r + 1)))
        try:
            expansion = expand_minor(form, i, r, rows, cols)
        except PropertyViolation as exc:
            return CheckResult("lr-expansion-random", "fail",
                               {"error": str(exc)})
        if expansion.boundary_a_equals_r:
            boundary += 1
        if len(expansion.terms) > 1:
            nontrivial += 1
    return CheckResult("lr-expansion-random", "pass",
                       {"trials": trials, "boundary_a_equals_r": boundary,
                        "multi_term_expansions": nontrivial})


def check_alpha_leading(seed: int) -> CheckResult:
    rng = random.Random(f"{seed}:alpha")
    trials = 100
    done = 0
    multi = 0
    while done < trials:
        if done % 4:
            d = rng.randint(6, 10)
            i = rng.randint(max(2, d // 2 - 1), d // 2)
            r = rng.randint(1, i - 1)
            a = rng.randint(0, min(r, 2))
        else:
            d = rng.randint(2, 10)
            i = rng.randint(1, max(1, d // 2))
            r = rng.randint(0, i)
            a = rng.randint(0, r)
        if i > d // 2:
            continue
        low = max(i - a, r - a)
        high = d - r - a
        if low > high:
            continue
        nu = [rng.randint(low, high)]
        for _ in range(r):
            nu.append(rng.randint(r - a, nu[-1]))
        form = _random_form_with_gap(rng, d, a)
        try:
            report = leading_term_check(tuple(nu), form, i, r, a, d)
        except PropertyViolation as exc:
            return CheckResult("alpha-leading-term", "fail",
                               {"error": str(exc)})
        if len(report.expansion.terms) > 1:
            multi += 1
        done += 1
    return CheckResult("alpha-leading-term", "pass",
                       {"trials": trials, "multi_term_expansions": multi})


def check_specialization(seed: int) -> CheckResult:
    del seed
    checks = 0
    for d in range(2, 9):
        for r in range(0, d // 2 + 1):
            for i in range(r + 1, d // 2 + 1):
                for cols in combinations(range(d - r + 1), r + 1):
                    poly = specialize_path_minor(cols, r, i, d)
                    expected = alpha_statistic(cols, i, r)
                    if order_at_zero(poly) != expected:
                        return CheckResult(
                            "specialization-order", "fail",
                            {"d": d, "r": r, "i": i, "K": list(cols),
                             "order": str(order_at_zero(poly)),
                             "alpha": expected})
                    checks += 1
    return CheckResult("specialization-order", "pass", {"checks": checks})


def check_cauchy_binet(seed: int) -> CheckResult:
    rng = random.Random(f"{seed}:cb")
    trials = 20
    done = 0
    while done < trials:
        d = rng.randint(2, 6)
        coeffs = tuple(_rand_fraction(rng, span=6, max_den=4)
                       for _ in range(d + 1))
        form = BivariateForm(d, coeffs)
        if form.is_zero:
            continue
        r_cap = min(2, sperner_number(form) - 1, d // 2)
        if r_cap < 0:
            continue
        r = rng.randint(0, r_cap)
        matrix = mixed_hessian_permuted(form, r)
        for row in matrix:
            for entry in row:
                if not entry.is_homogeneous(d - 2 * r) :
                    return CheckResult("cauchy-binet-hessian", "fail",
                                       {"reason": "inhomogeneous entry",
                                        "form": form.to_json_obj(), "r": r})
        left = determinant_polynomial(matrix)
        right = plucker_determinant(form, r)
        if left != right:
            return CheckResult("cauchy-binet-hessian", "fail",
                               {"form": form.to_json_obj(), "r": r})
        done += 1
    return CheckResult("cauchy-binet-hessian", "pass", {"trials": trials})


def _corpus_forms():
    return [c for c in corpus_mod.generate(corpus_mod.CorpusSpec())
            if not c.form.is_zero]


def check_band_lemmas(seed: int) -> CheckResult:
    del seed
    forms = _corpus_forms()
    details: dict = {"forms": len(forms)}
    if len(forms) < 100:
        return CheckResult("band-matrix-lemmas", "fail",
                           {"reason": "corpus too small", **details})
    for item in forms:
        form = item.form
        d = form.degree
        s = sperner_number(form)
        tp = {}
        for i in range(d // 2 + 1):
            band = build(form, i)
            tp[i] = is_totally_positive(band)
            if tp[i] != is_totally_positive(band, oracle=True):
                return CheckResult("band-matrix-lemmas", "fail",
                                   {"reason": "consecutive-minor criterion "
                                    "disagrees with all-minor scan",
                                    "form": item.name, "i": i})
            if rank(band) != min(i + 1, s):
                return CheckResult("band-matrix-lemmas", "fail",
                                   {"reason": "rank identity",
                                    "form": item.name, "i": i})
            if tp[i] != all(tp[j] for j in range(i + 1)):
                return CheckResult("band-matrix-lemmas", "fail",
                                   {"reason": "positivity is not hereditary",
                                    "form": item.name, "i": i})
            for size in range(1, min(band.n_rows, band.n_cols) + 1):
                for rows_set, cols_set in iter_consecutive_sets(band, size):
                    shifted = translate_to_initial(band, rows_set, cols_set)
                    if submatrix(band, *shifted) != submatrix(band, rows_set,
                                                              cols_set):
                        return CheckResult(
                            "band-matrix-lemmas", "fail",
                            {"reason": "diagonal translation", "form": item.name})
        for i in range(1, d // 2 + 1):
            lower = build(form, i - 1)
            upper = build(form, i)
            lower_set = set()
            for size in range(1, min(lower.n_rows, lower.n_cols, i) + 1):
                for rows_set, cols_set in iter_consecutive_sets(lower, size):
                    lower_set.add(submatrix(lower, rows_set, cols_set))
            upper_set = set()
            for size in range(1, min(upper.n_rows, upper.n_cols, i) + 1):
                for rows_set, cols_set in iter_consecutive_sets(upper, size):
                    upper_set.add(submatrix(upper, rows_set, cols_set))
            if lower_set != upper_set:
                return CheckResult("band-matrix-lemmas", "fail",
                                   {"reason": "consecutive submatrix sets",
                                    "form": item.name, "i": i})
            mapping = consecutive_correspondence(form, i)
            for size in range(1, min(lower.n_rows, lower.n_cols, i) + 1):
                for rows_set, cols_set in iter_consecutive_sets(lower, size):
                    up = mapping.forward(rows_set, cols_set)
                    if submatrix(upper, *up) != submatrix(lower, rows_set,
                                                          cols_set):
                        return CheckResult("band-matrix-lemmas", "fail",
                                           {"reason": "forward correspondence",
                                            "form": item.name, "i": i})
            for size in range(1, min(upper.n_rows, upper.n_cols, i) + 1):
                for rows_set, cols_set in iter_consecutive_sets(upper, size):
                    down = mapping.inverse(rows_set, cols_set)
                    if submatrix(lower, *down) != submatrix(upper, rows_set,
                                                            cols_set):
                        return CheckResult("band-matrix-lemmas", "fail",
                                           {"reason": "inverse correspondence",
                                            "form": item.name, "i": i})
        if s <= d // 2:
            lhs = is_totally_positive(build(form, s - 1))
            rhs = all(is_tp_k(build(form, j), s)
                      and is_totally_nonnegative(build(form, j)).ok
                      for j in range(s, d // 2 + 1))
            if lhs != rhs:
                return CheckResult("band-matrix-lemmas", "fail",
                                   {"reason": "order-s characterization",
                                    "form": item.name})
    return CheckResult("band-matrix-lemmas", "pass", details)


def check_main_theorems(seed: int) -> CheckResult:
    forms = _corpus_forms()
    details: dict = {"forms": len(forms), "levels": 0}
    for item in forms:
        try:
            report = lorentzian_chain(item.form, cross_check=True, seed=seed)
        except PropertyViolation as exc:
            return CheckResult("main-theorem-agreement", "fail",
                               {"form": item.name, "error": str(exc)})
        except InconclusiveError as exc:
            return CheckResult("main-theorem-agreement", "inconclusive",
                               {"form": item.name, "error": str(exc)})
        details["levels"] += len(report.verdicts)
        if is_normally_stable(item.form):
            if report.max_lorentzian_index != item.form.degree // 2:
                return CheckResult(
                    "main-theorem-agreement", "fail",
                    {"form": item.name,
                     "reason": "normally stable form not accepted at all "
                               "levels",
                     "max_index": report.max_lorentzian_index})
    return CheckResult("main-theorem-agreement", "pass", details)


_CHECKS = {
    "d9-expansion-identity": check_d9_expansion_identity,
    "d9-tableau-data": check_d9_tableau_data,
    "d6-path-table": check_d6_path_table,
    "jacobi-trudi-vs-tableaux": check_jacobi_trudi,
    "lr-expansion-random": check_lr_expansion,
    "alpha-leading-term": check_alpha_leading,
    "specialization-order": check_specialization,
    "cauchy-binet-hessian": check_cauchy_binet,
    "band-matrix-lemmas": check_band_lemmas,
    "main-theorem-agreement": check_main_theorems,
}


def run_check(name: str, seed: int = 0) -> CheckResult:
    if name not in _CHECKS:
        raise ValueError(f"unknown check {name!r}")
    start = time.perf_counter()
    try:
        result = _CHECKS[name](seed)
    except InconclusiveError as exc:
        result = CheckResult(name, "inconclusive", {"error": str(exc)})
    except PropertyViolation as exc:
        result = CheckResult(name, "fail", {"error": str(exc)})
    result.seconds = time.perf_counter() - start
    return result


def run_suite(seed: int = 0, paper_examples_only: bool = False) -> list[CheckResult]:
    names = PAPER_EXAMPLE_CHECKS if paper_examples_only else CHECK_NAMES
    return [run_check(name, seed) for name in names]
