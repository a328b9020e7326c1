"""Classification of bivariate forms through band-matrix positivity.

Membership at level ``i`` is decided by total nonnegativity of the index-i
band matrix.  A cross-check mode also runs the strong (all levels up to i)
test and a positivity certificate for the permuted mixed Hessian
determinants on the open positive cone, and demands that all three verdicts
agree; a disagreement is raised as a :class:`PropertyViolation` since it
would contradict an identity the rest of the library is built on.

Positivity on the open cone is decided by certificate, not quantifier
elimination: when every maximal minor of the index-j band matrix is
nonnegative (and one is nonzero, which the rank guarantees for
``j <= s - 1``), every coefficient of the determinant is nonnegative and at
least one path monomial is present, so the determinant is positive on the
whole open orthant.  Refutation exhibits a rational positive point with a
nonpositive value; if a bounded search finds none the check reports
inconclusive, which callers treat as an error.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .core import (ContractError, InconclusiveError, PropertyViolation,
                   format_rational, univariate_coefficients)
from .forms import BivariateForm
from .hessian import evaluate_permuted_hessian_determinant, m_polynomial
from .toeplitz import (StrongTNResult, TNResult, build,
                       is_strongly_totally_nonnegative, is_totally_nonnegative,
                       maximal_minor, sperner_number)

# ---------------------------------------------------------------------------
# Real-rootedness of the coefficient polynomial (Sturm sequences)
# ---------------------------------------------------------------------------


def _strip_high(coeffs: list[Fraction]) -> list[Fraction]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def _derivative(coeffs: Sequence[Fraction]) -> list[Fraction]:
    return [k * c for k, c in enumerate(coeffs)][1:]


def _poly_mod(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(rem) - 1 >= db and any(rem):
        rem = _strip_high(rem)
        if len(rem) - 1 < db:
            break
        factor = rem[-1] / lead
        shift = len(rem) - 1 - db
        for k in range(db + 1):
            rem[shift + k] -= factor * b[k]
        rem.pop()
    return _strip_high(rem)


def _poly_gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a, b = _strip_high(list(a)), _strip_high(list(b))
    while b:
        a, b = b, _poly_mod(a, b)
    return a


def _sturm_chain(coeffs: Sequence[Fraction]) -> list[list[Fraction]]:
    chain = [_strip_high(list(coeffs))]
    deriv = _strip_high(_derivative(chain[0]))
    if deriv:
        chain.append(deriv)
        while True:
            rem = _poly_mod(chain[-2], chain[-1])
            if not rem:
                break
            chain.append([-c for c in rem])
    return chain


def _sign_variations(signs: Sequence[int]) -> int:
    filtered = [s for s in signs if s]
    return sum(1 for a, b in zip(filtered, filtered[1:]) if a * b < 0)


def _count_roots_negative_axis(coeffs: Sequence[Fraction]) -> int:
    """Distinct real roots of a square-free polynomial in (-inf, 0)."""
    chain = _sturm_chain(coeffs)
    at_zero = [1 if p[0] > 0 else (-1 if p[0] < 0 else 0) for p in chain]
    at_minus_inf = []
    for p in chain:
        lead = p[-1]
        sign = 1 if lead > 0 else -1
        if (len(p) - 1) % 2:
            sign = -sign
        at_minus_inf.append(sign)
    return _sign_variations(at_minus_inf) - _sign_variations(at_zero)


def is_normally_stable(form: BivariateForm) -> bool:
    """Whether sum_k c_k t^(d-k) has only real non-positive roots.

    Powers of t are stripped first (roots at 0 are allowed); the remaining
    polynomial is reduced to its square-free part and its distinct real
    roots on the negative axis are counted by exact Sturm sequences.
    """
    if form.is_zero:
        raise ContractError("the zero form is not classified")
    # Ascending in t: coefficient of t^j is c_{d-j}.
    coeffs = _strip_high(list(reversed(form.coeffs)))
    low = 0
    while coeffs[low] == 0:
        low += 1
    coeffs = coeffs[low:]
    if len(coeffs) == 1:
        return True
    square_free = coeffs
    gcd = _poly_gcd(coeffs, _derivative(coeffs))
    if len(gcd) > 1:
        quotient: list[Fraction] = []
        rem = list(coeffs)
        while len(rem) >= len(gcd):
            factor = rem[-1] / gcd[-1]
            quotient.append(factor)
            shift = len(rem) - len(gcd)
            for k in range(len(gcd)):
                rem[shift + k] -= factor * gcd[k]
            rem.pop()
        square_free = list(reversed(quotient))
    degree = len(square_free) - 1
    return _count_roots_negative_axis(square_free) == degree


# ---------------------------------------------------------------------------
# Mixed Hessian positivity on the open cone
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HrrLevel:
    j: int
    certified: bool
    negative_minor: Optional[tuple[tuple[int, ...], Fraction]] = None
    refutation_point: Optional[dict] = None
    refutation_value: Optional[Fraction] = None

    def to_json_obj(self) -> dict:
        out: dict = {"j": self.j, "certified": self.certified}
        if self.negative_minor is not None:
            out["negative_minor"] = {
                "cols": list(self.negative_minor[0]),
                "value": format_rational(self.negative_minor[1])}
        if self.refutation_point is not None:
            out["refutation_point"] = self.refutation_point
            out["refutation_value"] = format_rational(self.refutation_value)
        return out


@dataclass(frozen=True)
class HrrResult:
    ok: bool
    i: int
    levels: tuple[HrrLevel, ...]
    failed_level: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json_obj(self) -> dict:
        return {"ok": self.ok, "i": self.i,
                "failed_level": self.failed_level,
                "levels": [lvl.to_json_obj() for lvl in self.levels]}


def _point_dict(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> dict:
    return {**{f"X{z+1}": format_rational(x) for z, x in enumerate(xs)},
            **{f"Y{z+1}": format_rational(y) for z, y in enumerate(ys)}}


def _refute_level(form: BivariateForm, j: int, i: int,
                  rng: random.Random,
                  budget: int) -> Optional[tuple[dict, Fraction]]:
    d = form.degree
    length = d - 2 * j
    ones = [Fraction(1)] * length

    def found(xs, ys) -> Optional[tuple[dict, Fraction]]:
        value = evaluate_permuted_hessian_determinant(form, j, xs, ys)
        if value <= 0:
            return _point_dict(xs, ys), value
        return None

    hit = found(ones, ones)
    if hit:
        return hit

    # Deterministic probe curves.  "Swap" curves send X_z -> 1, Y_z -> t on
    # a prefix and X_z -> t, Y_z -> 1 on the rest; as t -> 0 they isolate a
    # single coefficient of each matrix entry, so a lone negative
    # coefficient always surfaces.  Prefix curves follow the specialization
    # that turns the determinant into a one-variable polynomial.
    curves = []
    for split in range(length + 1):
        curves.append(lambda t, e=split: (
            [Fraction(1) if z < e else t for z in range(length)],
            [t if z < e else Fraction(1) for z in range(length)]))
    for width in range(1, length + 1):
        curves.append(lambda t, w=width: (
            list(ones), [t if z < w else Fraction(1) for z in range(length)]))
        curves.append(lambda t, w=width: (
            [t if z < w else Fraction(1) for z in range(length)], list(ones)))
    ladder = [Fraction(1, 2) ** k for k in range(1, 21)]
    if j < i:
        # Exact threshold for the specialization curve: once t is below
        # |lowest| / (2 * sum of the rest), the lowest coefficient wins.
        m_coeffs = univariate_coefficients(m_polynomial(form, j, i))
        low = next((k for k, c in enumerate(m_coeffs) if c), None)
        if low is not None and m_coeffs[low] < 0:
            tail = sum(abs(c) for c in m_coeffs[low + 1:])
            if tail:
                ladder.append(abs(m_coeffs[low]) / (2 * tail))
    for t in ladder:
        for curve in curves:
            hit = found(*curve(t))
            if hit:
                return hit
    # Heavy-tailed random points reach the corners of the orthant that
    # moderate rationals miss.
    for _ in range(budget):
        xs = [Fraction(rng.randint(1, 9), rng.randint(1, 9)) *
              Fraction(2) ** rng.randint(-6, 6) for _ in range(length)]
        ys = [Fraction(rng.randint(1, 9), rng.randint(1, 9)) *
              Fraction(2) ** rng.randint(-6, 6) for _ in range(length)]
        hit = found(xs, ys)
        if hit:
            return hit
    return None


def satisfies_mixed_hrr(form: BivariateForm, i: int, seed: int = 0,
                        budget: int = 120) -> HrrResult:
    """Decide positivity of the permuted mixed Hessian determinants of all
    orders j <= min(i, s-1) on the open positive cone.

    Certificate: all maximal minors of the index-j band matrix nonnegative.
    Refutation: a rational positive point with nonpositive determinant value
    (searched at every order, since a failed certificate at one order only
    guarantees a refutation at *some* order).  Exhausting the search budget
    raises :class:`InconclusiveError`.
    """
    if form.is_zero:
        raise ContractError("the zero form is not classified")
    d = form.degree
    if not 0 <= i <= d // 2:
        raise ContractError("need 0 <= i <= floor(d/2)")
    top = min(i, sperner_number(form) - 1)
    levels: list[HrrLevel] = []
    suspects: list[int] = []
    for j in range(top + 1):
        band = build(form, j)
        negative = None
        any_positive = False
        for cols in combinations(range(d - j + 1), j + 1):
            value = maximal_minor(band, cols)
            if value < 0:
                negative = (cols, value)
                break
            if value > 0:
                any_positive = True
        if negative is None:
            if not any_positive:
                # j <= s - 1 forces rank j+1, so some maximal minor is nonzero.
                raise PropertyViolation(
                    f"all maximal minors vanish at order {j} although the "
                    f"rank of the band matrix of {form} must be {j + 1}")
            levels.append(HrrLevel(j, True))
        else:
            suspects.append(j)
            levels.append(HrrLevel(j, False, negative_minor=negative))
    if not suspects:
        return HrrResult(True, i, tuple(levels))
    rng = random.Random(seed)
    order = suspects + [j for j in range(top + 1) if j not in suspects]
    for j in order:
        found = _refute_level(form, j, i, rng, budget)
        if found is not None:
            point, value = found
            levels[j] = HrrLevel(j, levels[j].certified,
                                 levels[j].negative_minor, point, value)
            return HrrResult(False, i, tuple(levels), failed_level=j)
    raise InconclusiveError(
        f"could not certify or refute cone positivity for {form} at i={i}")


# ---------------------------------------------------------------------------
# Membership decisions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LorentzianVerdict:
    i: int
    member: bool
    tn: TNResult
    strong: Optional[StrongTNResult] = None
    hrr: Optional[HrrResult] = None

    def __bool__(self) -> bool:
        return self.member

    def to_json_obj(self) -> dict:
        out: dict = {"i": self.i, "member": self.member}
        if self.tn.witness is not None:
            out["negative_minor"] = self.tn.witness.to_json_obj()
        if self.strong is not None:
            out["strongly_nonnegative"] = self.strong.ok
        if self.hrr is not None:
            out["hessian_positive"] = self.hrr.ok
        return out


def is_i_lorentzian(form: BivariateForm, i: int,
                    cross_check: bool = False, seed: int = 0) -> LorentzianVerdict:
    """Membership at level i, decided by total nonnegativity of the index-i
    band matrix.  With ``cross_check`` the strong test and the cone
    positivity certificate are also run and must agree."""
    if not 0 <= i <= form.degree // 2:
        raise ContractError("need 0 <= i <= floor(d/2)")
    tn = is_totally_nonnegative(build(form, i))
    if not cross_check:
        return LorentzianVerdict(i, tn.ok, tn)
    strong = is_strongly_totally_nonnegative(form, i)
    hrr = satisfies_mixed_hrr(form, i, seed=seed)
    if not (tn.ok == strong.ok == hrr.ok):
        raise PropertyViolation(
            f"criteria disagree at i={i} for {form}: nonneg={tn.ok}, "
            f"strong={strong.ok}, hessian={hrr.ok}")
    return LorentzianVerdict(i, tn.ok, tn, strong, hrr)


@dataclass(frozen=True)
class ClassificationReport:
    degree: int
    verdicts: tuple[LorentzianVerdict, ...]
    sperner: int
    max_lorentzian_index: Optional[int]
    normally_stable: bool

    def verdict(self, i: int) -> LorentzianVerdict:
        return self.verdicts[i]

    def to_json_obj(self) -> dict:
        return {"degree": self.degree,
                "sperner": self.sperner,
                "max_lorentzian_index": self.max_lorentzian_index,
                "normally_stable": self.normally_stable,
                "verdicts": [v.to_json_obj() for v in self.verdicts]}


def lorentzian_chain(form: BivariateForm, cross_check: bool = False,
                     seed: int = 0) -> ClassificationReport:
    """Verdicts at every level with the chain checks.

    Verified on the fly: membership is monotone decreasing in i, and
    membership at s - 1 forces membership at floor(d/2).
    """
    if form.is_zero:
        raise ContractError("the zero form is not classified")
    d = form.degree
    verdicts = tuple(is_i_lorentzian(form, i, cross_check=cross_check, seed=seed)
                     for i in range(d // 2 + 1))
    for lower, upper in zip(verdicts, verdicts[1:]):
        if upper.member and not lower.member:
            raise PropertyViolation(
                f"membership is not monotone for {form}: level "
                f"{upper.i} holds but level {lower.i} fails")
    sperner = sperner_number(form)
    if verdicts[min(sperner - 1, d // 2)].member and not verdicts[d // 2].member:
        raise PropertyViolation(
            f"membership at s-1 must force the top level for {form}")
    member_levels = [v.i for v in verdicts if v.member]
    max_index = max(member_levels) if member_levels else None
    return ClassificationReport(d, verdicts, sperner, max_index,
                                is_normally_stable(form))
