"""Deterministic fixture generation for the property suites.

Identical specs produce byte-identical corpora: every family draws from its
own seeded stream, so adding a family or degree never reshuffles the others.
Expected-property hints attached to the fixtures are claims to be verified
by the consumer, never trusted.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .core import as_rational, format_rational
from .forms import (BivariateForm, from_coefficient_factors, from_factors,
                    perturb)
from .toeplitz import build, is_totally_nonnegative, sperner_number

FAMILY_FACTORED_DISTINCT = "factored-positive-distinct"
FAMILY_FACTORED_REPEATED = "factored-nonnegative-repeated"
FAMILY_MONOMIAL = "monomial-multiples"
FAMILY_PERTURBED = "perturbed-H"
FAMILY_RANDOM = "random-dense"
FAMILY_ADVERSARIAL = "adversarial-signed"
FAMILY_PRODUCT = "product-form"

# The two factored families draw their *coefficient sequences* from factored
# generating polynomials (normally stable by construction); total positivity
# and nonnegativity at every level provably hold for them.  Plain products
# of linear forms do NOT have that property beyond level 1 (see the frozen
# counterexample in the adversarial family), so they form their own family
# with a correspondingly weaker hint.
ALL_FAMILIES = (
    FAMILY_FACTORED_DISTINCT,
    FAMILY_FACTORED_REPEATED,
    FAMILY_MONOMIAL,
    FAMILY_PERTURBED,
    FAMILY_RANDOM,
    FAMILY_ADVERSARIAL,
    FAMILY_PRODUCT,
)


@dataclass(frozen=True)
class CorpusSpec:
    seed: int = 20240
    degrees: tuple[int, ...] = (2, 3, 4, 5, 6, 7, 8)
    families: tuple[str, ...] = ALL_FAMILIES


@dataclass(frozen=True)
class CorpusForm:
    name: str
    family: str
    form: BivariateForm
    hints: dict = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        return {"name": self.name, "family": self.family,
                "form": self.form.to_json_obj(), "hints": dict(self.hints)}


def _rng(spec: CorpusSpec, family: str, degree: int) -> random.Random:
    return random.Random(f"{spec.seed}:{family}:{degree}")


def _small_positive(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 12), rng.randint(1, 3))


def _factored_distinct(spec: CorpusSpec, d: int) -> list[CorpusForm]:
    rng = _rng(spec, FAMILY_FACTORED_DISTINCT, d)
    out = []
    for idx in range(2):
        ratios: set[Fraction] = set()
        while len(ratios) < d:
            ratios.add(_small_positive(rng))
        form = from_coefficient_factors(d, sorted(ratios),
                                        scale=_small_positive(rng))
        out.append(CorpusForm(
            f"{FAMILY_FACTORED_DISTINCT}-d{d}-{idx}", FAMILY_FACTORED_DISTINCT,
            form, {"tp_all_i": True, "tn_all_i": True, "normally_stable": True,
                   "sperner": d // 2 + 1}))
    return out


def _factored_repeated(spec: CorpusSpec, d: int) -> list[CorpusForm]:
    rng = _rng(spec, FAMILY_FACTORED_REPEATED, d)
    out = []
    for idx in range(3):
        shift = rng.randint(0, 1)
        n_ratios = rng.randint(1, d - shift)
        base = [_small_positive(rng) if rng.random() < 0.8 else Fraction(0)
                for _ in range(max(1, n_ratios // 2 + 1))]
        ratios = [base[rng.randrange(len(base))] for _ in range(n_ratios)]
        form = from_coefficient_factors(d, ratios, shift,
                                        scale=_small_positive(rng))
        out.append(CorpusForm(
            f"{FAMILY_FACTORED_REPEATED}-d{d}-{idx}", FAMILY_FACTORED_REPEATED,
            form, {"tn_all_i": True, "normally_stable": True}))
    return out


def _product_forms(spec: CorpusSpec, d: int) -> list[CorpusForm]:
    rng = _rng(spec, FAMILY_PRODUCT, d)
    out = []
    for idx in range(3):
        extra_x = rng.randint(0, 1)
        extra_y = rng.randint(0, 1)
        n_roots = d - extra_x - extra_y
        roots = [_small_positive(rng) if rng.random() < 0.85 else Fraction(0)
                 for _ in range(n_roots)]
        form = from_factors(roots, extra_x, extra_y)
        # Real-rootedness gives log-concave normalized coefficients with
        # contiguous support, hence membership at levels 0 and 1; nothing
        # more is guaranteed.
        out.append(CorpusForm(
            f"{FAMILY_PRODUCT}-d{d}-{idx}", FAMILY_PRODUCT, form,
            {"lorentzian_at_least": min(1, d // 2)}))
    return out


def _monomials(spec: CorpusSpec, d: int) -> list[CorpusForm]:
    rng = _rng(spec, FAMILY_MONOMIAL, d)
    out = []
    for idx in range(2):
        k = rng.randint(0, d)
        scale = _small_positive(rng)
        coeffs = [Fraction(0)] * (d + 1)
        coeffs[k] = scale
        form = BivariateForm(d, tuple(coeffs))
        # The band matrices of a monomial carry a single positive diagonal
        # stripe of length min(k, d-k)+1 at the widest level.
        out.append(CorpusForm(
            f"{FAMILY_MONOMIAL}-d{d}-{idx}", FAMILY_MONOMIAL, form,
            {"tn_all_i": True, "normally_stable": True,
             "sperner": min(k, d - k) + 1}))
    return out


def _tn_at_all_levels(form: BivariateForm) -> bool:
    return all(is_totally_nonnegative(build(form, i)).ok
               for i in range(form.degree // 2 + 1))


def _perturbed(spec: CorpusSpec, d: int) -> list[CorpusForm]:
    if d < 2:
        return []
    rng = _rng(spec, FAMILY_PERTURBED, d)
    out = []
    for idx in range(2):
        n_ratios = min(idx + 1, d)
        ratios = [_small_positive(rng) for _ in range(n_ratios)]
        base = from_coefficient_factors(d, ratios, scale=_small_positive(rng))
        s_base = sperner_number(base)
        t = Fraction(1, rng.randint(2, 4))
        u = Fraction(1, 8)
        chosen = None
        for _ in range(24):
            candidate = perturb(base, t, u, s_base)
            if _tn_at_all_levels(candidate):
                chosen = candidate
                break
            u /= 2
        if chosen is None:
            continue
        hints = {"tn_all_i": True, "base_sperner": s_base,
                 "deformation_t": format_rational(t),
                 "deformation_u": format_rational(u)}
        if s_base <= d // 2:
            hints["sperner"] = s_base + 1
        out.append(CorpusForm(
            f"{FAMILY_PERTURBED}-d{d}-{idx}", FAMILY_PERTURBED, chosen, hints))
    return out


def _random_dense(spec: CorpusSpec, d: int) -> list[CorpusForm]:
    rng = _rng(spec, FAMILY_RANDOM, d)
    out = []
    for idx in range(4):
        # Numerators and denominators stay below 12 bits so that exact
        # determinant arithmetic stays fast.
        coeffs = tuple(Fraction(rng.randint(-40, 40), rng.randint(1, 12))
                       for _ in range(d + 1))
        form = BivariateForm(d, coeffs)
        if form.is_zero:
            continue
        out.append(CorpusForm(
            f"{FAMILY_RANDOM}-d{d}-{idx}", FAMILY_RANDOM, form, {}))
    return out


def _adversarial(spec: CorpusSpec, d: int) -> list[CorpusForm]:
    out = []
    fixed: list[tuple[tuple[int, ...], dict]] = []
    if d == 2:
        fixed.append(((1, 0, 1), {"max_lorentzian_index": 0}))
    if d == 4:
        # Log-concave positive coefficients, so level 1 holds, but the full
        # 3x3 determinant is -p(p-1)^2 < 0 at p = 2.
        fixed.append(((1, 2, 2, 2, 1), {"max_lorentzian_index": 1}))
    if d == 5:
        # A product of linear forms with distinct positive roots whose
        # level-2 band matrix has a negative 3x3 minor: products are members
        # at levels 0 and 1 only in general.
        spread = from_factors([Fraction(1), Fraction(7), Fraction(17, 2),
                               Fraction(19, 2), Fraction(13)])
        fixed.append((spread.coeffs, {"max_lorentzian_index": 1}))
    if d >= 5:
        coeffs = (1,) + (0,) * (d - 1) + (1,)
        fixed.append((coeffs, {"max_lorentzian_index": 0}))
    rng = _rng(spec, FAMILY_ADVERSARIAL, d)
    signed = tuple(Fraction(rng.choice([-1, 1]) * rng.randint(0, 6))
                   for _ in range(d + 1))
    if any(signed):
        fixed.append((signed, {}))
    for idx, (coeffs, hints) in enumerate(fixed):
        form = BivariateForm(d, tuple(as_rational(c) for c in coeffs))
        out.append(CorpusForm(
            f"{FAMILY_ADVERSARIAL}-d{d}-{idx}", FAMILY_ADVERSARIAL, form,
            dict(hints)))
    return out


_GENERATORS = {
    FAMILY_FACTORED_DISTINCT: _factored_distinct,
    FAMILY_FACTORED_REPEATED: _factored_repeated,
    FAMILY_MONOMIAL: _monomials,
    FAMILY_PERTURBED: _perturbed,
    FAMILY_RANDOM: _random_dense,
    FAMILY_ADVERSARIAL: _adversarial,
    FAMILY_PRODUCT: _product_forms,
}


def generate(spec: CorpusSpec | None = None) -> list[CorpusForm]:
    spec = spec or CorpusSpec()
    out: list[CorpusForm] = []
    for family in spec.families:
        if family not in _GENERATORS:
            raise ValueError(f"unknown corpus family {family!r}")
        for d in spec.degrees:
            out.extend(_GENERATORS[family](spec, d))
    return out


def serialize_corpus(forms: list[CorpusForm]) -> str:
    return json.dumps([f.to_json_obj() for f in forms], indent=2,
                      sort_keys=True)
