"""Bivariate forms in normalized-coefficient representation.

A degree-``d`` form is stored as the sequence ``(c_0, ..., c_d)`` with

    F = sum_k  binom(d, k) * c_k * X^k * Y^(d-k).

The monomial coefficient ``binom(d,k)*c_k`` is computed on demand; every
Toeplitz matrix of the form reads the normalized ``c_k`` directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import ContractError, RationalLike, as_rational, format_rational


@dataclass(frozen=True)
class BivariateForm:
    degree: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.degree < 0:
            raise ContractError("degree must be nonnegative")
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        if len(coeffs) != self.degree + 1:
            raise ContractError(
                f"degree {self.degree} form needs {self.degree + 1} "
                f"coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[RationalLike]) -> "BivariateForm":
        coeffs = tuple(as_rational(c) for c in coeffs)
        return cls(len(coeffs) - 1, coeffs)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def monomial_coefficient(self, k: int) -> Fraction:
        """Coefficient of X^k Y^(d-k), i.e. binom(d,k)*c_k."""
        if not 0 <= k <= self.degree:
            raise ContractError("monomial index out of range")
        return math.comb(self.degree, k) * self.coeffs[k]

    def evaluate(self, x: RationalLike, y: RationalLike) -> Fraction:
        x, y = as_rational(x), as_rational(y)
        d = self.degree
        return sum((math.comb(d, k) * self.coeffs[k] * x**k * y**(d - k)
                    for k in range(d + 1)), Fraction(0))

    def scale(self, factor: RationalLike) -> "BivariateForm":
        factor = as_rational(factor)
        return BivariateForm(self.degree, tuple(factor * c for c in self.coeffs))

    def to_json_obj(self) -> dict:
        return {"degree": self.degree,
                "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BivariateForm":
        if "coeffs" not in obj:
            raise ContractError("form object needs a 'coeffs' field")
        coeffs = tuple(as_rational(c) for c in obj["coeffs"])
        degree = obj.get("degree", len(coeffs) - 1)
        return cls(degree, coeffs)

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(c) for c in self.coeffs) + ")"


def first_nonzero_index(form: BivariateForm) -> int:
    """The least ``a`` with ``c_a != 0``; the zero form is rejected."""
    for k, c in enumerate(form.coeffs):
        if c:
            return k
    raise ContractError("the zero form has no first nonzero coefficient")


def apply_x(form: BivariateForm) -> BivariateForm:
    """Partial derivative in X, in normalized coordinates: (x.F)_k = d*c_{k+1}."""
    d = form.degree
    if d == 0:
        raise ContractError("cannot differentiate a degree-0 form")
    return BivariateForm(d - 1, tuple(d * form.coeffs[k + 1] for k in range(d)))


def apply_y(form: BivariateForm) -> BivariateForm:
    """Partial derivative in Y, in normalized coordinates: (y.F)_k = d*c_k."""
    d = form.degree
    if d == 0:
        raise ContractError("cannot differentiate a degree-0 form")
    return BivariateForm(d - 1, tuple(d * form.coeffs[k] for k in range(d)))


def apply_operator(form: BivariateForm, p: int, q: int) -> BivariateForm:
    """Apply the differential operator x^p y^q; the result has degree d-p-q.

    In normalized coordinates ((x^p y^q).F)_k = d!/(d-p-q)! * c_{k+p}.
    """
    if p < 0 or q < 0:
        raise ContractError("operator exponents must be nonnegative")
    d = form.degree
    if p + q > d:
        raise ContractError(f"operator degree {p + q} exceeds form degree {d}")
    factor = math.perm(d, p + q)
    new_degree = d - p - q
    return BivariateForm(
        new_degree,
        tuple(factor * form.coeffs[k + p] for k in range(new_degree + 1)))


def substitute_linear(form: BivariateForm, t: RationalLike) -> BivariateForm:
    """The deformation F(X + t*Y, t*X + Y), again in normalized coordinates."""
    t = as_rational(t)
    d = form.degree
    monomial = [Fraction(0)] * (d + 1)
    for k in range(d + 1):
        weight = math.comb(d, k) * form.coeffs[k]
        if not weight:
            continue
        # (X + tY)^k * (tX + Y)^(d-k), collected by X-degree m = alpha + beta.
        for alpha in range(k + 1):
            left = math.comb(k, alpha) * t ** (k - alpha)
            for beta in range(d - k + 1):
                coeff = left * math.comb(d - k, beta) * t ** beta
                monomial[alpha + beta] += weight * coeff
    coeffs = tuple(monomial[m] / math.comb(d, m) for m in range(d + 1))
    return BivariateForm(d, coeffs)


def perturb(form: BivariateForm, t: RationalLike, u: RationalLike,
            s: int) -> BivariateForm:
    """F(X+tY, tX+Y) + (-1)^s * u * Y^d; only c_0 differs from the deformation."""
    if s < 1:
        raise ContractError("the parity exponent s must be a positive integer")
    deformed = substitute_linear(form, t)
    u = as_rational(u)
    delta = -u if s % 2 else u
    coeffs = (deformed.coeffs[0] + delta,) + deformed.coeffs[1:]
    return BivariateForm(form.degree, coeffs)


def from_factors(roots: Sequence[RationalLike], extra_x: int = 0,
                 extra_y: int = 0) -> BivariateForm:
    """The form X^extra_x * Y^extra_y * prod_k (X + roots_k * Y), normalized.

    The product is expanded exactly and the monomial coefficients are divided
    by binomials to land in normalized coordinates.
    """
    if extra_x < 0 or extra_y < 0:
        raise ContractError("extra powers must be nonnegative")
    rho = [as_rational(r) for r in roots]
    # Coefficients of prod (X + rho*Y) by X-degree: poly[j] multiplies X^j Y^(m-j).
    poly = [Fraction(1)]
    for r in rho:
        nxt = [Fraction(0)] * (len(poly) + 1)
        for j, c in enumerate(poly):
            nxt[j + 1] += c          # the X of this factor
            nxt[j] += r * c          # the rho*Y of this factor
        poly = nxt
    d = extra_x + extra_y + len(rho)
    monomial = [Fraction(0)] * (d + 1)
    for j, c in enumerate(poly):
        monomial[j + extra_x] = c
    coeffs = tuple(monomial[k] / math.comb(d, k) for k in range(d + 1))
    return BivariateForm(d, coeffs)


def from_coefficient_factors(degree: int, ratios: Sequence[RationalLike],
                             shift: int = 0,
                             scale: RationalLike = 1) -> BivariateForm:
    """Form whose normalized coefficients are scale * [z^k] z^shift*prod(1+r*z).

    The generating polynomial of ``(c_0, ..., c_d)`` then has only real
    non-positive roots, so these forms are normally stable by construction.
    """
    if shift < 0:
        raise ContractError("shift must be nonnegative")
    ratios = [as_rational(r) for r in ratios]
    scale = as_rational(scale)
    poly = [Fraction(1)]
    for r in ratios:
        nxt = [Fraction(0)] * (len(poly) + 1)
        for j, c in enumerate(poly):
            nxt[j] += c
            nxt[j + 1] += r * c
        poly = nxt
    if degree < shift + len(ratios):
        raise ContractError("degree too small for the requested coefficients")
    coeffs = [Fraction(0)] * (degree + 1)
    for j, c in enumerate(poly):
        coeffs[shift + j] = scale * c
    return BivariateForm(degree, tuple(coeffs))
