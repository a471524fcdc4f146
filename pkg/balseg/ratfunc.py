"""
Exact rational functions and the generating functions of s(., h) and p(., h)

Polynomials are dense tuples of Fractions, lowest degree first, with no
trailing zero. Rational functions are kept unreduced; equality is tested by
cross-multiplication.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .counting import CountingEvaluator
from .errors import InternalInconsistencyError, InvalidArgumentError, SeriesUndefinedError
from .numtheory import totient_sieve

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]

FAMILIES = ("s", "p")


def format_fraction(value: Number) -> str:
    """Exact decimal or "num/den" text"""
    return str(Fraction(value))


class Polynomial:
    """Dense univariate polynomial over Q"""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Number] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: Tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def monomial(cls, degree: int, coefficient: Number = 1) -> "Polynomial":
        return cls([0] * degree + [coefficient])

    @classmethod
    def one_minus_power(cls, exponent: int) -> "Polynomial":
        """1 - X^exponent"""
        return cls.monomial(0) - cls.monomial(exponent)

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial"""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial(self[k] + other[k] for k in range(size))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coefficients)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial()
        product = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i + j] += a * b
        return Polynomial(product)

    def shift(self, k: int) -> "Polynomial":
        """Multiply by X^k"""
        if self.is_zero():
            return self
        return Polynomial([0] * k + list(self.coefficients))

    def __call__(self, x: Number) -> Fraction:
        # Horner
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def to_text(self) -> str:
        """Coefficients low to high, e.g. "0, 1, 0, 1" """
        if self.is_zero():
            return "0"
        return ", ".join(format_fraction(c) for c in self.coefficients)

    def __repr__(self) -> str:
        return f"Polynomial([{self.to_text()}])"


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_eval(p: Polynomial, x: Number) -> Fraction:
    return p(x)


def _product(polys: Iterable[Polynomial]) -> Polynomial:
    result = Polynomial.monomial(0)
    for poly in polys:
        result = result * poly
    return result


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """
    num / den with den(0) != 0.

    ``factors`` optionally records den as a product of (1 - X^e) factors,
    used for display only.
    """

    num: Polynomial
    den: Polynomial
    factors: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.den.is_zero():
            raise InvalidArgumentError("Rational function with zero denominator")

    @classmethod
    def over_factors(cls, num: Polynomial, exponents: Sequence[int]) -> "RationalFunction":
        """num / prod (1 - X^e)"""
        den = _product(Polynomial.one_minus_power(e) for e in exponents)
        return cls(num, den, tuple(exponents))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # equality is not structural

    def factor_texts(self) -> List[str]:
        return [f"(1-X^{e})" for e in self.factors]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "numerator": self.num.to_text(),
            "denominator": self.den.to_text(),
            "denominator_factors": self.factor_texts(),
        }


def series_coefficients(f: RationalFunction, N: int) -> List[Fraction]:
    """First N+1 Taylor coefficients of f at 0"""
    if N < 0:
        raise InvalidArgumentError(f"N must be >= 0, got {N}")
    den0 = f.den[0]
    if den0 == 0:
        raise SeriesUndefinedError("Denominator vanishes at 0; no power series expansion")
    den = f.den.coefficients
    coeffs: List[Fraction] = []
    for n in range(N + 1):
        acc = f.num[n]
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * coeffs[n - k]
        coeffs.append(acc / den0)
    return coeffs


def _count_poly(values: Iterable[int], offset: int = 0) -> Polynomial:
    return Polynomial(values).shift(offset)


def build_S_h(h: int, evaluator: Optional[CountingEvaluator] = None) -> RationalFunction:
    """
    Generating function sum_L s(L, h) X^L.

    For h >= 2 the numerator is
        F_h = (1 - X^(h-1)) (V_2h - X^(h+1) V_(h-1) - X^h V_h - X^(2h-1)) + (1 + X) B_h
    with V_n = sum_{L<n} s(L,h) X^L and B_h = sum_{r<=h-2} s(h-1,r) X^(r+2h-1),
    over (1 - X^(h-1)) (1 - X^h) (1 - X^(h+1)).
    """
    if h < 0:
        raise InvalidArgumentError(f"h must be >= 0, got {h}")
    if h == 0:
        return RationalFunction.over_factors(Polynomial([1]), (1,))
    if h == 1:
        return RationalFunction.over_factors(Polynomial([0, 1]), (1, 1))
    ev = evaluator or CountingEvaluator()

    def V(n: int) -> Polynomial:
        return _count_poly(ev.s(L, h) for L in range(n))

    B = _count_poly((ev.s(h - 1, r) for r in range(h - 1)), 2 * h - 1)
    inner = V(2 * h) - V(h - 1).shift(h + 1) - V(h).shift(h) - Polynomial.monomial(2 * h - 1)
    F = Polynomial.one_minus_power(h - 1) * inner + Polynomial([1, 1]) * B
    if F.degree > 3 * h - 2:
        raise InternalInconsistencyError(f"deg F_{h} = {F.degree} exceeds 3h-2")
    return RationalFunction.over_factors(F, (h - 1, h, h + 1))


def build_P_h(h: int, evaluator: Optional[CountingEvaluator] = None) -> RationalFunction:
    """
    Generating function sum_L p(L, h) X^L.

    For h >= 2: G_h = (1 - X^(h-1)) sum_{L<h} p(L,h) X^L + X^h sum_{r<=h-2} p(h-1,r) X^r
    over (1 - X^(h-1)) (1 - X^(h+1)).
    """
    if h < 0:
        raise InvalidArgumentError(f"h must be >= 0, got {h}")
    if h == 0:
        return RationalFunction.over_factors(Polynomial([1]), (1,))
    if h == 1:
        return RationalFunction.over_factors(Polynomial([0, 1]), (2,))
    ev = evaluator or CountingEvaluator()
    head = _count_poly(ev.p(L, h) for L in range(h))
    tail = _count_poly((ev.p(h - 1, r) for r in range(h - 1)), h)
    G = Polynomial.one_minus_power(h - 1) * head + tail
    if G.degree > 2 * h - 2:
        raise InternalInconsistencyError(f"deg G_{h} = {G.degree} exceeds 2h-2")
    return RationalFunction.over_factors(G, (h - 1, h + 1))


def generating_function(family: str, h: int,
                        evaluator: Optional[CountingEvaluator] = None) -> RationalFunction:
    _check_family(family)
    builder = build_S_h if family == "s" else build_P_h
    return builder(h, evaluator)


def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise InvalidArgumentError(f"Family must be 's' or 'p', got {family!r}")


@dataclass(frozen=True)
class AsymptoticProfile:
    """
    count(L) = polynomial part(L) + residual[L mod period], exactly, for all L >= 0.

    Polynomial part: alpha L^2 + beta L (family s), alpha L (family p, even h),
    alpha (1 - (-1)^L) L (family p, odd h).

    numerator_at_one is F_h(1) = 2 h (h^2 - 1) alpha (family s) or
    G_h(1) = (h^2 - 1) alpha (family p), read off the generating function.
    """

    family: str
    h: int
    alpha: Fraction
    beta: Fraction
    parity_form: bool
    period: int
    residual: Tuple[Fraction, ...]
    numerator_at_one: Fraction

    def polynomial_part(self, L: int) -> Fraction:
        return _polynomial_part(self.family, self.alpha, self.beta, self.parity_form, L)

    def reconstruct(self, L: int) -> Fraction:
        if L < 0:
            raise InvalidArgumentError(f"reconstruct needs L >= 0, got {L}")
        return self.polynomial_part(L) + self.residual[L % self.period]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family,
            "h": str(self.h),
            "alpha": format_fraction(self.alpha),
            "beta": format_fraction(self.beta),
            "parity_form": self.parity_form,
            "period": str(self.period),
            "residual": [format_fraction(r) for r in self.residual],
            "numerator_at_one": format_fraction(self.numerator_at_one),
        }


def _polynomial_part(family: str, alpha: Fraction, beta: Fraction, parity_form: bool, L: int) -> Fraction:
    if family == "s":
        return alpha * L * L + beta * L
    if parity_form:
        return 2 * alpha * L if L % 2 else Fraction(0)
    return alpha * L


def leading_coefficients(family: str, h: int) -> Tuple[Fraction, Fraction]:
    """(alpha, beta) from the totient sums; beta is 0 for palindromes"""
    _check_family(family)
    if h < 2:
        raise InvalidArgumentError(f"Asymptotics need h >= 2, got {h}")
    phi = totient_sieve(h)
    if family == "s":
        alpha = Fraction(sum((h - i) * phi[i] for i in range(1, h)), h * (h * h - 1))
        beta = Fraction(sum(phi[i] for i in range(1, h + 1)), h * (h + 1))
        return alpha, beta
    # ceil((h-1)/2) = h // 2
    alpha = Fraction(sum(phi[h + 1 - 2 * i] for i in range(1, h // 2 + 1)), h * h - 1)
    return alpha, Fraction(0)


def asymptotic_profile(family: str, h: int,
                       evaluator: Optional[CountingEvaluator] = None) -> AsymptoticProfile:
    """Leading coefficients plus the exact periodic residual of s(., h) or p(., h)"""
    alpha, beta = leading_coefficients(family, h)
    ev = evaluator or CountingEvaluator()
    if family == "s":
        parity_form = False
        period = lcm(h - 1, h, h + 1)
        count = ev.s
    else:
        parity_form = h % 2 == 1
        period = lcm(h - 1, h + 1) * (2 if parity_form else 1)
        count = ev.p

    def remainder(L: int) -> Fraction:
        return count(L, h) - _polynomial_part(family, alpha, beta, parity_form, L)

    residual = tuple(remainder(L) for L in range(period))
    for L in range(period, 3 * period):
        if remainder(L) != residual[L % period]:
            raise InternalInconsistencyError(
                f"Residual of {family}(L,{h}) is not {period}-periodic at L={L}"
            )
    logger.debug(f"Profile {family}(., {h}): alpha={alpha}, beta={beta}, period={period}")
    numerator_at_one = generating_function(family, h, ev).num(1)
    scale = 2 * h * (h * h - 1) if family == "s" else h * h - 1
    if numerator_at_one != scale * alpha:
        raise InternalInconsistencyError(
            f"Numerator of the {family} generating function at X=1 is {numerator_at_one}, expected {scale * alpha}"
        )
    return AsymptoticProfile(family, h, alpha, beta, parity_form, period, residual, numerator_at_one)
