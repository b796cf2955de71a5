"""Exact univariate polynomials and rational functions over the rationals.

Polynomials are dense, ascending-degree tuples of :class:`fractions.Fraction`.
Rational functions are kept in lowest terms with a monic denominator, so
equality and hashing are plain componentwise comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence, Union

from .errors import (
    DivisionByZeroFunction,
    InternalFault,
    NonSplittingDenominator,
    NotProper,
    ZeroDenominator,
    ZeroPolynomial,
)

VAR = "λ"

Scalar = Union[int, Fraction]
_ZERO = Fraction(0)
_ONE = Fraction(1)


def _strip(coeffs: list) -> tuple:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    """Dense polynomial in one indeterminate with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip([Fraction(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Polynomial":
        # caller guarantees Fractions with nonzero top coefficient
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "Polynomial":
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "Polynomial":
        p = ONE
        for r in roots:
            p = p * cls((-Fraction(r), 1))
        return p

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.to_str()

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return Polynomial._raw(
            _strip([a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=_ZERO)])
        )

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return Polynomial._raw(
            _strip([a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=_ZERO)])
        )

    def __rsub__(self, other) -> "Polynomial":
        return -self + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        if len(b) == 1:
            return self.scale(b[0])
        if len(a) == 1:
            return other.scale(a[0])
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial._raw(_strip(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: Scalar) -> "Polynomial":
        if not c:
            return ZERO
        c = Fraction(c)
        return Polynomial._raw(tuple(x * c for x in self.coeffs))

    def monic(self) -> "Polynomial":
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        inv = 1 / self.coeffs[-1]
        return Polynomial._raw(tuple(x * inv for x in self.coeffs))

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        dd = len(dv) - 1
        if len(rem) - 1 < dd:
            return ZERO, self
        inv_lc = 1 / dv[-1]
        quot = [_ZERO] * (len(rem) - dd)
        for k in range(len(rem) - 1 - dd, -1, -1):
            q = rem[k + dd] * inv_lc
            quot[k] = q
            if q:
                for j in range(dd + 1):
                    rem[k + j] -= q * dv[j]
        return Polynomial._raw(_strip(quot)), Polynomial._raw(_strip(rem[:dd]))

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def derivative(self) -> "Polynomial":
        return Polynomial._raw(_strip([k * c for k, c in enumerate(self.coeffs)][1:]))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, r: Scalar) -> "Polynomial":
        """Return p(x + r) as a polynomial in x (Horner/Taylor shift)."""
        c = list(self.coeffs)
        n = len(c)
        r = Fraction(r)
        if r:
            for i in range(n - 1):
                for j in range(n - 2, i - 1, -1):
                    c[j] += r * c[j + 1]
        return Polynomial._raw(tuple(c))

    def to_str(self, var: str = VAR) -> str:
        """Render in descending degree with explicit signs, e.g. ``λ^2 - 1``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if mag == 1:
                    body = mono
                elif mag.denominator == 1:
                    body = f"{mag}{mono}"
                else:
                    body = f"({mag}){mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _as_poly(x):
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.constant(x)
    return None


ZERO = Polynomial._raw(())
ONE = Polynomial._raw((_ONE,))
X = Polynomial._raw((_ZERO, _ONE))


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor; ``poly_gcd(0, 0) == 0``."""
    if p.degree < q.degree:
        p, q = q, p
    while q:
        if q.degree == 0:
            return ONE
        p, q = q, p % q
    return p.monic()


def is_squarefree(p: Polynomial) -> bool:
    if p.is_zero():
        raise ZeroPolynomial("squarefree test of the zero polynomial")
    return poly_gcd(p, p.derivative()).degree == 0


class RationalFunction:
    """Quotient ``num/den`` in lowest terms with monic ``den``."""

    __slots__ = ("num", "den")

    def __init__(self, num=ZERO, den=ONE):
        num = _as_poly(num)
        den = _as_poly(den)
        if num is None or den is None:
            raise TypeError("numerator and denominator must be polynomials or rationals")
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        if den.degree > 0 and num.degree >= 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.lc
        if lc != 1:
            num = num.scale(1 / lc)
            den = den.monic()
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        f = object.__new__(cls)
        f.num, f.den = num, den
        return f

    @classmethod
    def constant(cls, c: Scalar) -> "RationalFunction":
        c = Fraction(c)
        return cls._raw(Polynomial._raw((c,)) if c else ZERO, ONE)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.lc

    def in_W(self) -> bool:
        """Membership in the reduced-weight class: deg num <= deg den."""
        return self.num.degree <= self.den.degree

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.degree == 0 and self.num == other
        if isinstance(other, Polynomial):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        return self.to_str()

    def to_str(self, var: str = VAR) -> str:
        n = self.num.to_str(var)
        if self.den.degree == 0:
            return n
        if len([c for c in self.num.coeffs if c]) > 1:
            n = f"({n})"
        d = self.den.to_str(var)
        if len([c for c in self.den.coeffs if c]) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(-self.num, self.den)

    def __add__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        d1, d2 = self.den, other.den
        if d1.degree == 0 and d2.degree == 0:
            return RationalFunction._raw(self.num + other.num, ONE)
        if d1 == d2:
            return RationalFunction(self.num + other.num, d1)
        g = poly_gcd(d1, d2)
        if g.degree == 0:
            # coprime denominators: a common factor of the sum's numerator with d1*d2
            # would have to divide n1*d2 or n2*d1, which lowest terms rules out
            num = self.num * d2 + other.num * d1
            if num.is_zero():
                return ZERO_RF
            return RationalFunction._raw(num, d1 * d2)
        d1g = d1.exact_div(g)
        num = self.num * d2.exact_div(g) + other.num * d1g
        return RationalFunction(num, d1g * d2)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalFunction":
        return (-self) + other

    def __mul__(self, other) -> "RationalFunction":
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO_RF
            return RationalFunction._raw(self.num.scale(other), self.den)
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO_RF
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if d1.degree == 0 and d2.degree == 0:
            return RationalFunction._raw(n1 * n2, ONE)
        # cross-cancel so the product is already in lowest terms
        if d2.degree > 0 and n1.degree > 0:
            g = poly_gcd(n1, d2)
            if g.degree > 0:
                n1, d2 = n1.exact_div(g), d2.exact_div(g)
        if d1.degree > 0 and n2.degree > 0:
            g = poly_gcd(n2, d1)
            if g.degree > 0:
                n2, d1 = n2.exact_div(g), d1.exact_div(g)
        num, den = n1 * n2, d1 * d2
        lc = den.lc
        if lc != 1:
            num, den = num.scale(1 / lc), den.monic()
        return RationalFunction._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise DivisionByZeroFunction("inverse of the zero function")
        lc = self.num.lc
        return RationalFunction._raw(self.den.scale(1 / lc), self.num.monic())

    def __truediv__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction._raw(self.num**k, self.den**k)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d


def _as_rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        return RationalFunction.constant(x)
    if isinstance(x, Polynomial):
        return RationalFunction._raw(x, ONE)
    return None


ZERO_RF = RationalFunction._raw(ZERO, ONE)
ONE_RF = RationalFunction._raw(ONE, ONE)
LAMBDA = RationalFunction._raw(X, ONE)


def rf_normalize(num: Polynomial, den: Polynomial) -> RationalFunction:
    return RationalFunction(num, den)


def rf_add(f: RationalFunction, g: RationalFunction) -> RationalFunction:
    return f + g


def rf_mul(f: RationalFunction, g: RationalFunction) -> RationalFunction:
    return f * g


def rf_inv(f: RationalFunction) -> RationalFunction:
    return f.inverse()


def series_at_infinity(f: RationalFunction, K: int) -> list[Fraction]:
    """Coefficients ``c_0..c_K`` of ``f`` expanded in ``t = 1/λ``."""
    if not f.in_W():
        raise NotProper(f"numerator degree exceeds denominator degree in {f}")
    D = f.den.degree
    n, d = f.num.coeffs, f.den.coeffs
    # reversed polynomials: f = N(t)/Q(t) with N_j = n_{D-j}, Q_i = d_{D-i}, Q_0 = 1
    N = [n[D - j] if 0 <= D - j < len(n) else _ZERO for j in range(K + 1)]
    Q = [d[D - i] for i in range(min(D, K) + 1)]
    c: list[Fraction] = []
    for j in range(K + 1):
        acc = N[j]
        for i in range(1, min(j, D) + 1):
            acc -= Q[i] * c[j - i]
        c.append(acc)
    return c


def power_series_div(num: Sequence[Fraction], den: Sequence[Fraction], order: int) -> list[Fraction]:
    """First ``order`` coefficients of num(x)/den(x) with den(0) != 0."""
    inv0 = 1 / den[0]
    out: list[Fraction] = []
    for j in range(order):
        acc = num[j] if j < len(num) else _ZERO
        for i in range(1, min(j, len(den) - 1) + 1):
            acc -= den[i] * out[j - i]
        out.append(acc * inv0)
    return out


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    for k in range(1, math.isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
    return small + large[::-1]


def rational_roots(p: Polynomial) -> tuple[list[tuple[Fraction, int]], Polynomial]:
    """Rational roots of ``p`` with multiplicities, and the root-free cofactor.

    Roots come back in ascending order; the cofactor is monic.
    """
    if p.is_zero():
        raise ZeroPolynomial("roots of the zero polynomial")
    roots: list[tuple[Fraction, int]] = []
    rest = p.monic()
    zeros = 0
    while rest.degree > 0 and rest.coeffs[0] == 0:
        rest = Polynomial._raw(rest.coeffs[1:])
        zeros += 1
    if zeros:
        roots.append((_ZERO, zeros))
    if rest.degree > 0:
        scale = math.lcm(*(c.denominator for c in rest.coeffs))
        ints = [int(c * scale) for c in rest.coeffs]
        cands = set()
        for a in _divisors(ints[0]):
            for b in _divisors(ints[-1]):
                cands.add(Fraction(a, b))
                cands.add(Fraction(-a, b))
        for r in sorted(cands):
            if rest.degree == 0:
                break
            mult = 0
            lin = Polynomial._raw((-r, _ONE))
            while rest.degree > 0 and rest(r) == 0:
                rest = rest.exact_div(lin)
                mult += 1
            if mult:
                roots.append((r, mult))
    roots.sort()
    return roots, rest


@dataclass(frozen=True)
class PartialFractionForm:
    """``constant + sum(coeff / (λ - root)**power)`` over rational roots."""

    constant: Fraction
    terms: tuple  # of (root, power, coeff)

    def recombine(self) -> RationalFunction:
        total = RationalFunction.constant(self.constant)
        for root, power, coeff in self.terms:
            total = total + RationalFunction(
                Polynomial.constant(coeff), Polynomial((-root, 1)) ** power
            )
        return total


def partial_fractions(f: RationalFunction) -> PartialFractionForm:
    if not f.in_W():
        raise NotProper(f"numerator degree exceeds denominator degree in {f}")
    constant = _ZERO
    num = f.num
    if num.degree == f.den.degree:
        constant = num.lc  # den is monic
        num = num - f.den.scale(constant)
    if num.is_zero():
        return PartialFractionForm(constant, ())
    roots, rest = rational_roots(f.den)
    if rest.degree > 0:
        raise NonSplittingDenominator(rest)
    terms = []
    for r, m in roots:
        # den = (λ-r)^m * q; Taylor-expand num/q about r to get the m coefficients
        q = ONE
        for s, k in roots:
            if s != r:
                q = q * Polynomial((-s, 1)) ** k
        taylor = power_series_div(num.shift(r).coeffs, q.shift(r).coeffs, m)
        for j, c in enumerate(taylor):
            if c:
                terms.append((r, m - j, c))
    form = PartialFractionForm(constant, tuple(terms))
    if form.recombine() != f:
        raise InternalFault(f"partial fraction recombination failed for {f}")
    return form


def poly_to_json(p: Polynomial) -> list[str]:
    return [str(c) for c in p.coeffs] or ["0"]


def poly_from_json(data: Sequence) -> Polynomial:
    return Polynomial(Fraction(str(c)) for c in data)


def rf_to_json(f: RationalFunction) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def rf_from_json(data: dict) -> RationalFunction:
    return RationalFunction(poly_from_json(data["num"]), poly_from_json(data["den"]))
