"""Scalar and polynomial substrate: exact rationals, complex rationals, Laurent polynomials.

Every verification in this package that claims exactness runs on these types.
Floating point only enters through the numeric evaluators and transforms.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "ExactScalar",
    "ComplexRational",
    "I",
    "LaurentPoly",
    "DomainError",
    "as_exact",
    "parse_rational",
    "poly_eval",
    "poly_is_proper",
]

# The coefficient field for all exact checks.  fractions.Fraction already
# guarantees denominator > 0 and gcd(num, den) == 1 after every operation.
ExactScalar = Fraction

Scalar = Union[int, Fraction, float, complex, "ComplexRational"]


class DomainError(ValueError):
    """Raised when an operation is evaluated outside its domain."""


def as_exact(value) -> Fraction:
    """Coerce ints, rational strings like '3/4' and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or 'p' into an exact Fraction (no float round trip)."""
    return Fraction(text.strip())


@dataclass(frozen=True)
class ComplexRational:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    @staticmethod
    def _coerce(other) -> "ComplexRational | None":
        if isinstance(other, ComplexRational):
            return other
        if isinstance(other, (int, Fraction)):
            return ComplexRational(Fraction(other), Fraction(0))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ComplexRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero ComplexRational")
        return ComplexRational(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (ComplexRational(Fraction(1)) / self) ** (-n)
        out = ComplexRational(Fraction(1))
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"({self.re}{'+' if self.im >= 0 else ''}{self.im}i)"


I = ComplexRational(Fraction(0), Fraction(1))


def _is_zero(c) -> bool:
    return c == 0


class LaurentPoly:
    """Finite Laurent polynomial sum_d coeffs[d] * x**d.

    Coefficients may be Fractions, ComplexRationals, floats or complex; the
    arithmetic is whatever the coefficient type provides.  The canonical zero
    is an empty coefficient list with min_degree 0, so equality testing is
    structural.  Stored leading/trailing coefficients are nonzero.
    """

    __slots__ = ("min_degree", "coeffs")

    def __init__(self, coeffs: Iterable, min_degree: int = 0):
        coeffs = list(coeffs)
        # trim zero tails on both ends, keep bookkeeping canonical
        while coeffs and _is_zero(coeffs[0]):
            coeffs.pop(0)
            min_degree += 1
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        if not coeffs:
            min_degree = 0
        self.coeffs = tuple(coeffs)
        self.min_degree = min_degree

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls(())

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls((Fraction(1),))

    @classmethod
    def monomial(cls, degree: int, coeff=Fraction(1)) -> "LaurentPoly":
        return cls((coeff,), degree)

    @classmethod
    def x(cls) -> "LaurentPoly":
        return cls.monomial(1)

    @classmethod
    def from_dict(cls, d: Mapping[int, object]) -> "LaurentPoly":
        if not d:
            return cls.zero()
        lo = min(d)
        hi = max(d)
        return cls([d.get(k, 0) for k in range(lo, hi + 1)], lo)

    # -- bookkeeping ---------------------------------------------------
    @property
    def max_degree(self) -> int:
        if not self.coeffs:
            return 0
        return self.min_degree + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, degree: int):
        i = degree - self.min_degree
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def items(self):
        for i, c in enumerate(self.coeffs):
            if not _is_zero(c):
                yield self.min_degree + i, c

    def degree(self) -> int:
        """Top degree; the zero polynomial reports -1 by convention."""
        if self.is_zero():
            return -1
        return self.max_degree

    # -- ring operations -----------------------------------------------
    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_degree, other.min_degree)
        hi = max(self.max_degree, other.max_degree)
        out = [self[d] + other[d] for d in range(lo, hi + 1)]
        return LaurentPoly(out, lo)

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.min_degree)

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            if self.is_zero() or other.is_zero():
                return LaurentPoly.zero()
            out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if _is_zero(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return LaurentPoly(out, self.min_degree + other.min_degree)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "LaurentPoly":
        if _is_zero(c):
            return LaurentPoly.zero()
        return LaurentPoly([c * a for a in self.coeffs], self.min_degree)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return LaurentPoly(self.coeffs, self.min_degree + k)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_degree == other.min_degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_degree, self.coeffs))

    # -- the operator primitives ----------------------------------------
    def dilate(self, c) -> "LaurentPoly":
        """f(x) -> f(c x): maps x**n to c**n x**n (exact for Fraction c)."""
        return LaurentPoly(
            [a * c ** (self.min_degree + i) for i, a in enumerate(self.coeffs)],
            self.min_degree,
        )

    def reflect(self) -> "LaurentPoly":
        """f(x) -> f(-x)."""
        return LaurentPoly(
            [a if (self.min_degree + i) % 2 == 0 else -a for i, a in enumerate(self.coeffs)],
            self.min_degree,
        )

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly(
            [(self.min_degree + i) * a for i, a in enumerate(self.coeffs)],
            self.min_degree - 1,
        )

    def even_part(self) -> "LaurentPoly":
        return LaurentPoly.from_dict({d: c for d, c in self.items() if d % 2 == 0})

    def odd_part(self) -> "LaurentPoly":
        return LaurentPoly.from_dict({d: c for d, c in self.items() if d % 2 != 0})

    # -- misc -----------------------------------------------------------
    def map_coeffs(self, fn) -> "LaurentPoly":
        return LaurentPoly([fn(c) for c in self.coeffs], self.min_degree)

    def __repr__(self):
        if self.is_zero():
            return "LaurentPoly(0)"
        terms = " + ".join(f"({c})*x^{d}" for d, c in self.items())
        return f"LaurentPoly({terms})"


def poly_eval(p: LaurentPoly, x):
    """Evaluate p at x; x must be nonzero when p has negative degrees."""
    if p.is_zero():
        return 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
    if p.min_degree < 0 and _is_zero(x):
        raise DomainError("evaluation at 0 requires a proper polynomial")
    # Horner on the shifted (proper) polynomial, then multiply by x**min_degree
    acc = p.coeffs[-1]
    for c in reversed(p.coeffs[:-1]):
        acc = acc * x + c
    if p.min_degree:
        acc = acc * x ** p.min_degree
    return acc


def poly_is_proper(p: LaurentPoly) -> bool:
    """True iff p has no negative-degree terms (the zero polynomial is proper)."""
    return p.is_zero() or p.min_degree >= 0
