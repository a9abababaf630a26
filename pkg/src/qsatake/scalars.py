"""Exact scalars: Gaussian rationals, Laurent polynomials, quantum integers.

Rationals are stdlib ``fractions.Fraction`` (always reduced, positive
denominator).  ``GaussianRational`` is a pair of them representing
``re + im*i`` and is the coefficient field for all linear algebra here.
Quantum integers and Gaussian binomials are evaluated at the fourth root of
unity ``i``; the binomials are computed symbolically in ``q`` first, because
the quotient of quantum factorials degenerates to 0/0 at a root of unity.
"""

from __future__ import annotations

import re as _re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .errors import DomainError

Rational = Fraction

_GAUSS_RE = _re.compile(
    r"^(?P<re>-?\d+(?:/\d+)?)(?P<sign>[+-])(?P<im>\d+(?:/\d+)?)\*i$"
)


class GaussianRational:
    """An element re + im*i of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "GaussianRational":
        self = object.__new__(cls)
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def coerce(value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational._raw(Fraction(value), Fraction(0))
        raise TypeError(f"cannot coerce {value!r} to GaussianRational")

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(self.re + other, self.im)
        if isinstance(other, GaussianRational):
            return GaussianRational._raw(self.re + other.re, self.im + other.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(self.re - other, self.im)
        if isinstance(other, GaussianRational):
            return GaussianRational._raw(self.re - other.re, self.im - other.im)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational._raw(self.re * other, self.im * other)
        if isinstance(other, GaussianRational):
            a, b, c, d = self.re, self.im, other.re, other.im
            return GaussianRational._raw(a * c - b * d, a * d + b * c)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GaussianRational.coerce(other)
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "GaussianRational":
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.re, -self.im)

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    __repr__ = __str__

    @staticmethod
    def parse(text: str) -> "GaussianRational":
        """Inverse of ``str``: accepts "a/b", "a", or "a/b+c/d*i"."""
        m = _GAUSS_RE.match(text)
        if m is None:
            return GaussianRational(Fraction(text))
        im = Fraction(m.group("im"))
        if m.group("sign") == "-":
            im = -im
        return GaussianRational(Fraction(m.group("re")), im)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

_I_POWERS = (ONE, I, GaussianRational(-1), GaussianRational(0, -1))


def i_power(k: int) -> GaussianRational:
    """i**k for any integer k."""
    return _I_POWERS[k % 4]


Coeff = Union[int, Fraction, GaussianRational]


class LaurentPoly:
    """A Laurent polynomial stored as {exponent: nonzero coefficient}.

    Coefficients may be ints, Fractions, or GaussianRationals; mixing within
    one polynomial is not prevented but never useful.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Coeff] | Iterable = ()):
        d = dict(coeffs)
        self._coeffs = {e: c for e, c in d.items() if c}

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: Coeff = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    def coeff(self, exponent: int) -> Coeff:
        return self._coeffs.get(exponent, 0)

    __getitem__ = coeff

    def exponents(self):
        return sorted(self._coeffs)

    def terms(self):
        """(exponent, coefficient) pairs, highest exponent first."""
        return [(e, self._coeffs[e]) for e in sorted(self._coeffs, reverse=True)]

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    @property
    def degree(self):
        return max(self._coeffs) if self._coeffs else None

    @property
    def valuation(self):
        return min(self._coeffs) if self._coeffs else None

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._coeffs
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(sorted(self._coeffs.items())))

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        p = object.__new__(LaurentPoly)
        p._coeffs = out
        return p

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        p = object.__new__(LaurentPoly)
        p._coeffs = {e: -c for e, c in self._coeffs.items()}
        return p

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            out: dict = {}
            for e1, c1 in self._coeffs.items():
                for e2, c2 in other._coeffs.items():
                    e = e1 + e2
                    s = out.get(e, 0) + c1 * c2
                    if s:
                        out[e] = s
                    else:
                        out.pop(e, None)
            p = object.__new__(LaurentPoly)
            p._coeffs = out
            return p
        if not other:
            return LaurentPoly()
        p = object.__new__(LaurentPoly)
        p._coeffs = {e: c * other for e, c in self._coeffs.items()}
        return p

    __rmul__ = __mul__

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by v**k."""
        p = object.__new__(LaurentPoly)
        p._coeffs = {e + k: c for e, c in self._coeffs.items()}
        return p

    def substituted(self, k: int) -> "LaurentPoly":
        """Substitute v -> v**k (k nonzero)."""
        p = object.__new__(LaurentPoly)
        p._coeffs = {e * k: c for e, c in self._coeffs.items()}
        return p

    def evaluate(self, x):
        """Evaluate at x (int, Fraction, or GaussianRational)."""
        if not isinstance(x, GaussianRational):
            x = Fraction(x)
        total = None
        for e, c in self._coeffs.items():
            term = c * x**e
            total = term if total is None else total + term
        return total if total is not None else 0

    def evaluate_at_i(self) -> GaussianRational:
        re = Fraction(0)
        im = Fraction(0)
        for e, c in self._coeffs.items():
            k = e % 4
            if k == 0:
                re += c
            elif k == 1:
                im += c
            elif k == 2:
                re -= c
            else:
                im -= c
        return GaussianRational._raw(re, im)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*v" if c != 1 else "v")
            else:
                parts.append(f"{c}*v^{e}" if c != 1 else f"v^{e}")
        return " + ".join(parts)

    __repr__ = __str__


_QINT_AT_I = (0, 1, 0, -1)


def qint(n: int) -> GaussianRational:
    """Balanced quantum integer [n] = (q^n - q^-n)/(q - q^-1) at q = i.

    The value is 4-periodic in n: 0, 1, 0, -1.
    """
    return GaussianRational(_QINT_AT_I[n % 4])


def qint_poly(n: int) -> LaurentPoly:
    """Balanced [n] as a Laurent polynomial: q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n < 0:
        return -qint_poly(-n)
    return LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def gauss_binomial_poly(n: int, r: int) -> LaurentPoly:
    """Balanced Gaussian binomial [n choose r] over Z[q, q^-1].

    Pascal recurrence: [n r] = q^(n-r) [n-1 r-1] + q^-r [n-1 r].
    """
    if n < 0 or r < 0 or r > n:
        raise DomainError(f"gauss_binomial requires 0 <= r <= n, got ({n}, {r})")
    if r == 0 or r == n:
        return LaurentPoly.one()
    return gauss_binomial_poly(n - 1, r - 1).shifted(n - r) + gauss_binomial_poly(
        n - 1, r
    ).shifted(-r)


def gauss_binomial(n: int, r: int) -> GaussianRational:
    """Balanced Gaussian binomial evaluated at q = i."""
    return gauss_binomial_poly(n, r).evaluate_at_i()
