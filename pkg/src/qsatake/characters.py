"""Signed character calculus for Z-graded Z/2-representations.

A signed character is a pair of Laurent polynomials with nonnegative integer
coefficients: ``plus`` counts copies of the trivial one-dimensional
representation k+ in each weight, ``minus`` counts copies of the sign
representation k-.  The convolution product is the graded tensor product of
Z/2-representations.  Closed-form characters of simples and standards, the
Jordan-Holder decomposition in the simple basis, and the derivation of the
standard character from an orbit-intersection cell table live here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .errors import DomainError, NotACharacterError
from .scalars import LaurentPoly

PLUS = "+"
MINUS = "-"
SIGNS = (PLUS, MINUS)
_OPPOSITE = {PLUS: MINUS, MINUS: PLUS}

_SUP = {PLUS: "⁺", MINUS: "⁻"}


def opposite(sign: str) -> str:
    return _OPPOSITE[sign]


def _check_sign(sign: str) -> str:
    if sign not in _OPPOSITE:
        raise DomainError(f"sign must be '+' or '-', got {sign!r}")
    return sign


def _check_nonneg(poly: LaurentPoly, part: str) -> LaurentPoly:
    for e, c in poly.terms():
        if not isinstance(c, int) or c < 0:
            raise NotACharacterError(
                f"{part} part has coefficient {c} at weight {e}; "
                "characters need nonnegative integers"
            )
    return poly


class SignedCharacter:
    """A finite-dimensional Z-graded Z/2-representation, up to isomorphism."""

    __slots__ = ("plus", "minus")

    def __init__(self, plus=(), minus=()):
        p = plus if isinstance(plus, LaurentPoly) else LaurentPoly(plus)
        m = minus if isinstance(minus, LaurentPoly) else LaurentPoly(minus)
        object.__setattr__(self, "plus", _check_nonneg(p, "plus"))
        object.__setattr__(self, "minus", _check_nonneg(m, "minus"))

    def __setattr__(self, name, value):
        raise AttributeError("SignedCharacter is immutable")

    @classmethod
    def term(cls, weight: int, sign: str, mult: int = 1) -> "SignedCharacter":
        """mult copies of k^sign in the given weight."""
        _check_sign(sign)
        if sign == PLUS:
            return cls({weight: mult}, ())
        return cls((), {weight: mult})

    @classmethod
    def unit(cls) -> "SignedCharacter":
        return cls({0: 1}, ())

    @classmethod
    def zero(cls) -> "SignedCharacter":
        return cls((), ())

    def part(self, sign: str) -> LaurentPoly:
        return self.plus if _check_sign(sign) == PLUS else self.minus

    @property
    def total_dim(self) -> int:
        return sum(c for _, c in self.plus.terms()) + sum(
            c for _, c in self.minus.terms()
        )

    def __bool__(self) -> bool:
        return bool(self.plus) or bool(self.minus)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedCharacter):
            return NotImplemented
        return self.plus == other.plus and self.minus == other.minus

    def __hash__(self):
        return hash((self.plus, self.minus))

    def __add__(self, other: "SignedCharacter") -> "SignedCharacter":
        if not isinstance(other, SignedCharacter):
            return NotImplemented
        return SignedCharacter(self.plus + other.plus, self.minus + other.minus)

    def __mul__(self, other: "SignedCharacter") -> "SignedCharacter":
        return conv(self, other)

    def __str__(self) -> str:
        weights = sorted(
            set(self.plus.exponents()) | set(self.minus.exponents()), reverse=True
        )
        parts = []
        for w in weights:
            for sign, poly in ((PLUS, self.plus), (MINUS, self.minus)):
                c = poly.coeff(w)
                if c == 1:
                    parts.append(f"k{_SUP[sign]}({w})")
                elif c:
                    parts.append(f"{c}·k{_SUP[sign]}({w})")
        return " ⊕ ".join(parts) if parts else "0"

    __repr__ = __str__

    def to_json_dict(self) -> dict:
        """{"plus": {weight: mult}, "minus": {...}}, weights descending."""
        return {
            "plus": {str(e): c for e, c in self.plus.terms()},
            "minus": {str(e): c for e, c in self.minus.terms()},
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "SignedCharacter":
        return cls(
            {int(k): v for k, v in data.get("plus", {}).items()},
            {int(k): v for k, v in data.get("minus", {}).items()},
        )


class WeightCharacter:
    """An ungraded weight-multiplicity character (classical or quantum side)."""

    __slots__ = ("poly",)

    def __init__(self, poly=()):
        p = poly if isinstance(poly, LaurentPoly) else LaurentPoly(poly)
        object.__setattr__(self, "poly", _check_nonneg(p, "weight"))

    def __setattr__(self, name, value):
        raise AttributeError("WeightCharacter is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightCharacter):
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __mul__(self, other: "WeightCharacter") -> "WeightCharacter":
        return WeightCharacter(self.poly * other.poly)

    def __str__(self) -> str:
        return str(self.poly)

    __repr__ = __str__


def classical_char(n: int) -> WeightCharacter:
    """Weight character of the (n+1)-dimensional irreducible sl2-module."""
    if n < 0:
        raise DomainError(f"classical_char requires n >= 0, got {n}")
    return WeightCharacter({n - 2 * j: 1 for j in range(n + 1)})


def conv(a: SignedCharacter, b: SignedCharacter) -> SignedCharacter:
    """Graded tensor product: k- tensor k- is k+, weights add."""
    return SignedCharacter(
        a.plus * b.plus + a.minus * b.minus,
        a.plus * b.minus + a.minus * b.plus,
    )


def sign_twist(c: SignedCharacter) -> SignedCharacter:
    """Tensor with the sign representation: swaps the two parts."""
    return SignedCharacter(c.minus, c.plus)


def simple_char(n: int, sign: str) -> SignedCharacter:
    """Character of the simple object with leading weight n.

    Even n = 2m: k^sign in weights 2m, 2m-4, ..., -2m.  Odd n: one copy in
    every weight n, n-2, ..., -n with the sign alternating from the top.
    """
    _check_sign(sign)
    if n < 0:
        raise DomainError(f"simple_char requires n >= 0, got {n}")
    plus: dict = {}
    minus: dict = {}
    if n % 2 == 0:
        target = plus if sign == PLUS else minus
        for w in range(n, -n - 1, -4):
            target[w] = 1
    else:
        for k, w in enumerate(range(n, -n - 1, -2)):
            s = sign if k % 2 == 0 else _OPPOSITE[sign]
            (plus if s == PLUS else minus)[w] = 1
    return SignedCharacter(plus, minus)


def standard_char(n: int, sign: str) -> SignedCharacter:
    """Shared character of the standard and costandard objects at weight n.

    For sign '+': k+ in weight n, k+ and k- in each interior weight
    n-2, ..., -n+2, and k- tensored with itself n times (k- for odd n, k+ for
    even) in weight -n.  Sign '-' is the sign twist.
    """
    _check_sign(sign)
    if n < 0:
        raise DomainError(f"standard_char requires n >= 0, got {n}")
    plus: dict = {n: 1}
    minus: dict = {}
    for w in range(n - 2, -n, -2):
        plus[w] = 1
        minus[w] = 1
    if n >= 1:
        if n % 2 == 1:
            minus[-n] = minus.get(-n, 0) + 1
        else:
            plus[-n] = plus.get(-n, 0) + 1
    result = SignedCharacter(plus, minus)
    return result if sign == PLUS else sign_twist(result)


def jh_decompose(c: SignedCharacter) -> Counter:
    """Multiplicities of simple characters in c, as a Counter of (n, sign).

    Greedy leading-weight elimination; at equal weight the plus part is
    processed before the minus part.  The decomposition is unique because the
    simple characters are triangular with respect to leading weight.
    """
    work = {PLUS: dict(c.plus.terms()), MINUS: dict(c.minus.terms())}
    out: Counter = Counter()
    while work[PLUS] or work[MINUS]:
        w = max(list(work[PLUS]) + list(work[MINUS]))
        if w < 0:
            raise NotACharacterError(
                f"remainder has leading weight {w} < 0; not a sum of simple characters"
            )
        for sign in SIGNS:
            mult = work[sign].get(w, 0)
            if mult < 0:
                raise NotACharacterError(
                    f"negative multiplicity {mult} at weight {w} ({sign} part)"
                )
            if mult == 0:
                continue
            piece = simple_char(w, sign)
            for s in SIGNS:
                bucket = work[s]
                for e, coeff in piece.part(s).terms():
                    v = bucket.get(e, 0) - mult * coeff
                    if v:
                        bucket[e] = v
                    else:
                        bucket.pop(e, None)
            out[(w, sign)] += mult
    return out


def simple_char_sum(multiset: Counter | dict) -> SignedCharacter:
    """Sum of simple characters of a (n, sign) multiset; inverse of jh_decompose."""
    total = SignedCharacter.zero()
    for (n, sign), mult in sorted(multiset.items()):
        piece = simple_char(n, sign)
        for _ in range(mult):
            total = total + piece
    return total


def psi_double(wc: WeightCharacter) -> SignedCharacter:
    """Weight-doubling transfer of a classical character, landing in the plus part."""
    return SignedCharacter({2 * e: c for e, c in wc.poly.terms()}, ())


AFFINE_SPACE = "affine-space"
COMPLEMENT_PAIR = "complement-pair"
POINT = "point"
EMPTY = "empty"


@dataclass(frozen=True)
class CellDescriptor:
    """One entry of the semi-infinite/spherical orbit intersection table.

    ``sign_action`` records whether the order-two component group acts by
    multiplication by -1 on the cell coordinates (true exactly when there are
    coordinates to act on, i.e. dimension >= 1).
    """

    kind: str
    dimension: int
    sign_action: bool

    def __post_init__(self):
        if self.kind not in (AFFINE_SPACE, COMPLEMENT_PAIR, POINT, EMPTY):
            raise DomainError(f"unknown cell kind {self.kind!r}")
        if self.kind == COMPLEMENT_PAIR and self.dimension < 1:
            raise DomainError("complement-pair cells have dimension >= 1")
        if self.kind in (POINT, EMPTY) and self.dimension != 0:
            raise DomainError(f"{self.kind} cells have dimension 0")


_EMPTY_CELL = CellDescriptor(EMPTY, 0, False)


def intersection_cells(m: int, n: int, side: str) -> CellDescriptor:
    """Intersection of the m-th semi-infinite orbit with the n-th spherical orbit.

    Side "S" (attracting): R^n at m = n, a complement pair R^d - R^(d-1) at
    n + m = 2d for 0 < d < n, a point at m = -n, empty otherwise.  Side "T"
    (repelling) mirrors it: point at m = n, pair at n = m + 2d, R^n at m = -n.
    """
    if n < 0:
        raise DomainError(f"intersection_cells requires n >= 0, got {n}")
    if side not in ("S", "T"):
        raise DomainError(f"side must be 'S' or 'T', got {side!r}")
    if (m + n) % 2 != 0 or m < -n or m > n:
        return _EMPTY_CELL
    if n == 0:
        return CellDescriptor(POINT, 0, False)
    point_at = -n if side == "S" else n
    if m == point_at:
        return CellDescriptor(POINT, 0, False)
    if m == -point_at:
        return CellDescriptor(AFFINE_SPACE, n, True)
    d = (n + m) // 2 if side == "S" else (n - m) // 2
    return CellDescriptor(COMPLEMENT_PAIR, d, True)


def standard_char_from_cells(n: int) -> SignedCharacter:
    """Assemble the standard character from side-S cell contributions.

    An affine space contributes k+ in its weight (one compactly-supported
    class, trivial action after the degree shift); a complement pair
    contributes the regular representation k+ plus k- (the action swaps its
    two components); the point at weight -n contributes k- tensored with
    itself n times.  The result must equal ``standard_char(n, '+')``.
    """
    if n < 0:
        raise DomainError(f"standard_char_from_cells requires n >= 0, got {n}")
    plus: dict = {}
    minus: dict = {}
    for m in range(-n, n + 1, 2):
        cell = intersection_cells(m, n, "S")
        if cell.kind == AFFINE_SPACE:
            plus[m] = plus.get(m, 0) + 1
        elif cell.kind == COMPLEMENT_PAIR:
            plus[m] = plus.get(m, 0) + 1
            minus[m] = minus.get(m, 0) + 1
        elif cell.kind == POINT:
            if n % 2 == 1:
                minus[m] = minus.get(m, 0) + 1
            else:
                plus[m] = plus.get(m, 0) + 1
    return SignedCharacter(plus, minus)
