"""Module-theoretic analysis: Hom spaces, projectives, Jordan-Holder data,
submodule closures, socles, and the small-endomorphism indecomposability test.

Hom bases are cached per (source, target) object pair; all inputs are
immutable, the cache is append-only, and population is guarded by a lock so
concurrent callers are safe.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass

from . import qsl2
from .errors import (
    DomainError,
    NoSolutionError,
    NotACharacterError,
    UnsupportedCaseError,
)
from .linalg import QMatrix, solve_matrix
from .qsl2 import QMod
from .scalars import Fraction, GaussianRational, ZERO


@dataclass(frozen=True)
class HomBasis:
    """Canonical basis of the intertwiner space source -> target."""

    source: QMod
    target: QMod
    basis: tuple[QMatrix, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


_HOM_CACHE: dict = {}
_HOM_LOCK = threading.Lock()


def hom(m: QMod, n: QMod) -> HomBasis:
    """Solve for all weight-preserving maps commuting with E, F, E2, F2."""
    key = (id(m), id(n))
    cached = _HOM_CACHE.get(key)
    if cached is not None and cached.source is m and cached.target is n:
        return cached
    hb = HomBasis(m, n, tuple(qsl2.intertwiner_basis(m, n)))
    with _HOM_LOCK:
        _HOM_CACHE[key] = hb
    return hb


def projective(two_n: int) -> QMod:
    """Indecomposable projective of the even block: simple(2n+1) tensor simple(1)."""
    if two_n < 0 or two_n % 2 != 0:
        raise DomainError(f"projective requires an even label >= 0, got {two_n}")
    return _projective_cached(two_n)


_PROJ_CACHE: dict[int, QMod] = {}
_PROJ_LOCK = threading.Lock()


def _projective_cached(two_n: int) -> QMod:
    p = _PROJ_CACHE.get(two_n)
    if p is None:
        p = qsl2.tensor(qsl2.simple(two_n + 1), qsl2.simple(1))
        with _PROJ_LOCK:
            p = _PROJ_CACHE.setdefault(two_n, p)
    return p


def jh(m: QMod) -> Counter:
    """Jordan-Holder multiset of highest-weight labels, from the character.

    Simple characters are triangular in leading weight, so greedy elimination
    determines the multiplicities without building composition series.
    """
    work = {e: c for e, c in qsl2.char(m).poly.terms()}
    out: Counter = Counter()
    while work:
        w = max(work)
        mult = work[w]
        if w < 0 or mult < 0:
            raise NotACharacterError(
                f"weight multiset is not a sum of simple characters (weight {w})"
            )
        for e, c in qsl2.simple_weight_poly(w).terms():
            v = work.get(e, 0) - mult * c
            if v:
                work[e] = v
            else:
                work.pop(e, None)
        out[w] += mult
    return out


def _split_by_weight(m: QMod, vec: QMatrix) -> list[tuple[int, dict]]:
    parts: dict[int, dict] = {}
    for i, _, v in vec.nonzero_entries():
        parts.setdefault(m.weights[i], {})[i] = v
    return sorted(parts.items())


def submodule_closure(m: QMod, vectors: list[QMatrix]) -> QMod:
    """Smallest operator-stable graded subspace containing the vectors.

    Seeds are split into weight components, then the four operators are
    iterated to a fixed point.  Per-weight bases are kept in reduced column
    echelon form, so the result is deterministic.
    """
    bases: dict[int, dict[int, dict]] = {}

    def insert(weight: int, col: dict) -> dict | None:
        rows = bases.setdefault(weight, {})
        col = dict(col)
        while col:
            lead = min(col)
            piv = rows.get(lead)
            if piv is None:
                inv = col[lead].inverse()
                col = {i: inv * v for i, v in col.items()}
                rows[lead] = col
                return col
            f = col.pop(lead)
            for i, v in piv.items():
                if i == lead:
                    continue
                cur = col.get(i)
                nv = cur - f * v if cur is not None else -(f * v)
                if nv:
                    col[i] = nv
                else:
                    col.pop(i, None)
        return None

    queue: list[tuple[int, dict]] = []
    for vec in vectors:
        for weight, col in _split_by_weight(m, vec):
            added = insert(weight, col)
            if added is not None:
                queue.append((weight, added))
    ops = [(shift, op) for (name, op), shift in zip(m.operators(), (2, -2, 4, -4))]
    while queue:
        weight, col = queue.pop()
        for shift, op in ops:
            out: dict[int, GaussianRational] = {}
            for j, v in col.items():
                for i in range(op.rows):
                    a = op[i, j]
                    if a:
                        s = out.get(i, ZERO) + a * v
                        if s:
                            out[i] = s
                        else:
                            out.pop(i, None)
            if out:
                added = insert(weight + shift, out)
                if added is not None:
                    queue.append((weight + shift, added))
    columns = []
    for weight in bases:
        for lead in bases[weight]:
            columns.append((lead, weight))
    columns.sort()
    cols = []
    for lead, weight in columns:
        data = bases[weight][lead]
        vec = [ZERO] * m.dim
        for i, v in data.items():
            vec[i] = v
        cols.append(QMatrix.column(vec))
    return qsl2.restrict_to_span(m, cols)


def socle_dims(m: QMod, upto: int) -> dict[int, int]:
    """dim Hom(simple(n), m) for 0 <= n <= upto: the socle isotypic dimensions."""
    return {n: hom(qsl2.simple(n), m).dim for n in range(upto + 1)}


@dataclass(frozen=True)
class EndAlgebra:
    """Endomorphism algebra with basis and structure constants over Q(i)."""

    module: QMod
    basis: tuple[QMatrix, ...]
    mult_table: tuple  # mult_table[i][j] = coords of basis[i] @ basis[j]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _flatten(mats: list[QMatrix]) -> QMatrix:
    return QMatrix.hstack(
        [QMatrix.column(list(m.entries)) for m in mats]
    )


def coords_in_basis(basis: list[QMatrix], target: QMatrix) -> tuple:
    """Coordinates of target in the span of basis (exact; raises if outside)."""
    if not basis:
        if not target.is_zero():
            raise NoSolutionError("nonzero element of a zero-dimensional space")
        return ()
    a = _flatten(list(basis))
    b = QMatrix.column(list(target.entries))
    x = solve_matrix(a, b)
    return tuple(x[i, 0] for i in range(x.rows))


def end_algebra(m: QMod) -> EndAlgebra:
    basis = hom(m, m).basis
    table = tuple(
        tuple(coords_in_basis(list(basis), bi @ bj) for bj in basis) for bi in basis
    )
    return EndAlgebra(m, basis, table)


def is_indecomposable_local(m: QMod) -> bool:
    """Local-endomorphism test for the small End algebras arising here.

    dim End = 1 is scalars; dim End = 2 is local iff the non-scalar basis
    element B, with B@B = alpha*B + beta*I, satisfies (B - alpha/2)^2 = 0.
    Dimensions 3 and 4 only arise from decomposables in this corpus; anything
    larger is outside the supported regime.
    """
    basis = hom(m, m).basis
    d = len(basis)
    if d > 4:
        raise UnsupportedCaseError(
            f"End algebra has dimension {d} > 4; desk-scale assumption violated"
        )
    if d == 1:
        return True
    if d != 2:
        return False
    ident = QMatrix.identity(m.dim)
    b = next((c for c in basis if c != ident.scale(c[0, 0])), None)
    if b is None:
        return False
    a = _flatten([b, ident])
    x = solve_matrix(a, QMatrix.column(list((b @ b).entries)))
    alpha = x[0, 0]
    nil = b - ident.scale(alpha * Fraction(1, 2))
    return (nil @ nil).is_zero()


def radical_element(m: QMod) -> QMatrix:
    """The nilpotent part of a two-dimensional local End algebra, scaled so its
    first nonzero entry is 1."""
    basis = hom(m, m).basis
    if len(basis) != 2:
        raise UnsupportedCaseError(
            f"radical_element expects dim End = 2, got {len(basis)}"
        )
    ident = QMatrix.identity(m.dim)
    b = next(c for c in basis if c != ident.scale(c[0, 0]))
    a = _flatten([b, ident])
    x = solve_matrix(a, QMatrix.column(list((b @ b).entries)))
    alpha = x[0, 0]
    nil = b - ident.scale(alpha * Fraction(1, 2))
    if not (nil @ nil).is_zero() or nil.is_zero():
        raise UnsupportedCaseError("End algebra is not local of dimension 2")
    lead = next(v for v in nil.entries if v)
    return nil.scale(lead.inverse())
