"""Truncated comparison between the Hom algebra of the quantum projectives
P(0), P(2), ..., P(2N) and the presented zigzag algebra on vertices 0..N.

``hom_quiver`` computes every pairwise Hom basis and all composition
structure constants exactly.  ``gauge_fix`` rescales generators so the
two-step composites through neighbouring vertices agree, and
``compare_zigzag`` then recomputes every product of gauge-fixed generators
and demands exact equality with the zigzag multiplication table.  Everything
is exact arithmetic over Q(i); a failed relation is report content, while a
wrong Hom dimension pattern is a hard verification error.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import modtools, qsl2, zigzag
from .characters import (
    classical_char,
    conv,
    jh_decompose,
    psi_double,
    simple_char,
)
from .errors import (
    DomainError,
    InternalInconsistencyError,
    NoSolutionError,
    VerificationError,
)
from .linalg import QMatrix
from .modtools import HomBasis, coords_in_basis
from .zigzag import Label, label_str


@dataclass(frozen=True)
class HomQuiver:
    """All Hom bases and compositions among P(0) ... P(2N)."""

    n: int
    modules: tuple  # P(0), P(2), ..., P(2N)
    homs: tuple  # homs[a][b] = HomBasis P(2a) -> P(2b)
    composition: dict  # (a, b, c) -> coords[i][j] of basis_bc[i] o basis_ab[j]

    def hom(self, a: int, b: int) -> HomBasis:
        return self.homs[a][b]

    def dim_matrix(self) -> list[list[int]]:
        return [
            [self.homs[a][b].dim for b in range(self.n + 1)] for a in range(self.n + 1)
        ]


def _expected_dim(a: int, b: int) -> int:
    if a == b:
        return 2
    if abs(a - b) == 1:
        return 1
    return 0


def hom_quiver(n: int, workers: int = 1) -> HomQuiver:
    """Solve all (N+1)^2 intertwiner systems and assemble compositions.

    The pairwise solves are independent and may run on several threads; the
    assembly order is fixed, so the result does not depend on ``workers``.
    """
    if n < 0:
        raise DomainError(f"hom_quiver requires N >= 0, got {n}")
    modules = tuple(modtools.projective(2 * a) for a in range(n + 1))
    pairs = [(a, b) for a in range(n + 1) for b in range(n + 1)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(lambda ab: modtools.hom(modules[ab[0]], modules[ab[1]]), pairs)
            )
    else:
        results = [modtools.hom(modules[a], modules[b]) for a, b in pairs]
    homs = tuple(
        tuple(results[a * (n + 1) + b] for b in range(n + 1)) for a in range(n + 1)
    )
    for a in range(n + 1):
        for b in range(n + 1):
            got = homs[a][b].dim
            want = _expected_dim(a, b)
            if got != want:
                raise VerificationError(
                    f"dim Hom(P({2 * a}), P({2 * b})) = {got}, expected {want}"
                )
    composition: dict = {}
    for a in range(n + 1):
        for b in range(n + 1):
            first = homs[a][b]
            if not first.dim:
                continue
            for c in range(n + 1):
                second = homs[b][c]
                if not second.dim:
                    continue
                tgt = list(homs[a][c].basis)
                table = tuple(
                    tuple(coords_in_basis(tgt, g @ f) for f in first.basis)
                    for g in second.basis
                )
                composition[(a, b, c)] = table
    return HomQuiver(n, modules, homs, composition)


def _proportionality(s: QMatrix, t: QMatrix):
    """The scalar lam with s = lam * t, or None if s, t are not proportional."""
    lead = next((v for v in t.entries if v), None)
    if lead is None:
        return None
    idx = next(k for k, v in enumerate(t.entries) if v)
    lam = s.entries[idx] * lead.inverse()
    return lam if t.scale(lam) == s else None


def gauge_fix(hq: HomQuiver) -> dict[Label, QMatrix]:
    """Choose based generators matching the zigzag presentation.

    e_a is the identity of End P(2a) and x_a the solver's basis vector of
    Hom(P(2a), P(2a+2)).  y_1 keeps its solver normalization and defines
    z_0 = y_1 x_0; each later y_{a+1} is rescaled so that y_{a+1} x_a equals
    x_{a-1} y_a, which then defines z_a.  At the top vertex z_N = x_{N-1} y_N;
    at N = 0 the loop z_0 is taken intrinsically from End P(0).
    """
    n = hq.n
    gauge: dict[Label, QMatrix] = {}
    for a in range(n + 1):
        gauge[("e", a)] = QMatrix.identity(hq.modules[a].dim)
    if n == 0:
        gauge[("z", 0)] = modtools.radical_element(hq.modules[0])
        return gauge
    for a in range(n):
        gauge[("x", a)] = hq.hom(a, a + 1).basis[0]
    gauge[("y", 1)] = hq.hom(1, 0).basis[0]
    z0 = gauge[("y", 1)] @ gauge[("x", 0)]
    if z0.is_zero():
        raise VerificationError("composite y1*x0 vanishes; no loop at vertex 0")
    gauge[("z", 0)] = z0
    for a in range(1, n):
        fixed = gauge[("x", a - 1)] @ gauge[("y", a)]
        raw = hq.hom(a + 1, a).basis[0]
        unscaled = raw @ gauge[("x", a)]
        if fixed.is_zero() or unscaled.is_zero():
            raise VerificationError(
                f"a loop composite at vertex {a} vanishes; cannot gauge y{a + 1}"
            )
        lam = _proportionality(fixed, unscaled)
        if lam is None or not lam:
            raise VerificationError(
                f"x{a - 1}*y{a} and y{a + 1}*x{a} are not proportional at vertex {a}"
            )
        gauge[("y", a + 1)] = raw.scale(lam)
        gauge[("z", a)] = fixed
    zn = gauge[("x", n - 1)] @ gauge[("y", n)]
    if zn.is_zero():
        raise VerificationError(f"composite x{n - 1}*y{n} vanishes at vertex {n}")
    gauge[("z", n)] = zn
    return gauge


def _gauge_basis(gauge: dict[Label, QMatrix], src: int, tgt: int):
    """The gauge-fixed basis (labels and matrices) of Hom(P(2 src), P(2 tgt))."""
    if src == tgt:
        labels = [("e", src), ("z", src)]
    elif tgt == src + 1:
        labels = [("x", src)]
    elif tgt == src - 1:
        labels = [("y", src)]
    else:
        labels = []
    labels = [lab for lab in labels if lab in gauge]
    return labels, [gauge[lab] for lab in labels]


def compare_zigzag(hq: HomQuiver, gauge: dict[Label, QMatrix] | None = None) -> list[dict]:
    """Recompute every product of gauge-fixed generators against the table.

    One report item per ordered basis pair of ZigzagAlgebra(N); ``lhs`` is the
    quantum composite expressed in the gauge basis, ``rhs`` the table value.
    """
    n = hq.n
    algebra = zigzag.make(n)
    if gauge is None:
        gauge = gauge_fix(hq)
    items = []
    for u in algebra.basis:
        for v in algebra.basis:
            expected = algebra.mult[(u, v)]
            rhs = zigzag.element_str(expected)
            relation = f"{label_str(u)}*{label_str(v)}"
            if zigzag.source(u) != zigzag.target(v):
                items.append(
                    {
                        "relation": relation,
                        "lhs": "0",
                        "rhs": rhs,
                        "pass": not expected,
                    }
                )
                continue
            prod = gauge[u] @ gauge[v]
            src = zigzag.source(v)
            tgt = zigzag.target(u)
            labels, mats = _gauge_basis(gauge, src, tgt)
            want = QMatrix.zeros(prod.rows, prod.cols)
            for w, c in expected.items():
                want = want + gauge[w].scale(c)
            ok = prod == want
            if not mats:
                lhs = "0" if prod.is_zero() else "<outside hom space>"
            else:
                try:
                    coords = coords_in_basis(mats, prod)
                    lhs = zigzag.element_str(
                        {lab: c for lab, c in zip(labels, coords) if c}
                    )
                except NoSolutionError:
                    lhs = "<not in gauge span>"
                    ok = False
            items.append(
                {"relation": relation, "lhs": lhs, "rhs": rhs, "pass": bool(ok)}
            )
    return items


def expected_clebsch_gordan(n: int, m: int) -> Counter:
    """Labels 2(n+m), 2(n+m)-4, ..., 2|n-m| with multiplicity one."""
    return Counter(range(2 * (n + m), 2 * abs(n - m) - 1, -4))


def frobenius_action_check(n: int, m: int) -> list[dict]:
    """Match the two module actions combinatorially.

    Character side: decompose the convolution of the weight-doubled classical
    character of V(n) with the odd simple character of 2m+1, then relabel
    2k+1 -> 2k.  Quantum side: Jordan-Holder labels of
    frobenius_simple(n) tensor simple(2m).  Both must equal the two-line
    decomposition 2(n+m), 2(n+m)-4, ..., 2|n-m|.
    """
    if n < 0 or m < 0:
        raise DomainError("frobenius_action_check requires n, m >= 0")
    char_side_signed = jh_decompose(
        conv(psi_double(classical_char(n)), simple_char(2 * m + 1, "+"))
    )
    char_side: Counter = Counter()
    for (label, sign), mult in char_side_signed.items():
        if sign != "+" or label % 2 != 1:
            raise InternalInconsistencyError(
                f"unexpected factor ({label}, {sign}) on the character side"
            )
        char_side[label - 1] += mult
    quantum_side = modtools.jh(
        qsl2.tensor(qsl2.frobenius_simple(n), qsl2.simple(2 * m))
    )
    want = expected_clebsch_gordan(n, m)
    ok = char_side == quantum_side == want

    def fmt(c: Counter) -> str:
        return "{" + ", ".join(f"{k}:{c[k]}" for k in sorted(c, reverse=True)) + "}"

    return [
        {
            "relation": f"frobenius({n},{m}) == {fmt(want)}",
            "lhs": fmt(char_side),
            "rhs": fmt(quantum_side),
            "pass": bool(ok),
        }
    ]
