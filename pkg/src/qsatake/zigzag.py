"""The presented zigzag algebra on vertices 0..N with its full multiplication
table, and an exhaustive self-verifier.

Basis per truncation N: idempotents e_a and loops z_a at every vertex,
arrows x_a: a -> a+1 (a < N) and y_a: a -> a-1 (a >= 1).  Nonzero products
beyond the unit laws are exactly y_{a+1} x_a = z_a and x_{a-1} y_a = z_a; all
two-step paths between vertices two or more apart vanish, as do all products
with a loop on the open side.  z_0 stays a basis element even at truncations
where its factorization is invisible (N = 0), and products not forced nonzero
by the relations are zero.  Coefficients are integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError

Label = tuple[str, int]
Element = dict[Label, int]


def source(label: Label) -> int:
    kind, a = label
    return a


def target(label: Label) -> int:
    kind, a = label
    if kind == "x":
        return a + 1
    if kind == "y":
        return a - 1
    return a


def label_str(label: Label) -> str:
    return f"{label[0]}{label[1]}"


def element_str(elem: Element) -> str:
    if not elem:
        return "0"
    parts = []
    for label in sorted(elem):
        c = elem[label]
        parts.append(label_str(label) if c == 1 else f"{c}*{label_str(label)}")
    return " + ".join(parts)


@dataclass(frozen=True)
class ZigzagAlgebra:
    """Truncation with vertices 0..n; dimension 4n + 2."""

    n: int
    basis: tuple[Label, ...]
    mult: dict  # (u, v) -> {w: coeff} for u, v in basis

    @property
    def dim(self) -> int:
        return len(self.basis)

    def product(self, u: Label, v: Label) -> Element:
        return dict(self.mult[(u, v)])

    def table_json(self) -> dict:
        """Multiplication table keyed "u*v" -> {"w": coeff}, for golden tests."""
        out = {}
        for u in self.basis:
            for v in self.basis:
                prod = self.mult[(u, v)]
                out[f"{label_str(u)}*{label_str(v)}"] = {
                    label_str(w): c for w, c in sorted(prod.items())
                }
        return out


def make(n: int) -> ZigzagAlgebra:
    """Build the basis and the total multiplication table for vertices 0..n."""
    if n < 0:
        raise DomainError(f"zigzag truncation requires N >= 0, got {n}")
    basis: list[Label] = []
    basis.extend(("e", a) for a in range(n + 1))
    basis.extend(("z", a) for a in range(n + 1))
    basis.extend(("x", a) for a in range(n))
    basis.extend(("y", a) for a in range(1, n + 1))
    mult: dict = {}
    for u in basis:
        for v in basis:
            prod: Element = {}
            if source(u) == target(v):
                if u[0] == "e":
                    prod = {v: 1}
                elif v[0] == "e":
                    prod = {u: 1}
                elif u[0] == "y" and v[0] == "x" and u[1] == v[1] + 1:
                    prod = {("z", v[1]): 1}
                elif u[0] == "x" and v[0] == "y" and u[1] == v[1] - 1:
                    prod = {("z", v[1]): 1}
            mult[(u, v)] = prod
    return ZigzagAlgebra(n, tuple(basis), mult)


def multiply(algebra: ZigzagAlgebra, u, v) -> Element:
    """Bilinear extension of the table; accepts labels or {label: coeff} dicts."""
    ue: Element = {u: 1} if isinstance(u, tuple) else dict(u)
    ve: Element = {v: 1} if isinstance(v, tuple) else dict(v)
    out: Element = {}
    for lu, cu in ue.items():
        for lv, cv in ve.items():
            for w, cw in algebra.mult[(lu, lv)].items():
                s = out.get(w, 0) + cu * cv * cw
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
    return out


def _violation(relation: str, lhs: Element, rhs: Element) -> dict:
    return {
        "relation": relation,
        "lhs": element_str(lhs),
        "rhs": element_str(rhs),
        "pass": False,
    }


def verify_algebra(algebra: ZigzagAlgebra) -> dict:
    """Exhaustively check the type invariants; violations are report content.

    Covers: dimension count, orthogonal idempotents summing to the identity,
    the loop relations, vanishing of all paths between distant vertices, and
    associativity over every basis triple.
    """
    n = algebra.n
    violations: list[dict] = []
    checks = 0

    def expect(relation: str, lhs: Element, rhs: Element):
        nonlocal checks
        checks += 1
        if lhs != rhs:
            violations.append(_violation(relation, lhs, rhs))

    checks += 1
    if algebra.dim != 4 * n + 2:
        violations.append(
            {
                "relation": f"dim == {4 * n + 2}",
                "lhs": str(algebra.dim),
                "rhs": str(4 * n + 2),
                "pass": False,
            }
        )

    for a in range(n + 1):
        for b in range(n + 1):
            want: Element = {("e", a): 1} if a == b else {}
            expect(
                f"e{a}*e{b}",
                multiply(algebra, ("e", a), ("e", b)),
                want,
            )
    one: Element = {("e", a): 1 for a in range(n + 1)}
    for u in algebra.basis:
        expect(f"1*{label_str(u)}", multiply(algebra, one, u), {u: 1})
        expect(f"{label_str(u)}*1", multiply(algebra, u, one), {u: 1})

    for a in range(n + 1):
        z: Element = {("z", a): 1}
        if a >= 1:
            expect(
                f"x{a - 1}*y{a} == z{a}",
                multiply(algebra, ("x", a - 1), ("y", a)),
                z,
            )
        if a <= n - 1:
            expect(
                f"y{a + 1}*x{a} == z{a}",
                multiply(algebra, ("y", a + 1), ("x", a)),
                z,
            )
        expect(f"z{a}*z{a}", multiply(algebra, ("z", a), ("z", a)), {})
        if a <= n - 1:
            expect(f"x{a}*z{a}", multiply(algebra, ("x", a), ("z", a)), {})
        if a >= 1:
            expect(f"y{a}*z{a}", multiply(algebra, ("y", a), ("z", a)), {})
    for a in range(n - 1):
        expect(f"x{a + 1}*x{a}", multiply(algebra, ("x", a + 1), ("x", a)), {})
    for a in range(2, n + 1):
        expect(f"y{a - 1}*y{a}", multiply(algebra, ("y", a - 1), ("y", a)), {})

    # Distant vertices: every product landing across a gap >= 2 must vanish.
    for u in algebra.basis:
        for v in algebra.basis:
            if abs(target(u) - source(v)) >= 2:
                expect(
                    f"{label_str(u)}*{label_str(v)} (gap >= 2)",
                    multiply(algebra, u, v),
                    {},
                )

    for u in algebra.basis:
        for v in algebra.basis:
            for w in algebra.basis:
                lhs = multiply(algebra, multiply(algebra, u, v), w)
                rhs = multiply(algebra, u, multiply(algebra, v, w))
                checks += 1
                if lhs != rhs:
                    violations.append(
                        _violation(
                            f"assoc ({label_str(u)}*{label_str(v)})*{label_str(w)}",
                            lhs,
                            rhs,
                        )
                    )

    return {"checks": checks, "violations": violations}
