from __future__ import annotations

import pytest

from qsatake.errors import DomainError
from qsatake.linalg import QMatrix, rank
from qsatake.qsl2 import (
    QMod,
    canonical_map,
    char,
    direct_sum,
    dual_weyl,
    frobenius_simple,
    integrity_violations,
    intertwiner_basis,
    simple,
    simple_weight_poly,
    tensor,
    weyl,
)
from qsatake.scalars import (
    LaurentPoly,
    gauss_binomial_poly,
    qint_poly,
)

# ---------------------------------------------------------------------------
# Generic-q oracle: the action formulas and the coproduct convention are
# verified symbolically over Z[q, q^-1] before anything is trusted at q = i.
# The matrices below are built directly from the divided-power formulas,
# independent of the package's specialized constructors.
# ---------------------------------------------------------------------------

ZERO_P = LaurentPoly.zero()
TWO = qint_poly(2)


def pmat(rows):
    return [list(r) for r in rows]


def pzeros(r, c):
    return [[ZERO_P for _ in range(c)] for _ in range(r)]


def pmul(a, b):
    r, k, c = len(a), len(b), len(b[0])
    out = pzeros(r, c)
    for i in range(r):
        for t in range(k):
            x = a[i][t]
            if not x:
                continue
            for j in range(c):
                y = b[t][j]
                if y:
                    out[i][j] = out[i][j] + x * y
    return out


def padd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def psub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def pscale(s, a):
    return [[s * x for x in row] for row in a]


def pzero_matrix(a):
    return all(not x for row in a for x in row)


def pdiag(values):
    n = len(values)
    out = pzeros(n, n)
    for i, v in enumerate(values):
        out[i][i] = v
    return out


def generic_weyl(n):
    """Operator matrices of the generic-q Weyl module in the divided basis."""
    d = n + 1
    e, f, e2, f2 = pzeros(d, d), pzeros(d, d), pzeros(d, d), pzeros(d, d)
    for j in range(d):
        if j >= 1:
            e[j - 1][j] = gauss_binomial_poly(n - j + 1, 1)
        if j >= 2:
            e2[j - 2][j] = gauss_binomial_poly(n - j + 2, 2)
        if j + 1 < d:
            f[j + 1][j] = gauss_binomial_poly(j + 1, 1)
        if j + 2 < d:
            f2[j + 2][j] = gauss_binomial_poly(j + 2, 2)
    weights = [n - 2 * j for j in range(d)]
    return weights, e, f, e2, f2


def generic_tensor(n, m):
    """Coproduct-built operators on weyl(n) (x) weyl(m) at generic q."""
    wn, en, fn, e2n, f2n = generic_weyl(n)
    wm, em, fm, e2m, f2m = generic_weyl(m)
    dn, dm = len(wn), len(wm)
    q = LaurentPoly.monomial(1)

    def kron(a, b):
        out = pzeros(dn * dm, dn * dm)
        for i in range(dn):
            for k in range(dn):
                if not a[i][k]:
                    continue
                for j in range(dm):
                    for l in range(dm):
                        if b[j][l]:
                            out[i * dm + j][k * dm + l] = a[i][k] * b[j][l]
        return out

    iden_n = pdiag([LaurentPoly.one()] * dn)
    iden_m = pdiag([LaurentPoly.one()] * dm)
    k_n = pdiag([LaurentPoly.monomial(w) for w in wn])
    k2_n = pdiag([LaurentPoly.monomial(2 * w) for w in wn])
    kinv_m = pdiag([LaurentPoly.monomial(-w) for w in wm])
    kinv2_m = pdiag([LaurentPoly.monomial(-2 * w) for w in wm])

    weights = [a + b for a in wn for b in wm]
    e = padd(kron(en, iden_m), kron(k_n, em))
    f = padd(kron(fn, kinv_m), kron(iden_n, fm))
    e2 = padd(
        padd(kron(e2n, iden_m), pscale(q, kron(pmul(en, k_n), em))),
        kron(k2_n, e2m),
    )
    f2 = padd(
        padd(kron(f2n, kinv2_m), pscale(q, kron(fn, pmul(fm, kinv_m)))),
        kron(iden_n, f2m),
    )
    return weights, e, f, e2, f2


def assert_generic_module(weights, e, f, e2, f2):
    """The five operator identities at generic q (E^2 = [2] E2 replaces E^2 = 0)."""
    assert pzero_matrix(psub(pmul(e, e), pscale(TWO, e2)))
    assert pzero_matrix(psub(pmul(f, f), pscale(TWO, f2)))
    h = pdiag([qint_poly(w) for w in weights])
    assert pzero_matrix(psub(psub(pmul(e, f), pmul(f, e)), h))
    assert pzero_matrix(psub(pmul(e, e2), pmul(e2, e)))
    assert pzero_matrix(psub(pmul(f, f2), pmul(f2, f)))
    hm1 = pdiag([qint_poly(w - 1) for w in weights])
    lhs = psub(pmul(e, f2), pmul(f2, e))
    assert pzero_matrix(psub(lhs, pmul(f, hm1)))


class TestGenericQOracle:
    def test_weyl_formulas_satisfy_relations(self):
        for n in range(7):
            assert_generic_module(*generic_weyl(n))

    def test_coproduct_squares_to_divided_powers(self):
        for n, m in [(1, 1), (1, 2), (2, 2), (3, 1), (2, 3)]:
            assert_generic_module(*generic_tensor(n, m))

    def test_divided_power_commutation_identity(self):
        # [j+2, 2][n-j-1] == [n-j+1][j+1, 2] + [j+1][n-2j-1] in Z[q, q^-1],
        # with [n, r] read as zero for r > n.
        def gb(n, r):
            return gauss_binomial_poly(n, r) if r <= n else ZERO_P

        for n in range(12):
            for j in range(n + 1):
                lhs = gb(j + 2, 2) * qint_poly(n - j - 1)
                rhs = gb(j + 1, 2) * qint_poly(n - j + 1) + qint_poly(
                    j + 1
                ) * qint_poly(n - 2 * j - 1)
                assert lhs == rhs


# ---------------------------------------------------------------------------
# Specialized modules at q = i.
# ---------------------------------------------------------------------------


def assert_module(m: QMod):
    assert integrity_violations(m) == []


class TestWeyl:
    def test_trivial(self):
        w = weyl(0)
        assert w.dim == 1 and w.weights == (0,)
        for _, op in w.operators():
            assert op.is_zero()

    def test_two_dimensional(self):
        w = weyl(1)
        assert w.e[0, 1] == 1
        assert w.f[1, 0] == 1
        assert w.e2.is_zero() and w.f2.is_zero()

    def test_three_dimensional_degeneracy(self):
        w = weyl(2)
        assert w.e[0, 1] == 0  # [2] = 0
        assert w.e[1, 2] == 1
        assert w.e2[0, 2] == 1

    def test_characters(self):
        for n in range(13):
            assert char(weyl(n)).poly == LaurentPoly(
                {n - 2 * j: 1 for j in range(n + 1)}
            )

    def test_integrity(self):
        for n in range(9):
            assert_module(weyl(n))
            assert_module(dual_weyl(n))

    def test_domain_error(self):
        with pytest.raises(DomainError):
            weyl(-1)


class TestDualWeyl:
    def test_small_duals_equal_weyl(self):
        assert dual_weyl(0) == weyl(0)
        assert dual_weyl(1) == weyl(1)

    def test_transpose_structure(self):
        n = 4
        w, d = weyl(n), dual_weyl(n)
        assert d.e == w.f.transpose()
        assert d.f == w.e.transpose()
        assert d.e2 == w.f2.transpose()
        assert d.f2 == w.e2.transpose()
        assert d.weights == w.weights

    def test_lowest_weight_vector_killed_by_e(self):
        # In dual_weyl(2) the [2] = 0 degeneracy moves to the bottom: the
        # lowest weight vector generates only the two-dimensional simple.
        d = dual_weyl(2)
        assert d.e.col(2).is_zero()
        assert d.e2[0, 2] == 1


class TestCanonicalMap:
    def test_trivial(self):
        assert canonical_map(0) == QMatrix.identity(1)

    def test_odd_invertible(self):
        for m in range(7):
            x = canonical_map(2 * m + 1)
            assert rank(x) == 2 * m + 2

    def test_even_frozen_example(self):
        x = canonical_map(2)
        assert x == QMatrix.diagonal([1, 0, 1])
        assert rank(x) == 2

    def test_normalization(self):
        for n in range(8):
            assert canonical_map(n)[0, 0] == 1

    def test_is_intertwiner(self):
        for n in range(7):
            x = canonical_map(n)
            w, d = weyl(n), dual_weyl(n)
            for (_, op_w), (_, op_d) in zip(w.operators(), d.operators()):
                assert x @ op_w == op_d @ x


class TestSimple:
    def test_trivial(self):
        assert simple(0).dim == 1

    def test_odd_equals_weyl(self):
        assert simple(3) == weyl(3)
        assert simple(3).dim == 4

    def test_even_structure(self):
        s = simple(2)
        assert s.weights == (2, -2)
        assert s.e.is_zero() and s.f.is_zero()
        assert s.e2 == QMatrix.from_rows([[0, 1], [0, 0]])
        assert s.f2 == QMatrix.from_rows([[0, 0], [1, 0]])

    def test_even_dimensions_and_weights(self):
        for m in range(7):
            s = simple(2 * m)
            assert s.dim == m + 1
            assert s.weights == tuple(2 * m - 4 * j for j in range(m + 1))

    def test_integrity(self):
        for n in range(9):
            assert_module(simple(n))

    def test_weight_poly_closed_form(self):
        for n in range(11):
            assert char(simple(n)).poly == simple_weight_poly(n)


class TestFrobeniusSimple:
    def test_trivial(self):
        assert frobenius_simple(0).dim == 1

    def test_equals_simple_two(self):
        assert frobenius_simple(1) == simple(2)

    def test_isomorphic_to_even_simples(self):
        for m in range(7):
            basis = intertwiner_basis(frobenius_simple(m), simple(2 * m))
            assert len(basis) == 1
            assert rank(basis[0]) == m + 1

    def test_integrity(self):
        for m in range(7):
            assert_module(frobenius_simple(m))

    def test_domain_error(self):
        with pytest.raises(DomainError):
            frobenius_simple(-2)


class TestTensor:
    def test_unit(self):
        for m in (weyl(2), simple(4), frobenius_simple(2)):
            assert tensor(weyl(0), m) == m

    def test_weights_add(self):
        t = tensor(simple(1), simple(1))
        assert t.dim == 4
        assert t.weights == (2, 0, 0, -2)

    def test_char_multiplicative(self):
        for a, b in [(weyl(2), weyl(3)), (simple(2), simple(1)), (weyl(1), simple(4))]:
            assert char(tensor(a, b)) == char(a) * char(b)

    def test_steinberg_character(self):
        for m in range(7):
            t = tensor(simple(1), frobenius_simple(m))
            assert char(t) == char(weyl(2 * m + 1))

    def test_integrity_of_tensors(self):
        mods = [simple(1), simple(2), weyl(2), frobenius_simple(2)]
        for a in mods:
            for b in mods:
                assert_module(tensor(a, b))


class TestDirectSum:
    def test_integrity_and_char(self):
        s = direct_sum(weyl(2), simple(1))
        assert_module(s)
        assert s.dim == 5
        assert char(s).poly == char(weyl(2)).poly + char(simple(1)).poly


class TestJsonDump:
    def test_shape_and_entry_format(self):
        d = weyl(1).to_json_dict()
        assert d["weights"] == [1, -1]
        assert d["E"][0][1] == "1"
        t = tensor(simple(1), simple(1)).to_json_dict()
        flat = [x for row in t["E"] for x in row]
        assert "0+1*i" in flat  # K(x)E contributes a coefficient i
