"""Oracle and property tests for the truncated ring layer.

The lift identities are exercised here on a few dozen seeded cases; the
acceptance suite re-runs them at larger volume.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from multischeme.exactalg import chart, full_chart, lp_const, mono, var_ratio
from multischeme.randgen import (
    rand_coeff_aut,
    rand_laurent,
    rand_series,
    rand_trunc_matrix,
    rand_unit_series,
)
from multischeme.truncated import (
    NotDivisible,
    ca_apply,
    ca_compose,
    ca_identity,
    ca_invert,
    coeff_aut,
    ext_lambda,
    ext_top,
    inv_lambda,
    m_eq,
    m_identity,
    m_inv,
    m_mul,
    m_scale,
    mat_apply_ca,
    mat_identity,
    mat_inv,
    mat_mul,
    mat_promote,
    mat_truncate,
    series,
    t_euler,
    trunc_matrix,
    ts_add,
    ts_const,
    ts_divide_by_t,
    ts_inv,
    ts_mul,
    ts_one,
    ts_shift_up,
    ts_sub,
    ts_truncate,
    ts_zero,
)

U01 = chart(2, {0, 1})
U012 = full_chart(2)


def one_plus_t(ch, n):
    coeffs = [lp_const(ch, 1), lp_const(ch, 1)] + \
        [lp_const(ch, 0)] * (n - 2)
    return series(ch, coeffs, 0, 0)


def test_geometric_inverse_oracle():
    s = one_plus_t(U01, 3)
    inv = ts_inv(s)
    want = series(U01, [lp_const(U01, 1), lp_const(U01, -1), lp_const(U01, 1)])
    assert inv == want
    assert ts_mul(s, inv) == ts_one(U01, 3)


def test_product_truncates():
    s = series(U01, [lp_const(U01, 1), lp_const(U01, 1), lp_const(U01, 1)])
    u = series(U01, [lp_const(U01, 1), lp_const(U01, -1), lp_const(U01, 0)])
    assert ts_mul(s, u) == ts_one(U01, 3)


def test_inverse_random_roundtrip():
    rng = random.Random(101)
    for _ in range(20):
        s = rand_unit_series(rng, U012, rng.randint(2, 4))
        assert ts_mul(s, ts_inv(s)) == ts_one(U012, s.n)
        assert ts_mul(ts_inv(s), s) == ts_one(U012, s.n)


def test_divide_by_t():
    s = series(U01, [lp_const(U01, 0), lp_const(U01, 5), lp_const(U01, 7)])
    d = ts_divide_by_t(s)
    assert d == series(U01, [lp_const(U01, 5), lp_const(U01, 7)])
    assert ts_shift_up(d) == s
    with pytest.raises(NotDivisible):
        ts_divide_by_t(ts_one(U01, 3))


def test_t_euler_operator():
    s = series(U01, [lp_const(U01, 4), lp_const(U01, 3), lp_const(U01, 2)])
    assert t_euler(s) == series(
        U01, [lp_const(U01, 0), lp_const(U01, 3), lp_const(U01, 4)])


def test_substitution_inverse_oracle():
    # acting on order 4, mu = 1 + t: the inverse factor is 1 - t + 2 t^2,
    # not the coefficientwise inverse 1 - t + t^2.
    lam = coeff_aut(one_plus_t(U01, 3))
    hat = ca_invert(lam).mu
    want = series(U01, [lp_const(U01, 1), lp_const(U01, -1), lp_const(U01, 2)])
    assert hat == want
    assert hat != ts_inv(one_plus_t(U01, 3))


def test_substitution_tfree_inverse_matches_coefficientwise():
    rng = random.Random(103)
    for _ in range(10):
        lam = rand_coeff_aut(rng, U012, 3, tfree=True)
        assert ca_invert(lam).mu == ts_inv(lam.mu)


def test_substitution_roundtrips():
    rng = random.Random(107)
    for _ in range(15):
        n = rng.randint(2, 4)
        lam = rand_coeff_aut(rng, U012, n)
        inv = ca_invert(lam)
        s = rand_series(rng, U012, n + 1)
        assert ca_apply(inv, ca_apply(lam, s)) == s
        assert ca_apply(lam, ca_apply(inv, s)) == s


def test_substitution_is_ring_map():
    rng = random.Random(109)
    for _ in range(10):
        n = rng.randint(2, 4)
        lam = rand_coeff_aut(rng, U012, n)
        a = rand_series(rng, U012, n)
        b = rand_series(rng, U012, n)
        assert ca_apply(lam, ts_mul(a, b)) == ts_mul(ca_apply(lam, a),
                                                     ca_apply(lam, b))
        assert ca_apply(lam, ts_add(a, b)) == ts_add(ca_apply(lam, a),
                                                     ca_apply(lam, b))


def test_substitution_composition():
    rng = random.Random(113)
    for _ in range(10):
        lam1 = rand_coeff_aut(rng, U012, 3)
        lam2 = rand_coeff_aut(rng, U012, 3)
        s = rand_series(rng, U012, 4)
        lhs = ca_apply(lam2, ca_apply(lam1, s))
        rhs = ca_apply(ca_compose(lam2, lam1), s)
        assert lhs == rhs


def test_matrix_inverse_roundtrip():
    rng = random.Random(127)
    for _ in range(10):
        r = rng.randint(1, 3)
        n = rng.randint(2, 4) if r < 3 else 2
        a = rand_trunc_matrix(rng, U012, n, r)
        assert mat_mul(a, mat_inv(a)) == mat_identity(U012, n, r)
        assert mat_mul(mat_inv(a), a) == mat_identity(U012, n, r)


def test_transported_inverse_roundtrip():
    rng = random.Random(131)
    for _ in range(10):
        n = rng.randint(2, 3)
        lam = rand_coeff_aut(rng, U012, n)
        a = rand_trunc_matrix(rng, U012, n + 1, 2)
        back = inv_lambda(inv_lambda(a, lam), ca_invert(lam))
        assert back == a


def test_order_lift_identity_closed_form():
    # order 2 lifted with the identity substitution:
    # top coefficient (1/2) A1 A0^-1 A1, and the transported-inverse lift has
    # the matching closed form.
    rng = random.Random(137)
    for _ in range(10):
        a = rand_trunc_matrix(rng, U012, 2, 2)
        lam = ca_identity(U012, 2)
        ext = ext_lambda(a, lam)
        a0, a1 = a.coeffs
        a0i = m_inv(a0)
        assert m_eq(ext.coeffs[2], m_scale(Fraction(1, 2),
                                           m_mul(m_mul(a1, a0i), a1)))
        inv_ext = mat_inv(ext)
        assert m_eq(inv_ext.coeffs[0], a0i)
        assert m_eq(inv_ext.coeffs[1], m_scale(-1, m_mul(m_mul(a0i, a1), a0i)))
        want_top = m_scale(Fraction(1, 2),
                           m_mul(m_mul(m_mul(m_mul(a0i, a1), a0i), a1), a0i))
        assert m_eq(inv_ext.coeffs[2], want_top)


def test_lift_commutes_with_transported_inverse_general():
    # full-order input (top coefficient nonzero), corrected in place
    rng = random.Random(139)
    for _ in range(15):
        n = rng.randint(2, 3)
        r = rng.randint(1, 2)
        lam = rand_coeff_aut(rng, U012, n)
        a = rand_trunc_matrix(rng, U012, n + 1, r)
        lhs = inv_lambda(ext_top(a, lam), lam)
        rhs = ext_top(inv_lambda(a, lam), ca_invert(lam))
        assert lhs == rhs


def test_lift_commutes_with_transported_inverse_promoted():
    # order-n input, promoted by the lift; the inverse side truncates first
    rng = random.Random(149)
    for _ in range(15):
        n = rng.randint(2, 3)
        r = rng.randint(1, 2)
        lam = rand_coeff_aut(rng, U012, n)
        a = rand_trunc_matrix(rng, U012, n, r)
        lhs = inv_lambda(ext_lambda(a, lam), lam)
        rhs = ext_lambda(mat_truncate(inv_lambda(mat_promote(a, n + 1), lam), n),
                         ca_invert(lam))
        assert lhs == rhs


def test_series_matrix_consistency():
    s = series(U01, [var_ratio(U01, 0, 1), lp_const(U01, 2)])
    a = trunc_matrix(U01, [((s.coeffs[0],),), ((s.coeffs[1],),)])
    ainv = mat_inv(a)
    sinv = ts_inv(s)
    assert ainv.coeffs[0][0][0] == sinv.coeffs[0]
    assert ainv.coeffs[1][0][0] == sinv.coeffs[1]


def test_truncate_promote_roundtrip():
    rng = random.Random(151)
    s = rand_series(rng, U012, 3)
    assert ts_truncate(ts_sub(s, s), 2) == ts_zero(U012, 2)
    t = ts_truncate(s, 2)
    assert ts_truncate(ts_const(lp_const(U012, 1), 4), 2) == ts_one(U012, 2)
    assert t.n == 2
