import random
from fractions import Fraction

import pytest

from multischeme.exactalg import (
    chart,
    field_zero,
    full_chart,
    lp_const,
    lp_zero,
    mono,
    var_ratio,
)
from multischeme.truncated import (
    series,
    ts_add,
    ts_const,
    ts_mul,
    ts_one,
    ts_scale,
    ts_truncate,
)
from multischeme.autgroup import (
    Phi3Data,
    apply,
    compose,
    compose2_closed,
    compose3_closed,
    der_add,
    der_apply,
    der_commutator,
    der_scale,
    derivation,
    exp_der,
    gn_element,
    gn_on_chart,
    gn_to_phi2,
    gn_to_phi3,
    hn_compose,
    hn_element,
    hn_equiv,
    hn_from_gn,
    hn_identity,
    hn_invert,
    identity_gn,
    invert,
    invert2_closed,
    invert3_closed,
    log_aut,
    phi2_element,
    phi3_element,
    psi_canonical,
    reduce,
    triple_defect,
)
from multischeme.randgen import (
    rand_derivation,
    rand_gn,
    rand_laurent,
    rand_phi2,
    rand_phi3,
    rand_series,
    rand_unit_monomial,
)


def test_apply_on_square_of_coordinate_fraction():
    ch = chart(2, {0, 1})
    phi = gn_element(ch, 3, {
        1: ts_const(var_ratio(ch, 1, 0), 3),
        2: series(ch, [var_ratio(ch, 2, 0), var_ratio(ch, 0, 1),
                       lp_zero(ch, 0)]),
    }, ts_one(ch, 2))
    from multischeme.autgroup import apply
    got = apply(phi, ts_const(mono(ch, 1, {2: 2, 0: -2}), 3))
    want = series(ch, [mono(ch, 1, {2: 2, 0: -2}),
                       mono(ch, 2, {2: 1, 1: -1}),
                       mono(ch, 1, {0: 2, 1: -2})])
    assert got == want


def test_apply_is_a_ring_homomorphism():
    from multischeme.autgroup import apply
    rng = random.Random(11)
    ch = full_chart(1)
    for n in (2, 3, 4):
        phi = rand_gn(rng, ch, n)
        a = rand_series(rng, ch, n)
        b = rand_series(rng, ch, n)
        assert apply(phi, ts_add(a, b)) == ts_add(apply(phi, a), apply(phi, b))
        assert apply(phi, ts_mul(a, b)) == ts_mul(apply(phi, a), apply(phi, b))


def test_compose_matches_nested_application():
    from multischeme.autgroup import apply
    rng = random.Random(12)
    ch = full_chart(1)
    for n in (2, 3):
        f = rand_gn(rng, ch, n)
        g = rand_gn(rng, ch, n)
        s = rand_series(rng, ch, n)
        assert apply(compose(f, g), s) == apply(f, apply(g, s))


def test_group_laws():
    rng = random.Random(13)
    for m, n in ((1, 2), (1, 3), (1, 4), (2, 3)):
        ch = full_chart(m)
        e = identity_gn(ch, n)
        f = rand_gn(rng, ch, n)
        g = rand_gn(rng, ch, n)
        h = rand_gn(rng, ch, n)
        assert compose(f, e) == f
        assert compose(e, f) == f
        assert compose(compose(f, g), h) == compose(f, compose(g, h))
        assert compose(f, invert(f)) == e
        assert compose(invert(f), f) == e


def test_reduce_is_a_homomorphism():
    rng = random.Random(14)
    ch = full_chart(1)
    f = rand_gn(rng, ch, 4)
    g = rand_gn(rng, ch, 4)
    for k in (2, 3):
        assert reduce(compose(f, g), k) == compose(reduce(f, k), reduce(g, k))
    assert reduce(f, 4) == f
    with pytest.raises(ValueError):
        reduce(f, 1)


def test_exponential_sums_the_iterates():
    from multischeme.autgroup import apply
    rng = random.Random(15)
    ch = full_chart(1)
    for n in (2, 3, 4):
        d = rand_derivation(rng, ch, n)
        s = rand_series(rng, ch, n)
        term = s
        acc = s
        for k in range(1, n):
            term = ts_scale(Fraction(1, k), der_apply(d, term))
            acc = ts_add(acc, term)
        assert apply(exp_der(d), s) == acc


def test_exp_log_roundtrips():
    rng = random.Random(16)
    for m, n in ((1, 2), (1, 3), (1, 4), (2, 3)):
        ch = full_chart(m)
        d = rand_derivation(rng, ch, n)
        assert log_aut(exp_der(d)) == d
        phi = rand_gn(rng, ch, n, unipotent=True)
        assert exp_der(log_aut(phi)) == phi


def test_log_needs_unipotent_factor():
    rng = random.Random(17)
    ch = full_chart(1)
    phi = rand_gn(rng, ch, 3)
    while phi.mu.constant() == lp_const(ch, 1):
        phi = rand_gn(rng, ch, 3)
    with pytest.raises(ValueError):
        log_aut(phi)


def test_commuting_exponentials_multiply():
    rng = random.Random(18)
    ch = full_chart(1)
    for n in (2, 3, 4):
        d = rand_derivation(rng, ch, n, with_b=False)
        f = series(ch, [lp_const(ch, rng.randint(-2, 2))
                        for _ in range(n)], 0, 0)
        d2 = der_scale(f, d)
        zero = der_commutator(d, d2)
        assert zero.b.is_zero() and all(c.is_zero() for c in zero.comps)
        assert compose(exp_der(d), exp_der(d2)) == exp_der(der_add(d, d2))


def test_order_three_composition_picks_up_half_commutator():
    rng = random.Random(19)
    for m in (1, 2):
        ch = full_chart(m)
        for _ in range(3):
            d1 = rand_derivation(rng, ch, 3)
            d2 = rand_derivation(rng, ch, 3)
            half = ts_const(lp_const(ch, Fraction(1, 2)), 3)
            corr = der_scale(half, der_commutator(d1, d2))
            assert compose(exp_der(d1), exp_der(d2)) == \
                exp_der(der_add(der_add(d1, d2), corr))


def test_order_two_closed_forms_match_engine():
    rng = random.Random(20)
    ch = full_chart(2)
    for _ in range(5):
        a = rand_phi2(rng, ch)
        b = rand_phi2(rng, ch)
        assert phi2_element(compose2_closed(a, b), ch) == \
            compose(phi2_element(a, ch), phi2_element(b, ch))
        assert phi2_element(invert2_closed(a), ch) == invert(phi2_element(a, ch))
        assert gn_to_phi2(phi2_element(a, ch)) == a


def test_order_three_closed_forms_match_engine():
    rng = random.Random(21)
    ch = full_chart(2)
    for _ in range(4):
        a = rand_phi3(rng, ch)
        b = rand_phi3(rng, ch)
        assert phi3_element(compose3_closed(a, b), ch) == \
            compose(phi3_element(a, ch), phi3_element(b, ch))
        assert phi3_element(invert3_closed(a), ch) == invert(phi3_element(a, ch))
        assert gn_to_phi3(phi3_element(a, ch)) == a


def test_canonical_extension_inverse():
    rng = random.Random(22)
    ch = full_chart(2)
    for _ in range(4):
        d = rand_phi2(rng, ch).d
        mu0 = rand_unit_monomial(rng, ch)
        mu1 = rand_laurent(rng, ch, 0, 2)
        psi = psi_canonical(d, mu0, mu1)
        assert invert3_closed(psi) == psi_canonical(*_invert2_with_mu1(d, mu0, mu1))


def _invert2_with_mu1(d, mu0, mu1):
    from multischeme.exactalg import apply_field, lp_invert
    from multischeme.exactalg import field_scale
    inv = lp_invert(mu0)
    return (field_scale(-inv, d), inv,
            (apply_field(d, mu0) - mu1) * inv * inv * inv)


def test_triple_defect_closed_form():
    rng = random.Random(23)
    ch = full_chart(2)
    from multischeme.exactalg import apply_field, field_scale
    for _ in range(3):
        d = rand_phi2(rng, ch).d
        dp = rand_phi2(rng, ch).d
        mu0 = rand_unit_monomial(rng, ch)
        mu0p = rand_unit_monomial(rng, ch)
        mu1 = rand_laurent(rng, ch, 0, 2)
        mu1p = rand_laurent(rng, ch, 0, 2)
        psi = phi3_element(psi_canonical(d, mu0, mu1), ch)
        psip = phi3_element(psi_canonical(dp, mu0p, mu1p), ch)
        d_c = dp + field_scale(mu0p, d)
        mu0_c = mu0 * mu0p
        mu1_c = mu0p * apply_field(dp, mu0) + mu0p * mu0p * mu1 + mu0 * mu1p
        psic = phi3_element(psi_canonical(d_c, mu0_c, mu1_c), ch)
        got = compose(compose(psip, psi), invert(psic))
        k = triple_defect(dp, mu0p, mu1p, d, mu0, mu1)
        want = phi3_element(Phi3Data(field_zero(ch, 0), lp_const(ch, 1),
                                     lp_zero(ch, 0), k), ch)
        assert got == want


def test_pair_group_laws():
    rng = random.Random(24)
    ch = full_chart(1)
    for n in (2, 3):
        e = hn_identity(ch, n)
        a, b, c = [hn_element(rand_gn(rng, ch, n), _rand_unit(rng, ch, n))
                   for _ in range(3)]
        assert hn_compose(a, e) == a
        assert hn_compose(e, a) == a
        assert hn_compose(hn_compose(a, b), c) == hn_compose(a, hn_compose(b, c))
        assert hn_compose(a, hn_invert(a)) == e
        assert hn_compose(hn_invert(a), a) == e


def _rand_unit(rng, ch, n):
    from multischeme.randgen import rand_unit_series
    return rand_unit_series(rng, ch, n)


def test_pair_equivalence_ignores_top_unit_coefficient():
    rng = random.Random(25)
    ch = full_chart(1)
    phi = rand_gn(rng, ch, 3)
    u = _rand_unit(rng, ch, 3)
    bump = series(ch, [lp_zero(ch, 0), lp_zero(ch, 0), lp_const(ch, 1)])
    a = hn_element(phi, u)
    b = hn_element(phi, ts_add(u, bump))
    assert hn_equiv(a, b)
    assert a != b
    c = hn_element(phi, ts_add(u, series(
        ch, [lp_zero(ch, 0), lp_const(ch, 1), lp_zero(ch, 0)])))
    assert not hn_equiv(a, c)


def test_forgetting_one_order_is_a_homomorphism():
    rng = random.Random(26)
    ch = full_chart(1)
    f = rand_gn(rng, ch, 4)
    g = rand_gn(rng, ch, 4)
    assert hn_from_gn(compose(f, g)) == hn_compose(hn_from_gn(f), hn_from_gn(g))
    assert hn_equiv(hn_invert(hn_from_gn(f)), hn_from_gn(invert(f)))


def test_derivation_rejects_constant_terms():
    ch = full_chart(1)
    with pytest.raises(ValueError):
        derivation(ch, [ts_const(mono(ch, 1, {0: 1}), 2),
                        ts_const(lp_zero(ch, 1), 2)],
                   ts_const(lp_zero(ch, 0), 2))


def test_rebase_to_finer_chart_keeps_the_action():
    rng = random.Random(27)
    ch = chart(2, {1, 2})
    fine = full_chart(2)
    phi = rand_gn(rng, ch, 3)
    psi = gn_on_chart(phi, fine)
    assert psi.base == fine.pivot
    probe = ts_const(var_ratio(ch, 2, 1, 2), 3)
    assert apply(psi, probe) == apply(phi, probe)
    other = rand_gn(rng, ch, 3)
    assert (gn_on_chart(compose(phi, other), fine)
            == compose(psi, gn_on_chart(other, fine)))
    assert compose(gn_on_chart(invert(phi), fine), psi) == identity_gn(fine, 3)
