import itertools
import random
from fractions import Fraction

import pytest

from multischeme.exactalg import (
    chart,
    dlog,
    form_scale,
    full_chart,
    laurent,
    lp_zero,
    mono,
    var_ratio,
)
from multischeme.truncated import m_det, m_mul
from multischeme.cech import (
    cech_delta,
    class_is_zero,
    cohomology_dim_line_bundle,
    is_cocycle,
    nabla0,
    simplex_chart,
    simplices,
    trace_T,
    twisted_cochain,
)
from multischeme.randgen import (
    rand_invertible_matrix,
    rand_laurent,
    rand_scalar_cocycle,
    rand_vector_field,
)


def rand_fun_cochain(rng, m, q, twist):
    values = {}
    for s in simplices(m, q):
        ch = simplex_chart(m, s)
        values[s] = rand_laurent(rng, ch, twist, 2)
    return twisted_cochain(m, q, "fun", twist, values)


def rand_form_value(rng, ch, twist):
    out = None
    idxs = sorted(ch.allowed)
    for _ in range(2):
        i, j = rng.sample(idxs, 2) if len(idxs) >= 2 else (idxs[0], idxs[0])
        if i == j:
            continue
        piece = form_scale(rand_laurent(rng, ch, twist, 2),
                           dlog(var_ratio(ch, i, j)))
        out = piece if out is None else out + piece
    if out is None:
        from multischeme.exactalg import form_zero
        out = form_zero(ch, twist)
    return out


def rand_cochain(rng, m, q, kind, twist):
    values = {}
    for s in simplices(m, q):
        ch = simplex_chart(m, s)
        if kind == "fun":
            values[s] = rand_laurent(rng, ch, twist, 2)
        elif kind == "form":
            values[s] = rand_form_value(rng, ch, twist)
        else:
            values[s] = rand_vector_field(rng, ch, twist)
    return twisted_cochain(m, q, kind, twist, values)


def test_delta_squared_is_zero():
    rng = random.Random(31)
    for kind in ("fun", "form", "field"):
        for m, q in ((2, 0), (3, 0), (3, 1)):
            c = rand_cochain(rng, m, q, kind, -2)
            assert cech_delta(cech_delta(c)).is_zero()


def test_spot_dimensions():
    assert cohomology_dim_line_bundle(3, -5, 3) == 4
    assert cohomology_dim_line_bundle(3, -4, 3) == 1
    assert cohomology_dim_line_bundle(2, -3, 2) == 1
    assert cohomology_dim_line_bundle(2, 0, 0) == 1
    assert cohomology_dim_line_bundle(2, 2, 0) == 6
    assert cohomology_dim_line_bundle(2, -3, 1) == 0
    assert cohomology_dim_line_bundle(1, -2, 1) == 1


def test_dimensions_match_monomial_enumeration():
    for m in (1, 2, 3):
        for k in range(-6, 7):
            lo = len([e for e in itertools.product(range(0, 7), repeat=m + 1)
                      if sum(e) == k])
            hi = len([e for e in itertools.product(range(-7, 0), repeat=m + 1)
                      if sum(e) == k])
            assert cohomology_dim_line_bundle(m, k, 0) == lo
            assert cohomology_dim_line_bundle(m, k, m) == hi
            for q in range(1, m):
                assert cohomology_dim_line_bundle(m, k, q) == 0


def test_scalar_coboundaries_are_detected():
    rng = random.Random(32)
    for m in (1, 2, 3):
        for q in range(1, m + 1):
            b = rand_fun_cochain(rng, m, q - 1, -2)
            c = cech_delta(b)
            assert is_cocycle(c)
            assert class_is_zero(c)


def test_scalar_top_classes():
    ch1 = chart(1, (0, 1))
    c = twisted_cochain(1, 1, "fun", -2,
                        {(0, 1): mono(ch1, 1, {0: -1, 1: -1})})
    assert not class_is_zero(c)
    ch2 = chart(2, (0, 1, 2))
    c = twisted_cochain(2, 2, "fun", -3,
                        {(0, 1, 2): mono(ch2, 1, {0: -1, 1: -1, 2: -1})})
    assert not class_is_zero(c)
    c = twisted_cochain(2, 2, "fun", -2,
                        {(0, 1, 2): mono(ch2, 1, {0: -1, 1: -1})})
    assert class_is_zero(c)
    c = twisted_cochain(1, 1, "fun", -1, {(0, 1): mono(ch1, 1, {0: -1})})
    assert class_is_zero(c)


def test_field_coboundaries_are_detected():
    rng = random.Random(33)
    for m, q in ((1, 1), (2, 1), (2, 2)):
        b = rand_cochain(rng, m, q - 1, "field", -3)
        c = cech_delta(b)
        assert is_cocycle(c)
        assert class_is_zero(c)


def test_form_coboundaries_are_detected():
    rng = random.Random(34)
    for m, q in ((2, 1), (2, 2), (3, 1)):
        b = rand_cochain(rng, m, q - 1, "form", -1)
        c = cech_delta(b)
        assert class_is_zero(c)


def test_log_differential_class_detects_the_twist():
    rng = random.Random(35)
    for m in (1, 2):
        for k in (-2, 0, 3):
            alpha = {}
            for i in range(m + 1):
                for j in range(i + 1, m + 1):
                    ch = chart(m, (i, j))
                    alpha[(i, j)] = var_ratio(ch, i, j, -k)
            c = nabla0(m, alpha)
            assert is_cocycle(c)
            assert class_is_zero(c) == (k == 0)
    # unit rescalings of the trivial bundle contribute nothing
    alpha = rand_scalar_cocycle(rng, 2, 0)
    assert nabla0(2, alpha).is_zero()


def test_trace_form_reduces_to_determinant():
    rng = random.Random(36)
    ch = full_chart(2)
    for r in (1, 2, 3):
        mat = rand_invertible_matrix(rng, ch, r)
        other = rand_invertible_matrix(rng, ch, r)
        assert trace_T(mat) == dlog(m_det(mat))
        assert trace_T(m_mul(mat, other)) == trace_T(mat) + trace_T(other)


def test_rejects_non_cocycles_and_bad_simplices():
    ch = chart(2, (0, 1))
    c = twisted_cochain(2, 1, "fun", 0,
                        {(0, 1): laurent(ch, 0, {(1, -1, 0): Fraction(1)})})
    with pytest.raises(ValueError):
        class_is_zero(c)
    with pytest.raises(ValueError):
        twisted_cochain(2, 1, "fun", 0, {(1, 0): lp_zero(ch, 0)})
    with pytest.raises(ValueError):
        class_is_zero(twisted_cochain(2, 0, "fun", 0, {}))
