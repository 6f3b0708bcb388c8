"""Seeded random generators for elements, series, matrices and cocycles.

Shared between the test suite and the command-line verification suites so
that any reported failure reproduces from its seed alone.  All generators
take an explicit random.Random instance.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List

from .exactalg import (
    Chart,
    LaurentElement,
    VectorField,
    field,
    laurent,
    lp_zero,
    mono,
)
from .truncated import (
    CoeffAutomorphism,
    TruncMatrix,
    TruncSeries,
    coeff_aut,
    m_add,
    m_identity,
    m_mul,
    m_scale,
    m_zero,
    series,
    trunc_matrix,
    ts_one,
)


def rand_fraction(rng: random.Random, zero_ok: bool = True) -> Fraction:
    num = rng.randint(-4, 4)
    if not zero_ok:
        while num == 0:
            num = rng.randint(-4, 4)
    return Fraction(num, rng.randint(1, 3))


def rand_laurent(rng: random.Random, ch: Chart, degree: int,
                 nterms: int = 3, span: int = 2) -> LaurentElement:
    """Random homogeneous element with small exponents, negatives on-chart."""
    terms = {}
    for _ in range(nterms):
        e = [0] * (ch.m + 1)
        budget = degree
        idxs = list(range(ch.m + 1))
        rng.shuffle(idxs)
        for q in idxs[:-1]:
            lo = -span if q in ch.allowed else 0
            e[q] = rng.randint(lo, span)
            budget -= e[q]
        last = idxs[-1]
        if budget < 0 and last not in ch.allowed:
            continue
        e[last] = budget
        terms[tuple(e)] = rand_fraction(rng)
    return laurent(ch, degree, terms)


def rand_unit_monomial(rng: random.Random, ch: Chart,
                       span: int = 2) -> LaurentElement:
    """Degree-0 monomial c (x_i/x_j)^s with i, j allowed, so that the
    inverse stays on the same chart."""
    idxs = sorted(ch.allowed)
    i = rng.choice(idxs)
    j = rng.choice(idxs)
    s = rng.randint(-span, span) if i != j else 0
    return mono(ch, rand_fraction(rng, zero_ok=False), {i: s, j: -s})


def rand_series(rng: random.Random, ch: Chart, n: int, degree: int = 0,
                nterms: int = 2) -> TruncSeries:
    return series(ch, [rand_laurent(rng, ch, degree, nterms)
                       for _ in range(n)], degree, 0)


def rand_unit_series(rng: random.Random, ch: Chart, n: int,
                     tfree: bool = False) -> TruncSeries:
    """Series with unit-monomial constant term (invertible)."""
    coeffs = [rand_unit_monomial(rng, ch)]
    for _ in range(n - 1):
        coeffs.append(lp_zero(ch, 0) if tfree
                      else rand_laurent(rng, ch, 0, 2))
    return series(ch, coeffs, 0, 0)


def rand_coeff_aut(rng: random.Random, ch: Chart, n: int,
                   tfree: bool = False) -> CoeffAutomorphism:
    return coeff_aut(rand_unit_series(rng, ch, n, tfree=tfree))


def rand_invertible_matrix(rng: random.Random, ch: Chart, r: int):
    """t-free r x r matrix with unit-monomial determinant: L * D * U."""
    lower = list(list(row) for row in m_identity(ch, r))
    upper = list(list(row) for row in m_identity(ch, r))
    for i in range(r):
        for j in range(r):
            if i > j:
                lower[i][j] = rand_laurent(rng, ch, 0, 2)
            elif i < j:
                upper[i][j] = rand_laurent(rng, ch, 0, 2)
    diag = [[lp_zero(ch, 0)] * r for _ in range(r)]
    for i in range(r):
        diag[i][i] = rand_unit_monomial(rng, ch)
    as_m = lambda rows: tuple(tuple(row) for row in rows)
    return m_mul(m_mul(as_m(lower), as_m(diag)), as_m(upper))


def rand_trunc_matrix(rng: random.Random, ch: Chart, n: int,
                      r: int) -> TruncMatrix:
    """Invertible matrix over R[t]/(t^n): unit constant part, free higher
    coefficients."""
    coeffs = [rand_invertible_matrix(rng, ch, r)]
    for _ in range(n - 1):
        mat = tuple(tuple(rand_laurent(rng, ch, 0, 2) for _ in range(r))
                    for _ in range(r))
        coeffs.append(mat)
    return trunc_matrix(ch, coeffs)


def rand_vector_field(rng: random.Random, ch: Chart, twist: int = 0,
                      nterms: int = 2) -> VectorField:
    comps = [rand_laurent(rng, ch, twist + 1, nterms)
             for _ in range(ch.m + 1)]
    return field(ch, twist, comps)


def rand_global_field(rng: random.Random, m: int, twist: int,
                      nterms: int = 2) -> VectorField:
    """Field with polynomial components: a global section of the tangent
    sheaf twisted by `twist` (nonzero ones need twist >= -1)."""
    if twist < -1:
        raise ValueError("no nonzero global fields below twist -1")
    ch = Chart(m, frozenset({0}))
    deg = twist + 1
    comps = []
    for _ in range(m + 1):
        val = lp_zero(ch, deg)
        for _ in range(nterms):
            exps = [0] * (m + 1)
            for _ in range(deg):
                exps[rng.randrange(m + 1)] += 1
            val = val + mono(ch, rand_fraction(rng, zero_ok=False),
                             {q: e for q, e in enumerate(exps) if e})
        comps.append(val)
    return field(ch, twist, comps)


def rand_scalar_cocycle(rng: random.Random, m: int, power: int):
    """Monomial line cocycles a_ij = (c_i/c_j)(x_i/x_j)^(-power) on P^m.

    Returns the dict {(i, j): a_ij} over all ordered pairs i < j; the cocycle
    identity a_ik = a_ij a_jk is exact by construction.
    """
    from .exactalg import chart, var_ratio
    scalars = [Fraction(rng.choice([1, 1, 2, 3, -1, -2])) for _ in range(m + 1)]
    out = {}
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            ch = chart(m, {i, j})
            val = var_ratio(ch, i, j, -power) * (scalars[i] / scalars[j])
            out[(i, j)] = val
    return out


def rand_derivation(rng: random.Random, ch: Chart, n: int,
                    with_b: bool = True):
    """Random derivation that is a multiple of t (order n)."""
    from .autgroup import derivation
    from .truncated import ts_zero
    comps = []
    for _ in range(ch.m + 1):
        comps.append(series(ch, [lp_zero(ch, 1)]
                            + [rand_laurent(rng, ch, 1, 2)
                               for _ in range(n - 1)], 1, 0))
    if with_b:
        b = series(ch, [lp_zero(ch, 0)]
                   + [rand_laurent(rng, ch, 0, 2) for _ in range(n - 1)], 0, 0)
    else:
        b = ts_zero(ch, n)
    return derivation(ch, comps, b)


def rand_gn(rng: random.Random, ch: Chart, n: int,
            unipotent: bool = False):
    """Random automorphism of O(U)[t]/(t^n) fixing the base modulo t."""
    from .autgroup import gn_element
    from .exactalg import lp_const, var_ratio
    base = ch.pivot
    images = {}
    for q in range(ch.m + 1):
        if q == base:
            continue
        images[q] = series(ch, [var_ratio(ch, q, base)]
                           + [rand_laurent(rng, ch, 0, 2)
                              for _ in range(n - 1)], 0, 0)
    if unipotent:
        mu = series(ch, [lp_const(ch, 1)]
                    + [rand_laurent(rng, ch, 0, 2) for _ in range(n - 2)],
                    0, 0)
    else:
        mu = rand_unit_series(rng, ch, n - 1)
    return gn_element(ch, n, images, mu)


def rand_phi2(rng: random.Random, ch: Chart):
    """Random order-2 closed-form data (derivation, unit)."""
    from .autgroup import Phi2Data
    return Phi2Data(rand_vector_field(rng, ch, 0),
                    rand_unit_monomial(rng, ch))


def rand_phi3(rng: random.Random, ch: Chart):
    """Random order-3 closed-form data (D, mu0 + mu1 t, D1)."""
    from .autgroup import Phi3Data
    return Phi3Data(rand_vector_field(rng, ch, 0),
                    rand_unit_monomial(rng, ch),
                    rand_laurent(rng, ch, 0, 2),
                    rand_vector_field(rng, ch, 0))
