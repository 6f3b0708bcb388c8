"""Truncated polynomial rings R[t]/(t^n) over the exact Laurent layer.

A series of order n stores exactly n coefficient elements; coefficient p may
carry a graded degree base + p*weight (weight 0 throughout unless a power of a
twisting bundle rides along with t).  Matrices over these rings are stored as a
tuple of coefficient matrices, which is the convenient shape for the
order-by-order inversion and lifting algorithms.

The coefficient substitutions that appear in the order-lift machinery act as
the identity on coefficients and send t to mu*t for an invertible mu; they are
inverted exactly, order by order (the naive coefficientwise inverse of mu is
wrong as soon as mu depends on t).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .exactalg import (
    Chart,
    LaurentElement,
    NotAUnit,
    lp_const,
    lp_invert,
    lp_zero,
)

Matrix = Tuple[Tuple[LaurentElement, ...], ...]


class NotDivisible(ValueError):
    """Division by t was requested for a series with nonzero constant term."""


@dataclass(frozen=True, eq=False)
class TruncSeries:
    """Element of R[t]/(t^n): exactly n coefficients, lowest first."""

    chart: Chart
    n: int
    degree: int
    weight: int
    coeffs: Tuple[LaurentElement, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.n, self.coeffs))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def coeff(self, p: int) -> LaurentElement:
        return self.coeffs[p]

    def constant(self) -> LaurentElement:
        return self.coeffs[0]

    def __repr__(self) -> str:
        from .exactalg import laurent_text
        inner = " ; ".join(laurent_text(c) for c in self.coeffs)
        return f"TruncSeries(n={self.n}, [{inner}])"


def series(ch: Chart, coeffs: Sequence[LaurentElement],
           degree: int | None = None, weight: int = 0) -> TruncSeries:
    """Validate coefficient degrees (base + p*weight) and build a series."""
    coeffs = tuple(c.on_chart(ch) for c in coeffs)
    if not coeffs:
        raise ValueError("a truncated series needs order >= 1")
    if degree is None:
        degree = 0
        for p, c in enumerate(coeffs):
            if not c.is_zero():
                degree = c.degree - p * weight
                break
    for p, c in enumerate(coeffs):
        if not c.is_zero() and c.degree != degree + p * weight:
            raise ValueError(
                f"coefficient {p} has degree {c.degree}, expected "
                f"{degree + p * weight}")
    return TruncSeries(ch, len(coeffs), degree, weight, coeffs)


def ts_zero(ch: Chart, n: int, degree: int = 0, weight: int = 0) -> TruncSeries:
    return series(ch, [lp_zero(ch, degree + p * weight) for p in range(n)],
                  degree, weight)


def ts_one(ch: Chart, n: int) -> TruncSeries:
    return ts_const(lp_const(ch, 1), n)


def ts_const(c: LaurentElement, n: int) -> TruncSeries:
    ch = c.chart
    return series(ch, [c] + [lp_zero(ch, c.degree) for _ in range(n - 1)],
                  c.degree, 0)


def ts_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    if a.n != b.n:
        raise ValueError(f"order mismatch: {a.n} vs {b.n}")
    ch = a.chart.union(b.chart)
    return series(ch, [x + y for x, y in zip(a.coeffs, b.coeffs)],
                  weight=a.weight if not a.is_zero() else b.weight)


def ts_neg(a: TruncSeries) -> TruncSeries:
    return TruncSeries(a.chart, a.n, a.degree, a.weight,
                       tuple(-c for c in a.coeffs))


def ts_sub(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return ts_add(a, ts_neg(b))


def ts_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    if a.n != b.n:
        raise ValueError(f"order mismatch: {a.n} vs {b.n}")
    if a.weight != b.weight and not (a.is_zero() or b.is_zero()):
        raise ValueError("weight mismatch in series product")
    ch = a.chart.union(b.chart)
    out = [lp_zero(ch, a.degree + b.degree + p * a.weight)
           for p in range(a.n)]
    for p, x in enumerate(a.coeffs):
        if x.is_zero():
            continue
        for q, y in enumerate(b.coeffs):
            if p + q >= a.n or y.is_zero():
                continue
            out[p + q] = out[p + q] + x * y
    return series(ch, out, weight=a.weight)


def ts_scale(f: LaurentElement | int | Fraction, a: TruncSeries) -> TruncSeries:
    if isinstance(f, (int, Fraction)):
        return series(a.chart, [c * Fraction(f) for c in a.coeffs],
                      weight=a.weight)
    return series(a.chart.union(f.chart), [f * c for c in a.coeffs],
                  weight=a.weight)


def ts_pow(a: TruncSeries, k: int) -> TruncSeries:
    if k < 0:
        return ts_pow(ts_inv(a), -k)
    out = ts_one(a.chart, a.n)
    for _ in range(k):
        out = ts_mul(out, a)
    return out


def ts_inv(a: TruncSeries) -> TruncSeries:
    """Multiplicative inverse; the constant term must be a unit monomial."""
    c0 = lp_invert(a.constant())
    out = [c0]
    for p in range(1, a.n):
        acc = lp_zero(a.chart, 0)
        for q in range(1, p + 1):
            acc = acc + a.coeffs[q] * out[p - q]
        out.append(-(c0 * acc))
    return series(a.chart, out, -a.degree, 0)


def ts_truncate(a: TruncSeries, k: int) -> TruncSeries:
    """Drop coefficients at t^k and above; the result has order k."""
    if not (1 <= k <= a.n):
        raise ValueError(f"cannot truncate order {a.n} to {k}")
    return series(a.chart, a.coeffs[:k], a.degree, a.weight)


def ts_promote(a: TruncSeries, k: int) -> TruncSeries:
    """Zero-pad to a higher order k."""
    if k < a.n:
        raise ValueError(f"cannot promote order {a.n} down to {k}")
    pad = [lp_zero(a.chart, a.degree + p * a.weight) for p in range(a.n, k)]
    return series(a.chart, list(a.coeffs) + pad, a.degree, a.weight)


def ts_adjust(a: TruncSeries, k: int) -> TruncSeries:
    return ts_truncate(a, k) if k <= a.n else ts_promote(a, k)


def ts_divide_by_t(a: TruncSeries) -> TruncSeries:
    """Exact division by t (order drops by one)."""
    if not a.constant().is_zero():
        raise NotDivisible("constant term is nonzero")
    if a.n < 2:
        raise NotDivisible("order 1 leaves no room to divide")
    return series(a.chart, a.coeffs[1:], a.degree + a.weight, a.weight)


def ts_shift_up(a: TruncSeries) -> TruncSeries:
    """Multiply by t (order grows by one)."""
    return series(a.chart, [lp_zero(a.chart, a.degree - a.weight)] + list(a.coeffs),
                  a.degree - a.weight, a.weight)


def t_euler(a: TruncSeries) -> TruncSeries:
    """The operator t d/dt: coefficient p is multiplied by p."""
    return series(a.chart, [c * Fraction(p) for p, c in enumerate(a.coeffs)],
                  a.degree, a.weight)


# ---------------------------------------------------------------------------
# coefficient substitutions t -> mu t


@dataclass(frozen=True, eq=False)
class CoeffAutomorphism:
    """Substitution fixing every coefficient and sending t to mu*t.

    mu must have weight 0 and an invertible (unit monomial) constant term.
    Acting on a series of order n only the first n-1 coefficients of mu
    matter.
    """

    mu: TruncSeries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoeffAutomorphism):
            return NotImplemented
        return self.mu == other.mu


def coeff_aut(mu: TruncSeries) -> CoeffAutomorphism:
    if mu.weight != 0:
        raise ValueError("substitution factor must be unweighted")
    if mu.degree != 0 and not mu.is_zero():
        raise ValueError("substitution factor must have degree 0")
    lp_invert(mu.constant())
    return CoeffAutomorphism(mu)


def ca_identity(ch: Chart, n: int) -> CoeffAutomorphism:
    return coeff_aut(ts_one(ch, n))


def ca_apply(lam: CoeffAutomorphism, a: TruncSeries) -> TruncSeries:
    """Apply the substitution: sum c_p (mu t)^p."""
    if a.weight != 0:
        raise ValueError("substitutions act on unweighted series only")
    mu = ts_adjust(lam.mu, a.n)
    ch = a.chart.union(mu.chart)
    out = [lp_zero(ch, a.degree) for _ in range(a.n)]
    mu_pow = ts_one(ch, a.n)
    for p, c in enumerate(a.coeffs):
        if not c.is_zero():
            for j in range(a.n - p):
                out[p + j] = out[p + j] + c * mu_pow.coeffs[j]
        mu_pow = ts_mul(mu_pow, mu)
    return series(ch, out, a.degree, 0)


def ca_compose(outer: CoeffAutomorphism, inner: CoeffAutomorphism) -> CoeffAutomorphism:
    """The substitution 'apply inner, then outer': t -> outer(mu_inner) mu_outer t."""
    n = max(outer.mu.n, inner.mu.n)
    mu_o = ts_adjust(outer.mu, n)
    mu_i = ts_adjust(inner.mu, n)
    return coeff_aut(ts_mul(ca_apply(outer, mu_i), mu_o))


def ca_invert(lam: CoeffAutomorphism) -> CoeffAutomorphism:
    """Exact inverse: solve lam(mu_hat) * mu = 1 order by order."""
    mu = lam.mu
    target = ts_inv(mu)
    inv0 = lp_invert(mu.constant())
    hat = []
    for p in range(mu.n):
        # lam(sum_{q<p} hat_q t^q) contributes known terms at t^p;
        # the new unknown enters as hat_p * mu0^p.
        known = lp_zero(mu.chart, 0)
        mu_pow = ts_one(mu.chart, mu.n)
        for q in range(p):
            if not hat[q].is_zero() and p - q < mu.n:
                known = known + hat[q] * mu_pow.coeffs[p - q]
            mu_pow = ts_mul(mu_pow, ts_adjust(mu, mu.n))
        hat.append((target.coeffs[p] - known) * (inv0 ** p))
    return coeff_aut(series(mu.chart, hat, 0, 0))


# ---------------------------------------------------------------------------
# plain matrices over the Laurent layer


def m_zero(ch: Chart, r: int, degree: int = 0) -> Matrix:
    return tuple(tuple(lp_zero(ch, degree) for _ in range(r)) for _ in range(r))


def m_identity(ch: Chart, r: int) -> Matrix:
    return tuple(tuple(lp_const(ch, 1 if i == j else 0) for j in range(r))
                 for i in range(r))


def m_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def m_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def m_neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in ra) for ra in a)


def m_scale(f, a: Matrix) -> Matrix:
    return tuple(tuple(x * f for x in ra) for ra in a)


def m_mul(a: Matrix, b: Matrix) -> Matrix:
    r = len(a)
    out = []
    for i in range(r):
        row = []
        for j in range(r):
            acc = a[i][0] * b[0][j]
            for k in range(1, r):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def m_det(a: Matrix) -> LaurentElement:
    r = len(a)
    ch = a[0][0].chart
    acc = lp_zero(ch)
    first = True
    for perm in itertools.permutations(range(r)):
        sign = 1
        seen = list(perm)
        for i in range(r):
            for j in range(i + 1, r):
                if seen[i] > seen[j]:
                    sign = -sign
        term = a[0][perm[0]]
        for i in range(1, r):
            term = term * a[i][perm[i]]
        term = term * Fraction(sign)
        acc = term if first else acc + term
        first = False
    return acc


def _minor(a: Matrix, i: int, j: int) -> Matrix:
    return tuple(tuple(x for cj, x in enumerate(row) if cj != j)
                 for ri, row in enumerate(a) if ri != i)


def m_adjugate(a: Matrix) -> Matrix:
    r = len(a)
    if r == 1:
        return ((lp_const(a[0][0].chart, 1),),)
    out = []
    for i in range(r):
        row = []
        for j in range(r):
            cof = m_det(_minor(a, j, i)) * Fraction((-1) ** (i + j))
            row.append(cof)
        out.append(tuple(row))
    return tuple(out)


def m_inv(a: Matrix) -> Matrix:
    """Inverse of a matrix whose determinant is a unit monomial."""
    det = m_det(a)
    det_inv = lp_invert(det)
    return m_scale(det_inv, m_adjugate(a))


def m_eq(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


# ---------------------------------------------------------------------------
# matrices over the truncated ring


@dataclass(frozen=True, eq=False)
class TruncMatrix:
    """r x r matrix over R[t]/(t^n), stored as coefficient matrices."""

    chart: Chart
    n: int
    r: int
    coeffs: Tuple[Matrix, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncMatrix):
            return NotImplemented
        return (self.n == other.n and self.r == other.r
                and all(m_eq(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def coeff(self, p: int) -> Matrix:
        return self.coeffs[p]

    def constant(self) -> Matrix:
        return self.coeffs[0]


def trunc_matrix(ch: Chart, coeffs: Sequence[Matrix]) -> TruncMatrix:
    if not coeffs:
        raise ValueError("need order >= 1")
    r = len(coeffs[0])
    for mat in coeffs:
        if len(mat) != r or any(len(row) != r for row in mat):
            raise ValueError("ragged coefficient matrix")
        for row in mat:
            for x in row:
                ch = ch.union(x.chart)
    return TruncMatrix(ch, len(coeffs), r, tuple(coeffs))


def mat_identity(ch: Chart, n: int, r: int) -> TruncMatrix:
    return trunc_matrix(ch, [m_identity(ch, r)] + [m_zero(ch, r)
                                                   for _ in range(n - 1)])


def mat_add(a: TruncMatrix, b: TruncMatrix) -> TruncMatrix:
    if a.n != b.n:
        raise ValueError("order mismatch")
    return trunc_matrix(a.chart.union(b.chart),
                        [m_add(x, y) for x, y in zip(a.coeffs, b.coeffs)])


def mat_sub(a: TruncMatrix, b: TruncMatrix) -> TruncMatrix:
    if a.n != b.n:
        raise ValueError("order mismatch")
    return trunc_matrix(a.chart.union(b.chart),
                        [m_sub(x, y) for x, y in zip(a.coeffs, b.coeffs)])


def mat_mul(a: TruncMatrix, b: TruncMatrix) -> TruncMatrix:
    if a.n != b.n:
        raise ValueError("order mismatch")
    ch = a.chart.union(b.chart)
    out = [m_zero(ch, a.r) for _ in range(a.n)]
    for p, x in enumerate(a.coeffs):
        for q, y in enumerate(b.coeffs):
            if p + q >= a.n:
                continue
            out[p + q] = m_add(out[p + q], m_mul(x, y))
    return trunc_matrix(ch, out)


def mat_promote(a: TruncMatrix, k: int) -> TruncMatrix:
    if k < a.n:
        raise ValueError("promotion lowers the order")
    return trunc_matrix(a.chart, list(a.coeffs)
                        + [m_zero(a.chart, a.r) for _ in range(a.n, k)])


def mat_truncate(a: TruncMatrix, k: int) -> TruncMatrix:
    if not (1 <= k <= a.n):
        raise ValueError("bad truncation order")
    return trunc_matrix(a.chart, a.coeffs[:k])


def mat_inv(a: TruncMatrix) -> TruncMatrix:
    """Order-by-order inverse from the constant-part inverse."""
    b0 = m_inv(a.constant())
    out = [b0]
    for p in range(1, a.n):
        acc = m_zero(a.chart, a.r)
        for q in range(1, p + 1):
            acc = m_add(acc, m_mul(a.coeffs[q], out[p - q]))
        out.append(m_neg(m_mul(b0, acc)))
    return trunc_matrix(a.chart, out)


def mat_apply_ca(lam: CoeffAutomorphism, a: TruncMatrix) -> TruncMatrix:
    """Entrywise coefficient substitution."""
    mu = ts_adjust(lam.mu, a.n)
    ch = a.chart.union(mu.chart)
    out = [m_zero(ch, a.r) for _ in range(a.n)]
    mu_pow = ts_one(ch, a.n)
    for p, mat in enumerate(a.coeffs):
        for j in range(a.n - p):
            c = mu_pow.coeffs[j]
            if not c.is_zero():
                out[p + j] = m_add(out[p + j], m_scale(c, mat))
        mu_pow = ts_mul(mu_pow, mu)
    return trunc_matrix(ch, out)


def inv_lambda(a: TruncMatrix, lam: CoeffAutomorphism) -> TruncMatrix:
    """Transported inverse: substitute with the exact inverse of lam after
    inverting the matrix."""
    return mat_apply_ca(ca_invert(lam), mat_inv(a))


def gamma_lambda(a: TruncMatrix, lam: CoeffAutomorphism) -> Matrix:
    """Top-order correction matrix for the symmetric lift of a.

    Uses the top index n-1 of the given matrix; the output is t-free.
    """
    top = a.n - 1
    mu0 = lam.mu.constant()
    scalar = mu0 ** top
    inv_top = inv_lambda(a, lam).coeffs[top]
    g = m_sub(m_scale(scalar, m_mul(m_mul(a.constant(), inv_top), a.constant())),
              a.coeffs[top])
    return m_scale(Fraction(1, 2), g)


def ext_top(a: TruncMatrix, lam: CoeffAutomorphism) -> TruncMatrix:
    """Add the correction at the existing top order (same ring)."""
    g = gamma_lambda(a, lam)
    coeffs = list(a.coeffs)
    coeffs[-1] = m_add(coeffs[-1], g)
    return trunc_matrix(a.chart.union(lam.mu.chart), coeffs)


def ext_lambda(a: TruncMatrix, lam: CoeffAutomorphism) -> TruncMatrix:
    """Lift one order up: zero-pad, then apply the top correction."""
    return ext_top(mat_promote(a, a.n + 1), lam)


def mat_from_series(entries: Sequence[Sequence[TruncSeries]]) -> TruncMatrix:
    """Convenience: matrix-of-series to series-of-matrices."""
    r = len(entries)
    n = entries[0][0].n
    ch = entries[0][0].chart
    for row in entries:
        for s in row:
            if s.n != n:
                raise ValueError("order mismatch among entries")
            ch = ch.union(s.chart)
    coeffs = [tuple(tuple(entries[i][j].coeffs[p].on_chart(ch)
                          for j in range(r)) for i in range(r))
              for p in range(n)]
    return trunc_matrix(ch, coeffs)


def mat_entry(a: TruncMatrix, i: int, j: int) -> TruncSeries:
    return series(a.chart, [a.coeffs[p][i][j] for p in range(a.n)])


__all__ = [
    "CoeffAutomorphism", "Matrix", "NotDivisible", "TruncMatrix",
    "TruncSeries", "ca_apply", "ca_compose", "ca_identity", "ca_invert",
    "coeff_aut", "ext_lambda", "ext_top", "gamma_lambda", "inv_lambda",
    "m_add", "m_adjugate", "m_det", "m_eq", "m_identity", "m_inv", "m_mul",
    "m_neg", "m_scale", "m_sub", "m_zero", "mat_add", "mat_apply_ca",
    "mat_entry", "mat_from_series", "mat_identity", "mat_inv", "mat_mul",
    "mat_promote", "mat_sub", "mat_truncate", "series", "t_euler", "ts_add",
    "ts_adjust", "ts_const", "ts_divide_by_t", "ts_inv", "ts_mul", "ts_neg",
    "ts_one", "ts_pow", "ts_promote", "ts_scale", "ts_shift_up", "ts_sub",
    "ts_truncate", "ts_zero",
]
