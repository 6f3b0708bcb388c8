"""Automorphism groups of trivial thickenings U x Spec k[t]/(t^n).

An element fixes the base pointwise modulo t: it is determined by the images
of the chart coordinate fractions u_q = x_q/x_base (series with constant term
u_q) together with the factor mu of t -> mu t (an invertible series of order
n-1).  Everything is exact: composition is substitution, inversion solves
order by order, and the exponential/logarithm pair identifies the subgroup
with mu = 1 + O(t) with the Lie algebra of derivations that are multiples
of t.

Closed-form composition, inversion and defect laws for orders 2 and 3 are
provided separately so the generic substitution engine can be checked
against them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Tuple

from .exactalg import (
    Chart,
    ChartViolation,
    LaurentElement,
    VectorField,
    apply_field,
    bracket,
    field,
    field_scale,
    lp_const,
    lp_invert,
    lp_partial,
    lp_zero,
    mono,
    var_ratio,
)
from .truncated import (
    TruncSeries,
    series,
    t_euler,
    ts_add,
    ts_const,
    ts_inv,
    ts_mul,
    ts_one,
    ts_promote,
    ts_scale,
    ts_sub,
    ts_truncate,
    ts_zero,
)


# ---------------------------------------------------------------------------
# group elements


@dataclass(frozen=True, eq=False)
class GnElement:
    """Automorphism of O(U)[t]/(t^n) inducing the identity modulo t.

    images maps every non-base index q to the series phi(x_q/x_base);
    mu (order n-1) is the cofactor of phi(t) = mu t.
    """

    chart: Chart
    n: int
    base: int
    images: Dict[int, TruncSeries]
    mu: TruncSeries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GnElement):
            return NotImplemented
        return (self.n == other.n and self.base == other.base
                and self.mu == other.mu
                and set(self.images) == set(other.images)
                and all(self.images[q] == other.images[q]
                        for q in self.images))

    def __repr__(self) -> str:
        return (f"GnElement(n={self.n}, base={self.base}, "
                f"images={self.images!r}, mu={self.mu!r})")


def gn_element(ch: Chart, n: int, images: Mapping[int, TruncSeries],
               mu: TruncSeries) -> GnElement:
    """Validate and build a group element over the given chart."""
    if n < 2:
        raise ValueError("automorphism order must be at least 2")
    base = ch.pivot
    expected = set(range(ch.m + 1)) - {base}
    if set(images) != expected:
        raise ValueError(f"images must cover indices {sorted(expected)}")
    imgs: Dict[int, TruncSeries] = {}
    for q, s in images.items():
        if s.n != n:
            raise ValueError(f"image of u_{q} has order {s.n}, wanted {n}")
        if s.constant() != var_ratio(ch, q, base):
            raise ValueError(
                f"image of u_{q} must have constant term x{q}/x{base}")
        imgs[q] = s
    if mu.n != n - 1:
        raise ValueError(f"t-cofactor has order {mu.n}, wanted {n - 1}")
    lp_invert(mu.constant())
    return GnElement(ch, n, base, imgs, mu)


def identity_gn(ch: Chart, n: int) -> GnElement:
    base = ch.pivot
    images = {q: ts_const(var_ratio(ch, q, base), n)
              for q in range(ch.m + 1) if q != base}
    return gn_element(ch, n, images, ts_one(ch, n - 1))


class _PowerCache:
    """Per-application cache of powers of the coordinate images."""

    def __init__(self, phi: GnElement):
        self.phi = phi
        self.pows: Dict[Tuple[int, int], TruncSeries] = {}

    def power(self, q: int, k: int) -> TruncSeries:
        key = (q, k)
        if key in self.pows:
            return self.pows[key]
        if k == 0:
            val = ts_one(self.phi.chart, self.phi.n)
        elif k > 0:
            val = ts_mul(self.power(q, k - 1), self.phi.images[q])
        else:
            if (q, -1) not in self.pows:
                self.pows[(q, -1)] = ts_inv(self.phi.images[q])
            if k == -1:
                val = self.pows[(q, -1)]
            else:
                val = ts_mul(self.power(q, k + 1), self.pows[(q, -1)])
        self.pows[key] = val
        return val


def apply_fn(phi: GnElement, f: LaurentElement,
             cache: _PowerCache | None = None) -> TruncSeries:
    """Apply the automorphism to a degree-0 element of the base ring."""
    if f.degree != 0 and not f.is_zero():
        raise ValueError("automorphisms act on degree-0 elements")
    if cache is None:
        cache = _PowerCache(phi)
    ch = phi.chart.union(f.chart)
    out = ts_zero(ch, phi.n)
    for e, c in f.sorted_terms():
        prod = ts_one(ch, phi.n)
        for q, a in enumerate(e):
            if q == phi.base or a == 0:
                continue
            prod = ts_mul(prod, cache.power(q, a))
        out = ts_add(out, ts_scale(c, prod))
    return out


def apply(phi: GnElement, s: TruncSeries) -> TruncSeries:
    """Apply the automorphism to a series: sum phi(c_p) (mu t)^p."""
    if s.n != phi.n:
        raise ValueError(f"series order {s.n} does not match element {phi.n}")
    if s.degree != 0 and not s.is_zero():
        raise ValueError("automorphisms act on degree-0 series")
    cache = _PowerCache(phi)
    n = phi.n
    mu_t = ts_promote(phi.mu, n)
    ch = phi.chart.union(s.chart)
    out = [lp_zero(ch, 0) for _ in range(n)]
    mu_pow = ts_one(ch, n)
    for p, c in enumerate(s.coeffs):
        if not c.is_zero():
            img = apply_fn(phi, c, cache)
            for j in range(n - p):
                prod = lp_zero(ch, 0)
                for i in range(j + 1):
                    prod = prod + img.coeffs[i] * mu_pow.coeffs[j - i]
                out[p + j] = out[p + j] + prod
        mu_pow = ts_mul(mu_pow, mu_t)
    return series(ch, out, 0, 0)


def compose(outer: GnElement, inner: GnElement) -> GnElement:
    """outer after inner (inner is applied first)."""
    if outer.n != inner.n:
        raise ValueError("order mismatch")
    if outer.base != inner.base:
        raise ValueError("elements use different base indices")
    n = outer.n
    ch = outer.chart.union(inner.chart)
    images = {q: apply(outer, s) for q, s in inner.images.items()}
    mu = ts_mul(ts_truncate(apply(outer, ts_promote(inner.mu, n)), n - 1),
                outer.mu)
    return gn_element(ch, n, images, mu)


def invert(phi: GnElement) -> GnElement:
    """Exact inverse, solved order by order."""
    n = phi.n
    ch = phi.chart
    base = phi.base
    mu0_inv = lp_invert(phi.mu.constant())
    images: Dict[int, TruncSeries] = {}
    for q in phi.images:
        u_q = var_ratio(ch, q, base)
        target = ts_const(u_q, n)
        coeffs = [u_q] + [lp_zero(ch, 0) for _ in range(n - 1)]
        for k in range(1, n):
            err = ts_sub(target, apply(phi, series(ch, coeffs, 0, 0)))
            coeffs[k] = err.coeffs[k] * (mu0_inv ** k)
        images[q] = series(ch, coeffs, 0, 0)
    mu_coeffs = [mu0_inv] + [lp_zero(ch, 0) for _ in range(n - 2)]
    mu_t = ts_promote(phi.mu, n)
    for k in range(1, n - 1):
        cur = series(ch, mu_coeffs, 0, 0)
        lhs = ts_truncate(ts_mul(apply(phi, ts_promote(cur, n)), mu_t), n - 1)
        err = ts_sub(ts_one(ch, n - 1), lhs)
        mu_coeffs[k] = err.coeffs[k] * (mu0_inv ** (k + 1))
    return gn_element(ch, n, images, series(ch, mu_coeffs, 0, 0))


def reduce(phi: GnElement, k: int) -> GnElement:
    """Induced automorphism one or more orders down (2 <= k <= n)."""
    if not (2 <= k <= phi.n):
        raise ValueError(f"cannot reduce order {phi.n} to {k}")
    images = {q: ts_truncate(s, k) for q, s in phi.images.items()}
    return gn_element(phi.chart, k, images, ts_truncate(phi.mu, k - 1))


def _series_on(ch: Chart, s: TruncSeries) -> TruncSeries:
    return series(ch, [c.on_chart(ch) for c in s.coeffs], s.degree, s.weight)


def gn_on_chart(phi: GnElement, ch: Chart) -> GnElement:
    """Rewrite phi over a finer chart, pivoting to that chart's base index.

    Composition requires a common base; restricting two overlap elements to
    their triple overlap with this rebase makes the cocycle test a plain
    compose/compare.
    """
    if not phi.chart.allowed <= ch.allowed:
        raise ChartViolation(
            f"target chart {sorted(ch.allowed)} does not refine "
            f"{sorted(phi.chart.allowed)}")
    new_base = ch.pivot
    moved = {q: _series_on(ch, s) for q, s in phi.images.items()}
    mu = _series_on(ch, phi.mu)
    if new_base == phi.base:
        return gn_element(ch, phi.n, moved, mu)
    pivot_inv = ts_inv(moved[new_base])
    images: Dict[int, TruncSeries] = {}
    for q in range(ch.m + 1):
        if q == new_base:
            continue
        if q == phi.base:
            images[q] = pivot_inv
        else:
            images[q] = ts_mul(moved[q], pivot_inv)
    return gn_element(ch, phi.n, images, mu)


# ---------------------------------------------------------------------------
# derivations that are multiples of t, exponential and logarithm


@dataclass(frozen=True, eq=False)
class DerivationRn:
    """Derivation of O(U)[t]/(t^n) lying in t * (fields + t d/dt part).

    comps are the m+1 coefficient series of the d/dx_q directions (degree 1,
    Euler-reduced: the pivot component is zero); b is the coefficient of
    t d/dt.  All constant terms vanish, and b is stored with zero top
    coefficient: its top order only ever multiplies powers t^n and above,
    so it cannot act.
    """

    chart: Chart
    n: int
    comps: Tuple[TruncSeries, ...]
    b: TruncSeries

    def _reduced_on(self, ch: Chart) -> Tuple[TruncSeries, ...]:
        comps = tuple(series(ch, [c.on_chart(ch) for c in s.coeffs], 1, 0)
                      for s in self.comps)
        return _euler_reduce_series(ch, comps)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DerivationRn):
            return NotImplemented
        if self.n != other.n:
            return False
        ch = self.chart.union(other.chart)
        return (self.b == other.b
                and self._reduced_on(ch) == other._reduced_on(ch))


def _euler_reduce_series(ch: Chart,
                         comps: Tuple[TruncSeries, ...]) -> Tuple[TruncSeries, ...]:
    p = ch.pivot
    h = comps[p]
    if h.is_zero():
        return comps
    h_div = ts_scale(lp_invert(mono(ch, 1, {p: 1})), h)
    return tuple(ts_sub(c, ts_mul(ts_const(mono(ch, 1, {q: 1}), h.n), h_div))
                 for q, c in enumerate(comps))


def derivation(ch: Chart, comps, b: TruncSeries) -> DerivationRn:
    comps = tuple(comps)
    if len(comps) != ch.m + 1:
        raise ValueError("need one coefficient series per variable")
    n = b.n
    if n < 2:
        raise ValueError("derivations here need order >= 2")
    for s in comps:
        if s.n != n:
            raise ValueError("order mismatch among coefficient series")
        if not s.is_zero() and s.degree != 1:
            raise ValueError("direction coefficients must have degree 1")
        if not s.constant().is_zero():
            raise ValueError("derivation must be a multiple of t")
    if not b.is_zero() and b.degree != 0:
        raise ValueError("the t d/dt coefficient must have degree 0")
    if not b.constant().is_zero():
        raise ValueError("derivation must be a multiple of t")
    comps = tuple(series(ch, [c.on_chart(ch) for c in s.coeffs], 1, 0)
                  for s in comps)
    b = ts_promote(ts_truncate(b, n - 1), n)
    return DerivationRn(ch, n, _euler_reduce_series(ch, comps),
                        series(ch, [c.on_chart(ch) for c in b.coeffs], 0, 0))


def der_zero(ch: Chart, n: int) -> DerivationRn:
    return derivation(ch, [ts_zero(ch, n, 1) for _ in range(ch.m + 1)],
                      ts_zero(ch, n))


def der_add(d1: DerivationRn, d2: DerivationRn) -> DerivationRn:
    if d1.n != d2.n:
        raise ValueError("order mismatch")
    ch = d1.chart.union(d2.chart)
    return derivation(ch, [ts_add(a, b) for a, b in zip(d1._reduced_on(ch),
                                                        d2._reduced_on(ch))],
                      ts_add(d1.b, d2.b))


def der_scale(f: TruncSeries, d: DerivationRn) -> DerivationRn:
    """Multiply by a degree-0 ring element (series in t)."""
    return derivation(d.chart.union(f.chart),
                      [ts_mul(f, c) for c in d.comps], ts_mul(f, d.b))


def _ts_partial(s: TruncSeries, q: int) -> TruncSeries:
    return series(s.chart, [lp_partial(c, q) for c in s.coeffs],
                  s.degree - 1, 0)


def der_apply(d: DerivationRn, s: TruncSeries) -> TruncSeries:
    """Act on a degree-0 series."""
    if s.n != d.n:
        raise ValueError("order mismatch")
    if s.degree != 0 and not s.is_zero():
        raise ValueError("derivations act on degree-0 series here")
    out = ts_mul(d.b, t_euler(s))
    for q, a in enumerate(d.comps):
        if not a.is_zero():
            out = ts_add(out, ts_mul(a, _ts_partial(s, q)))
    return out


def der_commutator(d1: DerivationRn, d2: DerivationRn) -> DerivationRn:
    """Commutator, reconstructed from its action on the chart fractions."""
    ch = d1.chart.union(d2.chart)
    n = d1.n
    base = ch.pivot
    x_b = mono(ch, 1, {base: 1})
    comps = []
    for q in range(ch.m + 1):
        if q == base:
            comps.append(ts_zero(ch, n, 1))
            continue
        u_q = ts_const(var_ratio(ch, q, base), n)
        v = ts_sub(der_apply(d1, der_apply(d2, u_q)),
                   der_apply(d2, der_apply(d1, u_q)))
        comps.append(ts_scale(x_b, v))
    b = ts_sub(der_apply(d1, d2.b), der_apply(d2, d1.b))
    return derivation(ch, comps, b)


def exp_der(d: DerivationRn) -> GnElement:
    """Exponential: the finite sum of iterates divided by factorials."""
    ch = d.chart
    n = d.n
    base = ch.pivot
    images: Dict[int, TruncSeries] = {}
    for q in range(ch.m + 1):
        if q == base:
            continue
        term = ts_const(var_ratio(ch, q, base), n)
        acc = term
        for k in range(1, n):
            term = ts_scale(Fraction(1, k), der_apply(d, term))
            acc = ts_add(acc, term)
        images[q] = acc
    # phi(t) = mu t with mu collected from the iterates of t:
    # D(c t) = (D(c) + c b) t, so the t-cofactors follow this recursion.
    cof = d.b
    mu_full = ts_add(ts_one(ch, n), cof)
    k = 1
    while k < n - 1:
        k += 1
        cof = ts_scale(Fraction(1, k),
                       ts_add(der_apply(d, cof), ts_mul(cof, d.b)))
        mu_full = ts_add(mu_full, cof)
    return gn_element(ch, n, images, ts_truncate(mu_full, n - 1))


def log_aut(phi: GnElement) -> DerivationRn:
    """Logarithm of an element with mu = 1 + O(t)."""
    ch = phi.chart
    n = phi.n
    base = phi.base
    if phi.mu.constant() != lp_const(ch, 1):
        raise ValueError("logarithm needs t-cofactor 1 + O(t)")
    x_b = mono(ch, 1, {base: 1})
    comps = []
    for q in range(ch.m + 1):
        if q == base:
            comps.append(ts_zero(ch, n, 1))
            continue
        u_q = ts_const(var_ratio(ch, q, base), n)
        term = ts_sub(apply(phi, u_q), u_q)
        acc = term
        for k in range(2, n):
            term = ts_sub(apply(phi, term), term)
            acc = ts_add(acc, ts_scale(Fraction((-1) ** (k - 1), k), term))
        comps.append(ts_scale(x_b, acc))
    # on t: iterate w -> [phi(w)]_{n-1} mu - w starting from mu - 1
    mu_t = ts_promote(phi.mu, n)

    def m_step(w: TruncSeries) -> TruncSeries:
        return ts_sub(ts_truncate(ts_mul(apply(phi, ts_promote(w, n)), mu_t),
                                  n - 1), w)

    term = ts_sub(phi.mu, ts_one(ch, n - 1))
    acc = term
    for k in range(2, n):
        term = m_step(term)
        acc = ts_add(acc, ts_scale(Fraction((-1) ** (k - 1), k), term))
    return derivation(ch, comps, ts_promote(acc, n))


# ---------------------------------------------------------------------------
# closed-form laws at orders 2 and 3


@dataclass(frozen=True)
class Phi2Data:
    """Order-2 element as (derivation, invertible factor)."""

    d: VectorField
    mu: LaurentElement


@dataclass(frozen=True)
class Phi3Data:
    """Order-3 element as (D, mu0 + mu1 t, correction derivation D1);
    the coefficient map at t^2 is (1/2) D^2 + D1."""

    d: VectorField
    mu0: LaurentElement
    mu1: LaurentElement
    d1: VectorField


def compose2_closed(outer: Phi2Data, inner: Phi2Data) -> Phi2Data:
    return Phi2Data(outer.d + field_scale(outer.mu, inner.d),
                    inner.mu * outer.mu)


def invert2_closed(a: Phi2Data) -> Phi2Data:
    inv = lp_invert(a.mu)
    return Phi2Data(field_scale(-inv, a.d), inv)


def compose3_closed(outer: Phi3Data, inner: Phi3Data) -> Phi3Data:
    """Composite outer after inner, by the closed order-3 law."""
    d, mu0, mu1, d1 = inner.d, inner.mu0, inner.mu1, inner.d1
    dp, mu0p, mu1p, d1p = outer.d, outer.mu0, outer.mu1, outer.d1
    d_out = dp + field_scale(mu0p, d)
    mu0_out = mu0 * mu0p
    mu1_out = mu0p * apply_field(dp, mu0) + mu0p * mu0p * mu1 + mu0 * mu1p
    d1_out = d1p + field_scale(mu0p * mu0p, d1) + field_scale(mu1p, d) \
        - field_scale(apply_field(d_out, mu0p) * Fraction(1, 2), d) \
        + field_scale(mu0p * Fraction(1, 2), bracket(dp, d))
    return Phi3Data(d_out, mu0_out, mu1_out, d1_out)


def invert3_closed(a: Phi3Data) -> Phi3Data:
    inv = lp_invert(a.mu0)
    d_hat = field_scale(-inv, a.d)
    mu0_hat = inv
    mu1_hat = (apply_field(a.d, a.mu0) - a.mu1) * inv * inv * inv
    d1_hat = field_scale(-(inv * inv), a.d1) + field_scale(
        (a.mu1 - apply_field(a.d, a.mu0) * Fraction(1, 2)) * inv * inv * inv,
        a.d)
    return Phi3Data(d_hat, mu0_hat, mu1_hat, d1_hat)


def psi_canonical(d: VectorField, mu0: LaurentElement,
                  mu1: LaurentElement) -> Phi3Data:
    """Canonical order-3 extension of an order-2 element: the correction
    derivation is (mu1 - D(mu0)) / (2 mu0) * D."""
    coeff = (mu1 - apply_field(d, mu0)) * lp_invert(mu0) * Fraction(1, 2)
    return Phi3Data(d, mu0, mu1, field_scale(coeff, d))


def triple_defect(dp: VectorField, mu0p: LaurentElement, mu1p: LaurentElement,
                  d: VectorField, mu0: LaurentElement,
                  mu1: LaurentElement) -> VectorField:
    """Correction derivation left over when canonical order-3 extensions of
    (dp, mu0p + mu1p t) after (d, mu0 + mu1 t) are composed and the canonical
    extension of the composite is divided out."""
    inv0 = lp_invert(mu0)
    ratio = mu0p * inv0
    coeff = apply_field(d, mu0p) + ratio * apply_field(d, mu0) - ratio * mu1
    total = field_scale(mu1p, d) + field_scale(coeff, dp) \
        + field_scale(mu0p, bracket(dp, d))
    return field_scale(lp_const(total.chart, Fraction(1, 2)), total)


def phi3_element(a: Phi3Data, ch: Chart | None = None) -> GnElement:
    """Realize order-3 data as a group element by Taylor substitution."""
    if ch is None:
        ch = a.d.chart.union(a.d1.chart).union(a.mu0.chart).union(a.mu1.chart)
    base = ch.pivot
    images = {}
    for q in range(ch.m + 1):
        if q == base:
            continue
        u_q = var_ratio(ch, q, base)
        first = apply_field(a.d, u_q)
        second = apply_field(a.d, first) * Fraction(1, 2) \
            + apply_field(a.d1, u_q)
        images[q] = series(ch, [u_q, first, second], 0, 0)
    mu = series(ch, [a.mu0, a.mu1], 0, 0)
    return gn_element(ch, 3, images, mu)


def phi2_element(a: Phi2Data, ch: Chart | None = None) -> GnElement:
    if ch is None:
        ch = a.d.chart.union(a.mu.chart)
    base = ch.pivot
    images = {}
    for q in range(ch.m + 1):
        if q == base:
            continue
        u_q = var_ratio(ch, q, base)
        images[q] = series(ch, [u_q, apply_field(a.d, u_q)], 0, 0)
    return gn_element(ch, 2, images, ts_const(a.mu, 1))


def gn_to_phi3(phi: GnElement) -> Phi3Data:
    """Extract closed-form data from an order-3 element whose coefficient
    maps are polynomial in the chart fractions."""
    if phi.n != 3:
        raise ValueError("order-3 elements only")
    ch = phi.chart
    base = phi.base
    x_b = mono(ch, 1, {base: 1})
    d_comps = [lp_zero(ch, 1) for _ in range(ch.m + 1)]
    for q, s in phi.images.items():
        d_comps[q] = x_b * s.coeffs[1]
    d = field(ch, 0, d_comps)
    d1_comps = [lp_zero(ch, 1) for _ in range(ch.m + 1)]
    for q, s in phi.images.items():
        u_q = var_ratio(ch, q, base)
        extra = s.coeffs[2] - apply_field(d, apply_field(d, u_q)) * Fraction(1, 2)
        d1_comps[q] = x_b * extra
    d1 = field(ch, 0, d1_comps)
    return Phi3Data(d, phi.mu.coeffs[0], phi.mu.coeffs[1], d1)


def gn_to_phi2(phi: GnElement) -> Phi2Data:
    if phi.n != 2:
        raise ValueError("order-2 elements only")
    ch = phi.chart
    x_b = mono(ch, 1, {phi.base: 1})
    comps = [lp_zero(ch, 1) for _ in range(ch.m + 1)]
    for q, s in phi.images.items():
        comps[q] = x_b * s.coeffs[1]
    return Phi2Data(field(ch, 0, comps), phi.mu.constant())


# ---------------------------------------------------------------------------
# pairs (automorphism, unit) at the next order


@dataclass(frozen=True, eq=False)
class HnElement:
    """Pair (phi, u): order-n automorphism and invertible order-n series.

    Composition is (phi', u')(phi, u) = (phi' phi, u' phi'(u)); inversion is
    (phi^-1, phi^-1(1/u)).  Structural equality is exact; hn_equiv compares
    u only modulo t^(n-1).
    """

    phi: GnElement
    u: TruncSeries

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HnElement):
            return NotImplemented
        return self.phi == other.phi and self.u == other.u


def hn_element(phi: GnElement, u: TruncSeries) -> HnElement:
    if u.n != phi.n:
        raise ValueError("unit order must match the automorphism order")
    if u.degree != 0:
        raise ValueError("unit must have degree 0")
    lp_invert(u.constant())
    return HnElement(phi, u)


def hn_identity(ch: Chart, n: int) -> HnElement:
    return hn_element(identity_gn(ch, n), ts_one(ch, n))


def hn_compose(left: HnElement, right: HnElement) -> HnElement:
    return hn_element(compose(left.phi, right.phi),
                      ts_mul(left.u, apply(left.phi, right.u)))


def hn_invert(a: HnElement) -> HnElement:
    phi_inv = invert(a.phi)
    return hn_element(phi_inv, apply(phi_inv, ts_inv(a.u)))


def hn_equiv(a: HnElement, b: HnElement) -> bool:
    """Equality in the quotient that forgets the top coefficient of u."""
    if a.phi != b.phi or a.u.n != b.u.n:
        return False
    n = a.u.n
    if n == 1:
        return True
    return ts_truncate(a.u, n - 1) == ts_truncate(b.u, n - 1)


def hn_from_gn(phi: GnElement) -> HnElement:
    """Forget one order: an order-(n+1) element gives (restriction, mu)."""
    return hn_element(reduce(phi, phi.n - 1), phi.mu)
