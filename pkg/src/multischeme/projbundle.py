"""Dimension counts for thickenings of a ruled surface over a curve.

The surface is the projectivization of a rank-2 bundle E on a smooth curve
of genus g, and the thickenings are taken along powers of a line bundle
pulled back from a degree-d divisor and twisted by -k along the fibers.
Everything here is exact integer and rational arithmetic on (rank, degree)
data: Euler characteristics by Riemann-Roch, symmetric-power bookkeeping,
the vanishing thresholds that make the first cohomology groups compute the
extension spaces, and the resulting closed-form dimension counts.

Each closed form is re-derived internally from the Euler-characteristic
route and the two values are compared on every call; a disagreement or a
rational that fails to collapse to an integer raises
ArithmeticInconsistency, which no reachable parameter set should trigger.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple


class ArithmeticInconsistency(ValueError):
    """Exact arithmetic produced a non-integer or two routes disagreed."""


VANISHING_WARNING = (
    "vanishing hypotheses fail for these parameters; the counts are formal "
    "Euler characteristics, not cohomology dimensions")


# ---------------------------------------------------------------------------
# (rank, degree) data on the base curve


@dataclass(frozen=True)
class ChernData:
    """Rank and degree of a vector bundle on the curve."""

    rank: int
    degree: int


def chern(rank: int, degree: int) -> ChernData:
    if rank < 1:
        raise ValueError(f"rank must be positive, got {rank}")
    return ChernData(rank, degree)


def line_bundle(degree: int) -> ChernData:
    return ChernData(1, degree)


def canonical_bundle(g: int) -> ChernData:
    return ChernData(1, 2 * g - 2)


def determinant(c: ChernData) -> ChernData:
    return ChernData(1, c.degree)


def chi(c: ChernData, g: int) -> int:
    """Euler characteristic on a genus-g curve: degree + rank(1 - g)."""
    return c.degree + c.rank * (1 - g)


def tensor(a: ChernData, b: ChernData) -> ChernData:
    return ChernData(a.rank * b.rank,
                     a.rank * b.degree + b.rank * a.degree)


def sym(m: int, c: ChernData) -> ChernData:
    """Symmetric power of a rank-2 bundle: rank m+1, degree m(m+1)/2 deg."""
    if c.rank != 2:
        raise ValueError("symmetric-power bookkeeping is rank-2 only")
    if m < 0:
        raise ValueError("negative symmetric powers have no bundle meaning")
    return ChernData(m + 1, (m * (m + 1) // 2) * c.degree)


# rank/degree pairs as plain tuples, so the formal continuation of the
# symmetric-power rules to m = -1, -2 (rank 0 and -1) stays available for
# the degenerate edge of the family count without weakening ChernData

RawChern = Tuple[int, int]


def _tensor_raw(a: RawChern, b: RawChern) -> RawChern:
    return (a[0] * b[0], a[0] * b[1] + b[0] * a[1])


def _sym_raw(m: int, deg_e: int) -> RawChern:
    return (m + 1, (m * (m + 1) // 2) * deg_e)


def _chi_raw(c: RawChern, g: int) -> int:
    return c[1] + c[0] * (1 - g)


# ---------------------------------------------------------------------------
# parameter sets

CASES = ("semistable-deg0", "semistable-deg-1", "unstable")


@dataclass(frozen=True)
class BundleParams:
    """One point of the dimension-count grid.

    g is the genus, degE the degree of the rank-2 bundle (0 or -1), case its
    stability type, eps1 the degree of the destabilizing sub-line-bundle in
    the unstable case, k the fiber twist, d the divisor degree on the curve,
    n the thickening order.
    """

    g: int
    degE: int
    case: str
    eps1: int
    k: int
    d: int
    n: int


def bundle_params(g: int, degE: int, case: str, k: int, d: int, n: int,
                  eps1: int = 0) -> BundleParams:
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    if k < 1 or n < 1:
        raise ValueError(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    if case == "semistable-deg0":
        if degE != 0:
            raise ValueError("semistable-deg0 requires degE = 0")
    elif case == "semistable-deg-1":
        if degE != -1:
            raise ValueError("semistable-deg-1 requires degE = -1")
    elif case == "unstable":
        if degE not in (0, -1):
            raise ValueError("unstable case is stated for degE in {0, -1}")
        if eps1 <= degE:
            raise ValueError(
                "destabilizing degree must exceed degE in the unstable case")
    else:
        raise ValueError(f"unknown stability case {case!r}")
    return BundleParams(g, degE, case, eps1, k, d, n)


# ---------------------------------------------------------------------------
# vanishing thresholds


def gamma0(case: str, k: int, n: int, p: int, degF: int,
           eps1: int = 0) -> Fraction:
    """Twist threshold below which the relevant global sections vanish."""
    if n < 1 or k < 1:
        raise ValueError(f"need k >= 1 and n >= 1, got k={k}, n={n}")
    if case == "semistable-deg0":
        return Fraction(-degF, n)
    if case == "semistable-deg-1":
        return Fraction(k, 2) + Fraction(-degF, n) + Fraction(p, 2 * n)
    if case == "unstable":
        return Fraction(-degF, n) - Fraction(p * eps1, n) - k * eps1
    raise ValueError(f"unknown stability case {case!r}")


def vanishing(case: str, p: BundleParams, which: str) -> bool:
    """Second-cohomology vanishing conditions for the extension groups.

    which = "all-orders" asks for the conditions that kill the line-power
    obstruction groups at every order and the twisted-tangent ones from
    order two up; "first-order" for the one killing the twisted-tangent
    group at order one.  Boundaries are copied per case, strictness
    included, from the source inequalities; they are not reconciled.
    """
    if case not in CASES:
        raise ValueError(f"unknown stability case {case!r}")
    if case != p.case:
        raise ValueError(
            f"case tag {case!r} disagrees with parameter set ({p.case!r})")
    g, d = p.g, Fraction(p.d)
    half_k = Fraction(p.k, 2)
    if which == "all-orders":
        if case == "semistable-deg0":
            if g == 0:
                return d >= 0
            if g == 1:
                return d > 0
            return d > 2 * g - 2
        if case == "semistable-deg-1":
            if g == 0:
                return d >= half_k
            if g == 1:
                return d > half_k
            return d > half_k + 2 * g - 2
        base = p.k * (p.eps1 - p.degE)
        if g <= 1:
            return d >= base
        return d >= base + 2 * g - 2
    if which == "first-order":
        if case == "semistable-deg0":
            if g == 0:
                return d > -2
            if g == 1:
                return d > 0
            return d > 4 * g - 4
        if case == "semistable-deg-1":
            if g == 0:
                return d > half_k - 2
            if g == 1:
                return d > half_k
            return d > half_k + 4 * g - 4
        base = p.k * (p.eps1 - p.degE) + p.degE - 2 * p.eps1
        if g == 0:
            return d > base - 2
        if g == 1:
            return d > base
        return d > base + 4 * g - 4
    raise ValueError(f"unknown condition set {which!r}")


def _warn_unless_reliable(p: BundleParams, need: str) -> None:
    if not vanishing(p.case, p, need):
        warnings.warn(VANISHING_WARNING, RuntimeWarning, stacklevel=3)


# ---------------------------------------------------------------------------
# dimension formulas, each with its Euler-characteristic re-derivation


def _as_int(v: Fraction, what: str) -> int:
    if v.denominator != 1:
        raise ArithmeticInconsistency(
            f"{what} evaluates to the non-integer {v}")
    return int(v)


def _h1_tangent_chi(g: int, degE: int, k: int, d: int, n: int) -> int:
    e = (2, degE)
    det_e = (1, degE)
    d_n = (1, n * d)
    w_dual = (1, 2 - 2 * g)
    t1 = _tensor_raw(_tensor_raw(_tensor_raw(d_n, e),
                                 _sym_raw(k * n - 3, degE)), det_e)
    t2 = _tensor_raw(_tensor_raw(d_n, _sym_raw(k * n - 2, degE)), det_e)
    t3 = _tensor_raw(_tensor_raw(_tensor_raw(d_n, w_dual),
                                 _sym_raw(k * n - 2, degE)), det_e)
    return _chi_raw(t1, g) - _chi_raw(t2, g) + _chi_raw(t3, g)


def _h1_tangent_closed(g: int, degE: int, k: int, d: int, n: int) -> int:
    return (n * (k * n - 2) * (2 * d + k * degE)
            + 2 * (1 - g) * (2 * k * n - 3))


def _h1_line_chi(g: int, degE: int, k: int, d: int, n: int) -> int:
    d_n = (1, n * d)
    det_e = (1, degE)
    t = _tensor_raw(_tensor_raw(d_n, _sym_raw(k * n - 2, degE)), det_e)
    return _chi_raw(t, g)


def _h1_line_closed(g: int, degE: int, k: int, d: int, n: int) -> Fraction:
    return (k * n - 1) * (Fraction(k * n, 2) * degE + n * d + 1 - g)


def _checked(closed: Fraction, via_chi: int, what: str) -> int:
    v = _as_int(closed, what)
    if v != via_chi:
        raise ArithmeticInconsistency(
            f"{what}: closed form {v} disagrees with the "
            f"Euler-characteristic route {via_chi}")
    return v


def h1_TL(p: BundleParams) -> int:
    """First cohomology of the twisted tangent sheaf at order n: the number
    of directions in which a given order-n thickening extends."""
    _warn_unless_reliable(p, "first-order" if p.n == 1 else "all-orders")
    return _checked(
        Fraction(_h1_tangent_closed(p.g, p.degE, p.k, p.d, p.n)),
        _h1_tangent_chi(p.g, p.degE, p.k, p.d, p.n), "h1_TL")


def h1_L(p: BundleParams) -> int:
    """First cohomology of the n-th power of the conormal line bundle: the
    choices of ideal-sheaf extension at order n."""
    _warn_unless_reliable(p, "all-orders")
    return _checked(_h1_line_closed(p.g, p.degE, p.k, p.d, p.n),
                    _h1_line_chi(p.g, p.degE, p.k, p.d, p.n), "h1_L")


def family_dim(p: BundleParams) -> int:
    """Dimension of the family of order-(n+1) extensions of an order-n
    thickening: the tangent count at n plus the line count at n-1."""
    _warn_unless_reliable(p, "first-order" if p.n == 1 else "all-orders")
    closed = (Fraction(_h1_tangent_closed(p.g, p.degE, p.k, p.d, p.n))
              + _h1_line_closed(p.g, p.degE, p.k, p.d, p.n - 1))
    via_chi = (_h1_tangent_chi(p.g, p.degE, p.k, p.d, p.n)
               + _h1_line_chi(p.g, p.degE, p.k, p.d, p.n - 1))
    return _checked(closed, via_chi, "family_dim")


def table_row(p: BundleParams) -> Dict[str, object]:
    """One emitter row: parameters, the three counts, both vanishing flags."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        row: Dict[str, object] = {
            "g": p.g, "degE": p.degE, "case": p.case, "eps1": p.eps1,
            "k": p.k, "d": p.d, "n": p.n,
            "h1_TL": h1_TL(p), "h1_L": h1_L(p), "family_dim": family_dim(p),
            "vanishing_all_orders": vanishing(p.case, p, "all-orders"),
            "vanishing_first_order": vanishing(p.case, p, "first-order"),
        }
    return row
