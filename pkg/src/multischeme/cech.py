"""Cech complexes over the standard affine cover of P^m.

Cochains assign to each simplex (a strictly increasing tuple of chart
indices) a value that is globally homogeneous: a Laurent fraction for line
bundle coefficients, a one-form, or a vector field, with the twist carried
by the homogeneity degree.  Restriction maps are then literal inclusions,
the differential is the plain alternating face sum, and exactness questions
reduce to small exact linear systems over the rationals, one per monomial.

The monomial decomposition is what makes the solver complete: the
differential never changes a monomial, so a cochain is a coboundary exactly
when every monomial block is solvable on its own.  Vector-field blocks also
carry one gauge unknown per equation simplex, because field values are only
defined modulo the Euler field; one-form blocks instead carry the Euler
relation as extra constraint rows.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Mapping, Tuple

from .exactalg import (
    Chart,
    LaurentElement,
    OneForm,
    VectorField,
    chart,
    differential,
    dlog,
    field,
    field_on,
    field_zero,
    form_scale,
    form_zero,
    lp_invert,
    lp_zero,
    one_form,
)
from .truncated import m_adjugate, m_det

Simplex = Tuple[int, ...]


def simplices(m: int, q: int):
    """All q-simplices of the cover nerve: (q+1)-element index tuples."""
    return itertools.combinations(range(m + 1), q + 1)


def simplex_chart(m: int, s: Simplex) -> Chart:
    return chart(m, s)


def _zero_value(kind: str, ch: Chart, twist: int):
    if kind == "fun":
        return lp_zero(ch, twist)
    if kind == "form":
        return form_zero(ch, twist)
    return field_zero(ch, twist)


def _normalize_value(kind: str, ch: Chart, twist: int, value):
    if kind == "fun":
        if not isinstance(value, LaurentElement):
            raise TypeError("scalar cochains take Laurent values")
        if not value.is_zero() and value.degree != twist:
            raise ValueError(
                f"value degree {value.degree} does not match twist {twist}")
        return value.on_chart(ch)
    if kind == "form":
        if not isinstance(value, OneForm):
            raise TypeError("form cochains take one-form values")
        if not value.is_zero() and value.twist != twist:
            raise ValueError(
                f"form twist {value.twist} does not match cochain {twist}")
        return one_form(ch, twist, [c.on_chart(ch) for c in value.components])
    if kind == "field":
        if not isinstance(value, VectorField):
            raise TypeError("field cochains take vector-field values")
        if not value.is_zero() and value.twist != twist:
            raise ValueError(
                f"field twist {value.twist} does not match cochain {twist}")
        return field_on(value, ch)
    raise ValueError(f"unknown cochain kind {kind!r}")


@dataclass(frozen=True, eq=False)
class TwistedCochain:
    """A q-cochain on the cover nerve with values of one homogeneous kind.

    kind is "fun" (Laurent values of degree equal to the twist), "form"
    (one-forms) or "field" (vector fields, taken modulo the Euler field).
    Missing simplices read as zero.
    """

    m: int
    q: int
    kind: str
    twist: int
    values: Dict[Simplex, object]

    def value(self, s: Simplex):
        s = tuple(s)
        if s in self.values:
            return self.values[s]
        return _zero_value(self.kind, simplex_chart(self.m, s), self.twist)

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwistedCochain):
            return NotImplemented
        if (self.m, self.q, self.kind) != (other.m, other.q, other.kind):
            return False
        keys = set(self.values) | set(other.values)
        return all(self.value(s) == other.value(s) for s in keys)


def twisted_cochain(m: int, q: int, kind: str, twist: int,
                    values: Mapping[Simplex, object]) -> TwistedCochain:
    if not (0 <= q <= m):
        raise ValueError(f"simplicial degree {q} out of range for m={m}")
    out: Dict[Simplex, object] = {}
    for s, v in values.items():
        s = tuple(s)
        if len(s) != q + 1 or list(s) != sorted(set(s)):
            raise ValueError(f"bad {q}-simplex {s}")
        if not (0 <= s[0] and s[-1] <= m):
            raise ValueError(f"simplex {s} out of range for m={m}")
        v = _normalize_value(kind, simplex_chart(m, s), twist, v)
        if not v.is_zero():
            out[s] = v
    return TwistedCochain(m, q, kind, twist, out)


def cech_delta(c: TwistedCochain) -> TwistedCochain:
    """Alternating face sum; raises the simplicial degree by one."""
    if c.q >= c.m:
        return TwistedCochain(c.m, c.q, c.kind, c.twist, {})
    out: Dict[Simplex, object] = {}
    hit = set()
    for t in c.values:
        rest = [v for v in range(c.m + 1) if v not in t]
        for v in rest:
            hit.add(tuple(sorted(t + (v,))))
    for s in sorted(hit):
        ch = simplex_chart(c.m, s)
        acc = _zero_value(c.kind, ch, c.twist)
        for j in range(len(s)):
            face = s[:j] + s[j + 1:]
            val = c.values.get(face)
            if val is None:
                continue
            acc = acc + val if j % 2 == 0 else acc - val
        if not acc.is_zero():
            out[s] = _normalize_value(c.kind, ch, c.twist, acc)
    return TwistedCochain(c.m, c.q + 1, c.kind, c.twist, out)


def is_cocycle(c: TwistedCochain) -> bool:
    return cech_delta(c).is_zero()


def cohomology_dim_line_bundle(m: int, k: int, q: int) -> int:
    """h^q(P^m, O(k)): nonzero only at the bottom and the top."""
    if q < 0 or q > m:
        return 0
    if q == 0:
        return comb(m + k, m) if k >= 0 else 0
    if q == m:
        return comb(-k - 1, m) if -k - 1 >= m else 0
    return 0


# ---------------------------------------------------------------------------
# exact coboundary solver


def _consistent(rows: List[Tuple[Dict[object, Fraction], Fraction]]) -> bool:
    """Does the sparse linear system have a solution?  Exact elimination."""
    pivots: Dict[object, Dict[object, Fraction]] = {}
    rhs: Dict[object, Fraction] = {}
    for coeffs, b in rows:
        coeffs = dict(coeffs)
        while True:
            coeffs = {k: v for k, v in coeffs.items() if v != 0}
            hit = next((k for k in coeffs if k in pivots), None)
            if hit is None:
                break
            f = coeffs.pop(hit)
            for k, v in pivots[hit].items():
                coeffs[k] = coeffs.get(k, Fraction(0)) - f * v
            b = b - f * rhs[hit]
        if not coeffs:
            if b != 0:
                return False
            continue
        var = next(iter(coeffs))
        lead = coeffs.pop(var)
        pivots[var] = {k: v / lead for k, v in coeffs.items()}
        rhs[var] = b / lead
    return True


def _neg_set(e: Tuple[int, ...]) -> frozenset:
    return frozenset(q for q, a in enumerate(e) if a < 0)


def _shift(e: Tuple[int, ...], r: int, delta: int) -> Tuple[int, ...]:
    out = list(e)
    out[r] += delta
    return tuple(out)


def _fun_rows(c: TwistedCochain, e: Tuple[int, ...]):
    neg = _neg_set(e)
    rows = []
    for s in simplices(c.m, c.q):
        if not neg <= set(s):
            continue
        coeffs: Dict[object, Fraction] = {}
        for j in range(len(s)):
            t = s[:j] + s[j + 1:]
            if neg <= set(t):
                sign = Fraction(1 if j % 2 == 0 else -1)
                coeffs[t] = coeffs.get(t, Fraction(0)) + sign
        rhs = c.value(s).coefficient(e)
        rows.append((coeffs, rhs))
    return rows


def _field_rows(c: TwistedCochain, base: Tuple[int, ...]):
    # base is the exponent of the would-be coefficient function; component r
    # carries the monomial base + e_r, and each equation simplex owns one
    # gauge unknown, the Euler multiple invisible in the stored values.
    rows = []
    for s in simplices(c.m, c.q):
        sset = set(s)
        gauge_ok = _neg_set(base) <= sset
        val = c.value(s)
        for r in range(c.m + 1):
            e = _shift(base, r, 1)
            if not _neg_set(e) <= sset:
                continue
            coeffs: Dict[object, Fraction] = {}
            for j in range(len(s)):
                t = s[:j] + s[j + 1:]
                if _neg_set(e) <= set(t):
                    sign = Fraction(1 if j % 2 == 0 else -1)
                    key = (t, r)
                    coeffs[key] = coeffs.get(key, Fraction(0)) + sign
            if gauge_ok:
                coeffs[("gauge", s)] = Fraction(-1)
            rows.append((coeffs, val.components[r].coefficient(e)))
    return rows


def _form_rows(c: TwistedCochain, base: Tuple[int, ...]):
    # base is the exponent at which the Euler relation for the unknown
    # (q-1)-cochain is read off; component r carries base - e_r.
    rows = []
    for s in simplices(c.m, c.q):
        sset = set(s)
        val = c.value(s)
        for r in range(c.m + 1):
            e = _shift(base, r, -1)
            if not _neg_set(e) <= sset:
                continue
            coeffs: Dict[object, Fraction] = {}
            for j in range(len(s)):
                t = s[:j] + s[j + 1:]
                if _neg_set(e) <= set(t):
                    sign = Fraction(1 if j % 2 == 0 else -1)
                    key = (t, r)
                    coeffs[key] = coeffs.get(key, Fraction(0)) + sign
            rows.append((coeffs, val.components[r].coefficient(e)))
    for t in simplices(c.m, c.q - 1):
        coeffs = {}
        for r in range(c.m + 1):
            e = _shift(base, r, -1)
            if _neg_set(e) <= set(t):
                coeffs[(t, r)] = Fraction(1)
        if coeffs:
            rows.append((coeffs, Fraction(0)))
    return rows


def class_is_zero(c: TwistedCochain) -> bool:
    """Is the cocycle a coboundary?  Exact, monomial block by block."""
    if c.q < 1:
        raise ValueError("coboundary questions need simplicial degree >= 1")
    if not is_cocycle(c):
        raise ValueError("input is not a cocycle")
    blocks = set()
    if c.kind == "fun":
        for v in c.values.values():
            blocks.update(v.terms)
        return all(_consistent(_fun_rows(c, e)) for e in blocks)
    if c.kind == "field":
        for v in c.values.values():
            for r, comp in enumerate(v.components):
                for e in comp.terms:
                    blocks.add(_shift(e, r, -1))
        return all(_consistent(_field_rows(c, b)) for b in blocks)
    if c.kind == "form":
        for v in c.values.values():
            for r, comp in enumerate(v.components):
                for e in comp.terms:
                    blocks.add(_shift(e, r, 1))
        return all(_consistent(_form_rows(c, b)) for b in blocks)
    raise ValueError(f"unknown cochain kind {c.kind!r}")


# ---------------------------------------------------------------------------
# classes attached to transition data


def nabla0(m: int, alpha: Mapping[Tuple[int, int], LaurentElement]) -> TwistedCochain:
    """Logarithmic differentials of a line-bundle cocycle, as a 1-cochain
    of one-forms (its class is the first-order atlas obstruction)."""
    values = {tuple(s): dlog(a) for s, a in alpha.items()}
    return twisted_cochain(m, 1, "form", 0, values)


def trace_T(mat) -> OneForm:
    """Trace of M^-1 dM for a matrix of degree-0 elements; equals the
    logarithmic differential of the determinant."""
    det_inv = lp_invert(m_det(mat))
    adj = m_adjugate(mat)
    r = len(mat)
    out = form_zero(mat[0][0].chart, 0)
    for i in range(r):
        for j in range(r):
            if adj[i][j].is_zero():
                continue
            out = out + form_scale(adj[i][j] * det_inv,
                                   differential(mat[j][i]))
    return out
