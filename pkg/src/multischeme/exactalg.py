"""Exact arithmetic for homogeneous Laurent fractions on a projective chart cover.

An element is a finite sum of monomials c * x0^a0 ... xm^am with rational
coefficients, all of the same total degree (the homogeneity degree).  Negative
exponents are permitted only at the variable indices of the chart intersection
the element lives on (its "allowed" set).  This models regular functions,
twisted by a power of the hyperplane bundle, on an intersection of standard
affine charts of P^m.

  Exponent = tuple[int, ...]      one entry per variable x0..xm
  terms    = dict[Exponent, Fraction], zero coefficients never stored

On top of the scalar elements the module provides homogeneous one-forms
(component tuples satisfying the Euler relation sum x_q f_q = 0) and vector
fields (component tuples reduced modulo the Euler field), together with the
pairing, differential and field-application operators used everywhere else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple

Exponent = Tuple[int, ...]
Rational = Fraction


class ChartViolation(ValueError):
    """An operation would need a denominator outside the chart's allowed set."""


class NotAUnit(ValueError):
    """Inversion was requested for an element that is not a single monomial."""


@dataclass(frozen=True, order=True)
class Chart:
    """An intersection of standard charts of P^m: indices in `allowed` may
    appear with negative exponents."""

    m: int
    allowed: frozenset

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {self.m}")
        if not self.allowed:
            raise ValueError("a chart needs at least one allowed index")
        for q in self.allowed:
            if not (0 <= q <= self.m):
                raise ValueError(f"chart index {q} out of range for m={self.m}")

    @property
    def pivot(self) -> int:
        """Smallest allowed index; used as the Euler-reduction pivot."""
        return min(self.allowed)

    def union(self, other: "Chart") -> "Chart":
        if self.m != other.m:
            raise ValueError("charts live over different ambient spaces")
        if self.allowed >= other.allowed:
            return self
        if other.allowed >= self.allowed:
            return other
        return Chart(self.m, self.allowed | other.allowed)


def chart(m: int, indices: Iterable[int]) -> Chart:
    """Build the chart intersection U_{i0} ∩ ... for the given indices."""
    return Chart(m, frozenset(indices))


def full_chart(m: int) -> Chart:
    """The intersection of all standard charts (every denominator allowed)."""
    return Chart(m, frozenset(range(m + 1)))


@dataclass(frozen=True, eq=False)
class LaurentElement:
    """A homogeneous Laurent fraction on a chart intersection.

    Use the `laurent` / `mono` / `lp_const` factories; they canonicalize and
    validate.  Equality and hashing ignore the allowed set (an element equals
    its own restriction to a smaller intersection) but compare degree, except
    that all zero elements are equal to each other.
    """

    chart: Chart
    degree: int
    terms: Dict[Exponent, Fraction]

    def _key(self):
        items = tuple(sorted(self.terms.items()))
        if not items:
            return (self.chart.m, "zero")
        return (self.chart.m, self.degree, items)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentElement):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficient(self, exponent: Exponent) -> Fraction:
        return self.terms.get(tuple(exponent), Fraction(0))

    def sorted_terms(self) -> Tuple[Tuple[Exponent, Fraction], ...]:
        return tuple(sorted(self.terms.items()))

    def on_chart(self, target: Chart) -> "LaurentElement":
        """Re-declare the element on a larger (or equal) chart intersection."""
        return laurent(target, self.degree, self.terms)

    def __neg__(self) -> "LaurentElement":
        return LaurentElement(self.chart, self.degree,
                              {e: -c for e, c in self.terms.items()})

    def __add__(self, other: "LaurentElement") -> "LaurentElement":
        if not isinstance(other, LaurentElement):
            return NotImplemented
        ch = self.chart.union(other.chart)
        if self.is_zero():
            return other.on_chart(ch)
        if other.is_zero():
            return self.on_chart(ch)
        if self.degree != other.degree:
            raise ValueError(
                f"cannot add degrees {self.degree} and {other.degree}")
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, Fraction(0)) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentElement(ch, self.degree, out)

    def __sub__(self, other: "LaurentElement") -> "LaurentElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentElement):
            ch = self.chart.union(other.chart)
            out: Dict[Exponent, Fraction] = {}
            for ea, ca in self.terms.items():
                for eb, cb in other.terms.items():
                    e = tuple(a + b for a, b in zip(ea, eb))
                    s = out.get(e, Fraction(0)) + ca * cb
                    if s == 0:
                        out.pop(e, None)
                    else:
                        out[e] = s
            # sums of valid exponents stay valid, no re-validation needed
            return LaurentElement(ch, self.degree + other.degree, out)
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return LaurentElement(self.chart, self.degree, {})
            return LaurentElement(self.chart, self.degree,
                                  {e: k * c for e, k in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentElement":
        if not isinstance(power, int):
            return NotImplemented
        if power < 0:
            return lp_invert(self) ** (-power)
        out = lp_const(self.chart, 1)
        for _ in range(power):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"LaurentElement({laurent_text(self)!r}, deg={self.degree})"


def laurent(ch: Chart, degree: int,
            terms: Mapping[Exponent, Fraction | int]) -> LaurentElement:
    """Canonicalize and validate a term dictionary into an element."""
    out: Dict[Exponent, Fraction] = {}
    for e, c in terms.items():
        e = tuple(e)
        c = Fraction(c)
        if c == 0:
            continue
        if len(e) != ch.m + 1:
            raise ValueError(
                f"exponent tuple {e} does not match ambient dimension {ch.m}")
        if sum(e) != degree:
            raise ValueError(
                f"monomial {e} has degree {sum(e)}, element declares {degree}")
        for q, a in enumerate(e):
            if a < 0 and q not in ch.allowed:
                raise ChartViolation(
                    f"negative exponent at x{q} outside allowed set "
                    f"{sorted(ch.allowed)}")
        out[e] = out.get(e, Fraction(0)) + c
    out = {e: c for e, c in out.items() if c != 0}
    return LaurentElement(ch, degree, out)


def lp_zero(ch: Chart, degree: int = 0) -> LaurentElement:
    return LaurentElement(ch, degree, {})


def lp_const(ch: Chart, value: int | Fraction) -> LaurentElement:
    c = Fraction(value)
    if c == 0:
        return lp_zero(ch)
    return LaurentElement(ch, 0, {(0,) * (ch.m + 1): c})


def mono(ch: Chart, coeff: int | Fraction,
         exponents: Mapping[int, int]) -> LaurentElement:
    """Single monomial from a sparse index->exponent mapping."""
    e = [0] * (ch.m + 1)
    for q, a in exponents.items():
        e[q] += a
    return laurent(ch, sum(e), {tuple(e): Fraction(coeff)})


def var_ratio(ch: Chart, i: int, j: int, power: int = 1) -> LaurentElement:
    """The degree-zero monomial (x_i / x_j)^power."""
    return mono(ch, 1, {i: power, j: -power})


def lp_arith(a: LaurentElement, b: LaurentElement, op: str) -> LaurentElement:
    """Dispatch form of +, -, * used by the serialization layer."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def lp_invert(a: LaurentElement) -> LaurentElement:
    """Invert a monomial; the inverse must stay on the element's chart."""
    if not a.is_monomial():
        raise NotAUnit("only single monomials are invertible")
    (e, c), = a.terms.items()
    inv = tuple(-x for x in e)
    for q, x in enumerate(inv):
        if x < 0 and q not in a.chart.allowed:
            raise ChartViolation(
                f"inverse needs x{q} in the denominator, outside allowed set "
                f"{sorted(a.chart.allowed)}")
    return LaurentElement(a.chart, -a.degree, {inv: 1 / c})


def lp_divide(a: LaurentElement, b: LaurentElement) -> LaurentElement:
    """a / b for a monomial unit b."""
    return a * lp_invert(b)


def lp_partial(f: LaurentElement, q: int) -> LaurentElement:
    """Partial derivative with respect to x_q (degree drops by one)."""
    out: Dict[Exponent, Fraction] = {}
    for e, c in f.terms.items():
        if e[q] == 0:
            continue
        d = list(e)
        d[q] -= 1
        key = tuple(d)
        s = out.get(key, Fraction(0)) + c * e[q]
        if s == 0:
            out.pop(key, None)
        else:
            out[key] = s
    return LaurentElement(f.chart, f.degree - 1, out)


# ---------------------------------------------------------------------------
# homogeneous one-forms


@dataclass(frozen=True, eq=False)
class OneForm:
    """A twisted one-form: m+1 components of degree twist-1 with
    sum x_q f_q = 0 (Euler relation), checked exactly on construction."""

    chart: Chart
    twist: int
    components: Tuple[LaurentElement, ...]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OneForm):
            return NotImplemented
        return (self.twist == other.twist
                and self.components == other.components)

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.components)

    def __neg__(self) -> "OneForm":
        return OneForm(self.chart, self.twist,
                       tuple(-f for f in self.components))

    def __add__(self, other: "OneForm") -> "OneForm":
        if not isinstance(other, OneForm):
            return NotImplemented
        if self.twist != other.twist and not (self.is_zero() or other.is_zero()):
            raise ValueError("cannot add one-forms of different twists")
        twist = other.twist if self.is_zero() else self.twist
        ch = self.chart.union(other.chart)
        comps = tuple(a + b for a, b in zip(self.components, other.components))
        return OneForm(ch, twist, comps)

    def __sub__(self, other: "OneForm") -> "OneForm":
        return self + (-other)

    def __repr__(self) -> str:
        parts = ", ".join(laurent_text(f) for f in self.components)
        return f"OneForm(twist={self.twist}, [{parts}])"


def one_form(ch: Chart, twist: int,
             components: Sequence[LaurentElement]) -> OneForm:
    """Validate degrees and the Euler relation, then build the form."""
    comps = tuple(f.on_chart(ch) for f in components)
    if len(comps) != ch.m + 1:
        raise ValueError("need one component per variable")
    for f in comps:
        if not f.is_zero() and f.degree != twist - 1:
            raise ValueError(
                f"component degree {f.degree} incompatible with twist {twist}")
    euler = lp_zero(ch)
    for q, f in enumerate(comps):
        euler = euler + mono(ch, 1, {q: 1}) * f
    if not euler.is_zero():
        raise ValueError("components violate the Euler relation")
    return OneForm(ch, twist, comps)


def form_zero(ch: Chart, twist: int = 0) -> OneForm:
    return OneForm(ch, twist, tuple(lp_zero(ch, twist - 1)
                                    for _ in range(ch.m + 1)))


def form_scale(f: LaurentElement, w: OneForm) -> OneForm:
    """Multiply a form by a scalar element; the twist grows by its degree."""
    ch = f.chart.union(w.chart)
    return OneForm(ch, w.twist + f.degree,
                   tuple(f * c for c in w.components))


def differential(f: LaurentElement) -> OneForm:
    """Exterior differential of a degree-zero element, as a twist-0 form."""
    if f.degree != 0 and not f.is_zero():
        raise ValueError("the differential is only taken of degree-0 elements")
    comps = tuple(lp_partial(f, q) for q in range(f.chart.m + 1))
    return OneForm(f.chart, 0, comps)


def dlog(f: LaurentElement) -> OneForm:
    """Logarithmic differential df/f of a degree-zero monomial unit."""
    return form_scale(lp_invert(f), differential(f))


# ---------------------------------------------------------------------------
# homogeneous vector fields


def _euler_reduce(ch: Chart,
                  comps: Tuple[LaurentElement, ...]) -> Tuple[LaurentElement, ...]:
    """Normalize components modulo the Euler field: zero the pivot component."""
    p = ch.pivot
    g = comps[p]
    if g.is_zero():
        return comps
    h = g * lp_invert(mono(ch, 1, {p: 1}))
    return tuple(c - h * mono(ch, 1, {q: 1}) for q, c in enumerate(comps))


@dataclass(frozen=True, eq=False)
class VectorField:
    """A twisted vector field: m+1 components of degree twist+1, stored
    reduced modulo the Euler field (pivot component zero).

    Equality compares the reductions over the union chart, so a field equals
    its restriction and any Euler-shift of itself.
    """

    chart: Chart
    twist: int
    components: Tuple[LaurentElement, ...]

    def _reduced_on(self, ch: Chart) -> Tuple[LaurentElement, ...]:
        return _euler_reduce(ch, tuple(c.on_chart(ch) for c in self.components))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VectorField):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        if self.twist != other.twist:
            return False
        ch = self.chart.union(other.chart)
        return self._reduced_on(ch) == other._reduced_on(ch)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __neg__(self) -> "VectorField":
        return VectorField(self.chart, self.twist,
                           tuple(-c for c in self.components))

    def __add__(self, other: "VectorField") -> "VectorField":
        if not isinstance(other, VectorField):
            return NotImplemented
        if self.twist != other.twist and not (self.is_zero() or other.is_zero()):
            raise ValueError("cannot add fields of different twists")
        twist = other.twist if self.is_zero() else self.twist
        ch = self.chart.union(other.chart)
        comps = tuple(a + b for a, b in zip(self._reduced_on(ch),
                                            other._reduced_on(ch)))
        return field(ch, twist, comps)

    def __sub__(self, other: "VectorField") -> "VectorField":
        return self + (-other)

    def __repr__(self) -> str:
        parts = ", ".join(laurent_text(c) for c in self.components)
        return f"VectorField(twist={self.twist}, [{parts}])"


def field(ch: Chart, twist: int,
          components: Sequence[LaurentElement]) -> VectorField:
    """Validate degrees and store the Euler-reduced representative."""
    comps = tuple(c.on_chart(ch) for c in components)
    if len(comps) != ch.m + 1:
        raise ValueError("need one component per variable")
    for c in comps:
        if not c.is_zero() and c.degree != twist + 1:
            raise ValueError(
                f"component degree {c.degree} incompatible with twist {twist}")
    return VectorField(ch, twist, _euler_reduce(ch, comps))


def field_zero(ch: Chart, twist: int = 0) -> VectorField:
    return VectorField(ch, twist, tuple(lp_zero(ch, twist + 1)
                                        for _ in range(ch.m + 1)))


def field_basis(ch: Chart, coeff: LaurentElement, q: int,
                twist: int | None = None) -> VectorField:
    """The field coeff * d/dx_q; the twist is deg(coeff) - 1 unless given."""
    if twist is None:
        twist = coeff.degree - 1
    comps = [lp_zero(ch, twist + 1) for _ in range(ch.m + 1)]
    comps[q] = coeff
    return field(ch, twist, comps)


def field_scale(f: LaurentElement, v: VectorField) -> VectorField:
    ch = f.chart.union(v.chart)
    return field(ch, v.twist + f.degree,
                 tuple(f * c for c in v.components))


def field_on(v: VectorField, ch: Chart) -> VectorField:
    """Rewrite the canonical representative over another chart.

    Components are gauged with the target pivot on the union chart first, so
    denominators owed only to the old pivot choice cancel before the chart
    check; a residual violation then means the field really is singular there.
    """
    big = v.chart.union(ch)
    comps = tuple(c.on_chart(big) for c in v.components)
    g = comps[ch.pivot]
    if not g.is_zero():
        h = g * lp_invert(mono(big, 1, {ch.pivot: 1}))
        comps = tuple(c - h * mono(big, 1, {q: 1})
                      for q, c in enumerate(comps))
    return field(ch, v.twist, tuple(c.on_chart(ch) for c in comps))


def _apply_components(comps: Sequence[LaurentElement],
                      f: LaurentElement) -> LaurentElement:
    out = lp_zero(f.chart, 0)
    for q, g in enumerate(comps):
        if g.is_zero():
            continue
        out = out + g * lp_partial(f, q)
    return out


def apply_field(v: VectorField, f: LaurentElement) -> LaurentElement:
    """Apply the field as a derivation to a degree-zero element.

    Only degree zero is accepted: on degree-zero elements the result is
    independent of the Euler-reduction representative.
    """
    if f.degree != 0 and not f.is_zero():
        raise ValueError("fields act on degree-0 elements only")
    return _apply_components(v.components, f)


def contract(v: VectorField, w: OneForm) -> LaurentElement:
    """Pairing sum g_q f_q of a field with a one-form (twists add).

    Well defined on the reduction classes because the form kills the Euler
    field.
    """
    ch = v.chart.union(w.chart)
    out = lp_zero(ch, v.twist + w.twist)
    for g, f in zip(v.components, w.components):
        out = out + g * f
    return out


def bracket(v: VectorField, w: VectorField) -> VectorField:
    """Lie bracket [v, w]; twists add."""
    ch = v.chart.union(w.chart)
    vc = tuple(c.on_chart(ch) for c in v.components)
    wc = tuple(c.on_chart(ch) for c in w.components)
    comps = tuple(_apply_components(vc, wc[r]) - _apply_components(wc, vc[r])
                  for r in range(ch.m + 1))
    return field(ch, v.twist + w.twist, comps)


# ---------------------------------------------------------------------------
# canonical text form


def laurent_text(a: LaurentElement) -> str:
    """Canonical text: terms in ascending exponent order, every variable
    listed, rational coefficients as p/q."""
    if a.is_zero():
        return "0"
    parts = []
    for e, c in sorted(a.terms.items()):
        vars_part = " ".join(f"x{q}^{x}" for q, x in enumerate(e))
        parts.append(f"{c} * {vars_part}")
    return " + ".join(parts)


def parse_laurent(text: str, m: int,
                  ch: Chart | None = None) -> LaurentElement:
    """Parse the canonical text form back into an element.

    Without an explicit chart the minimal one (denominators actually used)
    is inferred.
    """
    text = text.strip()
    if text == "0":
        return lp_zero(ch if ch is not None else full_chart(m))
    terms: Dict[Exponent, Fraction] = {}
    degree = None
    for part in text.split(" + "):
        coeff_str, _, vars_part = part.partition(" * ")
        coeff = Fraction(coeff_str.strip())
        e = [0] * (m + 1)
        for token in vars_part.split():
            name, _, exp = token.partition("^")
            if not name.startswith("x"):
                raise ValueError(f"bad variable token {token!r}")
            e[int(name[1:])] = int(exp)
        e = tuple(e)
        if degree is None:
            degree = sum(e)
        terms[e] = terms.get(e, Fraction(0)) + coeff
    if ch is None:
        needed = {q for e in terms for q, x in enumerate(e) if x < 0}
        ch = Chart(m, frozenset(needed) if needed else frozenset({0}))
    return laurent(ch, degree if degree is not None else 0, terms)
