"""Multiple thickenings of projective space glued from trivial pieces.

A multiplicity-n structure on the standard cover is a family of overlap
automorphisms of U_ij x Spec k[t]/(t^n) subject to the nonabelian cocycle
condition; the constant t-cofactors form a unit cocycle, the line cocycle of
the conormal bundle.  This module holds the cocycle containers and their
validation, the obstruction calculus (pushing a line bundle one order up, the
closed-form degree-2 defect of pair cocycles, and the connecting map at a
split structure), and the actions of infinitesimal automorphisms and scale
reparametrizations on extension classes.

Trivialized overlap values are homogenized by dividing by powers of the
splitting monomials of the line cocycle; twisted cocycle and coboundary
questions then reduce to the componentwise solver in cech.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Sequence, Tuple

from .autgroup import (
    GnElement,
    Phi2Data,
    apply,
    compose,
    gn_element,
    gn_on_chart,
    hn_compose,
    hn_element,
    identity_gn,
    phi2_element,
    reduce,
    triple_defect,
)
from .cech import (
    TwistedCochain,
    class_is_zero,
    is_cocycle,
    nabla0,
    twisted_cochain,
)
from .exactalg import (
    Chart,
    LaurentElement,
    OneForm,
    VectorField,
    apply_field,
    chart,
    contract,
    field_basis,
    field_scale,
    laurent_text,
    lp_const,
    lp_invert,
    lp_zero,
    mono,
    parse_laurent,
    var_ratio,
)
from .truncated import (
    TruncMatrix,
    TruncSeries,
    coeff_aut,
    ext_lambda,
    mat_entry,
    mat_promote,
    series,
    ts_const,
    ts_inv,
    ts_mul,
)

Pair = Tuple[int, int]
Triple = Tuple[int, int, int]


def _pairs(m: int) -> List[Pair]:
    return [(i, j) for i in range(m + 1) for j in range(i + 1, m + 1)]


def _triples(m: int) -> List[Triple]:
    return list(combinations(range(m + 1), 3))


def _check_pair_keys(family: Mapping[Pair, object], m: int, what: str) -> None:
    if set(family) != set(_pairs(m)):
        raise ValueError(f"{what} must be indexed by all pairs i < j <= {m}")


# ---------------------------------------------------------------------------
# gluing cocycles


@dataclass(frozen=True, eq=False)
class SchemeCocycle:
    """Gluing data of a multiplicity-n structure on the standard cover.

    transitions[(i, j)] for i < j is the overlap automorphism written in the
    i-trivialization over the pair chart; the reverse overlap is its inverse.
    """

    m: int
    n: int
    transitions: Dict[Pair, GnElement]


def scheme_cocycle(m: int, n: int,
                   transitions: Mapping[Pair, GnElement]) -> SchemeCocycle:
    """Validate shapes and build the container (no cocycle test here)."""
    if m < 1:
        raise ValueError(f"cover dimension must be >= 1, got {m}")
    if n < 2:
        raise ValueError("multiplicity must be at least 2")
    _check_pair_keys(transitions, m, "transitions")
    out: Dict[Pair, GnElement] = {}
    for (i, j), g in transitions.items():
        if g.n != n:
            raise ValueError(f"transition ({i},{j}) has order {g.n}, wanted {n}")
        if g.chart != chart(m, {i, j}):
            raise ValueError(
                f"transition ({i},{j}) must live on the pair chart")
        out[(i, j)] = g
    return SchemeCocycle(m, n, out)


def l_cocycle(s: SchemeCocycle) -> Dict[Pair, LaurentElement]:
    """Constant t-cofactors: the unit cocycle of the conormal line bundle."""
    return {p: g.mu.constant() for p, g in s.transitions.items()}


@dataclass(frozen=True)
class ValidationReport:
    cocycle_ok: bool
    failures: Tuple[Triple, ...]
    l_cocycle: Dict[Pair, LaurentElement]
    l_cocycle_ok: bool


def validate_scheme(s: SchemeCocycle) -> ValidationReport:
    """Check the nonabelian cocycle condition on every triple overlap and
    the multiplicativity of the extracted line cocycle."""
    failures: List[Triple] = []
    for (i, j, k) in _triples(s.m):
        tch = chart(s.m, {i, j, k})
        lhs = compose(gn_on_chart(s.transitions[(i, j)], tch),
                      gn_on_chart(s.transitions[(j, k)], tch))
        if lhs != gn_on_chart(s.transitions[(i, k)], tch):
            failures.append((i, j, k))
    alpha = l_cocycle(s)
    unit_ok = all(alpha[(i, k)] == alpha[(i, j)] * alpha[(j, k)]
                  for (i, j, k) in _triples(s.m))
    return ValidationReport(not failures, tuple(failures), alpha, unit_ok)


@dataclass(frozen=True, eq=False)
class PairCocycle:
    """A gluing cocycle together with the unit series defining an ideal-line
    bundle on it: the overlap data (phi_ij, u_ij) with phi_ij(t) = u_ij t."""

    scheme: SchemeCocycle
    u: Dict[Pair, TruncSeries]


def pair_cocycle(scheme: SchemeCocycle,
                 u: Mapping[Pair, TruncSeries]) -> PairCocycle:
    _check_pair_keys(u, scheme.m, "unit family")
    out: Dict[Pair, TruncSeries] = {}
    for p, s in u.items():
        if s.n != scheme.n:
            raise ValueError(f"unit series {p} has order {s.n}, "
                             f"wanted {scheme.n}")
        lp_invert(s.constant())
        out[p] = s
    return PairCocycle(scheme, out)


@dataclass(frozen=True)
class PairReport:
    cocycle_ok: bool
    failures: Tuple[Triple, ...]


def validate_pair(p: PairCocycle) -> PairReport:
    """Exact pair-cocycle test (phi_ik, u_ik) = (phi_ij, u_ij)(phi_jk, u_jk)
    on every triple overlap."""
    s = p.scheme
    failures: List[Triple] = []
    for (i, j, k) in _triples(s.m):
        tch = chart(s.m, {i, j, k})
        left = hn_element(gn_on_chart(s.transitions[(i, j)], tch), p.u[(i, j)])
        right = hn_element(gn_on_chart(s.transitions[(j, k)], tch),
                           p.u[(j, k)])
        got = hn_compose(left, right)
        want = hn_element(gn_on_chart(s.transitions[(i, k)], tch),
                          p.u[(i, k)])
        if got != want:
            failures.append((i, j, k))
    return PairReport(not failures, tuple(failures))


# ---------------------------------------------------------------------------
# obstruction classes


@dataclass(frozen=True, eq=False)
class ObstructionClass:
    """A degree-2 obstruction family together with how its lifts were chosen.

    The cochain is stored homogenized, so zeroness of the class is decided by
    the untwisted coboundary solver.
    """

    cochain: TwistedCochain
    provenance: str

    def is_zero(self) -> bool:
        return class_is_zero(self.cochain)


def obstruction_class(cochain: TwistedCochain,
                      provenance: str) -> ObstructionClass:
    if cochain.q != 2:
        raise ValueError("obstruction families live in simplicial degree 2")
    if not is_cocycle(cochain):
        raise ValueError("obstruction family fails the cocycle test")
    return ObstructionClass(cochain, provenance)


def split_unit_cocycle(m: int, alpha: Mapping[Pair, LaurentElement],
                       ) -> Tuple[int, List[Fraction]]:
    """Recognize a monomial unit cocycle as s_i/s_j for splitting monomials
    s_i = c_i x_i^w, normalized by c_0 = 1.

    Returns (w, [c_0, ..., c_m]); raises if the family is not of this shape
    (the degree of the split line bundle is -w).
    """
    _check_pair_keys(alpha, m, "unit cocycle")

    def single_term(a: LaurentElement, p: Pair):
        if a.degree != 0 or len(a.terms) != 1:
            raise ValueError(f"unit cocycle entry {p} is not a monomial unit")
        ((e, c),) = a.terms.items()
        return e, c

    e01, _ = single_term(alpha[(0, 1)], (0, 1))
    w = e01[0]
    consts = [Fraction(1)]
    for j in range(1, m + 1):
        e, c = single_term(alpha[(0, j)], (0, j))
        expected = tuple(w if q == 0 else -w if q == j else 0
                         for q in range(m + 1))
        if e != expected:
            raise ValueError(f"unit cocycle entry (0,{j}) does not split")
        consts.append(Fraction(1) / c)
    for (i, j) in _pairs(m):
        want = var_ratio(chart(m, {i, j}), i, j, w) * (consts[i] / consts[j])
        if alpha[(i, j)] != want:
            raise ValueError(f"unit cocycle fails to split at ({i},{j})")
    return w, consts


def _splitter_power(consts: Sequence[Fraction], w: int, i: int,
                    power: int, tch: Chart) -> LaurentElement:
    """(c_i x_i^w)^(-power) as a monomial on the given chart."""
    return mono(tch, Fraction(1) / consts[i] ** power, {i: -power * w})


# ---------------------------------------------------------------------------
# ready-made structures on the plane cover


def trivial_scheme(m: int, n: int,
                   nu: Mapping[Pair, LaurentElement]) -> SchemeCocycle:
    """Identity gluing twisted by a unit cocycle: the split multiplicity-n
    structure whose line cocycle is nu."""
    _check_pair_keys(nu, m, "line cocycle")
    for (i, j, k) in _triples(m):
        if nu[(i, k)] != nu[(i, j)] * nu[(j, k)]:
            raise ValueError(f"line cocycle fails at ({i},{j},{k})")
    transitions = {}
    for (i, j) in _pairs(m):
        ch = chart(m, {i, j})
        transitions[(i, j)] = gn_element(
            ch, n, identity_gn(ch, n).images, ts_const(nu[(i, j)], n - 1))
    return scheme_cocycle(m, n, transitions)


def plane_rotation_fields() -> Dict[Pair, VectorField]:
    """The cyclic overlap fields on the plane cover: (x_i/x_j) times the
    coordinate field moving the third variable, written homogeneously."""
    ch01 = chart(2, {0, 1})
    ch02 = chart(2, {0, 2})
    ch12 = chart(2, {1, 2})
    return {
        (0, 1): field_basis(ch01, mono(ch01, 1, {0: 2, 1: -1}), 2),
        (1, 2): field_basis(ch12, mono(ch12, 1, {1: 2, 2: -1}), 0),
        (0, 2): field_basis(ch02, mono(ch02, -1, {0: 2, 2: -1}), 1),
    }


def double_plane_scheme() -> SchemeCocycle:
    """The nontrivial double structure on the plane cover: first-order
    gluing by the rotation fields, line cocycle of degree -3."""
    d = plane_rotation_fields()
    transitions = {}
    for (i, j) in _pairs(2):
        ch = chart(2, {i, j})
        transitions[(i, j)] = phi2_element(
            Phi2Data(d[(i, j)], var_ratio(ch, i, j, 3)), ch)
    return scheme_cocycle(2, 2, transitions)


def quadruple_plane_scheme() -> SchemeCocycle:
    """A multiplicity-4 structure on the plane cover whose order-3
    truncation is split: the rotation fields act only at the top order,
    line cocycle of degree -1."""
    d = plane_rotation_fields()
    transitions = {}
    for (i, j) in _pairs(2):
        ch = chart(2, {i, j})
        images = {}
        for q in range(3):
            if q == i:
                continue
            u_q = var_ratio(ch, q, i)
            zero = lp_zero(ch, 0)
            images[q] = series(
                ch, [u_q, zero, zero, apply_field(d[(i, j)], u_q)], 0, 0)
        transitions[(i, j)] = gn_element(
            ch, 4, images, ts_const(var_ratio(ch, i, j, 1), 3))
    return scheme_cocycle(2, 4, transitions)


# ---------------------------------------------------------------------------
# obstruction maps


def delta2_obstruction(d: Mapping[Pair, VectorField],
                       alpha: Mapping[Pair, LaurentElement],
                       beta: Mapping[Pair, LaurentElement],
                       ) -> ObstructionClass:
    """Closed-form obstruction to extending a pair cocycle one order up.

    The input is a valid order-2 pair cocycle in trivialized form: overlap
    fields d, unit constants alpha and t-coefficients beta of the unit
    series.  The output family of fields is homogenized against the
    splitting of alpha, one order-2 defect per triple overlap.
    """
    keys = set(d)
    if not keys:
        raise ValueError("empty overlap family")
    m = max(max(p) for p in keys)
    for fam, what in ((d, "field family"), (alpha, "unit cocycle"),
                      (beta, "t-coefficient family")):
        _check_pair_keys(fam, m, what)
    w, consts = split_unit_cocycle(m, alpha)
    for p in _pairs(m):
        if beta[p].degree != 0 or d[p].twist != 0:
            raise ValueError(f"overlap data at {p} is not trivialized")
    for (i, j, k) in _triples(m):
        if d[(i, k)] != d[(i, j)] + field_scale(alpha[(i, j)], d[(j, k)]):
            raise ValueError(f"field cocycle fails at ({i},{j},{k})")
        want = (alpha[(i, j)] * apply_field(d[(i, j)], alpha[(j, k)])
                + alpha[(i, j)] * alpha[(i, j)] * beta[(j, k)]
                + beta[(i, j)] * alpha[(j, k)])
        if beta[(i, k)] != want:
            raise ValueError(f"unit-series cocycle fails at ({i},{j},{k})")
    values = {}
    for (i, j, k) in _triples(m):
        rho = triple_defect(d[(i, j)], alpha[(i, j)], beta[(i, j)],
                            d[(j, k)], alpha[(j, k)], beta[(j, k)])
        tch = chart(m, {i, j, k})
        values[(i, j, k)] = field_scale(
            _splitter_power(consts, w, i, 2, tch), rho)
    cochain = twisted_cochain(m, 2, "field", -2 * w, values)
    return obstruction_class(cochain, "closed-form order-2 defect")


def line_bundle_extension_obstruction(theta: Mapping[Pair, TruncMatrix],
                                      s: SchemeCocycle, n: int,
                                      lift: str = "canonical",
                                      ) -> ObstructionClass:
    """Obstruction to extending a line bundle from the order-n truncation
    of s to s itself.

    theta is the bundle cocycle at order n in the scheme's trivializations;
    its entries are lifted one order up (canonically with the top correction
    driven by the scheme's t-cofactor, or by plain zero padding) and the top
    coefficient of the lifted triple product is the obstruction family,
    homogenized against the splitting of the line cocycle.
    """
    if n < 1:
        raise ValueError("extension order must be positive")
    if s.n != n + 1:
        raise ValueError(
            f"scheme multiplicity {s.n} does not extend order {n}")
    m = s.m
    _check_pair_keys(theta, m, "bundle cocycle")
    entries: Dict[Pair, TruncSeries] = {}
    for p, mat in theta.items():
        if mat.r != 1 or mat.n != n:
            raise ValueError(f"bundle cocycle at {p} must be 1 x 1 of "
                             f"order {n}")
        e = mat_entry(mat, 0, 0)
        lp_invert(e.constant())
        entries[p] = e
    for (i, j, k) in _triples(m):
        tch = chart(m, {i, j, k})
        if n == 1:
            twisted = entries[(j, k)]
        else:
            twisted = apply(gn_on_chart(reduce(s.transitions[(i, j)], n),
                                        tch),
                            entries[(j, k)])
        prod = ts_mul(ts_mul(entries[(i, j)], twisted),
                      ts_inv(entries[(i, k)]))
        if any(not c.is_zero() for c in prod.coeffs[1:]) \
                or prod.constant() != lp_const(prod.chart, 1):
            raise ValueError(
                f"input is not a bundle cocycle at order {n}: ({i},{j},{k})")
    w, consts = split_unit_cocycle(m, l_cocycle(s))
    lifted: Dict[Pair, TruncSeries] = {}
    for p, mat in theta.items():
        if lift == "canonical":
            lam = coeff_aut(s.transitions[p].mu)
            big = ext_lambda(mat, lam)
        elif lift == "plain":
            big = mat_promote(mat, n + 1)
        else:
            raise ValueError(f"unknown lift strategy {lift!r}")
        lifted[p] = mat_entry(big, 0, 0)
    values = {}
    for (i, j, k) in _triples(m):
        tch = chart(m, {i, j, k})
        mover = gn_on_chart(s.transitions[(i, j)], tch)
        c = ts_mul(ts_mul(lifted[(i, j)], apply(mover, lifted[(j, k)])),
                   ts_inv(lifted[(i, k)]))
        if any(not x.is_zero() for x in c.coeffs[1:n]) \
                or c.constant() != lp_const(c.chart, 1):
            raise ValueError(
                f"lifted product deviates below the top order at "
                f"({i},{j},{k})")
        values[(i, j, k)] = (c.coeffs[n]
                            * _splitter_power(consts, w, i, n, tch))
    cochain = twisted_cochain(m, 2, "fun", -n * w, values)
    tag = ("canonical top-corrected lifts" if lift == "canonical"
           else "plain zero-padded lifts")
    return obstruction_class(cochain, tag)


def delta_trivial(nu: Mapping[Pair, LaurentElement],
                  mu: Mapping[Pair, VectorField],
                  p: int) -> ObstructionClass:
    """Connecting map at a split structure with extension family mu, applied
    to the degree-p line cocycle on the underlying space.

    mu is given homogenized (so its cocycle condition is plain additivity);
    the value on a triple contracts mu on the leading overlap with the
    logarithmic differential of the cocycle on the trailing one.
    """
    keys = set(nu)
    if not keys:
        raise ValueError("empty line cocycle")
    m = max(max(q) for q in keys)
    w, _ = split_unit_cocycle(m, nu)
    _check_pair_keys(mu, m, "extension family")
    twists = {v.twist for v in mu.values()}
    if len(twists) != 1:
        raise ValueError("extension family must have one twist")
    tau = twists.pop()
    if w != 0 and tau % w != 0:
        raise ValueError(
            f"extension twist {tau} incompatible with line degree {-w}")
    for (i, j, k) in _triples(m):
        if mu[(i, k)] != mu[(i, j)] + mu[(j, k)]:
            raise ValueError(f"extension family fails at ({i},{j},{k})")
    alpha = {(i, j): var_ratio(chart(m, {i, j}), i, j, -p)
             for (i, j) in _pairs(m)}
    nab = nabla0(m, alpha)
    values = {(i, j, k): contract(mu[(i, j)], nab.value((j, k)))
              for (i, j, k) in _triples(m)}
    cochain = twisted_cochain(m, 2, "fun", tau, values)
    return obstruction_class(cochain, "connecting map at a split structure")


# ---------------------------------------------------------------------------
# actions on extension classes


CochainPair = Tuple[Mapping[Pair, LaurentElement], Mapping[Pair, VectorField]]


def act_aut0(chi: Mapping[int, VectorField], pair: CochainPair,
             nu: Mapping[Pair, LaurentElement],
             ) -> Tuple[Dict[Pair, LaurentElement], Dict[Pair, VectorField]]:
    """Action of a global overlap field family on an extension pair.

    chi is a family of chart fields with chi_i = nu_ij chi_j (a global
    section of the twisted tangent sheaf); eta picks up the derivative of
    the line cocycle and eps the matching field correction.  The coboundary
    commutator terms are omitted.
    """
    eta, eps = pair
    keys = set(nu)
    if not keys:
        raise ValueError("empty line cocycle")
    m = max(max(q) for q in keys)
    _check_pair_keys(nu, m, "line cocycle")
    _check_pair_keys(eta, m, "function cochain")
    _check_pair_keys(eps, m, "field cochain")
    if set(chi) != set(range(m + 1)):
        raise ValueError("need one overlap field per chart")
    for (i, j, k) in _triples(m):
        if nu[(i, k)] != nu[(i, j)] * nu[(j, k)]:
            raise ValueError(f"line cocycle fails at ({i},{j},{k})")
    for (i, j) in _pairs(m):
        if chi[i] != field_scale(nu[(i, j)], chi[j]):
            raise ValueError(f"field family is not global across ({i},{j})")
    eta2: Dict[Pair, LaurentElement] = {}
    eps2: Dict[Pair, VectorField] = {}
    for (i, j) in _pairs(m):
        dn = apply_field(chi[j], nu[(i, j)])
        eta2[(i, j)] = eta[(i, j)] + dn
        coeff = nu[(i, j)] * (eta[(i, j)] + dn * Fraction(1, 2))
        eps2[(i, j)] = eps[(i, j)] - field_scale(coeff, chi[j])
    return eta2, eps2


def act_cstar(lam, pair: CochainPair, n: int,
              ) -> Tuple[Dict[Pair, LaurentElement], Dict[Pair, VectorField]]:
    """Scale reparametrization t -> lam t on extension pairs at base
    multiplicity n: weights n-1 on the function part and n on the field
    part."""
    if n < 2:
        raise ValueError("multiplicity must be at least 2")
    lam = Fraction(lam)
    if lam == 0:
        raise ValueError("the scale factor must be invertible")
    eta, eps = pair
    eta2 = {p: v * lam ** (n - 1) for p, v in eta.items()}
    eps2 = {p: field_scale(lp_const(v.chart, lam ** n), v)
            for p, v in eps.items()}
    return eta2, eps2


def upsilon1(omega: Tuple[Sequence[OneForm], Sequence[LaurentElement]],
             mu: VectorField, alpha: LaurentElement, eps: LaurentElement,
             n: int) -> LaurentElement:
    """Leading coefficient of the relative-form pairing on a split
    structure: n times (mu paired with the constant form part plus the
    constant dt-coefficient times alpha times eps); at order 1 only the
    pairing with the form remains."""
    if n < 1:
        raise ValueError("order must be positive")
    b, c = omega
    if not b:
        raise ValueError("form data needs a constant part")
    head = contract(mu, b[0])
    if n == 1:
        return head
    if not c:
        raise ValueError("form data needs a dt-coefficient")
    return (head + c[0] * alpha * eps) * n


# ---------------------------------------------------------------------------
# wire format


def _series_to_json(s: TruncSeries) -> dict:
    return {"degree": s.degree, "weight": s.weight,
            "coeffs": [laurent_text(c) for c in s.coeffs]}


def _series_from_json(doc: dict, m: int, ch: Chart) -> TruncSeries:
    coeffs = [parse_laurent(t, m, ch) for t in doc["coeffs"]]
    return series(ch, coeffs, int(doc["degree"]), int(doc["weight"]))


def gn_to_json(phi: GnElement) -> dict:
    return {"n": phi.n, "chart": sorted(phi.chart.allowed), "base": phi.base,
            "images": {str(q): _series_to_json(s)
                       for q, s in sorted(phi.images.items())},
            "mu": _series_to_json(phi.mu)}


def gn_from_json(doc: dict, m: int) -> GnElement:
    ch = Chart(m, frozenset(int(q) for q in doc["chart"]))
    if int(doc["base"]) != ch.pivot:
        raise ValueError("base index must be the chart pivot")
    images = {int(q): _series_from_json(d, m, ch)
              for q, d in doc["images"].items()}
    return gn_element(ch, int(doc["n"]), images,
                      _series_from_json(doc["mu"], m, ch))


def scheme_to_json(s: SchemeCocycle) -> dict:
    alpha = l_cocycle(s)
    return {"m": s.m, "n": s.n,
            "L_cocycle": {f"{i},{j}": laurent_text(alpha[(i, j)])
                          for (i, j) in _pairs(s.m)},
            "transitions": {f"{i},{j}": gn_to_json(s.transitions[(i, j)])
                            for (i, j) in _pairs(s.m)}}


def _parse_key(key: str, width: int) -> Tuple[int, ...]:
    parts = tuple(int(x) for x in key.split(","))
    if len(parts) != width:
        raise ValueError(f"bad index key {key!r}")
    return parts


def scheme_from_json(doc: dict) -> SchemeCocycle:
    m = int(doc["m"])
    n = int(doc["n"])
    transitions = {_parse_key(key, 2): gn_from_json(sub, m)
                   for key, sub in doc["transitions"].items()}
    s = scheme_cocycle(m, n, transitions)
    alpha = l_cocycle(s)
    for key, text in doc.get("L_cocycle", {}).items():
        p = _parse_key(key, 2)
        if alpha[p] != parse_laurent(text, m):
            raise ValueError(f"stated line cocycle disagrees with the "
                             f"transitions at {p}")
    return s


def cochain_to_json(c: TwistedCochain) -> dict:
    """Cochain wire form; function values as Laurent text, field values as
    component text lists under a kind marker."""
    doc = {"m": c.m, "k": c.twist, "q": c.q, "values": {}}
    if c.kind != "fun":
        doc["kind"] = c.kind
    for simplex in sorted(c.values):
        key = ",".join(str(i) for i in simplex)
        v = c.values[simplex]
        if c.kind == "fun":
            doc["values"][key] = laurent_text(v)
        elif c.kind == "field":
            doc["values"][key] = [laurent_text(comp)
                                  for comp in v.components]
        else:
            raise ValueError(f"no wire form for kind {c.kind!r}")
    return doc


def obstruction_to_json(o: ObstructionClass) -> dict:
    zero = o.is_zero()
    witness = None
    if not zero and o.cochain.kind == "fun":
        witness = sorted(laurent_text(v) for v in o.cochain.values.values())
    return {"class": cochain_to_json(o.cochain), "is_zero": zero,
            "witness": witness, "provenance": o.provenance}
