"""Coverings and liftings of a generalized crossed module, and the functors between them.

A covering of (A, B, alpha) is a crossed module morphism <f, g> into it whose
A-component f is an isomorphism.  A lifting factors alpha through a group
with self-action X as omega o phi, such that (A, X, phi) is itself a
generalized crossed module under the action pulled back along omega.

The two constructions are functorially equivalent: a lifting becomes the
covering <1_A, omega>, and a covering <f, g> becomes the lifting through its
top-right corner with phi = alpha~ o f^-1.  The lifting-side round trip
reproduces the lifting table-for-table; the covering-side round trip is
isomorphic to the original via <f, 1>.

Criterion theorems (factorization through a covering, extension through a
lifting) return either the constructed morphism or a WitnessFailure value
carrying a concrete counterexample element, so both directions of each
if-and-only-if are testable.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .crossed import (
    ExtAction,
    GXMod,
    GXModMorphism,
    is_simply_connected,
    transport_codomain,
    validate_gxmod,
    validate_gxmod_morphism,
)
from .groups import (
    Hom,
    Subgroup,
    compose_homs,
    identity_hom,
    image,
    inverse_hom,
    kernel,
    validate_hom,
)
from .gwa import GwaObject, is_ideal, quotient_gwa, sub_gwa
from .validation import (
    DEFAULT_MAX_VIOLATIONS,
    PreconditionError,
    StructuralError,
    ValidationReport,
    _Collector,
)


@dataclass(frozen=True)
class Covering:
    """A crossed module morphism <f, g>: total -> base with f an isomorphism."""

    total: GXMod
    base: GXMod
    f: Hom
    g: Hom
    name: str = field(default="", compare=False)

    def as_morphism(self) -> GXModMorphism:
        return GXModMorphism(self.total, self.base, self.f, self.g)


@dataclass(frozen=True)
class CoveringMorphism:
    """A crossed module morphism between the totals of two coverings of one base,
    commuting with both covering projections."""

    source: Covering
    target: Covering
    f: Hom
    g: Hom
    name: str = field(default="", compare=False)


@dataclass(frozen=True)
class Lifting:
    """A factorization of base.alpha as omega o phi through the gwa object X."""

    base: GXMod
    X: GwaObject
    phi: Hom
    omega: Hom
    name: str = field(default="", compare=False)


@dataclass(frozen=True)
class LiftingMorphism:
    """A homomorphism between the X components commuting with both triangles.

    Commutation with the omega legs alone does not determine a functorial
    morphism notion (a V4-based counterexample exists); the phi triangle
    f o phi = phi' is part of the definition here, matching the commutative
    diagram rather than the bare slice condition.
    """

    source: Lifting
    target: Lifting
    f: Hom
    name: str = field(default="", compare=False)


@dataclass(frozen=True)
class WitnessFailure:
    """A concrete element witnessing that a criterion's kernel condition fails."""

    element: int
    description: str = ""


@dataclass(frozen=True)
class Inconclusive:
    """Returned where the theory makes no claim (e.g. omega' not injective)."""

    reason: str = ""


# ---------------------------------------------------------------------------
# coverings


def validate_covering(c: Covering, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> ValidationReport:
    if c.f.source != c.total.A.group or c.f.target != c.base.A.group:
        raise StructuralError("covering f endpoints mismatch")
    if c.g.source != c.total.B.group or c.g.target != c.base.B.group:
        raise StructuralError("covering g endpoints mismatch")
    report = ValidationReport(c.name or "covering")
    report = report.merged(validate_gxmod_morphism(c.as_morphism(), max_violations))
    col = _Collector(max_violations)
    if not c.f.is_bijective():
        col.add("component_iso", (), "f is not a bijection")
    return report.merged(col.report(""))


def identity_covering(x: GXMod) -> Covering:
    return Covering(x, x, identity_hom(x.A.group), identity_hom(x.B.group), "id")


def covering_kernel_check(c: Covering) -> bool:
    """f maps ker of the total structure map into ker of the base one.

    Holds for every valid covering; exposed as a probe.
    """
    base_ker = set(kernel(c.base.alpha).members)
    return all(c.f.map[a] in base_ker for a in kernel(c.total.alpha).members)


def compose_coverings(outer: Covering, inner: Covering) -> Covering:
    """Cover the base of outer by the total of inner (inner covers outer's total)."""
    if inner.base != outer.total:
        raise StructuralError("covering composition mismatch: inner.base != outer.total")
    return Covering(
        inner.total,
        outer.base,
        compose_homs(outer.f, inner.f),
        compose_homs(outer.g, inner.g),
    )


def covering_transport(
    c: Covering, h: Hom, new_total_b: GwaObject, k: Hom, new_base_b: GwaObject
) -> Covering:
    """Transport the B components of total and base along isomorphisms h and k.

    The transported covering pair is <f, k o g o h^-1>.
    """
    total2, _ = transport_codomain(c.total, h, new_total_b)
    base2, _ = transport_codomain(c.base, k, new_base_b)
    g2 = compose_homs(compose_homs(k, c.g), inverse_hom(h))
    return Covering(total2, base2, c.f, g2)


def validate_covering_morphism(
    m: CoveringMorphism, max_violations: int = DEFAULT_MAX_VIOLATIONS
) -> ValidationReport:
    if m.source.base != m.target.base:
        raise StructuralError("covering morphism endpoints cover different bases")
    report = ValidationReport(m.name or "covering morphism")
    inner = GXModMorphism(m.source.total, m.target.total, m.f, m.g)
    report = report.merged(validate_gxmod_morphism(inner, max_violations))
    col = _Collector(max_violations)
    for a in range(m.source.total.A.order):
        if m.target.f.map[m.f.map[a]] != m.source.f.map[a]:
            col.add(
                "triangle_f",
                (a,),
                f"f'(f({a})) = {m.target.f.map[m.f.map[a]]} != f~({a}) = {m.source.f.map[a]}",
            )
    for b in range(m.source.total.B.order):
        if m.target.g.map[m.g.map[b]] != m.source.g.map[b]:
            col.add(
                "triangle_g",
                (b,),
                f"g'(g({b})) = {m.target.g.map[m.g.map[b]]} != g~({b}) = {m.source.g.map[b]}",
            )
    return report.merged(col.report(""))


def identity_covering_morphism(c: Covering) -> CoveringMorphism:
    return CoveringMorphism(c, c, identity_hom(c.total.A.group), identity_hom(c.total.B.group), "id")


def compose_covering_morphisms(outer: CoveringMorphism, inner: CoveringMorphism) -> CoveringMorphism:
    if inner.target != outer.source:
        raise StructuralError("covering morphism composition mismatch")
    return CoveringMorphism(
        inner.source, outer.target, compose_homs(outer.f, inner.f), compose_homs(outer.g, inner.g)
    )


def morphism_between_coverings(m: CoveringMorphism) -> Covering:
    """A morphism of coverings is itself a covering of the target's total.

    Its A-component is forced to be (f')^-1 o f~, hence bijective; the
    bijectivity is asserted.
    """
    report = validate_covering_morphism(m)
    if not report.ok:
        raise PreconditionError("covering_morphism", report.summary())
    if not m.f.is_bijective():
        raise StructuralError("covering morphism A-component failed to be bijective")
    return Covering(m.source.total, m.target.total, m.f, m.g)


def factor_through_covering(
    src: GXMod, m: GXModMorphism, c: Covering
) -> GXModMorphism | WitnessFailure:
    """Factor m: src -> base through the covering c when the kernel condition allows.

    src must be simply connected.  Returns <f', g'> with c composed after it
    equal to m, where f' = f~^-1 o f and g' takes d to alpha~(f'(c0)) for any
    preimage c0 of d; or a WitnessFailure element of f(ker gamma) outside
    f~(ker alpha~).  Well-definedness of g' is asserted over every preimage.
    """
    if m.source != src or m.target != c.base:
        raise StructuralError("morphism endpoints do not match src and the covering base")
    if not is_simply_connected(src):
        raise PreconditionError("simply_connected", "source crossed module is not simply connected")
    gamma = src.alpha
    f_tilde, g_tilde = c.f, c.g
    ker_gamma = kernel(gamma).members
    covered_kernel = {f_tilde.map[a] for a in kernel(c.total.alpha).members}
    for x in ker_gamma:
        if m.f.map[x] not in covered_kernel:
            return WitnessFailure(
                m.f.map[x],
                f"f({x}) = {m.f.map[x]} lies in f(ker gamma) but not in f~(ker alpha~)",
            )
    f_tilde_inv = inverse_hom(f_tilde)
    f_prime = compose_homs(f_tilde_inv, m.f)
    alpha_tilde = c.total.alpha
    g_prime_map: list[int] = []
    for d in range(src.B.order):
        values = {
            alpha_tilde.map[f_prime.map[c0]]
            for c0 in range(src.A.order)
            if gamma.map[c0] == d
        }
        if len(values) != 1:
            raise StructuralError(f"factorization g' not well-defined over fibre of {d}: {values}")
        g_prime_map.append(values.pop())
    g_prime = Hom(src.B.group, c.total.B.group, tuple(g_prime_map))
    result = GXModMorphism(src, c.total, f_prime, g_prime)
    check = validate_gxmod_morphism(result)
    if not check.ok:
        raise StructuralError("constructed factorization is not a morphism:\n" + check.summary())
    for a in range(src.A.order):
        if f_tilde.map[f_prime.map[a]] != m.f.map[a]:
            raise StructuralError("factorization does not recompose to m on A")
    for d in range(src.B.order):
        if g_tilde.map[g_prime.map[d]] != m.g.map[d]:
            raise StructuralError("factorization does not recompose to m on B")
    return result


# ---------------------------------------------------------------------------
# liftings


def induced_action(base: GXMod, x_obj: GwaObject, omega: Hom) -> ExtAction:
    """The action of X on A obtained through omega: x . a = omega(x) . a."""
    act = tuple(base.action.act[omega.map[x]] for x in range(x_obj.order))
    return ExtAction(x_obj, base.A, act)


def lifting_as_gxmod(l: Lifting) -> GXMod:
    """(A, X, phi) with the omega-induced action, as a crossed module in its own right."""
    return GXMod(
        l.base.A,
        l.X,
        l.phi,
        induced_action(l.base, l.X, l.omega),
        f"lifting({l.name})" if l.name else "",
    )


def validate_lifting(l: Lifting, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> ValidationReport:
    """Check omega o phi = alpha and the crossed module axioms of (A, X, phi)."""
    if l.phi.source != l.base.A.group or l.phi.target != l.X.group:
        raise StructuralError("phi endpoints mismatch")
    if l.omega.source != l.X.group or l.omega.target != l.base.B.group:
        raise StructuralError("omega endpoints mismatch")
    report = ValidationReport(l.name or "lifting")
    report = report.merged(validate_hom(l.phi, max_violations), "phi")
    report = report.merged(validate_hom(l.omega, max_violations), "omega")
    col = _Collector(max_violations)
    for a in range(l.base.A.order):
        if l.omega.map[l.phi.map[a]] != l.base.alpha.map[a]:
            col.add(
                "factorization",
                (a,),
                f"omega(phi({a})) = {l.omega.map[l.phi.map[a]]} != alpha({a}) = {l.base.alpha.map[a]}",
            )
    report = report.merged(col.report(""))
    report = report.merged(validate_gxmod(lifting_as_gxmod(l), max_violations), "induced")
    return report


def lifting_criterion(base: GXMod, x_obj: GwaObject, phi: Hom, omega: Hom) -> bool:
    """Equivariance of phi for the induced action decides liftinghood.

    Requires omega o phi = alpha (PreconditionError otherwise).  Returns True
    exactly when phi(x . a) = ^x phi(a) for all x, a; the peiffer condition is
    automatic given the factorization.
    """
    for a in range(base.A.order):
        if omega.map[phi.map[a]] != base.alpha.map[a]:
            raise PreconditionError("factorization", f"omega o phi != alpha at {a}")
    act = base.action.act
    sx = x_obj.self_action.act
    pm, om = phi.map, omega.map
    for x in range(x_obj.order):
        row = act[om[x]]
        for a in range(base.A.order):
            if pm[row[a]] != sx[x][pm[a]]:
                return False
    return True


def self_lifting(x: GXMod) -> Lifting:
    """(A, B, alpha) as a lifting of itself over the identity."""
    return Lifting(x, x.B, x.alpha, identity_hom(x.B.group), "self")


def image_lifting(x: GXMod) -> Lifting:
    """The lifting through the image of alpha, over the inclusion."""
    img = image(x.alpha)
    i_gwa, emb = sub_gwa(x.B, img.members)
    pos = {v: i for i, v in enumerate(emb.map)}
    phi = Hom(x.A.group, i_gwa.group, tuple(pos[v] for v in x.alpha.map))
    return Lifting(x, i_gwa, phi, emb, "image")


def quotient_lifting(x: GXMod, n: Subgroup) -> Lifting:
    """Lift through A/N for an ideal N of A contained in ker alpha.

    phi is the canonical projection, omega sends a coset to alpha of any
    representative, and ker phi = N.
    """
    if n.parent != x.A.group:
        raise StructuralError("subgroup parent is not A")
    ker_a = set(kernel(x.alpha).members)
    if not set(n.members) <= ker_a:
        raise PreconditionError(
            "contained_in_kernel", "N is not contained in the kernel of alpha"
        )
    report = is_ideal(n, x.A)
    if not report.is_ideal:
        raise PreconditionError(
            report.failed_condition() or "ideal",
            f"N is not an ideal of A: {report.failed_condition()} fails at {report.witness}",
        )
    q_gwa, proj = quotient_gwa(x.A, n)
    omega_map = [None] * q_gwa.order
    for a in range(x.A.order):
        c = proj.map[a]
        v = x.alpha.map[a]
        if omega_map[c] is None:
            omega_map[c] = v
        elif omega_map[c] != v:
            raise StructuralError("omega not well-defined on cosets; N escapes ker alpha")
    omega = Hom(q_gwa.group, x.B.group, tuple(omega_map))
    return Lifting(x, q_gwa, proj, omega, "quotient")


def natural_lifting(x: GXMod) -> Lifting:
    """The quotient lifting by the full kernel of alpha."""
    lift = quotient_lifting(x, kernel(x.alpha))
    return Lifting(lift.base, lift.X, lift.phi, lift.omega, "natural")


def lifting_to_base_morphism(l: Lifting) -> GXModMorphism:
    """<1_A, omega>: (A, X, phi) -> (A, B, alpha); ker phi <= ker alpha is asserted."""
    ker_alpha = set(kernel(l.base.alpha).members)
    for a in kernel(l.phi).members:
        if a not in ker_alpha:
            raise StructuralError(f"ker phi escapes ker alpha at {a}")
    return GXModMorphism(
        lifting_as_gxmod(l), l.base, identity_hom(l.base.A.group), l.omega
    )


def lifting_transport(
    l: Lifting, f: Hom, new_x: GwaObject, g: Hom, new_b: GwaObject
) -> Lifting:
    """Transport a lifting along isomorphisms f: X -> X' and g: B -> B'.

    The result lifts the codomain-transported base over omega' = g o omega o f^-1
    with phi' = f o phi.
    """
    from .crossed import _require_gwa_iso

    _require_gwa_iso(f, l.X, new_x, "X iso")
    base2, _ = transport_codomain(l.base, g, new_b)
    phi2 = compose_homs(f, l.phi)
    omega2 = compose_homs(compose_homs(g, l.omega), inverse_hom(f))
    return Lifting(base2, new_x, phi2, omega2)


def compose_liftings(outer: Lifting, inner: Lifting) -> Lifting:
    """Chain a lifting of outer's crossed module into a lifting of outer's base.

    inner must lift (A, X, phi) of outer; the result keeps inner's phi and
    composes the omegas.
    """
    if inner.base != lifting_as_gxmod(outer):
        raise StructuralError("lifting composition mismatch: inner.base != outer as gxmod")
    return Lifting(
        outer.base, inner.X, inner.phi, compose_homs(outer.omega, inner.omega)
    )


def validate_lifting_morphism(
    m: LiftingMorphism, max_violations: int = DEFAULT_MAX_VIOLATIONS
) -> ValidationReport:
    if m.source.base != m.target.base:
        raise StructuralError("lifting morphism endpoints lift different bases")
    if m.f.source != m.source.X.group or m.f.target != m.target.X.group:
        raise StructuralError("lifting morphism f endpoints mismatch")
    report = ValidationReport(m.name or "lifting morphism")
    report = report.merged(validate_hom(m.f, max_violations), "f")
    col = _Collector(max_violations)
    for x in range(m.source.X.order):
        if m.target.omega.map[m.f.map[x]] != m.source.omega.map[x]:
            col.add(
                "triangle_omega",
                (x,),
                f"omega'(f({x})) = {m.target.omega.map[m.f.map[x]]} != omega({x}) = {m.source.omega.map[x]}",
            )
    for a in range(m.source.base.A.order):
        if m.f.map[m.source.phi.map[a]] != m.target.phi.map[a]:
            col.add(
                "triangle_phi",
                (a,),
                f"f(phi({a})) = {m.f.map[m.source.phi.map[a]]} != phi'({a}) = {m.target.phi.map[a]}",
            )
    return report.merged(col.report(""))


def identity_lifting_morphism(l: Lifting) -> LiftingMorphism:
    return LiftingMorphism(l, l, identity_hom(l.X.group), "id")


def compose_lifting_morphisms(outer: LiftingMorphism, inner: LiftingMorphism) -> LiftingMorphism:
    if inner.target != outer.source:
        raise StructuralError("lifting morphism composition mismatch")
    return LiftingMorphism(inner.source, outer.target, compose_homs(outer.f, inner.f))


def lifting_morphism_as_lifting(m: LiftingMorphism) -> Lifting | Inconclusive:
    """Reinterpret the source lifting as a lifting of the target over f.

    Only claimed when the target's omega is injective; otherwise Inconclusive.
    """
    if not m.target.omega.is_injective():
        return Inconclusive("omega' is not a monomorphism")
    for a in range(m.source.base.A.order):
        if m.f.map[m.source.phi.map[a]] != m.target.phi.map[a]:
            raise StructuralError("f o phi != phi' despite omega' being injective")
    return Lifting(lifting_as_gxmod(m.target), m.source.X, m.source.phi, m.f)


def extend_morphism_through_lifting(
    m: GXModMorphism, l: Lifting
) -> GXModMorphism | WitnessFailure:
    """Lift m: src -> base through l when f(ker alpha~) lands inside ker phi.

    src must be simply connected.  The extension is <f, g~> with
    g~(b~) = phi(f(a~)) for any alpha~-preimage a~, and omega o g~ = g; or a
    WitnessFailure element of f(ker alpha~) outside ker phi.
    """
    src = m.source
    if m.target != l.base:
        raise StructuralError("morphism target is not the lifting's base")
    if not is_simply_connected(src):
        raise PreconditionError("simply_connected", "source crossed module is not simply connected")
    ker_phi = set(kernel(l.phi).members)
    for x in kernel(src.alpha).members:
        if m.f.map[x] not in ker_phi:
            return WitnessFailure(
                m.f.map[x],
                f"f({x}) = {m.f.map[x]} lies in f(ker alpha~) but not in ker phi",
            )
    g_map: list[int] = []
    for b in range(src.B.order):
        values = {
            l.phi.map[m.f.map[a]] for a in range(src.A.order) if src.alpha.map[a] == b
        }
        if len(values) != 1:
            raise StructuralError(f"extension g~ not well-defined over fibre of {b}: {values}")
        g_map.append(values.pop())
    g_tilde = Hom(src.B.group, l.X.group, tuple(g_map))
    result = GXModMorphism(src, lifting_as_gxmod(l), m.f, g_tilde)
    check = validate_gxmod_morphism(result)
    if not check.ok:
        raise StructuralError("constructed extension is not a morphism:\n" + check.summary())
    for b in range(src.B.order):
        if l.omega.map[g_tilde.map[b]] != m.g.map[b]:
            raise StructuralError("extension does not satisfy omega o g~ = g")
    return result


# ---------------------------------------------------------------------------
# the equivalence functors


def lifting_to_covering(l: Lifting) -> Covering:
    """A lifting (A, X, phi) over omega becomes the covering <1_A, omega> of the base."""
    return Covering(
        lifting_as_gxmod(l), l.base, identity_hom(l.base.A.group), l.omega, l.name
    )


def covering_to_lifting(c: Covering) -> Lifting:
    """A covering <f, g> becomes the lifting through its top-right corner.

    X is the total's B component, phi = alpha~ o f^-1, omega = g.
    """
    phi = compose_homs(c.total.alpha, inverse_hom(c.f))
    return Lifting(c.base, c.total.B, phi, c.g, c.name)


def functor_on_lifting_morphism(m: LiftingMorphism) -> CoveringMorphism:
    """A lifting morphism f becomes the covering morphism <1_A, f>."""
    return CoveringMorphism(
        lifting_to_covering(m.source),
        lifting_to_covering(m.target),
        identity_hom(m.source.base.A.group),
        m.f,
    )


def functor_on_covering_morphism(m: CoveringMorphism) -> LiftingMorphism:
    """A covering morphism <u, v> becomes the lifting morphism v between the images."""
    return LiftingMorphism(
        covering_to_lifting(m.source), covering_to_lifting(m.target), m.g
    )
