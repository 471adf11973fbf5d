"""Generalized crossed modules: a homomorphism alpha: A -> B between groups
with self-action, plus an action of B on A, subject to two conditions:

    equivariance:  alpha(b . a)  = ^b alpha(a)
    peiffer:       alpha(a) . a1 = ^a a1

Both A and B carry arbitrary self-actions (not just conjugation), which is
what the "generalized" qualifier refers to.  Morphisms are pairs of group
homomorphisms <f, g> making the alpha-square commute and respecting the
external action; preservation of the domain self-action by f is a consequence
of the axioms and is asserted, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groups import (
    Hom,
    Subgroup,
    Table,
    compose_homs,
    identity_hom,
    image,
    inverse_hom,
    kernel,
)
from .gwa import GwaObject, is_gwa_morphism, is_subobject, sub_gwa
from .validation import (
    DEFAULT_MAX_VIOLATIONS,
    PreconditionError,
    StructuralError,
    ValidationReport,
    _Collector,
)


@dataclass(frozen=True)
class ExtAction:
    """An action of the group of `actor` on the group of `space` by automorphisms.

    act[b][a] is the index of b . a.
    """

    actor: GwaObject
    space: GwaObject
    act: Table

    def __call__(self, b: int, a: int) -> int:
        return self.act[b][a]


def trivial_ext_action(actor: GwaObject, space: GwaObject) -> ExtAction:
    row = tuple(range(space.order))
    return ExtAction(actor, space, tuple(row for _ in range(actor.order)))


def validate_ext_action(
    x: ExtAction, max_violations: int = DEFAULT_MAX_VIOLATIONS
) -> ValidationReport:
    nb, na = x.actor.order, x.space.order
    if len(x.act) != nb or any(len(row) != na for row in x.act):
        raise StructuralError("external action table dimensions mismatch")
    if any(v < 0 or v >= na for row in x.act for v in row):
        raise StructuralError("external action entry out of range")
    col = _Collector(max_violations)
    act = x.act
    ob, oa = x.actor.group.op, x.space.group.op
    eb = x.actor.group.identity
    for a in range(na):
        if act[eb][a] != a:
            col.add("action_identity", (a,), f"{eb}.{a} = {act[eb][a]}, expected {a}")
    for b1 in range(nb):
        row1 = act[b1]
        for b2 in range(nb):
            row12 = act[ob[b1][b2]]
            row2 = act[b2]
            for a in range(na):
                if row12[a] != row1[row2[a]]:
                    col.add(
                        "action_compatibility",
                        (b1, b2, a),
                        f"({b1}*{b2}).{a} = {row12[a]} != {b1}.({b2}.{a}) = {row1[row2[a]]}",
                    )
                    break
    for b in range(nb):
        row = act[b]
        for a1 in range(na):
            for a2 in range(na):
                if row[oa[a1][a2]] != oa[row[a1]][row[a2]]:
                    col.add(
                        "action_automorphism",
                        (b, a1, a2),
                        f"{b}.({a1}*{a2}) = {row[oa[a1][a2]]} != ({b}.{a1})*({b}.{a2}) = {oa[row[a1]][row[a2]]}",
                    )
                    break
    return col.report("ext action")


@dataclass(frozen=True)
class GXMod:
    """A generalized crossed module (A, B, alpha) with the action of B on A."""

    A: GwaObject
    B: GwaObject
    alpha: Hom
    action: ExtAction
    name: str = field(default="", compare=False)

    def __repr__(self) -> str:
        return f"GXMod({self.name or (self.A.group.name + '->' + self.B.group.name)})"


def gxmod(A: GwaObject, B: GwaObject, alpha: Hom, action: ExtAction, name: str = "") -> GXMod:
    x = GXMod(A, B, alpha, action, name)
    _check_gxmod_wiring(x)
    return x


def _check_gxmod_wiring(x: GXMod) -> None:
    if x.alpha.source != x.A.group or x.alpha.target != x.B.group:
        raise StructuralError("alpha endpoints do not match A and B")
    if x.action.actor != x.B or x.action.space != x.A:
        raise StructuralError("external action endpoints do not match A and B")


def validate_gxmod(x: GXMod, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> ValidationReport:
    """Check the two defining conditions; components are assumed valid.

    Witnesses are (b, a) for equivariance and (a, a1) for the peiffer
    condition.
    """
    _check_gxmod_wiring(x)
    col = _Collector(max_violations)
    am, act = x.alpha.map, x.action.act
    sb = x.B.self_action.act
    sa = x.A.self_action.act
    for b in range(x.B.order):
        row = act[b]
        sb_row = sb[b]
        for a in range(x.A.order):
            if am[row[a]] != sb_row[am[a]]:
                col.add(
                    "equivariance",
                    (b, a),
                    f"alpha({b}.{a}) = {am[row[a]]} != ^{b} alpha({a}) = {sb_row[am[a]]}",
                )
    for a in range(x.A.order):
        row = act[am[a]]
        sa_row = sa[a]
        for a1 in range(x.A.order):
            if row[a1] != sa_row[a1]:
                col.add(
                    "peiffer",
                    (a, a1),
                    f"alpha({a}).{a1} = {row[a1]} != ^{a} {a1} = {sa_row[a1]}",
                )
    return col.report(x.name or "gxmod")


def validate_gxmod_full(x: GXMod, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> ValidationReport:
    """Validate every layer: groups, self-actions, alpha, external action, conditions."""
    from .groups import validate_group, validate_hom
    from .gwa import validate_gwa

    report = ValidationReport(x.name or "gxmod")
    report = report.merged(validate_group(x.A.group, max_violations), "A.group")
    report = report.merged(validate_gwa(x.A, max_violations), "A")
    report = report.merged(validate_group(x.B.group, max_violations), "B.group")
    report = report.merged(validate_gwa(x.B, max_violations), "B")
    report = report.merged(validate_hom(x.alpha, max_violations), "alpha")
    report = report.merged(validate_ext_action(x.action, max_violations), "action")
    report = report.merged(validate_gxmod(x, max_violations))
    return report


@dataclass(frozen=True)
class GXModMorphism:
    source: GXMod
    target: GXMod
    f: Hom  # A -> A'
    g: Hom  # B -> B'
    name: str = field(default="", compare=False)


def validate_gxmod_morphism(
    m: GXModMorphism, max_violations: int = DEFAULT_MAX_VIOLATIONS
) -> ValidationReport:
    """Check the commuting square and action equivariance of <f, g>.

    Also re-checks that f preserves the domain self-action (a consequence of
    the crossed module axioms, kept as a consistency probe).  Preservation of
    the codomain self-action by g is not part of the morphism notion.
    """
    from .groups import validate_hom

    if m.f.source != m.source.A.group or m.f.target != m.target.A.group:
        raise StructuralError("f endpoints do not match the A components")
    if m.g.source != m.source.B.group or m.g.target != m.target.B.group:
        raise StructuralError("g endpoints do not match the B components")
    col = _Collector(max_violations)
    report = ValidationReport("gxmod morphism" if not m.name else m.name)
    report = report.merged(validate_hom(m.f, max_violations), "f")
    report = report.merged(validate_hom(m.g, max_violations), "g")
    fm, gm = m.f.map, m.g.map
    am_src, am_tgt = m.source.alpha.map, m.target.alpha.map
    for a in range(m.source.A.order):
        if gm[am_src[a]] != am_tgt[fm[a]]:
            col.add(
                "square",
                (a,),
                f"g(alpha({a})) = {gm[am_src[a]]} != alpha'(f({a})) = {am_tgt[fm[a]]}",
            )
    act_src, act_tgt = m.source.action.act, m.target.action.act
    for b in range(m.source.B.order):
        row = act_src[b]
        tgt_row = act_tgt[gm[b]]
        for a in range(m.source.A.order):
            if fm[row[a]] != tgt_row[fm[a]]:
                col.add(
                    "equivariance",
                    (b, a),
                    f"f({b}.{a}) = {fm[row[a]]} != g({b}).f({a}) = {tgt_row[fm[a]]}",
                )
    sa_src, sa_tgt = m.source.A.self_action.act, m.target.A.self_action.act
    for a in range(m.source.A.order):
        row = sa_src[a]
        tgt_row = sa_tgt[fm[a]]
        for a1 in range(m.source.A.order):
            if fm[row[a1]] != tgt_row[fm[a1]]:
                col.add(
                    "domain_action_preserved",
                    (a, a1),
                    f"f(^{a} {a1}) = {fm[row[a1]]} != ^f({a}) f({a1}) = {tgt_row[fm[a1]]}",
                )
    return report.merged(col.report(""))


def identity_gxmod_morphism(x: GXMod) -> GXModMorphism:
    return GXModMorphism(x, x, identity_hom(x.A.group), identity_hom(x.B.group), "id")


def compose_gxmod_morphisms(outer: GXModMorphism, inner: GXModMorphism) -> GXModMorphism:
    if inner.target != outer.source:
        raise StructuralError("gxmod morphism composition mismatch")
    return GXModMorphism(
        inner.source,
        outer.target,
        compose_homs(outer.f, inner.f),
        compose_homs(outer.g, inner.g),
    )


def is_gxmod_isomorphism(m: GXModMorphism) -> bool:
    return m.f.is_bijective() and m.g.is_bijective() and validate_gxmod_morphism(m).ok


# ---------------------------------------------------------------------------
# basic invariants


def check_alpha_gwa_morphism(x: GXMod) -> bool:
    """alpha preserves self-actions; a redundant probe, true for every valid input."""
    return is_gwa_morphism(x.alpha, x.A, x.B)


def is_aspherical(x: GXMod) -> bool:
    return len(kernel(x.alpha).members) == 1


def is_simply_connected(x: GXMod) -> bool:
    return len(set(x.alpha.map)) == x.B.order


def check_kernel_acts_trivially(x: GXMod) -> bool:
    """Elements of ker alpha act trivially on A; true for every valid input."""
    sa = x.A.self_action.act
    for k in kernel(x.alpha).members:
        row = sa[k]
        if any(row[a] != a for a in range(x.A.order)):
            return False
    return True


# ---------------------------------------------------------------------------
# derived crossed modules


def _restricted_action_table(outer: GwaObject, emb, members_pos) -> Table:
    """Action of outer on a renumbered invariant subset via the self-action."""
    act = outer.self_action.act
    rows = []
    for g in range(outer.order):
        row = []
        for m in emb:
            y = act[g][m]
            if y not in members_pos:
                raise StructuralError(f"subset not invariant under the ambient action: ^{g} {m} = {y}")
            row.append(members_pos[y])
        rows.append(tuple(row))
    return tuple(rows)


def from_invariant_subgroup(g: GwaObject, h: Subgroup) -> GXMod:
    """(H, G, incl) for a subgroup invariant under the whole ambient self-action."""
    if not is_subobject(h, g):
        act = g.self_action.act
        members = set(h.members)
        wit = next(
            (x, n)
            for x in range(g.order)
            for n in h.members
            if act[x][n] not in members
        )
        raise PreconditionError(
            "subobject", f"subgroup is not invariant under the ambient action at {wit}"
        )
    h_gwa, emb = sub_gwa(g, h.members)
    pos = {m: i for i, m in enumerate(emb.map)}
    table = _restricted_action_table(g, emb.map, pos)
    return GXMod(h_gwa, g, emb, ExtAction(g, h_gwa, table), f"({h_gwa.group.name},{g.group.name},incl)")


def kernel_gxmod(x: GXMod) -> GXMod:
    """(ker alpha, A, incl): A acts on its kernel through the self-action."""
    k = kernel(x.alpha)
    k_gwa, emb = sub_gwa(x.A, k.members)
    pos = {m: i for i, m in enumerate(emb.map)}
    table = _restricted_action_table(x.A, emb.map, pos)
    return GXMod(k_gwa, x.A, emb, ExtAction(x.A, k_gwa, table), "kernel")


def image_gxmod(x: GXMod) -> GXMod:
    """(alpha(A), B, incl): B acts on the image through the self-action."""
    k = image(x.alpha)
    k_gwa, emb = sub_gwa(x.B, k.members)
    pos = {m: i for i, m in enumerate(emb.map)}
    table = _restricted_action_table(x.B, emb.map, pos)
    return GXMod(k_gwa, x.B, emb, ExtAction(x.B, k_gwa, table), "image")


# ---------------------------------------------------------------------------
# transport along isomorphisms


def _require_gwa_iso(f: Hom, src: GwaObject, tgt: GwaObject, label: str) -> None:
    from .groups import is_hom

    if f.source != src.group or f.target != tgt.group:
        raise StructuralError(f"{label} endpoints mismatch")
    if not is_hom(f):
        raise PreconditionError(label, f"{label} is not a homomorphism")
    if not f.is_bijective():
        raise PreconditionError(label, f"{label} is not bijective")
    if not is_gwa_morphism(f, src, tgt):
        raise PreconditionError(label, f"{label} does not preserve the self-action")


def transport_codomain(x: GXMod, f: Hom, new_b: GwaObject) -> tuple[GXMod, GXModMorphism]:
    """Replace B by an isomorphic gwa object along f: B -> B'.

    The new structure map is f o alpha and b' acts as its f-preimage did.
    Returns the transported module and the isomorphism <1_A, f> from x to it.
    """
    _require_gwa_iso(f, x.B, new_b, "codomain iso")
    finv = inverse_hom(f)
    act = tuple(x.action.act[finv.map[bp]] for bp in range(new_b.order))
    result = GXMod(
        x.A,
        new_b,
        compose_homs(f, x.alpha),
        ExtAction(new_b, x.A, act),
        f"{x.name}~cod" if x.name else "",
    )
    witness = GXModMorphism(x, result, identity_hom(x.A.group), f)
    return result, witness


def transport_domain(x: GXMod, g: Hom, new_a: GwaObject) -> tuple[GXMod, GXModMorphism]:
    """Replace A by an isomorphic gwa object along g: A' -> A.

    The new structure map is alpha o g and the action is pulled back through
    g.  Returns the transported module and the isomorphism <g, 1_B> from it
    to x.
    """
    _require_gwa_iso(g, new_a, x.A, "domain iso")
    ginv = inverse_hom(g)
    act = tuple(
        tuple(ginv.map[x.action.act[b][g.map[ap]]] for ap in range(new_a.order))
        for b in range(x.B.order)
    )
    result = GXMod(
        new_a,
        x.B,
        compose_homs(x.alpha, g),
        ExtAction(x.B, new_a, act),
        f"{x.name}~dom" if x.name else "",
    )
    witness = GXModMorphism(result, x, g, identity_hom(x.B.group))
    return result, witness


def transport_both(
    x: GXMod, f: Hom, new_b: GwaObject, g: Hom, new_a: GwaObject
) -> tuple[GXMod, GXModMorphism]:
    """Transport both ends: the result is (A', B', f o alpha o g).

    Equals transport_codomain after transport_domain.  Returns the transported
    module and the isomorphism <g, f^-1> from it to x.
    """
    mid, _ = transport_domain(x, g, new_a)
    result, _ = transport_codomain(mid, f, new_b)
    witness = GXModMorphism(result, x, g, inverse_hom(f))
    return result, witness
