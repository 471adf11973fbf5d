"""Generalized cat1-groups (G, s, t) and their functor into generalized crossed modules.

G is a group with self-action, s and t are self-action-preserving
endomorphisms with s o t = t and t o s = s, and every element of ker t acts
trivially on ker s.  When the self-action is conjugation this recovers the
ordinary cat1-group axioms, with the kernel condition reducing to elementwise
commutation of ker s and ker t.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .crossed import ExtAction, GXMod, GXModMorphism
from .groups import Hom, compose_homs, kernel, image, validate_hom
from .gwa import GwaObject, sub_gwa, validate_gwa_morphism
from .validation import (
    DEFAULT_MAX_VIOLATIONS,
    StructuralError,
    ValidationReport,
    _Collector,
)


@dataclass(frozen=True)
class GCat1:
    G: GwaObject
    s: Hom
    t: Hom
    name: str = field(default="", compare=False)

    def __repr__(self) -> str:
        return f"GCat1({self.name or self.G.group.name})"


def _check_cat1_wiring(c: GCat1) -> None:
    g = c.G.group
    for label, h in (("s", c.s), ("t", c.t)):
        if h.source != g or h.target != g:
            raise StructuralError(f"{label} is not an endomorphism of G")


def validate_gcat1(c: GCat1, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> ValidationReport:
    """Check both structure maps, their interchange law, and the kernel action law."""
    _check_cat1_wiring(c)
    report = ValidationReport(c.name or "gcat1")
    report = report.merged(validate_hom(c.s, max_violations), "s")
    report = report.merged(validate_hom(c.t, max_violations), "t")
    report = report.merged(validate_gwa_morphism(c.s, c.G, c.G, max_violations), "s")
    report = report.merged(validate_gwa_morphism(c.t, c.G, c.G, max_violations), "t")
    col = _Collector(max_violations)
    sm, tm = c.s.map, c.t.map
    for g in range(c.G.order):
        if sm[tm[g]] != tm[g]:
            col.add("st_equals_t", (g,), f"s(t({g})) = {sm[tm[g]]} != t({g}) = {tm[g]}")
        if tm[sm[g]] != sm[g]:
            col.add("ts_equals_s", (g,), f"t(s({g})) = {tm[sm[g]]} != s({g}) = {sm[g]}")
    act = c.G.self_action.act
    ker_s = kernel(c.s).members
    ker_t = kernel(c.t).members
    for y in ker_t:
        row = act[y]
        for x in ker_s:
            if row[x] != x:
                col.add(
                    "kernel_action",
                    (y, x),
                    f"^{y} {x} = {row[x]} != {x} (x in ker s, y in ker t)",
                )
    return report.merged(col.report(""))


def check_ordinary_cat1(c: GCat1) -> bool:
    """True when the self-action of G is conjugation.

    In that case the kernel action law is equivalent to elementwise
    commutation of ker s and ker t; the equivalence is re-checked and a
    StructuralError raised if it ever failed.
    """
    g = c.G.group
    act = c.G.self_action.act
    conj = all(
        act[a][b] == g.conjugate(a, b) for a in range(g.order) for b in range(g.order)
    )
    if not conj:
        return False
    ker_s = kernel(c.s).members
    ker_t = kernel(c.t).members
    commute = all(g.op[x][y] == g.op[y][x] for x in ker_s for y in ker_t)
    law = all(act[y][x] == x for x in ker_s for y in ker_t)
    if commute != law:
        raise StructuralError("conjugation kernel law disagrees with commutation check")
    return True


def cat1_to_gxmod(c: GCat1) -> GXMod:
    """The crossed module (ker s, im s, t restricted), with im s acting via the self-action.

    t maps ker s into im s (a consequence of s o t = t); this inclusion and
    the invariance of ker s under the action of im s are asserted during
    construction.
    """
    ker_members = kernel(c.s).members
    im_members = image(c.s).members
    k_gwa, k_emb = sub_gwa(c.G, ker_members)
    i_gwa, i_emb = sub_gwa(c.G, im_members)
    im_pos = {m: i for i, m in enumerate(i_emb.map)}
    ker_pos = {m: i for i, m in enumerate(k_emb.map)}
    tbar = []
    for m in k_emb.map:
        y = c.t.map[m]
        if y not in im_pos:
            raise StructuralError(f"t(ker s) escapes im s at element {m}: t({m}) = {y}")
        tbar.append(im_pos[y])
    act = c.G.self_action.act
    rows = []
    for x in i_emb.map:
        row = []
        for m in k_emb.map:
            y = act[x][m]
            if y not in ker_pos:
                raise StructuralError(f"ker s not invariant under im s at (^{x} {m}) = {y}")
            row.append(ker_pos[y])
        rows.append(tuple(row))
    return GXMod(
        k_gwa,
        i_gwa,
        Hom(k_gwa.group, i_gwa.group, tuple(tbar), "t|ker s"),
        ExtAction(i_gwa, k_gwa, tuple(rows)),
        f"from_cat1({c.name or c.G.group.name})",
    )


@dataclass(frozen=True)
class GCat1Morphism:
    source: GCat1
    target: GCat1
    f: Hom
    name: str = field(default="", compare=False)


def validate_gcat1_morphism(
    m: GCat1Morphism, max_violations: int = DEFAULT_MAX_VIOLATIONS
) -> ValidationReport:
    if m.f.source != m.source.G.group or m.f.target != m.target.G.group:
        raise StructuralError("morphism endpoints do not match the cat1 groups")
    report = ValidationReport(m.name or "gcat1 morphism")
    report = report.merged(validate_hom(m.f, max_violations), "f")
    report = report.merged(
        validate_gwa_morphism(m.f, m.source.G, m.target.G, max_violations), "f"
    )
    col = _Collector(max_violations)
    fm = m.f.map
    s1, t1 = m.source.s.map, m.source.t.map
    s2, t2 = m.target.s.map, m.target.t.map
    for g in range(m.source.G.order):
        if fm[s1[g]] != s2[fm[g]]:
            col.add("commutes_with_s", (g,), f"f(s({g})) = {fm[s1[g]]} != s'(f({g})) = {s2[fm[g]]}")
        if fm[t1[g]] != t2[fm[g]]:
            col.add("commutes_with_t", (g,), f"f(t({g})) = {fm[t1[g]]} != t'(f({g})) = {t2[fm[g]]}")
    return report.merged(col.report(""))


def identity_gcat1_morphism(c: GCat1) -> GCat1Morphism:
    from .groups import identity_hom

    return GCat1Morphism(c, c, identity_hom(c.G.group), "id")


def compose_gcat1_morphisms(outer: GCat1Morphism, inner: GCat1Morphism) -> GCat1Morphism:
    if inner.target != outer.source:
        raise StructuralError("gcat1 morphism composition mismatch")
    return GCat1Morphism(inner.source, outer.target, compose_homs(outer.f, inner.f))


def cat1_functor_on_morphism(m: GCat1Morphism) -> GXModMorphism:
    """Restrict f to kernels and images: the morphism part of the cat1 -> gxmod functor.

    f(ker s) lies in ker s' and f(im s) in im s' whenever m is a valid
    morphism; both containments are asserted.
    """
    src = cat1_to_gxmod(m.source)
    tgt = cat1_to_gxmod(m.target)
    fm = m.f.map
    src_ker_members = kernel(m.source.s).members
    src_im_members = image(m.source.s).members
    tgt_ker_pos = {v: i for i, v in enumerate(kernel(m.target.s).members)}
    tgt_im_pos = {v: i for i, v in enumerate(image(m.target.s).members)}
    f_ker = []
    for v in src_ker_members:
        y = fm[v]
        if y not in tgt_ker_pos:
            raise StructuralError(f"f(ker s) escapes ker s' at {v}")
        f_ker.append(tgt_ker_pos[y])
    f_im = []
    for v in src_im_members:
        y = fm[v]
        if y not in tgt_im_pos:
            raise StructuralError(f"f(im s) escapes im s' at {v}")
        f_im.append(tgt_im_pos[y])
    return GXModMorphism(
        src,
        tgt,
        Hom(src.A.group, tgt.A.group, tuple(f_ker)),
        Hom(src.B.group, tgt.B.group, tuple(f_im)),
    )
