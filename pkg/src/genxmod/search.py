"""Exhaustive enumeration of structures over small group pools, and the
brute-force verification of the covering/lifting equivalence.

Pools are finite lists of group tables (one representative per isomorphism
class up to the order bound), which makes the categories of coverings and
liftings of a fixed base finite.  Both equivalence functors preserve the
underlying group of the varying component, so restricting to a pool restricts
both categories consistently.

All enumerations iterate in a canonical sorted order, so output lists (and
the JSON reports built from them) are deterministic.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache

from .cat1 import GCat1, GCat1Morphism
from .crossed import ExtAction, GXMod, validate_gxmod
from .coverlift import (
    Covering,
    CoveringMorphism,
    Lifting,
    LiftingMorphism,
    compose_covering_morphisms,
    compose_lifting_morphisms,
    covering_to_lifting,
    functor_on_covering_morphism,
    functor_on_lifting_morphism,
    identity_covering,
    identity_covering_morphism,
    identity_lifting_morphism,
    image_lifting,
    lifting_to_covering,
    natural_lifting,
    self_lifting,
    validate_covering,
    validate_covering_morphism,
    validate_lifting,
    validate_lifting_morphism,
)
from .groups import (
    GroupTable,
    Hom,
    all_homs,
    automorphism_group,
    automorphisms,
    cyclic_group,
    dihedral_group,
    direct_product,
    identity_hom,
    klein_four_group,
    quaternion_group,
    symmetric_group,
    trivial_group,
)
from .gwa import GwaObject, SelfAction, is_gwa_morphism
from .validation import StructuralError

MAX_MORPHISMS_ENV = "GXMOD_MAX_MORPHISMS"
DEFAULT_MAX_MORPHISMS = 20000
MAX_CATALOG_ORDER = 8


@lru_cache(maxsize=None)
def group_catalog() -> tuple[GroupTable, ...]:
    """One representative per isomorphism class of groups of order <= 8."""
    z2 = cyclic_group(2)
    z4 = cyclic_group(4)
    groups = [
        trivial_group(),
        z2,
        cyclic_group(3),
        z4,
        klein_four_group(),
        cyclic_group(5),
        cyclic_group(6),
        symmetric_group(3),
        cyclic_group(7),
        cyclic_group(8),
        direct_product(z4, z2, "Z4xZ2"),
        direct_product(klein_four_group(), z2, "Z2^3"),
        dihedral_group(4),
        quaternion_group(),
    ]
    groups.sort(key=lambda g: (g.order, g.name))
    return tuple(groups)


@dataclass(frozen=True)
class SearchPool:
    """The finite universe of groups that enumerations draw from."""

    groups: tuple[GroupTable, ...]
    order_bound: int


def standard_pool(order_bound: int = 8) -> SearchPool:
    if order_bound < 1:
        raise StructuralError("order bound must be >= 1")
    if order_bound > MAX_CATALOG_ORDER:
        raise StructuralError(f"group catalog covers orders up to {MAX_CATALOG_ORDER}")
    return SearchPool(
        tuple(g for g in group_catalog() if g.order <= order_bound), order_bound
    )


@lru_cache(maxsize=None)
def enumerate_self_actions(g: GroupTable) -> tuple[SelfAction, ...]:
    """All self-action tables on g, via homomorphisms into Aut(g).

    The identity law, compatibility law and automorphism law pin these down
    exactly; tests cross-check the count against a raw table search.
    """
    aut_table, auts = automorphism_group(g)
    actions = []
    for rho in all_homs(g, aut_table):
        act = tuple(auts[rho.map[x]].map for x in range(g.order))
        actions.append(SelfAction(g, act))
    actions.sort(key=lambda s: s.act)
    return tuple(actions)


@lru_cache(maxsize=None)
def gwa_objects_for(g: GroupTable) -> tuple[GwaObject, ...]:
    out = []
    for i, sa in enumerate(enumerate_self_actions(g)):
        out.append(GwaObject(g, sa, f"{g.name}#sa{i}"))
    return tuple(out)


def gwa_objects(pool: SearchPool) -> tuple[GwaObject, ...]:
    """Every group in the pool equipped with each of its self-actions."""
    out: list[GwaObject] = []
    for g in pool.groups:
        out.extend(gwa_objects_for(g))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_ext_actions(b: GwaObject, a: GwaObject) -> tuple[ExtAction, ...]:
    """All actions of b's group on a's group by automorphisms.

    These depend only on the underlying groups; the self-actions of a and b
    matter later, in the crossed module conditions.
    """
    aut_table, auts = automorphism_group(a.group)
    out = []
    for rho in all_homs(b.group, aut_table):
        act = tuple(auts[rho.map[x]].map for x in range(b.order))
        out.append(ExtAction(b, a, act))
    out.sort(key=lambda e: e.act)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_gxmods(a: GwaObject, b: GwaObject) -> tuple[GXMod, ...]:
    """All pairs (alpha, action) making (a, b) a generalized crossed module."""
    out = []
    for alpha in all_homs(a.group, b.group):
        for action in enumerate_ext_actions(b, a):
            x = GXMod(a, b, alpha, action)
            if validate_gxmod(x, max_violations=1).ok:
                out.append(x)
    return tuple(out)


def enumerate_liftings(base: GXMod, pool: SearchPool) -> tuple[Lifting, ...]:
    """All liftings of base whose middle object is drawn from the pool."""
    am = base.alpha.map
    na = base.A.order
    out: list[Lifting] = []
    for x_gwa in gwa_objects(pool):
        for omega in all_homs(x_gwa.group, base.B.group):
            om = omega.map
            for phi in all_homs(base.A.group, x_gwa.group):
                pm = phi.map
                if any(om[pm[i]] != am[i] for i in range(na)):
                    continue
                lift = Lifting(base, x_gwa, phi, omega)
                if validate_lifting(lift, max_violations=1).ok:
                    out.append(lift)
    return tuple(out)


def _pullback_self_action(a: GwaObject, f_map: tuple[int, ...], f_inv: tuple[int, ...]) -> SelfAction:
    act = a.self_action.act
    n = a.order
    rows = tuple(
        tuple(f_inv[act[f_map[x]][f_map[y]]] for y in range(n)) for x in range(n)
    )
    return SelfAction(a.group, rows)


def enumerate_coverings(base: GXMod, pool: SearchPool) -> tuple[Covering, ...]:
    """All coverings of base with the top-right group drawn from the pool.

    The covering's A-component shares the underlying group of base.A, with f
    ranging over its automorphisms; the self-action upstairs and the action
    of the top-right group are both forced by the morphism conditions, so
    only the structure map upstairs is searched.
    """
    a_group = base.A.group
    na = a_group.order
    base_act = base.action.act
    out: list[Covering] = []
    for f0 in automorphisms(a_group):
        f_map = f0.map
        f_inv = [0] * na
        for i, v in enumerate(f_map):
            f_inv[v] = i
        f_inv = tuple(f_inv)
        a_tilde = GwaObject(a_group, _pullback_self_action(base.A, f_map, f_inv))
        f = Hom(a_group, a_group, f_map)
        for b_gwa in gwa_objects(pool):
            nb = b_gwa.order
            for g in all_homs(b_gwa.group, base.B.group):
                gm = g.map
                forced = tuple(
                    tuple(f_inv[base_act[gm[bt]][f_map[at]]] for at in range(na))
                    for bt in range(nb)
                )
                action = ExtAction(b_gwa, a_tilde, forced)
                for alpha_t in all_homs(a_group, b_gwa.group):
                    atm = alpha_t.map
                    if any(gm[atm[i]] != base.alpha.map[f_map[i]] for i in range(na)):
                        continue
                    total = GXMod(a_tilde, b_gwa, alpha_t, action)
                    if not validate_gxmod(total, max_violations=1).ok:
                        continue
                    cover = Covering(total, base, f, g)
                    if validate_covering(cover, max_violations=1).ok:
                        out.append(cover)
    return tuple(out)


@lru_cache(maxsize=None)
def _structure_map_pairs(g: GroupTable) -> tuple[tuple[Hom, Hom], ...]:
    """All endomorphism pairs (s, t) with s o t = t and t o s = s.

    Filtered before any action is considered; equivalent to: s and t are
    idempotent with a common image.
    """
    endos = all_homs(g, g)
    n = g.order
    pairs = []
    for s in endos:
        sm = s.map
        for t in endos:
            tm = t.map
            if all(sm[tm[x]] == tm[x] for x in range(n)) and all(
                tm[sm[x]] == sm[x] for x in range(n)
            ):
                pairs.append((s, t))
    return tuple(pairs)


@lru_cache(maxsize=None)
def enumerate_gcat1s(g: GroupTable) -> tuple[GCat1, ...]:
    """Every generalized cat1-group structure on g: all self-actions, all (s, t).

    The composition identities are filtered first (they do not involve the
    action), then self-action preservation of s and t, then the kernel action
    law, memoized per kernel pair.
    """
    from .groups import kernel

    pairs = _structure_map_pairs(g)
    out: list[GCat1] = []
    for gw in gwa_objects_for(g):
        act = gw.self_action.act
        preserving: dict[tuple[int, ...], bool] = {}

        def ok_endo(h: Hom) -> bool:
            cached = preserving.get(h.map)
            if cached is None:
                cached = is_gwa_morphism(h, gw, gw)
                preserving[h.map] = cached
            return cached

        kernel_cond: dict[tuple[tuple[int, ...], tuple[int, ...]], bool] = {}
        for s, t in pairs:
            if not ok_endo(s) or not ok_endo(t):
                continue
            key = (kernel(s).members, kernel(t).members)
            res = kernel_cond.get(key)
            if res is None:
                res = all(act[y][x] == x for y in key[1] for x in key[0])
                kernel_cond[key] = res
            if res:
                out.append(GCat1(gw, s, t))
    return tuple(out)


def gcat1_morphisms_between(c1: GCat1, c2: GCat1) -> tuple[GCat1Morphism, ...]:
    """All cat1-group morphisms c1 -> c2."""
    n = c1.G.order
    s1, t1 = c1.s.map, c1.t.map
    s2, t2 = c2.s.map, c2.t.map
    out = []
    for f in all_homs(c1.G.group, c2.G.group):
        fm = f.map
        if any(fm[s1[x]] != s2[fm[x]] for x in range(n)):
            continue
        if any(fm[t1[x]] != t2[fm[x]] for x in range(n)):
            continue
        if not is_gwa_morphism(f, c1.G, c2.G):
            continue
        out.append(GCat1Morphism(c1, c2, f))
    return tuple(out)


def lifting_morphisms_between(l1: Lifting, l2: Lifting) -> tuple[LiftingMorphism, ...]:
    """All morphisms l1 -> l2: homs between the X parts commuting with both triangles."""
    out = []
    om1, om2 = l1.omega.map, l2.omega.map
    pm1, pm2 = l1.phi.map, l2.phi.map
    for f in all_homs(l1.X.group, l2.X.group):
        fm = f.map
        if any(om2[fm[x]] != om1[x] for x in range(l1.X.order)):
            continue
        if any(fm[pm1[a]] != pm2[a] for a in range(l1.base.A.order)):
            continue
        m = LiftingMorphism(l1, l2, f)
        if validate_lifting_morphism(m, max_violations=1).ok:
            out.append(m)
    return tuple(out)


def covering_morphisms_between(c1: Covering, c2: Covering) -> tuple[CoveringMorphism, ...]:
    """All morphisms c1 -> c2 over the common base.

    The A-component is forced to (f2)^-1 o f1 by the f-triangle; only the
    B-component is searched.
    """
    u_map = tuple(_apply_inverse(c2.f.map, c1.f.map[a]) for a in range(c1.total.A.order))
    u = Hom(c1.total.A.group, c2.total.A.group, u_map)
    out = []
    for v in all_homs(c1.total.B.group, c2.total.B.group):
        vm = v.map
        if any(c2.g.map[vm[b]] != c1.g.map[b] for b in range(c1.total.B.order)):
            continue
        m = CoveringMorphism(c1, c2, u, v)
        if validate_covering_morphism(m, max_violations=1).ok:
            out.append(m)
    return tuple(out)


def _apply_inverse(bij_map: tuple[int, ...], value: int) -> int:
    return bij_map.index(value)


# ---------------------------------------------------------------------------
# the equivalence verifier


@dataclass(frozen=True)
class EquivalenceReport:
    """Everything verify_equivalence checked, with counts and failure details.

    ok means zero failed checks and a pool rich enough to contain the
    canonical liftings (natural, image, self) and the identity covering.
    """

    base_name: str
    order_bound: int
    pool_groups: tuple[str, ...]
    liftings: tuple[Lifting, ...] = field(repr=False, default=())
    coverings: tuple[Covering, ...] = field(repr=False, default=())
    lifting_to_covering_index: tuple[int, ...] = ()
    covering_to_lifting_index: tuple[int, ...] = ()
    roundtrip_lifting_exact: bool = True
    roundtrip_covering_witnesses: tuple[CoveringMorphism, ...] = field(repr=False, default=())
    lifting_morphisms: tuple[LiftingMorphism, ...] = field(repr=False, default=())
    covering_morphisms: tuple[CoveringMorphism, ...] = field(repr=False, default=())
    morphism_checks_passed: int = 0
    morphism_checks_failed: int = 0
    functor_law_checks_passed: int = 0
    functor_law_checks_failed: int = 0
    naturality_checks_passed: int = 0
    naturality_checks_failed: int = 0
    truncated: bool = False
    incomplete: tuple[str, ...] = ()
    failures: tuple[str, ...] = ()

    @property
    def lifting_count(self) -> int:
        return len(self.liftings)

    @property
    def covering_count(self) -> int:
        return len(self.coverings)

    @property
    def lifting_morphism_count(self) -> int:
        return len(self.lifting_morphisms)

    @property
    def covering_morphism_count(self) -> int:
        return len(self.covering_morphisms)

    @property
    def ok(self) -> bool:
        return not self.failures and not self.incomplete

    def consistent(self) -> bool:
        """Internal consistency: index tables and witness lists match the object lists."""
        if len(self.lifting_to_covering_index) != len(self.liftings):
            return False
        if len(self.covering_to_lifting_index) != len(self.coverings):
            return False
        if not self.failures and len(self.roundtrip_covering_witnesses) != len(self.coverings):
            return False
        return True


def _max_morphisms(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get(MAX_MORPHISMS_ENV)
    if env:
        return max(1, int(env))
    return DEFAULT_MAX_MORPHISMS


def verify_equivalence(
    base: GXMod, pool: SearchPool, max_morphisms: int | None = None
) -> EquivalenceReport:
    """Enumerate both categories over the pool and check the equivalence explicitly.

    Object level: every lifting maps to an enumerated covering and back to
    itself table-for-table; every covering maps to an enumerated lifting and
    back to a covering isomorphic to the original, with the witness morphism
    <f, 1> recorded and validated.

    Morphism level: both functors send every enumerated morphism to a valid
    morphism, preserve identities and composition, and satisfy the naturality
    square of the covering-side unit.
    """
    cap = _max_morphisms(max_morphisms)
    failures: list[str] = []
    incomplete: list[str] = []

    liftings = enumerate_liftings(base, pool)
    coverings = enumerate_coverings(base, pool)

    # canonical members the pool must support
    for label, wanted in (
        ("natural lifting", _try(natural_lifting, base)),
        ("image lifting", _try(image_lifting, base)),
        ("self lifting", _try(self_lifting, base)),
    ):
        if wanted is None:
            incomplete.append(f"{label}: construction not available")
        elif wanted.X.order > pool.order_bound:
            incomplete.append(
                f"{label}: requires a group of order {wanted.X.order} beyond bound {pool.order_bound}"
            )
        elif wanted not in liftings:
            incomplete.append(f"{label}: not found in the enumerated pool")
    if base.B.order <= pool.order_bound:
        if identity_covering(base) not in coverings:
            incomplete.append("identity covering: not found in the enumerated pool")
    else:
        incomplete.append(
            f"identity covering: requires a group of order {base.B.order} beyond bound {pool.order_bound}"
        )

    lifting_index = {l: i for i, l in enumerate(liftings)}
    covering_index = {c: i for i, c in enumerate(coverings)}
    # id-keyed positions: morphisms reference the enumerated instances, and
    # structural hashing of nested dataclasses is far too slow for hot loops
    lifting_pos = {id(l): i for i, l in enumerate(liftings)}
    covering_pos = {id(c): i for i, c in enumerate(coverings)}

    l2c: list[int] = []
    rt_lifting_exact = True
    for i, lift in enumerate(liftings):
        cov = lifting_to_covering(lift)
        j = covering_index.get(cov)
        if j is None:
            failures.append(f"lifting {i}: functor image not among enumerated coverings")
            l2c.append(-1)
        else:
            l2c.append(j)
        back = covering_to_lifting(cov)
        if back != lift:
            rt_lifting_exact = False
            failures.append(f"lifting {i}: round trip is not table-identical")

    c2l: list[int] = []
    rt_witnesses: list[CoveringMorphism] = []
    for i, cov in enumerate(coverings):
        lift = covering_to_lifting(cov)
        j = lifting_index.get(lift)
        if j is None:
            failures.append(f"covering {i}: functor image not among enumerated liftings")
            c2l.append(-1)
        else:
            c2l.append(j)
        back = lifting_to_covering(lift)
        witness = CoveringMorphism(cov, back, cov.f, identity_hom(cov.total.B.group))
        wreport = validate_covering_morphism(witness, max_violations=1)
        if not wreport.ok or not witness.f.is_bijective() or not witness.g.is_bijective():
            failures.append(f"covering {i}: round-trip witness <f, 1> is not an isomorphism")
        else:
            rt_witnesses.append(witness)

    # morphisms
    truncated = False
    lifting_morphisms: list[LiftingMorphism] = []
    for i, l1 in enumerate(liftings):
        for l2 in liftings:
            for m in lifting_morphisms_between(l1, l2):
                if len(lifting_morphisms) >= cap:
                    truncated = True
                    break
                lifting_morphisms.append(m)
            if truncated:
                break
        if truncated:
            break
    covering_morphisms: list[CoveringMorphism] = []
    for c1 in coverings:
        for c2 in coverings:
            for m in covering_morphisms_between(c1, c2):
                if len(covering_morphisms) >= cap:
                    truncated = True
                    break
                covering_morphisms.append(m)
            if truncated:
                break
        if truncated:
            break

    # cached functor images of the objects, reused by the morphism-level loops
    cov_image = {i: lifting_to_covering(l) for i, l in enumerate(liftings)}
    lift_image = {i: covering_to_lifting(c) for i, c in enumerate(coverings)}

    ident_a = identity_hom(base.A.group)

    def functor_l2c(m: LiftingMorphism) -> CoveringMorphism:
        return CoveringMorphism(
            cov_image[lifting_pos[id(m.source)]],
            cov_image[lifting_pos[id(m.target)]],
            ident_a,
            m.f,
        )

    def functor_c2l(m: CoveringMorphism) -> LiftingMorphism:
        return LiftingMorphism(
            lift_image[covering_pos[id(m.source)]],
            lift_image[covering_pos[id(m.target)]],
            m.g,
        )

    checks_passed = 0
    checks_failed = 0
    nat_passed = 0
    nat_failed = 0
    for m in lifting_morphisms:
        cm = functor_on_lifting_morphism(m)
        if validate_covering_morphism(cm, max_violations=1).ok:
            checks_passed += 1
        else:
            checks_failed += 1
            failures.append("lifting morphism: functor image invalid")
        back = functor_on_covering_morphism(cm)
        if back.f == m.f and back.source == m.source and back.target == m.target:
            checks_passed += 1
        else:
            checks_failed += 1
            failures.append("lifting morphism: round trip not exact")
    for m in covering_morphisms:
        lm = functor_on_covering_morphism(m)
        if validate_lifting_morphism(lm, max_violations=1).ok:
            checks_passed += 1
        else:
            checks_failed += 1
            failures.append("covering morphism: functor image invalid")
        # naturality of the covering-side unit: <f2, 1> o m = F(G(m)) o <f1, 1>
        lhs_f = tuple(m.target.f.map[m.f.map[a]] for a in range(m.source.total.A.order))
        rhs_f = m.source.f.map
        lhs_g = m.g.map
        rhs_g = functor_on_lifting_morphism(lm).g.map
        if lhs_f == rhs_f and lhs_g == rhs_g:
            nat_passed += 1
        else:
            nat_failed += 1
            failures.append("covering morphism: naturality square broken")

    law_passed = 0
    law_failed = 0
    for lift in liftings:
        ident = identity_lifting_morphism(lift)
        fid = functor_on_lifting_morphism(ident)
        expect = identity_covering_morphism(lifting_to_covering(lift))
        if fid.f == expect.f and fid.g == expect.g:
            law_passed += 1
        else:
            law_failed += 1
            failures.append("functor law: identity lifting morphism not preserved")
    for cov in coverings:
        ident = identity_covering_morphism(cov)
        gid = functor_on_covering_morphism(ident)
        expect = identity_lifting_morphism(covering_to_lifting(cov))
        if gid.f == expect.f:
            law_passed += 1
        else:
            law_failed += 1
            failures.append("functor law: identity covering morphism not preserved")

    # composition law over every composable pair of enumerated morphisms
    by_source_l: dict[int, list[LiftingMorphism]] = {}
    for m in lifting_morphisms:
        by_source_l.setdefault(lifting_pos[id(m.source)], []).append(m)
    for m1 in lifting_morphisms:
        for m2 in by_source_l.get(lifting_pos[id(m1.target)], ()):
            left = functor_l2c(compose_lifting_morphisms(m2, m1))
            right = compose_covering_morphisms(functor_l2c(m2), functor_l2c(m1))
            if left.f.map == right.f.map and left.g.map == right.g.map:
                law_passed += 1
            else:
                law_failed += 1
                failures.append("functor law: composition of lifting morphisms not preserved")
    by_source_c: dict[int, list[CoveringMorphism]] = {}
    for m in covering_morphisms:
        by_source_c.setdefault(covering_pos[id(m.source)], []).append(m)
    for m1 in covering_morphisms:
        for m2 in by_source_c.get(covering_pos[id(m1.target)], ()):
            left = functor_c2l(compose_covering_morphisms(m2, m1))
            right = compose_lifting_morphisms(functor_c2l(m2), functor_c2l(m1))
            if left.f.map == right.f.map:
                law_passed += 1
            else:
                law_failed += 1
                failures.append("functor law: composition of covering morphisms not preserved")

    return EquivalenceReport(
        base_name=base.name or f"({base.A.group.name},{base.B.group.name})",
        order_bound=pool.order_bound,
        pool_groups=tuple(g.name for g in pool.groups),
        liftings=liftings,
        coverings=coverings,
        lifting_to_covering_index=tuple(l2c),
        covering_to_lifting_index=tuple(c2l),
        roundtrip_lifting_exact=rt_lifting_exact,
        roundtrip_covering_witnesses=tuple(rt_witnesses),
        lifting_morphisms=tuple(lifting_morphisms),
        covering_morphisms=tuple(covering_morphisms),
        morphism_checks_passed=checks_passed,
        morphism_checks_failed=checks_failed,
        functor_law_checks_passed=law_passed,
        functor_law_checks_failed=law_failed,
        naturality_checks_passed=nat_passed,
        naturality_checks_failed=nat_failed,
        truncated=truncated,
        incomplete=tuple(incomplete),
        failures=tuple(failures),
    )


def _try(fn, *args):
    try:
        return fn(*args)
    except Exception:
        return None
