"""Groups acting on themselves by automorphisms, their subobjects, ideals and quotients.

A self-action table act[g][h] encodes the element usually written ^g h.  The
three axioms enforced throughout: the identity acts trivially, the action is
compatible with the group operation (act[g1*g2] = act[g1] o act[g2]), and
every act[g] distributes over the operation, i.e. acts by automorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groups import GroupTable, Hom, Subgroup, Table, _freeze, subgroup
from .validation import (
    DEFAULT_MAX_VIOLATIONS,
    PreconditionError,
    StructuralError,
    ValidationReport,
    _Collector,
)


@dataclass(frozen=True)
class SelfAction:
    group: GroupTable
    act: Table

    def __call__(self, g: int, h: int) -> int:
        return self.act[g][h]


@dataclass(frozen=True)
class GwaObject:
    """A group together with a self-action: an object of the category of groups with action."""

    group: GroupTable
    self_action: SelfAction
    name: str = field(default="", compare=False)

    @property
    def order(self) -> int:
        return self.group.order

    def act(self, g: int, h: int) -> int:
        return self.self_action.act[g][h]

    def __repr__(self) -> str:
        return f"GwaObject({self.name or self.group.name})"


def trivial_self_action(g: GroupTable) -> SelfAction:
    row = tuple(range(g.order))
    return SelfAction(g, tuple(row for _ in range(g.order)))


def conjugation_self_action(g: GroupTable) -> SelfAction:
    return SelfAction(
        g, tuple(tuple(g.conjugate(a, b) for b in range(g.order)) for a in range(g.order))
    )


def parity_inversion_action(g: GroupTable) -> SelfAction:
    """Even elements of an even cyclic group act trivially, odd ones by inversion."""
    rows = []
    for a in range(g.order):
        if a % 2 == 0:
            rows.append(tuple(range(g.order)))
        else:
            rows.append(g.inv)
    return SelfAction(g, _freeze(rows))


def gwa(group: GroupTable, action: SelfAction | None = None, name: str = "") -> GwaObject:
    if action is None:
        action = trivial_self_action(group)
    if action.group != group:
        raise StructuralError("self-action built over a different group table")
    return GwaObject(group, action, name or group.name)


def validate_gwa(g: GwaObject, max_violations: int = DEFAULT_MAX_VIOLATIONS) -> ValidationReport:
    """Check the three self-action axioms with witnesses."""
    n = g.group.order
    act = g.self_action.act
    if g.self_action.group != g.group:
        raise StructuralError("self-action group reference mismatch")
    if len(act) != n or any(len(row) != n for row in act):
        raise StructuralError("self-action table dimensions do not match order")
    if any(x < 0 or x >= n for row in act for x in row):
        raise StructuralError("self-action table entry out of range")
    col = _Collector(max_violations)
    op = g.group.op
    e = g.group.identity
    for h in range(n):
        if act[e][h] != h:
            col.add("action_identity", (h,), f"^{e} {h} = {act[e][h]}, expected {h}")
    for g1 in range(n):
        row1 = act[g1]
        for g2 in range(n):
            row12 = act[op[g1][g2]]
            row2 = act[g2]
            for h in range(n):
                if row12[h] != row1[row2[h]]:
                    col.add(
                        "action_compatibility",
                        (g1, g2, h),
                        f"^({g1}*{g2}) {h} = {row12[h]} != ^{g1}(^{g2} {h}) = {row1[row2[h]]}",
                    )
                    break
    for a in range(n):
        row = act[a]
        for h1 in range(n):
            for h2 in range(n):
                if row[op[h1][h2]] != op[row[h1]][row[h2]]:
                    col.add(
                        "action_automorphism",
                        (a, h1, h2),
                        f"^{a}({h1}*{h2}) = {row[op[h1][h2]]} != (^{a} {h1})*(^{a} {h2}) = {op[row[h1]][row[h2]]}",
                    )
                    break
    return col.report(g.name or "gwa")


def validate_gwa_morphism(
    f: Hom, src: GwaObject, tgt: GwaObject, max_violations: int = DEFAULT_MAX_VIOLATIONS
) -> ValidationReport:
    """Check that f preserves the self-action: f(^g g1) = ^f(g) f(g1)."""
    if f.source != src.group or f.target != tgt.group:
        raise StructuralError("hom endpoints do not match the given gwa objects")
    col = _Collector(max_violations)
    sa, ta, m = src.self_action.act, tgt.self_action.act, f.map
    for g in range(src.order):
        for g1 in range(src.order):
            if m[sa[g][g1]] != ta[m[g]][m[g1]]:
                col.add(
                    "action_preserved",
                    (g, g1),
                    f"f(^{g} {g1}) = {m[sa[g][g1]]} != ^f({g}) f({g1}) = {ta[m[g]][m[g1]]}",
                )
    return col.report("gwa morphism")


def is_gwa_morphism(f: Hom, src: GwaObject, tgt: GwaObject) -> bool:
    sa, ta, m = src.self_action.act, tgt.self_action.act, f.map
    return all(
        m[sa[g][g1]] == ta[m[g]][m[g1]] for g in range(src.order) for g1 in range(src.order)
    )


def is_subobject(h: Subgroup, g: GwaObject) -> bool:
    """True when h is invariant under the self-action of every element of g.

    This is the stronger of the two readings of closure under the ambient
    action; it is the one required for ideals and quotients.
    """
    if h.parent != g.group:
        raise StructuralError("subgroup parent is not the gwa object's group")
    act = g.self_action.act
    members = set(h.members)
    return all(act[x][n] in members for x in range(g.order) for n in h.members)


@dataclass(frozen=True)
class IdealReport:
    """The three ideal conditions for a subgroup N of a group with action G.

    normal:             N is a normal subgroup of G
    action_closed:      ^g n lies in N for every g in G, n in N
    displacement_closed: (^n g) * g^-1 lies in N for every n in N, g in G
    """

    normal: bool
    action_closed: bool
    displacement_closed: bool
    witness: tuple[int, ...] = ()

    @property
    def is_ideal(self) -> bool:
        return self.normal and self.action_closed and self.displacement_closed

    def failed_condition(self) -> str | None:
        if not self.normal:
            return "normal"
        if not self.action_closed:
            return "action_closed"
        if not self.displacement_closed:
            return "displacement_closed"
        return None


def is_ideal(n: Subgroup, g: GwaObject) -> IdealReport:
    if n.parent != g.group:
        raise StructuralError("subgroup parent is not the gwa object's group")
    subgroup(g.group, n.members)  # raises StructuralError when not a subgroup
    members = set(n.members)
    op, inv, act = g.group.op, g.group.inv, g.self_action.act
    normal = True
    action_closed = True
    displacement_closed = True
    witness: tuple[int, ...] = ()
    for x in range(g.order):
        for m in n.members:
            if g.group.conjugate(x, m) not in members:
                if normal:
                    witness = witness or (x, m)
                normal = False
            if act[x][m] not in members:
                action_closed = False
                witness = witness or (x, m)
    for m in n.members:
        row = act[m]
        for x in range(g.order):
            if op[row[x]][inv[x]] not in members:
                displacement_closed = False
                witness = witness or (m, x)
    return IdealReport(normal, action_closed, displacement_closed, witness)


def quotient_gwa(g: GwaObject, n: Subgroup) -> tuple[GwaObject, Hom]:
    """Quotient group with the induced self-action, plus the canonical projection.

    Cosets are indexed by ascending minimal member, which keeps the identity
    coset at index 0 whenever the identity is element 0.
    """
    report = is_ideal(n, g)
    if not report.is_ideal:
        raise PreconditionError(
            report.failed_condition() or "ideal",
            f"subgroup is not an ideal: {report.failed_condition()} fails at {report.witness}",
        )
    op = g.group.op
    members = n.members
    coset_of: dict[int, frozenset] = {}
    cosets: list[frozenset] = []
    for x in range(g.order):
        if x in coset_of:
            continue
        c = frozenset(op[x][m] for m in members)
        for y in c:
            coset_of[y] = c
        cosets.append(c)
    cosets.sort(key=min)
    index = {c: i for i, c in enumerate(cosets)}
    k = len(cosets)
    reps = [min(c) for c in cosets]
    q_op = [[0] * k for _ in range(k)]
    q_act = [[0] * k for _ in range(k)]
    act = g.self_action.act
    for i, ri in enumerate(reps):
        for j, rj in enumerate(reps):
            q_op[i][j] = index[coset_of[op[ri][rj]]]
            q_act[i][j] = index[coset_of[act[ri][rj]]]
    q_identity = index[coset_of[g.group.identity]]
    q_inv = [0] * k
    for i in range(k):
        q_inv[i] = next(j for j in range(k) if q_op[i][j] == q_identity)
    q_group = GroupTable(k, _freeze(q_op), q_identity, tuple(q_inv), f"{g.group.name}/N")
    q = GwaObject(q_group, SelfAction(q_group, _freeze(q_act)), f"{g.name}/N")
    proj = Hom(g.group, q_group, tuple(index[coset_of[x]] for x in range(g.order)), "proj")
    return q, proj


def sub_gwa(g: GwaObject, members) -> tuple[GwaObject, Hom]:
    """The gwa object on a subgroup with the restricted self-action, plus its embedding.

    Members are renumbered 0..k-1 in ascending order.  Raises StructuralError
    when the subset is not closed under the restricted action.
    """
    sub = subgroup(g.group, members)
    ms = sub.members
    pos = {m: i for i, m in enumerate(ms)}
    k = len(ms)
    op = [[0] * k for _ in range(k)]
    act = [[0] * k for _ in range(k)]
    gop, gact = g.group.op, g.self_action.act
    for i, a in enumerate(ms):
        for j, b in enumerate(ms):
            op[i][j] = pos[gop[a][b]]
            y = gact[a][b]
            if y not in pos:
                raise StructuralError(
                    f"subset not closed under the restricted self-action: ^{a} {b} = {y}"
                )
            act[i][j] = pos[y]
    identity = pos[g.group.identity]
    inv = tuple(pos[g.group.inv[m]] for m in ms)
    sg = GroupTable(k, _freeze(op), identity, inv, f"{g.group.name}|sub")
    sgwa = GwaObject(sg, SelfAction(sg, _freeze(act)), f"{g.name}|sub")
    emb = Hom(sg, g.group, ms, "incl")
    return sgwa, emb
