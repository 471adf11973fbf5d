import pytest

from genxmod.crossed import (
    ExtAction,
    GXMod,
    GXModMorphism,
    check_alpha_gwa_morphism,
    check_kernel_acts_trivially,
    compose_gxmod_morphisms,
    from_invariant_subgroup,
    identity_gxmod_morphism,
    image_gxmod,
    is_aspherical,
    is_simply_connected,
    kernel_gxmod,
    transport_both,
    transport_codomain,
    transport_domain,
    validate_ext_action,
    validate_gxmod,
    validate_gxmod_full,
    validate_gxmod_morphism,
)
from genxmod.fixtures import a3_s3, gx1, gx2, gx3, s3_conjugation_gwa, z4_inversion_gwa, a3_members
from genxmod.groups import Hom, cyclic_group, identity_hom, subgroup, zero_hom
from genxmod.gwa import gwa
from genxmod.oracles import raw_is_gxmod
from genxmod.validation import PreconditionError


def test_fixture_gxmods_fully_valid():
    from genxmod.fixtures import fixture_gxmods

    for x in fixture_gxmods():
        report = validate_gxmod_full(x)
        assert report.ok, report.summary()
        assert raw_is_gxmod(x)


def test_inner_automorphism_module():
    # g -> conjugation-by-g, with the automorphism group acting naturally
    from genxmod.fixtures import inner_automorphism_gxmod
    from genxmod.groups import klein_four_group, quaternion_group

    for g in (symmetric_group_3(), klein_four_group(), quaternion_group()):
        x = inner_automorphism_gxmod(g)
        report = validate_gxmod_full(x)
        assert report.ok, report.summary()
        assert check_alpha_gwa_morphism(x)
    s3 = inner_automorphism_gxmod()
    # S3 is complete: the inner map is bijective
    assert is_aspherical(s3) and is_simply_connected(s3)


def symmetric_group_3():
    from genxmod.groups import symmetric_group

    return symmetric_group(3)


def test_zero_module_fixture():
    from genxmod.fixtures import zero_module_gxmod

    x = zero_module_gxmod()
    assert validate_gxmod_full(x).ok
    assert not is_aspherical(x)  # everything is in the kernel
    assert check_kernel_acts_trivially(x)


def test_gx3_condition_counts():
    # 2 x 4 equivariance instances and 4 x 4 peiffer instances, all holding
    x = gx3()
    assert validate_gxmod(x).ok
    assert x.B.order * x.A.order == 8
    assert x.A.order * x.A.order == 16


def test_zero_alpha_with_nontrivial_self_action_rejected():
    # peiffer forces ^a a1 = 0 . a1 = a1, contradicting the inversion action
    a = z4_inversion_gwa()
    b = gwa(cyclic_group(2))
    x = GXMod(a, b, zero_hom(a.group, b.group), ExtAction(b, a, ((0, 1, 2, 3), (0, 1, 2, 3))))
    report = validate_gxmod(x)
    assert "peiffer" in report.laws()


def test_ext_action_axioms():
    a = gwa(cyclic_group(4))
    b = gwa(cyclic_group(2))
    good = ExtAction(b, a, ((0, 1, 2, 3), (0, 3, 2, 1)))
    assert validate_ext_action(good).ok
    bad = ExtAction(b, a, ((0, 1, 2, 3), (0, 3, 2, 2)))
    assert not validate_ext_action(bad).ok


def test_morphism_identity_and_composition():
    x = gx3()
    ident = identity_gxmod_morphism(x)
    assert validate_gxmod_morphism(ident).ok
    assert compose_gxmod_morphisms(ident, ident).f == ident.f


def test_morphism_gx3_to_gx1():
    # <mod2, id>: GX3 -> GX1
    x, y = gx3(), gx1()
    f = Hom(x.A.group, y.A.group, (0, 1, 0, 1))
    g = identity_hom(y.B.group)
    m = GXModMorphism(x, y, f, g)
    report = validate_gxmod_morphism(m)
    assert report.ok, report.summary()


def test_morphism_square_violation_detected():
    x, y = gx3(), gx1()
    f = Hom(x.A.group, y.A.group, (0, 1, 0, 1))
    g = Hom(y.B.group, y.B.group, (0, 0))  # zero instead of id breaks the square
    report = validate_gxmod_morphism(GXModMorphism(x, y, f, g))
    assert "square" in report.laws()


def test_alpha_is_gwa_morphism_probe():
    for x in (gx1(), gx2(), gx3(), a3_s3()):
        assert check_alpha_gwa_morphism(x)


def test_aspherical_simply_connected():
    assert is_aspherical(a3_s3()) and not is_simply_connected(a3_s3())
    assert not is_aspherical(gx3()) and is_simply_connected(gx3())
    assert is_aspherical(gx1()) and is_simply_connected(gx1())


def test_kernel_gxmod_gx3():
    x = gx3()
    k = kernel_gxmod(x)
    assert k.A.group.order == 2  # {0, 2} renumbered
    assert k.alpha.map == (0, 2)
    assert validate_gxmod_full(k).ok
    assert is_aspherical(k)


def test_kernel_gxmod_aspherical_input():
    k = kernel_gxmod(a3_s3())
    assert k.A.group.order == 1


def test_kernel_gxmod_zero_map_all_trivial():
    z2 = gwa(cyclic_group(2))
    x = GXMod(z2, z2, zero_hom(z2.group, z2.group), ExtAction(z2, z2, ((0, 1), (0, 1))))
    assert validate_gxmod(x).ok
    k = kernel_gxmod(x)
    assert k.A.group.order == 2
    assert k.B == z2
    assert k.alpha.map == (0, 1)
    assert validate_gxmod(k).ok


def test_image_gxmod():
    x = gx3()
    im = image_gxmod(x)
    assert im.A.group.order == 2 and im.alpha.map == (0, 1)
    assert validate_gxmod_full(im).ok
    assert is_aspherical(im)

    y = a3_s3()
    imy = image_gxmod(y)
    # alpha injective: image is a fresh copy of A3 inside S3
    assert imy.A.group.order == 3
    assert imy.alpha.map == a3_members()

    z2 = gwa(cyclic_group(2))
    zero = GXMod(z2, z2, zero_hom(z2.group, z2.group), ExtAction(z2, z2, ((0, 1), (0, 1))))
    assert image_gxmod(zero).A.group.order == 1


def test_kernel_acts_trivially():
    for x in (gx1(), gx2(), gx3(), a3_s3()):
        assert check_kernel_acts_trivially(x)


def test_from_invariant_subgroup_a3():
    g = s3_conjugation_gwa()
    x = from_invariant_subgroup(g, subgroup(g.group, a3_members()))
    assert validate_gxmod_full(x).ok
    assert is_aspherical(x)


def test_from_invariant_subgroup_trivial():
    g = s3_conjugation_gwa()
    x = from_invariant_subgroup(g, subgroup(g.group, [0]))
    assert validate_gxmod(x).ok
    assert x.A.group.order == 1


def test_from_invariant_subgroup_z4():
    g = z4_inversion_gwa()
    x = from_invariant_subgroup(g, subgroup(g.group, [0, 2]))
    assert validate_gxmod_full(x).ok


def test_from_invariant_subgroup_rejects_non_invariant():
    g = s3_conjugation_gwa()
    s3 = g.group
    transposition = next(i for i in range(1, 6) if s3.op[i][i] == 0)
    with pytest.raises(PreconditionError):
        from_invariant_subgroup(g, subgroup(s3, [0, transposition]))


# ---------------------------------------------------------------------------
# transports


def _z2_gwa():
    return gwa(cyclic_group(2))


def test_transport_codomain_identity():
    x = gx3()
    y, w = transport_codomain(x, identity_hom(x.B.group), x.B)
    assert y == x
    assert validate_gxmod_morphism(w).ok


def test_transport_codomain_unique_z2_automorphism():
    x = gx3()
    y, _ = transport_codomain(x, identity_hom(x.B.group), x.B)
    assert y == x  # Aut(Z2) is trivial


def test_transport_codomain_conjugation_automorphism():
    x = a3_s3()
    s3 = x.B.group
    transposition = next(i for i in range(1, 6) if s3.op[i][i] == 0)
    conj = Hom(s3, s3, tuple(s3.conjugate(transposition, g) for g in range(6)))
    y, w = transport_codomain(x, conj, x.B)
    assert validate_gxmod_full(y).ok
    assert validate_gxmod_morphism(w).ok
    assert w.f.is_bijective() and w.g.is_bijective()


def test_transport_domain_identity():
    x = gx3()
    y, w = transport_domain(x, identity_hom(x.A.group), x.A)
    assert y == x
    assert validate_gxmod_morphism(w).ok


def test_transport_domain_inversion_automorphism():
    # inversion n -> -n preserves the parity-inversion self-action of Z4
    x = gx3()
    inv = Hom(x.A.group, x.A.group, x.A.group.inv)
    y, w = transport_domain(x, inv, x.A)
    assert validate_gxmod_full(y).ok
    assert validate_gxmod_morphism(w).ok


def test_transport_roundtrip_exact_tables():
    x = a3_s3()
    s3 = x.B.group
    transposition = next(i for i in range(1, 6) if s3.op[i][i] == 0)
    conj = Hom(s3, s3, tuple(s3.conjugate(transposition, g) for g in range(6)))
    conj_inv = Hom(s3, s3, tuple(s3.conjugate(s3.inv[transposition], g) for g in range(6)))
    y, _ = transport_codomain(x, conj, x.B)
    z, _ = transport_codomain(y, conj_inv, x.B)
    assert z == x


def test_transport_both_matches_composition_and_commutes():
    x = gx3()
    f = identity_hom(x.B.group)
    g = Hom(x.A.group, x.A.group, x.A.group.inv)
    both, w = transport_both(x, f, x.B, g, x.A)
    via_domain, _ = transport_domain(x, g, x.A)
    via_both, _ = transport_codomain(via_domain, f, x.B)
    assert both == via_both
    # other order of application agrees
    via_codomain, _ = transport_codomain(x, f, x.B)
    other_order, _ = transport_domain(via_codomain, g, x.A)
    assert both == other_order
    assert validate_gxmod_morphism(w).ok
    assert validate_gxmod_full(both).ok


def test_transport_rejects_non_isomorphism():
    x = gx3()
    with pytest.raises(PreconditionError):
        transport_codomain(x, zero_hom(x.B.group, x.B.group), x.B)
    with pytest.raises(PreconditionError):
        transport_domain(x, Hom(x.A.group, x.A.group, (0, 1, 0, 1)), x.A)


def test_transport_rejects_non_action_preserving_iso():
    # identity Z4 -> Z4 as map, but between inversion and trivial self-actions
    x = gx3()
    plain = gwa(cyclic_group(4))
    with pytest.raises(PreconditionError):
        transport_domain(x, identity_hom(x.A.group), plain)


def test_morphism_composition_closure():
    # composing valid morphisms yields valid morphisms, across a small pool
    from genxmod.groups import all_homs
    from genxmod.search import enumerate_gxmods, standard_pool, gwa_objects

    objs = [g for g in gwa_objects(standard_pool(2))]
    objs.append(gwa(cyclic_group(4)))
    xs = []
    for a in objs:
        for b in objs:
            xs.extend(enumerate_gxmods(a, b))
    morphisms = []
    for x in xs:
        for y in xs:
            for f in all_homs(x.A.group, y.A.group):
                for g in all_homs(x.B.group, y.B.group):
                    m = GXModMorphism(x, y, f, g)
                    if validate_gxmod_morphism(m, max_violations=1).ok:
                        morphisms.append(m)
    assert len(morphisms) > 50
    composed = 0
    for m1 in morphisms:
        for m2 in morphisms:
            if m2.source == m1.target:
                c = compose_gxmod_morphisms(m2, m1)
                assert validate_gxmod_morphism(c, max_violations=1).ok
                composed += 1
    assert composed > 100
