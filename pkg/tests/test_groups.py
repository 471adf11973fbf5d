import pytest

from genxmod.groups import (
    GroupTable,
    Hom,
    all_homs,
    automorphism_group,
    automorphisms,
    compose_homs,
    cyclic_group,
    dihedral_group,
    direct_product,
    group_from_op,
    identity_hom,
    image,
    inverse_hom,
    kernel,
    klein_four_group,
    quaternion_group,
    subgroup,
    symmetric_group,
    trivial_group,
    validate_group,
    validate_hom,
    zero_hom,
)
from genxmod.oracles import raw_associativity_witnesses, raw_aut_maps, raw_hom_maps
from genxmod.validation import StructuralError


def test_trivial_group_valid():
    assert validate_group(trivial_group()).ok


def test_z4_valid():
    assert validate_group(cyclic_group(4)).ok


def test_standard_groups_valid():
    for g in (
        cyclic_group(2),
        cyclic_group(3),
        cyclic_group(8),
        klein_four_group(),
        symmetric_group(3),
        dihedral_group(4),
        quaternion_group(),
        direct_product(cyclic_group(4), cyclic_group(2)),
    ):
        report = validate_group(g)
        assert report.ok, report.summary()


def test_corrupted_z4_associativity_witness():
    # spec example, expected value frozen from the triple-loop oracle:
    # with op(1,1) := 3 the lex-first failing triple is (1,1,2)
    z4 = cyclic_group(4)
    op = [list(row) for row in z4.op]
    op[1][1] = 3
    broken = GroupTable(4, tuple(tuple(r) for r in op), 0, z4.inv, "Z4broken")
    report = validate_group(broken)
    assert not report.ok
    v = report.first("associativity")
    assert v is not None
    assert v.witness == (1, 1, 2)
    assert raw_associativity_witnesses(op)[0] == (1, 1, 2)


def test_malformed_table_is_structural_not_axiomatic():
    bad = GroupTable(2, ((0, 5), (1, 0)), 0, (0, 1), "bad")
    with pytest.raises(StructuralError):
        validate_group(bad)


def test_group_from_op_requires_identity():
    with pytest.raises(StructuralError):
        group_from_op([[0, 0], [0, 0]])  # constant table has no identity
    # a shuffled table still works: identity found wherever it sits
    shuffled = group_from_op([[1, 0], [0, 1]])
    assert shuffled.identity == 1


def test_identity_and_inverse_violations_reported():
    # identity stays fine; break inverses by lying in the inv table
    z4 = cyclic_group(4)
    broken = GroupTable(4, z4.op, 0, (0, 1, 2, 3), "badinv")
    report = validate_group(broken)
    assert "inverse_law" in report.laws()


def test_hom_validation():
    z4, z2 = cyclic_group(4), cyclic_group(2)
    mod2 = Hom(z4, z2, (0, 1, 0, 1))
    assert validate_hom(mod2).ok
    not_hom = Hom(z4, z2, (0, 1, 1, 0))
    report = validate_hom(not_hom)
    assert "homomorphism" in report.laws()


def test_inclusion_z2_in_z4_not_a_hom():
    # 1+1 = 0 in Z2 but 1+1 = 2 in Z4
    z2, z4 = cyclic_group(2), cyclic_group(4)
    incl = Hom(z2, z4, (0, 1))
    assert not validate_hom(incl).ok


def test_kernel_image():
    z4, z2 = cyclic_group(4), cyclic_group(2)
    assert kernel(identity_hom(z4)).members == (0,)
    mod2 = Hom(z4, z2, (0, 1, 0, 1))
    assert kernel(mod2).members == (0, 2)
    assert image(mod2).members == (0, 1)
    assert image(zero_hom(z4, z2)).members == (0,)


def test_kernel_image_are_subgroups_for_all_small_homs():
    from genxmod.search import group_catalog

    for src in group_catalog():
        for tgt in group_catalog():
            for f in all_homs(src, tgt):
                subgroup(src, kernel(f).members)
                subgroup(tgt, image(f).members)


def test_compose_and_inverse():
    z4 = cyclic_group(4)
    neg = Hom(z4, z4, (0, 3, 2, 1))
    assert compose_homs(neg, neg) == identity_hom(z4)
    assert inverse_hom(neg) == neg


def test_all_homs_against_raw_oracle():
    cases = [
        (cyclic_group(2), cyclic_group(2)),
        (cyclic_group(4), cyclic_group(4)),
        (cyclic_group(4), cyclic_group(2)),
        (klein_four_group(), symmetric_group(3)),
        (symmetric_group(3), symmetric_group(3)),
        (cyclic_group(6), symmetric_group(3)),
    ]
    for src, tgt in cases:
        fast = {f.map for f in all_homs(src, tgt)}
        raw = set(raw_hom_maps(src.op, tgt.op))
        assert fast == raw, (src.name, tgt.name)


def test_end_s3_count():
    s3 = symmetric_group(3)
    assert len(all_homs(s3, s3)) == 10


def test_automorphisms_against_permutation_oracle():
    for g in (cyclic_group(4), klein_four_group(), symmetric_group(3),
              cyclic_group(8), quaternion_group()):
        fast = {f.map for f in automorphisms(g)}
        raw = set(raw_aut_maps(g.op))
        assert fast == raw, g.name


def test_automorphism_group_is_a_group():
    for g in (klein_four_group(), symmetric_group(3), quaternion_group()):
        aut_table, auts = automorphism_group(g)
        assert validate_group(aut_table).ok
        assert aut_table.order == len(auts)


def test_aut_orders():
    assert automorphism_group(cyclic_group(2))[0].order == 1
    assert automorphism_group(cyclic_group(4))[0].order == 2
    assert automorphism_group(klein_four_group())[0].order == 6
    assert automorphism_group(symmetric_group(3))[0].order == 6
    assert automorphism_group(quaternion_group())[0].order == 24
