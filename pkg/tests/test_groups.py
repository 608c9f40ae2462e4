import pytest
from hypothesis import given, strategies as st

from blockfuse.groups import (GroupMap, Subgroup, all_subgroups, build_group,
                              centralizer, centralizer_in, conjugacy_classes,
                              conjugation_map, coset_reps, cyclic_subgroup, full_subgroup,
                              generated_subgroup, inclusion_map, normalizer,
                              normalizer_in, p_part, sylow_p_subgroup, trivial_subgroup)
from oracles import all_subgroups_brute, commuting_with, conjugacy_classes_brute


def test_build_trivial_table():
    G = build_group({"kind": "table", "name": "1", "table": [[0]]})
    assert G.order == 1 and G.inv == (0,)


def test_build_d24_from_generators(d24):
    assert d24.order == 24
    r, s = 1, 2  # breadth-first indices of the two generators
    assert d24.element_order(r) == 12
    assert d24.element_order(s) == 2
    # s r s = r^-1
    assert d24.mul[d24.mul[s][r]][s] == d24.inv[r]


def test_c3_class_count(groups):
    c3 = groups["c3"]
    assert len(conjugacy_classes(c3)) == 3
    assert conjugacy_classes(c3) == tuple(conjugacy_classes_brute(c3))


def test_class_order_and_oracle(groups):
    for G in groups.values():
        classes = conjugacy_classes(G)
        assert list(classes) == conjugacy_classes_brute(G)
        assert [c[0] for c in classes] == sorted(c[0] for c in classes)


def test_associativity_and_inverse_involution(groups):
    for G in groups.values():
        for a in range(G.order):
            assert G.inv[G.inv[a]] == a
            for b in range(G.order):
                for c in range(G.order):
                    assert G.mul[G.mul[a][b]][c] == G.mul[a][G.mul[b][c]]


def test_build_rejects_non_associative():
    table = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
    build_group({"kind": "table", "name": "V", "table": table})  # fine: Klein four
    bad = [row[:] for row in table]
    bad[3][3] = 1  # row 3 now repeats 1; caught as a non-permutation
    with pytest.raises(ValueError):
        build_group({"kind": "table", "name": "broken", "table": bad})
    # a latin square with identity that is not associative (an order-5 loop)
    loop = [[0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0]]
    with pytest.raises(ValueError, match="associative"):
        build_group({"kind": "table", "name": "loop5", "table": loop})


def test_build_rejects_bad_generators():
    with pytest.raises(ValueError):
        build_group({"kind": "perm", "name": "x", "degree": 3, "generators": [[0, 0, 1]]})


def test_build_rejects_oversize():
    with pytest.raises(ValueError):
        build_group({"kind": "perm", "name": "c5", "degree": 5,
                     "generators": [[1, 2, 3, 4, 0]]}, max_order=4)


def test_centralizer_trivial_and_full(groups):
    for G in groups.values():
        assert centralizer(G, trivial_subgroup(G)).order == G.order
    c6 = groups["c6"]
    any_sub = cyclic_subgroup(c6, 1)
    assert centralizer(c6, any_sub).order == c6.order  # abelian


def test_centralizer_of_c4_in_d24(d24):
    r = 1
    C4 = cyclic_subgroup(d24, d24.power(r, 3))
    cent = centralizer(d24, C4)
    assert cent.order == 12
    assert cent.elems == cyclic_subgroup(d24, r).elems
    assert cent.elems == commuting_with(d24, C4.elems)


def test_normalizer_cases(d24):
    assert normalizer(d24, full_subgroup(d24)).order == 24
    assert normalizer(d24, trivial_subgroup(d24)).order == 24
    C4 = cyclic_subgroup(d24, d24.power(1, 3))
    assert normalizer(d24, C4).order == 24  # C4 is normal in D24


def test_sylow_examples(groups, d24):
    assert sylow_p_subgroup(groups["c3"], 2).order == 1
    assert sylow_p_subgroup(d24, 2).order == 8
    S3 = sylow_p_subgroup(d24, 3)
    assert S3.order == 3
    assert S3.elems == cyclic_subgroup(d24, d24.power(1, 4)).elems


def test_sylow_against_subgroup_enumeration(groups):
    for G in groups.values():
        for p in (2, 3):
            S = sylow_p_subgroup(G, p)
            assert S.order == p_part(G.order, p)
            subs = all_subgroups(full_subgroup(G))
            assert S.order == max(H.order for H in subs
                                  if H.order == p_part(H.order, p))


def test_sylow_rejects_composite(d24):
    with pytest.raises(ValueError):
        sylow_p_subgroup(d24, 4)


def test_all_subgroups_counts(groups, d24):
    c4 = groups["c4"]
    assert len(all_subgroups(full_subgroup(c4))) == 3
    v4 = groups["c2c2"]
    assert len(all_subgroups(full_subgroup(v4))) == 5
    d8 = groups["d8"]
    subs = all_subgroups(full_subgroup(d8))
    assert len(subs) == 10
    assert {H.elems for H in subs} == all_subgroups_brute(full_subgroup(d8))
    assert [(

        H.order, H.elems) for H in subs] == sorted((H.order, H.elems) for H in subs)


def test_all_subgroups_bound(d24):
    with pytest.raises(ValueError):
        all_subgroups(full_subgroup(d24), max_order=8)


def test_conjugation_map_cases(d24):
    r, s = 1, 2
    C4 = cyclic_subgroup(d24, d24.power(r, 3))
    C2 = cyclic_subgroup(d24, d24.power(r, 6))
    incl = conjugation_map(d24, 0, C2, C4)
    assert incl == inclusion_map(C2, C4)
    inv_map = conjugation_map(d24, s, C4, C4)
    assert inv_map is not None
    for g in C4.elems:
        assert inv_map.apply(g) == d24.inv[g]
    assert conjugation_map(d24, 0, C4, C2) is None  # order obstruction


def test_conjugation_map_multiplicative(d24):
    C4 = cyclic_subgroup(d24, d24.power(1, 3))
    for x in range(d24.order):
        m = conjugation_map(d24, x, C4, full_subgroup(d24))
        assert m is not None
        for a in C4.elems:
            for b in C4.elems:
                assert m.apply(d24.mul[a][b]) == d24.mul[m.apply(a)][m.apply(b)]
        assert len(set(m.images)) == C4.order


def test_centralizer_subset_normalizer(groups):
    for G in groups.values():
        for H in all_subgroups(sylow_p_subgroup(G, 2)):
            assert centralizer(G, H).is_subset_of(normalizer(G, H))


def test_subgroup_validation(d24):
    with pytest.raises(ValueError):
        Subgroup(d24, (0, 1))  # r alone is not closed
    with pytest.raises(ValueError):
        Subgroup(d24, (1, 2))  # missing identity


def test_group_map_validation(d24):
    C4 = cyclic_subgroup(d24, d24.power(1, 3))
    with pytest.raises(ValueError):
        GroupMap(C4, C4, (0, 6, 6, 18))  # not injective
    with pytest.raises(ValueError):
        GroupMap(C4, C4, (6, 0, 17, 18))  # identity not preserved


def test_as_group_localization(d24):
    C = centralizer(d24, cyclic_subgroup(d24, d24.power(1, 3)))
    local = C.as_group()
    assert local.order == 12
    assert local.ambient is d24
    assert local.ambient_elems == C.elems
    assert C.as_group() is local  # cached
    # local index arithmetic matches ambient arithmetic through the re-map
    for i in range(local.order):
        for j in range(local.order):
            assert C.elems[local.mul[i][j]] == d24.mul[C.elems[i]][C.elems[j]]
    assert full_subgroup(d24).as_group() is d24


def test_coset_reps_cover(d24):
    H = full_subgroup(d24)
    I = cyclic_subgroup(d24, 1)
    reps = coset_reps(H, I)
    assert len(reps) == 2
    seen = {d24.mul[x][i] for x in reps for i in I.elems}
    assert seen == set(range(24))


@given(st.data())
def test_generated_subgroup_is_closed(groups, data):
    G = data.draw(st.sampled_from(sorted(groups.values(), key=lambda g: g.name)))
    gens = data.draw(st.lists(st.integers(0, G.order - 1), min_size=0, max_size=3))
    H = generated_subgroup(G, gens)
    Subgroup(G, H.elems)  # re-validates closure and identity membership
    assert all(g in H.elems for g in gens)


def test_relative_centralizer_normalizer(d24):
    P = sylow_p_subgroup(d24, 2)
    C2 = cyclic_subgroup(d24, d24.power(1, 6))
    assert centralizer_in(P, C2).is_subset_of(P)
    assert normalizer_in(P, C2).is_subset_of(P)
    assert centralizer_in(P, C2).is_subset_of(normalizer_in(P, C2))
