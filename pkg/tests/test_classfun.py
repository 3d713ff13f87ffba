"""Class functions: inner products, powers, permutation characters,
restriction, induction, sign characters, and the {1,-1} homomorphisms.

Derived expected values are computed by element-by-element summation in
helpers.py, independently of the class-weighted implementation.
"""

from fractions import Fraction

import pytest

from permbase import (ClassFunction, alternating_action, class_function_from_json,
                      class_function_to_json, cyclic_action, dihedral_action,
                      induce, inner_product, ksubset_action,
                      permutation_character, pgl2_action, pm1_characters,
                      restrict, sign_character, symmetric_action,
                      trivial_character)
from helpers import induce_elementwise, inner_product_elementwise


def s3_action():
    return symmetric_action(3)


def test_inner_product_trivial_normalization():
    for a in (s3_action(), dihedral_action(4), pgl2_action(3)):
        one = trivial_character(a.group)
        assert inner_product(one, one) == 1


def test_s3_inner_products_against_elementwise_sum():
    a = s3_action()
    sgn = sign_character(a.group)
    chi = permutation_character(a)
    # independent oracle: direct summation over the 6 group elements
    assert inner_product_elementwise(sgn, chi).as_fraction() == 0
    assert inner_product_elementwise(sgn, chi * chi).as_fraction() == 1
    assert inner_product(sgn, chi) == 0
    assert inner_product(sgn, chi * chi) == 1


def test_inner_product_group_mismatch():
    with pytest.raises(ValueError):
        inner_product(trivial_character(s3_action().group),
                      trivial_character(dihedral_action(4).group))


def test_power_zero_and_one():
    a = s3_action()
    chi = permutation_character(a)
    assert chi ** 0 == trivial_character(a.group)
    assert chi ** 1 == chi


def test_s3_chi_squared_values():
    a = s3_action()
    chi = permutation_character(a)
    sq = chi ** 2
    # classes in order: identity, 3-cycles, transpositions
    assert [v.as_integer() for v in chi.values] == [3, 0, 1]
    assert [v.as_integer() for v in sq.values] == [9, 0, 1]


def test_permutation_character_trivial_action():
    from permbase import PermutationGroup, natural_action
    g = PermutationGroup.generate(1, [])
    a = natural_action(g)
    assert permutation_character(a) == trivial_character(g)


def test_permutation_character_equals_induced_trivial():
    for a in (s3_action(), dihedral_action(5), pgl2_action(7),
              ksubset_action(5, 2), alternating_action(5)):
        stab = a.point_stabilizer(0)
        assert permutation_character(a) == induce(trivial_character(stab.group), a.group)


def test_restrict_trivial():
    a = pgl2_action(7)
    stab = a.point_stabilizer(0)
    assert restrict(trivial_character(a.group), stab) == trivial_character(stab.group)


def test_restrict_sign_s4_to_s3():
    a = symmetric_action(4)
    stab = a.point_stabilizer(3)  # fixes the last point: a copy of S3
    down = restrict(sign_character(a.group), stab)
    assert down == sign_character(stab.group)


def test_restrict_linear_phi_is_irreducible_in_h():
    from permbase import character_table, find_base_controlling
    a = pgl2_action(7)
    phi = find_base_controlling(a)
    stab = a.point_stabilizer(0)
    down = restrict(phi, stab)
    table = character_table(stab.group)
    assert table.index_of(down) >= 0
    assert inner_product(down, down) == 1


def test_induce_s3_point_stabilizer():
    a = s3_action()
    stab = a.point_stabilizer(2)
    up = induce(trivial_character(stab.group), a.group)
    assert [v.as_integer() for v in up.values] == [3, 0, 1]
    # matches the literal elementwise induction formula
    assert induce_elementwise(trivial_character(stab.group), a.group) == list(up.values)


def test_induce_degree_multiplies_by_index():
    a = pgl2_action(7)
    stab = a.point_stabilizer(0)
    one_h = trivial_character(stab.group)
    up = induce(one_h, a.group)
    assert up.degree.as_integer() == a.group.order // stab.order == 8


def test_induce_matches_elementwise_formula_with_complex_values():
    from permbase import character_table
    a = pgl2_action(7)
    stab = a.point_stabilizer(0)
    table = character_table(stab.group)
    for alpha in table.irreducibles[:4]:
        assert induce_elementwise(alpha, a.group) == list(induce(alpha, a.group).values)


def test_induce_rejects_non_subgroup():
    a = s3_action()
    other = dihedral_action(4)
    with pytest.raises(ValueError):
        induce(trivial_character(other.group), a.group)


def test_sign_character_values():
    g = symmetric_action(4).group
    sgn = sign_character(g)
    classes = g.conjugacy_classes()
    for rep, v in zip(classes.representatives, sgn.values):
        assert v.as_integer() == rep.sign()
    assert sgn.values[0] == 1


def test_pm1_characters_s_n():
    for n in (2, 3, 4, 5):
        g = symmetric_action(n).group
        homs = pm1_characters(g)
        assert len(homs) == 2
        assert homs[0] == trivial_character(g)
        assert homs[1] == sign_character(g)


def test_pm1_characters_pgl2_7():
    g = pgl2_action(7).group
    homs = pm1_characters(g)
    assert len(homs) == 2
    nontrivial = homs[1]
    kernel = [i for i in range(g.order) if nontrivial.value_on_element(i) == 1]
    assert len(kernel) == g.order // 2  # index-2 kernel


def test_pm1_characters_odd_cyclic_only_trivial():
    g = cyclic_action(3).group
    assert pm1_characters(g) == (trivial_character(g),)
    g5 = cyclic_action(5).group
    assert len(pm1_characters(g5)) == 1


def test_pm1_characters_even_dihedral_count():
    assert len(pm1_characters(dihedral_action(4).group)) == 4
    assert len(pm1_characters(dihedral_action(6).group)) == 4
    assert len(pm1_characters(dihedral_action(5).group)) == 2


def test_pm1_characters_are_homomorphisms():
    for a in (dihedral_action(6), symmetric_action(4), pgl2_action(3)):
        g = a.group
        for phi in pm1_characters(g):
            vals = [phi.value_on_element(i).as_integer() for i in range(g.order)]
            for i in range(g.order):
                for j in range(g.order):
                    k = g.index_of(g.elements[i] * g.elements[j])
                    assert vals[k] == vals[i] * vals[j]


def test_frobenius_reciprocity_small():
    from permbase import character_table
    for a in (s3_action(), dihedral_action(5), pgl2_action(3)):
        stab = a.point_stabilizer(0)
        tg = character_table(a.group)
        th = character_table(stab.group)
        for alpha in th.irreducibles:
            up = induce(alpha, a.group)
            for beta in tg.irreducibles:
                assert inner_product(up, beta) == inner_product(alpha, restrict(beta, stab))


def test_class_function_conductor_divides_exponent():
    g = s3_action().group
    with pytest.raises(ValueError):
        from permbase import Cyclotomic
        bad = Cyclotomic.root_of_unity(5)
        ClassFunction(g, (bad, bad, bad))


def test_json_round_trip():
    from permbase import character_table
    a = pgl2_action(7)
    stab = a.point_stabilizer(0)
    table = character_table(stab.group)
    for chi in table.irreducibles:
        blob = class_function_to_json(chi)
        back = class_function_from_json(stab.group, blob)
        assert back == chi
        assert class_function_to_json(back) == blob


def test_json_schema_shape():
    a = s3_action()
    chi = permutation_character(a)
    blob = class_function_to_json(chi)
    assert set(blob) == {"conductor", "classes"}
    assert blob["conductor"] == 1
    for entry in blob["classes"]:
        assert set(entry) == {"size", "rep_cycles", "value"}
        assert all(isinstance(s, str) for s in entry["value"])
    assert [e["size"] for e in blob["classes"]] == [1, 2, 3]
