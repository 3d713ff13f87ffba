"""Character tables: exact orthogonality, canonical ordering, decomposition."""

import pytest

from permbase import (Cyclotomic, character_table, constituent_multiplicity,
                      cyclic_action, dihedral_action, inner_product,
                      ksubset_action, permutation_character, pgl2_action,
                      pm1_characters, symmetric_action, trivial_character)


def test_c2_table():
    table = character_table(cyclic_action(2).group)
    assert [[v.as_integer() for v in chi.values] for chi in table.irreducibles] \
        == [[1, 1], [1, -1]]


def test_s3_degrees():
    table = character_table(symmetric_action(3).group)
    assert sorted(table.degrees) == [1, 1, 2]
    assert table.degrees[0] == 1
    assert table.irreducibles[0] == trivial_character(table.group)


def test_stabilizer_of_pgl2_7_has_seven_irreducibles():
    stab = pgl2_action(7).point_stabilizer(0)
    table = character_table(stab.group)
    assert len(table) == 7
    assert sorted(table.degrees) == [1, 1, 1, 1, 1, 1, 6]


def test_table_size_equals_class_count():
    for a in (dihedral_action(4), dihedral_action(7), cyclic_action(6),
              symmetric_action(4), pgl2_action(3), ksubset_action(5, 2)):
        g = a.group
        assert len(character_table(g)) == len(g.conjugacy_classes())


def test_sum_of_degree_squares_is_order():
    for a in (dihedral_action(5), symmetric_action(5), pgl2_action(5),
              cyclic_action(7)):
        g = a.group
        assert sum(d * d for d in character_table(g).degrees) == g.order


def test_degrees_divide_order():
    for a in (pgl2_action(7), symmetric_action(5), dihedral_action(8)):
        g = a.group
        assert all(g.order % d == 0 for d in character_table(g).degrees)


def test_row_orthogonality_exact():
    count = 0
    for a in (symmetric_action(4), dihedral_action(6), pgl2_action(3),
              dihedral_action(7)):
        table = character_table(a.group)
        for i, chi in enumerate(table.irreducibles):
            for j, psi in enumerate(table.irreducibles):
                assert inner_product(chi, psi) == (1 if i == j else 0)
                count += 1
    assert count >= 100


def test_column_orthogonality_exact():
    for a in (symmetric_action(4), dihedral_action(5), pgl2_action(3)):
        g = a.group
        classes = g.conjugacy_classes()
        table = character_table(g)
        r = len(classes)
        for c1 in range(r):
            for c2 in range(r):
                acc = Cyclotomic.rational(0)
                for chi in table.irreducibles:
                    acc = acc + chi.values[c1] * chi.values[c2].conjugate()
                want = g.order // classes.sizes[c1] if c1 == c2 else 0
                assert acc == want


def test_table_ordering_is_canonical():
    g = symmetric_action(4).group
    t1 = character_table(g)
    degrees = t1.degrees
    assert degrees[0] == 1
    assert list(degrees[1:]) == sorted(degrees[1:])
    assert t1.irreducibles[0] == trivial_character(g)


def test_degree_one_pm1_rows_match_homomorphisms():
    for a in (symmetric_action(4), dihedral_action(6), pgl2_action(7)):
        g = a.group
        table = character_table(g)
        linear_pm1 = [chi for chi in table.irreducibles
                      if chi.degree == 1 and chi.is_pm1_valued()]
        homs = pm1_characters(g)
        assert len(linear_pm1) == len(homs)
        for chi in linear_pm1:
            assert any(chi == phi for phi in homs)


def test_decompose_trivial_character():
    table = character_table(symmetric_action(4).group)
    mults = constituent_multiplicity(trivial_character(table.group), table)
    assert mults == (1,) + (0,) * (len(table) - 1)


def test_decompose_s3_natural_character():
    a = symmetric_action(3)
    table = character_table(a.group)
    chi = permutation_character(a)
    mults = constituent_multiplicity(chi, table)
    by_degree = sorted(zip(table.degrees, mults))
    assert sum(m * d for d, m in by_degree) == 3
    assert mults[0] == 1  # trivial appears once
    assert sum(mults) == 2  # trivial + the degree-2 character


def test_decompose_irreducible_is_indicator():
    table = character_table(dihedral_action(5).group)
    for i, chi in enumerate(table.irreducibles):
        mults = constituent_multiplicity(chi, table)
        assert mults == tuple(1 if j == i else 0 for j in range(len(table)))


def test_decompose_rejects_non_characters():
    a = symmetric_action(3)
    table = character_table(a.group)
    sgn_minus_one = table.irreducibles[1] - trivial_character(a.group)
    with pytest.raises(ValueError):
        constituent_multiplicity(sgn_minus_one, table)
    from permbase import ClassFunction
    from fractions import Fraction
    half = ClassFunction(a.group, (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)))
    with pytest.raises(ValueError):
        constituent_multiplicity(half, table)


def test_burnside_count_cross_check_pgl2():
    g = pgl2_action(7).group
    assert len(character_table(g)) == len(g.conjugacy_classes()) == 9


def test_tables_are_cached():
    g = dihedral_action(9).group
    assert character_table(g) is character_table(g)
