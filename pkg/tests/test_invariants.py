import pytest

from ringlab import constructions as cons
from ringlab import invariants as inv
from ringlab.core import (LatticeTruncatedError, mask_from_indices,
                          mask_indices, mask_size)
from ringlab.constructions import (matrix_ring, matrix_unit, upper_triangular,
                                   zmod)


def test_units_of_z6():
    assert mask_indices(inv.units(zmod(6))) == [1, 5]


def test_units_of_matrix_ring():
    # GL2(F2) has 6 elements
    assert mask_size(inv.units(matrix_ring(zmod(2), 2))) == 6


def test_nilpotents_of_z4():
    assert mask_indices(inv.nilpotents(zmod(4))) == [0, 2]


def test_nilpotency_index():
    S = cons.truncated_skew_poly(zmod(2), [0, 1], 3, hom_name="id")
    x = cons.poly_index(2, [0, 1, 0], 3)
    assert inv.nilpotency_index(S, x) == 3
    assert inv.nilpotency_index(S, S.zero) == 1
    assert inv.nilpotency_index(S, S.one) is None


def test_idempotents_of_z6():
    assert mask_indices(inv.idempotents(zmod(6))) == [0, 1, 3, 4]


def test_idempotent_census_of_m2z2():
    # 0, 1, the two diagonal units, and four rank-one projectors
    R = matrix_ring(zmod(2), 2)
    expected = sorted([
        cons.matrix_index(2, 2, m) for m in (
            [[0, 0], [0, 0]], [[1, 0], [0, 1]],
            [[1, 0], [0, 0]], [[0, 0], [0, 1]],
            [[1, 1], [0, 0]], [[1, 0], [1, 0]],
            [[0, 1], [0, 1]], [[0, 0], [1, 1]],
        )])
    assert mask_indices(inv.idempotents(R)) == expected


def test_center_of_matrix_ring_is_scalars():
    R = matrix_ring(zmod(3), 2)
    scalars = sorted(cons.matrix_index(3, 2, [[a, 0], [0, a]])
                     for a in range(3))
    assert mask_indices(inv.center(R)) == scalars


def test_jacobson_radical_values():
    assert mask_indices(inv.jacobson_radical(zmod(4))) == [0, 2]
    assert mask_indices(inv.jacobson_radical(matrix_ring(zmod(3), 2))) == [0]
    T = upper_triangular(zmod(2), 2)
    e12 = cons.triangular_index(2, 2, [[0, 1], [0, 0]])
    assert mask_indices(inv.jacobson_radical(T)) == sorted([T.zero, e12])


def test_jacobson_equals_intersection_of_maximal_left_ideals():
    for R in (zmod(6), zmod(8), matrix_ring(zmod(2), 2),
              upper_triangular(zmod(3), 2)):
        assert inv.jacobson_via_maximal_left_ideals(R) == \
            inv.jacobson_radical(R)


def test_left_ideal_lattices():
    assert len(inv.all_left_ideals(zmod(4)).ideals) == 3
    assert len(inv.all_left_ideals(matrix_ring(zmod(2), 2)).ideals) == 5
    assert len(inv.all_left_ideals(zmod(6)).ideals) == 4


def test_right_ideals_differ_from_left_in_triangular_ring():
    T = upper_triangular(zmod(2), 2)
    left = set(inv.all_left_ideals(T).ideals)
    right = set(inv.all_right_ideals(T).ideals)
    assert left != right


def test_two_sided_ideals_of_m2z2_are_trivial():
    R = matrix_ring(zmod(2), 2)
    two = inv.all_two_sided_ideals(R).ideals
    assert sorted(mask_size(m) for m in two) == [1, 16]


def test_maximal_left_ideals_of_z6():
    got = {tuple(mask_indices(m)) for m in inv.maximal_left_ideals(zmod(6))}
    assert got == {(0, 3), (0, 2, 4)}


def test_lattice_cap_truncates():
    R = matrix_ring(zmod(2), 2)
    lat = inv.all_left_ideals(R, cap=2)
    assert lat.truncated
    with pytest.raises(LatticeTruncatedError):
        inv.maximal_left_ideals(R, cap=2)


def test_ideal_violation_witnesses():
    R = zmod(6)
    w = inv.left_ideal_violation(R, mask_from_indices([0, 1]))
    assert w is not None
    assert inv.left_ideal_violation(R, mask_from_indices([0, 2, 4])) is None
    T = upper_triangular(zmod(2), 2)
    e11 = cons.triangular_index(2, 2, [[1, 0], [0, 0]])
    left_only = inv.left_ideal_generated(R=T, S=mask_from_indices([e11]))
    assert inv.two_sided_ideal_violation(T, left_only) is not None


def test_ideal_closures():
    R = zmod(12)
    assert mask_indices(inv.left_ideal_generated(R, mask_from_indices([8]))) \
        == [0, 4, 8]
    assert mask_indices(
        inv.two_sided_ideal_generated(R, mask_from_indices([9, 8]))) \
        == [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]


def test_nilradicals_of_commutative_rings_match():
    for n in (4, 6, 8, 9, 12):
        R = zmod(n)
        assert inv.lower_nilradical(R) == inv.upper_nilradical(R) \
            == inv.nilpotents(R)


def test_nilradicals_of_m2z2():
    # simple ring: prime radical and upper nilradical are both zero even
    # though nonzero nilpotents exist
    R = matrix_ring(zmod(2), 2)
    assert mask_indices(inv.lower_nilradical(R)) == [0]
    assert mask_indices(inv.upper_nilradical(R)) == [0]
    assert mask_size(inv.nilpotents(R)) > 1


def test_nilradical_ordering_in_triangular_ring():
    T = upper_triangular(zmod(4), 2)
    low = inv.lower_nilradical(T)
    up = inv.upper_nilradical(T)
    jac = inv.jacobson_radical(T)
    assert low & up == low
    assert up & jac == up


def test_essential_left_ideals():
    R = zmod(12)
    assert inv.is_essential_left_ideal(R, mask_from_indices([0, 2, 4, 6, 8, 10]))
    assert not inv.is_essential_left_ideal(R, mask_from_indices([0, 4, 8]))


def test_annihilators():
    R = zmod(6)
    assert mask_indices(inv.left_annihilator(R, 2)) \
        == [0, 3]
    assert mask_indices(inv.right_annihilator(R, 3)) \
        == [0, 2, 4]


def test_commutant_and_double_commutant():
    R = matrix_ring(zmod(2), 2)
    e11 = matrix_unit(2, 2, 0, 0)
    comm = inv.commutant(R, e11)
    # diagonal matrices commute with e11
    assert mask_size(comm) == 4
    dc = inv.double_commutant(R, e11)
    assert dc & comm == dc


def test_radical_report_round_trip():
    rep = inv.radical_report(zmod(12))
    back = inv.RadicalReport.from_dict(rep.to_dict())
    assert back == rep
    assert back.to_dict() == rep.to_dict()


def test_radical_report_rejects_unknown_version():
    d = inv.radical_report(zmod(2)).to_dict()
    d["format"] = "radical v9"
    with pytest.raises(ValueError):
        inv.RadicalReport.from_dict(d)
