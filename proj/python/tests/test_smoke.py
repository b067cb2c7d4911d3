import pytest

import abelian_ideals as ab


def test_root_system():
    rs = ab.RootSystem("E6")
    assert rs.rank == 6
    assert rs.g == 12
    assert rs.num_positive == 36
    assert rs.theta == rs.positive_roots[-1]
    assert rs.inner(rs.theta, rs.theta) == "1/12"
    assert rs.info()["schema"] == 1


def test_bad_type():
    with pytest.raises(ValueError):
        ab.RootSystem("Q3")


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "G2"])
def test_ideal_count(name):
    rs = ab.RootSystem(name)
    all_ideals = ab.enumerate_ideals(rs)
    assert len(all_ideals) == 2**rs.rank
    assert all(ab.is_abelian_ideal(rs, a) for a in all_ideals)


def test_non_ideal():
    rs = ab.RootSystem("A2")
    assert not ab.is_abelian_ideal(rs, [[1, 0], [0, 1]])


def test_max_dimension():
    d = ab.max_dimension(ab.RootSystem("E7"))
    assert d["dim"] == 27
    assert d["g_minus_1"] == 17


def test_poincare_and_word():
    rs = ab.RootSystem("G2")
    assert ab.poincare(rs, [1, 0]) == [1, 1]
    assert ab.word_to_theta(rs, [0, 1]) == [2, 1]


def test_verify():
    report = ab.verify(ab.RootSystem("A3"), random_subsets=50)
    assert report["pass"] is True
    assert ab.verify(ab.RootSystem("B4"), random_subsets=50)["pass"] is False


def test_hasse_and_group():
    rs = ab.RootSystem("A4")
    assert ab.hasse_dot(rs).startswith("graph hasse_A4 {")
    g = ab.automorphism_group(rs)
    assert g["name"] == "Dih_5"
    assert g["order"] == 10


def test_young():
    assert ab.young_encode([5, 4, 4, 4, 4, 3, 2], 12) == 1697
    assert ab.young_bits([5, 4, 4, 4, 4, 3, 2], 12) == "11010100001"
    assert ab.young_decode(1697, 12) == [5, 4, 4, 4, 4, 3, 2]


def test_tables():
    rows = ab.tables(3)["rows"]
    assert len(rows) == len(ab.all_types(3))
