import pytest


def test_telescope_a3(root_system, coords):
    from nokwidth.weyl import telescope_enumeration

    tel = telescope_enumeration(root_system("A3"))
    e = tel.enumeration
    assert tel.relabeling == (1, 2, 3)
    assert e.provenance == "telescope"
    assert e.word.letters == (3, 2, 1, 3, 2, 3)
    assert coords(e) == [
        (0, 0, 1),
        (0, 1, 1),
        (1, 1, 1),
        (0, 1, 0),
        (1, 1, 0),
        (1, 0, 0),
    ]
    assert tel.shells == (3, 3, 3, 2, 2, 1)
    assert tel.shell_positions(2) == (4, 5)
    assert all(tel.cominuscule)


def test_telescope_b3_starts_from_the_short_root(root_system, coords):
    from nokwidth.weyl import telescope_enumeration

    tel = telescope_enumeration(root_system("B3"))
    assert tel.relabeling == (3, 2, 1)
    assert tel.enumeration.word.letters == (1, 2, 3, 2, 1, 2, 3, 2, 3)
    assert coords(tel.enumeration) == [
        (1, 0, 0),
        (1, 1, 0),
        (1, 1, 1),
        (1, 1, 2),
        (1, 2, 2),
        (0, 1, 0),
        (0, 1, 1),
        (0, 1, 2),
        (0, 0, 1),
    ]
    assert tel.shells == (3, 3, 3, 3, 3, 2, 2, 2, 1)


def test_telescope_c3(root_system, coords):
    from nokwidth.weyl import telescope_enumeration

    tel = telescope_enumeration(root_system("C3"))
    assert tel.relabeling == (1, 2, 3)
    assert coords(tel.enumeration) == [
        (0, 0, 1),
        (0, 1, 1),
        (0, 2, 1),
        (1, 1, 1),
        (1, 2, 1),
        (2, 2, 1),
        (0, 1, 0),
        (1, 1, 0),
        (1, 0, 0),
    ]


@pytest.mark.parametrize("name", ["A4", "B4", "C4", "D4", "D5", "E6"])
def test_levi_chain_fills_the_tail(root_system, name):
    from nokwidth.rootsys import levi_positive_roots
    from nokwidth.weyl import telescope_enumeration

    rs = root_system(name)
    tel = telescope_enumeration(rs)
    roots = tel.enumeration.roots
    assert len(roots) == len(rs.positive_roots)
    for j in rs.indices:
        levi = levi_positive_roots(rs, tel.relabeling[:j])
        assert set(roots[len(roots) - len(levi) :]) == set(levi)
    assert sum(len(b) for b in tel.block_words) == len(rs.positive_roots)


def test_e_relabelings(root_system):
    from nokwidth.weyl import telescope_relabeling

    assert telescope_relabeling(root_system("E6")) == (1, 3, 4, 2, 5, 6)
    assert telescope_relabeling(root_system("E7")) == (1, 3, 4, 2, 5, 6, 7)


@pytest.mark.parametrize("name", ["G2", "F4", "E8"])
def test_unsupported_types(root_system, name):
    from nokwidth.weyl import UnsupportedType, telescope_enumeration

    with pytest.raises(UnsupportedType):
        telescope_enumeration(root_system(name))
