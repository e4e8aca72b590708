import pytest


def test_a3_telescope_simplex(root_system):
    from nokwidth.widths import verify_telescope_theorem

    report = verify_telescope_theorem(root_system("A3"), (1, 1, 1))
    assert report.spec.kind == "telescope"
    assert report.spec.k == 1
    assert report.details["shell_nodes"] == [3, 3, 3, 2, 2, 1]
    assert report.details["corner"] == "recorded"
    assert report.checks["unit 1 essential for fundamental 3"]
    assert report.checks["node 2 cominuscule for l_2"]
    assert report.passed


@pytest.mark.parametrize("name,lam", [("A2", (1, 1)), ("A2", (2, 3)), ("B2", (1, 1)), ("C3", (1, 1, 1))])
def test_telescope_construction_holds(root_system, name, lam):
    from nokwidth.widths import verify_telescope_theorem

    assert verify_telescope_theorem(root_system(name), lam).passed


@pytest.mark.slow
@pytest.mark.parametrize("name", ["B3", "D4"])
def test_telescope_construction_larger_ranks(root_system, name):
    from nokwidth.rootsys import Weight
    from nokwidth.widths import verify_telescope_theorem

    rs = root_system(name)
    assert verify_telescope_theorem(rs, Weight.rho(rs.rank)).passed


def test_telescope_preconditions(root_system):
    from nokwidth.weyl import UnsupportedType
    from nokwidth.widths import NotRegular, verify_telescope_theorem

    with pytest.raises(UnsupportedType):
        verify_telescope_theorem(root_system("G2"), (1, 1))
    with pytest.raises(NotRegular):
        verify_telescope_theorem(root_system("A3"), (1, 0, 1))
