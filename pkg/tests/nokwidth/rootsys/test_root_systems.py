import pytest


@pytest.mark.parametrize(
    "name,count",
    [
        ("A1", 1),
        ("A2", 3),
        ("A3", 6),
        ("B2", 4),
        ("B3", 9),
        ("C3", 9),
        ("D4", 12),
        ("D5", 20),
        ("G2", 6),
        ("F4", 24),
        ("E6", 36),
        ("E7", 63),
        ("E8", 120),
    ],
)
def test_positive_root_counts(root_system, name, count):
    rs = root_system(name)
    assert len(rs.positive_roots) == count
    assert len(set(rs.positive_roots)) == count
    assert all(b.is_positive() for b in rs.positive_roots)


def test_cartan_conventions_for_non_simply_laced(root_system):
    # A[i][j] = <alpha_j, alpha_i^vee>
    assert root_system("B2").cartan == ((2, -1), (-2, 2))
    assert root_system("C2").cartan == ((2, -2), (-1, 2))
    assert root_system("G2").cartan == ((2, -3), (-1, 2))


@pytest.mark.parametrize(
    "name,sym",
    [("A2", (1, 1)), ("B3", (2, 2, 1)), ("C3", (1, 1, 2)), ("G2", (1, 3)), ("F4", (2, 2, 1, 1))],
)
def test_symmetrizer(root_system, name, sym):
    rs = root_system(name)
    assert rs.sym == sym
    n = rs.rank
    for i in range(n):
        for j in range(n):
            assert rs.sym[i] * rs.cartan[i][j] == rs.sym[j] * rs.cartan[j][i]


def test_canonical_order_a2_b2_g2(root_system):
    assert [b.coords for b in root_system("A2").positive_roots] == [(1, 0), (0, 1), (1, 1)]
    assert [b.coords for b in root_system("B2").positive_roots] == [
        (1, 0),
        (0, 1),
        (1, 1),
        (1, 2),
    ]
    assert [b.coords for b in root_system("G2").positive_roots] == [
        (1, 0),
        (0, 1),
        (1, 1),
        (2, 1),
        (3, 1),
        (3, 2),
    ]


def test_build_root_system_is_cached(root_system):
    assert root_system("B3") is root_system("B3")


@pytest.mark.parametrize(
    "name,theta",
    [
        ("A3", (1, 1, 1)),
        ("B3", (1, 2, 2)),
        ("C3", (2, 2, 1)),
        ("D4", (1, 2, 1, 1)),
        ("G2", (3, 2)),
        ("F4", (2, 3, 4, 2)),
        ("E8", (2, 3, 4, 6, 5, 4, 3, 2)),
    ],
)
def test_highest_root(root_system, name, theta):
    from nokwidth.rootsys import highest_root

    rs = root_system(name)
    assert highest_root(rs, rs.indices).coords == theta


def test_highest_root_of_a_levi(root_system):
    from nokwidth.rootsys import highest_root

    rs = root_system("B3")
    # nodes {2, 3} form a B2
    assert highest_root(rs, {2, 3}).coords == (0, 1, 2)


def test_coroot_pairings(root_system):
    from nokwidth.rootsys import coroot_pairing

    a1 = root_system("A1")
    assert coroot_pairing(a1, (5,), (1,)) == 5

    a2 = root_system("A2")
    assert coroot_pairing(a2, (1, 1), (1, 1)) == 2

    b2 = root_system("B2")
    # (a1+2a2)^vee = a1^vee + a2^vee
    assert b2.coroot(b2.positive_roots[3]) == (1, 1)
    assert coroot_pairing(b2, (1, 0), (1, 2)) == 1
    # (a1+a2)^vee = 2 a1^vee + a2^vee
    assert coroot_pairing(b2, (1, 0), (1, 1)) == 2
    assert coroot_pairing(b2, (1, 0), (-1, -1)) == -2


def test_g2_coroots(root_system):
    rs = root_system("G2")
    assert [rs.coroot(b) for b in rs.positive_roots] == [
        (1, 0),
        (0, 1),
        (1, 3),
        (2, 3),
        (1, 1),
        (1, 2),
    ]


def test_not_a_root_and_rank_mismatch(root_system):
    from nokwidth.rootsys import NotARoot, RankMismatch, as_root, coroot_pairing

    rs = root_system("A2")
    with pytest.raises(NotARoot):
        as_root(rs, (2, 0))
    with pytest.raises(RankMismatch):
        coroot_pairing(rs, (1, 1, 1), (1, 0))


def test_root_partial_order_and_hasse_edges(root_system):
    from nokwidth.rootsys import RootVec, hasse_edges, root_partial_order

    assert root_partial_order(RootVec((1, 1)), RootVec((1, 0)))
    assert not root_partial_order(RootVec((1, 0)), RootVec((0, 1)))
    assert not root_partial_order(RootVec((1, 0)), RootVec((1, 0)))

    edges = [(b.coords, g.coords) for b, g in hasse_edges(root_system("A2"))]
    assert edges == [((1, 1), (1, 0)), ((1, 1), (0, 1))]
    assert len(hasse_edges(root_system("B2"))) == 3


def test_phi_p_plus(root_system):
    from nokwidth.rootsys import EmptySupport, phi_P_plus

    a2 = root_system("A2")
    assert [b.coords for b in phi_P_plus(a2, {1})] == [(1, 0), (1, 1)]
    assert len(phi_P_plus(a2, {1, 2})) == 3

    a3 = root_system("A3")
    assert [b.coords for b in phi_P_plus(a3, {2})] == [
        (0, 1, 0),
        (1, 1, 0),
        (0, 1, 1),
        (1, 1, 1),
    ]
    with pytest.raises(EmptySupport):
        phi_P_plus(a3, set())


def test_levi_positive_roots(root_system):
    from nokwidth.rootsys import levi_positive_roots

    rs = root_system("A3")
    assert [b.coords for b in levi_positive_roots(rs, {1, 2})] == [
        (1, 0, 0),
        (0, 1, 0),
        (1, 1, 0),
    ]
    assert levi_positive_roots(rs, ()) == []


def test_weights_of_a_module(root_system):
    from nokwidth.rootsys import Weight, is_weight_of, reflect_weight, weight_below

    rs = root_system("A2")
    lam = Weight((1, 0))
    assert is_weight_of(rs, lam, (0, 0))
    assert is_weight_of(rs, lam, (1, 0))
    assert is_weight_of(rs, lam, (1, 1))
    assert not is_weight_of(rs, lam, (0, 1))
    assert not is_weight_of(rs, lam, (2, 0))
    assert not is_weight_of(rs, lam, (-1, 0))

    rho = Weight((1, 1))
    assert weight_below(rs, rho, (1, 0)) == Weight((-1, 2))
    assert reflect_weight(rs, rho, rs.positive_roots[0]) == Weight((-1, 2))


@pytest.mark.parametrize(
    "name,lam,dim",
    [
        ("A1", (3,), 4),
        ("A2", (1, 0), 3),
        ("A2", (1, 1), 8),
        ("A2", (2, 2), 27),
        ("B2", (1, 0), 5),
        ("B2", (0, 1), 4),
        ("G2", (1, 0), 7),
        ("G2", (0, 1), 14),
        ("B3", (0, 0, 1), 8),
        ("E8", (0, 0, 0, 0, 0, 0, 0, 1), 248),
    ],
)
def test_weyl_dimension(root_system, name, lam, dim):
    from nokwidth.rootsys import weyl_dim

    assert weyl_dim(root_system(name), lam) == dim


@pytest.mark.parametrize("name", ["A2", "B2", "A3", "G2", "B3", "C3"])
def test_weyl_dimension_of_rho(root_system, name):
    from nokwidth.rootsys import Weight, weyl_dim

    rs = root_system(name)
    assert weyl_dim(rs, Weight.rho(rs.rank)) == 2 ** len(rs.positive_roots)


def test_dominance_and_integrality(root_system):
    from nokwidth.rootsys import NotDominant, NotIntegral, require_dominant

    rs = root_system("A2")
    with pytest.raises(NotDominant):
        require_dominant(rs, (-1, 1))
    with pytest.raises(NotIntegral):
        require_dominant(rs, ("1/2", 1))
