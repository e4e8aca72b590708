from fractions import Fraction

import pytest


def test_commutator_expansions(root_system):
    from nokwidth.repmod import root_vector_expr

    a2 = root_system("A2")
    simple = root_vector_expr(a2, (0, 1))
    assert simple.expansion == {(2,): 1}
    assert simple.recipe == (2,)
    f12 = root_vector_expr(a2, (1, 1))
    assert f12.expansion == {(1, 2): 1, (2, 1): -1}

    b2 = root_system("B2")
    long_root = root_vector_expr(b2, (1, 2))
    assert long_root.recipe == (2, 1, 2)
    assert long_root.expansion == {(2, 1, 2): 2, (2, 2, 1): -1, (1, 2, 2): -1}


def test_root_vector_needs_a_positive_root(root_system):
    from nokwidth.repmod import root_vector_expr
    from nokwidth.rootsys import NotARoot

    rs = root_system("A2")
    with pytest.raises(NotARoot):
        root_vector_expr(rs, (2, 0))
    with pytest.raises(NotARoot):
        root_vector_expr(rs, (-1, 0))


def test_rescaling(root_system):
    from nokwidth.repmod import root_vector_expr

    expr = root_vector_expr(root_system("A2"), (1, 1)).rescaled(Fraction(-1, 2))
    assert expr.scale == Fraction(-1, 2)
    assert expr.expansion == {(1, 2): Fraction(-1, 2), (2, 1): Fraction(1, 2)}
    with pytest.raises(ValueError):
        expr.rescaled(0)


def test_root_vector_matches_its_word_expansion(root_system):
    from nokwidth.repmod import apply_root_vector, module_for, root_vector_expr

    rs = root_system("B2")
    module = module_for(rs, (1, 1))
    v = module.highest_vector()
    for beta in rs.positive_roots:
        expr = root_vector_expr(rs, beta)
        got = apply_root_vector(module, expr, v)
        total = [Fraction(0)] * module.dim(beta.coords)
        for word, c in expr.expansion.items():
            w = v
            for letter in reversed(word):
                w = module.lower(letter, w)
            total = [t + c * x for t, x in zip(total, w.coords)]
        assert list(got.coords) == total


def test_root_vectors_do_not_kill_the_highest_vector_when_paired(root_system):
    from nokwidth.repmod import apply_lowering, module_for, root_vector_expr
    from nokwidth.rootsys import coroot_pairing

    rs = root_system("B2")
    for lam in [(1, 0), (0, 1), (2, 1)]:
        module = module_for(rs, lam)
        for beta in rs.positive_roots:
            w = apply_lowering(module, root_vector_expr(rs, beta), module.highest_vector())
            assert w.is_zero() == (coroot_pairing(rs, lam, beta) == 0)


def test_pbw_monomials(root_system):
    from nokwidth.errors import InvalidInputError
    from nokwidth.repmod import module_for, pbw_monomial_vector
    from nokwidth.weyl import good_ordering

    rs = root_system("A2")
    e = good_ordering(rs, {1, 2})
    module = module_for(rs, (1, 1))
    assert pbw_monomial_vector(module, e, (0, 0, 0)) == module.highest_vector()
    v = pbw_monomial_vector(module, e, (0, 0, 1))
    assert v.nu == (1, 1)
    assert not v.is_zero()
    assert pbw_monomial_vector(module, e, (2, 0, 0)).is_zero()
    assert pbw_monomial_vector(module, e, (2, 0, 0)).nu == (2, 0)
    with pytest.raises(InvalidInputError):
        pbw_monomial_vector(module, e, (1, 0))


def test_pbw_with_rescaled_vectors_scales(root_system):
    from nokwidth.repmod import module_for, pbw_monomial_vector, root_vector_expr
    from nokwidth.weyl import good_ordering

    rs = root_system("A2")
    e = good_ordering(rs, {1, 2})
    module = module_for(rs, (1, 1))
    exprs = [root_vector_expr(rs, b) for b in e.roots]
    scaled = [x.rescaled(3) for x in exprs]
    base = pbw_monomial_vector(module, e, (1, 1, 0), exprs)
    got = pbw_monomial_vector(module, e, (1, 1, 0), scaled)
    assert list(got.coords) == [9 * c for c in base.coords]


def test_action_follows_the_expansion(root_system):
    from nokwidth.repmod import RootVectorExpr, apply_root_vector, module_for, root_vector_expr
    from nokwidth.rootsys import as_root

    rs = root_system("A2")
    module = module_for(rs, (1, 1))
    v = module.highest_vector()
    beta = as_root(rs, (1, 1))
    symmetric = RootVectorExpr(beta=beta, expansion={(1, 2): Fraction(1), (2, 1): Fraction(1)})
    f12 = module.lower(1, module.lower(2, v))
    f21 = module.lower(2, module.lower(1, v))
    got = apply_root_vector(module, symmetric, v)
    assert list(got.coords) == [a + b for a, b in zip(f12.coords, f21.coords)]
    canonical = apply_root_vector(module, root_vector_expr(rs, beta), v)
    assert got.coords != canonical.coords

    # the same commutator written with the opposite sign and no recorded scale
    flipped = RootVectorExpr(beta=beta, expansion={(2, 1): Fraction(1), (1, 2): Fraction(-1)})
    assert list(apply_root_vector(module, flipped, v).coords) == [-c for c in canonical.coords]


def test_expansion_words_must_have_the_root_weight(root_system):
    from nokwidth.errors import InvalidInputError
    from nokwidth.repmod import RootVectorExpr
    from nokwidth.rootsys import as_root

    beta = as_root(root_system("A2"), (1, 1))
    with pytest.raises(InvalidInputError):
        RootVectorExpr(beta=beta, expansion={(1, 1): Fraction(1)})
    with pytest.raises(InvalidInputError):
        RootVectorExpr(beta=beta, expansion={})
