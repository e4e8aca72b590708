import pytest


def test_simple_reflections_on_roots(root_system):
    from nokwidth.rootsys import RootVec
    from nokwidth.weyl import simple_reflection

    a2 = root_system("A2")
    assert simple_reflection(a2, 1, RootVec((1, 0))) == RootVec((-1, 0))
    assert simple_reflection(a2, 1, RootVec((0, 1))) == RootVec((1, 1))

    b2 = root_system("B2")
    assert simple_reflection(b2, 2, RootVec((1, 0))) == RootVec((1, 2))
    assert simple_reflection(b2, 1, RootVec((0, 1))) == RootVec((1, 1))


def test_simple_reflections_on_weights(root_system):
    from nokwidth.rootsys import Weight
    from nokwidth.weyl import simple_reflection

    a2 = root_system("A2")
    assert simple_reflection(a2, 1, Weight((1, 1))) == Weight((-1, 2))
    assert simple_reflection(a2, 2, Weight((1, 0))) == Weight((1, 0))


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "F4"])
def test_simple_reflections_are_involutions(root_system, name):
    from nokwidth.weyl import simple_element

    rs = root_system(name)
    for i in rs.indices:
        s = simple_element(rs, i)
        assert (s * s).is_identity()
        for beta in rs.positive_roots:
            image = s.act_root(beta)
            # s_i permutes Phi^+ minus alpha_i
            if beta == rs.simple_root(i):
                assert image == -beta
            else:
                assert rs.is_positive_root(image)


def test_invalid_simple_index(root_system):
    from nokwidth.weyl import InvalidSimpleIndex, simple_element

    with pytest.raises(InvalidSimpleIndex):
        simple_element(root_system("A2"), 3)


@pytest.mark.parametrize("name", ["A1", "A3", "B2", "B3", "C3", "D4", "G2", "F4"])
def test_longest_element_negates_positive_roots(root_system, name):
    from nokwidth.weyl import length, longest_element

    rs = root_system(name)
    w0, word = longest_element(rs, rs.indices)
    assert len(word) == len(rs.positive_roots)
    assert length(rs, w0) == len(rs.positive_roots)
    assert {w0.act_root(b) for b in rs.positive_roots} == {-b for b in rs.positive_roots}


def test_parabolic_longest_element(root_system):
    from nokwidth.weyl import longest_element

    rs = root_system("A3")
    w, word = longest_element(rs, {1, 2})
    assert len(word) == 3
    assert w.act_root(rs.simple_root(3)).coords == (1, 1, 1)
    identity, empty = longest_element(rs, ())
    assert identity.is_identity()
    assert len(empty) == 0


def test_reduced_words(root_system):
    from nokwidth.weyl import element_from_word, inverse, is_reduced, length, reduced_word

    rs = root_system("A2")
    assert is_reduced(rs, (1, 2, 1))
    assert not is_reduced(rs, (1, 1))
    assert not is_reduced(rs, (1, 2, 1, 2))

    w = element_from_word(rs, (1, 2, 1, 2))
    assert length(rs, w) == 2
    word = reduced_word(rs, w)
    assert len(word) == 2
    assert element_from_word(rs, word.letters) == w
    assert (w * inverse(rs, w)).is_identity()


def test_reduced_word_helpers():
    from nokwidth.weyl import ReducedWord

    word = ReducedWord((1, 2, 3))
    assert list(word) == [1, 2, 3]
    assert word.reversed().letters == (3, 2, 1)
    assert (word + ReducedWord((1,))).letters == (1, 2, 3, 1)
