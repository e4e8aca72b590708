import pytest


def test_cartan_type_parse_and_str():
    from nokwidth.rootsys import CartanType

    t = CartanType.parse("b3")
    assert t == CartanType("B", 3)
    assert str(t) == "B3"


@pytest.mark.parametrize(
    "series,rank",
    [("D", 3), ("E", 5), ("E", 9), ("G", 3), ("F", 2), ("B", 1), ("A", 0), ("X", 2)],
)
def test_cartan_type_rejects_out_of_range(series, rank):
    from nokwidth.rootsys import CartanType, InvalidType

    with pytest.raises(InvalidType):
        CartanType(series, rank)


def test_cartan_type_parse_rejects_garbage():
    from nokwidth.rootsys import CartanType, InvalidType

    with pytest.raises(InvalidType):
        CartanType.parse("B")
    with pytest.raises(InvalidType):
        CartanType.parse("Bx")


def test_invalid_type_is_an_input_error():
    from nokwidth.errors import InvalidInputError
    from nokwidth.rootsys import CartanType, InvalidType

    with pytest.raises(InvalidInputError) as exc:
        CartanType("D", 2)
    assert isinstance(exc.value, InvalidType)
    assert exc.value.exit_code == 2


def test_root_vec_helpers():
    from nokwidth.rootsys import RootVec

    beta = RootVec((1, 2, 0))
    assert beta.height == 3
    assert beta.support == frozenset({1, 2})
    assert beta.is_positive()
    assert not (-beta).is_positive()
    assert beta.label() == "a1+2a2"
    assert RootVec.simple(3, 2) == RootVec((0, 1, 0))
    assert beta - RootVec.simple(3, 2) == RootVec((1, 1, 0))
    assert RootVec((0, 0)).label() == "0"


def test_weight_helpers():
    from nokwidth.rootsys import Weight

    lam = Weight((2, 0, 1))
    assert lam.support == frozenset({1, 3})
    assert lam.is_dominant()
    assert not lam.is_regular()
    assert Weight.rho(3).is_regular()
    assert Weight.fundamental(3, 2) == Weight((0, 1, 0))
    assert Weight((0, 0)).is_zero()
    assert not Weight((1, -1)).is_dominant()
    assert lam.scaled(2) == Weight((4, 0, 2))
