import pytest
from hypothesis import given, strategies as st

from chigen.specs import (
    Alternating,
    Cyclic,
    Dihedral,
    InvalidSpec,
    ParseError,
    Product,
    Semidirect,
    Symmetric,
    VecSpec,
    parse_spec,
    spec_order,
)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("Z2xZ4", Product(Cyclic(2), Cyclic(4))),
        ("SD(3,4,2)", Semidirect(3, 4, 2)),
        ("D15", Dihedral(15)),
        ("s4", Symmetric(4)),
        (" a 5 ", Alternating(5)),
        ("Z2xZ3xZ5", Product(Product(Cyclic(2), Cyclic(3)), Cyclic(5))),
        ("Z2x(Z3xZ5)", Product(Cyclic(2), Product(Cyclic(3), Cyclic(5)))),
        ("V(4,2)", VecSpec(4, 2)),
        ("v( 3 , 3 )", VecSpec(3, 3)),
    ],
)
def test_parse(text, expected):
    assert parse_spec(text) == expected


def test_dihedral_order_is_2n():
    assert spec_order(parse_spec("D15")) == 30


@pytest.mark.parametrize("text", ["", "Q8", "Z", "Z2x", "SD(3,4)", "Z2)", "V(4)", "Z2 Z3"])
def test_parse_errors(text):
    with pytest.raises(ParseError) as info:
        parse_spec(text)
    assert info.value.position >= 0


@pytest.mark.parametrize(
    "text, constraint",
    [
        ("SD(4,2,2)", "gcd(a, m) = 1"),
        ("SD(7,2,2)", "a^n = 1 (mod m)"),
        ("Z0", "n >= 1"),
    ],
)
def test_invalid_spec_names_constraint(text, constraint):
    with pytest.raises(InvalidSpec) as info:
        parse_spec(text)
    assert info.value.constraint == constraint


atoms = st.one_of(
    st.builds(Cyclic, st.integers(1, 50)),
    st.builds(Dihedral, st.integers(1, 50)),
    st.builds(Symmetric, st.integers(1, 6)),
    st.builds(Alternating, st.integers(1, 6)),
    st.sampled_from([Semidirect(3, 4, 2), Semidirect(7, 3, 2), Semidirect(5, 4, 2), Semidirect(9, 6, 2)]),
)
specs = st.recursive(atoms, lambda inner: st.builds(Product, inner, inner), max_leaves=4)


@given(specs)
def test_str_round_trip(spec):
    assert parse_spec(str(spec)) == spec
    assert parse_spec(str(spec).lower()) == spec
