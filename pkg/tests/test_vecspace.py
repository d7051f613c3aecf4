import itertools

import pytest

from chigen.cover import sigma_search
from chigen.vecspace import (
    CapExceeded,
    FieldError,
    FiniteField,
    VecSpace,
    check_field_axioms,
    field_single_generator,
    find_irreducible,
    generated_subfield,
    has_subspace_cover,
    line_cover,
    sigma_vec,
)
from chigen.verify import group


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_fields(q):
    F = FiniteField.of_order(q)
    assert F.q == q
    assert all(F.mul[x][F.inverse(x)] == 1 for x in range(1, q))


def test_default_irreducibles():
    assert FiniteField.of_order(4).irreducible == (1, 1, 1)
    assert FiniteField.of_order(8).irreducible == (1, 1, 0, 1)
    assert FiniteField.of_order(9).irreducible == (1, 0, 1)
    assert find_irreducible(2, 2) == (1, 1, 1)


def test_reducible_polynomial_rejected():
    with pytest.raises(FieldError):
        FiniteField.of_order(4, (1, 0, 1))  # x^2 + 1 = (x + 1)^2 over GF(2)
    with pytest.raises(FieldError):
        FiniteField.of_order(6)


def test_broken_table_rejected():
    F = FiniteField.of_order(3)
    bad = FiniteField(3, 1, None, F.add, ((0, 0, 0), (0, 1, 2), (0, 2, 2)))
    with pytest.raises(FieldError):
        check_field_axioms(bad)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("d", [2, 3])
def test_chigen_of_space_is_q(q, d):
    r = sigma_vec(VecSpace(FiniteField.of_order(q), d))
    assert r.value == q
    assert r.witness.covers and len(r.witness.parts) == q + 1


def test_line_is_infinite():
    assert sigma_vec(VecSpace(FiniteField.of_order(5), 1)).is_infinite


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_line_cover_and_no_smaller(q):
    F = FiniteField.of_order(q)
    V = VecSpace(F, 2)
    lines = line_cover(F)
    assert len(lines) == q + 1
    u = 0
    for L in lines:
        assert len(L) == q
        u |= L.bits
    assert u == (1 << V.size) - 1
    assert not has_subspace_cover(V, q)


def test_subspace_counts():
    # Gaussian binomials: F_3^3 has 13 lines and 13 planes, plus {0}
    V = VecSpace(FiniteField.of_order(3), 3)
    sizes = [len(W) for W in V.subspaces]
    assert sizes.count(1) == 1 and sizes.count(3) == 13 and sizes.count(9) == 13
    assert len(V.hyperplanes()) == 13


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_additive_group_matches_zpp(p):
    V = VecSpace(FiniteField.of_order(p), 2)
    assert sigma_vec(V).value == sigma_search(V.additive_group).value == sigma_search(group(f"Z{p}xZ{p}")).value


def test_cap():
    with pytest.raises(CapExceeded):
        VecSpace(FiniteField.of_order(9), 3)
    with pytest.raises(ValueError):
        VecSpace(FiniteField.of_order(2), 0)


@pytest.mark.parametrize("q", [4, 8, 9])
def test_single_generator(q):
    F = FiniteField.of_order(q)
    g = field_single_generator(F)
    assert F.mult_order(g) == q - 1
    assert generated_subfield(F, [g]) == (1 << q) - 1


def test_prime_subfield():
    F = FiniteField.of_order(9)
    assert generated_subfield(F, []).bit_count() == 3


def test_point_coords_round_trip():
    V = VecSpace(FiniteField.of_order(4), 3)
    for v in range(V.size):
        assert V.point(V.coords(v)) == v
    for a, b in itertools.product(range(0, V.size, 7), repeat=2):
        assert V.add_table[a, b] == V.add_table[b, a]
