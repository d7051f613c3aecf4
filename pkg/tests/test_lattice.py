import warnings

import pytest
from hypothesis import given, settings, strategies as st

from chigen.groups import closure, quotient
from chigen.lattice import (
    LatticeCapExceeded,
    LatticeIncomplete,
    all_subgroups,
    elementary_quotient_witness,
    frattini,
    has_elementary_quotient,
    join,
    maximal_subgroups,
    normal_subgroups,
)
from chigen.verify import CORPUS, group

SMALL = ["Z2xZ2", "Z2xZ4", "Z3xZ3", "Z2xZ2xZ2", "S3", "D4", "D5", "D6", "A4", "SD(3,4,2)", "S4"]


@pytest.mark.parametrize("name", SMALL)
def test_lattice_matches_brute_force(name, oracles):
    row = oracles[name]
    lat = all_subgroups(group(name))
    assert lat.complete
    assert len(lat) == row["subgroups"]
    assert len(lat.normal_subgroups()) == row["normal_subgroups"]
    assert sorted(len(H) for H in lat.maximal_subgroups()) == row["maximal_orders"]


def test_a4_lattice():
    A4 = group("A4")
    lat = all_subgroups(A4)
    assert len(lat) == 10
    assert [len(H) for H in lat.maximal_subgroups()] == [3, 3, 3, 3, 4]


def test_subgroups_sorted_and_unique():
    lat = all_subgroups(group("S4"))
    keys = [H.sort_key() for H in lat.subgroups]
    assert keys == sorted(keys)
    assert len({H.bits for H in lat.subgroups}) == len(lat)
    assert all(H.is_subgroup() for H in lat.subgroups)


def test_elementary_abelian_blowup_is_refused():
    G = group("Z2xZ2xZ2xZ2xZ2xZ2")
    with pytest.warns(LatticeCapExceeded):
        lat = all_subgroups(G, cap=50)
    assert not lat.complete
    with pytest.raises(LatticeIncomplete):
        lat.maximal_subgroups()


def test_full_elementary_abelian_count():
    # Gaussian binomial sum for (Z2)^5: 1 + 31 + 155 + 155 + 31 + 1
    assert len(all_subgroups(group("Z2xZ2xZ2xZ2xZ2"))) == 374


@pytest.mark.parametrize(
    "name, p, expected",
    [("D4", 2, True), ("A4", 2, False), ("A4", 3, False), ("Z3xZ3", 3, True), ("S4", 2, False), ("Z2xZ6", 2, True)],
)
def test_elementary_quotient(name, p, expected):
    G = group(name)
    assert has_elementary_quotient(G, p) == expected
    assert (elementary_quotient_witness(G, p) is not None) == expected


def test_frattini_examples():
    assert len(frattini(group("Z4"))) == 2
    assert len(frattini(group("D4"))) == 2
    assert len(frattini(group("A4"))) == 1
    assert len(frattini(group("Z8"))) == 4
    assert len(frattini(group("Z2xZ2"))) == 1


small_groups = st.sampled_from([n for n in CORPUS if group(n).order <= 48])


@settings(max_examples=40, deadline=None)
@given(small_groups, st.data())
def test_join_is_in_lattice(name, data):
    G = group(name)
    lat = all_subgroups(G)
    masks = {H.bits for H in lat.subgroups}
    A = data.draw(st.sampled_from(lat.subgroups))
    B = data.draw(st.sampled_from(lat.subgroups))
    J = join(G, A, B)
    assert J.bits in masks
    assert A <= J and B <= J
    assert (A & B).bits in masks


@pytest.mark.parametrize("name", [n for n in CORPUS if group(n).order > 1])
def test_frattini_below_every_maximal(name):
    G = group(name)
    phi = frattini(G)
    assert all(phi <= M for M in maximal_subgroups(G))
    assert phi.bits in {N.bits for N in normal_subgroups(G)}
    # maximal subgroups: nothing strictly between M and G
    lat = all_subgroups(G)
    for M in lat.maximal_subgroups():
        assert not any(M < H and not H.is_whole for H in lat.subgroups)


@pytest.mark.parametrize("name", CORPUS)
@pytest.mark.parametrize("p", [2, 3, 5])
def test_elementary_quotient_shortcut_agrees_with_lattice(name, p):
    G = group(name)
    witness = elementary_quotient_witness(G, p)
    assert has_elementary_quotient(G, p) == (witness is not None)
    if witness is not None:
        Q = quotient(G, witness)
        assert Q.order == p * p and all(o in (1, p) for o in Q.orders())


def test_lattice_cap_warning_is_not_raised_when_complete():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        all_subgroups(group("S4"))


def test_closure_of_seed_generates_lattice_element():
    G = group("S4")
    masks = {H.bits for H in all_subgroups(G).subgroups}
    for a in range(G.order):
        for b in range(0, G.order, 5):
            assert closure(G, [a, b]).bits in masks
