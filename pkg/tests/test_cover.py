import itertools

import pytest
from hypothesis import given, settings, strategies as st

from chigen.cover import (
    INFINITE,
    BudgetExceeded,
    ChiGenResult,
    NotProperSubgroup,
    coloring_oracle,
    has_cover_of_size,
    irredundancy_witnesses,
    is_cover,
    min_cover,
    sigma_search,
)
from chigen.groups import build
from chigen.lattice import maximal_subgroups
from chigen.specs import parse_spec
from chigen.verify import CORPUS, group

SMALL = ["Z2xZ2", "Z2xZ4", "Z3xZ3", "Z2xZ2xZ2", "S3", "D4", "D5", "D6", "A4", "SD(3,4,2)", "S4"]


@pytest.mark.parametrize("name", SMALL)
def test_sigma_matches_brute_force(name, oracles):
    r = sigma_search(group(name))
    assert r.value == oracles[name]["chigen"]
    assert r.sigma == oracles[name]["sigma"]


def test_a4_witness():
    r = sigma_search(group("A4"))
    assert r.value == 4 and r.method == "search"
    assert [len(p) for p in r.witness.parts] == [3, 3, 3, 3, 4]
    assert r.witness.covers and r.witness.irredundant
    assert r.witness.minimal_proven_up_to == 4


def test_witness_is_lexicographically_least():
    G = group("S4")
    r = sigma_search(G)
    maximal = maximal_subgroups(G)
    keys = [M.sort_key() for M in maximal]
    assert keys == sorted(keys)
    best = next(
        c for c in itertools.combinations(range(len(maximal)), r.sigma)
        if is_cover(G, [maximal[i] for i in c])
    )
    assert [p.bits for p in r.witness.parts] == [maximal[i].bits for i in best]


def test_non_canonical_witness_is_still_minimal():
    G = build(parse_spec("D6xZ2"))
    r = sigma_search(G, canonical=False)
    assert r.value == sigma_search(G).value
    assert r.witness.covers and len(r.witness.parts) == r.sigma


def test_cyclic_is_infinite_with_generator():
    r = sigma_search(group("Z12"))
    assert r.value == INFINITE and r.is_infinite and r.sigma is None
    assert str(r) == "infinite"
    assert group("Z12").orders()[r.generator] == 12


def test_result_str():
    assert str(ChiGenResult(3, "search")) == "3"


def test_min_cover_basics():
    assert min_cover(0b111, [0b011, 0b110]).size == 2
    assert min_cover(0b111, [0b011, 0b100, 0b110]).chosen == (0, 1)
    assert min_cover(0b111, [0b011]).size is None
    assert min_cover(0, [0b1]).size == 0


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(1, 2**9 - 1), min_size=1, max_size=9))
def test_min_cover_against_combinations(parts):
    universe = 0
    for p in parts:
        universe |= p
    found = min_cover(universe, parts)
    best = next(
        k for k in range(1, len(parts) + 1)
        for c in itertools.combinations(range(len(parts)), k)
        if _union(parts, c) == universe
    )
    assert found.size == best
    assert _union(parts, found.chosen) == universe
    lex = next(
        c for c in itertools.combinations(range(len(parts)), best) if _union(parts, c) == universe
    )
    assert found.chosen == lex
    loose = min_cover(universe, parts, canonical=False)
    assert loose.size == best and _union(parts, loose.chosen) == universe


def _union(parts, idx):
    u = 0
    for i in idx:
        u |= parts[i]
    return u


def test_parts_must_be_proper_subgroups():
    G = group("S3")
    with pytest.raises(NotProperSubgroup):
        is_cover(G, [G.full_mask])
    with pytest.raises(NotProperSubgroup):
        is_cover(G, [0b110])


def test_irredundancy_witnesses():
    G = group("Z2xZ2")
    parts = maximal_subgroups(G)
    w = irredundancy_witnesses(G, parts)
    assert len(w) == 3 and all(x in p for x, p in zip(w, parts))


@pytest.mark.parametrize("name", ["Z2xZ2", "S3", "Z3xZ3", "D4", "Z6", "Z2xZ4"])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_coloring_oracle_against_definition(name, k, oracles):
    G = group(name)
    chi = oracles.get(name, {}).get("chigen") if name in oracles else None
    expected = chi is None or k <= chi
    assert coloring_oracle(G, k) == expected
    assert coloring_oracle(G, k) == (not has_cover_of_size(G, k))


def test_oracle_budget():
    with pytest.raises(BudgetExceeded):
        coloring_oracle(group("A4"), 3, budget=1000)


@pytest.mark.parametrize("name", [n for n in CORPUS if 1 < group(n).order <= 24])
def test_all_proper_subgroups_agree_with_maximal(name):
    G = group(name)
    r = sigma_search(G)
    if r.is_infinite:
        assert not has_cover_of_size(G, G.order)
    else:
        assert has_cover_of_size(G, r.sigma)
        assert not has_cover_of_size(G, r.sigma - 1)
