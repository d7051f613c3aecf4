import math

import pytest
from hypothesis import given, settings, strategies as st

from chigen.cover import INFINITE, sigma_search
from chigen.groups import TrivialGroup, build, is_nilpotent, is_prime, least_prime_factor
from chigen.specs import InvalidSpec, parse_spec
from chigen.theorems import (
    NotNilpotent,
    chigen,
    chigen_dihedral,
    chigen_frattini_reduce,
    chigen_nilpotent,
    chigen_semidirect,
    chigen_torsion_test,
    chigen_two_color_test,
    compare_paths,
    semidirect_prime_set,
)
from chigen.verify import CORPUS, group, semidirect_params


def test_known_values():
    assert chigen("A4").value == 4
    assert chigen("S4").value == 3
    assert chigen("D3").value == 3
    for p in (2, 3, 5, 7):
        assert chigen(f"Z{p}xZ{p}").value == p


@pytest.mark.parametrize("n", range(2, 31))
def test_dihedral_formula(n):
    assert chigen_dihedral(n).value == least_prime_factor(n)


def test_dihedral_rejects_degenerate():
    with pytest.raises(ValueError):
        chigen_dihedral(1)


def test_nilpotent_examples():
    assert chigen_nilpotent(group("Z2xZ4")).value == 2
    assert chigen_nilpotent(build(parse_spec("Z3xZ9xZ25"), cap=1000)).value == 3
    assert chigen_nilpotent(group("Z15")).value == INFINITE
    with pytest.raises(NotNilpotent):
        chigen_nilpotent(group("S3"))


@pytest.mark.parametrize(
    "m, n, a, primes",
    [(3, 2, 2, {3}), (3, 4, 2, {3}), (7, 3, 2, {7}), (15, 2, 14, {3, 5}), (15, 2, 4, {5}), (6, 5, 1, set()), (6, 4, 1, {2})],
)
def test_semidirect_prime_set(m, n, a, primes):
    assert semidirect_prime_set(m, n, a) == primes


def test_semidirect_infinite_generator():
    r = chigen_semidirect(6, 5, 1)
    assert r.is_infinite
    assert group("SD(6,5,1)").orders()[r.generator] == 30


def test_semidirect_validation():
    with pytest.raises(InvalidSpec):
        semidirect_prime_set(7, 2, 2)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(semidirect_params()))
def test_semidirect_formula_matches_search(params):
    m, n, a = params
    assert chigen_semidirect(m, n, a).value == sigma_search(group(f"SD({m},{n},{a})")).value


@pytest.mark.parametrize("name", ["D4", "Z2xZ2", "Z2xZ6", "D6"])
def test_two_colors_positive(name):
    assert chigen_two_color_test(group(name))
    assert sigma_search(group(name)).value == 2


@pytest.mark.parametrize("name", ["A4", "S3", "S4", "Z3xZ3", "A5"])
def test_two_colors_negative(name):
    assert not chigen_two_color_test(group(name))


def test_torsion_s3():
    # p = 2, chi = 3 != 2, abelianization Z2 has 2-rank 1
    assert chigen_torsion_test(group("S3"))
    with pytest.raises(TrivialGroup):
        chigen_torsion_test(group("Z1"))


def test_frattini_reduce():
    Q = chigen_frattini_reduce(group("Z8"))
    assert Q.order == 2
    Q = chigen_frattini_reduce(group("D4"))
    assert Q.order == 4


def test_dispatch_routes():
    assert chigen("Z7").method == "cyclic"
    assert chigen("D5").method == "dihedral"
    assert chigen("SD(7,3,2)").method == "semidirect"
    assert chigen("Z2xZ4").method == "nilpotent"
    assert chigen("A4").method == "search"
    assert chigen("A4", search_only=True).method == "search"
    assert chigen("D3xZ4").method.startswith("frattini+")


@pytest.mark.parametrize("name", CORPUS)
def test_dispatch_agrees_with_search(name):
    report = compare_paths(name)
    assert report.agree, f"{name}: {report.path} gave {report.fast_value}, search {report.search_value}"


@pytest.mark.parametrize("name", [n for n in CORPUS if group(n).order > 1])
def test_bounds(name):
    G = group(name)
    r = sigma_search(G)
    if not r.is_infinite:
        assert 2 <= r.value <= G.order - 2
        assert r.value >= min(o for o in G.orders() if o > 1)


def test_search_witness_for_fast_path_groups():
    # fast paths return no witness; the search path always does for finite values
    assert chigen("D5").witness is None
    assert chigen("D5", search_only=True).witness.covers


def test_nilpotent_values_prime_or_infinite():
    for name in CORPUS:
        G = group(name)
        r = sigma_search(G)
        if is_nilpotent(G) and not r.is_infinite:
            assert is_prime(r.value)
    assert math.isinf(INFINITE)
