"""Closed-form values of chi_gen and the dispatcher that routes between them.

Every fast path here is cross-checked against :func:`chigen.cover.sigma_search`
by the verification suites; none is trusted on its own.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cover import INFINITE, ChiGenResult, sigma_search
from .groups import (
    DEFAULT_ORDER_CAP,
    GroupError,
    GroupTable,
    TrivialGroup,
    build,
    cyclic_generator,
    factorize,
    least_prime_factor,
    min_nonidentity_order,
    quotient,
    sylow_decomposition,
)
from .lattice import DEFAULT_LATTICE_CAP, frattini, has_elementary_quotient
from .specs import Dihedral, GroupSpec, Semidirect, parse_spec, validate

FRATTINI_DEPTH_CAP = 8


class NotNilpotent(GroupError):
    pass


def chigen_nilpotent(G: GroupTable) -> ChiGenResult:
    """Least prime whose Sylow subgroup is noncyclic; infinite if none is."""
    sylows = sylow_decomposition(G)
    if sylows is None:
        raise NotNilpotent("group is not the direct product of its Sylow subgroups")
    orders = G.orders()
    for p in sorted(sylows):
        P = sylows[p]
        if not any(orders[g] == len(P) for g in P):
            return ChiGenResult(p, "nilpotent")
    return ChiGenResult(INFINITE, "nilpotent", generator=cyclic_generator(G))


def chigen_dihedral(n: int) -> ChiGenResult:
    """chi_gen of the dihedral group of order 2n, n >= 2."""
    if n < 2:
        raise ValueError("dihedral formula needs n >= 2 (n = 1 is cyclic)")
    return ChiGenResult(least_prime_factor(n), "dihedral")


def semidirect_prime_set(m: int, n: int, a: int) -> set[int]:
    """Primes p | m that divide gcd(m, n) or on whose Sylow factor Z_n acts nontrivially."""
    validate(Semidirect(m, n, a))
    g = math.gcd(m, n)
    out = set()
    for p, d in factorize(m).items():
        if g % p == 0 or a % p**d != 1 % p**d:
            out.add(p)
    return out


def chigen_semidirect(m: int, n: int, a: int) -> ChiGenResult:
    primes = semidirect_prime_set(m, n, a)
    if not primes:
        # Z_m x Z_n with coprime orders: x*y generates
        return ChiGenResult(INFINITE, "semidirect", generator=(1 % m) + m * (1 % n))
    return ChiGenResult(min(primes), "semidirect")


def chigen_two_color_test(G: GroupTable) -> bool:
    """Whether Z_2 x Z_2 is a quotient of G, i.e. the chi_gen = 2 criterion."""
    return has_elementary_quotient(G, 2)


def chigen_torsion_test(G: GroupTable, chi: ChiGenResult | None = None) -> bool:
    """Check (chi_gen(G) = p) <=> (Z_p x Z_p is a quotient), p the least nonidentity order."""
    if G.order < 2:
        raise TrivialGroup("torsion criterion needs a nontrivial group")
    p = min_nonidentity_order(G)
    if chi is None:
        chi = sigma_search(G)
    return (chi.value == p) == has_elementary_quotient(G, p)


def chigen_frattini_reduce(G: GroupTable, lattice_cap: int = DEFAULT_LATTICE_CAP) -> GroupTable:
    return quotient(G, frattini(G, lattice_cap))


def _dispatch(G: GroupTable, spec: GroupSpec | None, depth: int, lattice_cap: int) -> ChiGenResult:
    g = cyclic_generator(G)
    if g is not None:
        return ChiGenResult(INFINITE, "cyclic", generator=g)
    if isinstance(spec, Dihedral):
        return chigen_dihedral(spec.n)
    if isinstance(spec, Semidirect):
        return chigen_semidirect(spec.m, spec.n, spec.a)
    if sylow_decomposition(G) is not None:
        return chigen_nilpotent(G)
    if depth < FRATTINI_DEPTH_CAP:
        phi = frattini(G, lattice_cap)
        if len(phi) > 1:
            inner = _dispatch(quotient(G, phi), None, depth + 1, lattice_cap)
            return ChiGenResult(inner.value, f"frattini+{inner.method}", generator=None)
    return sigma_search(G, lattice_cap)


def chigen(
    target: GroupTable | GroupSpec | str,
    search_only: bool = False,
    cap: int = DEFAULT_ORDER_CAP,
    lattice_cap: int = DEFAULT_LATTICE_CAP,
) -> ChiGenResult:
    """chi_gen by the cheapest valid path.

    Order: cyclic, dihedral/semidirect formula (when the group spec names that family),
    nilpotent formula, Frattini reduction, exact search.
    """
    if isinstance(target, str):
        target = parse_spec(target)
    if isinstance(target, GroupTable):
        G, spec = target, target.spec
    else:
        G, spec = build(target, cap), target
    if search_only:
        return sigma_search(G, lattice_cap)
    return _dispatch(G, spec, 0, lattice_cap)


@dataclass(frozen=True)
class MethodReport:
    spec: str
    fast_value: ChiGenResult
    search_value: ChiGenResult | None
    agree: bool
    path: str


def compare_paths(target: GroupTable | GroupSpec | str, run_search: bool = True) -> MethodReport:
    if isinstance(target, str):
        target = parse_spec(target)
    G = target if isinstance(target, GroupTable) else build(target)
    fast = chigen(G if isinstance(target, GroupTable) else target)
    search = sigma_search(G) if run_search else None
    agree = search is None or search.value == fast.value
    return MethodReport(str(G.spec), fast, search, agree, fast.method)
