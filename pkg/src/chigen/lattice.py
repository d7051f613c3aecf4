"""Subgroup lattices of finite groups.

Enumeration seeds with the cyclic subgroups and closes under joins with
cyclic subgroups of prime-power order. Every subgroup is generated by its
prime-power-order elements, so this reaches the whole lattice.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .groups import (
    ElementSet,
    GroupError,
    GroupTable,
    NotPrime,
    _grow,
    abelian_p_rank,
    abelianization,
    closure,
    factorize,
    is_normal,
    is_prime,
    iter_bits,
    mask_of,
)

DEFAULT_LATTICE_CAP = 200_000


class LatticeIncomplete(GroupError):
    pass


class LatticeCapExceeded(UserWarning):
    pass


@dataclass(frozen=True, eq=False)
class SubgroupLattice:
    group: GroupTable
    subgroups: tuple[ElementSet, ...]
    maximal: tuple[int, ...]
    normal: tuple[int, ...]
    complete: bool
    cap: int

    def __len__(self) -> int:
        return len(self.subgroups)

    def require_complete(self) -> None:
        if not self.complete:
            raise LatticeIncomplete(
                f"subgroup enumeration stopped at the cap of {self.cap}; exact answers refused"
            )

    def maximal_subgroups(self) -> list[ElementSet]:
        self.require_complete()
        return [self.subgroups[i] for i in self.maximal]

    def normal_subgroups(self) -> list[ElementSet]:
        self.require_complete()
        return [self.subgroups[i] for i in self.normal]


def _enumerate(G: GroupTable, cap: int) -> tuple[dict[int, list[int]], set[int], bool]:
    """Return (mask -> element list, non-maximal masks, complete)."""
    mul, orders, e = G.mul, G.orders(), G.identity
    n = G.order
    full = G.full_mask

    cyclic: dict[int, tuple[list[int], int]] = {}
    for g in range(n):
        elems = [e]
        x = g
        while x != e:
            elems.append(x)
            x = mul[x][g]
        m = mask_of(elems)
        if m not in cyclic:
            cyclic[m] = (elems, g)

    seeds = [(m, g) for m, (_, g) in cyclic.items() if len(factorize(orders[g])) == 1]
    known: dict[int, list[int]] = {m: elems for m, (elems, _) in cyclic.items()}
    gens: dict[int, list[int]] = {m: ([] if g == e else [g]) for m, (_, g) in cyclic.items()}
    nonmaximal: set[int] = set()
    queue = list(known)
    complete = True

    i = 0
    while i < len(queue) and complete:
        H = queue[i]
        i += 1
        if H == full:
            continue
        h_elems = known[H]
        h_gens = gens[H]
        done = 0  # union of cosets g*H already joined
        for cmask, g in seeds:
            if not cmask & ~H or done >> g & 1:
                continue
            seen = bytearray(n)
            for x in h_elems:
                seen[x] = 1
            elems = list(h_elems)
            k_gens = h_gens + [g]
            _grow(mul, seen, elems, k_gens, [g], len(h_elems))
            row = mul[g]
            done |= mask_of(row[h] for h in h_elems)
            K = mask_of(elems)
            if K != full:
                nonmaximal.add(H)
            if K not in known:
                known[K] = elems
                gens[K] = k_gens
                queue.append(K)
                if len(known) > cap:
                    complete = False
                    break
    return known, nonmaximal, complete


def all_subgroups(G: GroupTable, cap: int = DEFAULT_LATTICE_CAP) -> SubgroupLattice:
    """Every subgroup of G once, sorted by (order, element indices).

    If more than ``cap`` subgroups turn up, a partial lattice is returned
    with ``complete=False`` and a :class:`LatticeCapExceeded` warning.
    """
    key = ("lattice", cap)
    if key in G._cache:
        return G._cache[key]
    known, nonmaximal, complete = _enumerate(G, cap)
    if not complete:
        warnings.warn(LatticeCapExceeded(f"more than {cap} subgroups; lattice truncated"), stacklevel=2)
    ordered = sorted(known, key=lambda m: (m.bit_count(), sorted(known[m])))
    full = G.full_mask
    subgroups = tuple(ElementSet(m, G) for m in ordered)
    maximal = tuple(i for i, m in enumerate(ordered) if m != full and m not in nonmaximal)
    normal = tuple(i for i, m in enumerate(ordered) if is_normal(G, m))
    lat = SubgroupLattice(G, subgroups, maximal if complete else (), normal, complete, cap)
    G._cache[key] = lat
    return lat


def maximal_subgroups(G: GroupTable, cap: int = DEFAULT_LATTICE_CAP) -> list[ElementSet]:
    return all_subgroups(G, cap).maximal_subgroups()


def normal_subgroups(G: GroupTable, cap: int = DEFAULT_LATTICE_CAP) -> list[ElementSet]:
    return all_subgroups(G, cap).normal_subgroups()


def frattini(G: GroupTable, cap: int = DEFAULT_LATTICE_CAP) -> ElementSet:
    """Intersection of the maximal subgroups (G itself when there are none)."""
    m = G.full_mask
    for H in maximal_subgroups(G, cap):
        m &= H.bits
    return ElementSet(m, G)


def has_elementary_quotient(G: GroupTable, p: int) -> bool:
    """Whether Z_p x Z_p is a quotient of G, via the p-rank of G/[G,G]."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if G.order % (p * p):
        return False
    return abelian_p_rank(abelianization(G), p) >= 2


def elementary_quotient_witness(G: GroupTable, p: int, cap: int = DEFAULT_LATTICE_CAP) -> ElementSet | None:
    """Least normal N (lattice order) with G/N of order p^2 and exponent p."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if G.order % (p * p):
        return None
    target = G.order // (p * p)
    for N in normal_subgroups(G, cap):
        if len(N) != target:
            continue
        if all(G.power(g, p) in N for g in range(G.order)):
            return N
    return None


def join(G: GroupTable, A: ElementSet, B: ElementSet) -> ElementSet:
    return closure(G, A.bits | B.bits)
