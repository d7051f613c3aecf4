"""Exact minimum covers by proper subgroups, and the coloring oracle.

The covering number sigma(G) is found by exact search over the maximal
subgroups: any cover by proper subgroups stays a cover of the same size when
each part is enlarged to a maximal subgroup containing it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .groups import (
    ElementSet,
    GroupError,
    GroupTable,
    _bits,
    closure_elements,
    cyclic_generator,
    is_subgroup,
    iter_bits,
)
from .lattice import DEFAULT_LATTICE_CAP, all_subgroups

DEFAULT_BUDGET = 10**7
INFINITE = math.inf


class NotProperSubgroup(GroupError):
    pass


class BudgetExceeded(GroupError):
    pass


@dataclass(frozen=True)
class CoverCertificate:
    parts: tuple[ElementSet, ...]
    covers: bool
    irredundant: bool
    minimal_proven_up_to: int

    def as_lists(self) -> list[list[int]]:
        return [p.indices() for p in self.parts]


@dataclass(frozen=True)
class ChiGenResult:
    """chi_gen of a group: a finite k >= 2, or ``INFINITE`` (math.inf).

    ``method`` names the path that produced the value; finite search results
    carry a minimal cover as ``witness``, infinite ones a ``generator``.
    """

    value: int | float
    method: str
    witness: CoverCertificate | None = None
    generator: int | None = None

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITE

    @property
    def sigma(self) -> int | None:
        return None if self.is_infinite else int(self.value) + 1

    def __str__(self) -> str:
        return "infinite" if self.is_infinite else str(self.value)


@dataclass(frozen=True)
class CoverSearch:
    """Outcome of :func:`min_cover` on bit-vector parts."""

    size: int | None
    chosen: tuple[int, ...]
    proven_up_to: int


class _Engine:
    """Depth-first exact set cover over bit-vector parts.

    Branches on the uncovered element with the fewest candidate parts and
    prunes with ceil(uncovered / best remaining coverage).
    """

    def __init__(self, universe: int, parts: Sequence[int]):
        self.universe = universe
        self.parts = list(parts)
        self.trail: list[int] = []  # parts of the last cover found, innermost first
        self.elem_parts: dict[int, int] = {}
        for j, p in enumerate(self.parts):
            for e in iter_bits(p & universe):
                self.elem_parts[e] = self.elem_parts.get(e, 0) | (1 << j)

    def feasible(self, uncovered: int, slots: int, allowed: int) -> bool:
        if not uncovered:
            return True
        if slots <= 0:
            return False
        parts = self.parts
        best_e, best_c = -1, None
        elem_parts = self.elem_parts
        for e in iter_bits(uncovered):
            c = elem_parts.get(e, 0) & allowed
            if not c:
                return False
            if best_c is None or c.bit_count() < best_c.bit_count():
                best_e, best_c = e, c
        need = uncovered.bit_count()
        maxcov = max((parts[j] & uncovered).bit_count() for j in iter_bits(allowed))
        if maxcov * slots < need:
            return False
        for j in iter_bits(best_c):
            allowed &= ~(1 << j)
            if self.feasible(uncovered & ~parts[j], slots - 1, allowed):
                self.trail.append(j)
                return True
        return False

    def lexmin(self, size: int) -> tuple[int, ...]:
        """Least index tuple of a size-``size`` cover (one must exist)."""
        n = len(self.parts)
        chosen: list[int] = []
        uncovered = self.universe
        start = 0
        for slot in range(size):
            for i in range(start, n):
                rest = uncovered & ~self.parts[i]
                later = ((1 << n) - 1) & ~((1 << (i + 1)) - 1)
                if self.feasible(rest, size - slot - 1, later):
                    chosen.append(i)
                    uncovered = rest
                    start = i + 1
                    break
            else:
                raise AssertionError("lexmin called with an infeasible size")
            if not uncovered:
                break
        return tuple(chosen)


def min_cover(
    universe: int,
    parts: Sequence[int],
    max_size: int | None = None,
    canonical: bool = True,
) -> CoverSearch:
    """Minimum number of ``parts`` whose union contains ``universe``.

    Sizes are tried in increasing order, so a result of size s also proves
    that no cover of size <= s-1 exists. With ``canonical`` the returned
    indices are the lexicographically least minimum cover (parts ordered by
    index); otherwise they are the first cover the search met.
    """
    eng = _Engine(universe, parts)
    everything = (1 << len(parts)) - 1
    limit = len(parts) if max_size is None else min(max_size, len(parts))
    if not universe:
        return CoverSearch(0, (), -1)
    for size in range(1, limit + 1):
        eng.trail.clear()
        if eng.feasible(universe, size, everything):
            chosen = eng.lexmin(size) if canonical else tuple(sorted(eng.trail))
            return CoverSearch(len(chosen), chosen, size - 1)
    return CoverSearch(None, (), limit)


def _check_parts(G: GroupTable, parts: Sequence[ElementSet | int]) -> list[int]:
    masks = [_bits(p) for p in parts]
    for m in masks:
        if m == G.full_mask or not is_subgroup(G, m):
            raise NotProperSubgroup("every part must be a proper subgroup")
    return masks


def is_cover(G: GroupTable, parts: Sequence[ElementSet | int]) -> bool:
    union = 0
    for m in _check_parts(G, parts):
        union |= m
    return union == G.full_mask


def irredundancy_witnesses(G: GroupTable, parts: Sequence[ElementSet | int]) -> list[int] | None:
    """For an irredundant cover, one element per part lying in no other part."""
    masks = _check_parts(G, parts)
    if not is_cover(G, masks):
        return None
    out = []
    for i, m in enumerate(masks):
        others = 0
        for j, o in enumerate(masks):
            if j != i:
                others |= o
        private = m & ~others
        if not private:
            return None
        out.append((private & -private).bit_length() - 1)
    return out


def is_irredundant(G: GroupTable, parts: Sequence[ElementSet | int]) -> bool:
    return irredundancy_witnesses(G, parts) is not None


def sigma_search(G: GroupTable, lattice_cap: int = DEFAULT_LATTICE_CAP, canonical: bool = True) -> ChiGenResult:
    """chi_gen(G) = sigma(G) - 1 by exact search over maximal subgroups.

    The witness is the lexicographically least minimum cover, comparing
    parts by (order, sorted element indices), unless ``canonical`` is off.
    """
    key = ("sigma_search", lattice_cap, canonical)
    if key in G._cache:
        return G._cache[key]
    g = cyclic_generator(G)
    if g is not None:
        result = ChiGenResult(INFINITE, "search", generator=g)
    else:
        maximal = all_subgroups(G, lattice_cap).maximal_subgroups()
        found = min_cover(G.full_mask, [H.bits for H in maximal], canonical=canonical)
        # a finite noncyclic group is the union of its cyclic subgroups
        assert found.size is not None, "noncyclic group not covered by its maximal subgroups"
        parts = tuple(maximal[i] for i in found.chosen)
        cert = CoverCertificate(
            parts,
            covers=is_cover(G, parts),
            irredundant=is_irredundant(G, parts),
            minimal_proven_up_to=found.proven_up_to,
        )
        result = ChiGenResult(found.size - 1, "search", witness=cert)
    G._cache[key] = result
    return result


def coloring_oracle(G: GroupTable, k: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether every k-coloring of G has a color class generating G.

    Decided by enumerating colorings directly, one per orbit under color
    permutations (restricted growth strings), so the cost is about
    k^|G| / k!. Raises BudgetExceeded when k^|G| > budget.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = G.order
    if k**n > budget:
        raise BudgetExceeded(f"{k}^{n} colorings exceed budget {budget}")
    memo: dict[int, bool] = {}

    def generates(mask: int) -> bool:
        r = memo.get(mask)
        if r is None:
            r = memo[mask] = len(closure_elements(G, iter_bits(mask))) == n
        return r

    classes = [0] * k

    def walk(g: int, used: int) -> bool:
        if g == n:
            return any(generates(classes[c]) for c in range(used))
        for c in range(min(used + 1, k)):
            classes[c] |= 1 << g
            ok = walk(g + 1, max(used, c + 1))
            classes[c] &= ~(1 << g)
            if not ok:
                return False
        return True

    return walk(0, 0)


def has_cover_of_size(G: GroupTable, k: int) -> bool:
    """Whether some k proper subgroups cover G, by search over all of them.

    Independent of the maximal-subgroup reduction used by sigma_search.
    """
    lat = all_subgroups(G)
    lat.require_complete()
    proper = [H.bits for H in lat.subgroups if not H.is_whole]
    if not proper:
        return False
    found = min_cover(G.full_mask, proper, max_size=k)
    return found.size is not None
