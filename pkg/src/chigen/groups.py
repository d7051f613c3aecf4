"""Finite groups as dense multiplication tables.

Elements are the integers ``0..n-1``; every constructor here puts the identity
at index 0. Subsets of a group are Python ints used as bit vectors (bit ``g``
set iff element ``g`` is in the subset), wrapped in :class:`ElementSet` at the
public surface.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .specs import (
    Alternating,
    Cyclic,
    Dihedral,
    GroupSpec,
    InvalidSpec,
    Product,
    Semidirect,
    Symmetric,
    spec_order,
    validate,
)

DEFAULT_ORDER_CAP = 512


class GroupError(Exception):
    pass


class InvalidGroupTable(GroupError):
    pass


class OrderCapExceeded(GroupError):
    pass


class NotSubgroup(GroupError):
    pass


class NotNormal(GroupError):
    pass


class NotAbelian(GroupError):
    pass


class NotPrime(GroupError):
    pass


class TrivialGroup(GroupError):
    pass


# -- bit vector helpers -----------------------------------------------------


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in prime_factors(n):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out[p] = e
    return out


def least_prime_factor(n: int) -> int:
    if n < 2:
        raise ValueError("n must be >= 2")
    return prime_factors(n)[0]


# -- core types -------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group given by its full multiplication table.

    Build through :func:`build` or :meth:`from_table`, which verify the group
    axioms. Instances are treated as immutable; ``_cache`` memoizes derived
    data such as element orders and the subgroup lattice.
    """

    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    identity: int
    labels: tuple[str, ...]
    spec: GroupSpec | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    @classmethod
    def from_table(
        cls,
        table: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
        spec: GroupSpec | None = None,
        check: bool = True,
    ) -> "GroupTable":
        arr = np.asarray(table, dtype=np.int64)
        n = arr.shape[0]
        if n == 0 or arr.shape != (n, n):
            raise InvalidGroupTable("table must be a nonempty square array")
        if arr.min() < 0 or arr.max() >= n:
            raise InvalidGroupTable("table entries out of range")
        idx = np.arange(n)
        ids = [e for e in range(n) if (arr[e] == idx).all() and (arr[:, e] == idx).all()]
        if not ids:
            raise InvalidGroupTable("no two-sided identity")
        e = ids[0]
        inv = np.argmax(arr == e, axis=1)
        if check:
            _check_axioms(arr, e, inv)
        mul = tuple(map(tuple, arr.tolist()))
        if labels is None:
            labels = [str(i) for i in range(n)]
        return cls(mul, tuple(int(v) for v in inv), e, tuple(labels), spec)

    @property
    def order(self) -> int:
        return len(self.mul)

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        name = str(self.spec) if self.spec is not None else "?"
        return f"GroupTable({name}, order={self.order})"

    def array(self) -> np.ndarray:
        if "array" not in self._cache:
            self._cache["array"] = np.array(self.mul, dtype=np.int64)
        return self._cache["array"]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv[g], -k
        result, base = self.identity, g
        while k:
            if k & 1:
                result = self.mul[result][base]
            base = self.mul[base][base]
            k >>= 1
        return result

    def orders(self) -> tuple[int, ...]:
        """Element orders, indexed by element."""
        if "orders" not in self._cache:
            self._cache["orders"] = tuple(_order_by_walk(self, g) for g in range(self.order))
        return self._cache["orders"]

    def elements(self, subset: "ElementSet | int | None" = None) -> list[int]:
        if subset is None:
            return list(range(self.order))
        return list(iter_bits(_bits(subset)))

    def subset(self, indices: Iterable[int]) -> "ElementSet":
        return ElementSet(mask_of(indices), self)

    def is_abelian(self) -> bool:
        a = self.array()
        return bool((a == a.T).all())


def _check_axioms(arr: np.ndarray, e: int, inv: np.ndarray) -> None:
    n = arr.shape[0]
    idx = np.arange(n)
    if not (np.sort(arr, axis=1) == idx).all() or not (np.sort(arr, axis=0) == idx[:, None]).all():
        raise InvalidGroupTable("table is not a Latin square")
    if not (arr[idx, inv] == e).all():
        raise InvalidGroupTable("inverse table inconsistent")
    # Light's test: the c with (ab)c = a(bc) for all a, b form a closed set,
    # so checking c over a generating set covers every triple.
    gens = _table_generators(arr.tolist(), e)
    for c in gens:
        if not (arr[arr, c] == arr[:, arr[:, c]]).all():
            raise InvalidGroupTable("multiplication is not associative")


def _table_generators(mul: list[list[int]], e: int) -> list[int]:
    n = len(mul)
    seen = bytearray(n)
    seen[e] = 1
    elems = [e]
    gens: list[int] = []
    for g in range(n):
        if not seen[g]:
            boundary = len(elems)
            gens.append(g)
            seen[g] = 1
            elems.append(g)
            _grow(mul, seen, elems, gens, [g], boundary)
    return gens


def _order_by_walk(G: GroupTable, g: int) -> int:
    k, x = 1, g
    row = G.mul
    while x != G.identity:
        x = row[x][g]
        k += 1
    return k


@dataclass(frozen=True)
class ElementSet:
    """A subset of a group's elements, stored as a bit vector."""

    bits: int
    group: GroupTable = field(compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.group.order:
            raise ValueError("bit index out of range for group")

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __contains__(self, g: int) -> bool:
        return bool(self.bits >> g & 1)

    def __le__(self, other: "ElementSet") -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "ElementSet") -> bool:
        return self <= other and self.bits != other.bits

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.bits & other.bits, self.group)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.bits | other.bits, self.group)

    def __repr__(self) -> str:
        return f"ElementSet({self.indices()})"

    def indices(self) -> list[int]:
        return list(iter_bits(self.bits))

    @property
    def is_whole(self) -> bool:
        return self.bits == self.group.full_mask

    def is_subgroup(self) -> bool:
        return is_subgroup(self.group, self.bits)

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self), tuple(self.indices()))


def _bits(s: "ElementSet | int | Iterable[int]") -> int:
    if isinstance(s, ElementSet):
        return s.bits
    if isinstance(s, int):
        return s
    return mask_of(s)


# -- constructors -----------------------------------------------------------


def _word(parts: Sequence[tuple[str, int]]) -> str:
    out = "".join(s if k == 1 else f"{s}^{k}" for s, k in parts if k)
    return out or "e"


def cyclic(n: int) -> GroupTable:
    i = np.arange(n)
    return GroupTable.from_table((i[:, None] + i) % n, [str(k) for k in range(n)], Cyclic(n))


def dihedral(n: int) -> GroupTable:
    """Dihedral group of order 2n; element r^i s^j has index i + n*j."""
    u = np.arange(2 * n)
    i, j = u % n, u // n
    sign = np.where(j == 1, -1, 1)
    table = (i[:, None] + sign[:, None] * i[None, :]) % n + n * ((j[:, None] + j[None, :]) % 2)
    labels = [_word([("r", k % n), ("s", k // n)]) for k in range(2 * n)]
    return GroupTable.from_table(table, labels, Dihedral(n))


def semidirect(m: int, n: int, a: int) -> GroupTable:
    """Z_m x| Z_n with y x y^-1 = x^a; element x^i y^j has index i + m*j."""
    spec = Semidirect(m, n, a)
    validate(spec)
    powers = np.array([pow(a, j, m) for j in range(n)], dtype=np.int64)
    u = np.arange(m * n)
    i, j = u % m, u // m
    # x^i y^j . x^k y^l = x^(i + a^j k) y^(j + l)
    table = (i[:, None] + powers[j][:, None] * i[None, :]) % m + m * ((j[:, None] + j[None, :]) % n)
    labels = [_word([("x", k % m), ("y", k // m)]) for k in range(m * n)]
    return GroupTable.from_table(table, labels, spec)


def _perm_group(perms: list[tuple[int, ...]], spec: GroupSpec) -> GroupTable:
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x)): apply q first
    table = [[index[tuple(p[x] for x in q)] for q in perms] for p in perms]
    labels = ["".join(map(str, p)) for p in perms]
    return GroupTable.from_table(table, labels, spec)


def _is_even(p: tuple[int, ...]) -> bool:
    inversions = sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])
    return inversions % 2 == 0


def symmetric(n: int) -> GroupTable:
    return _perm_group(list(itertools.permutations(range(n))), Symmetric(n))


def alternating(n: int) -> GroupTable:
    perms = [p for p in itertools.permutations(range(n)) if _is_even(p)]
    return _perm_group(perms, Alternating(n))


def direct_product(A: GroupTable, B: GroupTable, cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """Componentwise product; pair (a, b) has index a*|B| + b."""
    na, nb = A.order, B.order
    if na * nb > cap:
        raise OrderCapExceeded(f"|A|*|B| = {na * nb} exceeds cap {cap}")
    ma, mb = A.array(), B.array()
    # mul[(a,b),(c,d)] = (ma[a,c], mb[b,d])
    table = (ma[:, None, :, None] * nb + mb[None, :, None, :]).reshape(na * nb, na * nb)
    labels = [f"({la},{lb})" for la in A.labels for lb in B.labels]
    spec = Product(A.spec, B.spec) if A.spec is not None and B.spec is not None else None
    return GroupTable.from_table(table, labels, spec)


def build(spec: GroupSpec, cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """Construct the group named by ``spec``, refusing orders above ``cap``."""
    validate(spec)
    order = spec_order(spec)
    if order > cap:
        raise OrderCapExceeded(f"{spec} has order {order} > cap {cap}")
    if isinstance(spec, Cyclic):
        return cyclic(spec.n)
    if isinstance(spec, Dihedral):
        return dihedral(spec.n)
    if isinstance(spec, Symmetric):
        return symmetric(spec.n)
    if isinstance(spec, Alternating):
        return alternating(spec.n)
    if isinstance(spec, Semidirect):
        return semidirect(spec.m, spec.n, spec.a)
    if isinstance(spec, Product):
        return direct_product(build(spec.left, cap), build(spec.right, cap), cap)
    raise InvalidSpec(f"unknown spec {spec!r}", "known constructor")


# -- element and subset queries ----------------------------------------------


def element_order(G: GroupTable, g: int) -> int:
    if not 0 <= g < G.order:
        raise IndexError(g)
    return G.orders()[g]


def _grow(mul, seen: bytearray, elems: list[int], gens: Sequence[int], new_gens: Sequence[int], boundary: int) -> None:
    """Close ``elems`` under right multiplication by ``gens`` in place.

    Elements before ``boundary`` are already closed under ``gens`` minus
    ``new_gens``, so only the new generators are applied to them.
    """
    i = 0
    while i < len(elems):
        row = mul[elems[i]]
        for s in (new_gens if i < boundary else gens):
            y = row[s]
            if not seen[y]:
                seen[y] = 1
                elems.append(y)
        i += 1


def closure_elements(G: GroupTable, gens: Iterable[int]) -> list[int]:
    gens = list(gens)
    seen = bytearray(G.order)
    seen[G.identity] = 1
    elems = [G.identity]
    _grow(G.mul, seen, elems, gens, gens, 0)
    return elems


def closure(G: GroupTable, gens: ElementSet | int | Iterable[int]) -> ElementSet:
    """The subgroup generated by ``gens`` (trivial subgroup for empty input)."""
    return ElementSet(mask_of(closure_elements(G, iter_bits(_bits(gens)))), G)


def is_subgroup(G: GroupTable, subset: ElementSet | int) -> bool:
    m = _bits(subset)
    if not m >> G.identity & 1:
        return False
    elems = list(iter_bits(m))
    for x in elems:
        row = G.mul[x]
        for y in elems:
            if not m >> row[y] & 1:
                return False
    return True


def generating_set(G: GroupTable, subset: ElementSet | int | None = None) -> list[int]:
    """A small generating set of the subgroup ``subset`` (default: all of G)."""
    if subset is None and "gens" in G._cache:
        return list(G._cache["gens"])
    target = G.full_mask if subset is None else _bits(subset)
    orders = G.orders()
    # prefer high-order elements: fewer generators
    cands = sorted(iter_bits(target), key=lambda g: (-orders[g], g))
    gens: list[int] = []
    seen = bytearray(G.order)
    seen[G.identity] = 1
    elems = [G.identity]
    for g in cands:
        if seen[g]:
            continue
        boundary = len(elems)
        gens.append(g)
        _grow(G.mul, seen, elems, gens, [g], boundary)
        if len(elems) == target.bit_count():
            break
    if subset is None:
        G._cache["gens"] = tuple(gens)
    return gens


def is_normal(G: GroupTable, subset: ElementSet | int) -> bool:
    m = _bits(subset)
    elems = list(iter_bits(m))
    mul, inv = G.mul, G.inv
    for g in generating_set(G):
        gi = inv[g]
        row = mul[g]
        for h in elems:
            if not m >> mul[row[h]][gi] & 1:
                return False
    return True


def quotient(G: GroupTable, N: ElementSet | int) -> GroupTable:
    """G/N on cosets gN, each labelled by its least element index."""
    m = _bits(N)
    if not is_subgroup(G, m):
        raise NotSubgroup("N is not a subgroup")
    if not is_normal(G, m):
        raise NotNormal("N is not normal in G")
    n_elems = list(iter_bits(m))
    coset = [-1] * G.order
    reps: list[int] = []
    for g in range(G.order):
        if coset[g] < 0:
            row = G.mul[g]
            for h in n_elems:
                coset[row[h]] = len(reps)
            reps.append(g)
    table = [[coset[G.mul[a][b]] for b in reps] for a in reps]
    labels = [f"[{G.labels[r]}]" for r in reps]
    Q = GroupTable.from_table(table, labels, None)
    Q._cache["coset_map"] = tuple(coset)
    return Q


def min_nonidentity_order(G: GroupTable) -> int:
    if G.order < 2:
        raise TrivialGroup("group of order 1 has no nonidentity element")
    best = min(o for g, o in enumerate(G.orders()) if g != G.identity)
    assert best == least_prime_factor(G.order), "Cauchy cross-check failed"
    return best


def cyclic_generator(G: GroupTable) -> int | None:
    """Least element index of order |G|, or None if G is not cyclic."""
    orders = G.orders()
    return next((g for g in range(G.order) if orders[g] == G.order), None)


def is_cyclic(G: GroupTable) -> bool:
    return cyclic_generator(G) is not None


def exponent(G: GroupTable) -> int:
    return math.lcm(*G.orders())


def sylow_decomposition(G: GroupTable) -> dict[int, ElementSet] | None:
    """Sylow subgroups keyed by prime when G is nilpotent, else None.

    A finite group is nilpotent iff, for each prime p, its p-power-order
    elements form a subgroup of full Sylow order.
    """
    orders = G.orders()
    out = {}
    for p, v in factorize(G.order).items():
        m = mask_of(g for g, o in enumerate(orders) if _is_power_of(o, p))
        if m.bit_count() != p**v or not is_subgroup(G, m):
            return None
        out[p] = ElementSet(m, G)
    return out


def _is_power_of(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def is_nilpotent(G: GroupTable) -> bool:
    return sylow_decomposition(G) is not None


def commutator_subgroup(G: GroupTable) -> ElementSet:
    if "derived" not in G._cache:
        mul, inv = G.mul, G.inv
        comms = set()
        for g in range(G.order):
            for h in range(G.order):
                comms.add(mul[mul[inv[g]][inv[h]]][mul[g][h]])
        G._cache["derived"] = closure(G, comms)
    return G._cache["derived"]


def abelianization(G: GroupTable) -> GroupTable:
    return quotient(G, commutator_subgroup(G))


def abelian_p_rank(A: GroupTable, p: int) -> int:
    """r such that x^p = e has exactly p^r solutions in the abelian group A."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if not A.is_abelian():
        raise NotAbelian("abelian_p_rank needs an abelian group")
    count = sum(1 for g in range(A.order) if A.power(g, p) == A.identity)
    r = 0
    while count % p == 0:
        count //= p
        r += 1
    assert count == 1, "p-torsion count is not a power of p"
    return r
