"""Finite fields and covers of F_q^d by proper subspaces."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .cover import INFINITE, ChiGenResult, CoverCertificate, is_cover, is_irredundant, min_cover
from .groups import ElementSet, GroupError, GroupTable, factorize, mask_of

DEFAULT_POINT_CAP = 625

# low-to-high coefficients of the shipped irreducible polynomials
DEFAULT_IRREDUCIBLE = {
    4: (1, 1, 1),  # x^2 + x + 1
    8: (1, 1, 0, 1),  # x^3 + x + 1
    9: (1, 0, 1),  # x^2 + 1
}


class FieldError(GroupError):
    pass


class CapExceeded(GroupError):
    pass


def _polymulmod(a: list[int], b: list[int], mod: tuple[int, ...], p: int) -> list[int]:
    k = len(mod) - 1
    prod = [0] * (2 * k - 1 if k else 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # reduce by the monic modulus from the top down
    for deg in range(len(prod) - 1, k - 1, -1):
        c = prod[deg]
        if c:
            for i, m in enumerate(mod):
                prod[deg - k + i] = (prod[deg - k + i] - c * m) % p
    return prod[:k]


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    k = len(poly) - 1
    for deg in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            divisor = list(low) + [1]
            rem = list(poly)
            for top in range(k, deg - 1, -1):
                c = rem[top]
                if c:
                    for i, d in enumerate(divisor):
                        rem[top - deg + i] = (rem[top - deg + i] - c * d) % p
            if not any(rem[:deg]):
                return False
    return True


def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Least monic irreducible of degree k over GF(p), coefficients low to high."""
    for low in itertools.product(range(p), repeat=k):
        poly = tuple(reversed(low)) + (1,)
        if poly[0] and _is_irreducible(poly, p):
            return poly
    raise FieldError(f"no irreducible of degree {k} over GF({p})")


@dataclass(frozen=True, eq=False)
class FiniteField:
    """GF(p^k); element sum(c_i p^i) is the polynomial sum(c_i x^i)."""

    p: int
    k: int
    irreducible: tuple[int, ...] | None
    add: tuple[tuple[int, ...], ...] = field(repr=False)
    mul: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.k

    @classmethod
    def of_order(cls, q: int, irreducible: tuple[int, ...] | None = None) -> "FiniteField":
        f = factorize(q)
        if len(f) != 1:
            raise FieldError(f"{q} is not a prime power")
        (p, k), = f.items()
        if k > 1 and irreducible is None:
            irreducible = DEFAULT_IRREDUCIBLE.get(q) or find_irreducible(p, k)
        if k == 1:
            irreducible = None
        elif len(irreducible) != k + 1 or irreducible[-1] != 1 or not _is_irreducible(tuple(irreducible), p):
            raise FieldError(f"{irreducible} is not a monic irreducible of degree {k} over GF({p})")
        digits = [[(x // p**i) % p for i in range(k)] for x in range(q)]

        def index(cs: list[int]) -> int:
            return sum(c * p**i for i, c in enumerate(cs))

        add = tuple(tuple(index([(a + b) % p for a, b in zip(digits[x], digits[y])]) for y in range(q)) for x in range(q))
        if k == 1:
            mul = tuple(tuple(x * y % p for y in range(q)) for x in range(q))
        else:
            mod = tuple(irreducible)
            mul = tuple(tuple(index(_polymulmod(digits[x], digits[y], mod, p)) for y in range(q)) for x in range(q))
        F = cls(p, k, None if irreducible is None else tuple(irreducible), add, mul)
        check_field_axioms(F)
        return F

    def neg(self, x: int) -> int:
        return self.add[x].index(0)

    def inverse(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.mul[x].index(1)

    def mult_order(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 is not a unit")
        k, y = 1, x
        while y != 1:
            y = self.mul[y][x]
            k += 1
        return k


def check_field_axioms(F: FiniteField) -> None:
    """Exhaustive check of the field axioms on F's tables."""
    A = np.array(F.add)
    M = np.array(F.mul)
    q = len(A)
    idx = np.arange(q)
    checks = {
        "additive identity": (A[0] == idx).all(),
        "multiplicative identity": (M[1] == idx).all() if q > 1 else False,
        "additive commutativity": (A == A.T).all(),
        "multiplicative commutativity": (M == M.T).all(),
        "additive associativity": (A[A] == A[:, A]).all(),
        "multiplicative associativity": (M[M] == M[:, M]).all(),
        # a(b + c) = ab + ac
        "distributivity": (M[:, A] == A[M[:, :, None], M[:, None, :]]).all(),
        "additive inverses": all(0 in row for row in F.add),
        "multiplicative inverses": all(1 in F.mul[x] for x in range(1, q)),
    }
    bad = [name for name, ok in checks.items() if not ok]
    if bad:
        raise FieldError(f"field axioms fail: {', '.join(bad)}")


@dataclass(frozen=True, eq=False)
class VecSpace:
    """F_q^d with points indexed by base-q digits (first coordinate lowest)."""

    field: FiniteField
    dim: int
    cap: int = DEFAULT_POINT_CAP

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        if self.field.q**self.dim > self.cap:
            raise CapExceeded(f"q^d = {self.field.q ** self.dim} exceeds cap {self.cap}")

    @property
    def size(self) -> int:
        return self.field.q**self.dim

    def coords(self, v: int) -> tuple[int, ...]:
        q = self.field.q
        return tuple((v // q**i) % q for i in range(self.dim))

    def point(self, coords) -> int:
        q = self.field.q
        return sum(c * q**i for i, c in enumerate(coords))

    @cached_property
    def _digits(self) -> np.ndarray:
        return np.array([self.coords(v) for v in range(self.size)], dtype=np.int64).reshape(self.size, self.dim)

    @cached_property
    def _weights(self) -> np.ndarray:
        return self.field.q ** np.arange(self.dim)

    @cached_property
    def add_table(self) -> np.ndarray:
        A = np.array(self.field.add)
        D = self._digits
        return (A[D[:, None, :], D[None, :, :]] * self._weights).sum(axis=2)

    @cached_property
    def scale_table(self) -> np.ndarray:
        """scale_table[c, v] = c * v."""
        M = np.array(self.field.mul)
        D = self._digits
        return (M[np.arange(self.field.q)[:, None, None], D[None, :, :]] * self._weights).sum(axis=2)

    @cached_property
    def additive_group(self) -> GroupTable:
        labels = ["(" + ",".join(map(str, self.coords(v))) + ")" for v in range(self.size)]
        return GroupTable.from_table(self.add_table, labels)

    def span(self, vectors) -> int:
        """Bit mask of the subspace spanned by ``vectors``."""
        add, scale = self.add_table, self.scale_table
        elems = [0]
        m = 1
        for v in vectors:
            if m >> int(v) & 1:
                continue
            multiples = [int(scale[c, v]) for c in range(self.field.q)]
            new = []
            for w in elems:
                for cv in multiples:
                    x = int(add[w, cv])
                    if not m >> x & 1:
                        m |= 1 << x
                        new.append(x)
            elems.extend(new)
        return m

    @cached_property
    def subspaces(self) -> tuple[ElementSet, ...]:
        """All proper subspaces, by closing spans one vector at a time."""
        G = self.additive_group
        found = {1: [0]}
        queue = [1]
        full = (1 << self.size) - 1
        while queue:
            W = queue.pop()
            basis = found[W]
            done = W
            for v in range(self.size):
                if done >> v & 1:
                    continue
                K = self.span(basis + [v])
                # W + <v'> = K for every v' in K \ W
                done |= K
                if K != full and K not in found:
                    found[K] = basis + [v]
                    queue.append(K)
        ordered = sorted(found, key=lambda m: (m.bit_count(), [i for i in range(self.size) if m >> i & 1]))
        return tuple(ElementSet(m, G) for m in ordered)

    def hyperplanes(self) -> list[ElementSet]:
        target = self.size // self.field.q
        return [W for W in self.subspaces if len(W) == target]


def line_cover(F: FiniteField) -> list[ElementSet]:
    """The q+1 lines of F^2: span(1, a) for each a in F, and span(0, 1)."""
    V = VecSpace(F, 2)
    G = V.additive_group
    lines = [ElementSet(V.span([V.point((1, a))]), G) for a in range(F.q)]
    lines.append(ElementSet(V.span([V.point((0, 1))]), G))
    return lines


def sigma_vec(V: VecSpace) -> ChiGenResult:
    """chi_gen of F_q^d by exact search over hyperplanes (infinite for d = 1)."""
    if V.dim == 1:
        return ChiGenResult(INFINITE, "search", generator=V.point((1,)))
    G = V.additive_group
    planes = V.hyperplanes()
    found = min_cover(G.full_mask, [H.bits for H in planes])
    parts = tuple(planes[i] for i in found.chosen)
    cert = CoverCertificate(parts, is_cover(G, parts), is_irredundant(G, parts), found.proven_up_to)
    return ChiGenResult(found.size - 1, "search", witness=cert)


def has_subspace_cover(V: VecSpace, k: int) -> bool:
    """Brute force: do some k proper subspaces cover V?"""
    full = (1 << V.size) - 1
    masks = [W.bits for W in V.subspaces]
    for combo in itertools.combinations(masks, k):
        u = 0
        for m in combo:
            u |= m
        if u == full:
            return True
    return False


def generated_subfield(F: FiniteField, elems) -> int:
    """Mask of the subfield generated by ``elems``."""
    members = {0, 1} | set(elems)
    frontier = list(members)
    while frontier:
        x = frontier.pop()
        for y in list(members):
            for z in (F.add[x][y], F.mul[x][y]):
                if z not in members:
                    members.add(z)
                    frontier.append(z)
    return mask_of(members)


def field_single_generator(F: FiniteField) -> int:
    """Least element generating the cyclic group F*; it alone generates F."""
    g = next(x for x in range(1, F.q) if F.mult_order(x) == F.q - 1)
    assert generated_subfield(F, [g]) == (1 << F.q) - 1
    return g
