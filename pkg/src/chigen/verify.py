"""Verification suites: every closed form re-derived by exact search.

Each suite returns a :class:`SuiteResult`; ``failures`` lists one line per
counterexample or disagreement. Suites are deterministic: groups are
processed in a fixed order and results are sorted by spec string.
"""

from __future__ import annotations

import functools
import itertools
import math
import os
import time
from dataclasses import dataclass, field
from typing import Callable

from .cover import (
    coloring_oracle,
    has_cover_of_size,
    is_cover,
    DEFAULT_BUDGET,
    is_irredundant,
    sigma_search,
)
from .groups import (
    GroupTable,
    build,
    cyclic_generator,
    direct_product,
    least_prime_factor,
    min_nonidentity_order,
    quotient,
)
from .lattice import all_subgroups, frattini
from .specs import Dihedral, Semidirect, parse_spec, spec_order
from .theorems import (
    chigen,
    chigen_dihedral,
    chigen_nilpotent,
    chigen_semidirect,
    chigen_torsion_test,
    chigen_two_color_test,
)
from .vecspace import FiniteField, VecSpace, has_subspace_cover, line_cover, sigma_vec

# cyclic / abelian / dihedral / semidirect / S<=5 / A<=5 / products, order <= 360
CORPUS: tuple[str, ...] = (
    # cyclic
    "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12",
    "Z15", "Z16", "Z21", "Z30",
    # abelian
    "Z2xZ2", "Z2xZ4", "Z2xZ6", "Z3xZ3", "Z2xZ2xZ2", "Z2xZ8", "Z4xZ4", "Z3xZ6",
    "Z5xZ5", "Z3xZ9", "Z2xZ2xZ2xZ2", "Z6xZ6", "Z7xZ7", "Z2xZ10", "Z3xZ3xZ5",
    "Z2xZ4xZ3", "Z2xZ2xZ9",
    # dihedral (order 2n)
    "D2", "D3", "D4", "D5", "D6", "D7", "D8", "D9", "D10", "D11", "D12",
    "D15", "D20", "D30",
    # semidirect
    "SD(3,4,2)", "SD(5,4,2)", "SD(5,4,4)", "SD(7,3,2)", "SD(7,6,3)", "SD(9,2,8)",
    "SD(9,3,4)", "SD(9,6,2)", "SD(13,3,3)", "SD(15,4,2)", "SD(21,3,4)",
    "SD(8,2,3)", "SD(8,2,5)", "SD(16,4,3)", "SD(11,5,3)", "SD(10,4,3)",
    # symmetric / alternating
    "S1", "S2", "S3", "S4", "S5", "A3", "A4", "A5",
    # products
    "Z2xS3", "Z3xS3", "S3xS3", "Z2xA4", "Z3xA4", "Z5xA4", "A4xZ2xZ2", "D4xZ3",
    "S4xZ2", "A5xZ2", "Z2xZ2xS3", "A4xS3", "Z4xS3", "Z7xS3", "D5xZ3", "S4xZ3",
    "A5xZ3", "S5xZ3", "SD(3,4,2)xZ5", "D4xD3", "A4xA4",
)


@functools.lru_cache(maxsize=None)
def group(spec: str) -> GroupTable:
    """Build a corpus group once per process."""
    return build(parse_spec(spec))


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures and self.checked > 0

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.name}: {self.checked} checks, {len(self.failures)} failures, {self.seconds:.2f}s"


@dataclass(frozen=True)
class VerifyOptions:
    budget: int = DEFAULT_BUDGET


def _fmt(value) -> str:
    return "infinite" if value == math.inf else str(value)


def _noncyclic(specs) -> list[str]:
    return [s for s in specs if cyclic_generator(group(s)) is None]


# -- individual suites --------------------------------------------------------


def suite_a4(res: SuiteResult, opts: VerifyOptions) -> None:
    G = group("A4")
    t = time.perf_counter()
    r = sigma_search(G)
    elapsed = time.perf_counter() - t
    res.checked += 1
    if r.value != 4:
        res.failures.append(f"chi(A4) = {_fmt(r.value)}, expected 4")
        return
    sizes = sorted(len(p) for p in r.witness.parts)
    res.checked += 1
    if sizes != [3, 3, 3, 3, 4]:
        res.failures.append(f"A4 witness part orders {sizes}")
    res.checked += 1
    if not (r.witness.covers and r.witness.irredundant and r.witness.minimal_proven_up_to == 4):
        res.failures.append("A4 certificate flags wrong")
    maximal = [H.bits for H in all_subgroups(G).maximal_subgroups()]
    res.checked += 1
    if any(functools.reduce(int.__or__, c) == G.full_mask for c in itertools.combinations(maximal, 4)):
        res.failures.append("some 4 maximal subgroups cover A4")
    res.checked += 1
    if elapsed >= 1.0:
        res.failures.append(f"A4 search took {elapsed:.2f}s >= 1s")


def suite_s4(res: SuiteResult, opts: VerifyOptions) -> None:
    t = time.perf_counter()
    r = sigma_search(build(parse_spec("S4")))
    d = chigen("S4")
    elapsed = time.perf_counter() - t
    res.checked += 3
    if r.value != 3:
        res.failures.append(f"chi(S4) by search = {_fmt(r.value)}")
    if d.value != r.value:
        res.failures.append(f"dispatcher ({d.method}) gives {_fmt(d.value)}")
    if elapsed >= 10.0:
        res.failures.append(f"S4 took {elapsed:.2f}s >= 10s")


def suite_zpp(res: SuiteResult, opts: VerifyOptions) -> None:
    for p in (2, 3, 5, 7):
        r = sigma_search(group(f"Z{p}xZ{p}"))
        res.checked += 1
        if r.value != p or len(r.witness.parts) != p + 1:
            res.failures.append(f"Z{p}xZ{p}: chi = {_fmt(r.value)}")


def suite_dihedral(res: SuiteResult, opts: VerifyOptions) -> None:
    for n in range(2, 31):
        G = build(Dihedral(n))
        formula = chigen_dihedral(n).value
        search = sigma_search(G).value
        res.checked += 1
        if not formula == search == least_prime_factor(n):
            res.failures.append(f"D{n}: formula {formula}, search {_fmt(search)}")


def invariant_factor_tuples(max_order: int) -> list[tuple[int, ...]]:
    """All (d1, ..., dr) with 2 <= d1 | d2 | ... | dr and product <= max_order."""
    out: list[tuple[int, ...]] = [()]

    def grow(prefix: tuple[int, ...], prod: int) -> None:
        start = 2 if not prefix else prefix[-1]
        for d in range(start, max_order // prod + 1):
            if prefix and d % prefix[-1]:
                continue
            t = prefix + (d,)
            out.append(t)
            grow(t, prod * d)

    grow((), 1)
    return out


def _abelian(factors: tuple[int, ...]) -> GroupTable:
    if not factors:
        return build(parse_spec("Z1"))
    return build(parse_spec("x".join(f"Z{d}" for d in factors)))


def suite_nilpotent(res: SuiteResult, opts: VerifyOptions, max_order: int = 128) -> None:
    for factors in invariant_factor_tuples(max_order):
        G = _abelian(factors)
        fast = chigen_nilpotent(G).value
        search = sigma_search(G).value
        res.checked += 1
        if fast != search:
            res.failures.append(f"Z{factors}: nilpotent formula {_fmt(fast)}, search {_fmt(search)}")


def semidirect_params(max_m: int = 30, max_n: int = 12) -> list[tuple[int, int, int]]:
    out = []
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            for a in range(max(m, 1)):
                if math.gcd(a, m) == 1 and pow(a, n, m) == 1 % m:
                    out.append((m, n, a))
    return out


def suite_semidirect(res: SuiteResult, opts: VerifyOptions) -> None:
    for m, n, a in semidirect_params():
        G = build(Semidirect(m, n, a))
        fast = chigen_semidirect(m, n, a).value
        search = sigma_search(G).value
        res.checked += 1
        if fast != search:
            res.failures.append(f"SD({m},{n},{a}): formula {_fmt(fast)}, search {_fmt(search)}")
        # group memory is not needed past this point
        G._cache.clear()


def suite_twocolors(res: SuiteResult, opts: VerifyOptions) -> None:
    for s in CORPUS:
        G = group(s)
        chi2 = sigma_search(G).value == 2
        res.checked += 1
        if chi2 != chigen_two_color_test(G):
            res.failures.append(f"{s}: chi = 2 is {chi2} but the Z2 x Z2 quotient test disagrees")


def suite_torsion(res: SuiteResult, opts: VerifyOptions) -> None:
    for s in CORPUS:
        G = group(s)
        if G.order < 2:
            continue
        res.checked += 1
        if not chigen_torsion_test(G):
            p = min_nonidentity_order(G)
            res.failures.append(f"{s}: p = {p}, chi = {_fmt(sigma_search(G).value)}")


def suite_oracle(res: SuiteResult, opts: VerifyOptions) -> None:
    budget = opts.budget
    for s in CORPUS:
        G = group(s)
        if G.order > 12:
            continue
        for k in (1, 2, 3):
            if k**G.order > budget:
                continue
            colorings = coloring_oracle(G, k, budget)
            no_cover = not has_cover_of_size(G, k)
            res.checked += 1
            if colorings != no_cover:
                res.failures.append(f"{s}, k={k}: oracle {colorings}, no-cover {no_cover}")


def suite_bounds(res: SuiteResult, opts: VerifyOptions) -> None:
    for s in _noncyclic(CORPUS):
        G = group(s)
        k = sigma_search(G).value
        res.checked += 1
        lo = min_nonidentity_order(G)
        if not (k >= 2 and k >= lo and k <= G.order - 2):
            res.failures.append(f"{s}: chi = {k}, min order {lo}, |G| - 2 = {G.order - 2}")


def coprime_pairs(limit: int = 50, max_order: int = 360) -> list[tuple[str, str]]:
    """Corpus pairs with coprime orders >= 2, spread over product orders."""
    specs = [s for s in CORPUS if "x" not in s and group(s).order >= 2]
    pairs = [
        (a, b)
        for a, b in itertools.combinations(specs, 2)
        if math.gcd(group(a).order, group(b).order) == 1 and group(a).order * group(b).order <= max_order
    ]
    pairs.sort(key=lambda ab: (group(ab[0]).order * group(ab[1]).order, ab))
    if len(pairs) <= limit:
        return pairs
    step = len(pairs) / limit
    return [pairs[int(i * step)] for i in range(limit)]


def suite_coprime(res: SuiteResult, opts: VerifyOptions) -> None:
    for a, b in coprime_pairs():
        A, B = group(a), group(b)
        AB = direct_product(A, B)
        lhs = sigma_search(AB).value
        rhs = min(sigma_search(A).value, sigma_search(B).value)
        res.checked += 1
        if lhs != rhs:
            res.failures.append(f"{a} x {b}: chi = {_fmt(lhs)}, min = {_fmt(rhs)}")


def suite_quotient(res: SuiteResult, opts: VerifyOptions) -> None:
    for s in CORPUS:
        G = group(s)
        chi = sigma_search(G).value
        for N in all_subgroups(G).normal_subgroups():
            Q = quotient(G, N)
            res.checked += 1
            if not chi <= sigma_search(Q).value:
                res.failures.append(f"{s} / N (|N| = {len(N)}): chi {chi} > chi(G/N)")


def suite_frattini(res: SuiteResult, opts: VerifyOptions) -> None:
    for s in CORPUS:
        G = group(s)
        lat = all_subgroups(G)
        if not lat.complete or G.order < 2:
            continue
        Q = quotient(G, frattini(G))
        res.checked += 1
        a, b = sigma_search(G).value, sigma_search(Q).value
        if a != b:
            res.failures.append(f"{s}: chi {_fmt(a)}, chi(G/Phi) {_fmt(b)}")


def suite_vecspace(res: SuiteResult, opts: VerifyOptions) -> None:
    for q in (2, 3, 4, 5):
        F = FiniteField.of_order(q)
        for d in (2, 3):
            r = sigma_vec(VecSpace(F, d))
            res.checked += 1
            if r.value != q:
                res.failures.append(f"V({q},{d}): chi = {_fmt(r.value)}")
        V2 = VecSpace(F, 2)
        lines = line_cover(F)
        G = V2.additive_group
        res.checked += 1
        if len(lines) != q + 1 or not (is_cover(G, lines) and is_irredundant(G, lines)):
            res.failures.append(f"line cover of F_{q}^2 fails")
        res.checked += 1
        if has_subspace_cover(V2, q):
            res.failures.append(f"F_{q}^2 has a cover by {q} subspaces")
        if q in (2, 3, 5):
            res.checked += 1
            a = sigma_vec(V2).value
            b = sigma_search(group(f"Z{q}xZ{q}")).value
            if a != b:
                res.failures.append(f"F_{q}^2 chi {a} vs Z{q}xZ{q} chi {b}")


def suite_dispatch(res: SuiteResult, opts: VerifyOptions) -> None:
    for s in CORPUS:
        fast = chigen(s)
        search = sigma_search(group(s))
        res.checked += 1
        if fast.value != search.value:
            res.failures.append(f"{s}: dispatcher ({fast.method}) {_fmt(fast.value)}, search {_fmt(search.value)}")


SUITES: dict[str, tuple[str, Callable[[SuiteResult, VerifyOptions], None]]] = {
    "a4": ("chi(A4) = 4 with 5-part certificate, < 1 s", suite_a4),
    "s4": ("chi(S4) = 3 by search and dispatcher, < 10 s", suite_s4),
    "zpp": ("chi(Zp x Zp) = p, p+1 parts, p in {2,3,5,7}", suite_zpp),
    "dihedral": ("chi(D_2n) = least prime factor of n, n in [2,30]", suite_dihedral),
    "nilpotent": ("nilpotent formula = search, abelian groups of order <= 128", suite_nilpotent),
    "semidirect": ("semidirect formula = search, m <= 30, n <= 12", suite_semidirect),
    "twocolors": ("chi = 2 iff Z2 x Z2 quotient, whole corpus", suite_twocolors),
    "torsion": ("chi = p iff Zp x Zp quotient, whole corpus", suite_torsion),
    "oracle": ("coloring oracle = no k-part cover, |G| <= 12, k <= 3", suite_oracle),
    "bounds": ("min element order <= chi <= |G| - 2, chi >= 2", suite_bounds),
    "coprime": ("chi(A x B) = min(chi(A), chi(B)), 50 coprime pairs", suite_coprime),
    "quotient": ("chi(G) <= chi(G/N) for every normal N", suite_quotient),
    "frattini": ("chi(G) = chi(G/Phi(G))", suite_frattini),
    "vecspace": ("chi(F_q^d) = q; line covers; additive consistency", suite_vecspace),
    "dispatch": ("dispatcher = search on the corpus", suite_dispatch),
}


def run_suite(name: str, opts: VerifyOptions = VerifyOptions()) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    res = SuiteResult(name)
    t = time.perf_counter()
    SUITES[name][1](res, opts)
    res.seconds = time.perf_counter() - t
    return res


def worker_count() -> int:
    env = os.environ.get("CHIGEN_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_suites(names: list[str], opts: VerifyOptions = VerifyOptions()) -> list[SuiteResult]:
    """Run named suites, in parallel when more than one worker is available."""
    workers = min(worker_count(), len(names))
    if workers <= 1:
        results = [run_suite(n, opts) for n in names]
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(run_suite, names, [opts] * len(names)))
    return sorted(results, key=lambda r: list(SUITES).index(r.name))
