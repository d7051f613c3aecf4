"""Brute-force oracle values for small groups, independent of the chigen package.

Groups are built here as permutations or pair arithmetic, subgroups are found
by closing every generating set of size <= 3, and sigma is found by trying
every combination of proper subgroups. Writes tests/data/oracles.json.

    python scripts/derive_oracles.py
"""

from __future__ import annotations

import itertools
import json
import math
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "tests" / "data" / "oracles.json"


def perm_group(n, gens):
    e = tuple(range(n))
    elems = {e}
    frontier = [e]
    while frontier:
        g = frontier.pop()
        for s in gens:
            h = tuple(g[s[i]] for i in range(n))
            if h not in elems:
                elems.add(h)
                frontier.append(h)
    elems = sorted(elems)
    return elems, lambda a, b: tuple(a[b[i]] for i in range(n))


def pair_group(m, n, a):
    """Z_m semidirect Z_n, (i,j)(k,l) = (i + a^j k, j + l); a = 1 gives Z_m x Z_n."""
    elems = [(i, j) for i in range(m) for j in range(n)]
    return elems, lambda x, y: ((x[0] + pow(a, x[1], m) * y[0]) % m, (x[1] + y[1]) % n)


def cycle(n):
    return tuple((i + 1) % n for i in range(n))


def reflect(n):
    return tuple((-i) % n for i in range(n))


GROUPS = {
    "Z2xZ2": lambda: pair_group(2, 2, 1),
    "Z2xZ4": lambda: pair_group(2, 4, 1),
    "Z3xZ3": lambda: pair_group(3, 3, 1),
    "Z2xZ2xZ2": lambda: perm_group(6, [(1, 0, 2, 3, 4, 5), (0, 1, 3, 2, 4, 5), (0, 1, 2, 3, 5, 4)]),
    "S3": lambda: perm_group(3, [(1, 0, 2), (1, 2, 0)]),
    "D4": lambda: perm_group(4, [cycle(4), reflect(4)]),
    "D5": lambda: perm_group(5, [cycle(5), reflect(5)]),
    "D6": lambda: perm_group(6, [cycle(6), reflect(6)]),
    "A4": lambda: perm_group(4, [(1, 2, 0, 3), (1, 0, 3, 2)]),
    "SD(3,4,2)": lambda: pair_group(3, 4, 2),
    "S4": lambda: perm_group(4, [(1, 0, 2, 3), (1, 2, 3, 0)]),
}


def analyse(elems, mul):
    idx = {g: i for i, g in enumerate(elems)}
    n = len(elems)
    table = [[idx[mul(a, b)] for b in elems] for a in elems]
    e = next(i for i in range(n) if all(table[i][j] == j for j in range(n)))
    inv = [next(j for j in range(n) if table[i][j] == e) for i in range(n)]

    def close(gens):
        s = {e} | set(gens)
        grew = True
        while grew:
            grew = False
            for a in list(s):
                for b in list(s):
                    c = table[a][b]
                    if c not in s:
                        s.add(c)
                        grew = True
        return frozenset(s)

    subs = {close(c) for k in range(0, 4) for c in itertools.combinations(range(n), k)}
    whole = frozenset(range(n))
    proper = [H for H in subs if H != whole]
    maximal = [H for H in proper if not any(H < K for K in proper)]

    def normal(H):
        return all(table[table[g][h]][inv[g]] in H for g in range(n) for h in H)

    comm = close([table[table[a][b]][table[inv[a]][inv[b]]] for a in range(n) for b in range(n)])
    center = [g for g in range(n) if all(table[g][h] == table[h][g] for h in range(n))]
    order = []
    for g in range(n):
        k, x = 1, g
        while x != e:
            x, k = table[x][g], k + 1
        order.append(k)

    sigma = None
    if whole not in {close([g]) for g in range(n)}:
        for k in range(2, len(proper) + 1):
            if any(frozenset().union(*c) == whole for c in itertools.combinations(maximal, k)):
                sigma = k
                break
    return {
        "order": n,
        "subgroups": len(subs),
        "normal_subgroups": sum(normal(H) for H in subs),
        "maximal_orders": sorted(len(H) for H in maximal),
        "derived_order": len(comm),
        "center_order": len(center),
        "exponent": math.lcm(*order),
        "min_nonidentity_order": min((o for o in order if o > 1), default=None),
        "sigma": sigma,
        "chigen": None if sigma is None else sigma - 1,
    }


def main() -> None:
    data = {name: analyse(*make()) for name, make in GROUPS.items()}
    OUT.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    for name, row in data.items():
        print(f"{name:<10} {row}")


if __name__ == "__main__":
    main()
