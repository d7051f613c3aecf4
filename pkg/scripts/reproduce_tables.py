"""Regenerate the chi_gen tables for the standard families and the corpus.

    python scripts/reproduce_tables.py              # human tables
    python scripts/reproduce_tables.py --json out.jsonl
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from chigen.cli import OutputRecord, record_from
from chigen.cover import sigma_search
from chigen.groups import least_prime_factor
from chigen.theorems import chigen
from chigen.vecspace import FiniteField, VecSpace, sigma_vec
from chigen.verify import CORPUS, group


@dataclass(frozen=True)
class TableConfig:
    dihedral_max: int = 30
    vec_fields: tuple[int, ...] = (2, 3, 4, 5)
    vec_dims: tuple[int, ...] = (2, 3)
    search_corpus: bool = True


def dihedral_rows(cfg: TableConfig) -> list[OutputRecord]:
    rows = []
    for n in range(2, cfg.dihedral_max + 1):
        t = time.perf_counter()
        r = sigma_search(group(f"D{n}"))
        rec = record_from(f"D{n}", 2 * n, r, time.perf_counter() - t)
        assert rec.chigen == least_prime_factor(n)
        rows.append(rec)
    return rows


def vec_rows(cfg: TableConfig) -> list[OutputRecord]:
    rows = []
    for q in cfg.vec_fields:
        for d in cfg.vec_dims:
            t = time.perf_counter()
            V = VecSpace(FiniteField.of_order(q), d)
            rows.append(record_from(f"V({q},{d})", V.size, sigma_vec(V), time.perf_counter() - t))
    return rows


def corpus_rows(cfg: TableConfig) -> list[OutputRecord]:
    rows = []
    for s in CORPUS:
        t = time.perf_counter()
        r = sigma_search(group(s)) if cfg.search_corpus else chigen(s)
        rows.append(record_from(s, group(s).order, r, time.perf_counter() - t))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--json", metavar="PATH", help="also write JSON lines here")
    ap.add_argument("--dispatch", action="store_true", help="use the dispatcher instead of exact search for the corpus")
    args = ap.parse_args()
    cfg = TableConfig(search_corpus=not args.dispatch)

    sections = [("dihedral groups D_2n", dihedral_rows(cfg)), ("vector spaces F_q^d", vec_rows(cfg)), ("corpus", corpus_rows(cfg))]
    out = open(args.json, "w") if args.json else None
    for title, rows in sections:
        print(f"\n== {title} ==")
        print(f"{'spec':<16} {'order':>6} {'chi_gen':>9} {'sigma':>6}  method")
        for rec in rows:
            print(rec.row())
            if out:
                out.write(rec.to_json() + "\n")
    if out:
        out.close()


if __name__ == "__main__":
    main()
