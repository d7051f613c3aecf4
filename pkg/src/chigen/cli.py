"""Command-line interface.

    chigen chigen A4 --json
    chigen cover S4
    chigen lattice Z2xZ4
    chigen table D 2..10
    chigen verify all

Exit codes: 0 ok, 1 verification failure, 2 parse/spec error, 3 cap exceeded.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from dataclasses import asdict, dataclass, field

from .cover import DEFAULT_BUDGET, BudgetExceeded, ChiGenResult, sigma_search
from .groups import DEFAULT_ORDER_CAP, GroupError, OrderCapExceeded, build
from .lattice import DEFAULT_LATTICE_CAP, LatticeCapExceeded, LatticeIncomplete, all_subgroups, frattini
from .specs import SpecError, VecSpec, parse_spec
from .theorems import chigen
from .vecspace import CapExceeded, FiniteField, VecSpace, sigma_vec
from .verify import SUITES, VerifyOptions, run_suites

SCHEMA = 1

EXIT_OK, EXIT_VERIFY, EXIT_SPEC, EXIT_CAP = 0, 1, 2, 3

FAMILIES = {
    "Z": "Z{n}",
    "D": "D{n}",
    "S": "S{n}",
    "A": "A{n}",
    "ZZ": "Z{n}xZ{n}",
    "V2": "V({n},2)",
}


@dataclass
class OutputRecord:
    spec: str
    order: int
    chigen: int | str
    sigma: int | None
    method: str
    witness: list[list[int]] | None = None
    timing: float = 0.0
    caps_hit: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.sigma is not None and self.chigen != self.sigma - 1:
            raise ValueError("chigen must equal sigma - 1")

    def to_json(self) -> str:
        return json.dumps({"schema": SCHEMA, **asdict(self)}, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        data = json.loads(text)
        if data.pop("schema", None) != SCHEMA:
            raise ValueError("unsupported output schema")
        return cls(**data)

    def row(self) -> str:
        return f"{self.spec:<16} {self.order:>6} {str(self.chigen):>9} {str(self.sigma):>6}  {self.method}"


def record_from(spec: str, order: int, result: ChiGenResult, elapsed: float) -> OutputRecord:
    witness = result.witness.as_lists() if result.witness is not None else None
    return OutputRecord(
        spec=spec,
        order=order,
        chigen="infinite" if result.is_infinite else int(result.value),
        sigma=result.sigma,
        method=result.method,
        witness=witness,
        timing=round(elapsed * 1000, 3),
    )


def cmd_chigen(text: str, args: argparse.Namespace, search_only: bool | None = None) -> OutputRecord:
    spec = parse_spec(text)
    canonical = args.canonical
    t = time.perf_counter()
    if isinstance(spec, VecSpec):
        V = VecSpace(FiniteField.of_order(spec.q), spec.d)
        result = sigma_vec(V)
        order = V.size
    else:
        G = build(spec, args.cap)
        if search_only if search_only is not None else args.search_only:
            result = sigma_search(G, args.lattice_cap, canonical=canonical)
        else:
            result = chigen(G, lattice_cap=args.lattice_cap)
        order = G.order
    return record_from(str(spec), order, result, time.perf_counter() - t)


def cmd_lattice(text: str, args: argparse.Namespace) -> dict:
    spec = parse_spec(text)
    if isinstance(spec, VecSpec):
        raise SpecError("lattice needs a group spec")
    G = build(spec, args.cap)
    lat = all_subgroups(G, args.lattice_cap)
    out = {
        "schema": SCHEMA,
        "spec": str(spec),
        "order": G.order,
        "complete": lat.complete,
        "subgroups": len(lat),
        "orders": sorted({len(H) for H in lat.subgroups}),
        "caps_hit": [] if lat.complete else ["lattice"],
    }
    if lat.complete:
        out["maximal"] = [H.indices() for H in lat.maximal_subgroups()]
        out["normal"] = [H.indices() for H in lat.normal_subgroups()]
        out["frattini"] = frattini(G, args.lattice_cap).indices() if G.order > 1 else [0]
    return out


def parse_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    if not sep:
        return range(int(lo), int(lo) + 1)
    return range(int(lo), int(hi) + 1)


def cmd_table(family: str, rng: str, args: argparse.Namespace) -> list[OutputRecord]:
    fam = family.upper()
    if fam not in FAMILIES:
        raise SpecError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    try:
        members = parse_range(rng)
    except ValueError as exc:
        raise SpecError(f"bad range {rng!r}: expected N or LO..HI") from exc
    return [cmd_chigen(FAMILIES[fam].format(n=n), args) for n in members]


def cmd_verify(name: str, args: argparse.Namespace) -> int:
    names = list(SUITES) if name == "all" else [name]
    if name != "all" and name not in SUITES:
        raise SpecError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    results = run_suites(names, VerifyOptions(budget=args.budget))
    for r in results:
        if args.json:
            print(json.dumps({"schema": SCHEMA, "suite": r.name, "ok": r.ok, "checked": r.checked, "failures": r.failures}))
        else:
            print(r.line())
            for f in r.failures:
                print(f"    {f}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


def _emit(rec: OutputRecord, as_json: bool, header: bool = False) -> None:
    if as_json:
        print(rec.to_json())
        return
    if header:
        print(f"{'spec':<16} {'order':>6} {'chi_gen':>9} {'sigma':>6}  method")
    print(rec.row())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP, help="group order cap")
    common.add_argument("--lattice-cap", type=int, default=DEFAULT_LATTICE_CAP, help="subgroup count cap")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="coloring oracle budget")
    common.add_argument(
        "--canonical",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="lexicographically least witness (default on)",
    )

    parser = argparse.ArgumentParser(prog="chigen", description="Generating chromatic numbers of finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chigen", parents=[common], help="compute chi_gen of a group or vector space")
    p.add_argument("spec")
    p.add_argument("--search-only", action="store_true", help="force exact cover search")

    p = sub.add_parser("cover", parents=[common], help="minimal proper-subgroup cover with certificate")
    p.add_argument("spec")

    p = sub.add_parser("lattice", parents=[common], help="subgroup lattice summary")
    p.add_argument("spec")

    p = sub.add_parser("table", parents=[common], help="chi_gen over a family, e.g. 'table D 2..10'")
    p.add_argument("family", help=f"one of {', '.join(FAMILIES)}")
    p.add_argument("range", help="N or LO..HI")
    p.add_argument("--search-only", action="store_true")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help=f"all or one of {', '.join(SUITES)}")
    return parser


COMMANDS = ("chigen", "cover", "lattice", "table", "verify")


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # `chigen A4` is shorthand for `chigen chigen A4`
    if argv and argv[0] not in COMMANDS and not argv[0].startswith("-"):
        argv.insert(0, "chigen")
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("error", LatticeCapExceeded)
            if args.command == "chigen":
                _emit(cmd_chigen(args.spec, args), args.json, header=True)
            elif args.command == "cover":
                rec = cmd_chigen(args.spec, args, search_only=True)
                if args.json:
                    print(rec.to_json())
                else:
                    print(f"{rec.spec}: chi_gen = {rec.chigen}, sigma = {rec.sigma}")
                    for part in rec.witness or []:
                        print(f"  |H| = {len(part):>4}  {part}")
            elif args.command == "lattice":
                out = cmd_lattice(args.spec, args)
                if args.json:
                    print(json.dumps(out, sort_keys=True))
                else:
                    print(f"{out['spec']}: order {out['order']}, {out['subgroups']} subgroups, orders {out['orders']}")
                    if out["complete"]:
                        print(f"  maximal: {len(out['maximal'])}, normal: {len(out['normal'])}, |Phi| = {len(out['frattini'])}")
                if not out["complete"]:
                    return EXIT_CAP
            elif args.command == "table":
                for i, rec in enumerate(cmd_table(args.family, args.range, args)):
                    _emit(rec, args.json, header=i == 0)
            elif args.command == "verify":
                return cmd_verify(args.suite, args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except (OrderCapExceeded, LatticeIncomplete, LatticeCapExceeded, CapExceeded, BudgetExceeded) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except GroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
