"""Command line interface: ``mixsurf analyze|lattice|catalog|search``.

Exit codes: 0 success, 2 invalid input, 3 internal invariant violated
(including a catalog report that deviates from its expected values).
"""

from __future__ import annotations

import argparse
import sys

from .config import load_config
from .errors import InputError, TheoremViolation
from .report import analyze, catalog, lattice_only, render_lattice, render_text, to_json
from .search import DEFAULT_BUDGET, search_free

EXIT_OK, EXIT_INPUT, EXIT_THEOREM = 0, 2, 3


def _audit(value: str) -> bool | None:
    return {"on": True, "off": False, "auto": None}[value]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument(
        "--audit-bijection",
        choices=("on", "off", "auto"),
        default="auto",
        help="check K -> G_K against all overgroups of G (auto: on for |G0| <= 8)",
    )

    p = argparse.ArgumentParser(prog="mixsurf", description="Group-theoretic invariants of mixed surfaces.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="full report for a config")
    a.add_argument("config")

    lat = sub.add_parser("lattice", parents=[common], help="further-quotient table only")
    lat.add_argument("config")

    c = sub.add_parser("catalog", parents=[common], help="run the built-in families")
    c.add_argument("--family", default=None)

    s = sub.add_parser("search", parents=[common], help="enumerate free generating vectors")
    s.add_argument("config")
    s.add_argument("--base-genus", type=int, required=True)
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    return p


def _run(args: argparse.Namespace) -> int:
    audit = _audit(args.audit_bijection)
    if args.command == "analyze":
        report = analyze(load_config(args.config), audit=audit)
        sys.stdout.write(to_json(report) if args.format == "json" else render_text(report))
        return EXIT_OK

    if args.command == "lattice":
        data = lattice_only(load_config(args.config), audit=audit)
        sys.stdout.write(to_json(data) if args.format == "json" else render_lattice(data["lattice"]))
        return EXIT_OK

    if args.command == "catalog":
        entries = catalog(args.family, audit=audit)
        if args.format == "json":
            sys.stdout.write(to_json(entries))
        else:
            for e in entries:
                status = "ok" if not e["deviations"] else "DEVIATES"
                sys.stdout.write(f"== {e['family']} [{status}]\n{render_text(e['report'])}")
                sys.stdout.write(f"geometry: {e['geometry']}\n")
                for d in e["deviations"]:
                    sys.stdout.write(f"  deviation: {d}\n")
        bad = [e["family"] for e in entries if e["deviations"]]
        if bad:
            print(f"mixsurf: catalog deviations in {', '.join(bad)}", file=sys.stderr)
            return EXIT_THEOREM
        return EXIT_OK

    if args.command == "search":
        cfg = load_config(args.config, require_vector=False)
        g0 = cfg.G.subgroup(cfg.g0_members).as_group()[0]
        summary = search_free(g0, args.base_genus, budget=args.budget).as_dict()
        summary["g0_members"] = cfg.g0_members
        if args.format == "json":
            sys.stdout.write(to_json(summary))
        else:
            sys.stdout.write(
                f"|G0| = {summary['group_order']}, g' = {summary['base_genus']}: "
                f"{summary['total']} generating vectors, {summary['orbits']} conjugation orbits\n"
            )
            for rep in summary["representatives"][:20]:
                sys.stdout.write(f"  {rep}\n")
            if summary["orbits"] > 20:
                sys.stdout.write(f"  ... {summary['orbits'] - 20} more\n")
        return EXIT_OK
    raise AssertionError(args.command)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except InputError as exc:
        print(f"mixsurf: {exc.module}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (TheoremViolation, AssertionError) as exc:
        module = getattr(exc, "module", "mixsurf")
        print(f"mixsurf: {module}: invariant violated: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_THEOREM


if __name__ == "__main__":
    sys.exit(main())
