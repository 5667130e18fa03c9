"""End-to-end analysis of one configuration and its JSON/text rendering."""

from __future__ import annotations

import json
from typing import Any

from .albanese import albanese_report
from .catalog import FAMILIES, family_config, family_names, model_group
from .config import AnalysisConfig, parse_config
from .cover import MixedAction, irregularity, is_semi_isogenous, minimality_verdict
from .groups import (
    build_square_extension,
    center,
    commutator_subgroup,
    find_isomorphism,
    is_generalized_dihedral,
)
from .invariants import dihedral_invariants, semi_isogenous_ksq
from .lattice import FurtherQuotient, is_GK_normal, quotient_lattice
from .ramification import order_two_outer, ramification_report


def _ids(xs) -> list[int]:
    return sorted(int(x) for x in xs)


def lattice_rows(action: MixedAction, lattice: list[FurtherQuotient]) -> list[dict]:
    rows = []
    for fq in lattice:
        real = fq.minimal_realization
        rows.append(
            {
                "K": _ids(action.parent_set(fq.K.members)),
                "K_order": fq.K.order,
                "GK_order": fq.GK.order,
                "GK_normal": is_GK_normal(action, fq),
                "dihedral_target": fq.is_dihedral_target,
                "pi_degree": fq.pi_degree,
                "realization": {
                    "quotient_order": real.quotient.order,
                    "genus": real.genus,
                },
            }
        )
    return rows


def is_dihedral_surface(action: MixedAction) -> bool:
    return (
        is_semi_isogenous(action)
        and action.g0.is_abelian
        and is_generalized_dihedral(action.G, action.G0)
    )


def analyze_action(action: MixedAction, audit: bool | None = None) -> dict[str, Any]:
    q = irregularity(action)
    verdict = minimality_verdict(action)
    alb = albanese_report(action)
    sq = build_square_extension(action.g0)
    lattice = quotient_lattice(action, sq, audit=audit)
    semi = is_semi_isogenous(action)

    K_in_G = _ids(action.parent_set(alb.K.members))
    report: dict[str, Any] = {
        "q": q,
        "genus_C": action.genus_C,
        "order_G": action.G.order,
        "order_G0": action.g0.order,
        "g0_members": list(action.G0.members),
        "tau_prime": action.tau_prime,
        "sigma": _ids(action.parent_set(action.sigma)),
        "semi_isogenous": semi,
        "minimality": {"verdict": verdict.verdict, "reason": verdict.reason},
        "canonical_kernel": {"members": K_in_G, "order": alb.K.order},
        "albanese": {
            "degree": alb.albanese_degree,
            "kernel_invariants": alb.kernel_invariants,
            "polarization": alb.polarization_type,
            "target_genus": alb.target_genus,
            "target_group_order": alb.target_group.order,
            "dihedral_ok": alb.dihedral_ok,
            "max_albanese_dimension": alb.max_albanese_dimension,
            "fibres_rational": alb.fibres_rational_flag,
            "warnings": alb.warnings,
        },
        "lattice": lattice_rows(action, lattice),
        "o2": _ids(order_two_outer(action)),
        "ramification": None,
        "ksq": None,
        "dihedral_invariants": None,
    }
    if semi:
        ram = ramification_report(action, alb.K)
        report["ramification"] = {
            "curves": [{"g": g, "h": h} for g, h in ram.curve_labels],
            "curve_genus": ram.curve_genus,
            "quotient": _ids(ram.quotient_ramification),
            "pi_K": _ids(ram.pi_K_ramification),
            "rho_K": _ids(ram.rho_K_ramification),
            "simple": ram.simple_flag,
        }
        report["ksq"] = semi_isogenous_ksq(action)
    if is_dihedral_surface(action):
        inv = dihedral_invariants(action.g0.order, action.genus_C)
        report["dihedral_invariants"] = {"q": inv.q, "chi": inv.chi, "ksq": inv.ksq}
    return report


def analyze(config: AnalysisConfig | dict, audit: bool | None = None) -> dict[str, Any]:
    """Full report for a configuration; a pure function of the input."""
    if isinstance(config, dict):
        config = parse_config(config)
    report = analyze_action(config.build_action(), audit=audit)
    report["input"] = config.source
    return report


def lattice_only(config: AnalysisConfig | dict, audit: bool | None = None) -> dict[str, Any]:
    if isinstance(config, dict):
        config = parse_config(config)
    action = config.build_action()
    lattice = quotient_lattice(action, audit=audit)
    return {"input": config.source, "lattice": lattice_rows(action, lattice)}


def _kernel_identity(action: MixedAction, K_in_G: set[int], what: str) -> bool:
    G = action.G
    if what == "G0":
        return K_in_G == set(action.G0.members)
    if what == "trivial":
        return K_in_G == {0}
    if what == "center_G":
        return K_in_G == set(center(G).members)
    if what == "center_G0":
        return K_in_G == action.parent_set(center(action.g0).members)
    if what == "commutator_G0":
        return K_in_G == set(commutator_subgroup(G, action.G0).members)
    if what == "unique_order2_of_G0":
        order2 = [g for g in action.G0.members if G.element_order(g) == 2]
        return len(order2) == 1 and K_in_G == {0, order2[0]}
    raise ValueError(what)


def check_family(name: str, report: dict[str, Any], action: MixedAction) -> list[str]:
    """Deviations of a catalog report from its expected values (empty if exact)."""
    exp = FAMILIES[name]["expected"]
    got = {
        "genus_C": report["genus_C"],
        "q": report["q"],
        "minimality": report["minimality"]["verdict"],
        "K_order": report["canonical_kernel"]["order"],
        "albanese_degree": report["albanese"]["degree"],
        "kernel_invariants": report["albanese"]["kernel_invariants"],
        "polarization": report["albanese"]["polarization"],
        "o2": len(report["o2"]),
        "ksq": report["ksq"],
    }
    if "dihedral_invariants" in exp:
        got["dihedral_invariants"] = report["dihedral_invariants"]
    out = [f"{k}: expected {exp[k]!r}, got {v!r}" for k, v in got.items() if exp[k] != v]
    if find_isomorphism(action.G, model_group(exp["G"])) is None:
        out.append(f"G is not isomorphic to {exp['G']}")
    if find_isomorphism(action.g0, model_group(exp["G0"])) is None:
        out.append(f"G0 is not isomorphic to {exp['G0']}")
    if not _kernel_identity(action, set(report["canonical_kernel"]["members"]), exp["K_is"]):
        out.append(f"canonical kernel is not {exp['K_is']}")
    return out


def catalog(family: str | None = None, audit: bool | None = None) -> list[dict[str, Any]]:
    """Analyze built-in families; each entry carries its deviations list."""
    names = [family] if family is not None else family_names()
    entries = []
    for name in names:
        cfg = parse_config(family_config(name))
        action = cfg.build_action()
        report = analyze_action(action, audit=audit)
        report["input"] = cfg.source
        entries.append(
            {
                "family": name,
                "report": report,
                "expected": FAMILIES[name]["expected"],
                "geometry": FAMILIES[name]["geometry"],
                "deviations": check_family(name, report, action),
            }
        )
    return entries


def to_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def render_text(report: dict[str, Any]) -> str:
    alb = report["albanese"]
    lines = [
        f"G: order {report['order_G']}   G0: order {report['order_G0']}   tau' = {report['tau_prime']}",
        f"g(C) = {report['genus_C']}   q = {report['q']}   semi-isogenous: {report['semi_isogenous']}",
        f"minimality: {report['minimality']['verdict']} ({report['minimality']['reason']})",
        f"canonical K: order {report['canonical_kernel']['order']}, members {report['canonical_kernel']['members']}",
        f"Albanese degree: {alb['degree']}   kernel G0/K: {alb['kernel_invariants'] or 'trivial'}"
        f"   polarization: {alb['polarization']}   target genus g(C/K): {alb['target_genus']}",
    ]
    for w in alb["warnings"]:
        lines.append(f"warning: {w}")
    lines.append(render_lattice(report["lattice"]).rstrip("\n"))
    lines.append(f"|O2| = {len(report['o2'])}   O2 = {report['o2']}")
    if report["ramification"] is not None:
        r = report["ramification"]
        lines.append(f"ramification at K: quotient {r['quotient']}, pi_K {r['pi_K']}, rho_K {r['rho_K']}")
    if report["ksq"] is not None:
        lines.append(f"K^2 of X = {report['ksq']}")
    if report["dihedral_invariants"] is not None:
        d = report["dihedral_invariants"]
        lines.append(f"dihedral surface: q = {d['q']}, chi = {d['chi']}, K^2 = {d['ksq']}")
    return "\n".join(lines) + "\n"


def render_lattice(rows: list[dict]) -> str:
    lines = ["  |K|  |G_K|  normal  dihedral  g(C/K)  K"]
    for row in rows:
        genus = row["realization"]["genus"]
        lines.append(
            f"  {row['K_order']:>3}  {row['GK_order']:>5}  {str(row['GK_normal']):>6}"
            f"  {str(row['dihedral_target']):>8}  {'-' if genus is None else genus:>6}  {row['K']}"
        )
    return "\n".join(lines) + "\n"


__all__ = ["analyze", "analyze_action", "catalog", "check_family", "lattice_only", "render_text"]
