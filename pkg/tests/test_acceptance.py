"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import json

import pytest

from mixsurf import cli
from mixsurf.albanese import canonical_kernel
from mixsurf.catalog import family_config, family_names
from mixsurf.cover import make_generating_vector, make_mixed_action, with_tau_prime
from mixsurf.groups import (
    SubgroupRef,
    abelian_group,
    build_square_extension,
    embed_mixed,
    generalized_dihedral,
    is_generalized_dihedral,
    quotient_group,
)
from mixsurf.invariants import dihedral_invariants, semi_isogenous_ksq
from mixsurf.lattice import (
    admissible_kernels,
    gk_directly_normal,
    is_GK_normal,
    kxk_quotient_matches,
    overgroups_by_cosets,
    quotient_lattice,
)
from mixsurf.ramification import ramification_report
from mixsurf.report import is_dihedral_surface

from test_groups import abelian_chains


@pytest.fixture
def verdict(capsys):
    def emit(number, title, failures):
        with capsys.disabled():
            status = "PASS" if not failures else "FAIL"
            print(f"\nacceptance {number} ({title}): {status}")
            for f in failures:
                print(f"    {f}")
        assert not failures, failures

    return emit


@pytest.fixture(scope="module")
def lattices(catalog_actions):
    out = {}
    for name, action in catalog_actions.items():
        sq = build_square_extension(action.g0)
        out[name] = (sq, quotient_lattice(action, sq, audit=False))
    return out


# exact values, restated here independently of the catalog's expected blocks
CATALOG = {
    "k2_7": dict(order_G0=3, order_G=6, genus_C=4, q=2, K=3, degree=3, kernel=[], pol=[1, 1], o2=1, ksq=7),
    "k2_6_dihedral": dict(order_G0=4, order_G=8, genus_C=5, q=2, K=2, degree=2, kernel=[2], pol=[1, 2], o2=2, ksq=6),
    "k2_6_cyclic": dict(order_G0=4, order_G=8, genus_C=5, q=2, K=2, degree=2, kernel=[2], pol=[1, 2], o2=2, ksq=6),
    "k2_4": dict(order_G0=6, order_G=12, genus_C=7, q=2, K=3, degree=3, kernel=[2], pol=[1, 2], o2=4, ksq=4),
    "k2_2_dihedral": dict(order_G0=8, order_G=16, genus_C=9, q=2, K=2, degree=2, kernel=[2, 2], pol=[1, 1], o2=6, ksq=2),
    "k2_2_quaternion": dict(order_G0=8, order_G=16, genus_C=9, q=2, K=2, degree=2, kernel=[2, 2], pol=[1, 1], o2=6, ksq=2),
    "fabfrank": dict(order_G0=2, order_G=4, genus_C=5, q=3, K=1, degree=1, kernel=[2], pol=[1, 1, 2], o2=2, ksq=12),
}


def test_1_catalog_fidelity(capsys, verdict):
    code = cli.main(["catalog"])
    entries = {e["family"]: e for e in json.loads(capsys.readouterr().out)}
    failures = [] if code == 0 else [f"exit code {code}"]
    for name, want in CATALOG.items():
        r = entries[name]["report"]
        got = dict(
            order_G0=r["order_G0"], order_G=r["order_G"], genus_C=r["genus_C"], q=r["q"],
            K=r["canonical_kernel"]["order"], degree=r["albanese"]["degree"],
            kernel=r["albanese"]["kernel_invariants"], pol=r["albanese"]["polarization"],
            o2=len(r["o2"]), ksq=r["ksq"],
        )
        failures += [f"{name}: {k} expected {want[k]}, got {got[k]}" for k in want if got[k] != want[k]]
        failures += [f"{name}: {d}" for d in entries[name]["deviations"]]
    ff = entries["fabfrank"]["report"]
    if ff["minimality"]["verdict"] != "Minimal":
        failures.append("fabfrank: not Minimal")
    if ff["dihedral_invariants"] != {"q": 3, "chi": 2, "ksq": 12}:
        failures.append(f"fabfrank: dihedral invariants {ff['dihedral_invariants']}")
    verdict(1, "catalog fidelity", failures)


def test_2_gk_bijection(catalog_actions, lattices, verdict):
    failures = []
    for name, action in catalog_actions.items():
        sq, lattice = lattices[name]
        over = overgroups_by_cosets(sq, embed_mixed(sq, action).image_subgroup())
        kernels = admissible_kernels(action)
        if len(over) != len(kernels) or set(over) != {fq.GK for fq in lattice}:
            failures.append(f"{name}: {len(over)} overgroups vs {len(kernels)} kernels")
        left = {sq.encode(a, 0, 0) for a in action.g0.elements()}
        for fq in lattice:
            if fq.GK.member_set & left != {sq.encode(k, 0, 0) for k in fq.K.members}:
                failures.append(f"{name}: intersection property fails at |K| = {fq.K.order}")
    verdict(2, "G_K bijection and intersection property", failures)


def test_3_normality_criterion(catalog_actions, lattices, verdict):
    failures, checked = [], 0
    for name, action in catalog_actions.items():
        sq, lattice = lattices[name]
        for fq in lattice:
            checked += 1
            if is_GK_normal(action, fq) != gk_directly_normal(sq, fq):
                failures.append(f"{name}: mismatch at K = {list(fq.K.members)}")
    assert checked > len(catalog_actions)
    verdict(3, "normality criterion equals direct normality", failures)


def test_4_kxk(catalog_actions, lattices, verdict):
    failures = []
    for name, action in catalog_actions.items():
        sq, lattice = lattices[name]
        for fq in lattice:
            if not kxk_quotient_matches(action, sq, fq):
                failures.append(f"{name}: K x K check fails at |K| = {fq.K.order}")
    verdict(4, "K x K normal in G_K with quotient G/K", failures)


def test_5_albanese_etale(catalog_actions, verdict):
    failures = []
    for name, action in catalog_actions.items():
        K = canonical_kernel(action)
        if ramification_report(action, K).rho_K_ramification:
            failures.append(f"{name}: rho_K ramifies")
        Q, proj = quotient_group(action.G, SubgroupRef(action.G, action.parent_set(K.members)))
        Q0 = SubgroupRef(Q, proj.apply(action.G0.members))
        if not (Q0.is_abelian and is_generalized_dihedral(Q, Q0)):
            failures.append(f"{name}: G/K is not generalized dihedral over G0/K")
    verdict(5, "rho_K unramified and G/K generalized dihedral", failures)


def test_6_tau_prime_independence(catalog_actions, verdict):
    failures = []
    for name, action in catalog_actions.items():
        base = action.parent_set(canonical_kernel(action).members)
        for h in action.G0.members:
            other = with_tau_prime(action, action.G.mul(action.tau_prime, h))
            if other.parent_set(canonical_kernel(other).members) != base:
                failures.append(f"{name}: kernel changes for tau'h with h = {h}")
    verdict(6, "canonical kernel independent of tau'", failures)


def dihedral_action(chain, base_genus):
    A = abelian_group(chain)
    G = generalized_dihedral(A)
    members = list(range(A.order))
    g0 = G.subgroup(members).as_group()[0]
    # one generator of A per factor: the unit vector of each cyclic factor
    unit, stride = [], 1
    for f in reversed(chain):
        unit.append(stride)
        stride *= f
    slots = unit + [0] * (2 * base_genus - len(unit))
    hyp = [[slots[2 * i], slots[2 * i + 1]] for i in range(base_genus)]
    gv = make_generating_vector(g0, base_genus, hyp, [])
    return make_mixed_action(G, members, A.order, gv)


def test_7_formula_cross_validation(verdict):
    failures, cases = [], 0
    for chain in abelian_chains(8):
        for gp in (2, 3, 4):
            action = dihedral_action(chain, gp)
            assert is_dihedral_surface(action)
            cases += 1
            a = semi_isogenous_ksq(action)
            b = dihedral_invariants(action.g0.order, action.genus_C).ksq
            if a != b:
                failures.append(f"A = {chain or [1]}, g' = {gp}: {a} != {b}")
    assert cases == 33  # 11 abelian groups of order <= 8, three base genera each
    verdict(7, "K^2 formulas agree on dihedral surfaces", failures)


def test_8_search_existence(capsys, tmp_path, verdict):
    failures = []
    for name in family_names():
        cfg = {k: v for k, v in family_config(name).items() if k not in ("base_genus", "hyperbolic", "elliptic")}
        p = tmp_path / f"{name}.json"
        p.write_text(json.dumps(cfg))
        code = cli.main(["search", str(p), "--base-genus", "2"])
        data = json.loads(capsys.readouterr().out)
        if code != 0 or data["total"] < 1:
            failures.append(f"{name}: no free vector (exit {code})")
        if name == "k2_7" and data["total"] != 80:
            failures.append(f"Z/3: {data['total']} tuples, expected 80")
    verdict(8, "search finds free vectors; 80 for Z/3", failures)
