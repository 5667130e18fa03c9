from __future__ import annotations

import pytest

from mixsurf.config import parse_config
from mixsurf.catalog import FAMILIES, family_config, family_names
from mixsurf.cover import make_generating_vector, make_mixed_action
from mixsurf.groups import cycles_to_images, cyclic_group, group_from_permutations


def perm(degree, *cycles):
    return cycles_to_images(degree, cycles)


def element(G, degree, *cycles):
    """Index of the permutation given in cycle notation."""
    return G.labels.index(tuple(perm(degree, *cycles)))


@pytest.fixture(scope="session")
def d4():
    """D4 on 1..4 with r = (1 2 3 4), s = (1 3)."""
    G = group_from_permutations(4, [perm(4, (1, 2, 3, 4)), perm(4, (1, 3))])
    e = {
        "1": 0,
        "r": element(G, 4, (1, 2, 3, 4)),
        "r2": element(G, 4, (1, 3), (2, 4)),
        "r3": element(G, 4, (1, 4, 3, 2)),
        "s": element(G, 4, (1, 3)),
        "r2s": element(G, 4, (2, 4)),
        "rs": element(G, 4, (1, 2), (3, 4)),
        "r3s": element(G, 4, (1, 4), (2, 3)),
    }
    return G, e


@pytest.fixture(scope="session")
def s3():
    G = group_from_permutations(3, [perm(3, (1, 2)), perm(3, (2, 3))])
    return G


def free_action(G, g0_members, tau_prime, gens_local, base_genus=2):
    """Free action whose hyperbolic part lists ``gens_local`` as a_i (b_i = 1)."""
    g0 = G.subgroup(g0_members).as_group()[0]
    hyp = [[a, 0] for a in gens_local] + [[0, 0]] * (base_genus - len(gens_local))
    gv = make_generating_vector(g0, base_genus, hyp, [])
    return make_mixed_action(G, g0_members, tau_prime, gv)


@pytest.fixture(scope="session")
def z6_action():
    G = cyclic_group(6)
    return free_action(G, [0, 2, 4], 1, [1])  # local 1 <-> 2 in Z/6


@pytest.fixture(scope="session")
def d4_action(d4):
    G, e = d4
    members = sorted([e["1"], e["r2"], e["s"], e["r2s"]])
    local_s = members.index(e["s"])
    local_r2s = members.index(e["r2s"])
    return free_action(G, members, e["r"], [local_s, local_r2s])


@pytest.fixture(scope="session")
def catalog_actions():
    return {name: parse_config(family_config(name)).build_action() for name in family_names()}


@pytest.fixture(scope="session")
def catalog_expected():
    return {name: FAMILIES[name]["expected"] for name in family_names()}
