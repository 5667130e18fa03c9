import pytest

from mixsurf.albanese import canonical_kernel
from mixsurf.cover import make_generating_vector, make_mixed_action
from mixsurf.errors import KernelNotAdmissible, NotSemiIsogenous
from mixsurf.groups import abelian_group, cyclic_group
from mixsurf.ramification import order_two_outer, ramification_report


def test_o2_z6(z6_action):
    assert order_two_outer(z6_action) == {3}


def test_o2_d4(d4, d4_action):
    G, e = d4
    assert order_two_outer(d4_action) == {e["rs"], e["r3s"]}


def test_o2_klein():
    G = abelian_group([2, 2])
    g0 = G.subgroup([0, 1]).as_group()[0]
    action = make_mixed_action(G, [0, 1], 2, make_generating_vector(g0, 3, [[1, 0], [0, 0], [0, 0]], []))
    assert order_two_outer(action) == {2, 3}


def test_d4_partition(d4, d4_action):
    G, e = d4
    rep = ramification_report(d4_action, canonical_kernel(d4_action))
    assert rep.pi_K_ramification == {e["r"], e["r3"]}
    assert rep.rho_K_ramification == frozenset()
    assert rep.quotient_ramification == {e["rs"], e["r3s"]}
    assert rep.curve_genus == 5 and rep.simple_flag
    assert all(h == G.mul(e["r"], g) and h in d4_action.G0 for g, h in rep.curve_labels)


def test_z6_partition(z6_action):
    rep = ramification_report(z6_action, z6_action.g0.whole())
    assert rep.pi_K_ramification == {1, 5}
    assert rep.rho_K_ramification == frozenset()
    assert rep.quotient_ramification == {3}


def test_z6_trivial_kernel_has_rho(z6_action):
    rep = ramification_report(z6_action, z6_action.g0.trivial())
    assert rep.rho_K_ramification == {1, 5}


def test_partition_covers_outer(catalog_actions):
    for action in catalog_actions.values():
        K = canonical_kernel(action)
        rep = ramification_report(action, K)
        parts = [rep.o2, rep.pi_K_ramification, rep.rho_K_ramification]
        assert sum(len(p) for p in parts) == len(action.outer())
        assert frozenset().union(*parts) == set(action.outer())


def test_errors(d4, d4_action):
    G, e = d4
    with pytest.raises(KernelNotAdmissible):
        ramification_report(d4_action, d4_action.local_subgroup([e["1"], e["s"]]))
    Z6 = cyclic_group(6)
    g0 = Z6.subgroup([0, 2, 4]).as_group()[0]
    ramified = make_mixed_action(Z6, [0, 2, 4], 1, make_generating_vector(g0, 0, [], [1, 1, 1]))
    with pytest.raises(NotSemiIsogenous):
        ramification_report(ramified, g0.whole())
