import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixsurf.cover import (
    genus_of_C,
    irregularity,
    is_semi_isogenous,
    make_generating_vector,
    make_mixed_action,
    minimality_verdict,
    with_tau_prime,
)
from mixsurf.errors import (
    BadEllipticOrder,
    GroupMismatch,
    IndexNotTwo,
    NotGenerating,
    RelationFailure,
    TauPrimeInsideG0,
)
from mixsurf.groups import abelian_group, cyclic_group

Z3 = cyclic_group(3)


def test_free_vector_on_z3():
    gv = make_generating_vector(Z3, 2, [[1, 0], [0, 0]], [])
    assert gv.elements() == [1, 0, 0, 0]
    assert gv.orders == ()


def test_non_generating_vector():
    with pytest.raises(NotGenerating):
        make_generating_vector(Z3, 2, [[0, 0], [0, 0]], [])


def test_elliptic_vector_on_z3():
    gv = make_generating_vector(Z3, 0, [], [1, 1, 1])
    assert gv.orders == (3, 3, 3)
    assert genus_of_C(gv) == 1  # 2g-2 = 3(-2 + 3*2/3) = 0


def test_relation_failure():
    with pytest.raises(RelationFailure):
        make_generating_vector(Z3, 0, [], [1, 1])
    with pytest.raises(RelationFailure):
        make_generating_vector(Z3, 2, [[1, 0]], [])


def test_elliptic_identity_and_declared_orders():
    with pytest.raises(BadEllipticOrder):
        make_generating_vector(Z3, 0, [], [0, 1, 2])
    with pytest.raises(BadEllipticOrder):
        make_generating_vector(Z3, 0, [], [1, 1, 1], orders=[3, 3, 2])


@pytest.mark.parametrize(
    "G0, g_base, hyp, genus",
    [
        (Z3, 2, [[1, 0], [0, 0]], 4),
        (abelian_group([2, 2, 2]), 2, [[1, 2], [4, 0]], 9),
        (cyclic_group(2), 3, [[1, 0], [0, 0], [0, 0]], 5),
        (cyclic_group(1), 4, [[0, 0]] * 4, 4),
    ],
)
def test_genus_free(G0, g_base, hyp, genus):
    assert genus_of_C(make_generating_vector(G0, g_base, hyp, [])) == genus


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 12), st.integers(2, 5))
def test_riemann_hurwitz_free_is_linear(n, g_base):
    G0 = cyclic_group(n)
    hyp = [[min(1, n - 1), 0]] + [[0, 0]] * (g_base - 1)
    gv = make_generating_vector(G0, g_base, hyp, [])
    assert 2 * genus_of_C(gv) - 2 == n * (2 * g_base - 2)


def test_sigma_z3():
    gv = make_generating_vector(Z3, 0, [], [1, 1, 1])
    from mixsurf.cover import sigma_set

    assert sigma_set(gv) == {1, 2}
    assert sigma_set(make_generating_vector(Z3, 2, [[1, 0], [0, 0]], [])) == frozenset()


def test_sigma_s3_conjugation_closure(s3):
    from mixsurf.cover import sigma_set

    transpositions = [x for x in s3.elements() if s3.element_order(x) == 2]
    rot = next(x for x in s3.elements() if s3.element_order(x) == 3)
    t = transpositions[0]
    # t * t' * rot^k = 1 for a suitable second transposition: solve directly
    for u in transpositions:
        c = s3.inv(s3.mul(t, u))
        if s3.element_order(c) == 3:
            gv = make_generating_vector(s3, 0, [], [t, u, c])
            break
    assert set(transpositions) <= sigma_set(gv)
    assert rot in sigma_set(gv)


def test_z6_action(z6_action):
    a = z6_action
    assert a.tau == 2
    assert a.phi.image == tuple(range(3))
    assert a.genus_C == 4
    assert irregularity(a) == 2 and is_semi_isogenous(a)
    assert minimality_verdict(a).verdict == "Unknown"


def test_d4_action(d4, d4_action):
    G, e = d4
    a = d4_action
    assert a.tau == e["r2"]
    s, r2s = a.to_local(e["s"]), a.to_local(e["r2s"])
    assert a.phi(s) == r2s and a.phi(r2s) == s
    assert a.genus_C == 5


def test_tau_prime_inside():
    G = cyclic_group(4)
    g0 = G.subgroup([0, 2]).as_group()[0]
    gv = make_generating_vector(g0, 2, [[1, 0], [0, 0]], [])
    with pytest.raises(TauPrimeInsideG0):
        make_mixed_action(G, [0, 2], 2, gv)


def test_index_and_group_checks():
    G = cyclic_group(6)
    g0 = G.subgroup([0, 2, 4]).as_group()[0]
    gv = make_generating_vector(g0, 2, [[1, 0], [0, 0]], [])
    with pytest.raises(IndexNotTwo):
        make_mixed_action(G, [0, 3], 1, gv)
    other = make_generating_vector(cyclic_group(2), 2, [[1, 0], [0, 0]], [])
    with pytest.raises(GroupMismatch):
        make_mixed_action(G, [0, 2, 4], 1, other)


def test_with_tau_prime(z6_action):
    b = with_tau_prime(z6_action, 3)
    assert b.tau == 0 and b.genus_C == 4


def test_minimality():
    G = abelian_group([2, 2])
    g0 = G.subgroup([0, 1]).as_group()[0]
    gv = make_generating_vector(g0, 3, [[1, 0], [0, 0], [0, 0]], [])
    action = make_mixed_action(G, [0, 1], 2, gv)
    assert irregularity(action) == 3
    assert minimality_verdict(action).verdict == "Minimal"


def test_not_semi_isogenous():
    G = cyclic_group(6)
    g0 = G.subgroup([0, 2, 4]).as_group()[0]
    gv = make_generating_vector(g0, 0, [], [1, 1, 1])
    action = make_mixed_action(G, [0, 2, 4], 1, gv)
    assert irregularity(action) == 0
    assert not is_semi_isogenous(action)
