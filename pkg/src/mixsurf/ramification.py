"""Ramification of the quotient maps for free G0-actions.

Curves are labelled both by an outer element g (R_g) and by h = τ'g in G0
(the graph Γ_h with R_g = Γ_h).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cover import MixedAction, is_semi_isogenous
from .errors import KernelNotAdmissible, NotSemiIsogenous
from .groups import SubgroupRef


def order_two_outer(action: MixedAction) -> frozenset[int]:
    """O2 = {g ∈ G \\ G0 : g^2 = 1}, in G's indices."""
    G = action.G
    return frozenset(g for g in action.outer() if G.mul(g, g) == 0)


@dataclass(frozen=True)
class RamificationReport:
    o2: frozenset[int]
    curve_labels: tuple[tuple[int, int], ...]   # (g, h = τ'g) for each outer g
    curve_genus: int
    quotient_ramification: frozenset[int]
    pi_K_ramification: frozenset[int]
    rho_K_ramification: frozenset[int]
    simple_flag: bool = True


def ramification_report(action: MixedAction, K: SubgroupRef) -> RamificationReport:
    """Partition of G \\ G0 by where g^2 lands: 1, K minus 1, or outside K.

    ``K`` is a subgroup of ``action.g0`` normal in G.
    """
    from .lattice import is_admissible

    if not is_semi_isogenous(action):
        raise NotSemiIsogenous("G0 does not act freely on C")
    if not is_admissible(action, K):
        raise KernelNotAdmissible(f"{list(K.members)} is not a subgroup of G0 normal in G")
    G = action.G
    Kset = action.parent_set(K.members)
    labels, o2, pi, rho = [], set(), set(), set()
    for g in action.outer():
        labels.append((g, G.mul(action.tau_prime, g)))
        sq = G.mul(g, g)
        if sq == 0:
            o2.add(g)
        elif sq in Kset:
            pi.add(g)
        else:
            rho.add(g)
    return RamificationReport(
        o2=frozenset(o2),
        curve_labels=tuple(labels),
        curve_genus=action.genus_C,
        quotient_ramification=frozenset(o2),
        pi_K_ramification=frozenset(pi),
        rho_K_ramification=frozenset(rho),
    )
