"""Numerical invariants of dihedral and semi-isogenous mixed quotients."""

from __future__ import annotations

from dataclasses import dataclass

from .cover import MixedAction, is_semi_isogenous
from .errors import NonIntegralData, NonIntegralResult, NotSemiIsogenous
from .ramification import order_two_outer


@dataclass(frozen=True)
class DihedralInvariants:
    q: int
    chi: int
    ksq: int


def dihedral_invariants(order_g0: int, g_C: int) -> DihedralInvariants:
    """q, χ(O) and K² of the dihedral surface of a free abelian G0 on a genus g_C curve."""
    if order_g0 < 1:
        raise NonIntegralData(f"|G0| must be positive, got {order_g0}")
    if (g_C - 1) % order_g0:
        raise NonIntegralData(f"|G0| = {order_g0} does not divide g(C) - 1 = {g_C - 1}")
    q = (g_C - 1) // order_g0 + 1
    chi = order_g0 * (q - 1) * (q - 2) // 2
    ksq = order_g0 * (q - 1) * (4 * q - 9)
    return DihedralInvariants(q, chi, ksq)


def semi_isogenous_ksq(action: MixedAction) -> int:
    """K² of X = (C x C)/G for a free G0-action:
    (8 (g-1)^2 - 10 |O2| (g-1)) / |G|."""
    if not is_semi_isogenous(action):
        raise NotSemiIsogenous("K^2 formula needs a free G0-action")
    g = action.genus_C
    n = len(order_two_outer(action))
    num = 8 * (g - 1) ** 2 - 10 * n * (g - 1)
    if num % action.G.order:
        raise NonIntegralResult(f"K^2 = {num}/{action.G.order} is not an integer")
    return num // action.G.order
