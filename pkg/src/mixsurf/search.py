"""Exhaustive search for free generating vectors of a given base genus."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceeded, InputError
from .groups import FiniteGroup, subgroup_generated

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class SearchSummary:
    base_genus: int
    group_order: int
    total: int
    orbits: int
    representatives: tuple[tuple[int, ...], ...]

    def as_dict(self) -> dict:
        return {
            "base_genus": self.base_genus,
            "group_order": self.group_order,
            "total": self.total,
            "orbits": self.orbits,
            "representatives": [list(r) for r in self.representatives],
        }


def search_free(G0: FiniteGroup, base_genus: int, budget: int = DEFAULT_BUDGET) -> SearchSummary:
    """All (a1, b1, ..., a_g', b_g') with prod [ai, bi] = 1 generating G0.

    Orbits are taken under simultaneous conjugation only; each orbit is
    represented by its lexicographically least member.
    """
    if base_genus < 2:
        raise InputError(f"base genus must be >= 2, got {base_genus}")
    n = G0.order
    size = n ** (2 * base_genus)
    if size > budget:
        raise BudgetExceeded(f"{n}^{2 * base_genus} = {size} tuples exceeds budget {budget}")

    comm = [[G0.commutator(a, b) for b in range(n)] for a in range(n)]
    generates: dict[frozenset[int], bool] = {}
    conjugators = [
        [G0.conj(g, x) for x in range(n)] for g in G0.elements() if g != 0
    ]
    total = 0
    canon: set[tuple[int, ...]] = set()
    for t in itertools.product(range(n), repeat=2 * base_genus):
        x = 0
        for i in range(0, len(t), 2):
            x = G0.mul(x, comm[t[i]][t[i + 1]])
        if x != 0:
            continue
        key = frozenset(t)
        ok = generates.get(key)
        if ok is None:
            ok = generates[key] = subgroup_generated(G0, key).order == n
        if not ok:
            continue
        total += 1
        best = t
        for c in conjugators:
            u = tuple(c[v] for v in t)
            if u < best:
                best = u
        canon.add(best)
    reps = tuple(sorted(canon))
    return SearchSummary(base_genus, n, total, len(reps), reps)
