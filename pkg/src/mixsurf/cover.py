"""Mixed action data: the G0-cover C -> C/G0 and the outer element τ'."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    BadEllipticOrder,
    GroupMismatch,
    IndexNotTwo,
    NonIntegralGenus,
    NotGenerating,
    RelationFailure,
    TauPrimeInsideG0,
    TheoremViolation,
)
from .groups import FiniteGroup, GroupHom, SubgroupRef, subgroup_generated


@dataclass(frozen=True, eq=False)
class GeneratingVector:
    """(a1, b1, ..., a_g', b_g'; c1, ..., c_r) in G0 with prod [ai, bi] * prod cj = 1."""

    group: FiniteGroup
    base_genus: int
    hyperbolic: tuple[tuple[int, int], ...]
    elliptic: tuple[int, ...]
    orders: tuple[int, ...]

    def elements(self) -> list[int]:
        return [x for pair in self.hyperbolic for x in pair] + list(self.elliptic)


def make_generating_vector(
    G0: FiniteGroup,
    base_genus: int,
    hyperbolic: Sequence[Sequence[int]],
    elliptic: Sequence[int],
    orders: Sequence[int] | None = None,
) -> GeneratingVector:
    if base_genus < 0:
        raise RelationFailure(f"base genus must be >= 0, got {base_genus}")
    if len(hyperbolic) != base_genus:
        raise RelationFailure(f"expected {base_genus} hyperbolic pairs, got {len(hyperbolic)}")
    hyp = []
    for pair in hyperbolic:
        if len(pair) != 2:
            raise RelationFailure(f"hyperbolic entry {list(pair)} is not a pair")
        hyp.append((int(pair[0]), int(pair[1])))
    ell = tuple(int(c) for c in elliptic)
    for x in [x for p in hyp for x in p] + list(ell):
        if not 0 <= x < G0.order:
            raise RelationFailure(f"element index {x} out of range for order {G0.order}")

    computed = tuple(G0.element_order(c) for c in ell)
    for c, m in zip(ell, computed):
        if m < 2:
            raise BadEllipticOrder(f"elliptic element {c} is the identity")
    if orders is not None and tuple(int(m) for m in orders) != computed:
        raise BadEllipticOrder(f"declared branch orders {list(orders)} != actual {list(computed)}")

    rel = G0.prod([G0.commutator(a, b) for a, b in hyp] + list(ell))
    if rel != 0:
        raise RelationFailure(f"product of commutators and elliptic elements is {rel}, not 1")
    gv = GeneratingVector(G0, base_genus, tuple(hyp), ell, computed)
    if subgroup_generated(G0, gv.elements()).order != G0.order:
        raise NotGenerating("vector does not generate G0")
    return gv


def genus_of_C(gv: GeneratingVector) -> int:
    """Riemann-Hurwitz: 2g - 2 = |G0| (2g' - 2 + sum(1 - 1/m_j))."""
    rhs = gv.group.order * (2 * gv.base_genus - 2 + sum(1 - Fraction(1, m) for m in gv.orders))
    two_g = rhs + 2
    if two_g.denominator != 1 or two_g.numerator % 2:
        raise NonIntegralGenus(f"Riemann-Hurwitz gives 2g = {two_g}")
    g = two_g.numerator // 2
    if g < 0:
        raise NonIntegralGenus(f"negative genus {g}")
    return g


def sigma_set(gv: GeneratingVector) -> frozenset[int]:
    """Non-identity elements of G0 with a fixed point on C."""
    G = gv.group
    out: set[int] = set()
    for c in gv.elliptic:
        for k in range(1, G.element_order(c)):
            x = G.power(c, k)
            out.update(G.conj(g, x) for g in G.elements())
    out.discard(0)
    return frozenset(out)


@dataclass(frozen=True)
class MinimalityVerdict:
    verdict: str  # "Minimal" | "Unknown"
    reason: str


@dataclass(frozen=True, eq=False)
class MixedAction:
    """A minimal mixed action of G on C x C.

    Elements of G use G's indices; elements of G0 as an abstract group
    (``g0``, ``phi``, ``tau_local``, ``sigma``, and the generating vector)
    use local indices, local i <-> ``G0.members[i]``.
    """

    G: FiniteGroup
    G0: SubgroupRef
    g0: FiniteGroup
    tau_prime: int
    tau: int
    phi: GroupHom
    gv: GeneratingVector
    genus_C: int
    sigma: frozenset[int]
    _local: dict[int, int] = field(repr=False)

    @property
    def tau_local(self) -> int:
        return self._local[self.tau]

    def to_local(self, g: int) -> int:
        return self._local[g]

    def to_parent(self, x: int) -> int:
        return self.G0.members[x]

    def outer(self) -> list[int]:
        return [g for g in self.G.elements() if g not in self.G0]

    def local_subgroup(self, members_in_G: Iterable[int]) -> SubgroupRef:
        return SubgroupRef(self.g0, [self._local[g] for g in members_in_G])

    def parent_set(self, local: Iterable[int]) -> set[int]:
        return {self.G0.members[x] for x in local}


def make_mixed_action(
    G: FiniteGroup,
    G0_members: Iterable[int],
    tau_prime: int,
    gv: GeneratingVector,
) -> MixedAction:
    members = sorted({int(x) for x in G0_members})
    if 2 * len(members) != G.order:
        raise IndexNotTwo(f"|G0| = {len(members)} is not half of |G| = {G.order}")
    G0 = SubgroupRef(G, members)
    if not G0.is_closed():
        raise IndexNotTwo("G0 is not a subgroup")
    if not 0 <= tau_prime < G.order:
        raise TauPrimeInsideG0(f"tau' = {tau_prime} is not an element of G")
    if tau_prime in G0:
        raise TauPrimeInsideG0(f"tau' = {tau_prime} lies in G0")
    g0, _ = G0.as_group()
    if not g0.same_table(gv.group):
        raise GroupMismatch("generating vector lives on a different group than G0")
    g0 = gv.group
    local = {m: i for i, m in enumerate(members)}
    tau = G.mul(tau_prime, tau_prime)
    if tau not in G0:
        raise TheoremViolation("square of an outer element left G0")
    phi = GroupHom(g0, g0, tuple(local[G.conj(tau_prime, m)] for m in members))
    # minimality: G0 acts faithfully on both factors
    if not (phi.is_bijective() and phi.is_homomorphism()):
        raise TheoremViolation("conjugation by tau' is not an automorphism of G0")
    if subgroup_generated(g0, gv.elements()).order != g0.order:
        raise TheoremViolation("action of G0 is not faithful")
    return MixedAction(
        G=G,
        G0=G0,
        g0=g0,
        tau_prime=tau_prime,
        tau=tau,
        phi=phi,
        gv=gv,
        genus_C=genus_of_C(gv),
        sigma=sigma_set(gv),
        _local=local,
    )


def with_tau_prime(action: MixedAction, tau_prime: int) -> MixedAction:
    """Same action data with a different choice of outer element."""
    return make_mixed_action(action.G, action.G0.members, tau_prime, action.gv)


def irregularity(action: MixedAction) -> int:
    return action.gv.base_genus


def is_semi_isogenous(action: MixedAction) -> bool:
    return not action.sigma


def minimality_verdict(action: MixedAction) -> MinimalityVerdict:
    q = irregularity(action)
    if q >= 3:
        return MinimalityVerdict("Minimal", f"q = {q} >= 3: every mixed surface with q >= 3 is minimal")
    return MinimalityVerdict(
        "Unknown", f"q = {q} < 3: non-minimal mixed surfaces exist with this irregularity"
    )
