"""Further quotients: G-normal subgroups K of G0 and the groups G_K in G0(2)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .cover import MixedAction
from .errors import GroupTooLarge, KernelNotAdmissible, TheoremViolation
from .groups import (
    FiniteGroup,
    SquareExtension,
    SubgroupRef,
    all_subgroups,
    build_square_extension,
    commutator_subgroup,
    embed_mixed,
    find_isomorphism,
    is_generalized_dihedral,
    quotient_group,
)

AUDIT_DEFAULT_LIMIT = 8
AUDIT_HARD_LIMIT = 16


@dataclass(frozen=True, eq=False)
class MinimalRealization:
    quotient: FiniteGroup          # G/K
    quotient_g0: SubgroupRef       # G0/K inside G/K
    genus: int | None              # g(C/K); None when not computed


@dataclass(frozen=True, eq=False)
class FurtherQuotient:
    K: SubgroupRef                 # subgroup of action.g0 (local indices)
    GK: SubgroupRef                # subgroup of sq.group
    normal_in_square: bool
    is_dihedral_target: bool
    minimal_realization: MinimalRealization
    pi_degree: int


def is_admissible(action: MixedAction, K: SubgroupRef) -> bool:
    """K is a subgroup of G0 normal in G (normal in G0 and phi-stable)."""
    if K.parent is not action.g0 or not K.is_closed():
        return False
    return K.is_normal() and action.phi.apply(K.members) == set(K.members)


def admissible_kernels(action: MixedAction) -> list[SubgroupRef]:
    """All subgroups of G0 normal in G, sorted by (order, members)."""
    return [K for K in all_subgroups(action.g0) if is_admissible(action, K)]


def kernel_in_G(action: MixedAction, K: SubgroupRef) -> SubgroupRef:
    return SubgroupRef(action.G, action.parent_set(K.members))


def build_GK(action: MixedAction, sq: SquareExtension, K: SubgroupRef) -> FurtherQuotient:
    """G_K = G0_K ∪ τ'G0_K with G0_K = {(g, h) : h φ(g)^-1 ∈ K}."""
    if not is_admissible(action, K):
        raise KernelNotAdmissible(f"{list(K.members)} is not a subgroup of G0 normal in G")
    H, phi = action.g0, action.phi
    Kset = K.member_set
    g0k = [
        sq.encode(g, h, 0)
        for g in H.elements()
        for h in H.elements()
        if H.mul(h, H.inv(phi(g))) in Kset
    ]
    t = sq.encode(0, action.tau_local, 1)  # image of τ'
    S = sq.group
    GK = SubgroupRef(S, g0k + [S.mul(t, x) for x in g0k])

    if GK.order != K.order * action.G.order or not GK.is_closed():
        raise TheoremViolation("G_K is not a subgroup of order |K||G|")
    left = {sq.encode(a, 0, 0) for a in H.elements()}
    if GK.member_set & left != {sq.encode(k, 0, 0) for k in K.members}:
        raise TheoremViolation("G_K ∩ (G0 x 1) differs from K x 1")
    if not embed_mixed(sq, action).apply(action.G.elements()) <= GK.member_set:
        raise TheoremViolation("G_K does not contain G")

    real = minimal_realization(action, K)
    return FurtherQuotient(
        K=K,
        GK=GK,
        normal_in_square=_criterion(action, K),
        is_dihedral_target=is_generalized_dihedral(real.quotient, real.quotient_g0),
        minimal_realization=real,
        pi_degree=K.order,
    )


def _criterion(action: MixedAction, K: SubgroupRef) -> bool:
    H, phi = action.g0, action.phi
    if not commutator_subgroup(H, H.whole()).issubset(K):
        return False
    return all(H.mul(g, phi(g)) in K for g in H.elements())


def gk_directly_normal(sq: SquareExtension, fq: FurtherQuotient) -> bool:
    return fq.GK.is_normal()


def is_GK_normal(action: MixedAction, fq: FurtherQuotient) -> bool:
    """[G0,G0] ⊆ K and g·φ(g) ∈ K for all g ∈ G0."""
    ok = _criterion(action, fq.K)
    if __debug__ and action.g0.order <= AUDIT_HARD_LIMIT:
        assert ok == fq.GK.is_normal(), "normality criterion disagrees with direct check"
    return ok


def _image(Q: FiniteGroup, proj, members) -> SubgroupRef:
    return SubgroupRef(Q, proj.apply(members))


def minimal_realization(action: MixedAction, fq_or_K) -> MinimalRealization:
    """(G/K, G0/K, g(C/K)) with the genus computed only when C -> C/K is unramified
    or C/K -> C/G0 is unramified."""
    K = fq_or_K.K if isinstance(fq_or_K, FurtherQuotient) else fq_or_K
    Q, proj = quotient_group(action.G, kernel_in_G(action, K))
    Q0 = _image(Q, proj, action.G0.members)
    g, gp = action.genus_C, action.gv.base_genus
    if not action.sigma:
        genus = (g - 1) // K.order + 1
    elif action.sigma <= K.member_set:
        genus = (action.g0.order // K.order) * (gp - 1) + 1
    else:
        genus = None
    return MinimalRealization(Q, Q0, genus)


def overgroups_by_cosets(sq: SquareExtension, G_image: SubgroupRef) -> list[SubgroupRef]:
    """All subgroups of sq.group containing G_image, found as unions of left cosets."""
    S = sq.group
    cosets: list[np.ndarray] = []
    seen: set[int] = set()
    gm = np.fromiter(G_image.members, dtype=np.int64)
    for x in S.elements():
        if x not in seen:
            c = S.table[x][gm]
            seen.update(c.tolist())
            cosets.append(c)
    base, rest = cosets[0], cosets[1:]
    out = []
    for mask in itertools.product((False, True), repeat=len(rest)):
        m = np.concatenate([base] + [c for c, keep in zip(rest, mask) if keep])
        if np.isin(S.table[np.ix_(m, m)], m).all():
            out.append(SubgroupRef(S, m.tolist()))
    return out


def audit_bijection(action: MixedAction, sq: SquareExtension, lattice: list[FurtherQuotient]) -> int:
    """Check K -> G_K is a bijection onto the overgroups of G; return their count."""
    emb = embed_mixed(sq, action)
    over = overgroups_by_cosets(sq, emb.image_subgroup())
    built = {fq.GK for fq in lattice}
    if len(over) != len(lattice) or set(over) != built:
        raise TheoremViolation(
            f"{len(over)} overgroups of G in G0(2) but {len(lattice)} admissible kernels"
        )
    return len(over)


def quotient_lattice(
    action: MixedAction,
    sq: SquareExtension | None = None,
    audit: bool | None = None,
) -> list[FurtherQuotient]:
    """One FurtherQuotient per admissible kernel; optionally audit bijectivity.

    ``audit=None`` means on for |G0| <= 8.
    """
    if audit is None:
        audit = action.g0.order <= AUDIT_DEFAULT_LIMIT
    if audit and action.g0.order > AUDIT_HARD_LIMIT:
        raise GroupTooLarge(f"bijection audit is exponential; |G0| <= {AUDIT_HARD_LIMIT} only")
    if sq is None:
        sq = build_square_extension(action.g0)
    lattice = [build_GK(action, sq, K) for K in admissible_kernels(action)]
    if audit:
        audit_bijection(action, sq, lattice)
    return lattice


def kxk_quotient_matches(action: MixedAction, sq: SquareExtension, fq: FurtherQuotient) -> bool:
    """K x K is normal in G_K and G_K/(K x K) ≅ G/K."""
    KK = [sq.encode(a, b, 0) for a in fq.K.members for b in fq.K.members]
    GKgrp, incl = fq.GK.as_group()
    pos = {x: i for i, x in enumerate(fq.GK.members)}
    if not all(x in pos for x in KK):
        return False
    N = SubgroupRef(GKgrp, [pos[x] for x in KK])
    if not N.is_normal():
        return False
    Q1, _ = quotient_group(GKgrp, N)
    return find_isomorphism(Q1, fq.minimal_realization.quotient) is not None
