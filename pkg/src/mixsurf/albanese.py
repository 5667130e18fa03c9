"""The canonical Albanese kernel K and the resulting Albanese description."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cover import MixedAction, irregularity, is_semi_isogenous
from .errors import ChainTooLong, TheoremViolation
from .groups import (
    FiniteGroup,
    SubgroupRef,
    abelian_invariants,
    commutator_subgroup,
    is_generalized_dihedral,
    normal_closure,
    quotient_group,
)


def _generators_of_K(action: MixedAction) -> set[int]:
    """Σ ∪ [G0,G0] ∪ {g^2 : g ∉ G0}, in G's indices."""
    G = action.G
    gens = action.parent_set(action.sigma)
    gens |= set(commutator_subgroup(G, action.G0).members)
    gens |= {G.mul(g, g) for g in action.outer()}
    return gens


def canonical_kernel(action: MixedAction) -> SubgroupRef:
    """Smallest subgroup of G0 normal in G containing Σ, [G0,G0] and all
    squares of elements outside G0. Returned as a subgroup of ``action.g0``."""
    gens = _generators_of_K(action)
    K = normal_closure(action.G, gens)
    if not K.issubset(action.G0):
        raise TheoremViolation("canonical kernel escaped G0")
    # fixed point: re-closing K together with its generators returns K
    if normal_closure(action.G, K.member_set | gens) != K:
        raise TheoremViolation("canonical kernel is not closed")
    return action.local_subgroup(K.members)


def polarization_type(invariant_factors: Sequence[int], q: int) -> list[int]:
    """(1, f2/f1, ..., fq/f(q-1)) for the chain f1 | ... | fq left-padded with 1s."""
    chain = [int(f) for f in invariant_factors]
    if len(chain) > q:
        raise ChainTooLong(f"G0/K needs {len(chain)} cyclic factors but q = {q}")
    f = [1] * (q - len(chain)) + chain
    return [1] + [f[i] // f[i - 1] for i in range(1, q)]


@dataclass(frozen=True, eq=False)
class AlbaneseReport:
    """Albanese data; degree/polarization fields are None when q = 0."""

    K: SubgroupRef
    albanese_degree: int | None
    kernel_invariants: list[int]
    polarization_type: list[int] | None
    target_genus: int | None
    target_group: FiniteGroup
    dihedral_ok: bool
    max_albanese_dimension: bool
    fibres_rational_flag: bool
    warnings: list[str] = field(default_factory=list)


def albanese_report(action: MixedAction) -> AlbaneseReport:
    q = irregularity(action)
    K = canonical_kernel(action)
    H = action.g0
    quotient_0, _ = quotient_group(H, K)
    invariants = abelian_invariants(quotient_0)

    Q, proj = quotient_group(action.G, SubgroupRef(action.G, action.parent_set(K.members)))
    Q0 = SubgroupRef(Q, proj.apply(action.G0.members))
    dihedral = is_generalized_dihedral(Q, Q0) and not (action.sigma - K.member_set)
    if not dihedral:
        raise TheoremViolation("G/K is not the generalized dihedral group of a free G0/K")
    if not all(H.mul(g, action.phi(g)) in K for g in H.elements()):
        raise TheoremViolation("class of tau' does not invert G0/K")

    if is_semi_isogenous(action):
        from .ramification import ramification_report

        if ramification_report(action, K).rho_K_ramification:
            raise TheoremViolation("rho_K ramifies at the canonical kernel")

    warnings: list[str] = []
    if q == 0:
        degree = None
        polarization = None
        warnings.append("q = 0: Albanese variety is trivial; degree not applicable")
    else:
        degree = K.order
        try:
            polarization = polarization_type(invariants, q)
        except ChainTooLong as exc:
            polarization = None
            warnings.append(f"ChainTooLong: {exc}")

    return AlbaneseReport(
        K=K,
        albanese_degree=degree,
        kernel_invariants=invariants,
        polarization_type=polarization,
        target_genus=(H.order // K.order) * (q - 1) + 1 if q else None,
        target_group=quotient_0,
        dihedral_ok=dihedral,
        max_albanese_dimension=q >= 2,
        fibres_rational_flag=q == 1,
        warnings=warnings,
    )
