"""Built-in families of semi-isogenous mixed surfaces with p_g = q = 2, plus one
dihedral family with q = 3, each with the values its report must reproduce.

Permutations are one-line image lists; words index the generator list
(1-based). The generating vectors are free (no elliptic part) and are one
valid choice each; the checked invariants depend only on the groups.
"""

from __future__ import annotations

import copy
from functools import lru_cache

from .groups import (
    FiniteGroup,
    abelian_group,
    cyclic_group,
    direct_product,
    generalized_dihedral,
    group_from_permutations,
)

# quaternion units i, j and the scalar i acting on {i^k e1} ∪ {i^k e2}
_Q_I = [2, 3, 4, 1, 8, 5, 6, 7]
_Q_J = [7, 8, 5, 6, 1, 2, 3, 4]
_SCALAR_I = [2, 3, 4, 1, 6, 7, 8, 5]

FAMILIES: dict[str, dict] = {
    "k2_7": {
        "config": {
            "name": "k2_7",
            "group": {"degree": 6, "generators": [[2, 3, 4, 5, 6, 1]]},
            "g0": [[1, 1]],
            "tau_prime": [1],
            "base_genus": 2,
            "hyperbolic": [[[1, 1], []], [[], []]],
            "elliptic": [],
        },
        "expected": {
            "G": "Z6",
            "G0": "Z3",
            "genus_C": 4,
            "q": 2,
            "minimality": "Unknown",
            "K_order": 3,
            "K_is": "G0",
            "albanese_degree": 3,
            "kernel_invariants": [],
            "polarization": [1, 1],
            "o2": 1,
            "ksq": 7,
        },
        "geometry": "Albanese map: triple cover of J(C/G0) simply branched on the image of the diagonal",
    },
    "k2_6_dihedral": {
        "config": {
            "name": "k2_6_dihedral",
            "group": {"degree": 4, "generators": [[2, 3, 4, 1], [3, 2, 1, 4]]},
            "g0": [[1, 1], [2]],
            "tau_prime": [1],
            "base_genus": 2,
            "hyperbolic": [[[2], [1, 1, 2]], [[], []]],
            "elliptic": [],
        },
        "expected": {
            "G": "D4",
            "G0": "Z2xZ2",
            "genus_C": 5,
            "q": 2,
            "minimality": "Unknown",
            "K_order": 2,
            "K_is": "center_G",
            "albanese_degree": 2,
            "kernel_invariants": [2],
            "polarization": [1, 2],
            "o2": 2,
            "ksq": 6,
        },
        "geometry": "Albanese map: double cover of a (1,2)-polarized abelian surface branched on a curve Delta'",
    },
    "k2_6_cyclic": {
        "config": {
            "name": "k2_6_cyclic",
            "group": {"degree": 6, "generators": [[2, 1, 3, 4, 5, 6], [1, 2, 4, 5, 6, 3]]},
            "g0": [[2]],
            "tau_prime": [1],
            "base_genus": 2,
            "hyperbolic": [[[2], []], [[], []]],
            "elliptic": [],
        },
        "expected": {
            "G": "Z2xZ4",
            "G0": "Z4",
            "genus_C": 5,
            "q": 2,
            "minimality": "Unknown",
            "K_order": 2,
            "K_is": "unique_order2_of_G0",
            "albanese_degree": 2,
            "kernel_invariants": [2],
            "polarization": [1, 2],
            "o2": 2,
            "ksq": 6,
        },
        "geometry": "Albanese map: double cover of a (1,2)-polarized abelian surface branched on a curve Delta'",
    },
    "k2_4": {
        "config": {
            "name": "k2_4",
            "group": {"degree": 6, "generators": [[2, 3, 4, 5, 6, 1], [1, 6, 5, 4, 3, 2]]},
            "g0": [[1, 1], [2]],
            "tau_prime": [1],
            "base_genus": 2,
            "hyperbolic": [[[1, 1], []], [[2], []]],
            "elliptic": [],
        },
        "expected": {
            "G": "D6",
            "G0": "S3",
            "genus_C": 7,
            "q": 2,
            "minimality": "Unknown",
            "K_order": 3,
            "K_is": "commutator_G0",
            "albanese_degree": 3,
            "kernel_invariants": [2],
            "polarization": [1, 2],
            "o2": 4,
            "ksq": 4,
        },
        "geometry": "X is not minimal (minimal model has K^2 = 5); Albanese map of degree 3 onto a (1,2)-polarized abelian surface",
    },
    "k2_2_dihedral": {
        "config": {
            "name": "k2_2_dihedral",
            "group": {
                "degree": 6,
                "generators": [[2, 3, 4, 1, 5, 6], [3, 2, 1, 4, 5, 6], [1, 2, 3, 4, 6, 5]],
            },
            "g0": [[1], [2]],
            "tau_prime": [3],
            "base_genus": 2,
            "hyperbolic": [[[1], []], [[2], []]],
            "elliptic": [],
        },
        "expected": {
            "G": "D4xZ2",
            "G0": "D4",
            "genus_C": 9,
            "q": 2,
            "minimality": "Unknown",
            "K_order": 2,
            "K_is": "center_G0",
            "albanese_degree": 2,
            "kernel_invariants": [2, 2],
            "polarization": [1, 1],
            "o2": 6,
            "ksq": 2,
        },
        "geometry": "X is not minimal (minimal model has K^2 = 4); Albanese map: double cover of a principally polarized abelian surface",
    },
    "k2_2_quaternion": {
        "config": {
            "name": "k2_2_quaternion",
            "group": {"degree": 8, "generators": [_Q_I, _Q_J, _SCALAR_I]},
            "g0": [[1], [2]],
            "tau_prime": [3],
            "base_genus": 2,
            "hyperbolic": [[[1], []], [[2], []]],
            "elliptic": [],
        },
        "expected": {
            "G": "Q8oZ4",
            "G0": "Q8",
            "genus_C": 9,
            "q": 2,
            "minimality": "Unknown",
            "K_order": 2,
            "K_is": "center_G0",
            "albanese_degree": 2,
            "kernel_invariants": [2, 2],
            "polarization": [1, 1],
            "o2": 6,
            "ksq": 2,
        },
        "geometry": "X is not minimal (minimal model has K^2 = 4); Albanese map: double cover of a principally polarized abelian surface",
    },
    "fabfrank": {
        "config": {
            "name": "fabfrank",
            "group": {"degree": 4, "generators": [[2, 1, 3, 4], [1, 2, 4, 3]]},
            "g0": [[1]],
            "tau_prime": [2],
            "base_genus": 3,
            "hyperbolic": [[[1], []], [[], []], [[], []]],
            "elliptic": [],
        },
        "expected": {
            "G": "Z2xZ2",
            "G0": "Z2",
            "genus_C": 5,
            "q": 3,
            "minimality": "Minimal",
            "K_order": 1,
            "K_is": "trivial",
            "albanese_degree": 1,
            "kernel_invariants": [2],
            "polarization": [1, 1, 2],
            "o2": 2,
            "ksq": 12,
            "dihedral_invariants": {"chi": 2, "ksq": 12, "q": 3},
        },
        "geometry": "Albanese map generically injective into an abelian threefold with polarization (1,1,2)",
    },
}


@lru_cache(maxsize=None)
def model_group(name: str) -> FiniteGroup:
    """Reference groups used to identify G and G0 up to isomorphism."""
    if name.startswith("Z") and name[1:].isdigit():
        return cyclic_group(int(name[1:]))
    builders = {
        "Z2xZ2": lambda: abelian_group([2, 2]),
        "Z2xZ4": lambda: abelian_group([2, 4]),
        "S3": lambda: generalized_dihedral(cyclic_group(3)),
        "D4": lambda: generalized_dihedral(cyclic_group(4)),
        "D6": lambda: generalized_dihedral(cyclic_group(6)),
        "D4xZ2": lambda: direct_product(generalized_dihedral(cyclic_group(4)), cyclic_group(2)),
        "Q8": lambda: group_from_permutations(8, [_Q_I, _Q_J]),
        "Q8oZ4": lambda: group_from_permutations(8, [_Q_I, _Q_J, _SCALAR_I]),
    }
    return builders[name]()


def family_names() -> list[str]:
    return sorted(FAMILIES)


def family_config(name: str) -> dict:
    from .errors import FamilyUnknown

    if name not in FAMILIES:
        raise FamilyUnknown(f"unknown family {name!r}; known: {', '.join(family_names())}")
    return copy.deepcopy(FAMILIES[name]["config"])
