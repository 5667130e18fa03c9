"""Finite groups on dense element indices 0..n-1 with a full Cayley table.

The identity is always element 0. Everything here is immutable once built.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    EmbeddingFailure,
    GroupMismatch,
    GroupTooLarge,
    IndexNotTwo,
    NotAbelian,
    NotAGroup,
    NotAPermutation,
    NotNormal,
)
from .smith import invariant_factors

DEFAULT_MAX_ORDER = 20000
SQUARE_MAX_ORDER = 2048
SUBGROUP_ENUM_LIMIT = 64
EXHAUSTIVE_ASSOC_LIMIT = 512
_ASSOC_SAMPLES = 200_000


class FiniteGroup:
    """A finite group given by its multiplication table.

    Use :func:`group_from_cayley` or one of the other constructors; the
    initializer trusts its input.
    """

    def __init__(self, table: np.ndarray, labels: Sequence | None = None, name: str = ""):
        table = np.array(table, dtype=np.int64)
        table.setflags(write=False)
        self.table = table
        self.order = int(table.shape[0])
        self._rows: list[list[int]] = table.tolist()
        self.identity = 0
        inv = [0] * self.order
        for i, row in enumerate(self._rows):
            inv[i] = row.index(0)
        self.inverse: tuple[int, ...] = tuple(inv)
        self.labels = tuple(labels) if labels is not None else None
        self.name = name

    def __repr__(self) -> str:
        name = f" {self.name}" if self.name else ""
        return f"<FiniteGroup{name} of order {self.order}>"

    def __len__(self) -> int:
        return self.order

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def prod(self, elements: Iterable[int]) -> int:
        x = 0
        rows = self._rows
        for e in elements:
            x = rows[x][e]
        return x

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        x = 0
        for _ in range(k):
            x = self._rows[x][a]
        return x

    def conj(self, g: int, x: int) -> int:
        """g x g^-1"""
        return self._rows[self._rows[g][x]][self.inverse[g]]

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a b a^-1 b^-1"""
        r = self._rows
        return r[r[r[a][b]][self.inverse[a]]][self.inverse[b]]

    def element_order(self, a: int) -> int:
        return self._element_orders[a]

    @cached_property
    def _element_orders(self) -> tuple[int, ...]:
        out = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = self._rows[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def whole(self) -> SubgroupRef:
        return SubgroupRef(self, range(self.order))

    def trivial(self) -> SubgroupRef:
        return SubgroupRef(self, [0])

    def subgroup(self, members: Iterable[int]) -> SubgroupRef:
        """Wrap ``members`` as a subgroup, checking closure."""
        H = SubgroupRef(self, members)
        if not H.is_closed():
            raise NotAGroup(f"{sorted(H.members)} is not a subgroup")
        return H

    def same_table(self, other: FiniteGroup) -> bool:
        return self.order == other.order and bool(np.array_equal(self.table, other.table))

    def label(self, a: int):
        return self.labels[a] if self.labels is not None else a


class SubgroupRef:
    """A subgroup of ``parent`` given by its sorted member list.

    Equality is equality of member sets inside the same parent object.
    """

    def __init__(self, parent: FiniteGroup, members: Iterable[int]):
        self.parent = parent
        self._set = frozenset(int(m) for m in members)
        self.members: tuple[int, ...] = tuple(sorted(self._set))

    def __repr__(self) -> str:
        return f"SubgroupRef(order={len(self.members)}, members={list(self.members)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubgroupRef):
            return NotImplemented
        return self.parent is other.parent and self._set == other._set

    def __hash__(self) -> int:
        return hash((id(self.parent), self._set))

    def __contains__(self, x: int) -> bool:
        return x in self._set

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def member_set(self) -> frozenset[int]:
        return self._set

    def index(self) -> int:
        return self.parent.order // self.order

    def issubset(self, other: SubgroupRef | Iterable[int]) -> bool:
        other_set = other.member_set if isinstance(other, SubgroupRef) else set(other)
        return self._set <= other_set

    def is_closed(self) -> bool:
        if 0 not in self._set:
            return False
        m = np.fromiter(self.members, dtype=np.int64)
        prods = self.parent.table[np.ix_(m, m)]
        return bool(np.isin(prods, m).all())

    def is_normal(self, ambient: Iterable[int] | None = None) -> bool:
        """Normal in the parent, or normalized by every element of ``ambient``."""
        G = self.parent
        conj_by = G.elements() if ambient is None else ambient
        s = self._set
        return all(G.conj(g, h) in s for g in conj_by for h in self.members)

    @cached_property
    def is_abelian(self) -> bool:
        G = self.parent
        ms = self.members
        return all(G.mul(a, b) == G.mul(b, a) for a, b in itertools.combinations(ms, 2))

    @cached_property
    def _as_group(self) -> tuple[FiniteGroup, GroupHom]:
        G = self.parent
        m = np.fromiter(self.members, dtype=np.int64)
        sub = G.table[np.ix_(m, m)]
        lookup = np.zeros(G.order, dtype=np.int64)
        lookup[m] = np.arange(len(m))
        local = lookup[sub]
        labels = [G.label(x) for x in self.members]
        H = FiniteGroup(local, labels=labels)
        incl = GroupHom(H, G, tuple(self.members))
        return H, incl

    def as_group(self) -> tuple[FiniteGroup, GroupHom]:
        """The subgroup as a standalone group, plus its inclusion into the parent.

        Local index i corresponds to ``members[i]``; identity stays at 0.
        """
        return self._as_group


@dataclass(frozen=True, eq=False)
class GroupHom:
    domain: FiniteGroup
    codomain: FiniteGroup
    image: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.image[a]

    def is_homomorphism(self) -> bool:
        img = np.asarray(self.image, dtype=np.int64)
        lhs = img[self.domain.table]
        rhs = self.codomain.table[np.ix_(img, img)]
        return bool(np.array_equal(lhs, rhs))

    def is_injective(self) -> bool:
        return len(set(self.image)) == len(self.image)

    def is_bijective(self) -> bool:
        return self.is_injective() and len(self.image) == self.codomain.order

    def kernel(self) -> SubgroupRef:
        return SubgroupRef(self.domain, [a for a, b in enumerate(self.image) if b == 0])

    def image_subgroup(self) -> SubgroupRef:
        return SubgroupRef(self.codomain, set(self.image))

    def apply(self, elements: Iterable[int]) -> set[int]:
        return {self.image[a] for a in elements}


# ---------------------------------------------------------------- construction


def _check_associative(T: np.ndarray) -> tuple[int, int, int] | None:
    """First (a, b, c) with (ab)c != a(bc), or None."""
    n = T.shape[0]
    if n <= EXHAUSTIVE_ASSOC_LIMIT:
        for a in range(n):
            lhs = T[T[a]]          # lhs[b, c] = (ab)c
            rhs = T[a][T]          # rhs[b, c] = a(bc)
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                b, c = bad[0]
                return a, int(b), int(c)
        return None
    rng = np.random.default_rng(0)
    a, b, c = rng.integers(0, n, size=(3, _ASSOC_SAMPLES))
    bad = np.flatnonzero(T[T[a, b], c] != T[a, T[b, c]])
    if len(bad):
        i = bad[0]
        return int(a[i]), int(b[i]), int(c[i])
    return None


def group_from_cayley(table, labels: Sequence | None = None, name: str = "") -> FiniteGroup:
    """Validate a multiplication table and return it as a normalized group.

    The identity is relabeled to index 0 (by swapping it with element 0);
    ``labels`` follow the same relabeling.
    """
    try:
        T = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise NotAGroup(f"table is not a rectangular integer array: {exc}") from None
    if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] == 0:
        raise NotAGroup(f"table must be a non-empty square array, got shape {T.shape}")
    n = T.shape[0]
    if T.min() < 0 or T.max() >= n:
        raise NotAGroup("table entries out of range")
    target = np.arange(n)
    for i in range(n):
        if not np.array_equal(np.sort(T[i]), target):
            raise NotAGroup(f"row {i} is not a permutation of 0..{n - 1}")
        if not np.array_equal(np.sort(T[:, i]), target):
            raise NotAGroup(f"column {i} is not a permutation of 0..{n - 1}")
    ids = [e for e in range(n) if np.array_equal(T[e], target) and np.array_equal(T[:, e], target)]
    if not ids:
        raise NotAGroup("no two-sided identity element")
    e = ids[0]
    if e != 0:
        perm = np.arange(n)
        perm[[0, e]] = perm[[e, 0]]  # old -> new (an involution)
        T = perm[T[np.ix_(perm, perm)]]
        if labels is not None:
            labels = list(labels)
            labels[0], labels[e] = labels[e], labels[0]
    # a Latin square with identity has inverses; associativity is what is left
    bad = _check_associative(T)
    if bad is not None:
        a, b, c = bad
        raise NotAGroup(f"associativity fails at ({a}, {b}, {c})")
    return FiniteGroup(T, labels=labels, name=name)


def _perm_from_images(images, degree: int) -> tuple[int, ...]:
    p = tuple(int(x) for x in images)
    if len(p) != degree or sorted(p) != list(range(1, degree + 1)):
        raise NotAPermutation(f"{list(images)} is not a permutation of 1..{degree}")
    return tuple(x - 1 for x in p)


def cycles_to_images(degree: int, cycles: Sequence[Sequence[int]]) -> list[int]:
    """Convert cycle notation on 1..degree to a one-line image list."""
    img = list(range(1, degree + 1))
    seen: set[int] = set()
    for cyc in cycles:
        for x in cyc:
            if not 1 <= x <= degree or x in seen:
                raise NotAPermutation(f"bad cycle {list(cyc)} on 1..{degree}")
            seen.add(x)
        for i, x in enumerate(cyc):
            img[x - 1] = cyc[(i + 1) % len(cyc)]
    return img


def group_from_permutations(
    degree: int,
    generators: Sequence[Sequence[int]],
    max_order: int = DEFAULT_MAX_ORDER,
    name: str = "",
) -> FiniteGroup:
    """Permutation group generated by one-line image lists on ``1..degree``.

    Products compose right to left: ``(a*b)(x) = a(b(x))``. ``labels`` holds
    each element's image list (1-based); element 0 is the identity.
    """
    if degree < 1:
        raise NotAPermutation("degree must be positive")
    gens = [np.array(_perm_from_images(g, degree), dtype=np.int64) for g in generators]
    ident = np.arange(degree, dtype=np.int64)
    elems = [ident]
    index = {ident.tobytes(): 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x[g]  # x after g
            key = y.tobytes()
            if key not in index:
                if len(elems) >= max_order:
                    raise GroupTooLarge(f"closure exceeds {max_order} elements")
                index[key] = len(elems)
                elems.append(y)
                queue.append(y)
    P = np.stack(elems)
    n = len(elems)
    T = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        comp = P[a][P]  # row b: a∘b
        T[a] = [index[row.tobytes()] for row in comp]
    labels = [tuple(int(v) + 1 for v in p) for p in elems]
    return FiniteGroup(T, labels=labels, name=name)


def cyclic_group(n: int) -> FiniteGroup:
    a = np.arange(n)
    return FiniteGroup((a[:, None] + a[None, :]) % n, name=f"Z{n}")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Element (g, h) has index g*|H| + h."""
    m = H.order
    g = np.repeat(np.arange(G.order), m)
    h = np.tile(np.arange(m), G.order)
    T = G.table[np.ix_(g, g)] * m + H.table[np.ix_(h, h)]
    labels = [(G.label(int(x)), H.label(int(y))) for x, y in zip(g, h)]
    return FiniteGroup(T, labels=labels, name=f"{G.name}x{H.name}" if G.name and H.name else "")


def abelian_group(factors: Sequence[int]) -> FiniteGroup:
    G = cyclic_group(1)
    for f in factors:
        G = direct_product(G, cyclic_group(f))
    G.name = "x".join(f"Z{f}" for f in factors) or "1"
    return G


def generalized_dihedral(A: FiniteGroup) -> FiniteGroup:
    """A ⋊ Z/2 with the involution acting by inversion.

    Element (a, e) has index e*|A| + a, so A sits on indices 0..|A|-1 and
    (0, 1) = |A| is the involution t. Requires A abelian.
    """
    if not A.is_abelian:
        raise NotAbelian("generalized dihedral group needs an abelian base")
    n = A.order
    idx = np.arange(2 * n)
    a, e = idx % n, idx // n
    inv = np.asarray(A.inverse)
    # (a, e1)(b, e2) = (a * t^e1 b t^-e1, e1 + e2)
    b2 = np.where(e[:, None] == 1, inv[a][None, :], a[None, :])
    T = ((e[:, None] + e[None, :]) % 2) * n + A.table[a[:, None], b2]
    return FiniteGroup(T, name=f"D({A.name})" if A.name else "")


# ---------------------------------------------------------------- subgroups


def subgroup_generated(G: FiniteGroup, S: Iterable[int]) -> SubgroupRef:
    gens = sorted({int(s) for s in S} - {0})
    seen = {0}
    frontier = [0]
    rows = G._rows
    while frontier:
        nxt = []
        for x in frontier:
            row = rows[x]
            for s in gens:
                y = row[s]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return SubgroupRef(G, seen)


def normal_closure(G: FiniteGroup, S: Iterable[int]) -> SubgroupRef:
    """Smallest normal subgroup of G containing S."""
    H = subgroup_generated(G, S)
    while True:
        extra = {G.conj(g, h) for g in G.elements() for h in H.members} - H.member_set
        if not extra:
            return H
        H = subgroup_generated(G, H.member_set | extra)


def commutator_subgroup(G: FiniteGroup, H: SubgroupRef | None = None) -> SubgroupRef:
    ms = H.members if H is not None else tuple(G.elements())
    return subgroup_generated(G, {G.commutator(a, b) for a in ms for b in ms})


def center(G: FiniteGroup) -> SubgroupRef:
    T = G.table
    return SubgroupRef(G, [int(z) for z in range(G.order) if np.array_equal(T[z], T[:, z])])


def all_subgroups(G: FiniteGroup, limit: int = SUBGROUP_ENUM_LIMIT) -> list[SubgroupRef]:
    """Every subgroup of G, sorted by (order, members).

    Breadth-first closure: each subgroup is reached from a smaller one by
    adjoining a cyclic-subgroup representative.
    """
    if G.order > limit:
        raise GroupTooLarge(f"subgroup enumeration capped at order {limit}")
    cyclic: dict[frozenset[int], int] = {}
    for x in G.elements():
        C = subgroup_generated(G, [x]).member_set
        cyclic.setdefault(C, x)
    reps = sorted(cyclic.items(), key=lambda kv: kv[1])
    found = {frozenset([0]): G.trivial()}
    frontier = [G.trivial()]
    while frontier:
        nxt = []
        for H in frontier:
            for C, x in reps:
                if C <= H.member_set:
                    continue
                K = subgroup_generated(G, H.member_set | {x})
                if K.member_set not in found:
                    found[K.member_set] = K
                    nxt.append(K)
        frontier = nxt
    return sorted(found.values(), key=lambda H: (H.order, H.members))


# ---------------------------------------------------------------- quotients


def quotient_group(G: FiniteGroup, N: SubgroupRef) -> tuple[FiniteGroup, GroupHom]:
    """G/N on cosets ordered by their least element, with the projection."""
    if N.parent is not G:
        raise NotNormal("subgroup belongs to a different group")
    if not N.is_normal():
        raise NotNormal(f"{list(N.members)} is not normal")
    coset_of = [-1] * G.order
    reps: list[int] = []
    for g in G.elements():
        if coset_of[g] == -1:
            k = len(reps)
            reps.append(g)
            for n in N.members:
                coset_of[G.mul(g, n)] = k
    m = len(reps)
    T = [[coset_of[G.mul(reps[i], reps[j])] for j in range(m)] for i in range(m)]
    Q = FiniteGroup(T, labels=[G.label(r) for r in reps])
    return Q, GroupHom(G, Q, tuple(coset_of))


def _generating_set(G: FiniteGroup) -> list[int]:
    """Greedy generating set, largest element orders first."""
    gens: list[int] = []
    H = G.trivial()
    for x in sorted(G.elements(), key=lambda a: (-G.element_order(a), a)):
        if H.order == G.order:
            break
        if x not in H:
            gens.append(x)
            H = subgroup_generated(G, H.member_set | {x})
    return gens


def abelian_invariants(A: FiniteGroup | SubgroupRef) -> list[int]:
    """Invariant factors f1 | f2 | ... of a finite abelian group (each > 1)."""
    if isinstance(A, SubgroupRef):
        A = A.as_group()[0]
    if not A.is_abelian:
        raise NotAbelian("abelian_invariants needs an abelian group")
    gens = _generating_set(A)
    k = len(gens)
    if k == 0:
        return []
    # relation lattice of Z^k -> A from a spanning tree of the Cayley graph
    coords: dict[int, tuple[int, ...]] = {0: (0,) * k}
    queue = deque([0])
    relations: list[list[int]] = []
    while queue:
        x = queue.popleft()
        v = coords[x]
        for i, g in enumerate(gens):
            y = A.mul(x, g)
            w = list(v)
            w[i] += 1
            if y not in coords:
                coords[y] = tuple(w)
                queue.append(y)
            else:
                rel = [a - b for a, b in zip(w, coords[y])]
                if any(rel):
                    relations.append(rel)
    factors = invariant_factors(relations, k)
    prod = 1
    for f in factors:
        prod *= f
    assert prod == A.order, (factors, A.order)
    return factors


def is_generalized_dihedral(G: FiniteGroup, A: SubgroupRef) -> bool:
    """True iff A is abelian and an involution outside A inverts it by conjugation.

    Every outer element of such a G squares to the same element, so checking
    one representative suffices.
    """
    if A.parent is not G or 2 * A.order != G.order or not A.is_closed():
        raise IndexNotTwo(f"subgroup of order {A.order} does not have index 2 in order {G.order}")
    if not A.is_abelian:
        return False
    t = next(g for g in G.elements() if g not in A)
    if G.mul(t, t) != 0:
        return False
    return all(G.conj(t, a) == G.inv(a) for a in A.members)


# ---------------------------------------------------------------- isomorphism


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> GroupHom | None:
    """Brute-force isomorphism search; intended for orders up to about 16."""
    if G.order != H.order:
        return None
    if sorted(G._element_orders) != sorted(H._element_orders):
        return None
    gens = _generating_set(G)
    cands = [[h for h in H.elements() if H.element_order(h) == G.element_order(g)] for g in gens]

    def extend(images: Sequence[int]) -> list[int] | None:
        f = [-1] * G.order
        f[0] = 0
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g, h in zip(gens, images):
                y, z = G.mul(x, g), H.mul(f[x], h)
                if f[y] == -1:
                    f[y] = z
                    queue.append(y)
                elif f[y] != z:
                    return None
        return f if len(set(f)) == G.order else None

    for images in itertools.product(*cands):
        f = extend(images)
        if f is not None:
            return GroupHom(G, H, tuple(f))
    return None


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None


# ---------------------------------------------------------------- G0(2)


@dataclass(frozen=True, eq=False)
class SquareExtension:
    """(G0 x G0) ⋊ <σ> with σ swapping the coordinates.

    (a, b; 0) is the pair (a, b); (a, b; 1) is (a, b)∘σ. Index of
    (a, b; e) is e*n^2 + a*n + b with n = |G0|.
    """

    base: FiniteGroup
    group: FiniteGroup

    def encode(self, a: int, b: int, e: int) -> int:
        n = self.base.order
        return e * n * n + a * n + b

    def decode(self, x: int) -> tuple[int, int, int]:
        n = self.base.order
        e, r = divmod(x, n * n)
        a, b = divmod(r, n)
        return a, b, e

    @property
    def sigma(self) -> int:
        return self.encode(0, 0, 1)

    def left_factor(self) -> SubgroupRef:
        """G0 x {1} as a subgroup."""
        return SubgroupRef(self.group, [self.encode(a, 0, 0) for a in self.base.elements()])


def build_square_extension(G0: FiniteGroup, max_order: int = SQUARE_MAX_ORDER) -> SquareExtension:
    n = G0.order
    N = 2 * n * n
    if N > max_order:
        raise GroupTooLarge(f"square extension of order {N} exceeds cap {max_order}")
    idx = np.arange(N)
    e, r = np.divmod(idx, n * n)
    a, b = np.divmod(r, n)
    E1, E2 = e[:, None], e[None, :]
    C, D = a[None, :], b[None, :]
    # (a,b;1)(c,d;·) pulls σ through, swapping (c,d)
    C2 = np.where(E1 == 1, D, C)
    D2 = np.where(E1 == 1, C, D)
    T = ((E1 + E2) % 2) * n * n + G0.table[a[:, None], C2] * n + G0.table[b[:, None], D2]
    labels = [(int(x), int(y), int(z)) for x, y, z in zip(a, b, e)]
    grp = group_from_cayley(T, labels=labels, name=f"{G0.name}(2)" if G0.name else "")
    return SquareExtension(G0, grp)


def embed_mixed(sq: SquareExtension, action) -> GroupHom:
    """Embed G into G0(2): g -> (g, φ(g); 0), τ'g -> σ∘(τg, φ(g)) = (φ(g), τg; 1)."""
    if not sq.base.same_table(action.g0):
        raise GroupMismatch("square extension was built from a different G0")
    G = action.G
    img = [0] * G.order
    t_inv = G.inv(action.tau_prime)
    phi, tau = action.phi, action.tau_local
    H = action.g0
    for g in G.elements():
        if g in action.G0:
            x = action.to_local(g)
            img[g] = sq.encode(x, phi(x), 0)
        else:
            h = action.to_local(G.mul(t_inv, g))
            img[g] = sq.encode(phi(h), H.mul(tau, h), 1)
    hom = GroupHom(G, sq.group, tuple(img))
    if not (hom.is_injective() and hom.is_homomorphism()):
        raise EmbeddingFailure("mixed embedding is not an injective homomorphism")
    return hom


__all__ = [
    "FiniteGroup",
    "SubgroupRef",
    "GroupHom",
    "SquareExtension",
    "group_from_cayley",
    "group_from_permutations",
    "cycles_to_images",
    "cyclic_group",
    "direct_product",
    "abelian_group",
    "generalized_dihedral",
    "subgroup_generated",
    "normal_closure",
    "commutator_subgroup",
    "center",
    "all_subgroups",
    "quotient_group",
    "abelian_invariants",
    "is_generalized_dihedral",
    "find_isomorphism",
    "is_isomorphic",
    "build_square_extension",
    "embed_mixed",
]
