"""JSON configuration for a mixed action.

Schema::

    {
      "name": str,                                   # optional
      "group": {"degree": int, "generators": [[int, ...], ...]}
             | {"cayley": [[int, ...], ...], "generators": [int, ...]},
      "g0": [word, ...],
      "tau_prime": word,
      "base_genus": int,
      "hyperbolic": [[word, word], ...],
      "elliptic": [word, ...],
      "elliptic_orders": [int, ...]                  # optional
    }

A word is a list of signed 1-based indices into the group's generator list
(negative means inverse); the empty word is the identity. Permutation
generators are one-line image lists on 1..degree. For a Cayley table the
generator list defaults to all elements in table order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any

from .cover import MixedAction, make_generating_vector, make_mixed_action
from .errors import InputError, ParseError, SchemaError, WordOutOfRange
from .groups import FiniteGroup, group_from_cayley, group_from_permutations, subgroup_generated

Word = list[int]


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _check_word(word: Any, where: str) -> Word:
    if not isinstance(word, list) or not all(_is_int(x) for x in word):
        raise SchemaError(f"{where}: a word must be a list of integers")
    if any(x == 0 for x in word):
        raise WordOutOfRange(f"{where}: generator index 0 is not allowed (indices are 1-based)")
    return list(word)


@dataclass
class AnalysisConfig:
    group: dict
    g0: list[Word]
    tau_prime: Word
    base_genus: int | None
    hyperbolic: list[list[Word]] | None
    elliptic: list[Word] | None
    elliptic_orders: list[int] | None = None
    name: str = ""
    source: dict = field(default_factory=dict, repr=False)

    @cached_property
    def _built(self) -> tuple[FiniteGroup, list[int]]:
        spec = self.group
        try:
            if "cayley" in spec:
                n = len(spec["cayley"])
                # labels record the original table index across identity normalization
                G = group_from_cayley(spec["cayley"], labels=range(n), name=self.name)
                gens = spec.get("generators", list(range(n)))
                if not all(_is_int(g) and 0 <= g < n for g in gens):
                    raise SchemaError("group.generators must be element indices of the table")
                gens = [G.labels.index(g) for g in gens]
            else:
                G = group_from_permutations(spec["degree"], spec["generators"], name=self.name)
                gens = [
                    G.labels.index(tuple(int(v) for v in p)) for p in spec["generators"]
                ]
        except InputError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"group: {exc}") from None
        return G, gens

    @property
    def G(self) -> FiniteGroup:
        return self._built[0]

    @property
    def generators(self) -> list[int]:
        return self._built[1]

    def evaluate(self, word: Word, where: str = "word") -> int:
        G, gens = self._built
        x = 0
        for i in word:
            if not 1 <= abs(i) <= len(gens):
                raise WordOutOfRange(f"{where}: index {i} outside 1..{len(gens)}")
            g = gens[abs(i) - 1]
            x = G.mul(x, g if i > 0 else G.inv(g))
        return x

    @cached_property
    def g0_members(self) -> list[int]:
        gens = [self.evaluate(w, f"g0[{i}]") for i, w in enumerate(self.g0)]
        return list(subgroup_generated(self.G, gens).members)

    @cached_property
    def tau_prime_element(self) -> int:
        return self.evaluate(self.tau_prime, "tau_prime")

    def _local(self, word: Word, where: str) -> int:
        x = self.evaluate(word, where)
        try:
            return self.g0_members.index(x)
        except ValueError:
            raise SchemaError(f"{where} evaluates outside G0", reason="NotInG0") from None

    def build_action(self) -> MixedAction:
        if self.hyperbolic is None or self.elliptic is None or self.base_genus is None:
            raise SchemaError("config has no generating vector")
        g0_group = self.G.subgroup(self.g0_members).as_group()[0]
        hyp = [
            [self._local(a, f"hyperbolic[{i}][0]"), self._local(b, f"hyperbolic[{i}][1]")]
            for i, (a, b) in enumerate(self.hyperbolic)
        ]
        ell = [self._local(c, f"elliptic[{j}]") for j, c in enumerate(self.elliptic)]
        gv = make_generating_vector(g0_group, self.base_genus, hyp, ell, self.elliptic_orders)
        return make_mixed_action(self.G, self.g0_members, self.tau_prime_element, gv)


def parse_config(data: Any, require_vector: bool = True) -> AnalysisConfig:
    if not isinstance(data, dict):
        raise SchemaError("top level must be a JSON object")
    for key in ("group", "g0", "tau_prime"):
        if key not in data:
            raise SchemaError(f'missing required field "{key}"')
    vector_keys = ("base_genus", "hyperbolic", "elliptic")
    if require_vector:
        for key in vector_keys:
            if key not in data:
                raise SchemaError(f'missing required field "{key}"')

    group = data["group"]
    if not isinstance(group, dict) or not (("cayley" in group) ^ ("degree" in group)):
        raise SchemaError('group must have exactly one of "cayley" or "degree"/"generators"')
    if "degree" in group and not (_is_int(group["degree"]) and "generators" in group):
        raise SchemaError("permutation group needs an integer degree and a generators list")

    if not isinstance(data["g0"], list) or not data["g0"]:
        raise SchemaError("g0 must be a non-empty list of words")
    g0 = [_check_word(w, f"g0[{i}]") for i, w in enumerate(data["g0"])]
    tau_prime = _check_word(data["tau_prime"], "tau_prime")

    base_genus = data.get("base_genus")
    if base_genus is not None and not (_is_int(base_genus) and base_genus >= 0):
        raise SchemaError("base_genus must be a non-negative integer")
    hyperbolic = data.get("hyperbolic")
    if hyperbolic is not None:
        if not isinstance(hyperbolic, list) or not all(
            isinstance(p, list) and len(p) == 2 for p in hyperbolic
        ):
            raise SchemaError("hyperbolic must be a list of [word, word] pairs")
        hyperbolic = [
            [_check_word(a, f"hyperbolic[{i}][0]"), _check_word(b, f"hyperbolic[{i}][1]")]
            for i, (a, b) in enumerate(hyperbolic)
        ]
    elliptic = data.get("elliptic")
    if elliptic is not None:
        if not isinstance(elliptic, list):
            raise SchemaError("elliptic must be a list of words")
        elliptic = [_check_word(w, f"elliptic[{j}]") for j, w in enumerate(elliptic)]
    orders = data.get("elliptic_orders")
    if orders is not None and not (isinstance(orders, list) and all(_is_int(m) for m in orders)):
        raise SchemaError("elliptic_orders must be a list of integers")

    cfg = AnalysisConfig(
        group=group,
        g0=g0,
        tau_prime=tau_prime,
        base_genus=base_genus,
        hyperbolic=hyperbolic,
        elliptic=elliptic,
        elliptic_orders=orders,
        name=str(data.get("name", "")),
        source=data,
    )
    # evaluate every word now so bad input fails at load time
    G = cfg.G
    members = cfg.g0_members
    if 2 * len(members) != G.order:
        raise SchemaError(f"G0 has order {len(members)}, not half of {G.order}", reason="IndexNotTwo")
    if cfg.tau_prime_element in members:
        raise SchemaError("tau_prime evaluates into G0", reason="TauPrimeInsideG0")
    for i, pair in enumerate(hyperbolic or []):
        for k, w in enumerate(pair):
            cfg._local(w, f"hyperbolic[{i}][{k}]")
    for j, w in enumerate(elliptic or []):
        cfg._local(w, f"elliptic[{j}]")
    return cfg


def load_config(path: str | Path, require_vector: bool = True) -> AnalysisConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_config(data, require_vector=require_vector)
