"""Seeded instance generators for every hypothesis class the finders take.

Determinism contract: identical (family, parameters, seed) gives identical
arc sets, now and after interpreter upgrades. Sampling therefore uses only
Random.randrange on top of a private Fisher-Yates, never library helpers
whose tie-breaking might drift between versions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .digraphs import Arc, Digraph
from .errors import FormatError

FAMILIES = (
    "random_min_outdegree",
    "random_tournament",
    "bidirected_complete",
    "transitive_tournament",
    "exact_outdegree",
)


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: tuple[int, ...]
    seed: int

    def descriptor(self) -> str:
        return f"{self.family}:{','.join(str(p) for p in self.params)}:{self.seed}"


def parse_genspec(text: str) -> GenSpec:
    parts = text.strip().split(":")
    if len(parts) != 3:
        raise FormatError("generator descriptor must be family:params:seed")
    family, params_text, seed_text = parts
    if family not in FAMILIES:
        raise FormatError(f"unknown generator family {family!r}")
    try:
        params = tuple(int(p) for p in params_text.split(",") if p != "")
        seed = int(seed_text)
    except ValueError:
        raise FormatError("generator parameters and seed must be integers") from None
    return GenSpec(family, params, seed)


def _sample(rng: random.Random, pool: list[int], k: int) -> list[int]:
    # Partial Fisher-Yates; consumes exactly k randrange calls.
    for i in range(k):
        j = i + rng.randrange(len(pool) - i)
        pool[i], pool[j] = pool[j], pool[i]
    return sorted(pool[:k])


def _outdegree_arcs(n: int, d: int, seed: int) -> list[Arc]:
    rng = random.Random(seed)
    arcs: list[Arc] = []
    for v in range(n):
        pool = [u for u in range(n) if u != v]
        arcs.extend((v, u) for u in _sample(rng, pool, d))
    return arcs


def generate(spec: GenSpec) -> Digraph:
    """Build the digraph a GenSpec describes; the family property holds exactly."""
    family, params, seed = spec.family, spec.params, spec.seed
    if family in ("random_min_outdegree", "exact_outdegree"):
        if len(params) != 2:
            raise FormatError(f"{family} takes parameters (n, d)")
        n, d = params
        if n < 1 or d < 0 or d > n - 1:
            raise FormatError(f"infeasible parameters n={n}, d={d}")
        # random_min_outdegree adds each remaining arc with probability p after
        # the sampling phase; the default p = 0 makes the two families coincide.
        return Digraph(n, _outdegree_arcs(n, d, seed))
    if family == "random_tournament":
        if len(params) != 1 or params[0] < 1:
            raise FormatError("random_tournament takes one positive parameter n")
        n = params[0]
        rng = random.Random(seed)
        arcs = [(u, v) if rng.randrange(2) == 0 else (v, u)
                for u in range(n) for v in range(u + 1, n)]
        return Digraph(n, arcs)
    if family == "bidirected_complete":
        if len(params) != 1 or params[0] < 1:
            raise FormatError("bidirected_complete takes one positive parameter n")
        n = params[0]
        return Digraph(n, ((u, v) for u in range(n) for v in range(n) if u != v))
    if family == "transitive_tournament":
        if len(params) != 1 or params[0] < 1:
            raise FormatError("transitive_tournament takes one positive parameter n")
        n = params[0]
        return Digraph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))
    raise FormatError(f"unknown generator family {family!r}")


def generate_descriptor(text: str) -> Digraph:
    return generate(parse_genspec(text))
