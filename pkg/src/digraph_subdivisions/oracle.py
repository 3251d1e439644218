"""Independent ground truth at desk scale: exhaustive subdivision search and
brute-force minimum vertex cuts.

The oracle shares no code with the extractors it judges. It enumerates
injective branch maps (with a degree-compatibility prune, which never loses a
witness because a subdivision forces host degrees at branch images) and then
realizes arc paths shortest-first with backtracking across arcs. The budget
is a node-expansion cap, not wall clock, so refusals are reproducible.
"""

from __future__ import annotations

from itertools import combinations

from .digraphs import Digraph, reachable_set
from .errors import BudgetExceeded, InternalBug
from .patterns import PatternSpec, SubdivisionCertificate, checked_certificate

DEFAULT_BUDGET = 10_000_000


class _Budget:
    __slots__ = ("left",)

    def __init__(self, budget: int):
        self.left = budget

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("oracle node budget exhausted")


def _simple_paths(host: Digraph, s: int, t: int, allowed_internal: set[int], budget: _Budget):
    """All simple s->t dipaths whose internal vertices lie in allowed_internal,
    sorted by (length, vertex sequence)."""
    found: list[tuple[int, ...]] = []
    path = [s]
    on_path = {s}

    def extend(v: int) -> None:
        budget.spend()
        for w in host.out(v):
            if w == t:
                found.append(tuple(path) + (t,))
            elif w in allowed_internal and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(w)
                path.pop()
                on_path.remove(w)

    if s == t:
        return []
    extend(s)
    found.sort(key=lambda p: (len(p), p))
    return found


def oracle_find_subdivision(host: Digraph, F: PatternSpec, *,
                            budget: int = DEFAULT_BUDGET) -> SubdivisionCertificate | None:
    """Exhaustive search for a subdivision of F in host; returns a verifying
    certificate or None. Completeness within budget comes from enumerating
    every injective branch map and every arc-path choice."""
    pat = F.pattern
    if pat.n > host.n:
        return None
    meter = _Budget(budget)

    p_order = sorted(pat.vertices(), key=lambda p: (-(pat.out_degree(p) + pat.in_degree(p)), p))
    arcs = sorted(pat.arcs)
    bm: dict[int, int] = {}
    used: set[int] = set()

    def place(i: int) -> SubdivisionCertificate | None:
        if i == len(p_order):
            return realize(0, {}, set())
        p = p_order[i]
        for h in host.vertices():
            if h in used:
                continue
            if host.out_degree(h) < pat.out_degree(p) or host.in_degree(h) < pat.in_degree(p):
                continue
            meter.spend()
            bm[p] = h
            used.add(h)
            cert = place(i + 1)
            if cert is not None:
                return cert
            del bm[p]
            used.remove(h)
        return None

    def realize(j: int, arc_paths: dict, internals: set[int]) -> SubdivisionCertificate | None:
        if j == len(arcs):
            return checked_certificate(host, F, bm, arc_paths)
        u, v = arcs[j]
        allowed = set(host.vertices()) - used - internals
        for path in _simple_paths(host, bm[u], bm[v], allowed, meter):
            arc_paths[(u, v)] = path
            new_internals = set(path[1:-1])
            cert = realize(j + 1, arc_paths, internals | new_internals)
            if cert is not None:
                return cert
            del arc_paths[(u, v)]
        return None

    return place(0)


def oracle_has_subdivision(host: Digraph, F: PatternSpec, *, budget: int = DEFAULT_BUDGET) -> bool:
    return oracle_find_subdivision(host, F, budget=budget) is not None


def brute_min_vertex_cut(D: Digraph, S, T, *, max_vertices: int = 12) -> int:
    """Minimum size of an (S,T)-vertex-cut by subset enumeration; exists only
    to validate the flow-based routine. Vertices of S and T may be cut."""
    if D.n > max_vertices:
        raise BudgetExceeded(f"brute-force cut limited to {max_vertices} vertices")
    S = {v for v in S if 0 <= v < D.n}
    T = {v for v in T if 0 <= v < D.n}

    def is_cut(X: frozenset[int]) -> bool:
        if (S & T) - X:
            return False
        alive = set(D.vertices()) - X
        return not (reachable_set(D, S - X, allowed=alive) & (T - X))

    for size in range(D.n + 1):
        for X in combinations(range(D.n), size):
            if is_cut(frozenset(X)):
                return size
    raise InternalBug("no vertex cut found, which is impossible")
