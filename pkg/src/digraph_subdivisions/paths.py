"""Extractors driven by minimum out-degree: blocked oriented paths anchored at
a chosen vertex, long directed cycles, and the cycle formed by a long block
plus a single closing arc.

All extractors share the same failure protocol: the search itself is greedy
and deterministic (smallest usable vertex id at every choice point) and never
looks at the degree hypothesis while running. Only when a greedy step finds
no usable vertex do we diagnose: hypothesis below the guaranteed bound means
HypothesisUnmet, hypothesis satisfied means InternalBug.
"""

from __future__ import annotations

from .assemble import blocked_path_certificate, digon_certificate, two_block_certificate
from .digraphs import Digraph, degrees, induced_subdigraph, reachable_set, strong_components
from .errors import FormatError, HypothesisUnmet, InternalBug
from .patterns import SubdivisionCertificate, build_blocked_path


class _Stuck(Exception):
    """A greedy step found no usable vertex; the caller diagnoses why."""


def _greedy_exact_path(D: Digraph, v: int, k: int) -> list[int]:
    # Each step picks the smallest out-neighbour not yet on the path.
    path = [v]
    on = {v}
    for _ in range(k):
        nxt = next((w for w in D.out(path[-1]) if w not in on), None)
        if nxt is None:
            raise _Stuck(f"vertex {path[-1]} has no fresh out-neighbour after {len(path) - 1} steps")
        path.append(nxt)
        on.add(nxt)
    return path


def _greedy_maximal_path(D: Digraph, start: int) -> list[int]:
    path = [start]
    on = {start}
    while True:
        nxt = next((w for w in D.out(path[-1]) if w not in on), None)
        if nxt is None:
            return path
        path.append(nxt)
        on.add(nxt)


def _long_cycle(D: Digraph, k: int) -> list[int]:
    """A directed cycle on >= k vertices, as a vertex list without the closing
    repeat. A maximal dipath ends in a vertex whose out-neighbours all lie on
    the path; closing back to the earliest one gives a cycle of length at
    least out-degree + 1."""
    if D.n == 0:
        raise _Stuck("the empty digraph has no cycle")
    path = _greedy_maximal_path(D, 0)
    u = path[-1]
    pos = {v: i for i, v in enumerate(path)}
    hits = [pos[w] for w in D.out(u) if w in pos]
    if not hits:
        raise _Stuck(f"terminal vertex {u} has out-degree 0")
    cycle = path[min(hits):]
    if len(cycle) < k:
        raise _Stuck(f"greedy cycle has {len(cycle)} vertices, below {k}")
    return cycle


def find_long_cycle(D: Digraph, k: int) -> list[int]:
    """A directed cycle of length at least k, guaranteed whenever the minimum
    out-degree is at least max(k - 1, 1). Returns the cycle's vertex sequence;
    consecutive entries and last-to-first are arcs."""
    need = max(k - 1, 1)
    try:
        return _long_cycle(D, max(k, 1))
    except _Stuck as stuck:
        dp = degrees(D).delta_plus
        if dp >= need:
            raise InternalBug(f"long-cycle search failed despite min out-degree {dp}: {stuck}")
        raise HypothesisUnmet(
            "minimum out-degree too small to guarantee the cycle length",
            required=f"min out-degree >= {need}", actual=f"min out-degree = {dp}",
        ) from stuck


def _shortest_path_into(D: Digraph, sources, target: set[int]) -> list[int]:
    """Shortest dipath from the source set into the target set, meeting the
    target only at its last vertex. Multi-source BFS, ascending seeds."""
    seeds = sorted(sources)
    inside = sorted(v for v in seeds if v in target)
    if inside:
        return [inside[0]]
    parent: dict[int, int | None] = {v: None for v in seeds}
    frontier = seeds
    while frontier:
        nxt = []
        for v in frontier:
            for w in D.out(v):
                if w in parent:
                    continue
                parent[w] = v
                if w in target:
                    path = [w]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(w)
        frontier = sorted(nxt)
    raise _Stuck("the target set is unreachable from the sources")


def _exact_path_into(D: Digraph, cycle: list[int], x: int, k: int) -> list[int]:
    """A dipath of length exactly k ending at x: a shortest path from the
    cycle to x, trimmed to its last k arcs, or topped up by walking backwards
    along the cycle when it is shorter than k. Needs len(cycle) > k."""
    R = _shortest_path_into(D, cycle, {x})
    m = len(R) - 1
    if m >= k:
        return R[-(k + 1):]
    idx = cycle.index(R[0])
    need = k - m
    prefix = [cycle[(idx - need + j) % len(cycle)] for j in range(need)]
    path = prefix + R
    if len(set(path)) != k + 1:
        raise InternalBug(f"backward block is not a simple path: {path}")
    return path


def _blocked_routes(D: Digraph, v: int, ks) -> tuple[list[list[int]], tuple[int, ...]]:
    """One host route per block, plus the effective block lengths (odd blocks
    may exceed the request when the anchor must first travel to the sink
    component; a zero-length first block stays merged only if the anchor
    already sits inside it)."""
    k1 = ks[0]
    if len(ks) == 1:
        if k1 == 0:
            return [[v]], (0,)
        return [_greedy_exact_path(D, v, k1)], (k1,)
    k2 = ks[1]
    if k1 > 0:
        first = _greedy_exact_path(D, v, k1)
        u = first[-1]
        alive = set(D.vertices()) - set(first[:-1])
    else:
        first = [v]
        u = v
        alive = set(D.vertices())

    # Strip the used prefix, then aim for a sink strong component reachable
    # from u: its vertices keep their full remaining out-degree.
    D2, lab2 = induced_subdigraph(D, alive)
    inv2 = {w: i for i, w in enumerate(lab2)}
    sc = strong_components(D2)
    reach = reachable_set(sc.condensation, [sc.component_of[inv2[u]]])
    sinks = sorted(c for c in reach if sc.condensation.out_degree(c) == 0)
    H_set = set(sc.components[sinks[0]])
    conn2 = _shortest_path_into(D2, [inv2[u]], H_set)

    H, labH = induced_subdigraph(D2, H_set)
    invH = {w: i for i, w in enumerate(labH)}
    cycle = _long_cycle(H, k2 + 1)
    back = _exact_path_into(H, cycle, invH[conn2[-1]], k2)

    G, labG = induced_subdigraph(H, set(H.vertices()) - set(back[1:]))
    invG = {w: i for i, w in enumerate(labG)}
    rest_routes: list[list[int]] = []
    rest_eff: tuple[int, ...] = ()
    if ks[2:]:
        sub_routes, rest_eff = _blocked_routes(G, invG[back[0]], ks[2:])
        rest_routes = [[lab2[labH[labG[w]]] for w in r] for r in sub_routes]

    conn = [lab2[w] for w in conn2]
    block1 = first + conn[1:]
    eff1 = k1 if k1 > 0 else len(block1) - 1
    back_host = [lab2[labH[w]] for w in back]
    return [block1, back_host, *rest_routes], (eff1, k2, *rest_eff)


def find_blocked_path(D: Digraph, v: int, ks) -> SubdivisionCertificate:
    """A subdivision of a blocked oriented path anchored at v, guaranteed when
    the minimum out-degree is at least sum(ks). Odd blocks may come out longer
    than requested, even blocks are exact; a requested first block of length 0
    may grow into a positive odd block when v cannot be the merged junction."""
    request = build_blocked_path(ks).params
    if not 0 <= v < D.n:
        raise FormatError(f"anchor {v} out of range for {D.n} vertices")
    total = sum(request)
    try:
        routes, eff = _blocked_routes(D, v, request)
    except _Stuck as stuck:
        dp = degrees(D).delta_plus
        if dp >= total:
            raise InternalBug(f"blocked-path search failed despite min out-degree {dp}: {stuck}")
        raise HypothesisUnmet(
            "minimum out-degree below the blocked-path bound",
            required=f"min out-degree >= {total}", actual=f"min out-degree = {dp}",
        ) from stuck
    return blocked_path_certificate(D, build_blocked_path(eff), routes)


def _covered_segment(D: Digraph, k: int) -> list[int]:
    """The (u,w) construction: u ends a maximal dipath, v and w are its first
    and last out-neighbours along it, and u followed by the v..w segment is a
    dipath of length > out-degree(u) ending in an out-neighbour of u."""
    if D.n == 0:
        raise _Stuck("empty digraph")
    P = _greedy_maximal_path(D, 0)
    u = P[-1]
    pos = {v: i for i, v in enumerate(P)}
    hits = sorted(pos[w] for w in D.out(u) if w in pos)
    if not hits:
        raise _Stuck(f"terminal vertex {u} has out-degree 0")
    route = [u] + P[hits[0] : hits[-1] + 1]
    if len(route) - 1 < k:
        raise _Stuck(f"covered segment has length {len(route) - 1}, below {k}")
    return route


def find_c_k_1(D: Digraph, k: int) -> SubdivisionCertificate:
    """A subdivision of the two-block cycle C(k, 1), guaranteed when the
    minimum out-degree is at least k: the k-block rides a maximal dipath
    segment covering a terminal vertex's out-neighbourhood, the 1-block is
    the arc back to that segment's last vertex."""
    if k < 1:
        raise FormatError(f"block length must be positive, got {k}")
    try:
        if k == 1:
            return digon_certificate(D, _long_cycle(D, 2))
        route = _covered_segment(D, k)
        return two_block_certificate(D, k, 1, route, [route[0], route[-1]])
    except _Stuck as stuck:
        dp = degrees(D).delta_plus
        if dp >= k:
            raise InternalBug(f"C(k,1) search failed despite min out-degree {dp}: {stuck}")
        raise HypothesisUnmet(
            "minimum out-degree below the two-block bound",
            required=f"min out-degree >= {k}", actual=f"min out-degree = {dp}",
        ) from stuck
