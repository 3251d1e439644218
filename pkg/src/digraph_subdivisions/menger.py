"""Maximum vertex-disjoint (S,T)-path systems with a matching minimum vertex
cut, by unit-capacity flow.

Every vertex v is split into v_in and v_out joined by a capacity-1 arc, so a
unit of flow is a vertex-disjoint dipath. Original arcs get capacity larger
than any possible flow value, which forces every minimum cut onto the split
arcs; the cut is then read off the final residual reachability as the set of
vertices whose v_in is reachable from the source but whose v_out is not.
The returned pair is self-certifying: |paths| = |cut| is the exact equality.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .digraphs import Digraph, PathSystem
from .errors import FormatError, InternalBug


@dataclass(frozen=True)
class DisjointPaths:
    system: PathSystem
    cut: frozenset[int]


def disjoint_paths(D: Digraph, S, T) -> DisjointPaths:
    """A maximum set of pairwise vertex-disjoint (S,T)-dipaths and a minimum
    (S,T)-vertex-cut of the same size. A vertex of S cap T counts as a
    length-0 path and belongs to every cut. Empty S or T gives both empty.
    """
    S = set(S)
    T = set(T)
    for v in S | T:
        if not 0 <= v < D.n:
            raise FormatError(f"terminal vertex {v} not in digraph")
    if not S or not T:
        return DisjointPaths(PathSystem(()), frozenset())

    shared = S & T
    s_only = sorted(S - shared)
    t_only = T - shared
    alive = set(D.vertices()) - shared

    # Node encoding: v_in = 2v, v_out = 2v+1, source = 2n, sink = 2n+1.
    n = D.n
    src, snk = 2 * n, 2 * n + 1
    big = n + 1

    cap: dict[tuple[int, int], int] = {}
    adj: dict[int, set[int]] = {}

    def add(a: int, b: int, c: int) -> None:
        cap[(a, b)] = c
        cap.setdefault((b, a), 0)
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)

    for v in alive:
        add(2 * v, 2 * v + 1, 1)
    for (u, v) in D.arcs:
        if u in alive and v in alive:
            add(2 * u + 1, 2 * v, big)
    for s in s_only:
        add(src, 2 * s, big)
    for t in sorted(t_only):
        if t in alive:
            add(2 * t + 1, snk, big)

    order = {a: sorted(bs) for a, bs in adj.items()}
    res = dict(cap)

    def augment() -> bool:
        parent: dict[int, int] = {src: src}
        queue = deque([src])
        while queue:
            a = queue.popleft()
            if a == snk:
                break
            for b in order.get(a, ()):
                if b not in parent and res.get((a, b), 0) > 0:
                    parent[b] = a
                    queue.append(b)
        if snk not in parent:
            return False
        path = [snk]
        while path[-1] != src:
            path.append(parent[path[-1]])
        path.reverse()
        bottleneck = min(res[(a, b)] for a, b in zip(path, path[1:]))
        for a, b in zip(path, path[1:]):
            res[(a, b)] -= bottleneck
            res[(b, a)] += bottleneck
        return True

    while augment():
        pass

    # Successor of v on its flow path, if any: the unique w with flow on (v_out, w_in).
    succ: dict[int, int] = {}
    for (u, v) in D.arcs:
        if u in alive and v in alive and cap.get((2 * u + 1, 2 * v), 0) - res.get((2 * u + 1, 2 * v), 0) > 0:
            if u in succ:
                raise InternalBug("vertex capacity violated in flow decomposition")
            succ[u] = v

    paths = [(v,) for v in sorted(shared)]
    for s in s_only:
        if cap[(src, 2 * s)] - res[(src, 2 * s)] > 0:
            walk = [s]
            while walk[-1] not in t_only:
                walk.append(succ[walk[-1]])
            paths.append(tuple(walk))

    reach = {src}
    queue = deque([src])
    while queue:
        a = queue.popleft()
        for b in order.get(a, ()):
            if b not in reach and res.get((a, b), 0) > 0:
                reach.add(b)
                queue.append(b)
    cut = set(shared)
    for v in alive:
        if 2 * v in reach and 2 * v + 1 not in reach:
            cut.add(v)

    if len(cut) != len(paths):
        raise InternalBug(f"Menger equality violated: {len(paths)} paths, {len(cut)} cut")
    paths.sort()
    return DisjointPaths(PathSystem(tuple(paths)), frozenset(cut))
