"""Immutable simple digraphs on dense integer vertices, plus the shared
structural queries everything else is built on: degrees, converse, strongly
connected components with a topologically ordered condensation, BFS trees
with their level partitions, and induced subdigraphs.

Vertices are 0..n-1 and every neighbour list is kept in ascending order, so
each algorithm in the package is deterministic: identical inputs give
identical outputs, including tie-breaks.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass

from .errors import FormatError

Arc = tuple[int, int]


class Digraph:
    """A finite simple digraph: no loops, no parallel arcs, digons allowed.

    Immutable after construction. The "deletion" helpers in this module
    (without_arcs, induced_subdigraph) build new instances.
    """

    __slots__ = ("n", "_arcs", "_arcset", "_out", "_in")

    def __init__(self, n: int, arcs=()) -> None:
        if n < 0:
            raise FormatError("vertex count must be nonnegative")
        seen: set[Arc] = set()
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        for raw in arcs:
            u, v = raw
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(f"arc ({u},{v}) out of range for {n} vertices")
            if u == v:
                raise FormatError(f"loop at vertex {u}")
            if (u, v) in seen:
                raise FormatError(f"duplicate arc ({u},{v})")
            seen.add((u, v))
            out[u].append(v)
            inn[v].append(u)
        self.n = n
        self._arcs = tuple(sorted(seen))
        self._arcset = frozenset(seen)
        self._out = tuple(tuple(sorted(a)) for a in out)
        self._in = tuple(tuple(sorted(a)) for a in inn)

    @property
    def arcs(self) -> tuple[Arc, ...]:
        return self._arcs

    @property
    def arc_count(self) -> int:
        return len(self._arcs)

    def vertices(self) -> range:
        return range(self.n)

    def out(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def inn(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arcset

    def has_digon(self) -> bool:
        return any((v, u) in self._arcset for (u, v) in self._arcs if u < v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self._arcset == other._arcset

    def __hash__(self) -> int:
        return hash((self.n, self._arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={len(self._arcs)})"


@dataclass(frozen=True)
class Degrees:
    delta_plus: int
    delta_minus: int
    delta_zero: int
    max_in_degree: int


def degrees(D: Digraph) -> Degrees:
    """Componentwise degree minima/maxima; the empty digraph reports all zeros."""
    if D.n == 0:
        return Degrees(0, 0, 0, 0)
    dp = min(D.out_degree(v) for v in D.vertices())
    dm = min(D.in_degree(v) for v in D.vertices())
    mi = max(D.in_degree(v) for v in D.vertices())
    return Degrees(dp, dm, min(dp, dm), mi)


def converse(D: Digraph) -> Digraph:
    """The digraph obtained by reversing every arc."""
    return Digraph(D.n, ((v, u) for (u, v) in D.arcs))


def without_arcs(D: Digraph, drop) -> Digraph:
    dropped = {tuple(a) for a in drop}
    return Digraph(D.n, (a for a in D.arcs if a not in dropped))


def induced_subdigraph(D: Digraph, keep) -> tuple[Digraph, tuple[int, ...]]:
    """Induced subdigraph on `keep`, relabelled to 0..|keep|-1.

    Returns (H, labels) where labels[i] is the D-vertex that became i; the
    relabelling is order-preserving.
    """
    labels = tuple(sorted(set(keep)))
    for v in labels:
        if not 0 <= v < D.n:
            raise FormatError(f"vertex {v} not in digraph")
    index = {v: i for i, v in enumerate(labels)}
    arcs = ((index[u], index[v]) for (u, v) in D.arcs if u in index and v in index)
    return Digraph(len(labels), arcs), labels


def without_vertices(D: Digraph, drop) -> tuple[Digraph, tuple[int, ...]]:
    return induced_subdigraph(D, set(D.vertices()) - set(drop))


# -- strong components -------------------------------------------------------

@dataclass(frozen=True)
class StrongComponents:
    component_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    condensation: Digraph


def strong_components(D: Digraph) -> StrongComponents:
    """Kosaraju's algorithm. Component ids are a topological order of the
    condensation: every condensation arc goes from a smaller id to a larger one.
    """
    n = D.n
    seen = [False] * n
    finish: list[int] = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        stack: list[tuple[int, int]] = [(s, 0)]
        while stack:
            v, i = stack[-1]
            nbrs = D.out(v)
            if i < len(nbrs):
                stack[-1] = (v, i + 1)
                w = nbrs[i]
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, 0))
            else:
                finish.append(v)
                stack.pop()

    comp = [-1] * n
    components: list[list[int]] = []
    for s in reversed(finish):
        if comp[s] != -1:
            continue
        cid = len(components)
        members = [s]
        comp[s] = cid
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in D.inn(v):
                if comp[w] == -1:
                    comp[w] = cid
                    members.append(w)
                    queue.append(w)
        components.append(sorted(members))

    cond_arcs = {(comp[u], comp[v]) for (u, v) in D.arcs if comp[u] != comp[v]}
    condensation = Digraph(len(components), cond_arcs)
    return StrongComponents(tuple(comp), tuple(tuple(c) for c in components), condensation)


# -- BFS trees ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BfsTree:
    """Shortest-path tree from `root`. For direction "out" level i holds the
    vertices at digraph distance i from the root; for "in", at distance i to
    the root. Unreachable vertices appear in no level.
    """

    root: int
    direction: str
    parent: dict[int, int]
    levels: tuple[tuple[int, ...], ...]
    level_index: dict[int, int]

    def level_of(self, v: int) -> int | None:
        return self.level_index.get(v)

    def dipath(self, v: int) -> list[int]:
        """The tree dipath between root and v, listed tail-to-head along its
        arcs: root..v for an out-tree, v..root for an in-tree.
        """
        if v not in self.level_index:
            raise FormatError(f"vertex {v} is not reached by this tree")
        walk = [v]
        while walk[-1] != self.root:
            walk.append(self.parent[walk[-1]])
        if self.direction == "out":
            walk.reverse()
        return walk


def bfs_tree(D: Digraph, root: int, direction: str) -> BfsTree:
    if direction not in ("out", "in"):
        raise FormatError("direction must be 'out' or 'in'")
    if not 0 <= root < D.n:
        raise FormatError(f"root {root} not in digraph")
    step = D.out if direction == "out" else D.inn
    parent: dict[int, int] = {}
    level_index = {root: 0}
    levels: list[tuple[int, ...]] = []
    frontier = [root]
    depth = 0
    while frontier:
        levels.append(tuple(frontier))
        nxt = []
        for v in frontier:
            for w in step(v):
                if w not in level_index:
                    level_index[w] = depth + 1
                    parent[w] = v
                    nxt.append(w)
        frontier = sorted(nxt)
        depth += 1
    return BfsTree(root, direction, parent, tuple(levels), level_index)


def is_generator(D: Digraph, v: int, direction: str) -> bool:
    """True iff every vertex is reachable from v (out) or reaches v (in)."""
    return len(bfs_tree(D, v, direction).level_index) == D.n


def reachable_set(D: Digraph, sources, *, allowed=None) -> set[int]:
    """Vertices reachable from `sources` by arcs of D, staying inside `allowed`
    (everything, when None). Sources outside `allowed` are ignored.
    """
    ok = (lambda v: True) if allowed is None else (set(allowed)).__contains__
    seen = set()
    queue = deque()
    for s in sources:
        if ok(s) and s not in seen:
            seen.add(s)
            queue.append(s)
    while queue:
        v = queue.popleft()
        for w in D.out(v):
            if ok(w) and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


# -- path systems ------------------------------------------------------------

@dataclass(frozen=True)
class PathSystem:
    """Pairwise vertex-disjoint dipaths of a host digraph."""

    paths: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)


def is_dipath(D: Digraph, seq) -> bool:
    seq = list(seq)
    if not seq or len(set(seq)) != len(seq):
        return False
    return all(D.has_arc(a, b) for a, b in zip(seq, seq[1:]))


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> Digraph:
    """Parse the repo-wide edge-list format: first non-comment line
    `n <vertex_count>`, then one `<tail> <head>` line per arc; lines whose
    first non-blank character is `#` are comments. Loops and duplicate arcs
    are rejected here, not deferred to the constructor's caller.
    """
    n: int | None = None
    arcs: list[Arc] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise FormatError(f"line {lineno}: expected header 'n <vertex_count>'")
            try:
                n = int(fields[1])
            except ValueError:
                raise FormatError(f"line {lineno}: vertex count is not an integer") from None
            if n < 0:
                raise FormatError(f"line {lineno}: negative vertex count")
            continue
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected '<tail> <head>'")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"line {lineno}: arc endpoints must be integers") from None
        arcs.append((u, v))
    if n is None:
        raise FormatError("missing 'n <vertex_count>' header")
    try:
        return Digraph(n, arcs)
    except FormatError as exc:
        raise FormatError(str(exc)) from None


def format_edge_list(D: Digraph) -> str:
    lines = [f"n {D.n}"]
    lines.extend(f"{u} {v}" for (u, v) in D.arcs)
    return "\n".join(lines) + "\n"


def digraph_hash(D: Digraph) -> str:
    """Content hash of the canonical edge-list serialization."""
    return hashlib.sha256(format_edge_list(D).encode("ascii")).hexdigest()
