"""Pattern builders, the subdivision-certificate type, its verifier, and the
certificate text format.

The subdivision convention used everywhere: each pattern arc is replaced by a
host dipath of length at least 1; the branch map is injective; internal
vertices of the arc paths are pairwise disjoint and avoid every branch image.
verify_subdivision is the single trusted checker; every finder's output goes
through it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .digraphs import Arc, Digraph, digraph_hash
from .errors import FormatError, InternalBug


@dataclass(frozen=True)
class PatternSpec:
    """A target digraph plus the family it came from and its named vertices."""

    kind: str
    params: tuple[int, ...]
    pattern: Digraph
    distinguished: dict[str, int] = field(default_factory=dict)


def block_boundaries(ks) -> list[int]:
    """Cumulative junction positions of a blocked path: junction i sits at
    boundaries[i] along the underlying path, block i spans positions
    boundaries[i-1]..boundaries[i].
    """
    bounds = [0]
    for k in ks:
        bounds.append(bounds[-1] + k)
    return bounds


def build_blocked_path(ks) -> PatternSpec:
    """Oriented path with maximal directed subpaths of lengths ks, the first
    block oriented forward, alternating after that. ks[0] = 0 collapses the
    first two junctions into one vertex.
    """
    ks = tuple(int(k) for k in ks)
    if not ks:
        raise FormatError("a blocked path needs at least one block")
    if ks[0] < 0:
        raise FormatError("first block length must be nonnegative")
    if any(k <= 0 for k in ks[1:]):
        raise FormatError("block lengths after the first must be positive")
    bounds = block_boundaries(ks)
    arcs: list[Arc] = []
    for i, k in enumerate(ks):
        lo, hi = bounds[i], bounds[i + 1]
        if i % 2 == 0:
            arcs.extend((p, p + 1) for p in range(lo, hi))
        else:
            arcs.extend((p + 1, p) for p in range(lo, hi))
    return PatternSpec("blocked_path", ks, Digraph(bounds[-1] + 1, arcs), {"initial": 0})


def build_branching(k: int, l: int) -> PatternSpec:
    """Complete l-ary in-arborescence of depth k, vertices in BFS order from
    the root; all arcs point toward the root (vertex 0).
    """
    if k < 0:
        raise FormatError("depth must be nonnegative")
    if l < 1:
        raise FormatError("arity must be positive")
    arcs: list[Arc] = []
    prev = [0]
    next_id = 1
    for _ in range(k):
        cur = []
        for p in prev:
            for _ in range(l):
                arcs.append((next_id, p))
                cur.append(next_id)
                next_id += 1
        prev = cur
    return PatternSpec("branching", (k, l), Digraph(next_id, arcs), {"root": 0})


def build_two_block_cycle(k1: int, k2: int) -> PatternSpec:
    """Two internally disjoint (x,y)-dipaths of lengths k1 and k2. The pair
    (1,1) would need parallel arcs, so it is represented by the digon, the
    pattern the corresponding theorem instance is found through.
    """
    if k1 < 1 or k2 < 1:
        raise FormatError("block lengths must be positive")
    if k1 == 1 and k2 == 1:
        return PatternSpec("two_block_cycle", (1, 1), Digraph(2, [(0, 1), (1, 0)]), {"x": 0, "y": 1})
    x, y = 0, k1
    arcs: list[Arc] = []
    path1 = [x, *range(1, k1), y]
    path2 = [x, *range(k1 + 1, k1 + k2), y]
    arcs.extend(zip(path1, path1[1:]))
    arcs.extend(zip(path2, path2[1:]))
    return PatternSpec("two_block_cycle", (k1, k2), Digraph(k1 + k2, arcs), {"x": x, "y": y})


def build_triple_path(k1: int, k2: int, k3: int) -> PatternSpec:
    """Two (x,y)-dipaths of lengths k1, k2 and one (y,x)-dipath of length k3,
    all internally disjoint. (k1,k2) = (1,1) is rejected: two length-1
    (x,y)-paths would be parallel arcs.
    """
    if min(k1, k2, k3) < 1:
        raise FormatError("path lengths must be positive")
    if k1 == 1 and k2 == 1:
        raise FormatError("triple path with k1 = k2 = 1 would need parallel arcs")
    x, y = 0, k1
    arcs: list[Arc] = []
    path1 = [x, *range(1, k1), y]
    path2 = [x, *range(k1 + 1, k1 + k2), y]
    path3 = [y, *range(k1 + k2, k1 + k2 + k3 - 1), x]
    for path in (path1, path2, path3):
        arcs.extend(zip(path, path[1:]))
    return PatternSpec("triple_path", (k1, k2, k3), Digraph(k1 + k2 + k3 - 1, arcs), {"x": x, "y": y})


def build_transitive_tournament(k: int) -> PatternSpec:
    if k < 1:
        raise FormatError("order must be positive")
    arcs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    return PatternSpec("transitive_tournament", (k,), Digraph(k, arcs), {})


def build_complete_digraph(n: int) -> PatternSpec:
    if n < 1:
        raise FormatError("order must be positive")
    arcs = [(i, j) for i in range(n) for j in range(n) if i != j]
    return PatternSpec("complete_digraph", (n,), Digraph(n, arcs), {})


def custom_pattern(pattern: Digraph, distinguished: dict[str, int] | None = None) -> PatternSpec:
    return PatternSpec("custom", (), pattern, dict(distinguished or {}))


_BUILDERS = {
    "blocked_path": build_blocked_path,
    "branching": build_branching,
    "two_block_cycle": build_two_block_cycle,
    "triple_path": build_triple_path,
    "transitive_tournament": build_transitive_tournament,
    "complete_digraph": build_complete_digraph,
}


def build_pattern(kind: str, params) -> PatternSpec:
    if kind not in _BUILDERS:
        raise FormatError(f"unknown pattern kind {kind!r}")
    params = tuple(int(p) for p in params)
    if kind == "blocked_path":
        return build_blocked_path(params)
    return _BUILDERS[kind](*params)


# -- certificates ------------------------------------------------------------

@dataclass(frozen=True)
class SubdivisionCertificate:
    """Witness that `pattern` has a subdivision inside the host with the given
    content hash: an injective branch map plus one host dipath per pattern arc.
    """

    host_hash: str
    pattern: PatternSpec
    branch_map: dict[int, int]
    arc_paths: dict[Arc, tuple[int, ...]]

    def used_vertices(self) -> set[int]:
        used = set(self.branch_map.values())
        for path in self.arc_paths.values():
            used.update(path)
        return used


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    violations: tuple[str, ...]


def verify_subdivision(cert: SubdivisionCertificate, host: Digraph) -> VerifyReport:
    """Check every certificate invariant; malformed input yields ok=False with
    diagnostics, never an exception. Reports the first failing invariant per
    pattern arc.
    """
    violations: list[str] = []
    try:
        pattern = cert.pattern.pattern
        bm = dict(cert.branch_map)
        arc_paths = {tuple(a): tuple(p) for a, p in cert.arc_paths.items()}
    except (TypeError, ValueError, AttributeError):
        return VerifyReport(False, ("certificate is structurally malformed",))

    if cert.host_hash != digraph_hash(host):
        violations.append("host hash mismatch: certificate was issued for a different digraph")

    if set(bm) != set(pattern.vertices()):
        violations.append("branch map does not cover exactly the pattern vertices")
    bad_image = [v for v in bm.values() if not (isinstance(v, int) and 0 <= v < host.n)]
    if bad_image:
        violations.append(f"branch image {bad_image[0]} outside host")
    if len(set(bm.values())) != len(bm):
        violations.append("branch map is not injective")

    pattern_arcs = set(pattern.arcs)
    for extra in sorted(set(arc_paths) - pattern_arcs):
        violations.append(f"arc path for {extra} does not correspond to a pattern arc")

    internal_owner: dict[int, Arc] = {}
    images = set(bm.values())
    for arc in sorted(pattern_arcs):
        u, v = arc
        path = arc_paths.get(arc)
        if path is None:
            violations.append(f"arc {arc}: missing arc path")
            continue
        if len(path) < 2:
            violations.append(f"arc {arc}: path must have length at least 1")
            continue
        if any(not (isinstance(w, int) and 0 <= w < host.n) for w in path):
            violations.append(f"arc {arc}: path leaves the host vertex range")
            continue
        if u in bm and path[0] != bm[u]:
            violations.append(f"arc {arc}: path starts at {path[0]}, not at the image of {u}")
            continue
        if v in bm and path[-1] != bm[v]:
            violations.append(f"arc {arc}: path ends at {path[-1]}, not at the image of {v}")
            continue
        if len(set(path)) != len(path):
            violations.append(f"arc {arc}: path repeats a vertex")
            continue
        broken = next(((a, b) for a, b in zip(path, path[1:]) if not host.has_arc(a, b)), None)
        if broken is not None:
            violations.append(f"arc {arc}: ({broken[0]},{broken[1]}) is not a host arc")
            continue
        clash = next((w for w in path[1:-1] if w in images or w in internal_owner), None)
        if clash is not None:
            violations.append(f"arc {arc}: internal vertex {clash} is not private to this path")
            continue
        for w in path[1:-1]:
            internal_owner[w] = arc

    if cert.pattern.kind == "complete_digraph" and not violations and not host.has_digon():
        n_p = cert.pattern.params[0]
        needed = n_p + n_p * (n_p - 1) // 2
        used = len(images) + len(internal_owner)
        if used < needed:
            violations.append(
                f"complete-digraph subdivision into a digon-free host uses {used} vertices, "
                f"below the required {needed}"
            )

    return VerifyReport(not violations, tuple(violations))


def checked_certificate(host: Digraph, pattern: PatternSpec, branch_map: dict[int, int],
                        arc_paths: dict[Arc, tuple[int, ...]]) -> SubdivisionCertificate:
    """Assemble a certificate and insist it verifies; extractors route their
    output through this so a construction bug can never escape silently.
    """
    cert = SubdivisionCertificate(digraph_hash(host), pattern, dict(branch_map),
                                  {tuple(a): tuple(p) for a, p in arc_paths.items()})
    report = verify_subdivision(cert, host)
    if not report.ok:
        raise InternalBug("constructed certificate failed verification: " + "; ".join(report.violations),
                          state=cert)
    return cert


# -- certificate text format -------------------------------------------------

def certificate_to_json(cert: SubdivisionCertificate) -> str:
    """Canonical serialization: fixed field order, branch map sorted by pattern
    vertex, arc paths sorted by (tail, head). Named pattern kinds serialize as
    kind plus parameters; custom patterns carry their arc list.
    """
    spec = cert.pattern
    if spec.kind == "custom":
        pattern_obj = {
            "kind": "custom",
            "vertex_count": spec.pattern.n,
            "arcs": [list(a) for a in spec.pattern.arcs],
            "distinguished": {k: spec.distinguished[k] for k in sorted(spec.distinguished)},
        }
    else:
        pattern_obj = {"kind": spec.kind, "params": list(spec.params)}
    obj = {
        "host_hash": cert.host_hash,
        "pattern": pattern_obj,
        "branch_map": [[p, h] for p, h in sorted(cert.branch_map.items())],
        "arc_paths": [
            {"tail": a[0], "head": a[1], "path": list(path)}
            for a, path in sorted(cert.arc_paths.items())
        ],
    }
    return json.dumps(obj, indent=2) + "\n"


def certificate_from_json(text: str) -> SubdivisionCertificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"certificate is not valid JSON: {exc}") from None
    try:
        pattern_obj = obj["pattern"]
        if pattern_obj["kind"] == "custom":
            spec = custom_pattern(
                Digraph(pattern_obj["vertex_count"], [tuple(a) for a in pattern_obj["arcs"]]),
                {str(k): int(v) for k, v in pattern_obj.get("distinguished", {}).items()},
            )
        else:
            spec = build_pattern(pattern_obj["kind"], pattern_obj["params"])
        branch_map = {int(p): int(h) for p, h in obj["branch_map"]}
        arc_paths = {(int(e["tail"]), int(e["head"])): tuple(int(w) for w in e["path"])
                     for e in obj["arc_paths"]}
        return SubdivisionCertificate(str(obj["host_hash"]), spec, branch_map, arc_paths)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed certificate: {exc}") from None
