"""Shared certificate assembly: laying a pattern dipath along a host route.

A route is a host dipath that carries one pattern block or pattern path. When
the route is longer than the pattern path it realizes, the slack goes into the
first arc path of that block; all other arc paths get length exactly 1. The
assembly cross-checks shared junction images and always hands the result to
the verifier via checked_certificate.
"""

from __future__ import annotations

from .digraphs import Arc, Digraph
from .errors import InternalBug
from .patterns import (
    PatternSpec,
    SubdivisionCertificate,
    block_boundaries,
    build_two_block_cycle,
    build_triple_path,
    checked_certificate,
)


def lay_segments(route, t: int) -> list[list[int]]:
    """Split a host route of length m >= t >= 1 into t consecutive segments,
    each of length >= 1, slack absorbed by the first segment."""
    m = len(route) - 1
    if t < 1 or m < t:
        raise InternalBug(f"cannot lay {t} pattern arcs along a route of length {m}")
    segments = [list(route[: m - t + 2])]
    for i in range(m - t + 1, m):
        segments.append(list(route[i : i + 2]))
    return segments


def assign_route(branch_map: dict[int, int], arc_paths: dict[Arc, tuple[int, ...]],
                 pattern_seq, route) -> None:
    """Map the pattern dipath `pattern_seq` onto the host dipath `route`,
    recording branch images and arc paths; junction images shared with
    previously assigned routes must agree."""
    segs = lay_segments(route, len(pattern_seq) - 1)
    for (a, b), seg in zip(zip(pattern_seq, pattern_seq[1:]), segs):
        arc_paths[(a, b)] = tuple(seg)
    images = [seg[0] for seg in segs] + [route[-1]]
    for p, h in zip(pattern_seq, images):
        if branch_map.setdefault(p, h) != h:
            raise InternalBug(f"junction {p} mapped to both {branch_map[p]} and {h}")


def blocked_path_certificate(host: Digraph, pattern: PatternSpec, routes) -> SubdivisionCertificate:
    """Assemble a blocked-path certificate from one host route per block.
    Forward blocks may be longer than the pattern block; backward blocks must
    be exact, which the extractors guarantee by construction."""
    ks = pattern.params
    bounds = block_boundaries(ks)
    branch_map: dict[int, int] = {}
    arc_paths: dict[Arc, tuple[int, ...]] = {}
    for i, (k, route) in enumerate(zip(ks, routes)):
        if k == 0:
            branch_map.setdefault(0, route[0])
            continue
        if i % 2 == 1 and len(route) - 1 != k:
            raise InternalBug(f"backward block {i + 1} has length {len(route) - 1}, expected {k}")
        lo, hi = bounds[i], bounds[i + 1]
        seq = list(range(lo, hi + 1)) if i % 2 == 0 else list(range(hi, lo - 1, -1))
        assign_route(branch_map, arc_paths, seq, route)
    return checked_certificate(host, pattern, branch_map, arc_paths)


def two_block_certificate(host: Digraph, k1: int, k2: int, route_a, route_b) -> SubdivisionCertificate:
    """Certificate for the two-block cycle: route_a carries the k1 block,
    route_b the k2 block; both are (x,y)-dipaths of the host sharing exactly
    their endpoints."""
    if k1 == 1 and k2 == 1:
        raise InternalBug("the (1,1) instance goes through digon_certificate")
    pattern = build_two_block_cycle(k1, k2)
    branch_map: dict[int, int] = {}
    arc_paths: dict[Arc, tuple[int, ...]] = {}
    seq_a = [0, *range(1, k1), k1]
    seq_b = [0, *range(k1 + 1, k1 + k2), k1]
    assign_route(branch_map, arc_paths, seq_a, route_a)
    assign_route(branch_map, arc_paths, seq_b, route_b)
    return checked_certificate(host, pattern, branch_map, arc_paths)


def triple_path_certificate(host: Digraph, k1: int, k2: int, k3: int,
                            route_1, route_2, route_3) -> SubdivisionCertificate:
    """Certificate for the triple path: route_1 and route_2 are (x,y)-dipaths
    carrying the k1 and k2 paths, route_3 the (y,x)-return of length >= k3."""
    pattern = build_triple_path(k1, k2, k3)
    branch_map: dict[int, int] = {}
    arc_paths: dict[Arc, tuple[int, ...]] = {}
    x, y = 0, k1
    seq_1 = [x, *range(1, k1), y]
    seq_2 = [x, *range(k1 + 1, k1 + k2), y]
    seq_3 = [y, *range(k1 + k2, k1 + k2 + k3 - 1), x]
    assign_route(branch_map, arc_paths, seq_1, route_1)
    assign_route(branch_map, arc_paths, seq_2, route_2)
    assign_route(branch_map, arc_paths, seq_3, route_3)
    return checked_certificate(host, pattern, branch_map, arc_paths)


def digon_certificate(host: Digraph, cycle) -> SubdivisionCertificate:
    """The digon pattern realized by any directed cycle, split after its first
    arc: x -> y is the first arc, y -> x the rest of the cycle."""
    pattern = build_two_block_cycle(1, 1)
    x, y = cycle[0], cycle[1]
    arc_paths = {(0, 1): (x, y), (1, 0): tuple(cycle[1:]) + (x,)}
    return checked_certificate(host, pattern, {0: x, 1: y}, arc_paths)
