"""Fork-and-pair extractors for the two-block cycle and the triple path.

Both follow one skeleton. A fork is a spine with two tails hanging off its
end; the extractor repeatedly either closes the fork into the target pattern
using out-arcs from tail endpoints back into the spine prefix, or grows
auxiliary path pairs in lockstep until they are long enough to rebuild a
strictly longer fork, restarting the analysis. Termination: every rebuild
lengthens the spine by at least one vertex.

The triple-path fork carries an extra middle path so the spine suffix can
serve as the return path; spine hits are restricted to the prefix (everything
before the last spine vertex) to keep that return path long enough.
"""

from __future__ import annotations

from .assemble import digon_certificate, triple_path_certificate, two_block_certificate
from .digraphs import Digraph, degrees
from .errors import HypothesisUnmet, InternalBug
from .patterns import SubdivisionCertificate, build_triple_path, build_two_block_cycle
from .paths import _covered_segment, _greedy_maximal_path, _long_cycle, _Stuck


def _fresh_step(D: Digraph, v: int, used: set[int]) -> int | None:
    return next((w for w in D.out(v) if w not in used), None)


def _grow_tail(D: Digraph, anchor: int, used: set[int], size: int) -> list[int]:
    tail: list[int] = []
    for _ in range(size):
        w = _fresh_step(D, tail[-1] if tail else anchor, used)
        if w is None:
            raise _Stuck("no fresh out-neighbour while growing a fork tail")
        tail.append(w)
        used.add(w)
    return tail


def _lockstep(D: Digraph, C1: list[int], C2: list[int], cap2: int, used: set[int]) -> None:
    # The first path leads; the second catches up to min(cap2, len(first)).
    w = _fresh_step(D, C1[-1], used)
    if w is None:
        raise _Stuck(f"pair path cannot extend at {C1[-1]}")
    C1.append(w)
    used.add(w)
    if len(C2) < min(cap2, len(C1)):
        w = _fresh_step(D, C2[-1], used)
        if w is None:
            raise _Stuck(f"pair path cannot extend at {C2[-1]}")
        C2.append(w)
        used.add(w)


def _prefix_hits(D: Digraph, v: int, prefix_pos: dict[int, int]) -> list[int]:
    return sorted(prefix_pos[w] for w in D.out(v) if w in prefix_pos)


def _pair_starts(D: Digraph, v: int, used: set[int], what: str) -> tuple[int, int]:
    starts = [w for w in D.out(v) if w not in used][:2]
    if len(starts) < 2:
        raise _Stuck(f"tail endpoint {v} has fewer than two out-neighbours outside {what}")
    return starts[0], starts[1]


# -- two-block cycle ----------------------------------------------------------

def _initial_fork2(D: Digraph, k1: int, k2: int) -> tuple[list[int], list[int], list[int]]:
    if D.n == 0:
        raise _Stuck("empty digraph")
    used = {0}
    A = [0]
    A += _grow_tail(D, 0, used, 1)
    B1 = _grow_tail(D, A[-1], used, k1 - 1)
    B2 = _grow_tail(D, A[-1], used, k2 - 1)
    return A, B1, B2


def _two_block_routes(D: Digraph, k1: int, k2: int) -> tuple[list[int], list[int]]:
    """k1 >= k2 >= 2. Two host dipaths with common endpoints and disjoint
    interiors, of lengths >= k1 and >= k2."""
    A, B1, B2 = _initial_fork2(D, k1, k2)
    while True:
        prefix_pos = {v: i for i, v in enumerate(A[:-1])}
        n1 = _prefix_hits(D, B1[-1], prefix_pos)
        n2 = _prefix_hits(D, B2[-1], prefix_pos)
        if n1 and n2:
            i, j = n1[0], n2[0]
            if i <= j:
                return [A[-1]] + B1 + A[i : j + 1], [A[-1]] + B2 + [A[j]]
            return [A[-1]] + B1 + [A[i]], [A[-1]] + B2 + A[j : i + 1]
        outcome = _hunt2(D, k1, k2, A, B1, B2, grower=1 if not n1 else 2)
        if outcome[0] == "close":
            return outcome[1], outcome[2]
        A, B1, B2 = outcome[1], outcome[2], outcome[3]


def _hunt2(D: Digraph, k1: int, k2: int, A, B1, B2, grower: int):
    """Grow a path pair off the tail whose endpoint avoids the spine prefix,
    until an endpoint reaches the prefix (close), the pair can rebuild a
    longer fork, or no greedy move is left (_Stuck)."""
    Bg = B1 if grower == 1 else B2
    prefix_pos = {v: i for i, v in enumerate(A[:-1])}
    fork_set = set(A) | set(B1) | set(B2)
    c1, c2 = _pair_starts(D, Bg[-1], fork_set, "the fork")
    C1, C2 = [c1], [c2]
    used = fork_set | {c1, c2}
    while True:
        for carrier in (C1, C2):
            hits = _prefix_hits(D, carrier[-1], prefix_pos)
            if hits:
                return _resolve2(D, k1, k2, A, B1, B2, grower, carrier, hits[0], C1, C2)
        if len(C1) >= k1 - 1:
            return ("fork", A + Bg, C1[: k1 - 1], C2[: k2 - 1])
        _lockstep(D, C1, C2, k2, used)


def _resolve2(D: Digraph, k1: int, k2: int, A, B1, B2, grower: int, carrier, j: int, C1, C2):
    """A pair endpoint reaches the spine at index j; close against the other
    tail directly, against the pair itself, or launch the second pair."""
    a_end = A[-1]
    Bg, Bo = (B1, B2) if grower == 1 else (B2, B1)
    prefix_pos = {v: i for i, v in enumerate(A[:-1])}
    other = _prefix_hits(D, Bo[-1], prefix_pos)
    if other:
        m = other[0]
        if j <= m:
            route_g = [a_end] + Bg + carrier + A[j : m + 1]
            route_o = [a_end] + Bo + [A[m]]
        else:
            route_g = [a_end] + Bg + carrier + [A[j]]
            route_o = [a_end] + Bo + A[m : j + 1]
        return ("close", route_g, route_o) if grower == 1 else ("close", route_o, route_g)
    if grower == 2:
        raise InternalBug(
            "mirror pair resolved although the first tail lost its spine hit",
            state={"spine": A, "tails": (B1, B2), "pair": (C1, C2)},
        )
    # Other tail endpoint may reach the pair itself.
    for P_z in (C1, C2):
        zpos = {v: i for i, v in enumerate(P_z)}
        zhits = sorted(zpos[w] for w in D.out(B2[-1]) if w in zpos)
        if zhits:
            h = zhits[0]
            return ("close", [a_end] + B1 + P_z[: h + 1], [a_end] + B2 + [P_z[h]])
    return _hunt2_second(D, k1, k2, A, B1, B2, carrier, j, C1, C2)


def _hunt2_second(D: Digraph, k1: int, k2: int, A, B1, B2, carrier, j: int, C1, C2):
    """Second pair, off the other tail, avoiding the whole first pair; its
    endpoints may close against the spine prefix or against the first pair."""
    a_end = A[-1]
    prefix_pos = {v: i for i, v in enumerate(A[:-1])}
    base = set(A) | set(B1) | set(B2) | set(C1) | set(C2)
    c3, c4 = _pair_starts(D, B2[-1], base, "the fork and first pair")
    C3, C4 = [c3], [c4]
    used = base | {c3, c4}
    while True:
        for Cx in (C3, C4):
            hits = _prefix_hits(D, Cx[-1], prefix_pos)
            if hits:
                q = hits[0]
                if j <= q:
                    return ("close", [a_end] + B1 + carrier + A[j : q + 1],
                            [a_end] + B2 + Cx + [A[q]])
                return ("close", [a_end] + B1 + carrier + [A[j]],
                        [a_end] + B2 + Cx + A[q : j + 1])
            for P_z in (C1, C2):
                zpos = {v: i for i, v in enumerate(P_z)}
                zhits = sorted(zpos[w] for w in D.out(Cx[-1]) if w in zpos)
                if zhits:
                    h = zhits[0]
                    return ("close", [a_end] + B1 + P_z[: h + 1],
                            [a_end] + B2 + Cx + [P_z[h]])
        if len(C3) >= k1 - 1:
            return ("fork", A + B2, C3[: k1 - 1], C4[: k2 - 1])
        _lockstep(D, C3, C4, k2, used)


def find_two_block_cycle(D: Digraph, k1: int, k2: int) -> SubdivisionCertificate:
    """A subdivision of the two-block cycle C(k1, k2), guaranteed when the
    minimum out-degree is at least 2(k1+k2)-1. The (1,1) instance is any
    directed cycle split after its first arc; (k,1) rides a maximal dipath
    segment covering a terminal vertex's out-neighbourhood."""
    build_two_block_cycle(k1, k2)
    bound = 2 * (k1 + k2) - 1
    big, small = max(k1, k2), min(k1, k2)
    try:
        if big == 1:
            return digon_certificate(D, _long_cycle(D, 2))
        if small == 1:
            long_route = _covered_segment(D, big)
            short_route = [long_route[0], long_route[-1]]
        else:
            long_route, short_route = _two_block_routes(D, big, small)
    except _Stuck as stuck:
        dp = degrees(D).delta_plus
        guarantee = 1 if big == 1 else (big if small == 1 else bound)
        if dp >= guarantee:
            raise InternalBug(f"two-block search failed despite min out-degree {dp}: {stuck}")
        raise HypothesisUnmet(
            "minimum out-degree below the two-block bound",
            required=f"min out-degree >= {bound}", actual=f"min out-degree = {dp}",
        ) from stuck
    route_a, route_b = (long_route, short_route) if k1 >= k2 else (short_route, long_route)
    return two_block_certificate(D, k1, k2, route_a, route_b)


# -- triple path --------------------------------------------------------------

def _initial_fork3(D: Digraph, k1: int, k2: int, k3: int):
    if D.n == 0:
        raise _Stuck("empty digraph")
    used = {0}
    P = [0]
    A = _grow_tail(D, 0, used, k3 - 1)
    x = A[-1] if A else P[-1]
    B1 = _grow_tail(D, x, used, k1 - 1)
    B2 = _grow_tail(D, x, used, k2 - 1)
    return P, A, B1, B2


def _triple_routes(D: Digraph, k1: int, k2: int, k3: int):
    """k1 >= k2 >= 2, k3 >= 1. Three host dipaths realizing the triple path:
    two from the fork's branch vertex to a spine vertex, one back along the
    spine suffix and middle path."""
    P, A, B1, B2 = _initial_fork3(D, k1, k2, k3)
    while True:
        x = A[-1] if A else P[-1]
        prefix_pos = {v: i for i, v in enumerate(P[:-1])}
        n1 = _prefix_hits(D, B1[-1], prefix_pos)
        n2 = _prefix_hits(D, B2[-1], prefix_pos)
        if n1 and n2:
            i, j = n1[0], n2[0]
            if i <= j:
                return [x] + B1 + P[i : j + 1], [x] + B2 + [P[j]], P[j:] + A
            return [x] + B1 + [P[i]], [x] + B2 + P[j : i + 1], P[i:] + A
        outcome = _hunt3(D, k1, k2, k3, P, A, B1, B2, grower=1 if not n1 else 2)
        if outcome[0] == "close":
            return outcome[1], outcome[2], outcome[3]
        P, A, B1, B2 = outcome[1], outcome[2], outcome[3], outcome[4]


def _rebuild3(P, A, Bg, k_g: int, k3: int, C_first, C_second, k1: int, k2: int):
    # New spine and middle path come from rechopping P + A + Bg; the pair
    # prefixes become the new tails.
    chain = P + A + Bg
    cut = len(P) + k_g - 1
    return ("fork", chain[:cut], chain[cut:], C_first[: k1 - 1], C_second[: k2 - 1])


def _hunt3(D: Digraph, k1: int, k2: int, k3: int, P, A, B1, B2, grower: int):
    x = A[-1] if A else P[-1]
    Bg, Bo = (B1, B2) if grower == 1 else (B2, B1)
    k_g = k1 if grower == 1 else k2
    prefix_pos = {v: i for i, v in enumerate(P[:-1])}
    fork_set = set(P) | set(A) | set(B1) | set(B2)
    c1, c2 = _pair_starts(D, Bg[-1], fork_set, "the fork")
    C1, C2 = [c1], [c2]
    used = fork_set | {c1, c2}
    while True:
        for carrier in (C1, C2):
            hits = _prefix_hits(D, carrier[-1], prefix_pos)
            if hits:
                return _resolve3(D, k1, k2, k3, P, A, B1, B2, grower, carrier, hits[0])
        if len(C1) >= k1 - 1:
            return _rebuild3(P, A, Bg, k_g, k3, C1, C2, k1, k2)
        _lockstep(D, C1, C2, k2 - 1, used)


def _resolve3(D: Digraph, k1: int, k2: int, k3: int, P, A, B1, B2, grower: int, carrier, j: int):
    x = A[-1] if A else P[-1]
    Bo = B2 if grower == 1 else B1
    prefix_pos = {v: i for i, v in enumerate(P[:-1])}
    other = _prefix_hits(D, Bo[-1], prefix_pos)
    if other:
        m = other[0]
        if grower == 1:
            if j <= m:
                return ("close", [x] + B1 + carrier + P[j : m + 1], [x] + B2 + [P[m]], P[m:] + A)
            return ("close", [x] + B1 + carrier + [P[j]], [x] + B2 + P[m : j + 1], P[j:] + A)
        if m <= j:
            return ("close", [x] + B1 + P[m : j + 1], [x] + B2 + carrier + [P[j]], P[j:] + A)
        return ("close", [x] + B1 + [P[m]], [x] + B2 + carrier + P[j : m + 1], P[m:] + A)
    if grower == 2:
        raise InternalBug(
            "mirror pair resolved although the first tail lost its spine hit",
            state={"spine": P, "middle": A, "tails": (B1, B2)},
        )
    return _hunt3_second(D, k1, k2, k3, P, A, B1, B2, carrier, j)


def _hunt3_second(D: Digraph, k1: int, k2: int, k3: int, P, A, B1, B2, carrier, j: int):
    """Second pair, off the other tail. It avoids the fork and the carrier but
    may reuse the abandoned half of the first pair, and it closes only against
    the spine prefix."""
    x = A[-1] if A else P[-1]
    prefix_pos = {v: i for i, v in enumerate(P[:-1])}
    base = set(P) | set(A) | set(B1) | set(B2) | set(carrier)
    c3, c4 = _pair_starts(D, B2[-1], base, "the fork and carrier")
    C3, C4 = [c3], [c4]
    used = base | {c3, c4}
    while True:
        for Cx in (C3, C4):
            hits = _prefix_hits(D, Cx[-1], prefix_pos)
            if hits:
                q = hits[0]
                if j <= q:
                    return ("close", [x] + B1 + carrier + P[j : q + 1],
                            [x] + B2 + Cx + [P[q]], P[q:] + A)
                return ("close", [x] + B1 + carrier + [P[j]],
                        [x] + B2 + Cx + P[q : j + 1], P[j:] + A)
        if len(C3) >= k1 - 1:
            return _rebuild3(P, A, B2, k2, k3, C3, C4, k1, k2)
        _lockstep(D, C3, C4, k2 - 1, used)


def _covered_triple(D: Digraph, k1: int, k3: int):
    """The degenerate middle path: on a maximal dipath with terminal u, pick
    the last out-neighbour z of u at distance >= k3 before u; the segment from
    u's first out-neighbour to z, the arc (u, z), and the path z..u close the
    triple path with x = u, y = z."""
    if D.n == 0:
        raise _Stuck("empty digraph")
    Q = _greedy_maximal_path(D, 0)
    u = Q[-1]
    pos = {v: i for i, v in enumerate(Q)}
    hits = sorted(pos[w] for w in D.out(u) if w in pos)
    if not hits:
        raise _Stuck(f"terminal vertex {u} has out-degree 0")
    last = len(Q) - 1
    eligible = [q for q in hits if last - q >= k3]
    if not eligible:
        raise _Stuck("no out-neighbour far enough back along the path")
    zt = eligible[-1]
    if zt - hits[0] + 1 < k1:
        raise _Stuck("covered segment shorter than the long block")
    return [u] + Q[hits[0] : zt + 1], [u, Q[zt]], Q[zt:]


def find_triple_path(D: Digraph, k1: int, k2: int, k3: int) -> SubdivisionCertificate:
    """A subdivision of the triple path P(k1, k2; k3) (two forward paths and
    one return path between a discovered vertex pair), guaranteed when the
    minimum out-degree is at least 3*max + 2*min + k3 - 5. Unordered (k1, k2)
    are accepted and normalized into the certificate's pattern."""
    build_triple_path(k1, k2, k3)
    big, small = max(k1, k2), min(k1, k2)
    bound = 3 * big + 2 * small + k3 - 5
    try:
        if small == 1:
            r1, r2, r3 = _covered_triple(D, big, k3)
        else:
            r1, r2, r3 = _triple_routes(D, big, small, k3)
    except _Stuck as stuck:
        dp = degrees(D).delta_plus
        if dp >= bound:
            raise InternalBug(f"triple-path search failed despite min out-degree {dp}: {stuck}")
        raise HypothesisUnmet(
            "minimum out-degree below the triple-path bound",
            required=f"min out-degree >= {bound}", actual=f"min out-degree = {dp}",
        ) from stuck
    return triple_path_certificate(D, big, small, k3, r1, r2, r3)
