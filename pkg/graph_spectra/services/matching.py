"""
Matching number, induced matching number and their witnesses.

Both optimisers are exact branch-and-bound searches over vertex bitmasks. The
induced matching number is a maximum independent set of the edge-conflict
graph. Witnesses are the lexicographically smallest maximum solutions, found by
self-reduction against the optimum.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from ..exceptions import InvalidGraphError
from .graph_core import cycle_vertices

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EdgeSet:
    """Sorted tuple of (u, v) pairs with u < v."""
    edges: tuple = ()

    @classmethod
    def of(cls, pairs):
        return cls(tuple(sorted((min(u, v), max(u, v)) for u, v in pairs)))

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def vertex_mask(self):
        mask = 0
        for u, v in self.edges:
            mask |= (1 << u) | (1 << v)
        return mask

    def is_matching(self, G):
        if any(not G.has_edge(u, v) for u, v in self.edges):
            return False
        return self.vertex_mask().bit_count() == 2 * len(self.edges)

    def is_induced_matching(self, G):
        if not self.is_matching(G):
            return False
        for i, (u, v) in enumerate(self.edges):
            closed = G.adj[u] | G.adj[v] | (1 << u) | (1 << v)
            for x, y in self.edges[i + 1:]:
                if closed >> x & 1 or closed >> y & 1:
                    return False
        return True


class MatchingResult(NamedTuple):
    size: int
    witness: EdgeSet


def _rows_from_edges(n, edges):
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def _max_matching(rows, mask, memo):
    """Maximum matching size inside the vertex mask."""
    if mask.bit_count() < 2:
        return 0
    if mask in memo:
        return memo[mask]
    best_v, best_deg = -1, None
    probe = mask
    while probe:
        low = probe & -probe
        v = low.bit_length() - 1
        probe ^= low
        deg = (rows[v] & mask).bit_count()
        if best_deg is None or deg < best_deg:
            best_v, best_deg = v, deg
            if deg <= 1:
                break
    v = best_v
    rest = mask & ~(1 << v)
    if best_deg == 0:
        result = _max_matching(rows, rest, memo)
    elif best_deg == 1:
        u = (rows[v] & mask).bit_length() - 1
        result = 1 + _max_matching(rows, rest & ~(1 << u), memo)
    else:
        result = _max_matching(rows, rest, memo)
        neighbours = rows[v] & mask
        while neighbours and result < mask.bit_count() // 2:
            low = neighbours & -neighbours
            neighbours ^= low
            result = max(result, 1 + _max_matching(rows, rest & ~low, memo))
    memo[mask] = result
    return result


@lru_cache(maxsize=8192)
def matching_number(G):
    """beta(G) with the lexicographically smallest maximum matching."""
    edges = G.edges()
    target = _max_matching(list(G.adj), G.full_mask, {})
    chosen = []
    used = 0
    for index, (u, v) in enumerate(edges):
        if len(chosen) == target:
            break
        if used >> u & 1 or used >> v & 1:
            continue
        taken = used | (1 << u) | (1 << v)
        later = [(x, y) for x, y in edges[index + 1:] if not (taken >> x & 1 or taken >> y & 1)]
        rows = _rows_from_edges(G.n, later)
        if 1 + _max_matching(rows, G.full_mask & ~taken, {}) == target - len(chosen):
            chosen.append((u, v))
            used = taken
    return MatchingResult(target, EdgeSet(tuple(chosen)))


def conflict_rows(G, edges):
    """Edge-conflict graph: two edges conflict when they share or are joined."""
    closed = [G.adj[u] | G.adj[v] | (1 << u) | (1 << v) for u, v in edges]
    rows = []
    for i, (u, v) in enumerate(edges):
        row = 0
        for j, (x, y) in enumerate(edges):
            if i != j and (closed[i] >> x & 1 or closed[i] >> y & 1):
                row |= 1 << j
        rows.append(row)
    return rows


def _is_clique(rows, mask):
    probe = mask
    while probe:
        low = probe & -probe
        v = low.bit_length() - 1
        probe ^= low
        if (rows[v] | low) & mask != mask:
            return False
    return True


def _split_off_component(rows, mask):
    seen = frontier = mask & -mask
    while frontier:
        grown = 0
        probe = frontier
        while probe:
            low = probe & -probe
            probe ^= low
            grown |= rows[low.bit_length() - 1]
        frontier = grown & mask & ~seen
        seen |= frontier
    return seen


def max_independent_set(rows, mask, memo):
    """Size of a maximum independent set inside mask."""
    if not mask:
        return 0
    if mask in memo:
        return memo[mask]
    component = _split_off_component(rows, mask)
    if component != mask:
        result = max_independent_set(rows, component, memo) + max_independent_set(rows, mask & ~component, memo)
        memo[mask] = result
        return result
    if _is_clique(rows, mask):
        memo[mask] = 1
        return 1
    simplicial = None
    branch_v, branch_deg = -1, -1
    probe = mask
    while probe:
        low = probe & -probe
        v = low.bit_length() - 1
        probe ^= low
        neighbourhood = rows[v] & mask
        deg = neighbourhood.bit_count()
        if deg > branch_deg:
            branch_v, branch_deg = v, deg
        if simplicial is None and _is_clique(rows, neighbourhood):
            simplicial = v
    if simplicial is not None:
        result = 1 + max_independent_set(rows, mask & ~(rows[simplicial] | (1 << simplicial)), memo)
    else:
        v = branch_v
        result = max(
            max_independent_set(rows, mask & ~(1 << v), memo),
            1 + max_independent_set(rows, mask & ~(rows[v] | (1 << v)), memo),
        )
    memo[mask] = result
    return result


@lru_cache(maxsize=8192)
def induced_matching_number(G):
    """beta'(G) with the lexicographically smallest maximum induced matching."""
    edges = G.edges()
    rows = conflict_rows(G, edges)
    memo = {}
    full = (1 << len(edges)) - 1
    target = max_independent_set(rows, full, memo)
    chosen = []
    blocked = 0
    for index in range(len(edges)):
        if len(chosen) == target:
            break
        if blocked >> index & 1:
            continue
        remaining = full & ~blocked & ~((1 << (index + 1)) - 1) & ~rows[index]
        if 1 + max_independent_set(rows, remaining, memo) == target - len(chosen):
            chosen.append(edges[index])
            blocked |= rows[index] | (1 << index)
        else:
            blocked |= 1 << index
    return MatchingResult(target, EdgeSet(tuple(chosen)))


def unsaturated_cycle_vertex(G, M):
    """Lowest cycle vertex not covered by the induced matching M, or None."""
    if not M.is_induced_matching(G):
        raise InvalidGraphError(f"{list(M.edges)} is not an induced matching of {G}")
    free = cycle_vertices(G).bits & ~M.vertex_mask()
    if not free:
        return None
    return (free & -free).bit_length() - 1


def unsaturated_cycle_vertices(G, M):
    if not M.is_induced_matching(G):
        raise InvalidGraphError(f"{list(M.edges)} is not an induced matching of {G}")
    free = cycle_vertices(G).bits & ~M.vertex_mask()
    return tuple(v for v in range(G.n) if free >> v & 1)


def pendant_edges(G):
    return tuple((u, v) for u, v in G.edges() if G.degree(u) == 1 or G.degree(v) == 1)


def find_pendant_induced_matching(G, size):
    """Lexicographically first set of `size` pendant edges forming an induced matching."""
    candidates = pendant_edges(G)
    closed = [G.adj[u] | G.adj[v] | (1 << u) | (1 << v) for u, v in candidates]

    def extend(start, chosen, forbidden):
        if len(chosen) == size:
            return chosen
        for i in range(start, len(candidates)):
            if len(candidates) - i < size - len(chosen):
                return None
            u, v = candidates[i]
            if forbidden >> u & 1 or forbidden >> v & 1:
                continue
            found = extend(i + 1, chosen + [candidates[i]], forbidden | closed[i])
            if found is not None:
                return found
        return None

    found = extend(0, [], 0)
    return EdgeSet(tuple(found)) if found is not None else None
