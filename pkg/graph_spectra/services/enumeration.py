"""
Exhaustive graph streams: connected graphs and free trees, one representative
per isomorphism class, plus the brute-force oracles used to validate the counts.
"""

import logging
from functools import lru_cache
from itertools import combinations, product

from ..exceptions import GraphFormatError, PreconditionError
from .graph_core import (
    Graph, canonical_form, canonical_labeling, component_masks, delete_vertices,
    eccentricity, from_edge_list, is_connected, parse_graph6,
)

logger = logging.getLogger(__name__)

CONNECTED_RANGE = (1, 10)
TREE_RANGE = (1, 14)


def _check_range(n, bounds, what):
    low, high = bounds
    if not low <= n <= high:
        raise PreconditionError(f"{what} enumeration supports {low} <= n <= {high}, got {n}")


# Connected graphs
def _is_cut_vertex(G, v):
    return len(component_masks(delete_vertices(G, [v]).graph)) > 1


def _deletion_vertex(G):
    """The non-cut vertex with the largest canonical label."""
    for v in reversed(canonical_labeling(G)):
        if not _is_cut_vertex(G, v):
            return v
    raise PreconditionError(f"{G} has no non-cut vertex")


def _extend(parent, neighbourhood):
    n = parent.n + 1
    new = parent.n
    rows = list(parent.adj)
    for u in range(parent.n):
        if neighbourhood >> u & 1:
            rows[u] |= 1 << new
    rows.append(neighbourhood)
    return Graph(n, tuple(rows))


@lru_cache(maxsize=None)
def _connected_level(n):
    return tuple(enumerate_connected_graphs(n))


def enumerate_connected_graphs(n):
    """
    Connected graphs on n vertices up to isomorphism.

    Children of each parent add one vertex with a nonempty neighbourhood and
    are kept only when deleting their canonical deletion vertex gives back
    the parent's isomorphism class.
    """
    _check_range(n, CONNECTED_RANGE, 'Connected graph')
    if n == 1:
        yield Graph.empty(1)
        return
    produced = 0
    for parent in _connected_level(n - 1):
        parent_form = canonical_form(parent)
        seen = set()
        for neighbourhood in range(1, 1 << parent.n):
            child = _extend(parent, neighbourhood)
            form = canonical_form(child)
            if form in seen:
                continue
            seen.add(form)
            d = _deletion_vertex(child)
            if canonical_form(delete_vertices(child, [d]).graph) == parent_form:
                produced += 1
                yield child
    logger.debug("Generated %d connected graphs on %d vertices", produced, n)


def brute_force_connected_graphs(n):
    """Every labelled edge set, filtered to connected graphs and deduplicated."""
    pairs = list(combinations(range(n), 2))
    forms = {}
    for bits in range(1 << len(pairs)):
        G = from_edge_list(n, [pair for i, pair in enumerate(pairs) if bits >> i & 1])
        if is_connected(G):
            forms.setdefault(canonical_form(G), G)
    return list(forms.values())


# Trees
def _tree_from_levels(levels):
    edges = []
    last_at_depth = {}
    for i, depth in enumerate(levels):
        if depth:
            edges.append((last_at_depth[depth - 1], i))
        last_at_depth[depth] = i
    return from_edge_list(len(levels), edges)


def _next_levels(levels):
    """Successor in reverse lexicographic order of canonical level sequences."""
    p = max((i for i, depth in enumerate(levels) if depth > 1), default=None)
    if p is None:
        return None
    q = max(i for i in range(p) if levels[i] == levels[p] - 1)
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - (p - q)]
    return out


def _rooted_levels(T, root):
    """Canonical (lexicographically largest) level sequence of T rooted at root."""
    def walk(v, parent, depth):
        children = sorted(
            (walk(u, v, depth + 1) for u in T.neighbors(v) if u != parent), reverse=True)
        seq = [depth]
        for child in children:
            seq.extend(child)
        return seq
    return walk(root, None, 0)


def enumerate_trees(n):
    """Free trees on n vertices up to isomorphism, rooted at a centre."""
    _check_range(n, TREE_RANGE, 'Tree')
    if n <= 2:
        yield from_edge_list(n, [(0, 1)] if n == 2 else [])
        return
    levels = list(range(n))
    while levels is not None:
        T = _tree_from_levels(levels)
        ecc = [eccentricity(T, v) for v in range(n)]
        radius = min(ecc)
        if ecc[0] == radius:
            centres = [v for v in range(n) if ecc[v] == radius]
            if len(centres) == 1 or levels >= _rooted_levels(T, centres[1]):
                yield T
        levels = _next_levels(levels)


def _prufer_decode(sequence, n):
    degree = [1] * n
    for v in sequence:
        degree[v] += 1
    edges = []
    for v in sequence:
        leaf = next(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return from_edge_list(n, edges)


def prufer_trees(n):
    """All labelled trees via Pruefer sequences, deduplicated up to isomorphism."""
    if n <= 2:
        return [from_edge_list(n, [(0, 1)] if n == 2 else [])]
    forms = {}
    for sequence in product(range(n), repeat=n - 2):
        T = _prufer_decode(sequence, n)
        forms.setdefault(canonical_form(T), T)
    return list(forms.values())


# External corpora
def stream_graph6(lines):
    """Parse graph6 lines, skipping blanks, with errors tagged by line number."""
    for number, line in enumerate(lines, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            yield parse_graph6(text)
        except GraphFormatError as error:
            raise GraphFormatError(error.message, line=number, column=error.column) from None
