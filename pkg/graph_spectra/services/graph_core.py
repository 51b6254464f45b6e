"""
Graph values and elementary structural quantities.

Adjacency rows are Python ints used as bitsets: bit v of adj[u] is set iff
{u, v} is an edge. Graph values are immutable and every function here is pure,
so graphs can be shared freely between verification workers.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import networkx as nx

from ..conf import toolkit_setting
from ..exceptions import (
    GraphCapacityError, GraphFormatError, InvalidGraphError, PreconditionError,
)

logger = logging.getLogger(__name__)

GRAPH6_OFFSET = 63


@lru_cache(maxsize=None)
def vertex_cap():
    return toolkit_setting('VERTEX_CAP')


@lru_cache(maxsize=None)
def graph6_max_order():
    return min(toolkit_setting('GRAPH6_MAX_ORDER'), 62)


def _bits(mask):
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# Graph value
@dataclass(frozen=True)
class Graph:
    """
    Simple undirected labeled graph on vertices 0..n-1.

    Invariants (checked on construction): rows are symmetric, loop-free and
    confined to the first n bits.
    """
    n: int
    adj: tuple

    def __post_init__(self):
        if self.n < 0:
            raise InvalidGraphError(f"Vertex count must be non-negative, got {self.n}")
        if self.n > vertex_cap():
            raise GraphCapacityError(f"Graph has {self.n} vertices; the cap is {vertex_cap()}")
        if len(self.adj) != self.n:
            raise InvalidGraphError(f"Expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise InvalidGraphError(f"Row {u} references a vertex outside 0..{self.n - 1}")
            if row >> u & 1:
                raise InvalidGraphError(f"Vertex {u} has a loop")
            for v in _bits(row):
                if not self.adj[v] >> u & 1:
                    raise InvalidGraphError(f"Edge {u}-{v} is not symmetric")

    @classmethod
    def empty(cls, n):
        return cls(n, (0,) * n)

    @property
    def full_mask(self):
        return (1 << self.n) - 1

    @property
    def edge_count(self):
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def degree(self, v):
        return self.adj[v].bit_count()

    def neighbors(self, v):
        return tuple(_bits(self.adj[v]))

    def degree_sequence(self):
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    def edges(self):
        """Edges as sorted (u, v) pairs with u < v."""
        return tuple(
            (u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))
        )

    def leaves(self):
        return tuple(v for v in range(self.n) if self.adj[v].bit_count() == 1)

    def __str__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class VertexSet:
    """Bitset over vertex labels."""
    bits: int = 0

    @classmethod
    def of(cls, vertices):
        bits = 0
        for v in vertices:
            bits |= 1 << v
        return cls(bits)

    def __iter__(self):
        return _bits(self.bits)

    def __len__(self):
        return self.bits.bit_count()

    def __contains__(self, v):
        return bool(self.bits >> v & 1)

    def as_tuple(self):
        return tuple(_bits(self.bits))


class Induced(NamedTuple):
    """An induced subgraph together with the parent label of each of its vertices."""
    graph: Graph
    vertices: tuple


@dataclass(frozen=True)
class ComponentSplit:
    """Connected components of order >= 2 plus the isolated vertices."""
    nontrivial: tuple
    isolated: VertexSet

    @property
    def omega(self):
        return len(self.nontrivial) + len(self.isolated)


# Construction
def from_edge_list(n, edges):
    """Build a graph on n vertices; duplicate edges collapse, loops are rejected."""
    if n < 0:
        raise InvalidGraphError(f"Vertex count must be non-negative, got {n}")
    if n > vertex_cap():
        raise GraphCapacityError(f"Graph has {n} vertices; the cap is {vertex_cap()}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraphError(f"Edge ({u}, {v}) is out of range for n={n}")
        if u == v:
            raise InvalidGraphError(f"Loop at vertex {u} is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def induced_subgraph(G, vertices):
    """Subgraph induced on the given vertices, relabeled in increasing label order."""
    keep = sorted(set(vertices))
    position = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        row = 0
        for w in _bits(G.adj[v]):
            if w in position:
                row |= 1 << position[w]
        rows.append(row)
    return Induced(Graph(len(keep), tuple(rows)), tuple(keep))


def delete_vertices(G, U):
    """G - U with the remaining vertices relabeled in their original order."""
    removed = U.bits if isinstance(U, VertexSet) else VertexSet.of(U).bits
    if removed & ~G.full_mask:
        raise InvalidGraphError("Deleted vertices must belong to the graph")
    return induced_subgraph(G, _bits(G.full_mask & ~removed))


def disjoint_union(*graphs):
    rows = []
    offset = 0
    for H in graphs:
        rows.extend(row << offset for row in H.adj)
        offset += H.n
    if offset > vertex_cap():
        raise GraphCapacityError(f"Union has {offset} vertices; the cap is {vertex_cap()}")
    return Graph(offset, tuple(rows))


def add_edges(G, edges):
    rows = list(G.adj)
    for u, v in edges:
        if u == v or not (0 <= u < G.n and 0 <= v < G.n):
            raise InvalidGraphError(f"Cannot add edge ({u}, {v}) to {G}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(G.n, tuple(rows))


def join_bridge(G, u, H, v):
    """Disjoint union of G and H plus the single edge joining u in G to v in H."""
    if not (0 <= u < G.n and 0 <= v < H.n):
        raise InvalidGraphError(f"Bridge endpoints ({u}, {v}) are outside the operands")
    return add_edges(disjoint_union(G, H), [(u, G.n + v)])


def relabel(G, permutation):
    """Apply permutation[old] = new."""
    if sorted(permutation) != list(range(G.n)):
        raise InvalidGraphError("Relabeling must be a permutation of the vertices")
    rows = [0] * G.n
    for u in range(G.n):
        row = 0
        for w in _bits(G.adj[u]):
            row |= 1 << permutation[w]
        rows[permutation[u]] = row
    return Graph(G.n, tuple(rows))


# Components, distances, cycles
def component_masks(G):
    """Vertex masks of the connected components, ordered by minimum label."""
    masks = []
    remaining = G.full_mask
    while remaining:
        seen = frontier = remaining & -remaining
        while frontier:
            grown = 0
            for v in _bits(frontier):
                grown |= G.adj[v]
            frontier = grown & ~seen
            seen |= frontier
        masks.append(seen)
        remaining &= ~seen
    return masks


def connected_components(G):
    nontrivial = []
    isolated = 0
    for mask in component_masks(G):
        if mask.bit_count() == 1:
            isolated |= mask
        else:
            nontrivial.append(induced_subgraph(G, _bits(mask)))
    return ComponentSplit(tuple(nontrivial), VertexSet(isolated))


def is_connected(G):
    return G.n >= 1 and len(component_masks(G)) == 1


def is_tree(G):
    return is_connected(G) and G.edge_count == G.n - 1


def cyclomatic_number(G):
    """|E| - |V| + omega; zero exactly for forests."""
    return G.edge_count - G.n + len(component_masks(G))


def distance_layers(G, source):
    """Breadth-first layers from source, as a list of vertex masks."""
    layers = []
    seen = frontier = 1 << source
    while frontier:
        layers.append(frontier)
        grown = 0
        for v in _bits(frontier):
            grown |= G.adj[v]
        frontier = grown & ~seen
        seen |= frontier
    return layers


def eccentricity(G, v):
    return len(distance_layers(G, v)) - 1


def diameter(G):
    if G.n == 0 or not is_connected(G):
        raise PreconditionError(f"Diameter is only defined here for connected graphs; got {G}")
    return max(eccentricity(G, v) for v in range(G.n))


def distance(G, u, v):
    for d, layer in enumerate(distance_layers(G, u)):
        if layer >> v & 1:
            return d
    return None


def cycle_vertices(G):
    """Vertices lying on some cycle, i.e. endpoints of edges that are not bridges."""
    on_cycle = 0
    for u, v in G.edges():
        if on_cycle >> u & 1 and on_cycle >> v & 1:
            continue
        rows = list(G.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        seen = frontier = 1 << u
        while frontier and not seen >> v & 1:
            grown = 0
            for x in _bits(frontier):
                grown |= rows[x]
            frontier = grown & ~seen
            seen |= frontier
        if seen >> v & 1:
            on_cycle |= (1 << u) | (1 << v)
    return VertexSet(on_cycle)


# graph6 and edge-list text
def to_networkx(G):
    graph = nx.Graph()
    graph.add_nodes_from(range(G.n))
    graph.add_edges_from(G.edges())
    return graph


def parse_graph6(text):
    """Decode one graph6 line (short form, n <= 62)."""
    line = text.strip()
    if line.startswith('>>graph6<<'):
        line = line[len('>>graph6<<'):]
    if not line:
        raise GraphFormatError("Empty graph6 line", line=1, column=1)
    for column, char in enumerate(line, start=1):
        if not GRAPH6_OFFSET <= ord(char) <= 126:
            raise GraphFormatError(f"Byte {ord(char)} is outside the graph6 range 63..126",
                                   line=1, column=column)
    if line[0] == '~':
        raise GraphCapacityError(
            f"graph6 long form is not supported; orders above {graph6_max_order()} use edge lists")
    n = ord(line[0]) - GRAPH6_OFFSET
    if n > graph6_max_order():
        raise GraphCapacityError(f"graph6 order {n} exceeds the cap {graph6_max_order()}")
    expected = (n * (n - 1) // 2 + 5) // 6
    payload = line[1:]
    if len(payload) < expected:
        raise GraphFormatError(f"Truncated graph6 payload: expected {expected} bytes, got {len(payload)}",
                               line=1, column=len(line) + 1)
    if len(payload) > expected:
        raise GraphFormatError(f"Trailing bytes after graph6 payload of {expected} bytes",
                               line=1, column=expected + 2)
    try:
        graph = nx.from_graph6_bytes(line.encode('ascii'))
    except nx.NetworkXError as error:
        raise GraphFormatError(f"Malformed graph6 line: {error}", line=1, column=1) from None
    return from_edge_list(n, graph.edges())


def emit_graph6(G):
    """Encode G as a graph6 line without the optional header."""
    if G.n > graph6_max_order():
        raise GraphCapacityError(f"graph6 short form holds at most {graph6_max_order()} vertices")
    return nx.to_graph6_bytes(to_networkx(G), header=False).decode('ascii').strip()


def _edge_list_tokens(text):
    for line_number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0]
        if not content.strip():
            continue
        tokens = []
        column = 0
        for piece in content.split():
            column = content.index(piece, column) + 1
            tokens.append((piece, column))
            column += len(piece) - 1
        yield line_number, tokens


def _as_int(piece, column, line):
    try:
        return int(piece)
    except ValueError:
        raise GraphFormatError(f"Expected an integer, found {piece!r}", line=line, column=column) from None


def parse_edge_list(text):
    """Decode the 'n m' header followed by m lines 'u v' (0-based)."""
    lines = list(_edge_list_tokens(text))
    if not lines:
        raise GraphFormatError("Edge list is empty", line=1, column=1)
    header_line, header = lines[0]
    if len(header) != 2:
        raise GraphFormatError("Header must be 'n m'", line=header_line, column=1)
    n = _as_int(*header[0], header_line)
    m = _as_int(*header[1], header_line)
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"Header announces {m} edges but {len(body)} follow",
                               line=body[-1][0] if body else header_line)
    edges = []
    for line_number, tokens in body:
        if len(tokens) != 2:
            raise GraphFormatError("Edge lines hold exactly two vertices", line=line_number, column=1)
        u = _as_int(*tokens[0], line_number)
        v = _as_int(*tokens[1], line_number)
        if not (0 <= u < n and 0 <= v < n):
            bad = tokens[0] if not 0 <= u < n else tokens[1]
            raise GraphFormatError(f"Vertex out of range 0..{n - 1}", line=line_number, column=bad[1])
        if u == v:
            raise GraphFormatError(f"Loop at vertex {u}", line=line_number, column=tokens[0][1])
        edges.append((u, v))
    return from_edge_list(n, edges)


def emit_edge_list(G):
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return '\n'.join(lines) + '\n'


# Canonical labeling
def _refine(G, colors):
    """Colour refinement to the coarsest equitable partition finer than colors."""
    while True:
        count = max(colors) + 1
        cells = [0] * count
        for v, c in enumerate(colors):
            cells[c] |= 1 << v
        signatures = [
            (colors[v], tuple((G.adj[v] & cell).bit_count() for cell in cells))
            for v in range(G.n)
        ]
        ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        refined = [ranking[sig] for sig in signatures]
        if len(ranking) == count:
            return refined
        colors = refined


def _individualize(colors, v):
    keys = [(c, u != v) for u, c in enumerate(colors)]
    ranking = {key: i for i, key in enumerate(sorted(set(keys)))}
    return [ranking[key] for key in keys]


def _target_cell(colors):
    sizes = {}
    for c in colors:
        sizes[c] = sizes.get(c, 0) + 1
    candidates = [(size, c) for c, size in sizes.items() if size > 1]
    return min(candidates)[1] if candidates else None


def _is_homogeneous(G, cell):
    """Every permutation of the cell fixing all other vertices is an automorphism."""
    members = list(_bits(cell))
    first = members[0]
    outside = G.adj[first] & ~cell
    inside = G.adj[first] & cell
    clique = inside == cell & ~(1 << first)
    if inside and not clique:
        return False
    for v in members[1:]:
        if G.adj[v] & ~cell != outside:
            return False
        if clique and G.adj[v] & cell != cell & ~(1 << v):
            return False
        if not clique and G.adj[v] & cell:
            return False
    return True


def _certificate(G, order):
    position = [0] * G.n
    for i, v in enumerate(order):
        position[v] = i
    rows = []
    for v in order:
        row = 0
        for w in _bits(G.adj[v]):
            row |= 1 << position[w]
        rows.append(row)
    return tuple(rows)


def canonical_labeling(G):
    """
    Vertex order whose relabeled adjacency is the canonical representative.

    Refinement plus individualization; the largest leaf certificate wins.
    Homogeneous cells are explored through one representative and root
    branches are pruned with the automorphisms met along the way.
    """
    if G.n == 0:
        return ()
    best = {'cert': None, 'order': None}
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def leaf(colors):
        order = sorted(range(G.n), key=colors.__getitem__)
        cert = _certificate(G, order)
        if best['cert'] is None or cert > best['cert']:
            best['cert'], best['order'] = cert, order
        elif cert == best['cert']:
            for a, b in zip(best['order'], order):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)

    def search(colors, depth):
        cell_color = _target_cell(colors)
        if cell_color is None:
            leaf(colors)
            return
        cell = 0
        for v, c in enumerate(colors):
            if c == cell_color:
                cell |= 1 << v
        members = list(_bits(cell))
        if _is_homogeneous(G, cell):
            members = members[:1]
        explored = []
        for v in members:
            if depth == 0 and any(find(v) == find(u) for u in explored):
                continue
            explored.append(v)
            search(_refine(G, _individualize(colors, v)), depth + 1)

    search(_refine(G, [0] * G.n), 0)
    return tuple(best['order'])


def canonical_form(G):
    """Byte string equal for two graphs iff they are isomorphic."""
    order = canonical_labeling(G)
    rows = _certificate(G, order)
    width = (G.n + 7) // 8 or 1
    return G.n.to_bytes(1, 'big') + b''.join(row.to_bytes(width, 'big') for row in rows)


def canonical_graph(G):
    """The canonical representative of G's isomorphism class."""
    order = canonical_labeling(G)
    return Graph(G.n, _certificate(G, order))


def is_isomorphic(G, H):
    if G.n != H.n or G.edge_count != H.edge_count or G.degree_sequence() != H.degree_sequence():
        return False
    return canonical_form(G) == canonical_form(H)
