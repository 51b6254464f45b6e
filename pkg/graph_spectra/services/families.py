"""
Named graph families: constructors, structural recognizers and the
classifiers for graphs whose eigenvalue multiplicities are extremal with
respect to the induced matching number and the cyclomatic number.

Constructors label deterministically: backbone or cycle vertices first, then
pendant blocks left to right. Recognizers work on shape alone, so they accept
any labeling and unbounded parameters.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache

from ..exceptions import InvalidGraphError, PreconditionError
from .exact_algebra import (
    alg_equal, alg_is_zero, algebraic_from_rational, integer_square, quadratic_surd,
)
from .graph_core import (
    Graph, add_edges, connected_components, cyclomatic_number, delete_vertices, diameter,
    disjoint_union, from_edge_list, induced_subgraph, is_connected, is_isomorphic, is_tree,
)
from .matching import induced_matching_number
from .spectral import eigenvalue_multiplicity, spectrum

logger = logging.getLogger(__name__)


# Constructors
def path(n):
    if n < 1:
        raise InvalidGraphError(f"A path needs at least one vertex, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    if n < 3:
        raise InvalidGraphError(f"A cycle needs at least three vertices, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(n):
    """K_{1,n-1} on n vertices with centre 0."""
    if n < 1:
        raise InvalidGraphError(f"A star needs at least one vertex, got {n}")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def complete_graph(n):
    if n < 1:
        raise InvalidGraphError(f"A complete graph needs at least one vertex, got {n}")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def caterpillar(hairs):
    """Backbone path 0..len(hairs)-1 with hairs[i] pendant vertices on vertex i."""
    hairs = list(hairs)
    if not hairs or any(h < 0 for h in hairs):
        raise InvalidGraphError("Hair counts must be a nonempty sequence of non-negative integers")
    edges = [(i, i + 1) for i in range(len(hairs) - 1)]
    nxt = len(hairs)
    for i, count in enumerate(hairs):
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    return from_edge_list(nxt, edges)


def pendant_triangle(a):
    """Triangle 0-1-2 with a pendant vertices on each corner."""
    if a < 0:
        raise InvalidGraphError(f"Pendant count must be non-negative, got {a}")
    edges = [(0, 1), (1, 2), (0, 2)]
    nxt = 3
    for corner in range(3):
        for _ in range(a):
            edges.append((corner, nxt))
            nxt += 1
    return from_edge_list(nxt, edges)


def double_star(p, q):
    """Adjacent centres 0 and 1 carrying p and q leaves."""
    if p < 0 or q < 0:
        raise InvalidGraphError("Leaf counts must be non-negative")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(p)]
    edges += [(1, 2 + p + i) for i in range(q)]
    return from_edge_list(2 + p + q, edges)


@dataclass(frozen=True)
class HubPart:
    """A component hung from the hub by one edge to `attach`."""
    name: str
    graph: Graph
    attach: int
    cyclic: bool = False
    blocking: bool = False


def hub_graph(parts, isolated=0):
    """Hub 0 joined by one edge to each part, plus `isolated` pendant vertices."""
    G = Graph.empty(1)
    for part in parts:
        offset = G.n
        G = add_edges(disjoint_union(G, part.graph), [(0, offset + part.attach)])
    if isolated:
        offset = G.n
        G = add_edges(disjoint_union(G, Graph.empty(isolated)), [(0, offset + i) for i in range(isolated)])
    return G


def star_hub_graph(t, copies):
    """Hub 0 joined to the centre of each of `copies` stars K_{1,t}."""
    if t < 1 or copies < 1:
        raise InvalidGraphError("star_hub needs t >= 1 and at least one copy")
    return hub_graph([HubPart('star', star(t + 1), 0)] * copies)


def star_join(base, s, x, y):
    """Centre of K_{1,s} joined to the two base vertices x and y."""
    if x == y or not (0 <= x < base.n and 0 <= y < base.n):
        raise InvalidGraphError(f"Attachment vertices ({x}, {y}) must be distinct vertices of the base")
    centre = base.n
    return add_edges(disjoint_union(base, star(s + 1)), [(x, centre), (y, centre)])


def showcase_graph():
    """
    51-vertex hub example: three K_{1,4} at their centres, two double stars
    (2, 2) at a centre, two pendant triangles with a = 2 at a corner and five
    pendant vertices, all on hub 0.
    """
    parts = (
        [HubPart('star', star(5), 0, blocking=True)] * 3
        + [HubPart('double_star', double_star(2, 2), 0)] * 2
        + [HubPart('pendant_triangle', pendant_triangle(2), 0, cyclic=True)] * 2
    )
    return hub_graph(parts, isolated=5)


@lru_cache(maxsize=None)
def hub_catalogue():
    """
    Parts that can hang from a hub for a given eigenvalue, each keeping the
    eigenvalue with multiplicity 2 (pendant triangles) or 1 (short trees) and
    each contributing exactly one edge to a maximum induced matching.
    Blocking parts have every edge meeting the attachment's closed
    neighbourhood, which is what lets the hub carry pendant vertices.
    """
    golden = quadratic_surd(-1, 2, 5, 1)
    return (
        (algebraic_from_rational(-2), (
            HubPart('pendant_triangle:2@corner', pendant_triangle(2), 0, cyclic=True),
            HubPart('star:5@centre', star(5), 0, blocking=True),
            HubPart('star:5@leaf', star(5), 1),
            HubPart('double_star:2,2@centre', double_star(2, 2), 0),
        )),
        (algebraic_from_rational(1), (
            HubPart('pendant_triangle:2@corner', pendant_triangle(2), 0, cyclic=True),
            HubPart('path:2@end', path(2), 0, blocking=True),
            HubPart('double_star:2,2@centre', double_star(2, 2), 0),
        )),
        (algebraic_from_rational(-1), (
            HubPart('cycle:3@corner', cycle(3), 0, cyclic=True),
            HubPart('path:2@end', path(2), 0, blocking=True),
            HubPart('double_star:2,2@centre', double_star(2, 2), 0),
        )),
        (golden, (
            HubPart('pendant_triangle:1@corner', pendant_triangle(1), 0, cyclic=True),
            HubPart('path:4@inner', path(4), 1),
        )),
        (algebraic_from_rational(2), (
            HubPart('pendant_triangle:6@corner', pendant_triangle(6), 0, cyclic=True),
            HubPart('star:5@centre', star(5), 0, blocking=True),
            HubPart('double_star:2,2@centre', double_star(2, 2), 0),
        )),
    )


def build_named(spec):
    """Resolve 'name' or 'name:p1,p2,...' into a graph."""
    name, _, raw = spec.strip().partition(':')
    try:
        params = [int(p) for p in raw.split(',')] if raw.strip() else []
    except ValueError:
        raise InvalidGraphError(f"Constructor parameters must be integers: {spec!r}") from None
    builders = {
        'path': (path, 1),
        'cycle': (cycle, 1),
        'star': (star, 1),
        'complete': (complete_graph, 1),
        'pendant_triangle': (pendant_triangle, 1),
        'double_star': (double_star, 2),
        'star_hub': (star_hub_graph, 2),
        'showcase': (showcase_graph, 0),
        'pentagon': (lambda: cycle(5), 0),
    }
    if name == 'caterpillar':
        return caterpillar(params)
    if name not in builders:
        known = ', '.join(sorted(list(builders) + ['caterpillar']))
        raise InvalidGraphError(f"Unknown constructor {name!r}; known constructors: {known}")
    builder, arity = builders[name]
    if len(params) != arity:
        raise InvalidGraphError(f"Constructor {name!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)


# Recognizers
def _require_connected(G):
    if not is_connected(G):
        raise PreconditionError(f"{G} is not connected")


def pendant_triangle_order(G):
    """a when G is a triangle with a pendant vertices per corner, else None."""
    _require_connected(G)
    core = [v for v in range(G.n) if G.degree(v) >= 2]
    if len(core) != 3:
        return None
    x, y, z = core
    if not (G.has_edge(x, y) and G.has_edge(y, z) and G.has_edge(x, z)):
        return None
    core_mask = (1 << x) | (1 << y) | (1 << z)
    counts = [(G.adj[v] & ~core_mask).bit_count() for v in core]
    if len(set(counts)) != 1:
        return None
    a = counts[0]
    if G.n != 3 + 3 * a or G.edge_count != 3 + 3 * a:
        return None
    return a


def is_pentagon(G):
    _require_connected(G)
    return G.n == 5 and all(G.degree(v) == 2 for v in range(5))


def is_short_tree(G):
    """Tree of diameter 1, 2 or 3."""
    _require_connected(G)
    return is_tree(G) and 1 <= diameter(G) <= 3


def is_caterpillar(G):
    """Backbone of a caterpillar from its smaller-labelled end, or None."""
    _require_connected(G)
    if not is_tree(G):
        return None
    if G.n == 1:
        return (0,)
    inner = [v for v in range(G.n) if G.degree(v) >= 2]
    if not inner:
        return ()
    spine = induced_subgraph(G, inner)
    if any(spine.graph.degree(i) > 2 for i in range(spine.graph.n)):
        return None
    ends = [i for i in range(spine.graph.n) if spine.graph.degree(i) <= 1]
    current, previous = min(ends), None
    order = [current]
    while len(order) < spine.graph.n:
        current, previous = next(u for u in spine.graph.neighbors(current) if u != previous), current
        order.append(current)
    return tuple(spine.vertices[i] for i in order)


# Classifications
@dataclass(frozen=True)
class Classification:
    PENDANT_TRIANGLE = 'pendant_triangle'
    PENTAGON = 'pentagon'
    SHORT_TREE = 'short_tree'
    CATERPILLAR = 'caterpillar'
    TREE_HUB = 'tree_hub'
    HUB = 'hub'
    STAR_HUB = 'star_hub'
    NOT_EXTREMAL = 'not_extremal'

    TAG_CHOICES = (
        (PENDANT_TRIANGLE, 'Triangle with equal pendant counts'),
        (PENTAGON, 'Pentagon'),
        (SHORT_TREE, 'Tree of diameter at most 3'),
        (CATERPILLAR, 'Caterpillar of diameter 4, 5 or 6'),
        (TREE_HUB, 'Tree hub decomposition'),
        (HUB, 'Hub decomposition with pendant triangles'),
        (STAR_HUB, 'Hub over copies of one star'),
        (NOT_EXTREMAL, 'Not extremal'),
    )

    tag: str
    witness: dict = field(default_factory=dict)

    @property
    def is_extremal(self):
        return self.tag != self.NOT_EXTREMAL

    def __bool__(self):
        return self.is_extremal


NOT_EXTREMAL = Classification(Classification.NOT_EXTREMAL)


def classify_bound_equality(G):
    """Which family attains m = beta' + c for some nonzero eigenvalue."""
    _require_connected(G)
    a = pendant_triangle_order(G)
    if a is not None:
        return Classification(Classification.PENDANT_TRIANGLE, {'a': a})
    if is_pentagon(G):
        return Classification(Classification.PENTAGON)
    if is_short_tree(G):
        return Classification(Classification.SHORT_TREE, {'diameter': diameter(G)})
    return NOT_EXTREMAL


def _with_hub(G, vertices, w):
    return induced_subgraph(G, tuple(vertices) + (w,)).graph


def _diameter_condition(G, w, parts, isolated):
    """Some part is at distance 2 across the hub, or none is and I is empty and all are 3."""
    spans = [diameter(_with_hub(G, part.vertices, w)) for part in parts]
    return any(d == 2 for d in spans) or (not len(isolated) and all(d == 3 for d in spans))


def _caterpillar_form(T):
    backbone = is_caterpillar(T)
    if backbone is None:
        return None
    d = diameter(T)
    if d not in (4, 5, 6):
        return None
    if d == 6 and T.degree(backbone[2]) != 2:
        return None
    return Classification(Classification.CATERPILLAR, {'diameter': d, 'backbone': backbone})


def classify_tree_deficit(T, value):
    """Trees with m_value = beta' - 1: caterpillar form or tree hub form."""
    if not is_tree(T):
        raise PreconditionError(f"{T} is not a tree")
    if alg_is_zero(value):
        raise PreconditionError("The eigenvalue must be nonzero")
    if eigenvalue_multiplicity(T, value) == 0:
        raise PreconditionError(f"{value} is not an eigenvalue of {T}")
    found = _caterpillar_form(T)
    if found is not None:
        return found
    for w in range(T.n):
        rest = delete_vertices(T, [w])
        split = connected_components(rest.graph)
        if len(split.nontrivial) < 3:
            continue
        parts = [
            tuple(rest.vertices[i] for i in part.vertices) for part in split.nontrivial
        ]
        if any(diameter(part.graph) > 3 or eigenvalue_multiplicity(part.graph, value) == 0
               for part in split.nontrivial):
            continue
        isolated = tuple(rest.vertices[i] for i in split.isolated)
        lifted = [induced_subgraph(T, vertices) for vertices in parts]
        if _diameter_condition(T, w, lifted, isolated):
            return Classification(Classification.TREE_HUB, {
                'w': w, 'parts': tuple(parts), 'isolated': isolated,
            })
    return NOT_EXTREMAL


def classify_hub(G, value):
    """Hub form: G - w splits into beta'(G) parts, c(G) of them pendant triangles."""
    _require_connected(G)
    if diameter(G) < 4:
        raise PreconditionError(f"Diameter of {G} is below 4")
    if alg_is_zero(value):
        raise PreconditionError("The eigenvalue must be nonzero")
    s = induced_matching_number(G).size
    if s < 3:
        raise PreconditionError(f"Induced matching number {s} is below 3")
    c = cyclomatic_number(G)
    for w in range(G.n):
        rest = delete_vertices(G, [w])
        split = connected_components(rest.graph)
        if len(split.nontrivial) != s:
            continue
        cyclic, trees, lifted = [], [], []
        for part in split.nontrivial:
            vertices = tuple(rest.vertices[i] for i in part.vertices)
            if is_tree(part.graph):
                if diameter(part.graph) > 3 or eigenvalue_multiplicity(part.graph, value) != 1:
                    break
                trees.append(vertices)
            else:
                a = pendant_triangle_order(part.graph)
                if a is None or eigenvalue_multiplicity(part.graph, value) != 2:
                    break
                cyclic.append({'vertices': vertices, 'a': a})
            lifted.append(induced_subgraph(G, vertices))
        else:
            isolated = tuple(rest.vertices[i] for i in split.isolated)
            if len(cyclic) == c and _diameter_condition(G, w, lifted, isolated):
                return Classification(Classification.HUB, {
                    'w': w, 's': s, 'cyclic_parts': tuple(cyclic),
                    'tree_parts': tuple(trees), 'isolated': isolated,
                })
    return NOT_EXTREMAL


def classify_star_hub(G, value):
    """Hub over at least three copies of K_{1,t} with t = value**2."""
    _require_connected(G)
    if alg_is_zero(value):
        raise PreconditionError("The eigenvalue must be nonzero")
    if induced_matching_number(G).size < 3:
        raise PreconditionError("Induced matching number is below 3")
    t = integer_square(value)
    if t is None:
        return NOT_EXTREMAL
    for w in range(G.n):
        if G.n - 1 != G.degree(w) * (t + 1):
            continue
        rest = delete_vertices(G, [w])
        split = connected_components(rest.graph)
        if len(split.isolated) or len(split.nontrivial) < 3:
            continue
        if all(_is_star_hung_at_centre(G, part.vertices, rest.vertices, w, t) for part in split.nontrivial):
            copies = len(split.nontrivial)
            return Classification(Classification.STAR_HUB, {
                'w': w, 't': t, 'copies': copies, 's': copies - 1,
            })
    return NOT_EXTREMAL


def _is_star_hung_at_centre(G, local_vertices, parent_vertices, w, t):
    vertices = tuple(parent_vertices[i] for i in local_vertices)
    if len(vertices) != t + 1:
        return False
    joined = _with_hub(G, vertices, w)
    return is_tree(joined) and max(joined.degree(v) for v in range(joined.n)) == t + 1 and diameter(joined) == 2


# Independent re-verification
def _spectral_multiplicity(G, value):
    return spectrum(G).multiplicity_of(value)


def _parts_match(G, w, claimed):
    rest = delete_vertices(G, [w])
    split = connected_components(rest.graph)
    actual = {tuple(rest.vertices[i] for i in part.vertices) for part in split.nontrivial}
    isolated = tuple(rest.vertices[i] for i in split.isolated)
    return actual == set(claimed), isolated


def verify_classification(G, value, classification):
    """Recompute every claim in a witness with routines the recognizer did not use."""
    tag, witness = classification.tag, classification.witness
    if tag == Classification.NOT_EXTREMAL:
        return True
    if tag == Classification.PENDANT_TRIANGLE:
        return is_isomorphic(G, pendant_triangle(witness['a']))
    if tag == Classification.PENTAGON:
        return is_isomorphic(G, cycle(5))
    if tag == Classification.SHORT_TREE:
        return G.edge_count == G.n - 1 and is_connected(G) and diameter(G) == witness['diameter'] <= 3
    if tag == Classification.CATERPILLAR:
        backbone = witness['backbone']
        if not is_tree(G) or diameter(G) != witness['diameter'] or len(backbone) != witness['diameter'] - 1:
            return False
        if any(not G.has_edge(u, v) for u, v in zip(backbone, backbone[1:])):
            return False
        on_spine = set(backbone)
        if any(v not in on_spine and G.degree(v) != 1 for v in range(G.n)):
            return False
        return witness['diameter'] != 6 or G.degree(backbone[2]) == 2
    if tag == Classification.TREE_HUB:
        w = witness['w']
        matched, isolated = _parts_match(G, w, witness['parts'])
        if not matched or isolated != tuple(witness['isolated']) or len(witness['parts']) < 3:
            return False
        graphs = [induced_subgraph(G, part).graph for part in witness['parts']]
        if any(diameter(H) > 3 or _spectral_multiplicity(H, value) == 0 for H in graphs):
            return False
        spans = [diameter(_with_hub(G, part, w)) for part in witness['parts']]
        return any(d == 2 for d in spans) or (not isolated and all(d == 3 for d in spans))
    if tag == Classification.HUB:
        w = witness['w']
        cyclic = [entry['vertices'] for entry in witness['cyclic_parts']]
        trees = list(witness['tree_parts'])
        matched, isolated = _parts_match(G, w, cyclic + trees)
        if not matched or isolated != tuple(witness['isolated']):
            return False
        if len(cyclic) + len(trees) != induced_matching_number(G).size or len(cyclic) != cyclomatic_number(G):
            return False
        for entry in witness['cyclic_parts']:
            H = induced_subgraph(G, entry['vertices']).graph
            if not is_isomorphic(H, pendant_triangle(entry['a'])) or _spectral_multiplicity(H, value) != 2:
                return False
        for part in trees:
            H = induced_subgraph(G, part).graph
            if not is_tree(H) or diameter(H) > 3 or _spectral_multiplicity(H, value) != 1:
                return False
        spans = [diameter(_with_hub(G, part, w)) for part in cyclic + trees]
        return any(d == 2 for d in spans) or (not isolated and all(d == 3 for d in spans))
    if tag == Classification.STAR_HUB:
        w, t = witness['w'], witness['t']
        if not any(alg_equal(value, quadratic_surd(0, 1, t, sign)) for sign in (1, -1)):
            return False
        rest = delete_vertices(G, [w])
        split = connected_components(rest.graph)
        if len(split.isolated) or len(split.nontrivial) != witness['copies'] or witness['copies'] < 3:
            return False
        return all(
            is_isomorphic(part.graph, star(t + 1))
            and is_isomorphic(_with_hub(G, [rest.vertices[i] for i in part.vertices], w), star(t + 2))
            for part in split.nontrivial
        )
    raise InvalidGraphError(f"Unknown classification tag {tag!r}")
