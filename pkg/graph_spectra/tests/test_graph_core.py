import random

import networkx as nx
from django.test import SimpleTestCase

from graph_spectra.exceptions import GraphCapacityError, GraphFormatError, InvalidGraphError, PreconditionError
from graph_spectra.services import graph_core
from graph_spectra.services.enumeration import enumerate_connected_graphs
from graph_spectra.services.families import cycle, path, pendant_triangle, star
from graph_spectra.services.graph_core import (
    Graph, VertexSet, canonical_form, canonical_graph, component_masks, connected_components,
    cycle_vertices, cyclomatic_number, delete_vertices, diameter, disjoint_union, emit_edge_list,
    emit_graph6, from_edge_list, induced_subgraph, is_connected, is_isomorphic, is_tree, join_bridge,
    parse_edge_list, parse_graph6, relabel,
)


def to_networkx(G):
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges())
    return g


def random_graph(rng, n, p=0.4):
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


class GraphValueTest(SimpleTestCase):
    def test_edges_and_degrees(self):
        G = from_edge_list(4, [(2, 1), (0, 1), (1, 2), (3, 1)])
        self.assertEqual(G.edges(), ((0, 1), (1, 2), (1, 3)))
        self.assertEqual(G.edge_count, 3)
        self.assertEqual(G.degree(1), 3)
        self.assertEqual(G.degree_sequence(), (3, 1, 1, 1))
        self.assertEqual(G.leaves(), (0, 2, 3))
        self.assertTrue(G.has_edge(3, 1))
        self.assertFalse(G.has_edge(0, 2))

    def test_invalid_rows_are_rejected(self):
        with self.assertRaises(InvalidGraphError):
            Graph(2, (0b10, 0))
        with self.assertRaises(InvalidGraphError):
            Graph(1, (0b1,))
        with self.assertRaises(InvalidGraphError):
            from_edge_list(3, [(0, 3)])
        with self.assertRaises(InvalidGraphError):
            from_edge_list(3, [(1, 1)])

    def test_vertex_cap(self):
        with self.assertRaises(GraphCapacityError):
            from_edge_list(65, [])
        self.assertEqual(Graph.empty(64).n, 64)

    def test_vertex_set(self):
        X = VertexSet.of([5, 1, 3])
        self.assertEqual(X.as_tuple(), (1, 3, 5))
        self.assertEqual(len(X), 3)
        self.assertIn(3, X)
        self.assertNotIn(2, X)


class ConstructionTest(SimpleTestCase):
    def test_induced_subgraph_relabels_in_order(self):
        G = cycle(5)
        sub = induced_subgraph(G, [4, 0, 1])
        self.assertEqual(sub.vertices, (0, 1, 4))
        self.assertEqual(sub.graph.edges(), ((0, 1), (0, 2)))

    def test_delete_vertices(self):
        rest = delete_vertices(path(5), [2])
        self.assertEqual(rest.vertices, (0, 1, 3, 4))
        self.assertEqual(rest.graph.edges(), ((0, 1), (2, 3)))
        with self.assertRaises(InvalidGraphError):
            delete_vertices(path(3), [7])

    def test_disjoint_union_and_bridge(self):
        G = join_bridge(cycle(3), 2, path(2), 0)
        self.assertEqual(G.n, 5)
        self.assertEqual(G.edges(), ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4)))
        self.assertEqual(disjoint_union(path(2), path(3)).edge_count, 3)

    def test_relabel_preserves_isomorphism_class(self):
        G = pendant_triangle(1)
        H = relabel(G, [5, 4, 3, 2, 1, 0])
        self.assertTrue(is_isomorphic(G, H))
        with self.assertRaises(InvalidGraphError):
            relabel(G, [0, 0, 1, 2, 3, 4])


class StructureTest(SimpleTestCase):
    def test_components(self):
        G = disjoint_union(cycle(3), path(2), Graph.empty(2))
        self.assertEqual(len(component_masks(G)), 4)
        split = connected_components(G)
        self.assertEqual(len(split.nontrivial), 2)
        self.assertEqual(split.isolated.as_tuple(), (5, 6))
        self.assertEqual(split.omega, 4)
        self.assertFalse(is_connected(G))
        self.assertEqual(cyclomatic_number(G), 1)

    def test_connectivity_edge_cases(self):
        self.assertFalse(is_connected(Graph.empty(0)))
        self.assertTrue(is_connected(Graph.empty(1)))
        self.assertTrue(is_tree(Graph.empty(1)))
        self.assertFalse(is_tree(cycle(4)))

    def test_cyclomatic_number(self):
        self.assertEqual(cyclomatic_number(path(6)), 0)
        self.assertEqual(cyclomatic_number(cycle(5)), 1)
        self.assertEqual(cyclomatic_number(pendant_triangle(2)), 1)
        K4 = from_edge_list(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        self.assertEqual(cyclomatic_number(K4), 3)

    def test_diameter(self):
        self.assertEqual(diameter(path(5)), 4)
        self.assertEqual(diameter(cycle(5)), 2)
        self.assertEqual(diameter(star(6)), 2)
        self.assertEqual(diameter(Graph.empty(1)), 0)
        with self.assertRaises(PreconditionError):
            diameter(Graph.empty(2))

    def test_diameter_matches_networkx(self):
        rng = random.Random(7)
        for _ in range(30):
            G = random_graph(rng, rng.randint(2, 9))
            if is_connected(G):
                self.assertEqual(diameter(G), nx.diameter(to_networkx(G)))

    def test_cycle_vertices(self):
        self.assertEqual(cycle_vertices(pendant_triangle(1)).as_tuple(), (0, 1, 2))
        self.assertEqual(cycle_vertices(path(4)).as_tuple(), ())
        bowtie_with_tail = from_edge_list(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (5, 6)])
        self.assertEqual(cycle_vertices(bowtie_with_tail).as_tuple(), (0, 1, 2, 3, 4))


class Graph6Test(SimpleTestCase):
    def test_known_encodings(self):
        self.assertEqual(emit_graph6(path(2)), 'A_')
        self.assertEqual(emit_graph6(cycle(3)), 'Bw')
        self.assertEqual(emit_graph6(Graph.empty(1)), '@')
        G = parse_graph6('D?{')
        self.assertEqual(G.n, 5)
        self.assertEqual(G.edges(), ((0, 4), (1, 4), (2, 4), (3, 4)))

    def test_header_is_accepted(self):
        self.assertEqual(parse_graph6('>>graph6<<Bw\n'), cycle(3))

    def test_matches_networkx_bytes(self):
        rng = random.Random(11)
        for _ in range(40):
            G = random_graph(rng, rng.randint(1, 20))
            expected = nx.to_graph6_bytes(to_networkx(G), header=False).decode().strip()
            self.assertEqual(emit_graph6(G), expected)
            self.assertEqual(parse_graph6(expected), G)

    def test_decoding_matches_networkx_edges(self):
        for text in ('Dhc', 'D?{', 'Bw', 'E?Bw', 'G~~~~{'):
            expected = nx.from_graph6_bytes(text.encode())
            G = parse_graph6(text)
            self.assertEqual(G.n, expected.number_of_nodes())
            self.assertEqual(set(G.edges()), {tuple(sorted(edge)) for edge in expected.edges()})
        self.assertTrue(nx.is_isomorphic(graph_core.to_networkx(cycle(5)), nx.cycle_graph(5)))

    def test_round_trip_on_connected_stream(self):
        for n in range(1, 7):
            for G in enumerate_connected_graphs(n):
                text = emit_graph6(G)
                self.assertEqual(emit_graph6(parse_graph6(text)), text)

    def test_malformed_lines(self):
        with self.assertRaises(GraphFormatError) as ctx:
            parse_graph6('A!')
        self.assertEqual(ctx.exception.column, 2)
        with self.assertRaises(GraphFormatError):
            parse_graph6('C')
        with self.assertRaises(GraphFormatError):
            parse_graph6('A_?')
        with self.assertRaises(GraphFormatError):
            parse_graph6('')
        with self.assertRaises(GraphCapacityError):
            parse_graph6('~?@?')


class EdgeListTest(SimpleTestCase):
    def test_parse_and_emit(self):
        G = parse_edge_list("# a path\n3 2\n0 1\n1 2  # middle\n")
        self.assertEqual(G, path(3))
        self.assertEqual(emit_edge_list(G), "3 2\n0 1\n1 2\n")
        self.assertEqual(parse_edge_list(emit_edge_list(cycle(5))), cycle(5))

    def test_errors_carry_positions(self):
        with self.assertRaises(GraphFormatError) as ctx:
            parse_edge_list("3 1\n0 x\n")
        self.assertEqual((ctx.exception.line, ctx.exception.column), (2, 3))
        with self.assertRaises(GraphFormatError) as ctx:
            parse_edge_list("3 2\n0 1\n")
        with self.assertRaises(GraphFormatError) as ctx:
            parse_edge_list("3 1\n0 5\n")
        self.assertEqual(ctx.exception.column, 3)
        with self.assertRaises(GraphFormatError):
            parse_edge_list("3 1\n2 2\n")
        with self.assertRaises(GraphFormatError):
            parse_edge_list("")


class CanonicalFormTest(SimpleTestCase):
    def test_invariant_under_relabeling(self):
        rng = random.Random(3)
        for _ in range(1000):
            G = random_graph(rng, rng.randint(1, 10))
            permutation = list(range(G.n))
            rng.shuffle(permutation)
            H = relabel(G, permutation)
            self.assertEqual(canonical_form(G), canonical_form(H))
            self.assertEqual(canonical_graph(G), canonical_graph(H))

    def test_agrees_with_networkx_isomorphism(self):
        rng = random.Random(5)
        for _ in range(60):
            n = rng.randint(4, 7)
            G, H = random_graph(rng, n, 0.5), random_graph(rng, n, 0.5)
            expected = nx.is_isomorphic(to_networkx(G), to_networkx(H))
            self.assertEqual(is_isomorphic(G, H), expected)

    def test_regular_graphs_are_separated(self):
        two_triangles = disjoint_union(cycle(3), cycle(3))
        self.assertFalse(is_isomorphic(cycle(6), two_triangles))
        self.assertNotEqual(canonical_form(cycle(6)), canonical_form(two_triangles))
        prism = from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
        k33 = from_edge_list(6, [(u, v) for u in range(3) for v in range(3, 6)])
        self.assertFalse(is_isomorphic(prism, k33))
