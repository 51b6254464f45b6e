import random
from itertools import combinations

import networkx as nx
from django.test import SimpleTestCase

from graph_spectra.exceptions import InvalidGraphError
from graph_spectra.services.families import cycle, path, pendant_triangle, star
from graph_spectra.services.graph_core import Graph, from_edge_list
from graph_spectra.services.matching import (
    EdgeSet, find_pendant_induced_matching, induced_matching_number, matching_number,
    pendant_edges, unsaturated_cycle_vertex, unsaturated_cycle_vertices,
)


def random_graph(rng, n, p=0.4):
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def brute_force_induced_matching(G):
    edges = G.edges()
    for size in range(len(edges), 0, -1):
        for chosen in combinations(edges, size):
            if EdgeSet.of(chosen).is_induced_matching(G):
                return size
    return 0


class EdgeSetTest(SimpleTestCase):
    def test_normalises_pairs(self):
        self.assertEqual(EdgeSet.of([(3, 2), (1, 0)]).edges, ((0, 1), (2, 3)))

    def test_matching_predicates(self):
        G = path(5)
        self.assertTrue(EdgeSet.of([(0, 1), (2, 3)]).is_matching(G))
        self.assertFalse(EdgeSet.of([(0, 1), (2, 3)]).is_induced_matching(G))
        self.assertTrue(EdgeSet.of([(0, 1), (3, 4)]).is_induced_matching(G))
        self.assertFalse(EdgeSet.of([(0, 1), (1, 2)]).is_matching(G))
        self.assertFalse(EdgeSet.of([(0, 2)]).is_matching(G))


class MatchingNumberTest(SimpleTestCase):
    def test_paths_and_cycles(self):
        for n in range(1, 10):
            self.assertEqual(matching_number(path(n)).size, n // 2)
            self.assertEqual(induced_matching_number(path(n)).size, (n + 1) // 3)
        for n in range(3, 10):
            self.assertEqual(matching_number(cycle(n)).size, n // 2)
            self.assertEqual(induced_matching_number(cycle(n)).size, n // 3)

    def test_lexicographic_witnesses(self):
        self.assertEqual(matching_number(path(4)).witness.edges, ((0, 1), (2, 3)))
        self.assertEqual(induced_matching_number(path(5)).witness.edges, ((0, 1), (3, 4)))
        self.assertEqual(induced_matching_number(star(6)).witness.edges, ((0, 1),))

    def test_edgeless_graphs(self):
        self.assertEqual(matching_number(Graph.empty(3)), (0, EdgeSet()))
        self.assertEqual(induced_matching_number(Graph.empty(1)).size, 0)

    def test_matches_networkx(self):
        rng = random.Random(23)
        for _ in range(40):
            G = random_graph(rng, rng.randint(2, 11))
            g = nx.Graph()
            g.add_nodes_from(range(G.n))
            g.add_edges_from(G.edges())
            result = matching_number(G)
            self.assertEqual(result.size, len(nx.max_weight_matching(g, maxcardinality=True)))
            self.assertEqual(len(result.witness), result.size)
            self.assertTrue(result.witness.is_matching(G))

    def test_induced_matches_brute_force(self):
        rng = random.Random(29)
        for _ in range(40):
            G = random_graph(rng, rng.randint(2, 8), 0.35)
            result = induced_matching_number(G)
            self.assertEqual(result.size, brute_force_induced_matching(G))
            self.assertTrue(result.witness.is_induced_matching(G))


class CycleSaturationTest(SimpleTestCase):
    def test_triangle_corner_left_free(self):
        G = pendant_triangle(1)
        witness = induced_matching_number(G).witness
        self.assertEqual(witness.edges, ((0, 1),))
        self.assertEqual(unsaturated_cycle_vertex(G, witness), 2)
        self.assertEqual(unsaturated_cycle_vertices(G, witness), (2,))

    def test_acyclic_and_lowest_free_vertex(self):
        self.assertIsNone(unsaturated_cycle_vertex(path(4), EdgeSet.of([(0, 1)])))
        self.assertEqual(unsaturated_cycle_vertex(cycle(3), EdgeSet.of([(0, 1)])), 2)
        self.assertEqual(unsaturated_cycle_vertex(cycle(4), EdgeSet()), 0)

    def test_requires_induced_matching(self):
        with self.assertRaises(InvalidGraphError):
            unsaturated_cycle_vertex(path(5), EdgeSet.of([(0, 1), (2, 3)]))
        with self.assertRaises(InvalidGraphError):
            unsaturated_cycle_vertices(cycle(4), EdgeSet.of([(0, 2)]))


class PendantEdgeTest(SimpleTestCase):
    def test_pendant_edges(self):
        self.assertEqual(pendant_edges(path(4)), ((0, 1), (2, 3)))
        self.assertEqual(pendant_edges(cycle(5)), ())
        self.assertEqual(pendant_edges(path(2)), ((0, 1),))

    def test_pendant_induced_matching(self):
        self.assertEqual(find_pendant_induced_matching(path(5), 2).edges, ((0, 1), (3, 4)))
        self.assertIsNone(find_pendant_induced_matching(path(5), 3))
        self.assertIsNone(find_pendant_induced_matching(star(5), 2))
        self.assertEqual(find_pendant_induced_matching(cycle(4), 0).edges, ())
