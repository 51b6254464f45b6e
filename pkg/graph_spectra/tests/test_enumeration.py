import networkx as nx
from django.test import SimpleTestCase

from graph_spectra.exceptions import GraphFormatError, PreconditionError
from graph_spectra.services.enumeration import (
    brute_force_connected_graphs, enumerate_connected_graphs, enumerate_trees, prufer_trees,
    stream_graph6,
)
from graph_spectra.services.families import cycle, path
from graph_spectra.services.graph_core import canonical_form, is_connected, is_tree

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


class ConnectedGraphsTest(SimpleTestCase):
    def test_counts(self):
        for n, expected in CONNECTED_COUNTS.items():
            graphs = list(enumerate_connected_graphs(n))
            self.assertEqual(len(graphs), expected, n)
            self.assertEqual(len({canonical_form(G) for G in graphs}), expected, n)
            self.assertTrue(all(G.n == n and is_connected(G) for G in graphs))

    def test_matches_brute_force(self):
        for n in range(1, 6):
            expected = {canonical_form(G) for G in brute_force_connected_graphs(n)}
            self.assertEqual({canonical_form(G) for G in enumerate_connected_graphs(n)}, expected)

    def test_range(self):
        with self.assertRaises(PreconditionError):
            list(enumerate_connected_graphs(0))
        with self.assertRaises(PreconditionError):
            list(enumerate_connected_graphs(11))


class TreesTest(SimpleTestCase):
    def test_counts(self):
        for n, expected in TREE_COUNTS.items():
            trees = list(enumerate_trees(n))
            self.assertEqual(len(trees), expected, n)
            self.assertEqual(len({canonical_form(T) for T in trees}), expected, n)
            self.assertTrue(all(T.n == n and is_tree(T) for T in trees))

    def test_matches_pruefer_oracle(self):
        for n in range(1, 8):
            expected = {canonical_form(T) for T in prufer_trees(n)}
            self.assertEqual({canonical_form(T) for T in enumerate_trees(n)}, expected)

    def test_matches_networkx_counts(self):
        for n in range(2, 11):
            self.assertEqual(sum(1 for _ in nx.nonisomorphic_trees(n)), TREE_COUNTS[n])

    def test_range(self):
        with self.assertRaises(PreconditionError):
            list(enumerate_trees(0))
        with self.assertRaises(PreconditionError):
            list(enumerate_trees(15))


class Graph6StreamTest(SimpleTestCase):
    def test_blank_lines_are_skipped(self):
        graphs = list(stream_graph6(['Bw\n', '\n', '  ', 'Ch\n']))
        self.assertEqual(graphs, [cycle(3), path(4)])

    def test_errors_carry_line_numbers(self):
        stream = stream_graph6(['Bw', '', 'A!'])
        self.assertEqual(next(stream), cycle(3))
        with self.assertRaises(GraphFormatError) as ctx:
            next(stream)
        self.assertEqual((ctx.exception.line, ctx.exception.column), (3, 2))
