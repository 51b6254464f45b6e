import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase


def run(*args, **kwargs):
    out = StringIO()
    call_command(*args, stdout=out, stderr=StringIO(), **kwargs)
    return out.getvalue()


class AnalyzeCommandTest(SimpleTestCase):
    def test_pendant_triangle_json(self):
        data = json.loads(run('analyze', '--construct', 'pendant_triangle:2'))
        self.assertEqual(data['n'], 9)
        self.assertEqual([entry['mult'] for entry in data['spectrum']], [2, 1, 3, 2, 1])
        self.assertEqual(data['beta_prime']['size'], 1)
        self.assertEqual(data['cyclomatic'], 1)
        self.assertEqual(data['classifications'][0]['classification']['tag'], 'pendant_triangle')

    def test_graph6_star(self):
        data = json.loads(run('analyze', '--graph6', 'D?{'))
        self.assertEqual(data['edges'], [[0, 4], [1, 4], [2, 4], [3, 4]])
        self.assertEqual([(entry['value']['lo'], entry['mult']) for entry in data['spectrum']],
                         [('-2', 1), ('0', 3), ('2', 1)])

    def test_construct_output_pipes_into_analyze(self):
        graph6 = run('construct', 'cycle:5').strip()
        self.assertEqual(graph6, 'Dhc')
        piped = json.loads(run('analyze', stdin=StringIO(graph6 + '\n')))
        direct = json.loads(run('analyze', '--construct', 'pentagon'))
        self.assertEqual(piped, direct)

    def test_several_graphs_give_a_list(self):
        with tempfile.TemporaryDirectory() as directory:
            source = Path(directory) / 'graphs.g6'
            source.write_text('Bw\n\nDhc\n')
            data = json.loads(run('analyze', '--graph6-file', str(source)))
        self.assertEqual([entry['graph6'] for entry in data], ['Bw', 'Dhc'])

    def test_edge_list_and_text_output(self):
        with tempfile.TemporaryDirectory() as directory:
            source = Path(directory) / 'p5.txt'
            source.write_text('5 4\n0 1\n1 2\n2 3\n3 4\n')
            text = run('analyze', '--edge-list', str(source), '--format', 'text')
        self.assertIn("beta': 2  witness: 0-1 3-4", text)
        self.assertIn('connected: yes  diameter: 4', text)
        self.assertIn('tree_deficit at 1: caterpillar (verified)', text)

    def test_csv_output(self):
        lines = run('analyze', '--construct', 'cycle:5', '--format', 'csv').splitlines()
        self.assertEqual(lines[0], 'graph6,eigenvalue,multiplicity,approx')
        self.assertEqual(len(lines), 4)
        self.assertTrue(lines[-1].startswith('Dhc,2,1,'))

    def test_disconnected_text_output(self):
        text = run('analyze', '--graph6', 'Cg', '--format', 'text')
        self.assertIn('connected: no', text)
        self.assertIn('component 1:', text)

    def test_bad_input(self):
        with self.assertRaisesMessage(CommandError, 'graph6'):
            run('analyze', '--graph6', 'A!')
        with self.assertRaisesMessage(CommandError, 'No input graph'):
            run('analyze', stdin=StringIO(''))
        with self.assertRaises(CommandError):
            run('analyze', '--graph6-file', '/nonexistent/graphs.g6')


class ConstructCommandTest(SimpleTestCase):
    def test_formats(self):
        self.assertEqual(run('construct', 'path:3', '--format', 'edges'), '3 2\n0 1\n1 2\n')
        self.assertEqual(run('construct', 'path:2').strip(), 'A_')

    def test_unknown_constructor(self):
        with self.assertRaisesMessage(CommandError, 'Unknown constructor'):
            run('construct', 'petersen')


class StarSetCommandTest(SimpleTestCase):
    def test_pentagon_golden(self):
        data = json.loads(run('starset', '--construct', 'cycle:5', '--lambda', 'poly:-1,1,1;interval:0,1'))
        self.assertEqual(data['multiplicity'], 2)
        self.assertEqual(len(data['vertices']), 2)
        self.assertTrue(data['verified'])
        self.assertEqual(data['eigenvalue']['poly'], ['-1', '1', '1'])

    def test_text_output(self):
        self.assertEqual(run('starset', '--construct', 'star:5', '--lambda', '2', '--format', 'text').strip(), '0')

    def test_errors(self):
        with self.assertRaisesMessage(CommandError, 'Not an eigenvalue'):
            run('starset', '--construct', 'path:4', '--lambda', '3')
        with self.assertRaisesMessage(CommandError, 'Invalid eigenvalue'):
            run('starset', '--construct', 'path:4', '--lambda', '1.5')


class EnumerateCommandTest(SimpleTestCase):
    def test_counts(self):
        self.assertEqual(run('enumerate', '--trees', '8', '--count').strip(), '23')
        self.assertEqual(run('enumerate', '--connected', '5', '--count').strip(), '21')

    def test_lines(self):
        lines = run('enumerate', '--connected', '4').split()
        self.assertEqual(len(lines), 6)
        self.assertEqual(len(set(lines)), 6)

    def test_range(self):
        with self.assertRaises(CommandError):
            run('enumerate', '--trees', '20')


class VerifyCommandTest(SimpleTestCase):
    SMALL = ('--max-n', '4', '--trees-max-n', '6', '--caterpillar-max-n', '6', '--trials', '5',
             '--hub-positives', '2', '--star-hub-positives', '1')

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.addCleanup(self.directory.cleanup)
        self.output = Path(self.directory.name) / 'report.json'

    def test_small_run(self):
        data = json.loads(run('verify', *self.SMALL, '--output', str(self.output), '--format', 'json'))
        self.assertEqual(data['violations'], 0)
        self.assertEqual(data['notes'], 1)
        self.assertEqual(data['bounds']['connected_max_n'], 4)
        saved = json.loads(self.output.read_text())
        self.assertEqual(saved['counters'], data['counters'])

    def test_summary_csv_and_pdf(self):
        csv_path = Path(self.directory.name) / 'findings.csv'
        pdf_path = Path(self.directory.name) / 'out' / 'report.pdf'
        text = run('verify', '--checks', 'closed_spectra,path_identities', '--output', str(self.output),
                   '--csv', str(csv_path), '--pdf', str(pdf_path))
        self.assertIn('0 violations, 1 notes', text)
        self.assertIn('note: closed_spectra on Bw', text)
        self.assertEqual(len(csv_path.read_text().splitlines()), 2)
        self.assertTrue(pdf_path.read_bytes().startswith(b'%PDF'))

    def test_external_graphs(self):
        source = Path(self.directory.name) / 'graphs.g6'
        source.write_text('Dhc\nD?{\n')
        data = json.loads(run('verify', '--graph6-file', str(source), '--checks', 'bound,nullity',
                              '--output', str(self.output), '--format', 'json'))
        self.assertEqual(data['counters']['bound']['graphs'], 2)
        self.assertEqual(data['counters']['nullity']['graphs'], 1)
        self.assertEqual(data['bounds']['external_graphs'], 2)

    def test_invalid_options(self):
        with self.assertRaisesMessage(CommandError, 'Unknown checks'):
            run('verify', '--checks', 'bound,theorem_x', '--output', str(self.output))
        with self.assertRaisesMessage(CommandError, '--include-n9'):
            run('verify', '--max-n', '9', '--output', str(self.output))
        with self.assertRaises(CommandError):
            run('verify', '--workers', '0', '--output', str(self.output))

    def test_unwritable_report(self):
        missing = Path(self.directory.name) / 'missing' / 'spectra-command-salvage.json'
        with self.assertRaisesMessage(CommandError, 'partial report saved to'):
            run('verify', '--checks', 'path_identities', '--output', str(missing))
        salvage = Path(tempfile.gettempdir()) / 'spectra-command-salvage.json.salvage'
        if salvage.exists():
            salvage.unlink()
