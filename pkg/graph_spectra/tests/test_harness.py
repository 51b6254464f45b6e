import csv
import io
import json
import tempfile
from dataclasses import replace
from pathlib import Path

from django.test import SimpleTestCase, override_settings

from graph_spectra.exceptions import PreconditionError, ReportWriteError
from graph_spectra.services.exact_algebra import algebraic_from_rational
from graph_spectra.services.families import Classification, classify_hub, cycle, path, star
from graph_spectra.services.graph_core import emit_graph6
from graph_spectra.services.harness import (
    ALL_CHECKS, CONNECTED_CHECKS, CSV_COLUMNS, SEVERITY_NOTE, SEVERITY_PASS, TREE_CHECKS, CheckCounters,
    GraphProfile, SuiteConfig, VerificationFinding, _Instance, check_bound, hub_positive_instances,
    render_json, run_graph_checks, run_suite, save_report, write_csv,
)
from graph_spectra.services.spectral import eigenvalue_multiplicity

SMALL = SuiteConfig(
    connected_max_n=5, trees_max_n=8, caterpillar_max_n=8,
    bridge_trials=10, hub_positives=3, star_hub_positives=2,
)


class SuiteConfigTest(SimpleTestCase):
    @override_settings(SPECTRA={'CONNECTED_MAX_N': 6, 'SEED': 4})
    def test_from_settings(self):
        config = SuiteConfig.from_settings(trees_max_n=7, workers=None)
        self.assertEqual(config.connected_max_n, 6)
        self.assertEqual(config.seed, 4)
        self.assertEqual(config.trees_max_n, 7)
        self.assertEqual(config.workers, 1)

    def test_bounds(self):
        self.assertEqual(list(SMALL.bounds())[:3], ['connected_max_n', 'trees_max_n', 'caterpillar_max_n'])
        self.assertEqual(SMALL.bounds()['external_graphs'], 0)
        self.assertTrue(SMALL.wants('bound'))
        self.assertFalse(replace(SMALL, checks=('nullity',)).wants('bound'))


class InstanceTest(SimpleTestCase):
    def test_counters(self):
        counters = CheckCounters()
        ok = _Instance('bound', 'Bw', record_passes=True)
        ok.close(counters)
        bad = _Instance('bound', 'Bw', record_passes=True)
        bad.expect(False, None, 'm <= 1', 2)
        bad.expect(True, None, 'm <= 1', 1)
        findings = bad.close(counters)
        skipped = _Instance('bound', 'Bw', record_passes=False)
        skipped.skip()
        skipped.close(counters)
        self.assertEqual((counters.graphs, counters.passed, counters.failed, counters.skipped), (3, 1, 1, 1))
        self.assertEqual(counters.violations, 1)
        self.assertEqual(findings[0].expected, 'm <= 1')
        self.assertEqual(ok.findings[0].severity, SEVERITY_PASS)

    def test_finding_order(self):
        a = VerificationFinding('bound', 'Bw', None, '', '', SEVERITY_NOTE)
        b = VerificationFinding('bound', 'Bw', algebraic_from_rational(2), '', '', SEVERITY_NOTE)
        c = VerificationFinding('bridge', '@', None, '', '', SEVERITY_NOTE)
        self.assertEqual(sorted([c, b, a], key=VerificationFinding.sort_key), [a, b, c])


class GraphChecksTest(SimpleTestCase):
    def test_pentagon_attains_bound(self):
        out = _Instance('bound', 'Dhc', record_passes=False)
        check_bound(GraphProfile(cycle(5)), out)
        self.assertEqual(out.findings, [])
        self.assertEqual(out.eigenvalues, 3)

    def test_worker_entry_point(self):
        counters, findings = run_graph_checks((CONNECTED_CHECKS, path(6), True, 12))
        self.assertEqual(set(counters), set(CONNECTED_CHECKS))
        self.assertTrue(all(f.severity == SEVERITY_PASS for f in findings))
        self.assertEqual(counters['hub'].passed + counters['hub'].skipped, 1)

    def test_tree_checks_on_a_star(self):
        counters, findings = run_graph_checks((TREE_CHECKS, star(6), False, 12))
        self.assertEqual(findings, [])
        self.assertEqual(counters['pendant_witness'].skipped, 1)
        self.assertEqual(counters['nullity'].passed, 1)


class HubPositivesTest(SimpleTestCase):
    def test_round_robin_instances_are_hubs(self):
        instances = list(hub_positive_instances(5))
        self.assertEqual(len(instances), 5)
        self.assertEqual(len({str(value) for value, _ in instances}), 5)
        for value, G in instances:
            self.assertEqual(classify_hub(G, value).tag, Classification.HUB)
            self.assertGreaterEqual(eigenvalue_multiplicity(G, value), 2)


class RunSuiteTest(SimpleTestCase):
    def test_small_run(self):
        report = run_suite(SMALL)
        self.assertEqual(report.violation_count, 0)
        self.assertEqual(report.note_count, 1)
        note = next(f for f in report.findings if f.severity == SEVERITY_NOTE)
        self.assertEqual((note.check, note.graph6), ('closed_spectra', 'Bw'))
        self.assertEqual(set(report.counters), set(ALL_CHECKS))
        bound = report.counters['bound']
        self.assertEqual(bound.graphs, 1 + 1 + 2 + 6 + 21)
        self.assertEqual(bound.passed + bound.failed + bound.skipped, bound.graphs)
        self.assertEqual(report.counters['nullity'].graphs, 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23)

    def test_tree_only_run(self):
        report = run_suite(replace(SMALL, checks=('nullity', 'caterpillar_simple')))
        self.assertEqual(set(report.counters), {'nullity', 'caterpillar_simple'})
        self.assertEqual(report.findings, [])

    def test_worker_count_does_not_change_the_report(self):
        config = replace(SMALL, connected_max_n=4, trees_max_n=6,
                         checks=CONNECTED_CHECKS + TREE_CHECKS, record_passes=True)
        single = render_json(run_suite(config), include_timing=False)
        pooled = render_json(run_suite(replace(config, workers=2)), include_timing=False)
        self.assertEqual(single, pooled)

    def test_external_graphs(self):
        lines = (emit_graph6(cycle(5)) + '\n', emit_graph6(path(5)) + '\n', 'Ch\n')
        config = replace(SMALL, checks=('bound', 'nullity'), graph6_lines=lines)
        report = run_suite(config)
        self.assertEqual(report.counters['bound'].graphs, 3)
        self.assertEqual(report.counters['nullity'].graphs, 2)
        self.assertEqual(report.violation_count, 0)

    def test_unknown_check(self):
        with self.assertRaises(PreconditionError):
            run_suite(replace(SMALL, checks=('bound', 'no_such_check')))


class ReportFileTest(SimpleTestCase):
    def setUp(self):
        self.report = run_suite(replace(SMALL, checks=('closed_spectra',)))

    def test_json_shape(self):
        data = json.loads(render_json(self.report))
        self.assertEqual(data['checks'], ['closed_spectra'])
        self.assertEqual(data['notes'], 1)
        self.assertEqual(data['violations'], 0)
        self.assertIn('elapsed_seconds', data)
        self.assertNotIn('elapsed_seconds', json.loads(render_json(self.report, include_timing=False)))

    def test_csv(self):
        stream = io.StringIO()
        write_csv(self.report, stream)
        rows = list(csv.DictReader(io.StringIO(stream.getvalue())))
        self.assertEqual(len(rows), 1)
        self.assertEqual(tuple(rows[0]), CSV_COLUMNS)
        self.assertEqual(rows[0]['eigenvalue'], '3')

    def test_save_and_salvage(self):
        with tempfile.TemporaryDirectory() as directory:
            target = Path(directory) / 'report.json'
            self.assertEqual(save_report(self.report, target), target)
            self.assertEqual(json.loads(target.read_text())['notes'], 1)

            missing = Path(directory) / 'missing' / 'spectra-salvage-check.json'
            with self.assertRaises(ReportWriteError) as ctx:
                save_report(self.report, missing)
            salvage = Path(ctx.exception.salvage)
            try:
                self.assertEqual(salvage.name, 'spectra-salvage-check.json.salvage')
                self.assertEqual(json.loads(salvage.read_text())['notes'], 1)
            finally:
                salvage.unlink()
