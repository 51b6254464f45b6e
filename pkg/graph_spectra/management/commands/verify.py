import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from ...conf import toolkit_setting
from ...exceptions import ReportWriteError, SpectraError
from ...serializers import VerifyOptionsSerializer
from ...services.harness import SuiteConfig, render_json, run_suite, save_report, write_csv
from ...services.report_pdf import VerificationReportGenerator
from ._common import validation_message

logger = logging.getLogger(__name__)

OPTION_NAMES = (
    'max_n', 'trees_max_n', 'caterpillar_max_n', 'checks', 'seed', 'workers', 'trials',
    'hub_positives', 'star_hub_positives', 'include_n9',
)


class Command(BaseCommand):
    help = 'Check every eigenvalue multiplicity claim exhaustively and write a report; exits 1 on any violation'

    def add_arguments(self, parser):
        parser.add_argument('--max-n', type=int, help='Largest order of the connected-graph stream (9 needs --include-n9)')
        parser.add_argument('--include-n9', action='store_true', help='Allow --max-n 9')
        parser.add_argument('--trees-max-n', type=int, help='Largest order of the tree stream')
        parser.add_argument('--caterpillar-max-n', type=int, help='Largest tree order for the caterpillar check')
        parser.add_argument('--checks', help='Comma-separated check names (default: all)')
        parser.add_argument('--seed', type=int, help='Seed for the random bridge trials')
        parser.add_argument('--workers', type=int, help='Worker processes for the graph streams')
        parser.add_argument('--trials', type=int, help='Number of random bridge trials')
        parser.add_argument('--hub-positives', type=int, help='Number of constructed hub instances')
        parser.add_argument('--star-hub-positives', type=int, help='Number of constructed star hub instances')
        parser.add_argument('--graph6-file', help='Check graphs from this file instead of the internal streams')
        parser.add_argument('--output', help='JSON report path (default: SPECTRA REPORT_PATH)')
        parser.add_argument('--csv', help='Also write the findings as CSV to this path')
        parser.add_argument('--pdf', help='Also render the report as PDF to this path')
        parser.add_argument('--format', choices=('json', 'csv', 'text'), default='text',
                            help='What to print on stdout')
        parser.add_argument('--progress', action='store_true', help='Show a progress bar on stderr')
        parser.add_argument('--record-passes', action='store_true', help='Keep a finding for every passing instance')

    def build_config(self, options):
        raw = {name: options[name] for name in OPTION_NAMES if options.get(name) is not None}
        serializer = VerifyOptionsSerializer(data=raw)
        try:
            serializer.is_valid(raise_exception=True)
        except serializers.ValidationError as error:
            raise CommandError(f"Invalid options: {validation_message(error)}") from None
        data = serializer.validated_data

        graph6_lines = ()
        if options.get('graph6_file'):
            try:
                with open(options['graph6_file'], encoding='utf-8') as handle:
                    graph6_lines = tuple(handle.read().splitlines())
            except OSError as error:
                raise CommandError(f"Could not read {options['graph6_file']}: {error}") from None

        overrides = dict(
            connected_max_n=data.get('max_n'),
            trees_max_n=data.get('trees_max_n'),
            caterpillar_max_n=data.get('caterpillar_max_n'),
            seed=data.get('seed'),
            workers=data.get('workers'),
            bridge_trials=data.get('trials'),
            hub_positives=data.get('hub_positives'),
            star_hub_positives=data.get('star_hub_positives'),
            checks=data.get('checks'),
            progress=options.get('progress') or None,
            record_passes=options.get('record_passes') or None,
            graph6_lines=graph6_lines or None,
        )
        return SuiteConfig.from_settings(**overrides)

    def handle(self, *args, **options):
        config = self.build_config(options)
        try:
            report = run_suite(config)
        except SpectraError as error:
            raise CommandError(str(error)) from None

        output = options.get('output') or toolkit_setting('REPORT_PATH')
        try:
            save_report(report, output)
            if options.get('csv'):
                try:
                    with open(options['csv'], 'w', encoding='utf-8', newline='') as handle:
                        write_csv(report, handle)
                except OSError as error:
                    raise ReportWriteError(f"Could not write CSV to {options['csv']}: {error}") from error
            if options.get('pdf'):
                VerificationReportGenerator().generate_report(report, options['pdf'])
        except ReportWriteError as error:
            raise CommandError(str(error)) from None

        if options['format'] == 'json':
            self.stdout.write(render_json(report))
        elif options['format'] == 'csv':
            write_csv(report, self.stdout)
        else:
            self.write_summary(report, output)

        if report.violation_count:
            raise CommandError(f"{report.violation_count} violation(s); see {output}", returncode=1)

    def write_summary(self, report, output):
        self.stdout.write(f"{'check':<22}{'graphs':>9}{'eigenvalues':>13}{'passed':>9}{'failed':>8}{'skipped':>9}")
        for check, counters in report.counters.items():
            self.stdout.write(
                f"{check:<22}{counters.graphs:>9}{counters.eigenvalues:>13}{counters.passed:>9}"
                f"{counters.failed:>8}{counters.skipped:>9}")
        for finding in report.findings:
            self.stdout.write(f"{finding.severity}: {finding.check} on {finding.graph6}: "
                              f"expected {finding.expected}, observed {finding.observed}")
        self.stdout.write(f"{report.violation_count} violations, {report.note_count} notes, "
                          f"{report.elapsed_seconds}s; report written to {output}")
