import csv
import logging

from django.core.management.base import CommandError

from ...exceptions import SpectraError
from ...serializers import GraphAnalysisSerializer
from ...services.analysis import analyze_graph
from ...services.exact_algebra import to_float
from ._common import GraphCommand, dump_json

logger = logging.getLogger(__name__)


def _edges_text(edge_set):
    return ' '.join(f"{u}-{v}" for u, v in edge_set) or '(none)'


class Command(GraphCommand):
    help = 'Spectrum, matching numbers, cyclomatic number, diameter and classifications of a graph'

    def add_arguments(self, parser):
        self.add_input_arguments(parser)
        self.add_format_argument(parser)

    def handle(self, *args, **options):
        graphs = self.read_graphs(options)
        try:
            analyses = [analyze_graph(G) for G in graphs]
        except SpectraError as error:
            raise CommandError(str(error)) from None
        logger.info("Analysed %d graph(s)", len(analyses))

        if options['format'] == 'json':
            data = GraphAnalysisSerializer(analyses, many=True).data
            self.stdout.write(dump_json(data[0] if len(data) == 1 else data))
        elif options['format'] == 'csv':
            writer = csv.writer(self.stdout, lineterminator='\n')
            writer.writerow(['graph6', 'eigenvalue', 'multiplicity', 'approx'])
            for analysis in analyses:
                for value, mult in analysis.spectrum:
                    writer.writerow([analysis.graph6, str(value), mult, f"{to_float(value):.12g}"])
        else:
            for index, analysis in enumerate(analyses):
                if index:
                    self.stdout.write('')
                self.write_text(analysis)

    def write_text(self, analysis, indent=''):
        G = analysis.graph

        def write(line):
            self.stdout.write(indent + line)

        write(f"graph6: {analysis.graph6 or '(too large for graph6)'}")
        write(f"n: {G.n}  m: {G.edge_count}")
        if analysis.connected:
            write(f"connected: yes  diameter: {analysis.diameter}")
        else:
            write(f"connected: no  nontrivial components: {len(analysis.components)}  isolated: {analysis.isolated}")
        write(f"beta: {analysis.matching.size}  witness: {_edges_text(analysis.matching.witness)}")
        write(f"beta': {analysis.induced_matching.size}  witness: {_edges_text(analysis.induced_matching.witness)}")
        write(f"c: {analysis.cyclomatic}")
        write("spectrum:")
        for value, mult in analysis.spectrum:
            write(f"  {value}  mult {mult}  (approx {to_float(value):.6f})")
        if analysis.classifications:
            write("classifications:")
            for record in analysis.classifications:
                at = '' if record.eigenvalue is None else f" at {record.eigenvalue}"
                status = 'verified' if record.verified else 'NOT VERIFIED'
                write(f"  {record.recognizer}{at}: {record.classification.tag} ({status})")
        for number, component in enumerate(analysis.components, start=1):
            write(f"component {number}:")
            self.write_text(component, indent + '  ')
