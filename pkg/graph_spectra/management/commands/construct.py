from django.core.management.base import BaseCommand, CommandError

from ...exceptions import SpectraError
from ...services.families import build_named
from ...services.graph_core import emit_edge_list, emit_graph6


class Command(BaseCommand):
    help = "Print a named graph, e.g. 'pendant_triangle:2', 'caterpillar:2,0,3' or 'showcase'"

    def add_arguments(self, parser):
        parser.add_argument('name', help='Constructor name with optional comma-separated parameters')
        parser.add_argument('--format', choices=('graph6', 'edges'), default='graph6')

    def handle(self, *args, **options):
        try:
            G = build_named(options['name'])
            text = emit_graph6(G) if options['format'] == 'graph6' else emit_edge_list(G)
        except SpectraError as error:
            raise CommandError(str(error)) from None
        self.stdout.write(text.rstrip('\n'))
