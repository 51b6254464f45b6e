from django.core.management.base import BaseCommand, CommandError
from tqdm import tqdm

from ...exceptions import SpectraError
from ...services.enumeration import enumerate_connected_graphs, enumerate_trees
from ...services.graph_core import emit_graph6


class Command(BaseCommand):
    help = 'Stream graph6 lines of all connected graphs or all trees of one order, up to isomorphism'

    def add_arguments(self, parser):
        family = parser.add_mutually_exclusive_group(required=True)
        family.add_argument('--connected', type=int, metavar='N', help='Connected graphs on N vertices (1..10)')
        family.add_argument('--trees', type=int, metavar='N', help='Trees on N vertices (1..14)')
        parser.add_argument('--count', action='store_true', help='Print only the number of graphs')
        parser.add_argument('--progress', action='store_true', help='Show a progress bar on stderr')

    def handle(self, *args, **options):
        if options.get('connected') is not None:
            stream = enumerate_connected_graphs(options['connected'])
        else:
            stream = enumerate_trees(options['trees'])
        count = 0
        try:
            for G in tqdm(stream, unit='graph', disable=not options['progress']):
                count += 1
                if not options['count']:
                    self.stdout.write(emit_graph6(G))
        except SpectraError as error:
            raise CommandError(str(error)) from None
        if options['count']:
            self.stdout.write(str(count))
