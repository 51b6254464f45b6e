import logging

from django.core.management.base import CommandError

from ...exceptions import NotAnEigenvalueError, SpectraError
from ...serializers import AlgebraicNumberSerializer
from ...services.spectral import find_star_set, is_star_set
from ._common import GraphCommand, dump_json, parse_eigenvalue

logger = logging.getLogger(__name__)


class Command(GraphCommand):
    help = 'Find the lexicographically first star set of an eigenvalue'

    def add_arguments(self, parser):
        self.add_input_arguments(parser)
        parser.add_argument('--lambda', dest='eigenvalue', required=True,
                            help="Exact eigenvalue: 'p/q' or 'poly:c0,c1,...;interval:lo,hi'")
        self.add_format_argument(parser, choices=('json', 'text'))

    def handle(self, *args, **options):
        G = self.read_graph(options)
        value = parse_eigenvalue(options['eigenvalue'])
        try:
            star_set = find_star_set(G, value)
        except NotAnEigenvalueError as error:
            raise CommandError(f"Not an eigenvalue: {error}") from None
        except SpectraError as error:
            raise CommandError(str(error)) from None

        vertices = list(star_set.vertices.as_tuple())
        if not is_star_set(G, vertices, value):
            raise CommandError(f"Star set {vertices} failed re-verification")
        logger.info("Star set of size %d for %s", len(vertices), value)

        if options['format'] == 'json':
            self.stdout.write(dump_json({
                'eigenvalue': AlgebraicNumberSerializer(value).data,
                'multiplicity': len(vertices),
                'vertices': vertices,
                'verified': True,
            }))
        else:
            self.stdout.write(' '.join(str(v) for v in vertices))
