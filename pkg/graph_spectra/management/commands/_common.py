"""
Shared plumbing for the toolkit commands: one graph input source per run,
exact eigenvalue options and JSON output through the serializers.
"""

import json
import logging
import sys
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from ...exceptions import SpectraError
from ...serializers import EigenvalueField
from ...services.enumeration import stream_graph6
from ...services.families import build_named
from ...services.graph_core import parse_edge_list, parse_graph6

logger = logging.getLogger(__name__)

FORMATS = ('json', 'csv', 'text')


def dump_json(data):
    return json.dumps(data, sort_keys=True, indent=2)


def validation_message(error):
    """Flatten a DRF ValidationError into one line."""
    detail = error.detail
    if isinstance(detail, dict):
        return '; '.join(f"{key}: {' '.join(str(m) for m in messages)}" for key, messages in detail.items())
    if isinstance(detail, list):
        return ' '.join(str(m) for m in detail)
    return str(detail)


def parse_eigenvalue(text):
    try:
        return EigenvalueField().to_internal_value(text)
    except serializers.ValidationError as error:
        raise CommandError(f"Invalid eigenvalue {text!r}: {validation_message(error)}") from None


def _read(path):
    try:
        return Path(path).read_text(encoding='utf-8')
    except OSError as error:
        raise CommandError(f"Could not read {path}: {error}") from None


class GraphCommand(BaseCommand):
    """Base class for commands that read graphs from exactly one source."""

    default_format = 'json'
    stealth_options = ('stdin',)

    def add_input_arguments(self, parser):
        source = parser.add_mutually_exclusive_group()
        source.add_argument('--graph6', help='One graph in graph6 format')
        source.add_argument('--graph6-file', help='File with one graph6 line per graph')
        source.add_argument('--edge-list', help="File with an 'n m' header and one 'u v' edge per line")
        source.add_argument('--construct', help="Named constructor such as 'cycle:5' or 'pendant_triangle:2'")

    def add_format_argument(self, parser, choices=FORMATS):
        parser.add_argument('--format', choices=choices, default=self.default_format)

    def read_graphs(self, options):
        """Every graph named by the input options; graph6 lines on stdin when none is given."""
        try:
            if options.get('graph6'):
                return [parse_graph6(options['graph6'])]
            if options.get('graph6_file'):
                return list(stream_graph6(_read(options['graph6_file']).splitlines()))
            if options.get('edge_list'):
                return [parse_edge_list(_read(options['edge_list']))]
            if options.get('construct'):
                return [build_named(options['construct'])]
            stdin = options.get('stdin') or sys.stdin
            graphs = list(stream_graph6(stdin.read().splitlines()))
        except SpectraError as error:
            raise CommandError(str(error)) from None
        if not graphs:
            raise CommandError("No input graph: pass --graph6, --graph6-file, --edge-list or --construct, or pipe graph6 lines")
        return graphs

    def read_graph(self, options):
        graphs = self.read_graphs(options)
        if len(graphs) != 1:
            raise CommandError(f"Expected exactly one graph, got {len(graphs)}")
        return graphs[0]
