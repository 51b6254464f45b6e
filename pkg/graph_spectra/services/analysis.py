"""
Full report on one graph: spectrum, matching numbers, cyclomatic number,
diameter and every classification that applies, each witness re-verified.
"""

import logging
from dataclasses import dataclass, field

from .families import (
    classify_bound_equality, classify_hub, classify_star_hub, classify_tree_deficit,
    verify_classification,
)
from .graph_core import (
    connected_components, cyclomatic_number, diameter, emit_graph6, graph6_max_order, is_connected,
    is_tree,
)
from .matching import induced_matching_number, matching_number
from .spectral import spectrum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassificationRecord:
    recognizer: str
    eigenvalue: object
    classification: object
    verified: bool


@dataclass(frozen=True)
class GraphAnalysis:
    graph: object
    graph6: str
    spectrum: object
    matching: object
    induced_matching: object
    cyclomatic: int
    diameter: object
    classifications: tuple = ()
    components: tuple = field(default_factory=tuple)
    isolated: int = 0

    @property
    def connected(self):
        return self.diameter is not None


def _record(recognizer, G, value, classification):
    verified = verify_classification(G, value, classification)
    if not verified:
        logger.warning("%s witness for %s failed re-verification", recognizer, G)
    return ClassificationRecord(recognizer, value, classification, verified)


def _classifications(G, spec, beta_prime, diam):
    records = [_record('bound_equality', G, None, classify_bound_equality(G))]
    for value in spec.nonzero_values():
        if is_tree(G):
            records.append(_record('tree_deficit', G, value, classify_tree_deficit(G, value)))
        if diam >= 4 and beta_prime >= 3:
            records.append(_record('hub', G, value, classify_hub(G, value)))
        if beta_prime >= 3:
            records.append(_record('star_hub', G, value, classify_star_hub(G, value)))
    return tuple(records)


def analyze_graph(G):
    """Analyse G; a disconnected graph also gets one nested analysis per component."""
    spec = spectrum(G)
    matching = matching_number(G)
    induced = induced_matching_number(G)
    graph6 = emit_graph6(G) if G.n <= graph6_max_order() else ''
    if is_connected(G):
        diam = diameter(G)
        return GraphAnalysis(
            G, graph6, spec, matching, induced, cyclomatic_number(G), diam,
            _classifications(G, spec, induced.size, diam),
        )
    split = connected_components(G)
    parts = [part.graph for part in split.nontrivial]
    components = tuple(analyze_graph(part) for part in parts)
    logger.info("Analysed %s component by component (%d nontrivial, %d isolated)",
                G, len(parts), len(split.isolated))
    return GraphAnalysis(G, graph6, spec, matching, induced, cyclomatic_number(G), None,
                         components=components, isolated=len(split.isolated))
