"""
Verification suite.

Every check states one quantified claim about eigenvalue multiplicities and
tests it literally on each instance of a graph stream (connected graphs, trees)
or on a constructed family. Passing instances are only counted; findings keep
violations and notes. Results are independent of the worker count because the
pool preserves input order and findings are sorted before reporting.
"""

import csv
import json
import logging
import random
import tempfile
import time
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from functools import cached_property
from itertools import combinations_with_replacement
from pathlib import Path

from tqdm import tqdm

from .. import __version__
from ..conf import toolkit_setting
from ..exceptions import PreconditionError, ReportWriteError, TheoremViolation
from .exact_algebra import algebraic_from_rational, quadratic_surd
from .families import (
    classify_bound_equality, classify_hub, classify_star_hub, classify_tree_deficit, cycle,
    double_star, hub_catalogue, hub_graph, is_caterpillar, path, pendant_triangle, showcase_graph,
    star, star_hub_graph, star_join, verify_classification, Classification,
)
from .enumeration import enumerate_connected_graphs, enumerate_trees, stream_graph6
from .graph_core import (
    connected_components, cyclomatic_number, delete_vertices, diameter, emit_graph6,
    from_edge_list, graph6_max_order, is_connected, is_isomorphic, is_tree, join_bridge, vertex_cap,
)
from .matching import (
    find_pendant_induced_matching, induced_matching_number, matching_number,
    unsaturated_cycle_vertices,
)
from .spectral import eigenvalue_multiplicity, multiplicity_rational, pendant_induced_matching_witness, spectrum

logger = logging.getLogger(__name__)

CONNECTED_CHECKS = (
    'bound', 'diameter_bound', 'hub', 'unsaturated_deletion', 'matching_bound',
    'star_hub', 'interlacing', 'matching_order',
)
TREE_CHECKS = (
    'tree_deficit', 'pendant_witness', 'nullity', 'short_tree_equality',
    'short_tree_deletion', 'caterpillar_simple', 'unit_eigenvalue',
)
CONSTRUCTED_CHECKS = (
    'closed_spectra', 'path_identities', 'multiplicity_drop', 'star_join', 'bridge', 'showcase',
)
ALL_CHECKS = CONNECTED_CHECKS + TREE_CHECKS + CONSTRUCTED_CHECKS

SEVERITY_PASS = 'pass'
SEVERITY_VIOLATION = 'violation'
SEVERITY_NOTE = 'note'


@dataclass(frozen=True)
class SuiteConfig:
    connected_max_n: int = 8
    trees_max_n: int = 12
    caterpillar_max_n: int = 12
    checks: tuple = ALL_CHECKS
    seed: int = 0
    workers: int = 1
    bridge_trials: int = 200
    hub_positives: int = 50
    star_hub_positives: int = 20
    record_passes: bool = False
    progress: bool = False
    graph6_lines: tuple = ()

    @classmethod
    def from_settings(cls, **overrides):
        defaults = dict(
            connected_max_n=toolkit_setting('CONNECTED_MAX_N'),
            trees_max_n=toolkit_setting('TREES_MAX_N'),
            caterpillar_max_n=toolkit_setting('CATERPILLAR_MAX_N'),
            seed=toolkit_setting('SEED'),
            workers=toolkit_setting('WORKERS'),
            bridge_trials=toolkit_setting('BRIDGE_TRIALS'),
            hub_positives=toolkit_setting('HUB_POSITIVES'),
            star_hub_positives=toolkit_setting('STAR_HUB_POSITIVES'),
        )
        defaults.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**defaults)

    def wants(self, check):
        return check in self.checks

    def bounds(self):
        return OrderedDict([
            ('connected_max_n', self.connected_max_n),
            ('trees_max_n', self.trees_max_n),
            ('caterpillar_max_n', self.caterpillar_max_n),
            ('bridge_trials', self.bridge_trials),
            ('hub_positives', self.hub_positives),
            ('star_hub_positives', self.star_hub_positives),
            ('external_graphs', len(self.graph6_lines)),
        ])


@dataclass(frozen=True)
class VerificationFinding:
    check: str
    graph6: str
    eigenvalue: object
    expected: str
    observed: str
    severity: str
    detail: str = ''

    def sort_key(self):
        return (self.check, self.graph6, '' if self.eigenvalue is None else str(self.eigenvalue))


@dataclass
class CheckCounters:
    graphs: int = 0
    eigenvalues: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    violations: int = 0

    def merge(self, other):
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))


@dataclass
class SuiteReport:
    version: str
    config: SuiteConfig
    counters: dict = field(default_factory=dict)
    findings: list = field(default_factory=list)
    started_at: float = 0.0
    finished_at: float = 0.0

    @property
    def elapsed_seconds(self):
        return round(self.finished_at - self.started_at, 3)

    @property
    def violation_count(self):
        return sum(1 for f in self.findings if f.severity == SEVERITY_VIOLATION)

    @property
    def note_count(self):
        return sum(1 for f in self.findings if f.severity == SEVERITY_NOTE)

    def merge(self, counters, findings):
        for check, delta in counters.items():
            self.counters.setdefault(check, CheckCounters()).merge(delta)
        self.findings.extend(findings)


class _Instance:
    """Outcome collector for one check on one graph."""

    def __init__(self, check, graph6, record_passes):
        self.check = check
        self.graph6 = graph6
        self.record_passes = record_passes
        self.findings = []
        self.eigenvalues = 0
        self.failed = False
        self.skipped = False

    def violation(self, eigenvalue, expected, observed, detail=''):
        self.failed = True
        self.findings.append(VerificationFinding(
            self.check, self.graph6, eigenvalue, str(expected), str(observed), SEVERITY_VIOLATION, detail))
        logger.warning("%s violated on %s (eigenvalue %s): expected %s, observed %s %s",
                       self.check, self.graph6, eigenvalue, expected, observed, detail)

    def note(self, eigenvalue, expected, observed, detail=''):
        self.findings.append(VerificationFinding(
            self.check, self.graph6, eigenvalue, str(expected), str(observed), SEVERITY_NOTE, detail))

    def expect(self, condition, eigenvalue, expected, observed, detail=''):
        if not condition:
            self.violation(eigenvalue, expected, observed, detail)

    def skip(self):
        self.skipped = True

    def close(self, counters):
        counters.graphs += 1
        counters.eigenvalues += self.eigenvalues
        counters.violations += sum(1 for f in self.findings if f.severity == SEVERITY_VIOLATION)
        if self.failed:
            counters.failed += 1
        elif self.skipped:
            counters.skipped += 1
        else:
            counters.passed += 1
            if self.record_passes:
                self.findings.append(VerificationFinding(
                    self.check, self.graph6, None, 'holds', 'holds', SEVERITY_PASS))
        return self.findings


class GraphProfile:
    """Quantities shared by the checks on one graph, computed on first use."""

    def __init__(self, graph):
        self.graph = graph

    @cached_property
    def graph6(self):
        return emit_graph6(self.graph)

    @cached_property
    def spectrum(self):
        return spectrum(self.graph)

    @cached_property
    def nonzero(self):
        return self.spectrum.nonzero_entries()

    @cached_property
    def beta(self):
        return matching_number(self.graph).size

    @cached_property
    def matching(self):
        return induced_matching_number(self.graph)

    @cached_property
    def beta_prime(self):
        return self.matching.size

    @cached_property
    def cyclomatic(self):
        return cyclomatic_number(self.graph)

    @cached_property
    def connected(self):
        return is_connected(self.graph)

    @cached_property
    def diameter(self):
        return diameter(self.graph) if self.connected else None

    @cached_property
    def tree(self):
        return is_tree(self.graph)


def _m(G, value):
    return eigenvalue_multiplicity(G, value)


# Connected-graph checks
def check_bound(profile, out):
    """m <= beta' + c, with equality exactly on the three extremal families."""
    budget = profile.beta_prime + profile.cyclomatic
    attained = False
    for value, mult in profile.nonzero:
        out.eigenvalues += 1
        out.expect(mult <= budget, value, f"m <= {budget}", mult)
        attained = attained or mult == budget
    classification = classify_bound_equality(profile.graph)
    out.expect(attained == classification.is_extremal, None,
               f"equality attained: {classification.is_extremal}", f"equality attained: {attained}",
               f"classified as {classification.tag}")
    if classification.is_extremal:
        out.expect(verify_classification(profile.graph, None, classification), None,
                   'witness re-verifies', 'witness rejected', classification.tag)
    if classification.tag == Classification.SHORT_TREE:
        for value, mult in profile.nonzero:
            out.expect(mult == budget, value, f"m = {budget}", mult, 'short tree equality')


def check_diameter_bound(profile, out):
    if profile.diameter < 4:
        return out.skip()
    budget = profile.beta_prime + profile.cyclomatic - 1
    for value, mult in profile.nonzero:
        out.eigenvalues += 1
        out.expect(mult <= budget, value, f"m <= {budget}", mult)


def _hub_instance(profile, out, value, mult):
    target = profile.beta_prime + profile.cyclomatic - 1
    classification = classify_hub(profile.graph, value)
    out.expect((mult == target) == classification.is_extremal, value,
               f"m = beta' + c - 1 ({target}) iff hub form",
               f"m = {mult}, classified as {classification.tag}")
    if classification.is_extremal:
        out.expect(verify_classification(profile.graph, value, classification), value,
                   'witness re-verifies', 'witness rejected', 'hub')


def check_hub(profile, out):
    if profile.diameter < 4 or profile.beta_prime < 3:
        return out.skip()
    for value, mult in profile.nonzero:
        out.eigenvalues += 1
        _hub_instance(profile, out, value, mult)


def _unsaturated_instance(profile, out, value):
    G = profile.graph
    for x in unsaturated_cycle_vertices(G, profile.matching.witness):
        rest = delete_vertices(G, [x])
        H = rest.graph
        c_rest = cyclomatic_number(H)
        target = induced_matching_number(H).size + c_rest - 1
        m_rest = _m(H, value)
        out.expect(m_rest == target, value, f"m(G-{x}) = beta' + c - 1 = {target}", m_rest)
        out.expect(c_rest == profile.cyclomatic - 1, value, f"c(G-{x}) = {profile.cyclomatic - 1}", c_rest)
        parts = connected_components(H).nontrivial
        out.expect(len(parts) <= 2, value, f"at most two nontrivial parts in G-{x}", len(parts))
        if len(parts) == 2:
            def excess(part):
                return _m(part.graph, value) - induced_matching_number(part.graph).size - cyclomatic_number(part.graph)
            arranged = False
            for first, second in (parts, parts[::-1]):
                neighbours = sum(1 for i in second.vertices if G.has_edge(x, rest.vertices[i]))
                if excess(first) == -1 and excess(second) == 0 and neighbours == 2:
                    arranged = True
            out.expect(arranged, value, f"parts of G-{x}: one deficient, one tight and doubly joined",
                       'no such arrangement')


def check_unsaturated_deletion(profile, out):
    if profile.diameter < 4 or profile.beta_prime < 3 or profile.cyclomatic < 1:
        return out.skip()
    target = profile.beta_prime + profile.cyclomatic - 1
    qualifying = [value for value, mult in profile.nonzero if mult == target]
    if not qualifying:
        return out.skip()
    for value in qualifying:
        out.eigenvalues += 1
        _unsaturated_instance(profile, out, value)


def _is_star(G):
    return G.n >= 2 and is_tree(G) and diameter(G) <= 2


def check_matching_bound(profile, out):
    """m <= beta + c, with equality only for the triangle and the stars."""
    budget = profile.beta + profile.cyclomatic
    attained = False
    for value, mult in profile.nonzero:
        out.eigenvalues += 1
        out.expect(mult <= budget, value, f"m <= {budget}", mult)
        attained = attained or mult == budget
    G = profile.graph
    expected = is_isomorphic(G, cycle(3)) or _is_star(G)
    out.expect(attained == expected, None, f"equality attained: {expected}", f"equality attained: {attained}")


def _star_hub_instance(profile, out, value, mult):
    target = profile.beta + profile.cyclomatic - 1
    out.expect(mult <= target, value, f"m <= beta + c - 1 = {target}", mult)
    classification = classify_star_hub(profile.graph, value)
    out.expect((mult == target) == classification.is_extremal, value,
               f"m = {target} iff star hub form", f"m = {mult}, classified as {classification.tag}")
    if classification.is_extremal:
        out.expect(verify_classification(profile.graph, value, classification), value,
                   'witness re-verifies', 'witness rejected', 'star_hub')


def check_star_hub(profile, out):
    if profile.beta_prime < 3:
        return out.skip()
    for value, mult in profile.nonzero:
        out.eigenvalues += 1
        _star_hub_instance(profile, out, value, mult)


def check_interlacing(profile, out):
    G = profile.graph
    if G.n < 2:
        return out.skip()
    for v in range(G.n):
        H = delete_vertices(G, [v]).graph
        for value, mult in profile.spectrum:
            out.eigenvalues += 1
            m_rest = _m(H, value)
            out.expect(abs(mult - m_rest) <= 1, value, f"|m(G) - m(G-{v})| <= 1", f"{mult} vs {m_rest}")
        for value, m_rest in spectrum(H):
            if m_rest > 1 and _m(G, value) == 0:
                out.violation(value, f"|m(G) - m(G-{v})| <= 1", f"0 vs {m_rest}")


def check_matching_order(profile, out):
    out.expect(profile.beta_prime <= profile.beta, None, "beta' <= beta",
               f"beta' = {profile.beta_prime}, beta = {profile.beta}")


# Tree checks
def check_tree_deficit(profile, out):
    T = profile.graph
    for value, mult in profile.nonzero:
        out.eigenvalues += 1
        classification = classify_tree_deficit(T, value)
        target = profile.beta_prime - 1
        out.expect((mult == target) == classification.is_extremal, value,
                   f"m = beta' - 1 ({target}) iff caterpillar or tree hub form",
                   f"m = {mult}, classified as {classification.tag}")
        if classification.is_extremal:
            out.expect(verify_classification(T, value, classification), value,
                       'witness re-verifies', 'witness rejected', classification.tag)


def check_pendant_witness(profile, out):
    if profile.diameter < 4:
        return out.skip()
    T = profile.graph
    for value, mult in profile.nonzero:
        out.eigenvalues += 1
        try:
            witness = pendant_induced_matching_witness(T, value)
        except TheoremViolation as error:
            out.violation(value, f"{mult + 1} pendant edges in an induced matching", 'none found', str(error))
            continue
        pendant = all(T.degree(u) == 1 or T.degree(v) == 1 for u, v in witness)
        out.expect(len(witness) == mult + 1 and pendant and witness.is_induced_matching(T), value,
                   f"{mult + 1} pendant edges in an induced matching", list(witness.edges))


def check_nullity(profile, out):
    T = profile.graph
    expected = T.n - 2 * profile.beta
    observed = multiplicity_rational(T, 0)
    out.eigenvalues += 1
    out.expect(observed == expected, algebraic_from_rational(0), f"m_0 = n - 2 beta = {expected}", observed)


def check_short_tree_equality(profile, out):
    if not profile.nonzero:
        return out.skip()
    short = 1 <= profile.diameter <= 3
    for value, mult in profile.nonzero:
        out.eigenvalues += 1
        out.expect((mult == profile.beta_prime) == short, value,
                   f"m = beta' iff diameter in 1..3 (diameter {profile.diameter})",
                   f"m = {mult}, beta' = {profile.beta_prime}")


def check_short_tree_deletion(profile, out):
    if not 1 <= profile.diameter <= 3:
        return out.skip()
    T = profile.graph
    for value, _ in profile.nonzero:
        out.eigenvalues += 1
        for v in range(T.n):
            m_rest = _m(delete_vertices(T, [v]).graph, value)
            out.expect(m_rest == 0, value, f"not an eigenvalue of T-{v}", f"m = {m_rest}")


def check_caterpillar_simple(profile, out, caterpillar_max_n):
    T = profile.graph
    if T.n > caterpillar_max_n or is_caterpillar(T) is None:
        return out.skip()
    for value, mult in profile.nonzero:
        out.eigenvalues += 1
        out.expect(mult == 1, value, 'simple', f"m = {mult}")


def check_unit_eigenvalue(profile, out):
    T = profile.graph
    if is_isomorphic(T, path(2)) or is_isomorphic(T, double_star(2, 2)):
        return out.skip()
    one = algebraic_from_rational(1)
    k = _m(T, one)
    if k == 0:
        return out.skip()
    out.eigenvalues += 1
    witness = find_pendant_induced_matching(T, k + 1)
    out.expect(witness is not None, one, f"{k + 1} pendant edges in an induced matching", 'none found')


def _graph_checks(check):
    return {
        'bound': check_bound,
        'diameter_bound': check_diameter_bound,
        'hub': check_hub,
        'unsaturated_deletion': check_unsaturated_deletion,
        'matching_bound': check_matching_bound,
        'star_hub': check_star_hub,
        'interlacing': check_interlacing,
        'matching_order': check_matching_order,
        'tree_deficit': check_tree_deficit,
        'pendant_witness': check_pendant_witness,
        'nullity': check_nullity,
        'short_tree_equality': check_short_tree_equality,
        'short_tree_deletion': check_short_tree_deletion,
        'unit_eigenvalue': check_unit_eigenvalue,
    }[check]


def run_graph_checks(item):
    """Worker entry point: run the listed checks on one graph."""
    checks, graph, record_passes, caterpillar_max_n = item
    profile = GraphProfile(graph)
    counters, findings = {}, []
    for check in checks:
        out = _Instance(check, profile.graph6, record_passes)
        if check == 'caterpillar_simple':
            check_caterpillar_simple(profile, out, caterpillar_max_n)
        else:
            _graph_checks(check)(profile, out)
        counters[check] = CheckCounters()
        findings.extend(out.close(counters[check]))
    return counters, findings


# Constructed families
def _expect_spectrum(out, G, expected):
    observed = spectrum(G)
    out.eigenvalues += len(observed)
    entries = [(value, mult) for value, mult in expected if mult > 0]
    out.expect(len(observed) == len(entries), None, f"{len(entries)} distinct eigenvalues", len(observed))
    for value, mult in entries:
        out.expect(observed.multiplicity_of(value) == mult, value, f"m = {mult}",
                   f"m = {observed.multiplicity_of(value)}")


def _golden_pair():
    return quadratic_surd(-1, 2, 5, -1), quadratic_surd(-1, 2, 5, 1)


def construct_closed_spectra(config):
    """Stars, the pentagon and pendant triangles against their closed-form spectra."""
    zero = algebraic_from_rational(0)
    golden = _golden_pair()

    for n in range(2, 11):
        def star_claim(out, G=star(n), n=n):
            _expect_spectrum(out, G, [
                (quadratic_surd(0, 1, n - 1, -1), 1),
                (zero, n - 2),
                (quadratic_surd(0, 1, n - 1, 1), 1),
            ])
            for g in golden:
                out.expect(_m(G, g) == 0, g, 'not an eigenvalue of a star', _m(G, g))
        yield star(n), star_claim

    pentagon = cycle(5)

    def pentagon_claim(out):
        _expect_spectrum(out, pentagon, [(golden[0], 2), (golden[1], 2), (algebraic_from_rational(2), 1)])
    yield pentagon, pentagon_claim

    for a in range(0, 5):
        def triangle_family_claim(out, G=pendant_triangle(a), a=a):
            if a >= 1:
                _expect_spectrum(out, G, [
                    (quadratic_surd(-1, 2, 1 + 4 * a, -1), 2),
                    (quadratic_surd(1, 1, 1 + a, -1), 1),
                    (quadratic_surd(-1, 2, 1 + 4 * a, 1), 2),
                    (quadratic_surd(1, 1, 1 + a, 1), 1),
                    (zero, 3 * a - 3),
                ])
            for g in golden:
                out.expect((_m(G, g) > 0) == (a == 1), g, f"golden eigenvalue iff a = 1 (a = {a})", _m(G, g))
        yield pendant_triangle(a), triangle_family_claim

    triangle = cycle(3)

    def triangle_claim(out):
        minus_one, three = algebraic_from_rational(-1), algebraic_from_rational(3)
        out.eigenvalues += 2
        out.expect(_m(triangle, minus_one) == 2, minus_one, 'm = 2', _m(triangle, minus_one))
        if _m(triangle, three) != 2:
            out.note(three, 'm_3(C3) = 2 as claimed in the closed-form listing',
                     f"m_3(C3) = {_m(triangle, three)}",
                     'typo in the claim: the multiplicity-2 eigenvalue of the triangle is -1')
    yield triangle, triangle_claim


def construct_path_identities(config):
    for n in range(2, 21):
        def claim(out, P=path(n), n=n):
            beta, beta_prime = matching_number(P).size, induced_matching_number(P).size
            out.expect(beta == n // 2, None, f"beta = {n // 2}", beta)
            out.expect(beta_prime == (n + 1) // 3, None, f"beta' = {(n + 1) // 3}", beta_prime)
        yield path(n), claim


def construct_multiplicity_drop(config):
    bases = [pendant_triangle(a) for a in range(0, 4)] + [cycle(5)]
    for G in bases:
        def claim(out, G=G):
            for value, mult in spectrum(G).nonzero_entries():
                if mult != 2:
                    continue
                out.eigenvalues += 1
                for x in range(G.n):
                    m_rest = _m(delete_vertices(G, [x]).graph, value)
                    out.expect(m_rest == 1, value, f"m(G-{x}) = 1", m_rest)
        yield G, claim


def construct_star_join(config):
    bases = [pendant_triangle(a) for a in range(0, 4)] + [cycle(5)]
    for base in bases:
        for s in range(1, 5):
            for x in range(base.n):
                for y in range(x + 1, base.n):
                    G = star_join(base, s, x, y)

                    def claim(out, G=G):
                        for value, mult in spectrum(G).nonzero_entries():
                            out.eigenvalues += 1
                            out.expect(mult <= 2, value, 'm <= 2', mult)
                    yield G, claim


def _random_connected(rng, n):
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < 0.3:
                edges.add((u, v))
    return from_edge_list(n, edges)


def construct_bridge(config):
    """Random bridge joins whose left factor loses a multiplicity at u."""
    rng = random.Random(config.seed)
    produced = attempts = 0
    while produced < config.bridge_trials and attempts < 50 * config.bridge_trials:
        attempts += 1
        G = _random_connected(rng, rng.randint(2, 6))
        u = rng.randrange(G.n)
        entries = spectrum(G).entries
        value, mult = entries[rng.randrange(len(entries))]
        if mult != _m(delete_vertices(G, [u]).graph, value) + 1:
            continue
        H = _random_connected(rng, rng.randint(1, 6))
        v = rng.randrange(H.n)
        joined = join_bridge(G, u, H, v)
        produced += 1

        def claim(out, joined=joined, H=H, v=v, value=value, mult=mult):
            out.eigenvalues += 1
            expected = _m(delete_vertices(H, [v]).graph, value) + mult - 1
            out.expect(_m(joined, value) == expected, value, f"m = {expected}", _m(joined, value))
        yield joined, claim
    if produced < config.bridge_trials:
        logger.warning("Only %d of %d bridge trials met the hypothesis", produced, config.bridge_trials)


def hub_positive_instances(limit):
    """Round-robin over the hub catalogue: (eigenvalue, graph) pairs in hub form."""
    def instances(value, parts):
        for s in (3, 4, 5):
            for combo in combinations_with_replacement(parts, s):
                blocking = any(part.blocking for part in combo)
                for isolated in ((0, 1, 2) if blocking else (0,)):
                    if 1 + sum(part.graph.n for part in combo) + isolated <= vertex_cap():
                        yield value, hub_graph(combo, isolated)
    streams = [instances(value, parts) for value, parts in hub_catalogue()]
    produced = 0
    while streams and produced < limit:
        for stream in list(streams):
            item = next(stream, None)
            if item is None:
                streams.remove(stream)
                continue
            yield item
            produced += 1
            if produced >= limit:
                return


def construct_hub(config):
    for value, G in hub_positive_instances(config.hub_positives):
        def claim(out, G=G, value=value):
            profile = GraphProfile(G)
            mult = _m(G, value)
            out.eigenvalues += 1
            target = profile.beta_prime + profile.cyclomatic - 1
            out.expect(mult == target, value, f"m = beta' + c - 1 = {target}", mult, 'constructed hub positive')
            _hub_instance(profile, out, value, mult)
        yield G, claim


def construct_unsaturated_deletion(config):
    for value, G in hub_positive_instances(config.hub_positives):
        if cyclomatic_number(G) == 0:
            continue

        def claim(out, G=G, value=value):
            out.eigenvalues += 1
            _unsaturated_instance(GraphProfile(G), out, value)
        yield G, claim


def construct_star_hub(config):
    produced = 0
    for t in range(1, 6):
        for copies in range(3, 7):
            if produced >= config.star_hub_positives:
                return
            G = star_hub_graph(t, copies)
            produced += 1

            def claim(out, G=G, t=t):
                profile = GraphProfile(G)
                for sign in (1, -1):
                    value = quadratic_surd(0, 1, t, sign)
                    mult = _m(G, value)
                    out.eigenvalues += 1
                    out.expect(mult == profile.beta + profile.cyclomatic - 1, value,
                               f"m = beta + c - 1", mult, 'constructed star hub positive')
                    _star_hub_instance(profile, out, value, mult)
            yield G, claim


def construct_showcase(config):
    G = showcase_graph()

    def claim(out):
        minus_two = algebraic_from_rational(-2)
        profile = GraphProfile(G)
        out.eigenvalues += 1
        out.expect(G.n == 51 and G.degree(0) == 12, None, 'n = 51, deg(w) = 12', f"n = {G.n}, deg(w) = {G.degree(0)}")
        out.expect(multiplicity_rational(G, -2) == 8, minus_two, 'm = 8', multiplicity_rational(G, -2))
        out.expect(profile.beta_prime == 7, None, "beta' = 7", profile.beta_prime)
        out.expect(profile.cyclomatic == 2, None, 'c = 2', profile.cyclomatic)
        classification = classify_hub(G, minus_two)
        witness = classification.witness
        out.expect(classification.tag == Classification.HUB and witness.get('s') == 7
                   and sorted(part['a'] for part in witness.get('cyclic_parts', ())) == [2, 2],
                   minus_two, 'hub form with seven parts, two pendant triangles with a = 2',
                   classification.tag)
        out.expect(verify_classification(G, minus_two, classification), minus_two,
                   'witness re-verifies', 'witness rejected')
    yield G, claim


CONSTRUCTORS = OrderedDict([
    ('closed_spectra', construct_closed_spectra),
    ('path_identities', construct_path_identities),
    ('multiplicity_drop', construct_multiplicity_drop),
    ('star_join', construct_star_join),
    ('bridge', construct_bridge),
    ('showcase', construct_showcase),
    ('hub', construct_hub),
    ('unsaturated_deletion', construct_unsaturated_deletion),
    ('star_hub', construct_star_hub),
])


def run_constructed(check, config):
    counters, findings = CheckCounters(), []
    for G, claim in CONSTRUCTORS[check](config):
        out = _Instance(check, emit_graph6(G) if G.n <= graph6_max_order() else f"n={G.n}", config.record_passes)
        claim(out)
        findings.extend(out.close(counters))
    return {check: counters}, findings


# Driving the suite
def _graph_items(config):
    connected = tuple(c for c in CONNECTED_CHECKS if config.wants(c))
    trees = tuple(c for c in TREE_CHECKS if config.wants(c))
    if config.graph6_lines:
        for G in stream_graph6(config.graph6_lines):
            if not is_connected(G):
                logger.warning("Skipping disconnected input graph %s", emit_graph6(G))
                continue
            checks = connected + (trees if is_tree(G) else ())
            if checks:
                yield checks, G, config.record_passes, config.caterpillar_max_n
        return
    if connected:
        for n in range(1, config.connected_max_n + 1):
            for G in enumerate_connected_graphs(n):
                yield connected, G, config.record_passes, config.caterpillar_max_n
    if trees:
        for n in range(1, config.trees_max_n + 1):
            for T in enumerate_trees(n):
                yield trees, T, config.record_passes, config.caterpillar_max_n


def run_suite(config):
    """Run every selected check and return the merged, sorted report."""
    unknown = set(config.checks) - set(ALL_CHECKS)
    if unknown:
        raise PreconditionError(f"Unknown checks: {', '.join(sorted(unknown))}")
    report = SuiteReport(version=__version__, config=config, started_at=time.time())
    for check in config.checks:
        report.counters[check] = CheckCounters()
    logger.info("Verification suite started: %s", ', '.join(config.checks))

    items = _graph_items(config)
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = pool.map(run_graph_checks, items, chunksize=64)
            for counters, findings in tqdm(results, desc='graphs', unit='graph', disable=not config.progress):
                report.merge(counters, findings)
    else:
        for item in tqdm(items, desc='graphs', unit='graph', disable=not config.progress):
            report.merge(*run_graph_checks(item))

    if not config.graph6_lines:
        for check in CONSTRUCTORS:
            if config.wants(check):
                logger.debug("Running constructed family for %s", check)
                report.merge(*run_constructed(check, config))

    report.findings.sort(key=VerificationFinding.sort_key)
    report.finished_at = time.time()
    logger.info("Verification suite finished in %.1fs: %d violations, %d notes",
                report.elapsed_seconds, report.violation_count, report.note_count)
    return report


# Report files
def report_as_dict(report):
    from ..serializers import SuiteReportSerializer
    return SuiteReportSerializer(report).data


def render_json(report, include_timing=True):
    data = dict(report_as_dict(report))
    if not include_timing:
        for key in ('started_at', 'finished_at', 'elapsed_seconds'):
            data.pop(key, None)
    return json.dumps(data, sort_keys=True, indent=2)


CSV_COLUMNS = ('check', 'graph6', 'eigenvalue', 'expected', 'observed', 'severity', 'detail')


def write_csv(report, stream):
    from ..serializers import VerificationFindingSerializer
    writer = csv.DictWriter(stream, fieldnames=CSV_COLUMNS, lineterminator='\n')
    writer.writeheader()
    for finding in report.findings:
        row = VerificationFindingSerializer(finding).data
        row['eigenvalue'] = '' if finding.eigenvalue is None else str(finding.eigenvalue)
        writer.writerow({column: row.get(column, '') for column in CSV_COLUMNS})


def save_report(report, path):
    """Write the JSON report; on failure keep a salvage copy and raise ReportWriteError."""
    path = Path(path)
    text = render_json(report)
    try:
        path.write_text(text, encoding='utf-8')
        logger.info("Report written to %s", path)
        return path
    except OSError as error:
        logger.error("Could not write report to %s: %s", path, error)
        for salvage in (path.with_name(path.name + '.salvage'), Path(tempfile.gettempdir()) / (path.name + '.salvage')):
            try:
                salvage.write_text(text, encoding='utf-8')
            except OSError:
                continue
            raise ReportWriteError(f"Could not write report to {path}: {error}", salvage=salvage) from error
        logger.exception("No salvage location was writable")
        raise ReportWriteError(f"Could not write report to {path}: {error}") from error
