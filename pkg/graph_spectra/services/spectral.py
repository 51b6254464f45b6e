"""
Eigenvalue-level queries on adjacency spectra.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache

from sympy import eye

from ..exceptions import NotAnEigenvalueError, PreconditionError, TheoremViolation
from .exact_algebra import (
    adjacency_matrix, alg_compare, alg_equal, alg_is_root, alg_is_zero, char_poly, isolate_real_roots,
    squarefree_decompose,
)
from .graph_core import VertexSet, delete_vertices, diameter, is_tree
from .matching import find_pendant_induced_matching

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpectrumSummary:
    """Distinct eigenvalues in ascending order with their multiplicities."""
    entries: tuple

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def order(self):
        return sum(mult for _, mult in self.entries)

    def values(self):
        return tuple(value for value, _ in self.entries)

    def multiplicity_of(self, value):
        for candidate, mult in self.entries:
            if alg_equal(candidate, value):
                return mult
        return 0

    def nonzero_entries(self):
        return tuple((value, mult) for value, mult in self.entries if not alg_is_zero(value))

    def nonzero_values(self):
        return tuple(value for value, _ in self.nonzero_entries())


@dataclass(frozen=True)
class StarSet:
    vertices: VertexSet
    eigenvalue: object


@lru_cache(maxsize=8192)
def strata(G):
    return squarefree_decompose(char_poly(G)).strata


@lru_cache(maxsize=8192)
def spectrum(G):
    if G.n == 0:
        raise PreconditionError("The empty graph has no spectrum")
    entries = []
    for q, mult in strata(G):
        entries.extend((value, mult) for value in isolate_real_roots(q))
    entries.sort(key=cmp_to_key(lambda x, y: alg_compare(x[0], y[0])))
    return SpectrumSummary(tuple(entries))


def multiplicity(G, value):
    """m_value(G): the index of the squarefree stratum the value is a root of."""
    if G.n == 0:
        return 0
    for q, mult in strata(G):
        if alg_is_root(q, value):
            return mult
    return 0


def multiplicity_rational(G, q):
    """n - rank(A - qI) in exact arithmetic."""
    if G.n == 0:
        return 0
    q = Fraction(q)
    # q.denominator * (A - qI) has the same rank and integer entries
    scaled = adjacency_matrix(G) * q.denominator - eye(G.n) * q.numerator
    return G.n - scaled.rank()


def eigenvalue_multiplicity(G, value):
    """multiplicity with the rank fast path for rational values."""
    if value.is_rational:
        return multiplicity_rational(G, value.lo)
    return multiplicity(G, value)


def is_eigenvalue(G, value):
    return multiplicity(G, value) >= 1


def is_star_set(G, vertices, value):
    k = eigenvalue_multiplicity(G, value)
    if k == 0 or len(vertices) != k:
        return False
    remainder = delete_vertices(G, vertices).graph
    return eigenvalue_multiplicity(remainder, value) == 0


def find_star_set(G, value):
    """
    Lexicographically first star set for an eigenvalue.

    Every deleted vertex can lower the multiplicity by at most one, so a prefix
    whose deletion has not lowered it by its full size is abandoned.
    """
    k = eigenvalue_multiplicity(G, value)
    if k == 0:
        raise NotAnEigenvalueError(f"{value} is not an eigenvalue of {G}")

    def extend(start, chosen):
        if len(chosen) == k:
            return chosen
        for v in range(start, G.n - (k - len(chosen)) + 1):
            attempt = chosen + [v]
            remainder = delete_vertices(G, attempt).graph
            if eigenvalue_multiplicity(remainder, value) == k - len(attempt):
                found = extend(v + 1, attempt)
                if found is not None:
                    return found
        return None

    found = extend(0, [])
    if found is None:
        raise TheoremViolation(f"No star set of size {k} for {value} in {G}")
    return StarSet(VertexSet.of(found), value)


def pendant_induced_matching_witness(T, value):
    """k+1 pendant edges forming an induced matching, where k = m_value(T)."""
    if not is_tree(T):
        raise PreconditionError(f"{T} is not a tree")
    if diameter(T) < 4:
        raise PreconditionError(f"Diameter of {T} is below 4")
    if alg_is_zero(value):
        raise PreconditionError("The eigenvalue must be nonzero")
    k = eigenvalue_multiplicity(T, value)
    if k < 1:
        raise PreconditionError(f"{value} is not an eigenvalue of {T}")
    witness = find_pendant_induced_matching(T, k + 1)
    if witness is None:
        raise TheoremViolation(f"No {k + 1} pendant edges form an induced matching in {T}")
    return witness
