"""
Exact polynomial arithmetic over the integers and real algebraic numbers.

Polynomial algebra runs on sympy over ZZ and QQ: characteristic polynomials,
gcds, squarefree decomposition, Sturm chains, root counts and isolating
intervals. Roots are then held in dyadic isolating intervals and refined by
sign bisection. Nothing in this module uses floating point for a decision.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import ceil, floor, isqrt

from sympy import Matrix, Poly, Rational, Symbol, ZZ
from sympy.polys.polyerrors import ExactQuotientFailed

from ..exceptions import PolynomialError

logger = logging.getLogger(__name__)

x = Symbol('x')


def to_sympy_rational(q):
    q = Fraction(q)
    return Rational(q.numerator, q.denominator)


def from_sympy_rational(value):
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def adjacency_matrix(G):
    return Matrix([[G.adj[u] >> v & 1 for v in range(G.n)] for u in range(G.n)])


# Polynomials
@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coeffs[i] is the coefficient of x^i."""
    coeffs: tuple = ()

    def __post_init__(self):
        coeffs = [int(c) for c in self.coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs))

    @classmethod
    def from_poly(cls, poly):
        """From a sympy Poly with integer coefficients."""
        return cls(int(c) for c in reversed(poly.all_coeffs()))

    @classmethod
    def linear_root(cls, q):
        """Primitive polynomial b*x - a vanishing at q = a/b."""
        q = Fraction(q)
        return cls((-q.numerator, q.denominator))

    @cached_property
    def sympy_poly(self):
        return Poly.from_list(list(reversed(self.coeffs)) or [0], x, domain=ZZ)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __add__(self, other):
        return IntPolynomial.from_poly(self.sympy_poly + other.sympy_poly)

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return IntPolynomial.from_poly(self.sympy_poly - other.sympy_poly)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        return IntPolynomial.from_poly(self.sympy_poly * other.sympy_poly)

    __rmul__ = __mul__

    def __pow__(self, k):
        return IntPolynomial.from_poly(self.sympy_poly ** k)

    def derivative(self):
        return IntPolynomial.from_poly(self.sympy_poly.diff(x))

    def content(self):
        return abs(int(self.sympy_poly.content())) if self.coeffs else 0

    def primitive(self):
        return _normalized(self.sympy_poly)

    def compose_negative(self):
        """p(-x)."""
        return IntPolynomial.from_poly(self.sympy_poly.compose(Poly(-x, x, domain=ZZ)))

    def __call__(self, value):
        return from_sympy_rational(self.sympy_poly.eval(to_sympy_rational(value)))

    def __str__(self):
        if not self.coeffs:
            return '0'
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            magnitude = abs(c)
            body = '' if magnitude == 1 and i else str(magnitude)
            if i:
                body += 'x' if i == 1 else f'x^{i}'
            sign = '-' if c < 0 else '+'
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in terms[1:]:
            text += f' {sign} {body}'
        return text


def _normalized(poly):
    """Primitive part of a sympy Poly with a positive leading coefficient."""
    if poly.is_zero:
        return IntPolynomial()
    _, poly = poly.primitive()
    if poly.LC() < 0:
        poly = -poly
    return IntPolynomial.from_poly(poly)


@lru_cache(maxsize=8192)
def poly_gcd(a, b):
    """Primitive, positive-leading gcd; gcd(0, 0) is the zero polynomial."""
    return _normalized(a.sympy_poly.gcd(b.sympy_poly))


def exact_quotient(a, b):
    """a / b when b divides a with an integer quotient."""
    if b.is_zero():
        raise PolynomialError("Division by the zero polynomial")
    try:
        return IntPolynomial.from_poly(a.sympy_poly.exquo(b.sympy_poly))
    except ExactQuotientFailed:
        raise PolynomialError(f"{b} does not divide {a} over the integers") from None


def is_squarefree(p):
    return not p.is_zero() and p.sympy_poly.is_sqf


def squarefree_part(p):
    if p.is_zero():
        raise PolynomialError("The zero polynomial has no squarefree part")
    return _normalized(p.sympy_poly.sqf_part())


@dataclass(frozen=True)
class SquarefreeStrata:
    """p = product of q_i ** i over the strata, up to sign and content."""
    strata: tuple

    def reconstruct(self):
        product = IntPolynomial((1,))
        for q, i in self.strata:
            product = product * q ** i
        return product

    def total_degree(self):
        return sum(q.degree * i for q, i in self.strata)


def squarefree_decompose(p):
    """Strata are primitive with positive leading coefficient, ordered by multiplicity then degree."""
    if p.is_zero():
        raise PolynomialError("Cannot decompose the zero polynomial")
    _, factors = p.sympy_poly.sqf_list()
    strata = [(_normalized(q), i) for q, i in factors if q.degree() >= 1]
    strata.sort(key=lambda item: (item[1], item[0].degree))
    return SquarefreeStrata(tuple(strata))


@lru_cache(maxsize=4096)
def char_poly(G):
    """det(xI - A(G)) over the integers."""
    if G.n == 0:
        return IntPolynomial((1,))
    return IntPolynomial.from_poly(adjacency_matrix(G).charpoly(x))


# Signs and Sturm sequences
def sign_at(p, q):
    """Exact sign of p(q) for rational q, by cleared-denominator integer evaluation."""
    q = Fraction(q)
    a, b = q.numerator, q.denominator
    d = p.degree
    total = 0
    for i, c in enumerate(p.coeffs):
        total += c * a ** i * b ** (d - i)
    return (total > 0) - (total < 0)


@lru_cache(maxsize=4096)
def sturm_sequence(p):
    """Sturm chain of squarefree p, every member scaled to integer coefficients."""
    if not is_squarefree(p):
        raise PolynomialError(f"Sturm sequences need a squarefree polynomial, got {p}")
    return tuple(IntPolynomial.from_poly(member.clear_denoms(convert=True)[1])
                 for member in p.sympy_poly.sturm())


def sign_variations(p, value):
    signs = [s for s in (sign_at(f, value) for f in sturm_sequence(p)) if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_roots(p, lo, hi):
    """Distinct real roots of p in the closed interval [lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi or p.is_constant():
        return 0
    return int(p.sympy_poly.count_roots(to_sympy_rational(lo), to_sympy_rational(hi)))


def cauchy_bound(p):
    """Smallest power of two strictly above 1 + max |a_i / a_n|."""
    lead = abs(p.leading)
    bound = 1 + max((Fraction(abs(c), lead) for c in p.coeffs[:-1]), default=Fraction(0))
    power = Fraction(1)
    while power <= bound:
        power *= 2
    return power


# Algebraic numbers
@dataclass(frozen=True, eq=False)
class AlgebraicNumber:
    """
    The unique root of a squarefree primitive poly in [lo, hi].

    lo == hi marks an exact rational; its poly is then linear. Use alg_equal
    and alg_compare rather than == to compare values.
    """
    poly: IntPolynomial
    lo: Fraction
    hi: Fraction

    @property
    def is_rational(self):
        return self.lo == self.hi

    @property
    def rational_value(self):
        return self.lo if self.is_rational else None

    def __str__(self):
        if self.is_rational:
            return format_rational(self.lo)
        return f"root of {self.poly} in [{format_rational(self.lo)}, {format_rational(self.hi)}] (~{to_float(self):.6f})"

    def __repr__(self):
        return f"AlgebraicNumber({self})"


def format_rational(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def algebraic_from_rational(q):
    q = Fraction(q)
    return AlgebraicNumber(IntPolynomial.linear_root(q), q, q)


def _exact_if_integral(p, lo, hi):
    """Collapse an isolating interval to a point when its root is an integer."""
    first, last = -((-lo.numerator) // lo.denominator), hi.numerator // hi.denominator
    if last - first > 64:
        return None
    for k in range(first, last + 1):
        if sign_at(p, k) == 0:
            return algebraic_from_rational(k)
    return None


def algebraic_number(poly, lo, hi):
    """
    Validated constructor: poly is reduced to its squarefree primitive part and
    must have exactly one real root in the closed interval [lo, hi].
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if poly.is_zero() or poly.is_constant():
        raise PolynomialError("An algebraic number needs a polynomial of degree at least one")
    if lo > hi:
        raise PolynomialError(f"Empty interval [{format_rational(lo)}, {format_rational(hi)}]")
    p = squarefree_part(poly).primitive()
    roots = count_roots(p, lo, hi)
    if roots != 1:
        raise PolynomialError(
            f"{p} has {roots} roots in [{format_rational(lo)}, {format_rational(hi)}]; exactly one is required")
    if p.degree == 1:
        return algebraic_from_rational(Fraction(-p.coeffs[0], p.coeffs[1]))
    for endpoint in (lo, hi):
        if sign_at(p, endpoint) == 0:
            return algebraic_from_rational(endpoint)
    return _exact_if_integral(p, lo, hi) or AlgebraicNumber(p, lo, hi)


def _dyadic_bracket(p, lo, hi):
    """
    Dyadic isolating interval for the single root of p strictly inside (lo, hi).

    Grid points of width 2**-k inside (lo, hi) are sign-tested for k = 0, 1, ...
    until two neighbours bracket the root; an exact hit is returned as a rational.
    """
    k = 0
    while True:
        scale = 1 << k
        points = [Fraction(i, scale) for i in range(floor(lo * scale) + 1, ceil(hi * scale))]
        signs = [sign_at(p, point) for point in points]
        for point, sign in zip(points, signs):
            if sign == 0:
                return algebraic_from_rational(point)
        for i in range(len(points) - 1):
            if signs[i] != signs[i + 1]:
                return AlgebraicNumber(p, points[i], points[i + 1])
        k += 1


def isolate_real_roots(p):
    """One AlgebraicNumber per distinct real root of squarefree p, ascending."""
    if p.is_zero():
        raise PolynomialError("The zero polynomial has no isolated roots")
    if not is_squarefree(p):
        raise PolynomialError(f"{p} is not squarefree; decompose it first")
    p = p.primitive()
    if p.degree == 0:
        return []
    found = []
    for (lo, hi), _ in p.sympy_poly.intervals():
        lo, hi = from_sympy_rational(lo), from_sympy_rational(hi)
        found.append(algebraic_from_rational(lo) if lo == hi else _dyadic_bracket(p, lo, hi))
    logger.debug("Isolated %d real roots of %s", len(found), p)
    return found


def _bisect(a):
    mid = (a.lo + a.hi) / 2
    s = sign_at(a.poly, mid)
    if s == 0:
        return algebraic_from_rational(mid)
    if sign_at(a.poly, a.lo) * s < 0:
        return AlgebraicNumber(a.poly, a.lo, mid)
    return AlgebraicNumber(a.poly, mid, a.hi)


def refine(a, width):
    """Same number with an isolating interval no wider than width."""
    width = Fraction(width)
    if width <= 0:
        raise PolynomialError("Refinement width must be positive")
    while a.hi - a.lo > width:
        a = _bisect(a)
    return a


def alg_equal(a, b):
    """Exact equality: the gcd of both polys must vanish on the interval overlap."""
    if a.is_rational and b.is_rational:
        return a.lo == b.lo
    if a.is_rational or b.is_rational:
        point, other = (a, b) if a.is_rational else (b, a)
        q = point.lo
        return other.lo <= q <= other.hi and sign_at(other.poly, q) == 0
    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if lo > hi:
        return False
    g = poly_gcd(a.poly, b.poly)
    if g.is_constant():
        return False
    return count_roots(g, lo, hi) > 0


def alg_compare(a, b):
    """-1, 0 or 1 as a is below, equal to or above b."""
    if alg_equal(a, b):
        return 0
    while not (a.hi < b.lo or b.hi < a.lo):
        if not a.is_rational:
            a = _bisect(a)
        if not b.is_rational:
            b = _bisect(b)
    return -1 if a.hi < b.lo else 1


def alg_is_root(p, a):
    """True iff a is a root of the integer polynomial p."""
    if p.is_zero():
        return True
    if a.is_rational:
        return sign_at(p, a.lo) == 0
    g = poly_gcd(p, a.poly)
    return not g.is_constant() and count_roots(g, a.lo, a.hi) > 0


def alg_negate(a):
    if a.is_rational:
        return algebraic_from_rational(-a.lo)
    return AlgebraicNumber(a.poly.compose_negative().primitive(), -a.hi, -a.lo)


def alg_is_zero(a):
    return a.lo <= 0 <= a.hi and sign_at(a.poly, 0) == 0


def quadratic_surd(u, v, d, sign=1):
    """The number (u + sign * sqrt(d)) / v for integers u, v > 0, d >= 0."""
    if v <= 0 or d < 0:
        raise PolynomialError("quadratic_surd needs v > 0 and d >= 0")
    r = isqrt(d)
    if r * r == d:
        return algebraic_from_rational(Fraction(u + sign * r, v))
    poly = IntPolynomial((u * u - d, -2 * u * v, v * v))
    ends = sorted((Fraction(u + sign * r, v), Fraction(u + sign * (r + 1), v)))
    return algebraic_number(poly, ends[0], ends[1])


def integer_square(a):
    """The positive integer t with a**2 == t, or None."""
    if not a.is_rational:
        a = refine(a, Fraction(1, 1024))
        while not a.is_rational and a.lo < 0 < a.hi:
            if sign_at(a.poly, 0) == 0:
                return None
            a = _bisect(a)
    if a.is_rational:
        square = a.lo * a.lo
        return int(square) if square.denominator == 1 and square > 0 else None
    sign = 1 if a.lo >= 0 else -1
    low, high = sorted((a.lo ** 2, a.hi ** 2))
    first = max(1, -((-low.numerator) // low.denominator))
    last = high.numerator // high.denominator
    for t in range(first, last + 1):
        if alg_equal(a, quadratic_surd(0, 1, t, sign)):
            return t
    return None


def to_float(a):
    """Display-only decimal approximation."""
    if a.is_rational:
        return float(a.lo)
    a = refine(a, Fraction(1, 1 << 48))
    return float((a.lo + a.hi) / 2)
