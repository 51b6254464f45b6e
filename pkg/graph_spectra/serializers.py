"""
Serializers for the toolkit's values.
Every JSON document the commands print or write goes through these classes,
and command options are validated by them before a service is called.
"""

from datetime import datetime, timezone
from fractions import Fraction

from rest_framework import serializers

from .exceptions import PolynomialError
from .services.exact_algebra import (
    IntPolynomial, algebraic_from_rational, algebraic_number, format_rational, to_float,
)
from .services.families import Classification
from .services.graph_core import VertexSet
from .services.harness import ALL_CHECKS, SEVERITY_NOTE, SEVERITY_PASS, SEVERITY_VIOLATION

# Values inside witnesses and options are plain Python objects; these helpers
# give them a JSON-friendly shape.


def parse_rational(text):
    """'p/q' or an integer literal; decimals are refused."""
    text = str(text).strip()
    numerator, slash, denominator = text.partition('/')
    try:
        value = Fraction(int(numerator), int(denominator)) if slash else Fraction(int(numerator))
    except (ValueError, ZeroDivisionError):
        raise serializers.ValidationError(
            f"{text!r} is not an exact rational; use an integer or 'p/q'") from None
    return value


def plain(value):
    """Witness values as JSON types: tuples become lists, vertex sets sorted lists."""
    if isinstance(value, VertexSet):
        return list(value.as_tuple())
    if isinstance(value, dict):
        return {key: plain(item) for key, item in value.items()}
    if isinstance(value, (tuple, list)):
        return [plain(item) for item in value]
    return value


# Polynomial Field
class IntPolynomialField(serializers.Field):
    """Coefficient array, constant term first, each coefficient a decimal string."""

    def to_representation(self, value):
        return [str(c) for c in value.coeffs]

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)) or not data:
            raise serializers.ValidationError("Expected a nonempty list of integer coefficients")
        try:
            return IntPolynomial(int(str(c).strip()) for c in data)
        except ValueError:
            raise serializers.ValidationError("Coefficients must be integers") from None


class RationalField(serializers.Field):
    def to_representation(self, value):
        return format_rational(value)

    def to_internal_value(self, data):
        return parse_rational(data)


# Algebraic Number Serializer
class AlgebraicNumberSerializer(serializers.Serializer):
    """
    Serializer for AlgebraicNumber.
    Exact data is {poly, lo, hi}; approx is a display-only decimal.
    """
    poly = IntPolynomialField()
    lo = RationalField()
    hi = RationalField()
    approx = serializers.SerializerMethodField()

    def get_approx(self, obj):
        return to_float(obj)

    def validate(self, data):
        try:
            data['value'] = algebraic_number(data['poly'], data['lo'], data['hi'])
        except PolynomialError as error:
            raise serializers.ValidationError(str(error)) from None
        return data

    def create(self, validated_data):
        return validated_data['value']


class EigenvalueField(serializers.Field):
    """
    Eigenvalue option: an exact rational ('3', '-1/2') or
    'poly:c0,c1,...;interval:lo,hi' naming the unique root of the polynomial
    in the interval. Decimal input is refused.
    """
    default_error_messages = {
        'format': "Eigenvalue must be 'p/q' or 'poly:c0,c1,...;interval:lo,hi'",
    }

    def to_representation(self, value):
        return AlgebraicNumberSerializer(value).data

    def to_internal_value(self, data):
        if isinstance(data, dict):
            serializer = AlgebraicNumberSerializer(data=data)
            serializer.is_valid(raise_exception=True)
            return serializer.save()
        text = str(data).strip()
        if not text.startswith('poly:'):
            return algebraic_from_rational(parse_rational(text))
        poly_part, semicolon, interval_part = text[len('poly:'):].partition(';')
        if not semicolon or not interval_part.startswith('interval:'):
            self.fail('format')
        bounds = interval_part[len('interval:'):].split(',')
        if len(bounds) != 2:
            self.fail('format')
        serializer = AlgebraicNumberSerializer(data={
            'poly': poly_part.split(','), 'lo': bounds[0], 'hi': bounds[1],
        })
        serializer.is_valid(raise_exception=True)
        return serializer.save()


# Spectrum Serializers
class SpectrumEntrySerializer(serializers.Serializer):
    value = serializers.SerializerMethodField()
    mult = serializers.SerializerMethodField()
    approx = serializers.SerializerMethodField()

    def get_value(self, obj):
        return AlgebraicNumberSerializer(obj[0]).data

    def get_mult(self, obj):
        return obj[1]

    def get_approx(self, obj):
        return to_float(obj[0])


class EdgeSetField(serializers.Field):
    def to_representation(self, value):
        return [[u, v] for u, v in value]

    def to_internal_value(self, data):
        from .services.matching import EdgeSet
        try:
            return EdgeSet.of((int(u), int(v)) for u, v in data)
        except (TypeError, ValueError):
            raise serializers.ValidationError("Expected a list of [u, v] pairs") from None


class MatchingResultSerializer(serializers.Serializer):
    size = serializers.IntegerField()
    witness = EdgeSetField()


# Classification Serializers
class ClassificationSerializer(serializers.Serializer):
    tag = serializers.ChoiceField(choices=Classification.TAG_CHOICES)
    witness = serializers.SerializerMethodField()

    def get_witness(self, obj):
        return plain(obj.witness)


class ClassificationRecordSerializer(serializers.Serializer):
    recognizer = serializers.CharField()
    eigenvalue = serializers.SerializerMethodField()
    classification = ClassificationSerializer()
    verified = serializers.BooleanField()

    def get_eigenvalue(self, obj):
        return None if obj.eigenvalue is None else AlgebraicNumberSerializer(obj.eigenvalue).data


class GraphAnalysisSerializer(serializers.Serializer):
    """Everything the analyze command reports for one graph."""
    graph6 = serializers.CharField()
    n = serializers.SerializerMethodField()
    edges = serializers.SerializerMethodField()
    connected = serializers.BooleanField()
    spectrum = serializers.SerializerMethodField()
    beta = serializers.SerializerMethodField()
    beta_prime = serializers.SerializerMethodField()
    cyclomatic = serializers.IntegerField()
    diameter = serializers.IntegerField(allow_null=True)
    classifications = ClassificationRecordSerializer(many=True)
    components = serializers.SerializerMethodField()
    isolated = serializers.IntegerField()

    def get_n(self, obj):
        return obj.graph.n

    def get_edges(self, obj):
        return [[u, v] for u, v in obj.graph.edges()]

    def get_spectrum(self, obj):
        return SpectrumEntrySerializer(obj.spectrum.entries, many=True).data

    def get_beta(self, obj):
        return MatchingResultSerializer(obj.matching).data

    def get_beta_prime(self, obj):
        return MatchingResultSerializer(obj.induced_matching).data

    def get_components(self, obj):
        return GraphAnalysisSerializer(obj.components, many=True).data


# Verification Serializers
class VerificationFindingSerializer(serializers.Serializer):
    """One finding; the eigenvalue is exact data so a violation can be re-checked from JSON alone."""
    SEVERITY_CHOICES = (
        (SEVERITY_PASS, 'Pass'),
        (SEVERITY_VIOLATION, 'Violation'),
        (SEVERITY_NOTE, 'Note on a published claim'),
    )

    check = serializers.CharField()
    graph6 = serializers.CharField()
    eigenvalue = serializers.SerializerMethodField()
    expected = serializers.CharField()
    observed = serializers.CharField()
    severity = serializers.ChoiceField(choices=SEVERITY_CHOICES)
    detail = serializers.CharField(allow_blank=True)

    def get_eigenvalue(self, obj):
        return None if obj.eigenvalue is None else AlgebraicNumberSerializer(obj.eigenvalue).data


class CheckCountersSerializer(serializers.Serializer):
    graphs = serializers.IntegerField()
    eigenvalues = serializers.IntegerField()
    passed = serializers.IntegerField()
    failed = serializers.IntegerField()
    skipped = serializers.IntegerField()
    violations = serializers.IntegerField()


class SuiteReportSerializer(serializers.Serializer):
    version = serializers.CharField()
    bounds = serializers.SerializerMethodField()
    seed = serializers.SerializerMethodField()
    checks = serializers.SerializerMethodField()
    counters = serializers.SerializerMethodField()
    findings = VerificationFindingSerializer(many=True)
    violations = serializers.IntegerField(source='violation_count')
    notes = serializers.IntegerField(source='note_count')
    started_at = serializers.SerializerMethodField()
    finished_at = serializers.SerializerMethodField()
    elapsed_seconds = serializers.FloatField()

    def get_bounds(self, obj):
        return dict(obj.config.bounds())

    def get_seed(self, obj):
        return obj.config.seed

    def get_checks(self, obj):
        return list(obj.config.checks)

    def get_counters(self, obj):
        return {check: CheckCountersSerializer(counters).data for check, counters in obj.counters.items()}

    def _timestamp(self, seconds):
        return datetime.fromtimestamp(seconds, tz=timezone.utc).isoformat()

    def get_started_at(self, obj):
        return self._timestamp(obj.started_at)

    def get_finished_at(self, obj):
        return self._timestamp(obj.finished_at)


# Command option Serializers
class VerifyOptionsSerializer(serializers.Serializer):
    """
    Options of the verify command.
    Connected graphs on 9 vertices are opt-in through include_n9.
    """
    max_n = serializers.IntegerField(min_value=1, max_value=9, required=False)
    trees_max_n = serializers.IntegerField(min_value=1, max_value=14, required=False)
    caterpillar_max_n = serializers.IntegerField(min_value=1, max_value=14, required=False)
    checks = serializers.CharField(required=False, allow_blank=False)
    seed = serializers.IntegerField(required=False)
    workers = serializers.IntegerField(min_value=1, max_value=64, required=False)
    trials = serializers.IntegerField(min_value=0, required=False)
    hub_positives = serializers.IntegerField(min_value=0, required=False)
    star_hub_positives = serializers.IntegerField(min_value=0, required=False)
    include_n9 = serializers.BooleanField(default=False)

    def validate_checks(self, value):
        checks = tuple(dict.fromkeys(c.strip() for c in value.split(',') if c.strip()))
        unknown = [c for c in checks if c not in ALL_CHECKS]
        if unknown:
            raise serializers.ValidationError(
                f"Unknown checks: {', '.join(unknown)}; known checks: {', '.join(ALL_CHECKS)}")
        if not checks:
            raise serializers.ValidationError("At least one check is required")
        return checks

    def validate(self, data):
        if data.get('max_n', 0) > 8 and not data.get('include_n9'):
            raise serializers.ValidationError(
                {'max_n': "Connected graphs on 9 vertices need --include-n9"})
        return data
