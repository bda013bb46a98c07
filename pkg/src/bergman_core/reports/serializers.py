"""
Run configuration serializers.
"""
from fractions import Fraction

from rest_framework import serializers

from bergman_core.algebra.rationals import format_rational, parse_rational
from bergman_core.core.conf import PRECISION_MODES
from bergman_core.core.domains import AVAILABLE_DOMAINS
from bergman_core.core.exceptions import BergmanError
from bergman_core.kernels.specs import DomainSpec

COMMANDS = ("kernel", "diastasis", "calabi", "rigidity", "oracle-compare")
FORMATS = ("json", "csv")
TOLERANCE_KEYS = ("calabi", "series", "refinement", "tail")


class RationalField(serializers.Field):
    """Exact rational given as "a/b", "a" or an integer; decimals are refused."""

    default_error_messages = {
        "invalid": "'{value}' is not an exact rational; write it as 'a/b'.",
        "decimal": "Decimal values are not accepted; write {value} as 'a/b'.",
    }

    def to_internal_value(self, data):
        if isinstance(data, bool):
            self.fail("invalid", value=data)
        if isinstance(data, int | Fraction):
            return Fraction(data)
        if isinstance(data, float):
            self.fail("decimal", value=data)
        try:
            return parse_rational(str(data))
        except BergmanError:
            self.fail("invalid", value=data)

    def to_representation(self, value):
        return format_rational(value)


def format_point(point) -> str:
    """Comma-separated coordinates; real ones without an imaginary part."""
    parts = []
    for c in point:
        c = complex(c)
        parts.append(repr(c.real) if c.imag == 0 else str(c))
    return ",".join(parts)


class PointField(serializers.Field):
    """A point of C^d as "x1,x2,..." with Python complex literals, or a list."""

    default_error_messages = {
        "invalid": "'{value}' is not a comma-separated list of complex numbers.",
    }

    def to_internal_value(self, data):
        items = data.split(",") if isinstance(data, str) else data
        if not isinstance(items, list | tuple) or not items:
            self.fail("invalid", value=data)
        try:
            return tuple(complex(str(item).strip().replace(" ", "")) for item in items)
        except ValueError:
            self.fail("invalid", value=data)

    def to_representation(self, value):
        return format_point(value)


class StrictFieldsMixin:
    """Reject keys the serializer does not declare."""

    def to_internal_value(self, data):
        if isinstance(data, dict):
            unknown = sorted(set(data) - set(self.fields))
            if unknown:
                raise serializers.ValidationError({key: ["Unknown field."] for key in unknown})
        return super().to_internal_value(data)


class DomainSpecSerializer(StrictFieldsMixin, serializers.Serializer):
    """Validates a domain specification and returns a :class:`DomainSpec`."""

    domain = serializers.ChoiceField(choices=sorted(AVAILABLE_DOMAINS))
    n = serializers.IntegerField(min_value=1)
    m = serializers.IntegerField(min_value=1, required=False)
    p = serializers.IntegerField(min_value=1, required=False)
    q = serializers.IntegerField(min_value=1, required=False)
    s = RationalField(required=False)
    k = RationalField(required=False)
    N = serializers.IntegerField(min_value=1, required=False)

    def get_fields(self):
        fields = super().get_fields()
        fields["lambda"] = RationalField(required=False)
        return fields

    def validate(self, attrs):
        try:
            return DomainSpec.from_dict(attrs)
        except BergmanError as exc:
            raise serializers.ValidationError(exc.detail) from exc

    def to_representation(self, instance):
        return instance.to_dict()


class RunConfigSerializer(StrictFieldsMixin, serializers.Serializer):
    command = serializers.ChoiceField(choices=COMMANDS)
    spec = DomainSpecSerializer()
    points = serializers.ListField(child=PointField(), required=False, default=list)
    truncation = serializers.IntegerField(
        min_value=1, required=False, allow_null=True, default=None
    )
    tolerances = serializers.DictField(
        child=serializers.FloatField(min_value=0), required=False, default=dict
    )
    output = serializers.CharField(required=False, allow_null=True, default=None)
    format = serializers.ChoiceField(choices=FORMATS, default="json")
    precision = serializers.ChoiceField(
        choices=PRECISION_MODES, required=False, allow_null=True, default=None
    )
    samples = serializers.IntegerField(min_value=1, required=False, allow_null=True, default=None)
    timestamp = serializers.BooleanField(default=True)

    def validate_tolerances(self, value):
        unknown = sorted(set(value) - set(TOLERANCE_KEYS))
        if unknown:
            raise serializers.ValidationError(f"Unknown tolerance keys: {', '.join(unknown)}.")
        return value

    def validate(self, attrs):
        command, spec, points = attrs["command"], attrs["spec"], attrs["points"]
        if command == "kernel" and not 1 <= len(points) <= 2:
            raise serializers.ValidationError({"points": "kernel takes one or two points."})
        if command == "diastasis" and len(points) != 2:
            raise serializers.ValidationError({"points": "diastasis takes exactly two points."})
        for point in points:
            if len(point) != spec.dimension:
                raise serializers.ValidationError(
                    {"points": f"Points must have {spec.dimension} coordinates."}
                )
        if command in ("calabi", "rigidity"):
            if spec.kind == "ball":
                raise serializers.ValidationError(
                    {"spec": f"{command} needs a Hartogs or egg domain."}
                )
            if spec.lam is None or spec.N is None:
                raise serializers.ValidationError({"spec": f"{command} needs lambda and N."})
        if attrs["format"] == "csv" and command != "calabi":
            raise serializers.ValidationError(
                {"format": "CSV output is available for calabi coefficient tables."}
            )
        return attrs
