"""
Validated run configuration.
"""
from dataclasses import dataclass, field

from bergman_core.core.exceptions import SchemaViolation
from bergman_core.kernels.specs import DomainSpec

from .serializers import RunConfigSerializer, format_point


@dataclass(frozen=True)
class RunConfig:
    """
    One command invocation.

    Build instances through :meth:`from_dict`, which validates against
    :class:`RunConfigSerializer`; ``to_dict`` is its exact inverse.
    """

    command: str
    spec: DomainSpec
    points: tuple[tuple[complex, ...], ...] = ()
    truncation: int | None = None
    tolerances: dict = field(default_factory=dict)
    output: str | None = None
    format: str = "json"
    precision: str | None = None
    samples: int | None = None
    timestamp: bool = True

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        serializer = RunConfigSerializer(data=data)
        if not serializer.is_valid():
            raise SchemaViolation(details=_plain(serializer.errors))
        attrs = dict(serializer.validated_data)
        attrs["points"] = tuple(tuple(point) for point in attrs["points"])
        attrs["tolerances"] = dict(attrs["tolerances"])
        return cls(**attrs)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "spec": self.spec.to_dict(),
            "points": [format_point(point) for point in self.points],
            "truncation": self.truncation,
            "tolerances": dict(self.tolerances),
            "output": self.output,
            "format": self.format,
            "precision": self.precision,
            "samples": self.samples,
            "timestamp": self.timestamp,
        }

    def tolerance(self, key: str, default=None):
        return self.tolerances.get(key, default)


def _plain(errors):
    """ErrorDetail trees as plain dicts, lists and strings."""
    if isinstance(errors, dict):
        return {key: _plain(value) for key, value in errors.items()}
    if isinstance(errors, list):
        return [_plain(value) for value in errors]
    return str(errors)
