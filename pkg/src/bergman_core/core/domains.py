"""
Registry of supported model domains.

Each domain kind declares the parameters it takes, which of them must be exact
rationals, and how the complex dimension follows from them. The command line
and the run-configuration schema validate against this registry.
"""
from dataclasses import dataclass, field


@dataclass(frozen=True)
class DomainKind:
    """
    A supported model domain.

    Attributes:
        name: Identifier used on the command line
        label: Human-readable name
        integer_params: Natural-number parameters, each at least 1
        rational_params: Parameters given as exact "a/b" strings
        description: What the domain is
    """

    name: str
    label: str
    integer_params: tuple[str, ...]
    rational_params: tuple[str, ...] = field(default_factory=tuple)
    description: str = ""

    @property
    def params(self) -> tuple[str, ...]:
        return self.integer_params + self.rational_params


AVAILABLE_DOMAINS: dict[str, DomainKind] = {
    "ball": DomainKind(
        name="ball",
        label="Unit ball",
        integer_params=("n",),
        description="Unit ball B^n in C^n",
    ),
    "hartogs": DomainKind(
        name="hartogs",
        label="Hartogs-type domain over the ball",
        integer_params=("n", "m"),
        rational_params=("s",),
        description="{(z, xi) : ||xi||^2 < K_B(z, z)^(-s)} with z in B^n, xi in C^m",
    ),
    "egg": DomainKind(
        name="egg",
        label="Egg domain over the ball",
        integer_params=("n", "p", "q"),
        rational_params=("k",),
        description="{(z, xi1, xi2) : ||xi1||^2 + ||xi2||^(2k) < 1 - ||z||^2}",
    ),
}

# Parameters that only make sense together with a target space form.
TARGET_PARAMS = ("lambda", "N")


def get_domain(name: str) -> DomainKind:
    """
    Get a domain kind by name.

    Raises:
        KeyError: If the domain kind doesn't exist
    """
    return AVAILABLE_DOMAINS[name]


def validate_domain_params(name: str, params: dict) -> tuple[bool, list[str]]:
    """
    Validate the parameter names given for a domain kind.

    Args:
        name: Domain kind identifier
        params: Mapping of parameter name to value (``None`` meaning absent)

    Returns:
        Tuple of (is_valid, list_of_errors)
    """
    errors = []

    if name not in AVAILABLE_DOMAINS:
        return (False, [f"Unknown domain: '{name}'"])

    kind = AVAILABLE_DOMAINS[name]
    given = {key for key, value in params.items() if value is not None}

    for required in kind.params:
        if required not in given:
            errors.append(f"Domain '{name}' requires parameter '{required}'")

    for key in sorted(given - set(kind.params) - set(TARGET_PARAMS)):
        errors.append(f"Parameter '{key}' does not apply to domain '{name}'")

    return (len(errors) == 0, errors)
