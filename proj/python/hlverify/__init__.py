"""Exact checks of Hall-Littlewood torus-integral identities."""

from ._core import (
    ConfigError,
    ConsistencyError,
    DomainError,
    ResourceError,
    catalog,
    constant_term_check,
    hall_littlewood,
    pfaffian_a,
    sweep,
    verify,
)

__all__ = [
    "ConfigError",
    "ConsistencyError",
    "DomainError",
    "ResourceError",
    "catalog",
    "constant_term_check",
    "hall_littlewood",
    "pfaffian_a",
    "sweep",
    "verify",
]
