"""Novelty detection difficulty for physics puzzle levels."""

from ._core import (
    ConfigError,
    DomainError,
    InsufficientData,
    ParseError,
    Scene,
    UnknownObject,
    ValidationError,
    analyze,
    categorize,
    combined_difficulty,
    default_config,
    load_level,
    parse_level,
    targets,
    vertical_impact,
)

__all__ = [
    "ConfigError",
    "DomainError",
    "InsufficientData",
    "ParseError",
    "Scene",
    "UnknownObject",
    "ValidationError",
    "analyze",
    "categorize",
    "combined_difficulty",
    "default_config",
    "load_level",
    "parse_level",
    "targets",
    "vertical_impact",
]
