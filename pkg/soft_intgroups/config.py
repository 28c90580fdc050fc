"""
Configuration module containing bounds, budgets and shared enumerations.
"""

from dataclasses import dataclass
from enum import Enum


@dataclass
class SoftGroupConfig:
    """Library configuration with all bounds and default settings."""

    # Group enumeration
    SUBGROUP_BOUND: int = 24
    EXHAUSTIVE_SUBSET_BOUND: int = 12  # |G| up to which all subsets are scanned

    # Universes are packed into one word of bits
    MAX_UNIVERSE_SIZE: int = 64
    ALPHA_SCAN_LIMIT: int = 12  # |U| up to which every level alpha is scanned

    # Theorem suite budgets
    ENUMERATION_BUDGET: int = 2 ** 24  # soft sets per (group, universe)
    COMBINATION_BUDGET: int = 2 ** 16  # operand tuples for multi-operand checks
    RANDOM_SAMPLES: int = 1000
    DEFAULT_SEED: int = 1

    # Execution
    WORKERS: int = 1
    RECORD_TIMINGS: bool = False
    LOG_LEVEL: str = "WARNING"


class Side(Enum):
    """Side of a soft coset."""
    LEFT = "left"
    RIGHT = "right"


class NormalityCriterion(Enum):
    """Equivalent characterisations of a normal soft int-group."""
    ABELIAN = "abelian"
    CONJ_EQ = "conj_eq"
    CONJ_SUP = "conj_sup"
    CONJ_SUB = "conj_sub"
    ALPHA_CUTS = "alpha_cuts"
    COMMUTATOR_SUP = "commutator_sup"


class Verdict(Enum):
    """Outcome of a single theorem check."""
    HOLDS = "holds"
    VIOLATED = "violated"
    PRECONDITION_UNMET = "precondition-unmet"
    INFORMATIONAL = "informational"

    def is_failure(self) -> bool:
        """Check if this verdict fails the suite."""
        return self == Verdict.VIOLATED


class SuiteMode(Enum):
    """How open instances are quantified."""
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


class OutputFormat(Enum):
    """Report output format."""
    TEXT = "text"
    STRUCTURED = "structured"


class SoftKind(Enum):
    """Canonical soft set constructors."""
    EMPTY = "empty"
    UNIVERSAL = "universal"
    CHARACTERISTIC = "characteristic"
    A_ALPHA = "a_alpha"
    POINT = "point"
    EXPLICIT = "explicit"

    def needs_elements(self) -> bool:
        """Check if the constructor takes an element set."""
        return self in (SoftKind.CHARACTERISTIC, SoftKind.A_ALPHA)

    def needs_alpha(self) -> bool:
        """Check if the constructor takes a value alpha."""
        return self in (SoftKind.A_ALPHA, SoftKind.POINT)


# Global configuration instance
CONFIG = SoftGroupConfig()
