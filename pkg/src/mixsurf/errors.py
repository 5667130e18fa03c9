"""Exception hierarchy.

Two families: ``InputError`` for bad input (CLI exit code 2) and
``TheoremViolation`` for runtime failures of invariants that must hold by
theory (CLI exit code 3). The latter always signal a bug.
"""

from __future__ import annotations


class MixsurfError(Exception):
    """Base class for all errors raised by this package."""

    #: short tag of the module that raised it, used in CLI messages
    module = "mixsurf"


class InputError(MixsurfError):
    pass


class TheoremViolation(MixsurfError):
    pass


# groups
class NotAGroup(InputError):
    module = "groups"


class NotAPermutation(InputError):
    module = "groups"


class GroupTooLarge(InputError):
    module = "groups"


class NotNormal(InputError):
    module = "groups"


class NotAbelian(InputError):
    module = "groups"


class IndexNotTwo(InputError):
    module = "groups"


class EmbeddingFailure(TheoremViolation):
    module = "groups"


# cover
class RelationFailure(InputError):
    module = "cover"


class NotGenerating(InputError):
    module = "cover"


class BadEllipticOrder(InputError):
    module = "cover"


class TauPrimeInsideG0(InputError):
    module = "cover"


class GroupMismatch(InputError):
    module = "cover"


class NonIntegralGenus(TheoremViolation):
    module = "cover"


# lattice / ramification
class KernelNotAdmissible(InputError):
    module = "lattice"


class NotSemiIsogenous(InputError):
    module = "ramification"


# albanese
class ChainTooLong(InputError):
    module = "albanese"


# invariants
class NonIntegralData(InputError):
    module = "invariants"


class NonIntegralResult(TheoremViolation):
    module = "invariants"


# cli
class ConfigError(InputError):
    module = "cli"


class ParseError(ConfigError):
    pass


class SchemaError(ConfigError):
    def __init__(self, message: str, reason: str | None = None):
        super().__init__(message if reason is None else f"{reason}: {message}")
        self.reason = reason


class WordOutOfRange(ConfigError):
    pass


class FamilyUnknown(InputError):
    module = "cli"


class BudgetExceeded(InputError):
    module = "cli"
