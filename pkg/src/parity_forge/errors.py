"""Exception types shared across the toolkit.

Every error carries a machine-readable ``kind`` so the command-line layer can
serialize failures uniformly.
"""

from __future__ import annotations


class ParityForgeError(Exception):
    """Base class for all toolkit errors."""

    kind = "error"


class InvalidInputError(ParityForgeError, ValueError):
    """A precondition on user-supplied data was violated."""

    kind = "invalid-input"


class ResourceLimitError(ParityForgeError):
    """A size cap (qubit count, brute-force bound) was exceeded."""

    kind = "resource-limit"


class NotFoundError(ParityForgeError, LookupError):
    """A requested element does not exist (e.g. unreachable witness target)."""

    kind = "not-found"


class InternalError(ParityForgeError, RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""

    kind = "internal-error"
