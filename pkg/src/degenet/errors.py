"""Exception hierarchy.

Every error carries a machine-readable ``code`` so CLI consumers can branch
without parsing messages. Exit-code mapping lives in :mod:`degenet.cli`.
"""

from __future__ import annotations


class DegenetError(Exception):
    """Base class for all degenet errors."""

    code = "error"


class DocumentError(DegenetError):
    """A document failed to parse or violated a schema/invariant rule.

    ``code`` is one of the ``syntax`` / ``schema.*`` / ``invariant.*`` reason
    codes documented in the README.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class InputError(DegenetError, ValueError):
    """Invalid argument or query (bad threshold, missing input, s == d)."""

    code = "input"


class UnknownIdError(InputError):
    """A referenced node, edge, element, algorithm or function id does not exist."""

    code = "unknown-id"


class DimensionMismatchError(DegenetError, ValueError):
    """Two vectors or distributions that must share a dimension do not."""

    code = "dimension-mismatch"


class SupportViolationError(DegenetError, ValueError):
    """KL divergence requested where p_i > 0 but m_i = 0."""

    code = "kl-support"


class UndefinedMetricError(DegenetError):
    """The metric has no defined value on this input (e.g. fewer than 2 elements)."""

    code = "undefined"


class PathLimitError(DegenetError):
    """Path enumeration aborted because it exceeded the configured path cap."""

    code = "path-limit"
