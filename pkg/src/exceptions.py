"""
Error hierarchy shared by every package.

Library code raises these; the CLI in ``main.py`` maps them onto exit codes
(1 for input and validation problems, 2 when an instance is not decomposable).
"""

from __future__ import annotations

from enum import Enum
from typing import Optional


class CounterError(Exception):
    """Base class for all errors raised by this project."""


class HypergraphError(CounterError, ValueError):
    """Unknown edge ids, empty edges or other malformed hypergraph input."""


class ParseError(CounterError):
    """A located diagnostic produced while reading one of the text formats."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line

    def __str__(self) -> str:
        return f"line {self.line}: {self.message}"


class SchemaError(ParseError):
    """A decomposition document that does not match the expected JSON schema."""


class InvalidDecomposition(CounterError):
    """A decomposition failed the join tree or disjoint branches check."""


class SizeGuardExceeded(CounterError):
    """An exhaustive routine was asked to run beyond its configured size."""


class RejectReason(str, Enum):
    EMPTY_COVER = "empty_cover"
    NO_JOIN_PATH = "no_join_path"
    TRACE_NOT_CHAIN = "trace_not_chain"
    EMPTY_RESTRICTION = "empty_restriction"
    RECURSION_FAILURE = "recursion_failure"


class Rejection(CounterError):
    """A separator or decomposition does not exist for the given input."""

    def __init__(
        self,
        reason: RejectReason,
        message: str = "",
        edge: Optional[int] = None,
        cause: Optional[RejectReason] = None,
    ):
        super().__init__(message or reason.value)
        self.reason = reason
        self.edge = edge
        self.cause = cause

    def nested(self) -> "Rejection":
        """Re-wrap a rejection coming from a recursive call."""
        if self.reason is RejectReason.RECURSION_FAILURE:
            return self
        return Rejection(RejectReason.RECURSION_FAILURE, str(self), edge=self.edge, cause=self.reason)


class NotDecomposable(CounterError):
    """Some connected component has no disjoint branches decomposition."""

    def __init__(self, component: int, message: str = ""):
        super().__init__(message or f"component {component} is not db-rootable at any edge")
        self.component = component
