"""
Parsed instance files before they become ``CspNegInstance`` values.

Both text formats are line oriented; every record remembers the line it
started on so that later checks can still point at the input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Tuple, Union

from src.counter.relations import BoolTuple, CspNegInstance, Relation
from src.counter.transform import cnf_to_cspneg
from src.exceptions import ParseError

_INTEGER = re.compile(r"-?[0-9]+")
_MAX_DIGITS = 18


class InputKind(str, Enum):
    CNF = "cnf"
    CSPNEG = "cspneg"


@dataclass(frozen=True)
class ConstraintRecord:
    """One clause or one constraint as read from the file.

    ``scope`` holds 0-based variable ids in file order; ``literals`` is only
    set for clauses and keeps the deduplicated signed literals.
    """
    line: int
    scope: Tuple[int, ...]
    forbidden: Tuple[BoolTuple, ...] = ()
    literals: Tuple[int, ...] = ()


@dataclass(frozen=True)
class ParseReport:
    duplicate_literals: int = 0
    tautologies: int = 0
    empty_clauses: int = 0


@dataclass(frozen=True)
class ParsedInput:
    kind: InputKind
    num_vars: int
    records: Tuple[ConstraintRecord, ...] = ()
    report: ParseReport = field(default_factory=ParseReport)

    def to_instance(self) -> CspNegInstance:
        if self.kind is InputKind.CNF:
            return cnf_to_cspneg([record.literals for record in self.records], self.num_vars)
        return CspNegInstance(
            self.num_vars,
            tuple(Relation(record.scope, record.forbidden) for record in self.records),
        )


def decode(data: Union[str, bytes]) -> str:
    """Text of ``data``; undecodable bytes raise a ParseError on their line."""
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError("input is not valid UTF-8", data[: exc.start].count(b"\n") + 1) from None


def parse_int(token: str, line: int, what: str = "integer") -> int:
    if not _INTEGER.fullmatch(token):
        raise ParseError(f"expected {what}, found {token[:20]!r}", line)
    if len(token.lstrip("-")) > _MAX_DIGITS:
        raise ParseError(f"{what} out of range: {token[:20]}...", line)
    return int(token)


def parse_header(fields: list, expected: str, line: int) -> Tuple[int, int]:
    """``p <expected> <n> <m>`` with non-negative counts."""
    if len(fields) != 4 or fields[0] != "p" or fields[1] != expected:
        raise ParseError(f"malformed header, expected 'p {expected} <vars> <count>'", line)
    n = parse_int(fields[2], line, "variable count")
    m = parse_int(fields[3], line, "constraint count")
    if n < 0 or m < 0:
        raise ParseError("header counts must be non-negative", line)
    return n, m


def is_comment(line: str) -> bool:
    return line == "c" or line.startswith("c ") or line.startswith("c\t")
