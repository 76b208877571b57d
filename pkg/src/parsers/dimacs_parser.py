"""
Reader for DIMACS CNF files.

``parse_dimacs`` accepts the usual layout: ``c`` comment lines, one
``p cnf <n> <m>`` header and then exactly ``m`` clauses, each a run of
signed variable numbers closed by ``0`` that may span several lines.
Anything after the last clause, including the ``%`` end marker some
benchmark sets carry, is reported as trailing garbage.

Duplicate literals are dropped and clauses containing a variable in both
polarities are kept as tautologies; both are counted in the parse report.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence, Union

from src.exceptions import ParseError
from src.parsers.parsed_input import (
    ConstraintRecord,
    InputKind,
    ParsedInput,
    ParseReport,
    decode,
    is_comment,
    parse_header,
    parse_int,
)

logger = logging.getLogger(__name__)


def parse_dimacs(data: Union[str, bytes]) -> ParsedInput:
    """Parse DIMACS CNF text.

    Parameters
    ----------
    data : Union[str, bytes]
        File contents; bytes must be UTF-8.  LF and CRLF line ends are
        both accepted.

    Returns
    -------
    ParsedInput
        One record per clause, with variables mapped to 0-based ids.

    Raises
    ------
    ParseError
        Missing or repeated header, literal out of range, unterminated
        clause, clause count mismatch or trailing garbage.
    """
    text = decode(data)
    header: Optional[tuple] = None
    records: List[ConstraintRecord] = []
    current: List[int] = []
    start = 0
    duplicates = tautologies = empty = 0
    last_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or is_comment(line):
            continue
        last_line = lineno
        fields = line.split()
        if fields[0] == "p":
            if header is not None:
                raise ParseError("second header", lineno)
            header = parse_header(fields, "cnf", lineno)
            continue
        if header is None:
            raise ParseError("clause before 'p cnf' header", lineno)
        n, m = header
        for token in fields:
            if len(records) == m:
                raise ParseError(f"trailing garbage after clause {m}: {token!r}", lineno)
            lit = parse_int(token, lineno, "literal")
            if lit == 0:
                unique = list(dict.fromkeys(current))
                duplicates += len(current) - len(unique)
                if not unique:
                    empty += 1
                elif any(-lit in unique for lit in unique):
                    tautologies += 1
                scope = tuple(dict.fromkeys(abs(lit) - 1 for lit in unique))
                records.append(ConstraintRecord(start or lineno, scope, literals=tuple(unique)))
                current = []
                start = 0
                continue
            if abs(lit) > n:
                raise ParseError(f"literal {lit} out of range for {n} variables", lineno)
            if not current:
                start = lineno
            current.append(lit)

    if header is None:
        raise ParseError("missing 'p cnf' header", last_line)
    n, m = header
    if current:
        raise ParseError("clause not terminated by 0", start)
    if len(records) != m:
        raise ParseError(f"header announces {m} clauses, found {len(records)}", last_line)

    report = ParseReport(duplicates, tautologies, empty)
    if duplicates or tautologies or empty:
        logger.info(
            f"parse report: {duplicates} duplicate literals removed, "
            f"{tautologies} tautological clauses, {empty} empty clauses"
        )
    return ParsedInput(InputKind.CNF, n, tuple(records), report)


def write_dimacs(clauses: Sequence[Sequence[int]], n: int, comment: str = "") -> str:
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p cnf {n} {len(clauses)}")
    lines.extend(" ".join(str(lit) for lit in list(clause) + [0]) for clause in clauses)
    return "\n".join(lines) + "\n"
