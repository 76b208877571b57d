"""
Reader for constraint problems in negative representation.

Layout::

    c optional comments
    p cspneg <n> <m>
    s <arity> <var_1> ... <var_arity> <t>
    <t lines of arity 0/1 values: the forbidden tuples>
    ...

Variables are numbered from 1 in the file.  A constraint with ``t = 0``
forbids nothing.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Union

from src.counter.relations import CspNegInstance
from src.exceptions import ParseError
from src.parsers.parsed_input import (
    ConstraintRecord,
    InputKind,
    ParsedInput,
    decode,
    is_comment,
    parse_header,
    parse_int,
)

logger = logging.getLogger(__name__)


def parse_cspneg(data: Union[str, bytes]) -> ParsedInput:
    """Parse ``p cspneg`` text into 0-based constraint records.

    Raises ParseError for arity mismatches, non-binary values, repeated or
    out-of-range variables and tuple or constraint count mismatches.
    """
    text = decode(data)
    header: Optional[tuple] = None
    records: List[ConstraintRecord] = []
    scope: tuple = ()
    rows: List[tuple] = []
    pending = 0
    start = 0
    last_line = 0

    def close() -> None:
        records.append(ConstraintRecord(start, scope, tuple(rows)))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or is_comment(line):
            continue
        last_line = lineno
        fields = line.split()

        if pending:
            if len(fields) != len(scope):
                raise ParseError(f"tuple has {len(fields)} values, constraint arity is {len(scope)}", lineno)
            if any(value not in ("0", "1") for value in fields):
                raise ParseError(f"non-binary value in tuple {' '.join(fields)!r}", lineno)
            rows.append(tuple(int(value) for value in fields))
            pending -= 1
            if not pending:
                close()
            continue

        if fields[0] == "p":
            if header is not None:
                raise ParseError("second header", lineno)
            header = parse_header(fields, "cspneg", lineno)
            continue
        if header is None:
            raise ParseError("constraint before 'p cspneg' header", lineno)
        n, m = header
        if fields[0] != "s":
            raise ParseError(f"expected a constraint line starting with 's', found {fields[0]!r}", lineno)
        if len(records) == m:
            raise ParseError(f"trailing garbage after constraint {m}", lineno)
        if len(fields) < 3:
            raise ParseError("constraint line needs an arity, its variables and a tuple count", lineno)
        arity = parse_int(fields[1], lineno, "arity")
        if arity < 1:
            raise ParseError("arity must be positive", lineno)
        if len(fields) != arity + 3:
            raise ParseError(f"arity {arity} needs {arity} variables and a tuple count", lineno)
        variables = [parse_int(token, lineno, "variable") for token in fields[2 : 2 + arity]]
        for var in variables:
            if not 1 <= var <= n:
                raise ParseError(f"variable {var} out of range for {n} variables", lineno)
        if len(set(variables)) != arity:
            raise ParseError("repeated variable in constraint scope", lineno)
        count = parse_int(fields[-1], lineno, "tuple count")
        if count < 0:
            raise ParseError("tuple count must be non-negative", lineno)
        scope = tuple(var - 1 for var in variables)
        rows = []
        start = lineno
        pending = count
        if not pending:
            close()

    if header is None:
        raise ParseError("missing 'p cspneg' header", last_line)
    n, m = header
    if pending:
        raise ParseError(f"constraint announces more tuples, {pending} missing", start)
    if len(records) != m:
        raise ParseError(f"header announces {m} constraints, found {len(records)}", last_line)
    logger.debug(f"parsed {m} constraints over {n} variables")
    return ParsedInput(InputKind.CSPNEG, n, tuple(records))


def write_cspneg(inst: CspNegInstance, comment: str = "") -> str:
    if inst.unsatisfiable:
        raise ValueError("the cspneg format cannot express an empty constraint")
    lines = [f"c {comment}"] if comment else []
    lines.append(f"p cspneg {inst.num_vars} {len(inst.constraints)}")
    for rel in inst.constraints:
        lines.append(" ".join(["s", str(len(rel.scope))] + [str(var + 1) for var in rel.scope] + [str(len(rel.tuples))]))
        lines.extend(" ".join(str(value) for value in row) for row in rel.tuples)
    return "\n".join(lines) + "\n"
