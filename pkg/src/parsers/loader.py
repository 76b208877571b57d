"""
Format detection for instance files.

The ``p`` line decides the format: ``p cnf`` goes to the DIMACS reader,
``p cspneg`` to the negative-representation reader.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Union

from src.counter.relations import CspNegInstance
from src.exceptions import ParseError
from src.parsers.cspneg_parser import parse_cspneg
from src.parsers.dimacs_parser import parse_dimacs
from src.parsers.parsed_input import ParsedInput, decode, is_comment

logger = logging.getLogger(__name__)


def sniff(data: Union[str, bytes]) -> ParsedInput:
    """Parse ``data`` with the reader its header asks for."""
    text = decode(data)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or is_comment(line):
            continue
        fields = line.split()
        if fields[0] == "p" and len(fields) > 1:
            if fields[1] == "cnf":
                return parse_dimacs(text)
            if fields[1] == "cspneg":
                return parse_cspneg(text)
            raise ParseError(f"unknown format {fields[1]!r}", lineno)
        raise ParseError("expected a 'p cnf' or 'p cspneg' header", lineno)
    raise ParseError("missing header")


def load_instance(path: Union[str, Path]) -> CspNegInstance:
    """Read and convert the instance stored at ``path``."""
    data = Path(path).read_bytes()
    parsed = sniff(data)
    logger.info(f"{path}: {parsed.kind.value} with {parsed.num_vars} variables, {len(parsed.records)} constraints")
    return parsed.to_instance()
