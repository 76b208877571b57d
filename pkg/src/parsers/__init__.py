from src.parsers.cspneg_parser import parse_cspneg
from src.parsers.decomposition_io import read_decomposition, write_decomposition
from src.parsers.dimacs_parser import parse_dimacs
from src.parsers.loader import load_instance, sniff
from src.parsers.parsed_input import ConstraintRecord, InputKind, ParsedInput, ParseReport

__all__ = [
    "ConstraintRecord",
    "InputKind",
    "ParsedInput",
    "ParseReport",
    "load_instance",
    "parse_cspneg",
    "parse_dimacs",
    "read_decomposition",
    "sniff",
    "write_decomposition",
]
