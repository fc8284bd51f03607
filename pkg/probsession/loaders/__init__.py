from .parser import (
    TermBuilder, load_global_type_file, parse_global_type, parse_local_type, parse_process,
    resolve_names,
)
from .printer import pretty_print
from .source import read_source
from .mps_reader import MpsReader
from .gty_reader import GtyReader
from .writer import TermWriter

__all__ = [
    'TermBuilder', 'load_global_type_file', 'parse_global_type', 'parse_local_type',
    'parse_process', 'resolve_names',
    'pretty_print',
    'read_source',
    'MpsReader',
    'GtyReader',
    'TermWriter',
]
