"""
Parsing helpers for the command-line front end.
"""

from monocodes.utils.parsing import (
    arguments_digest,
    file_digest,
    load_channel_table,
    parse_channel_spec,
    parse_monomials,
)

__all__ = [
    "arguments_digest",
    "file_digest",
    "load_channel_table",
    "parse_channel_spec",
    "parse_monomials",
]
