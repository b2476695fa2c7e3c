"""Readers for JSON documents and the command-line grammars."""

from .complex_parser import (
    certificate_from_dict,
    complex_from_dict,
    load_certificate,
    load_complex,
    load_json,
    planted_from_dict,
    report_from_dict,
    ring_from_dict,
)
from .grammar import RING_GRAMMAR_HELP, parse_plan, parse_ring

__all__ = [
    "RING_GRAMMAR_HELP",
    "certificate_from_dict",
    "complex_from_dict",
    "load_certificate",
    "load_complex",
    "load_json",
    "parse_plan",
    "parse_ring",
    "planted_from_dict",
    "report_from_dict",
    "ring_from_dict",
]
