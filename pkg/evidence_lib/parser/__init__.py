"""
Parsers for BPA documents.
"""

from .bpa_parser import BpaDocument, BpaParser, parse_bpa

__all__ = ["BpaParser", "BpaDocument", "parse_bpa"]
