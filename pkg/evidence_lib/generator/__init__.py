"""
Output generators: canonical BPA documents and CSV tables.
"""

from .bpa_generator import bpa_digest, serialize_bpa, to_document, write_bpa_file
from .csv_writer import CsvTableWriter, format_number, table_to_text, write_table

__all__ = [
    "to_document",
    "serialize_bpa",
    "bpa_digest",
    "write_bpa_file",
    "CsvTableWriter",
    "format_number",
    "table_to_text",
    "write_table",
]
