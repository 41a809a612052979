"""
Handlers Package

Contains one module per command:
- hh: the five-column Hochschild homology table
- morita: witness construction and round trips
- checks: the structural certificate suite
- report: run options, run report, text and JSON output
"""

from .report import RunOptions, RunReport, build_provenance, render_text, to_canonical_json, write_json
from .hh import handle_hh
from .morita import handle_morita
from .checks import handle_checks, homotopy_checks, reachable_degree

__all__ = [
    'RunOptions', 'RunReport', 'build_provenance', 'render_text', 'to_canonical_json', 'write_json',
    'handle_hh', 'handle_morita', 'handle_checks', 'homotopy_checks', 'reachable_degree',
]
