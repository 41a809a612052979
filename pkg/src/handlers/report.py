"""Report handler - run options, the run report, and its text/JSON renderings."""

import json
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from checks import CheckReport
from config import CHAIN_DIM_CAP, HOMOTOPY_CHAIN_CAP, HOMOTOPY_DEGREE, MAX_DEGREE, VERSION
from instance import InstanceConfig, to_json_dict

logger = logging.getLogger(__name__)

JSON_SAFE_INT = 2 ** 53


@dataclass
class RunOptions:
    """Flags shared by every command; position is 0-based."""

    max_degree: int = MAX_DEGREE
    position: Optional[Tuple[int, int]] = None
    force: bool = False
    oracle: bool = False
    seed: Optional[int] = None
    workers: int = 1
    chain_cap: int = CHAIN_DIM_CAP
    homotopy_cap: int = HOMOTOPY_CHAIN_CAP
    homotopy_degree: int = HOMOTOPY_DEGREE


@dataclass
class RunReport:
    """
    Everything one command produced.

    Attributes:
        command: hh | morita | checks | all
        instance: Echo of the parsed config
        sections: Section name -> JSON-ready data
        checks: Structural certificates in execution order
        provenance: Version, caps and truncation flags
        timings: Seconds per section (text output only)
    """

    command: str
    instance: InstanceConfig
    sections: Dict[str, object] = field(default_factory=dict)
    checks: List[CheckReport] = field(default_factory=list)
    provenance: Dict[str, object] = field(default_factory=dict)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks)

    def failed_checks(self) -> List[CheckReport]:
        return [c for c in self.checks if not c]

    def to_dict(self) -> Dict[str, object]:
        return {
            'command': self.command,
            'instance': to_json_dict(self.instance),
            'sections': self.sections,
            'checks': [c.to_dict() for c in self.checks],
            'provenance': self.provenance,
            'passed': self.passed,
        }


def build_provenance(options: RunOptions) -> Dict[str, object]:
    return {
        'version': VERSION,
        'max_degree': options.max_degree,
        'certified_degrees': list(range(options.max_degree)),
        'truncated_degree': options.max_degree,
        'chain_dim_cap': options.chain_cap,
        'homotopy_chain_cap': options.homotopy_cap,
        'force': options.force,
        'oracle': options.oracle,
    }


def _json_safe(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value) if abs(value) >= JSON_SAFE_INT else value
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, (str, float)):
        return value
    return str(value)


def to_canonical_json(report: RunReport) -> str:
    """Sorted keys, no timings, large integers as strings; byte-stable across runs."""
    return json.dumps(_json_safe(report.to_dict()), sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def write_json(report: RunReport, path: str) -> None:
    with open(path, 'w', encoding='utf-8') as fh:
        fh.write(to_canonical_json(report))
    logger.info(f"Wrote JSON report to {path}")


# === Text ===

def _homology_table(table: Dict[str, object], kind: str) -> List[str]:
    columns = table[kind]
    names = list(columns)
    width = max(8, *(len(n) + 2 for n in names))
    lines = [f"  {kind}".ljust(10) + ''.join(n.rjust(width) for n in names)]
    top = table['max_degree']
    for n in range(top + 1):
        if n == 1:
            lines.append('  ' + '-' * (8 + width * len(names)) + '  asserted: all columns agree for n >= 1')
        marker = '*' if n == top else ' '
        lines.append(f"  n={n}{marker}".ljust(10) + ''.join(str(columns[c][n]).rjust(width) for c in names))
    lines.append(f"  * degree {top} is an upper bound (not certified)")
    return lines


def render_text(report: RunReport) -> str:
    lines = [f"Instance {report.instance.name} ({report.command}), "
             f"max degree {report.provenance.get('max_degree')}"]
    hh = report.sections.get('homology')
    if hh:
        lines.append('')
        lines.append('Hochschild homology with regular coefficients')
        lines.extend(_homology_table(hh, 'homology'))
        lines.extend(_homology_table(hh, 'cohomology'))
        for note in hh.get('reported', []):
            lines.append(f"  note: {note}")
        for assertion in hh.get('assertions', []):
            lines.append(f"  asserted {' = '.join(assertion['columns'])} in degrees {assertion['degrees']}")
    for name, data in report.sections.items():
        if name == 'homology':
            continue
        lines.append('')
        lines.append(f"{name}:")
        for key, value in data.items():
            lines.append(f"  {key}: {value}")
    if report.checks:
        lines.append('')
        lines.append('Checks')
        for c in report.checks:
            status = 'PASS' if c else 'FAIL'
            lines.append(f"  [{status}] {c.check_name} ({c.label})")
            if not c:
                lines.append(f"         {c.details}")
    if report.timings:
        lines.append('')
        lines.append('Timings: ' + ', '.join(f"{k} {v:.2f}s" for k, v in report.timings.items()))
    lines.append('')
    lines.append('All assertions passed' if report.passed else
                 f"{len(report.failed_checks())} check(s) FAILED")
    return '\n'.join(lines) + '\n'
