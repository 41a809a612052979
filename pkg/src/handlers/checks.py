"""Checks handler - projectivity, biprojectivity, amenability and homotopy certificates."""

import logging
from typing import Callable, Dict, List

from bimodule import regular_bimodule
from checks import (
    CheckReport, CONSTRUCTIVE, FULL, REDUCED, biprojectivity_check, group_diagonal_check,
    projectivity_check, right_splitting, self_induced_check, trivial_coefficients_check,
    weak_amenability_check,
)
from hochschild import HomotopyResult, bar_homotopy_check, hunital_homotopy_check
from rees import ReesSemigroup
from .report import RunOptions

logger = logging.getLogger(__name__)


def reachable_degree(count: Callable[[int], int], top: int, cap: int) -> int:
    """Largest n <= top with count(m) <= cap for every m <= n, or -1."""
    reached = -1
    for n in range(top + 1):
        if count(n) > cap:
            break
        reached = n
    return reached


def _homotopy_report(result: HomotopyResult, instance: str, requested: int, reached: int) -> CheckReport:
    details = {
        'degrees': list(result.degrees), 'chains_checked': result.chains_checked,
        'requested_degree': requested, 'reached_degree': reached,
    }
    if result.violation:
        details['violation'] = [result.violation[0], list(result.violation[1])]
    return CheckReport(f"{result.name}_homotopy", instance, result.passed, details, CONSTRUCTIVE)


def homotopy_checks(s: ReesSemigroup, options: RunOptions) -> List[CheckReport]:
    """Bar and H-unital contractions on A(S) and l1(S), to the largest degree within the cap."""
    top = options.homotopy_degree
    cap = options.homotopy_cap
    reports = []
    for which, a in ((REDUCED, s.reduced_algebra), (FULL, s.full_algebra)):
        d = a.dim
        bar_top = reachable_degree(lambda n: (d + 1) * d ** n * d, top, cap)
        if bar_top >= 0:
            result = bar_homotopy_check(a, regular_bimodule(a, verify=False), bar_top, cap)
            reports.append(_homotopy_report(result, s.name, top, bar_top))
        hunital_top = max(1, reachable_degree(lambda n: d ** n, top, cap))
        result = hunital_homotopy_check(a, right_splitting(s, which), hunital_top, cap)
        reports.append(_homotopy_report(result, s.name, top, hunital_top))
        if bar_top < top or hunital_top < top:
            logger.warning(f"Homotopy checks on {a.name} stop at degrees bar={bar_top}, "
                           f"hunital={hunital_top} (cap {cap}, requested {top})")
    return reports


def handle_checks(s: ReesSemigroup, options: RunOptions) -> Dict[str, object]:
    """
    Run the structural suite.

    Returns:
        {'checks': [CheckReport, ...]}
    """
    reduced, full = s.reduced_algebra, s.full_algebra
    reports = [
        projectivity_check(s),
        self_induced_check(reduced),
        self_induced_check(full),
        biprojectivity_check(s, options.position),
        group_diagonal_check(s),
        weak_amenability_check(s, cap=options.chain_cap),
    ]
    for a in (reduced, full):
        report = trivial_coefficients_check(a, options.max_degree, options.chain_cap, name=s.name)
        report.details['algebra'] = a.name
        reports.append(report)
    reports.extend(homotopy_checks(s, options))
    passed = sum(1 for r in reports if r)
    logger.info(f"Structural checks for {s.name}: {passed}/{len(reports)} passed")
    return {'checks': reports}

