"""HH handler - the five-column Hochschild homology table with optional dense cross-checks."""

import logging
from typing import Dict

from bimodule import regular_bimodule
from checks import CheckReport, COMPUTED
from config import ORACLE_MAX_DEGREE, ORACLE_MAX_DIM
from hochschild import dense_homology_dims
from morita import column_algebras, invariance_harness
from pooler import HomologyPooler
from rees import ReesSemigroup
from .report import RunOptions

logger = logging.getLogger(__name__)


def _oracle_section(s: ReesSemigroup, table, options: RunOptions) -> CheckReport:
    """Dense brute force against the sparse pipeline on columns small enough for it."""
    top = min(ORACLE_MAX_DEGREE, options.max_degree - 1)
    compared: Dict[str, object] = {}
    skipped = []
    mismatch = None
    for name, a in column_algebras(s).items():
        if a.dim > ORACLE_MAX_DIM or top < 0:
            skipped.append(name)
            continue
        dense = dense_homology_dims(a, regular_bimodule(a, verify=False), top)
        sparse = table.columns[name].homology_dims[:top + 1]
        compared[name] = {'dense': dense, 'sparse': sparse}
        if dense != sparse and mismatch is None:
            mismatch = name
    details = {'degrees': list(range(top + 1)), 'compared': compared, 'skipped_above_dim': skipped}
    if mismatch:
        details['mismatch'] = mismatch
        logger.error(f"Dense oracle disagrees on {mismatch}: {compared[mismatch]}")
    return CheckReport('dense_oracle', s.name, mismatch is None, details, COMPUTED)


def handle_hh(s: ReesSemigroup, options: RunOptions) -> Dict[str, object]:
    """
    Run the invariance harness for one instance.

    Returns:
        {'homology': table dict, 'checks': [CheckReport, ...]}

    Raises:
        DiscrepancyError: If an asserted equality fails
        SizeGuardError: If a chain space exceeds the cap
    """
    pooler = HomologyPooler(options.workers)
    table = invariance_harness(s, options.max_degree, options.position, runner=pooler.run_sync,
                               cap=options.chain_cap, witness=False)
    section = table.to_dict()

    classes = len(s.group.conjugacy_classes())
    checks = []
    if options.max_degree > 0:
        hh0 = table.columns['A(S)'].homology_dims[0]
        section['conjugacy_classes'] = classes
        checks.append(CheckReport('hh0_conjugacy_classes', s.name, hh0 == classes,
                                  {'HH_0(A(S))': hh0, 'conjugacy_classes': classes}, COMPUTED))
    if options.oracle:
        checks.append(_oracle_section(s, table, options))
    logger.info(f"HH table for {s.name}: A(S) {table.columns['A(S)'].certified}")
    return {'homology': section, 'checks': checks}
