"""
Harness - Morita

Side-by-side Hochschild homology of A(S), Q[G], l1(S), A(S)# and l1(S)#
with regular coefficients, and the equalities the Morita equivalence and
H-unitality predict:

- A(S) and Q[G] agree in every certified degree
- all five columns agree in certified degrees n >= 1

Degree 0 differences between the reduced and the full algebras are
reported, never asserted.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from algebra import FiniteAlgebra, group_algebra, unitize
from bimodule import regular_bimodule
from config import CHAIN_DIM_CAP
from hochschild import HomologyReport, hochschild_complex, homology_dims
from rees import ReesSemigroup, default_position
from shared.errors import DiscrepancyError
from .functors import gamma, phi
from .witness import build_witness

logger = logging.getLogger(__name__)

COLUMNS = ('A(S)', 'Q[G]', 'l1(S)', 'A(S)#', 'l1(S)#')

Job = Tuple[Callable, tuple]
Runner = Callable[[Mapping[str, Job]], Dict[str, object]]


def homology_job(algebra: FiniteAlgebra, max_degree: int, cap: int = CHAIN_DIM_CAP,
                 cohomology: bool = True) -> HomologyReport:
    """HH_*(A, A) up to max_degree. Top-level so process pools can pickle it."""
    x = regular_bimodule(algebra, verify=False)
    c = hochschild_complex(algebra, x, max_degree, cap)
    return homology_dims(c, cohomology=cohomology)


def run_inline(jobs: Mapping[str, Job]) -> Dict[str, object]:
    return {key: fn(*args) for key, (fn, args) in jobs.items()}


def column_algebras(s: ReesSemigroup) -> Dict[str, FiniteAlgebra]:
    reduced, full = s.reduced_algebra, s.full_algebra
    return {
        'A(S)': reduced,
        'Q[G]': group_algebra(s.group),
        'l1(S)': full,
        'A(S)#': unitize(reduced),
        'l1(S)#': unitize(full),
    }


@dataclass
class InvarianceTable:
    """
    Attributes:
        instance_name: Name of S
        max_degree: N; degrees 0..N-1 are certified
        columns: Column name -> homology report, in COLUMNS order
        assertions: Each asserted equality with the degrees it covers
        reported: Differences outside the asserted region
        witness: Morita dimensions at the chosen position, if built
    """

    instance_name: str
    max_degree: int
    columns: Dict[str, HomologyReport]
    assertions: List[Dict[str, object]] = field(default_factory=list)
    reported: List[str] = field(default_factory=list)
    witness: Dict[str, object] = field(default_factory=dict)

    @property
    def certified_degrees(self) -> List[int]:
        return list(range(self.max_degree))

    def homology_row(self, n: int) -> Dict[str, int]:
        return {name: rep.homology_dims[n] for name, rep in self.columns.items()}

    def cohomology_row(self, n: int) -> Dict[str, int]:
        return {name: rep.cohomology_dims[n] for name, rep in self.columns.items()}

    def to_dict(self) -> Dict[str, object]:
        return {
            'instance': self.instance_name,
            'max_degree': self.max_degree,
            'certified_degrees': self.certified_degrees,
            'truncated_degree': self.max_degree,
            'homology': {name: rep.homology_dims for name, rep in self.columns.items()},
            'cohomology': {name: rep.cohomology_dims for name, rep in self.columns.items()},
            'chain_dims': {name: rep.chain_dims for name, rep in self.columns.items()},
            'assertions': list(self.assertions),
            'reported': list(self.reported),
            'witness': dict(self.witness),
        }


def _compare(table: InvarianceTable, names: Sequence[str], degrees: Sequence[int]) -> None:
    for n in degrees:
        for kind, row in (('homology', table.homology_row(n)), ('cohomology', table.cohomology_row(n))):
            values = {name: row[name] for name in names}
            if len(set(values.values())) > 1:
                raise DiscrepancyError(f"{table.instance_name}: {kind} in degree {n} differs: {values}")
    table.assertions.append({'columns': list(names), 'degrees': list(degrees), 'holds': True})


def witness_table(s: ReesSemigroup, i: int, lam: int) -> Dict[str, object]:
    """Dimensions that must not depend on the chosen (i, lambda)."""
    w = build_witness(s, i, lam)
    regular = regular_bimodule(w.algebra, verify=False)
    table = dict(w.dims())
    table['phi_regular'] = phi(w, regular).dim
    table['gamma_group_algebra'] = gamma(w, regular_bimodule(w.group_algebra, verify=False)).dim
    return table


def invariance_harness(s: ReesSemigroup, max_degree: int, position: Optional[Tuple[int, int]] = None,
                       runner: Optional[Runner] = None, cohomology: bool = True,
                       cap: int = CHAIN_DIM_CAP, witness: bool = True) -> InvarianceTable:
    """
    Compute and compare the five homology columns.

    Args:
        s: Rees semigroup
        max_degree: Top degree N of every complex
        position: (i, lambda) for the Morita witness; smallest valid by default
        runner: Maps {key: (fn, args)} to {key: result}; inline when omitted
        cohomology: Also compute cohomology of the dual complexes
        cap: Chain-space guard
        witness: Build the Morita witness and record its dimensions

    Raises:
        DiscrepancyError: If an asserted equality fails
        SizeGuardError: If a chain space exceeds cap
    """
    algebras = column_algebras(s)
    jobs = {name: (homology_job, (algebras[name], max_degree, cap, cohomology)) for name in COLUMNS}
    results = (runner or run_inline)(jobs)
    table = InvarianceTable(s.name, max_degree, {name: results[name] for name in COLUMNS})

    certified = table.certified_degrees
    _compare(table, ('A(S)', 'Q[G]'), certified)
    _compare(table, COLUMNS, [n for n in certified if n >= 1])
    logger.info(f"Invariance holds for {s.name} in degrees {certified}")

    if max_degree > 0:
        row = table.homology_row(0)
        if len(set(row.values())) > 1:
            msg = f"degree 0 differs across columns (not asserted): {row}"
            table.reported.append(msg)
            logger.warning(f"{s.name}: {msg}")
    table.reported.append(f"degree {max_degree} values are upper bounds (d_{max_degree + 1} not built)")

    if witness:
        i, lam = position if position is not None else default_position(s)
        table.witness = {'position': [i + 1, lam + 1], **witness_table(s, i, lam)}
    return table


def valid_positions(s: ReesSemigroup) -> List[Tuple[int, int]]:
    return [(i, lam) for i in range(s.i_size) for lam in range(s.lambda_size) if s.entry(lam, i) is not None]


def choice_independence(s: ReesSemigroup, positions: Optional[Sequence[Tuple[int, int]]] = None) -> Dict[str, object]:
    """
    Witness tables at several positions, which must coincide.

    Raises:
        DiscrepancyError: If two positions give different tables
    """
    positions = list(positions) if positions is not None else valid_positions(s)
    tables = {pos: witness_table(s, *pos) for pos in positions}
    reference = next(iter(tables.values()), {})
    for pos, tab in tables.items():
        if tab != reference:
            raise DiscrepancyError(f"witness at (i={pos[0] + 1}, lambda={pos[1] + 1}) gives {tab}, "
                                   f"expected {reference}")
    logger.info(f"Witness tables agree across {len(tables)} positions of {s.name}")
    return {'positions': [[i + 1, lam + 1] for i, lam in positions], 'table': reference}
