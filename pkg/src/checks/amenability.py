"""
Amenability - Structure Checks

Self-inducedness, weak amenability H^1(A, A*) = 0, and H-unitality seen
through trivial coefficients.
"""

import logging
from typing import Dict, Iterable, Optional

from algebra import FiniteAlgebra, unitize
from bimodule import dual_bimodule, inducedness_check, regular_bimodule, trivial_bimodule
from config import CHAIN_DIM_CAP
from hochschild import hochschild_cochain_complex, hochschild_complex, homology_dims
from rees import ReesSemigroup
from shared.errors import DiscrepancyError
from .report import CheckReport, COMPUTED

logger = logging.getLogger(__name__)


def self_induced_check(a: FiniteAlgebra) -> CheckReport:
    """Is A (x)_A A (x)_A A -> A bijective?"""
    w = inducedness_check(regular_bimodule(a, verify=False))
    logger.info(f"Self-inducedness of {a.name}: tensor dim {w.tensor_dim}, dim {w.module_dim}, rank {w.rank}")
    return CheckReport('self_induced', a.name, bool(w), {
        'tensor_dim': w.tensor_dim, 'algebra_dim': w.module_dim, 'multiplication_rank': w.rank,
    }, COMPUTED)


def four_algebras(s: ReesSemigroup) -> Dict[str, FiniteAlgebra]:
    reduced, full = s.reduced_algebra, s.full_algebra
    return {'A(S)': reduced, 'l1(S)': full, 'A(S)#': unitize(reduced), 'l1(S)#': unitize(full)}


def direct_first_cohomology(a: FiniteAlgebra, cap: int = CHAIN_DIM_CAP) -> int:
    """dim H^1(A, A*) from Hom(A^(x)n, A*) without transposing anything."""
    dual = dual_bimodule(regular_bimodule(a, verify=False))
    return hochschild_cochain_complex(a, dual, 2, cap).cohomology_dims()[1]


def weak_amenability_check(s: ReesSemigroup, max_degree: int = 1, direct: Iterable[str] = ('A(S)',),
                           cap: int = CHAIN_DIM_CAP) -> CheckReport:
    """
    dim H^1(A, A*) = 0 for A(S), l1(S) and both unitizations.

    H^1(A, A*) is read as the degree-1 cohomology of the dual of the
    Hochschild complex with regular coefficients, built to degree
    max_degree + 1 so degree 1 is certified. For the columns named in direct,
    the cochain complex is also built directly and must agree.

    Raises:
        DiscrepancyError: If transposed and direct computations disagree
        SizeGuardError: If a chain space exceeds cap
    """
    direct = set(direct)
    values: Dict[str, Dict[str, int]] = {}
    for name, a in four_algebras(s).items():
        report = homology_dims(hochschild_complex(a, regular_bimodule(a, verify=False), max_degree + 1, cap))
        entry = {'H_1': report.homology_dims[1], 'H^1_dual': report.cohomology_dims[1]}
        if name in direct:
            entry['H^1_direct'] = direct_first_cohomology(a, cap)
            if entry['H^1_direct'] != entry['H^1_dual']:
                raise DiscrepancyError(f"H^1({a.name}, {a.name}*): direct {entry['H^1_direct']} "
                                       f"vs transposed {entry['H^1_dual']}")
        values[name] = entry
    passed = all(v['H^1_dual'] == 0 for v in values.values())
    logger.info(f"Weak amenability of {s.name}: {values}")
    return CheckReport('weak_amenability', s.name, passed, {'dims': values, 'degree': 1}, COMPUTED)


def trivial_coefficients_check(a: FiniteAlgebra, max_degree: int = 3,
                               cap: int = CHAIN_DIM_CAP, name: Optional[str] = None) -> CheckReport:
    """
    H_n(A, Q_triv) = 0 for 1 <= n < max_degree, with A acting by zero on Q.

    This is the bar-complex form of H-unitality: the complex
    .. -> A^(x)2 -> A -> Q computes H_n(A, Q_triv) with a shift.
    """
    triv = trivial_bimodule(a)
    report = homology_dims(hochschild_complex(a, triv, max_degree, cap), cohomology=False)
    nonzero = {n: report.homology_dims[n] for n in range(1, max_degree) if report.homology_dims[n]}
    passed = not nonzero
    details = {'homology': report.certified, 'degrees': list(range(1, max_degree))}
    if nonzero:
        details['nonzero'] = nonzero
    return CheckReport('trivial_coefficients', name or a.name, passed, details, COMPUTED)
