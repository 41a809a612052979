"""
Homology - Hochschild

Homology and cohomology dimensions of chain complexes from exact ranks.

H_n = dim C_n - rank d_n - rank d_{n+1}, with d_0 = 0. Without d_{N+1}
the top value is dim ker d_N, an upper bound, and is flagged as truncated.
Cohomology is read off the transposed boundaries (the dual complex).
"""

import logging
import time
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

from linalg import certified_rank
from shared.errors import DiscrepancyError
from .complex import ChainComplex

logger = logging.getLogger(__name__)


@dataclass
class HomologyReport:
    """
    Attributes:
        algebra_name: Name of A
        coefficient_name: Name of X
        max_degree: Top degree N of the complex
        homology_dims: dim H_n for n = 0..N (top value truncated)
        cohomology_dims: dim H^n of the dual complex, same range
        chain_dims: dim C_n
        ranks: rank d_n for n = 1..N
        truncated_top: True when H_N is only an upper bound
        timings: Seconds per rank computation (not part of comparisons)
    """

    algebra_name: str
    coefficient_name: str
    max_degree: int
    homology_dims: List[int]
    cohomology_dims: List[int]
    chain_dims: List[int]
    ranks: List[int]
    truncated_top: bool = True
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def certified(self) -> List[int]:
        """Homology dims in degrees 0..N-1 (those not affected by truncation)."""
        return self.homology_dims[:self.max_degree] if self.truncated_top else list(self.homology_dims)

    def to_dict(self, include_timings: bool = False) -> Dict:
        data = asdict(self)
        if not include_timings:
            data.pop('timings')
        return data


def _dims_from_ranks(spaces: List[int], ranks: List[int]) -> List[int]:
    padded = [0] + list(ranks) + [0]
    return [spaces[n] - padded[n] - padded[n + 1] for n in range(len(spaces))]


def boundary_ranks(c: ChainComplex, transpose: bool = False,
                   timings: Optional[Dict[str, float]] = None) -> List[int]:
    """
    rank d_n for n = 1..N, bottom up.

    im d_n lies in ker d_{n-1}, so rank d_n <= dim C_{n-1} - rank d_{n-1};
    the bound lets certified_rank accept a modular result.
    """
    ranks = []
    previous = 0
    for n in range(1, c.max_degree + 1):
        d = c.boundary(n)
        if transpose:
            d = d.transpose()
        start = time.perf_counter()
        r = certified_rank(d, upper_bound=c.spaces[n - 1] - previous)
        if timings is not None:
            timings[f"{'co' if transpose else ''}rank_d{n}"] = time.perf_counter() - start
        logger.debug(f"rank d_{n}{'^T' if transpose else ''} of {c.algebra_name}/{c.coefficient_name} = {r}")
        ranks.append(r)
        previous = r
    return ranks


def cohomology_dims(c: ChainComplex) -> List[int]:
    """dim H^n of the dual complex, from ranks of the transposed boundaries."""
    return _dims_from_ranks(list(c.spaces), boundary_ranks(c, transpose=True))


def homology_dims(c: ChainComplex, cohomology: bool = True) -> HomologyReport:
    """
    Homology (and cohomology) dimensions of a chain complex.

    Args:
        c: Chain complex
        cohomology: Also compute the dual complex independently and compare

    Returns:
        HomologyReport

    Raises:
        DiscrepancyError: If homology and cohomology disagree in some degree
    """
    timings: Dict[str, float] = dict(c.timings)
    ranks = boundary_ranks(c, timings=timings)
    dims = _dims_from_ranks(list(c.spaces), ranks)
    co_dims = dims
    if cohomology:
        co_dims = _dims_from_ranks(list(c.spaces), boundary_ranks(c, transpose=True, timings=timings))
        if co_dims != dims:
            raise DiscrepancyError(f"homology {dims} and cohomology {co_dims} of {c.algebra_name} "
                                   f"with coefficients in {c.coefficient_name} disagree")
    report = HomologyReport(c.algebra_name, c.coefficient_name, c.max_degree, dims, list(co_dims),
                            list(c.spaces), ranks, True, timings)
    logger.info(f"HH({c.algebra_name}, {c.coefficient_name}) = {report.certified} "
                f"(degrees 0..{c.max_degree - 1}); top degree {c.max_degree} truncated")
    return report
