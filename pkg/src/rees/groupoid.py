"""
Groupoid Sandwich - Rees Construction

Sandwich matrices built from a connected groupoid with vertex set X:
p_{lambda i} = (s_alpha(i) t_beta(lambda))^-1 when alpha(i) = beta(lambda),
o otherwise.
"""

import logging
from typing import Sequence, Tuple

from algebra import GroupTable
from shared.errors import BadShape, RangeMismatch
from .semigroup import SandwichEntry

logger = logging.getLogger(__name__)


def groupoid_sandwich(x_size: int, alpha: Sequence[int], beta: Sequence[int], g: GroupTable,
                      s_choices: Sequence[int], t_choices: Sequence[int]) -> Tuple[Tuple[SandwichEntry, ...], ...]:
    """
    Build the Lambda x I sandwich matrix of the groupoid construction.

    Args:
        x_size: |X|
        alpha: alpha(i) in 0..x_size-1 for each i in I
        beta: beta(lambda) in 0..x_size-1 for each lambda in Lambda
        g: The vertex group
        s_choices: s_x in G for each vertex x
        t_choices: t_x in G for each vertex x

    Returns:
        Sandwich rows indexed by lambda, entries None for o

    Raises:
        BadShape: Out-of-range vertices or group elements
        RangeMismatch: If alpha(I) != beta(Lambda)
    """
    if len(s_choices) != x_size or len(t_choices) != x_size:
        raise BadShape(f"s and t need one group element per vertex ({x_size})")
    for label, values, bound in (('alpha', alpha, x_size), ('beta', beta, x_size),
                                 ('s', s_choices, g.order), ('t', t_choices, g.order)):
        bad = [v for v in values if not 0 <= v < bound]
        if bad:
            raise BadShape(f"{label} has out-of-range value {bad[0]}")
    if set(alpha) != set(beta):
        raise RangeMismatch(f"alpha(I)={sorted(v + 1 for v in set(alpha))} "
                            f"differs from beta(Lambda)={sorted(v + 1 for v in set(beta))}")
    rows = []
    for b in beta:
        row = []
        for a in alpha:
            row.append(g.inv(g.mul(s_choices[a], t_choices[b])) if a == b else None)
        rows.append(tuple(row))
    logger.debug(f"Groupoid sandwich over {x_size} vertices: {len(beta)}x{len(alpha)}")
    return tuple(rows)
