"""H1 accounting and verdicts

Every base point contributes dim(G) coboundary directions to the
kernel, so dim H1 <= nullity - dim(G) * |V'|.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Sequence

from rigidcover.models import EngineKind, Verdict
from rigidcover.numfield import lie_algebra_dimension
from rigidcover.rank.engine import NullityResult
from rigidcover.utils.exceptions import EngineDisagreementError, InconsistentAccountingError


@dataclass(frozen=True)
class H1Bound:
    """Upper bound on dim H1

    Attributes:
        dim_g: n(n+1)/2
        vertex_count: Number of base points
        bound: nullity - dim_g * vertex_count
        verdict: RIGID if bound is 0, BOUND_POSITIVE otherwise
    """
    dim_g: int
    vertex_count: int
    bound: int
    verdict: Verdict

    def to_dict(self) -> Dict[str, int]:
        return {
            'dimG': self.dim_g,
            'vertex_count': self.vertex_count,
            'h1_bound': self.bound,
        }


def h1_bound(nullity: int, vertex_count: int, n: int) -> H1Bound:
    """Convert a nullity into the H1 bound

    Raises:
        InconsistentAccountingError: The bound is negative, so the kernel
            misses coboundary directions
    """
    dim_g = lie_algebra_dimension(n)
    bound = nullity - dim_g * vertex_count
    if bound < 0:
        raise InconsistentAccountingError(
            f'Nullity {nullity} is below the coboundary dimension {dim_g} * {vertex_count}'
        )
    verdict = Verdict.RIGID if bound == 0 else Verdict.BOUND_POSITIVE
    return H1Bound(dim_g, vertex_count, bound, verdict)


def agreed_nullity(results: Sequence[NullityResult]) -> int:
    """Common nullity of all engine results

    Raises:
        EngineDisagreementError: Engines report different nullities
    """
    values = {r.engine.value: r.nullity for r in results}
    if len(set(values.values())) != 1:
        raise EngineDisagreementError(f'Engines disagree on the nullity: {values}')
    return results[0].nullity


def decide_verdict(results: Sequence[NullityResult], bound: H1Bound, threshold: float) -> Verdict:
    """Verdict for a set of engine results

    Any numeric result whose gap ratio is below the threshold makes the
    verdict Inconclusive, even when an exact result is present.
    """
    for result in results:
        if result.engine is EngineKind.NUMERIC and not result.certified(threshold):
            logging.warning('Gap ratio %.3e is below the certification threshold %.1e',
                            result.gap_ratio, threshold)
            return Verdict.INCONCLUSIVE
    return bound.verdict
