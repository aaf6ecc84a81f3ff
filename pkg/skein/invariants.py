"""
HOMFLY-PT and its specializations from the skein evaluator.
"""

import logging
from enum import Enum
from typing import Dict, Optional

from common.decorators import log_function_call, timed
from common.exceptions import MalformedDiagram
from diagram import SliceDiagram, cut_open, trace
from ring import GroundElem, RationalQ, divide_by_qint_beta, specialize_beta
from skein.evaluator import SkeinEvaluator, skein_sum_to_ground
from skein.gauss import Matching, from_trace

logger = logging.getLogger(__name__)


class ReducedVariant(str, Enum):
    GENERIC = "generic"
    SLN = "sln"
    ALEXANDER = "alexander"


def _evaluator(evaluator: Optional[SkeinEvaluator]) -> SkeinEvaluator:
    return evaluator if evaluator is not None else SkeinEvaluator()


@timed("skein.eval_tangle")
def eval_tangle(d: SliceDiagram, evaluator: Optional[SkeinEvaluator] = None) -> Dict[Matching, GroundElem]:
    """
    Express d in the basis of descending layered matchings of its boundary.

    Keys are matchings ((start, end), ...) of boundary endpoints; ("s", p) is
    the p-th source point and ("t", p) the p-th target point. For a
    (1,1)-tangle the only key is the identity strand.
    """
    code = from_trace(trace(d))
    value = _evaluator(evaluator).run(code)
    return skein_sum_to_ground(value)


@log_function_call
@timed("skein.eval_closed")
def eval_closed(d: SliceDiagram, evaluator: Optional[SkeinEvaluator] = None) -> GroundElem:
    if not d.is_closed:
        raise MalformedDiagram("eval_closed needs a closed diagram")
    values = eval_tangle(d, evaluator)
    return values.get((), GroundElem.zero())


def homfly(d: SliceDiagram, evaluator: Optional[SkeinEvaluator] = None) -> GroundElem:
    return eval_closed(d, evaluator)


def rt_sln(d: SliceDiagram, n: int, evaluator: Optional[SkeinEvaluator] = None) -> RationalQ:
    return specialize_beta(eval_closed(d, evaluator), n)


def jones(d: SliceDiagram, evaluator: Optional[SkeinEvaluator] = None) -> RationalQ:
    return rt_sln(d, 2, evaluator)


def framing_normalize(v: GroundElem, writhe: int) -> GroundElem:
    """Multiply by u^writhe, undoing the u^-1 of every positive curl"""
    return v.shift_u(writhe)


@log_function_call
def reduced(
    d: SliceDiagram,
    variant: ReducedVariant = ReducedVariant.GENERIC,
    n: Optional[int] = None,
    evaluator: Optional[SkeinEvaluator] = None,
):
    """
    The closed value divided by [beta]; generic returns the quotient, sln
    specializes it at beta = n and alexander at beta = 0.
    """
    variant = ReducedVariant(variant)
    quotient = divide_by_qint_beta(eval_closed(d, evaluator))
    if variant is ReducedVariant.GENERIC:
        return quotient
    if variant is ReducedVariant.SLN:
        if n is None:
            raise ValueError("sln variant needs n")
        return specialize_beta(quotient, n)
    return specialize_beta(quotient, 0)


def reduced_by_cut(d: SliceDiagram, component: int = 1, evaluator: Optional[SkeinEvaluator] = None) -> GroundElem:
    """Scalar of the (1,1)-tangle obtained by cutting one component open"""
    values = eval_tangle(cut_open(d, component), evaluator)
    if not values:
        return GroundElem.zero()
    (matching, scalar), = values.items()
    logger.debug(f"Cut component {component}: strand {matching}")
    return scalar
