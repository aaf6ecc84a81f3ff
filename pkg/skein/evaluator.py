"""
Descending-algorithm evaluator with a shared memo.

Values are accumulated as SkeinSums: maps (matching, free circles,
u-exponent) -> Laurent coefficient in q. Circles become powers of [beta] only
at the end, which keeps every intermediate coefficient a Laurent polynomial.
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Tuple

from common.metrics import metrics
from config import config
from ring import BETA, GroundElem, LaurentQ, Z, quantum_int
from skein.gauss import (
    GaussCode,
    Matching,
    canonical_key,
    first_violation,
    self_writhe,
    simplify,
    smooth,
    switch,
)

logger = logging.getLogger(__name__)

SkeinKey = Tuple[Matching, int, int]
SkeinSum = Dict[SkeinKey, LaurentQ]


def _accumulate(acc: SkeinSum, part: SkeinSum, factor: LaurentQ, circles: int = 0, u_exp: int = 0):
    for (matching, c, k), coeff in part.items():
        key = (matching, c + circles, k + u_exp)
        total = acc.get(key, LaurentQ.zero()) + coeff * factor
        if total.is_zero():
            acc.pop(key, None)
        else:
            acc[key] = total


def skein_sum_to_ground(value: SkeinSum) -> Dict[Matching, GroundElem]:
    """Replace circle counts by powers of [beta] and u-exponents by u-powers"""
    qb = quantum_int(BETA)
    powers: Dict[int, GroundElem] = {}
    out: Dict[Matching, GroundElem] = {}
    for (matching, circles, k), coeff in sorted(value.items(), key=lambda kv: kv[0]):
        if circles not in powers:
            powers[circles] = qb ** circles
        term = (powers[circles] * coeff).shift_u(k)
        total = out.get(matching, GroundElem.zero()) + term
        if total.is_zero():
            out.pop(matching, None)
        else:
            out[matching] = total
    return out


class SkeinEvaluator:
    """
    Evaluate Gauss codes in the skein category.

    The memo maps canonical keys of simplified codes to their SkeinSums and
    is shared by every branch, including branches run on worker threads.
    """

    def __init__(self, memo: Optional[bool] = None, workers: Optional[int] = None):
        self.memo_enabled = config.SKEIN_MEMO if memo is None else memo
        self.workers = max(1, config.SKEIN_WORKERS if workers is None else workers)
        self._memo: Dict[tuple, SkeinSum] = {}
        self._lock = threading.Lock()
        self._stats = {"expansions": 0, "memo_hits": 0, "memo_misses": 0}

    @property
    def stats(self) -> Dict[str, int]:
        with self._lock:
            out = dict(self._stats)
            out["memo_size"] = len(self._memo)
        return out

    def reset(self):
        with self._lock:
            self._memo.clear()
            for k in self._stats:
                self._stats[k] = 0

    def _count(self, name: str):
        with self._lock:
            self._stats[name] += 1
        metrics.increment(f"skein_{name}")

    # ------------------------------------------------------------------
    # recursion
    # ------------------------------------------------------------------

    def evaluate(self, code: GaussCode) -> SkeinSum:
        code, circles, u_exp = simplify(code)
        value = self._evaluate_simplified(code)
        if not circles and not u_exp:
            return value
        out: SkeinSum = {}
        _accumulate(out, value, LaurentQ.one(), circles, u_exp)
        return out

    def _leaf(self, code: GaussCode) -> SkeinSum:
        return {(code.matching, len(code.cycles), -self_writhe(code)): LaurentQ.one()}

    def _evaluate_simplified(self, code: GaussCode) -> SkeinSum:
        label = first_violation(code)
        if label is None:
            return self._leaf(code)
        if not self.memo_enabled:
            return self._expand(code, label)

        key = canonical_key(code)
        with self._lock:
            cached = self._memo.get(key)
        if cached is not None:
            self._count("memo_hits")
            return cached
        self._count("memo_misses")
        value = self._expand(code, label)
        with self._lock:
            return self._memo.setdefault(key, value)

    def _expand(self, code: GaussCode, label: int) -> SkeinSum:
        """[D] = [D switched at label] + sign * z * [D smoothed at label]"""
        self._count("expansions")
        sign = code.signs[label]
        out: SkeinSum = {}
        _accumulate(out, self.evaluate(switch(code, label)), LaurentQ.one())
        _accumulate(out, self.evaluate(smooth(code, label)), Z * sign)
        return out

    # ------------------------------------------------------------------
    # entry point
    # ------------------------------------------------------------------

    def run(self, code: GaussCode) -> SkeinSum:
        """Evaluate a whole diagram, fanning the top branches out to worker threads"""
        if self.workers == 1:
            return self.evaluate(code)

        frontier: List[Tuple[LaurentQ, int, int, GaussCode]] = [(LaurentQ.one(), 0, 0, code)]
        done: SkeinSum = {}
        while frontier and len(frontier) < 2 * self.workers:
            grown: List[Tuple[LaurentQ, int, int, GaussCode]] = []
            for coeff, circles, u_exp, node in frontier:
                node, dc, du = simplify(node)
                label = first_violation(node)
                if label is None:
                    _accumulate(done, self._leaf(node), coeff, circles + dc, u_exp + du)
                    continue
                self._count("expansions")
                sign = node.signs[label]
                grown.append((coeff, circles + dc, u_exp + du, switch(node, label)))
                grown.append((coeff * Z * sign, circles + dc, u_exp + du, smooth(node, label)))
            frontier = grown

        logger.debug(f"Skein frontier of {len(frontier)} branches on {self.workers} workers")
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            results = list(pool.map(lambda item: self.evaluate(item[3]), frontier))
        for (coeff, circles, u_exp, _), part in zip(frontier, results):
            _accumulate(done, part, coeff, circles, u_exp)
        logger.debug(f"Skein memo holds {len(self._memo)} entries")
        return done
