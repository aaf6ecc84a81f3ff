"""
Signed Gauss codes of traced diagrams and the local rewrites the skein
engine needs: crossing switch, oriented smoothing, curl and bigon removal,
the descending test and a relabeling-invariant memo key.

A code is a list of open arcs (start endpoint, visits, end endpoint), kept
sorted by start endpoint, and a list of closed cycles of visits. A visit is
(crossing label, passes over). Every label appears exactly twice, once over
and once under.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from diagram.model import Arrow
from diagram.trace import Endpoint, Trace

Visit = Tuple[int, bool]
Matching = Tuple[Tuple[Endpoint, Endpoint], ...]


@dataclass(frozen=True)
class Arc:
    start: Endpoint
    visits: Tuple[Visit, ...]
    end: Endpoint


@dataclass(frozen=True, eq=False)
class GaussCode:
    arcs: Tuple[Arc, ...]
    cycles: Tuple[Tuple[Visit, ...], ...]
    signs: Dict[int, int] = field(default_factory=dict)

    @property
    def crossings(self) -> int:
        return len(self.signs)

    @property
    def matching(self) -> Matching:
        return tuple((a.start, a.end) for a in self.arcs)

    def strands(self) -> List[Tuple[Tuple[Visit, ...], bool]]:
        """(visits, cyclic) for arcs then cycles"""
        return [(a.visits, False) for a in self.arcs] + [(c, True) for c in self.cycles]


def _make(arcs: Sequence[Arc], cycles, signs: Dict[int, int]) -> GaussCode:
    return GaussCode(
        arcs=tuple(sorted(arcs, key=lambda a: a.start)),
        cycles=tuple(tuple(c) for c in cycles),
        signs=signs,
    )


def from_trace(t: Trace) -> GaussCode:
    arcs = [Arc(s.start, tuple(s.visits), s.end) for s in t.strands if not s.closed]
    cycles = [tuple(s.visits) for s in t.strands if s.closed]
    return _make(arcs, cycles, dict(t.signs))


def identity_matching(source: Sequence) -> Matching:
    """Matching of the straight strands on a boundary object"""
    pairs = []
    for p, arrow in enumerate(source, 1):
        if arrow is Arrow.UP:
            pairs.append((("s", p), ("t", p)))
        else:
            pairs.append((("t", p), ("s", p)))
    return tuple(sorted(pairs))


# ============================================================================
# SIMPLIFICATION
# ============================================================================

def _drop(code: GaussCode, labels) -> GaussCode:
    labels = set(labels)
    arcs = [Arc(a.start, tuple(v for v in a.visits if v[0] not in labels), a.end) for a in code.arcs]
    cycles = [tuple(v for v in c if v[0] not in labels) for c in code.cycles]
    signs = {k: s for k, s in code.signs.items() if k not in labels}
    return _make(arcs, cycles, signs)


def _pairs(visits: Tuple[Visit, ...], cyclic: bool):
    n = len(visits)
    if n < 2:
        return
    for i in range(n if cyclic else n - 1):
        yield visits[i], visits[(i + 1) % n]


def _find_curl(code: GaussCode) -> Optional[int]:
    for visits, cyclic in code.strands():
        for a, b in _pairs(visits, cyclic):
            if a[0] == b[0]:
                return a[0]
    return None


def _find_bigon(code: GaussCode) -> Optional[Tuple[int, int]]:
    layers: Dict[Tuple[int, int], set] = {}
    for visits, cyclic in code.strands():
        for a, b in _pairs(visits, cyclic):
            if a[0] != b[0] and a[1] == b[1]:
                key = (min(a[0], b[0]), max(a[0], b[0]))
                layers.setdefault(key, set()).add(a[1])
    for key in sorted(layers):
        c, d = key
        if len(layers[key]) == 2 and code.signs[c] == -code.signs[d]:
            return key
    return None


def simplify(code: GaussCode) -> Tuple[GaussCode, int, int]:
    """
    Remove free circles, curls and bigons.

    Returns (code, circles removed, u-exponent picked up); each curl of sign
    s contributes u^-s.
    """
    circles = 0
    u_exp = 0
    while True:
        if any(not c for c in code.cycles):
            kept = [c for c in code.cycles if c]
            circles += len(code.cycles) - len(kept)
            code = _make(code.arcs, kept, code.signs)
        label = _find_curl(code)
        if label is not None:
            u_exp -= code.signs[label]
            code = _drop(code, [label])
            continue
        bigon = _find_bigon(code)
        if bigon is not None:
            code = _drop(code, bigon)
            continue
        return code, circles, u_exp


# ============================================================================
# DESCENDING TEST AND FRAMING OF A DESCENDING CODE
# ============================================================================

def first_violation(code: GaussCode) -> Optional[int]:
    """First crossing met from below while walking the strands in order"""
    seen = set()
    for visits, _ in code.strands():
        for label, over in visits:
            if label in seen:
                continue
            if not over:
                return label
            seen.add(label)
    return None


def self_writhe(code: GaussCode) -> int:
    """Sum of signs of crossings whose two visits lie on the same strand"""
    total = 0
    for visits, _ in code.strands():
        labels = [v[0] for v in visits]
        for label in set(labels):
            if labels.count(label) == 2:
                total += code.signs[label]
    return total


# ============================================================================
# SKEIN REWRITES
# ============================================================================

def switch(code: GaussCode, label: int) -> GaussCode:
    """Exchange over and under at one crossing; its sign flips"""
    def flip(visits):
        return tuple((k, not o) if k == label else (k, o) for k, o in visits)

    arcs = [Arc(a.start, flip(a.visits), a.end) for a in code.arcs]
    cycles = [flip(c) for c in code.cycles]
    signs = dict(code.signs)
    signs[label] = -signs[label]
    return _make(arcs, cycles, signs)


def _locate(code: GaussCode, label: int) -> List[Tuple[int, int]]:
    """(strand index, visit index) of both visits; arcs first, then cycles"""
    found = []
    for s, (visits, _) in enumerate(code.strands()):
        for i, v in enumerate(visits):
            if v[0] == label:
                found.append((s, i))
    return found


def smooth(code: GaussCode, label: int) -> GaussCode:
    """Orientation-preserving resolution of one crossing"""
    (s1, i1), (s2, i2) = _locate(code, label)
    n_arcs = len(code.arcs)
    arcs = list(code.arcs)
    cycles = list(code.cycles)
    signs = {k: v for k, v in code.signs.items() if k != label}

    if s1 == s2 and s1 >= n_arcs:
        c = cycles.pop(s1 - n_arcs)
        inner = c[i1 + 1:i2]
        outer = c[i2 + 1:] + c[:i1]
        cycles += [inner, outer]
    elif s1 == s2:
        a = arcs.pop(s1)
        v = a.visits
        arcs.append(Arc(a.start, v[:i1] + v[i2 + 1:], a.end))
        cycles.append(v[i1 + 1:i2])
    elif s1 >= n_arcs:
        c1, c2 = cycles[s1 - n_arcs], cycles[s2 - n_arcs]
        merged = c1[i1 + 1:] + c1[:i1] + c2[i2 + 1:] + c2[:i2]
        cycles = [c for k, c in enumerate(cycles) if k not in (s1 - n_arcs, s2 - n_arcs)]
        cycles.append(merged)
    elif s2 >= n_arcs:
        a = arcs.pop(s1)
        c = cycles.pop(s2 - n_arcs)
        rest = c[i2 + 1:] + c[:i2]
        arcs.append(Arc(a.start, a.visits[:i1] + rest + a.visits[i1 + 1:], a.end))
    else:
        a, b = arcs[s1], arcs[s2]
        arcs = [x for k, x in enumerate(arcs) if k not in (s1, s2)]
        arcs.append(Arc(a.start, a.visits[:i1] + b.visits[i2 + 1:], b.end))
        arcs.append(Arc(b.start, b.visits[:i2] + a.visits[i1 + 1:], a.end))
    return _make(arcs, cycles, signs)


# ============================================================================
# CANONICAL KEY
# ============================================================================

class _Labeler:
    def __init__(self, signs: Dict[int, int]):
        self.signs = signs
        self.labels: Dict[int, int] = {}

    def encode(self, visits) -> Tuple[Tuple[int, bool, int], ...]:
        out = []
        for label, over in visits:
            if label not in self.labels:
                self.labels[label] = len(self.labels)
            out.append((self.labels[label], over, self.signs[label]))
        return tuple(out)


def _absorb(labeler: _Labeler, cycles, pending: set, where) -> List[tuple]:
    """Pull in cycles reached through already labeled crossings, smallest label first"""
    encoded = []
    while True:
        best = None
        for label, new in labeler.labels.items():
            for s, i in where.get(label, ()):
                if s in pending and (best is None or new < best[0]):
                    best = (new, s, i)
        if best is None:
            return encoded
        _, s, i = best
        pending.discard(s)
        c = cycles[s]
        encoded.append(labeler.encode(c[i:] + c[:i]))


def canonical_key(code: GaussCode) -> tuple:
    """Equal for codes that differ only by relabeling, cycle order and rotation"""
    cycles = code.cycles
    where: Dict[int, List[Tuple[int, int]]] = {}
    for s, c in enumerate(cycles):
        for i, (label, _) in enumerate(c):
            where.setdefault(label, []).append((s, i))

    labeler = _Labeler(code.signs)
    arc_part = tuple((a.start, labeler.encode(a.visits), a.end) for a in code.arcs)
    pending = set(range(len(cycles)))
    attached = tuple(_absorb(labeler, cycles, pending, where))

    groups = []
    while pending:
        best = None
        best_used = None
        for s in sorted(pending):
            for i in range(max(len(cycles[s]), 1)):
                local = _Labeler(code.signs)
                rest = set(pending)
                rest.discard(s)
                c = cycles[s]
                encoded = [local.encode(c[i:] + c[:i])]
                encoded += _absorb(local, cycles, rest, where)
                candidate = tuple(encoded)
                if best is None or candidate < best:
                    best = candidate
                    best_used = rest
        groups.append(best)
        pending = best_used
    return arc_part, attached, tuple(sorted(groups))
