import time

import pytest

from common.exceptions import MalformedDiagram
from diagram import (
    SliceDiagram,
    add_curl,
    braid_closure,
    disjoint_union,
    mirror,
    parse_braid,
    random_braid,
    random_moves,
    trace,
    validate,
)
from ring import (
    BETA,
    GroundElem,
    LaurentQ,
    RationalQ,
    Z,
    divide_by_qint_beta,
    qint,
    quantum_int,
    specialize_beta,
)
from skein import (
    Arc,
    GaussCode,
    ReducedVariant,
    SkeinEvaluator,
    canonical_key,
    eval_closed,
    eval_tangle,
    first_violation,
    framing_normalize,
    from_trace,
    homfly,
    identity_matching,
    jones,
    reduced,
    reduced_by_cut,
    rt_sln,
    simplify,
)


def lq(terms) -> RationalQ:
    return RationalQ(LaurentQ(terms))


def torus(k: int) -> SliceDiagram:
    return braid_closure(parse_braid(" ".join(["1"] * k), 2))


QB = quantum_int(BETA)
TREFOIL = QB * (GroundElem.u_power(-1, Z * Z + 1) + QB * Z)
HOPF = QB * (QB + GroundElem.u_power(-1, Z))


# ============================================================================
# GAUSS CODES
# ============================================================================

def test_simplify_curl_on_circle():
    code = GaussCode(arcs=(), cycles=(((1, True), (1, False)),), signs={1: 1})
    out, circles, u_exp = simplify(code)
    assert out.crossings == 0
    assert circles == 1
    assert u_exp == -1


def test_simplify_cancelling_bigon():
    code = GaussCode(
        arcs=(),
        cycles=(((1, True), (2, True)), ((1, False), (2, False))),
        signs={1: 1, 2: -1},
    )
    out, circles, u_exp = simplify(code)
    assert out.crossings == 0
    assert circles == 2
    assert u_exp == 0


def test_bigon_with_equal_signs_stays():
    code = GaussCode(
        arcs=(),
        cycles=(((1, True), (2, True)), ((1, False), (2, False))),
        signs={1: 1, 2: 1},
    )
    out, circles, _ = simplify(code)
    assert out.crossings == 2
    assert circles == 0


def test_canonical_key_ignores_labels_and_rotation():
    a = GaussCode(
        arcs=(),
        cycles=(((1, True), (2, False), (1, False), (2, True)),),
        signs={1: 1, 2: -1},
    )
    b = GaussCode(
        arcs=(),
        cycles=(((9, False), (7, False), (9, True), (7, True)),),
        signs={7: 1, 9: -1},
    )
    assert canonical_key(a) == canonical_key(b)


def test_canonical_key_sees_signs():
    a = GaussCode(arcs=(), cycles=(((1, True), (2, False), (1, False), (2, True)),), signs={1: 1, 2: -1})
    b = GaussCode(arcs=(), cycles=(((1, True), (2, False), (1, False), (2, True)),), signs={1: 1, 2: 1})
    assert canonical_key(a) != canonical_key(b)


def _crossed_arcs(label: int, sign: int) -> GaussCode:
    return GaussCode(
        arcs=(
            Arc(("s", 1), ((label, False),), ("t", 2)),
            Arc(("s", 2), ((label, True),), ("t", 1)),
        ),
        cycles=(),
        signs={label: sign},
    )


def test_canonical_key_on_arc_only_crossings():
    assert canonical_key(_crossed_arcs(0, -1)) == canonical_key(_crossed_arcs(4, -1))
    assert canonical_key(_crossed_arcs(0, -1)) != canonical_key(_crossed_arcs(0, 1))


def test_canonical_key_with_arc_crossing_and_circle():
    code = GaussCode(
        arcs=_crossed_arcs(3, 1).arcs,
        cycles=(((5, True), (6, False), (5, False), (6, True)),),
        signs={3: 1, 5: 1, 6: -1},
    )
    relabeled = GaussCode(
        arcs=_crossed_arcs(8, 1).arcs,
        cycles=(((1, False), (2, False), (1, True), (2, True)),),
        signs={8: 1, 1: -1, 2: 1},
    )
    assert canonical_key(code) == canonical_key(relabeled)


def test_open_crossing_evaluates_with_memo():
    d = SliceDiagram.build("uu", [(1, "x-")], "uu")
    assert eval_tangle(d, SkeinEvaluator(memo=True)) == eval_tangle(d, SkeinEvaluator(memo=False))


def test_first_violation_on_descending_strand():
    up = SliceDiagram.build("uu", [(1, "x+")], "uu")
    assert first_violation(from_trace(trace(up))) is None
    down = SliceDiagram.build("uu", [(1, "x-")], "uu")
    assert first_violation(from_trace(trace(down))) is not None


# ============================================================================
# CLOSED LINKS
# ============================================================================

def test_unknot_and_unlink(unknot, unlink):
    assert homfly(unknot) == QB
    assert homfly(unlink) == QB * QB


def test_trefoil_generic(trefoil):
    assert homfly(trefoil) == TREFOIL


def test_hopf_generic(hopf):
    assert homfly(hopf) == HOPF


def test_trefoil_jones(trefoil):
    assert jones(trefoil) == lq({3: -1, -1: 1, -3: 1, -5: 1})


def test_mirror_is_bar(trefoil, figure_eight):
    for d in (trefoil, figure_eight):
        assert jones(mirror(d)) == jones(d).bar()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_unknot_sln(unknot, n):
    assert rt_sln(unknot, n) == qint(n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hopf_sln(hopf, n):
    expected = qint(n) * (RationalQ.q_power(1) * qint(n - 1) + RationalQ.q_power(-n - 1))
    assert rt_sln(hopf, n) == expected


def test_reduced_values(unknot, trefoil, figure_eight):
    assert reduced(unknot) == GroundElem.one()
    assert reduced(trefoil, ReducedVariant.SLN, 2) == lq({-4: 1, 0: 1, 2: -1})
    assert reduced(figure_eight, ReducedVariant.SLN, 2) == lq({4: 1, 2: -1, 0: 1, -2: -1, -4: 1})


def test_reduced_alexander(trefoil, figure_eight):
    assert reduced(trefoil, ReducedVariant.ALEXANDER) == lq({2: 1, 0: -1, -2: 1})
    assert reduced(figure_eight, ReducedVariant.ALEXANDER) == lq({2: -1, 0: 3, -2: -1})


def test_reduced_sln_needs_n(trefoil):
    with pytest.raises(ValueError):
        reduced(trefoil, ReducedVariant.SLN)


def test_framing_normalize(trefoil):
    value = framing_normalize(homfly(trefoil), validate(trefoil).writhe)
    assert specialize_beta(divide_by_qint_beta(value), 2) == lq({2: 1, 6: 1, 8: -1})


def test_eval_closed_rejects_tangle():
    with pytest.raises(MalformedDiagram):
        eval_closed(SliceDiagram.build("u", [], "u"))


def test_disjoint_union_multiplies(test_links):
    values = {name: homfly(d) for name, d in test_links.items()}
    for a in ("unknot", "trefoil", "hopf"):
        for b in ("trefoil", "figure_eight"):
            both = disjoint_union(test_links[a], test_links[b])
            assert homfly(both) == values[a] * values[b]


# ============================================================================
# TANGLES
# ============================================================================

def test_identity_tangle():
    d = SliceDiagram.build("ud", [], "ud")
    assert eval_tangle(d) == {identity_matching(d.source): GroundElem.one()}


@pytest.mark.parametrize("sign", [1, -1])
def test_curl_on_strand(sign):
    d = add_curl(SliceDiagram.build("u", [], "u"), 0, 1, sign)
    assert eval_tangle(d) == {identity_matching(d.source): GroundElem.u_power(-sign)}


def test_r2_on_upward_pair():
    d = SliceDiagram.build("uu", [(1, "x+"), (1, "x-")], "uu")
    assert eval_tangle(d) == {identity_matching(d.source): GroundElem.one()}


def test_crossing_difference_is_z():
    pos = eval_tangle(SliceDiagram.build("uu", [(1, "x+")], "uu"))
    neg = eval_tangle(SliceDiagram.build("uu", [(1, "x-")], "uu"))
    ident = identity_matching(SliceDiagram.build("uu", [], "uu").source)
    diff = {k: pos.get(k, GroundElem.zero()) - neg.get(k, GroundElem.zero()) for k in set(pos) | set(neg)}
    diff = {k: v for k, v in diff.items() if not v.is_zero()}
    assert diff == {ident: GroundElem.coerce(Z)}


# ============================================================================
# INVARIANCE
# ============================================================================

def test_reidemeister_moves_preserve_value(rng):
    evaluator = SkeinEvaluator()
    for _ in range(200):
        d = braid_closure(random_braid(rng, rng.randint(1, 3), rng.randint(0, 4)))
        moved, _ = random_moves(d, rng, steps=2, max_crossings=8)
        assert eval_closed(moved, evaluator) == eval_closed(d, evaluator)


@pytest.mark.parametrize("name", ["trefoil", "figure_eight", "hopf", "unlink", "whitehead", "torus_2_4"])
def test_cut_independence(test_links, name):
    d = test_links[name]
    expected = reduced(d)
    for component in range(1, validate(d).components + 1):
        assert reduced_by_cut(d, component) == expected


def test_workers_and_memo_agree(test_links):
    plain = SkeinEvaluator(memo=False, workers=1)
    shared = SkeinEvaluator(memo=True, workers=1)
    threaded = SkeinEvaluator(memo=True, workers=4)
    for d in list(test_links.values()) + [torus(7)]:
        value = eval_closed(d, plain)
        assert eval_closed(d, shared) == value
        assert eval_closed(d, threaded) == value


# ============================================================================
# MEMOIZATION
# ============================================================================

def test_memo_cuts_expansions():
    d = torus(9)
    plain = SkeinEvaluator(memo=False, workers=1)
    shared = SkeinEvaluator(memo=True, workers=1)
    assert eval_closed(d, plain) == eval_closed(d, shared)
    assert plain.stats["expansions"] == 54
    assert shared.stats["expansions"] == 8
    assert shared.stats["memo_hits"] > 0
    assert plain.stats["expansions"] / shared.stats["expansions"] >= 5


def test_reset_clears_memo(trefoil):
    evaluator = SkeinEvaluator(memo=True, workers=1)
    eval_closed(trefoil, evaluator)
    evaluator.reset()
    assert evaluator.stats == {"expansions": 0, "memo_hits": 0, "memo_misses": 0, "memo_size": 0}


@pytest.mark.slow
def test_torus_2_10_is_fast():
    start = time.perf_counter()
    eval_closed(torus(10), SkeinEvaluator(memo=True, workers=1))
    assert time.perf_counter() - start < 30
