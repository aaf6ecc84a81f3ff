import pytest

from common.exceptions import DivisionByZero, MalformedDiagram
from diagram import Arrow, SliceDiagram, add_curl, braid_closure, random_braid, random_moves
from quantumrep import (
    E,
    F,
    K,
    RepMatrix,
    SuperSpace,
    V,
    V_DUAL,
    alexander_rt,
    build_qgroup,
    check_relations,
    dual_action,
    eval_tangle_rt,
    intertwines,
    rt_closed,
    rt_generators,
)
from ring import LaurentQ, RationalQ, qint, specialize_beta
from skein import ReducedVariant, homfly, reduced

TESTED = [(2, 0), (3, 0), (1, 1), (2, 1)]
UUU = (Arrow.UP,) * 3


def q(k: int) -> RationalQ:
    return RationalQ.q_power(k)


# ============================================================================
# QUANTUM GROUP DATA
# ============================================================================

def test_k_on_classical_vector():
    g = build_qgroup(2, 0)
    assert g.matrix(K(1)).entry((1,), (1,)) == q(1)
    assert g.matrix(K(1)).entry((2,), (2,)) == q(-1)


def test_k_on_super_vector():
    g = build_qgroup(1, 1)
    assert g.matrix(K(1)).entry((1,), (1,)) == q(1)
    assert g.matrix(K(1)).entry((2,), (2,)) == q(1)


def test_odd_generator_squares_to_zero_on_tensor():
    g = build_qgroup(1, 1)
    obj = (Arrow.UP, Arrow.UP)
    e = g.action(E(1), obj)
    assert not e.is_zero()
    assert (e * e).is_zero()
    f = g.action(F(1), obj)
    assert (f * f).is_zero()


def test_parities():
    g = build_qgroup(2, 1)
    assert g.parity(E(1)) == 0
    assert g.parity(E(2)) == 1
    assert g.parity(K(2)) == 0


def test_dual_action_examples():
    listed = dual_action(build_qgroup(2, 0))
    assert listed[E(1)].entry((2,), (1,)) == -q(-1)
    assert listed[K(1)].entry((1,), (1,)) == q(-1)


@pytest.mark.parametrize("m, n", TESTED + [(2, 2)])
def test_dual_action_matches_antipode(m, n):
    g = build_qgroup(m, n)
    listed = dual_action(g)
    for x, matrix in listed.items():
        assert g.on_dual(x) == matrix, str(x)


@pytest.mark.parametrize("m, n", TESTED + [(2, 2)])
def test_relations_hold(m, n):
    report = check_relations(build_qgroup(m, n))
    assert report.ok, str(report)


def test_relation_coverage():
    assert "serre" in check_relations(build_qgroup(3, 0)).relations()
    assert "nilpotent" in check_relations(build_qgroup(1, 1)).relations()
    assert "super-serre" in check_relations(build_qgroup(2, 2), [V]).relations()
    assert "super-serre" not in check_relations(build_qgroup(2, 1), [V]).relations()


def test_relations_on_dual_objects():
    g = build_qgroup(2, 1)
    assert check_relations(g, [V_DUAL, (Arrow.UP, Arrow.DOWN)]).ok


# ============================================================================
# RT GENERATORS
# ============================================================================

def test_r_matrix_examples():
    r = rt_generators(build_qgroup(2, 0)).r
    assert r.column((1, 1)) == {(1, 1): q(-1)}
    r = rt_generators(build_qgroup(1, 1)).r
    assert r.column((2, 2)) == {(2, 2): -q(1)}
    assert r.column((2, 1)) == {(1, 2): RationalQ.one(), (2, 1): q(-1) - q(1)}


@pytest.mark.parametrize("m, n", TESTED)
def test_r_inverse_and_skein(m, n):
    g = build_qgroup(m, n)
    gens = rt_generators(g)
    uu = (Arrow.UP, Arrow.UP)
    ident = RepMatrix.identity(g.space, uu)
    assert gens.r * gens.r_inv == ident
    assert gens.r - gens.r_inv == ident.scaled(q(-1) - q(1))


@pytest.mark.parametrize("m, n", TESTED)
def test_yang_baxter(m, n):
    r = rt_generators(build_qgroup(m, n)).r
    r1 = r.lift(UUU, 1)
    r2 = r.lift(UUU, 2)
    assert r1 * r2 * r1 == r2 * r1 * r2


@pytest.mark.parametrize("m, n", TESTED)
def test_generators_intertwine(m, n):
    g = build_qgroup(m, n)
    for name, matrix in rt_generators(g).as_dict().items():
        assert intertwines(matrix, g), name


@pytest.mark.parametrize("m, n", TESTED)
@pytest.mark.parametrize(
    "source, slices",
    [
        ("u", [(2, "cup+"), (1, "cap-")]),
        ("u", [(1, "cup-"), (2, "cap+")]),
        ("d", [(2, "cup-"), (1, "cap+")]),
        ("d", [(1, "cup+"), (2, "cap-")]),
    ],
)
def test_zigzags(m, n, source, slices):
    d = SliceDiagram.build(source, slices, source)
    g = build_qgroup(m, n)
    assert eval_tangle_rt(d, m, n) == RepMatrix.identity(g.space, d.source)


@pytest.mark.parametrize("m, n", TESTED)
@pytest.mark.parametrize("cup, cap", [("cup+", "cap+"), ("cup-", "cap-")])
def test_circles(m, n, cup, cap):
    d = SliceDiagram.build("-", [(1, cup), (1, cap)], "-")
    assert rt_closed(d, m, n) == qint(m - n)


# ============================================================================
# LOCAL APPLICATION
# ============================================================================

def test_apply_at_keeps_points_on_both_sides():
    space = SuperSpace(2, 0)
    swap = RepMatrix(space, V, V, {(1,): {(2,): 1}, (2,): {(1,): 1}})
    assert swap.apply_at({(1, 1, 2): RationalQ.one()}, 1) == {(2, 1, 2): RationalQ.one()}
    assert swap.apply_at({(1, 1, 2): RationalQ.one()}, 2) == {(1, 2, 2): RationalQ.one()}
    assert swap.apply_at({(1, 1, 2): RationalQ.one()}, 3) == {(1, 1, 1): RationalQ.one()}


def test_apply_at_inserts_between_points():
    space = SuperSpace(2, 0)
    cup = RepMatrix(space, (), V + V_DUAL, {(): {(1, 1): 1, (2, 2): 1}})
    assert cup.apply_at({(2, 1): RationalQ.one()}, 2) == {
        (2, 1, 1, 1): RationalQ.one(),
        (2, 2, 2, 1): RationalQ.one(),
    }


def test_apply_at_parity_sign():
    space = SuperSpace(1, 1)
    keep = RepMatrix(space, V, V, {(1,): {(1,): 1}})
    assert keep.apply_at({(2, 1, 2): RationalQ.one()}, 2, parity=1) == {(2, 1, 2): -RationalQ.one()}
    assert keep.apply_at({(1, 1, 2): RationalQ.one()}, 2, parity=1) == {(1, 1, 2): RationalQ.one()}


def test_lift_in_the_middle():
    space = SuperSpace(2, 0)
    swap = RepMatrix(space, V, V, {(1,): {(2,): 1}, (2,): {(1,): 1}})
    lifted = swap.lift(V * 3, 2)
    assert lifted.entry((1, 2, 1), (1, 1, 1)) == RationalQ.one()
    assert (lifted * lifted) == RepMatrix.identity(space, V * 3)


# ============================================================================
# FUNCTOR
# ============================================================================

def test_unknot_values(unknot):
    assert rt_closed(unknot, 3, 0) == RationalQ(LaurentQ({2: 1, 0: 1, -2: 1}))
    assert rt_closed(unknot, 1, 1) == RationalQ.zero()
    assert eval_tangle_rt(unknot, 3, 0).source == ()


def test_trefoil_sl2(trefoil):
    assert rt_closed(trefoil, 2, 0) == RationalQ(LaurentQ({3: -1, -1: 1, -3: 1, -5: 1}))


def test_hopf_sl2(hopf):
    assert rt_closed(hopf, 2, 0) == RationalQ(LaurentQ({2: 1, 0: 1, -2: 1, -4: 1}))


@pytest.mark.parametrize("m, n", [(1, 0), (2, 0), (1, 1), (2, 1)])
@pytest.mark.parametrize("name", ["unknot", "trefoil", "hopf", "figure_eight", "unlink"])
def test_scalar_principle(test_links, name, m, n):
    d = test_links[name]
    assert rt_closed(d, m, n) == specialize_beta(homfly(d), m - n)


def test_rt_reidemeister_invariance(rng):
    for _ in range(30):
        d = braid_closure(random_braid(rng, rng.randint(1, 3), rng.randint(0, 3)))
        moved, _ = random_moves(d, rng, steps=2, max_crossings=6)
        assert rt_closed(moved, 2, 0) == rt_closed(d, 2, 0)


def test_open_tangle_matrix():
    g = build_qgroup(2, 0)
    d = add_curl(SliceDiagram.build("u", [], "u"), 0, 1, 1)
    assert eval_tangle_rt(d, 2, 0) == RepMatrix.identity(g.space, d.source).scaled(q(-2))


def test_rt_closed_rejects_tangle():
    with pytest.raises(MalformedDiagram):
        rt_closed(SliceDiagram.build("u", [], "u"), 2, 0)


# ============================================================================
# ALEXANDER
# ============================================================================

def test_alexander_unknot(unknot):
    assert alexander_rt(unknot) == RationalQ.one()
    curled = add_curl(unknot, 1, 1, 1)
    assert alexander_rt(curled) == RationalQ.one()


@pytest.mark.parametrize("name", ["trefoil", "figure_eight", "hopf", "whitehead"])
def test_alexander_matches_skein(test_links, name):
    d = test_links[name]
    assert alexander_rt(d) == reduced(d, ReducedVariant.ALEXANDER)


def test_alexander_any_component(hopf):
    assert alexander_rt(hopf, 2) == alexander_rt(hopf, 1)


def test_alexander_rejects_tangle():
    with pytest.raises(MalformedDiagram):
        alexander_rt(SliceDiagram.build("u", [], "u"))


# ============================================================================
# MATRICES
# ============================================================================

def test_koszul_sign_in_tensor():
    g = build_qgroup(1, 1)
    ident = RepMatrix.identity(g.space, V)
    both = ident.tensor(g.matrix(E(1)), 1)
    assert both.entry((2, 1), (2, 2)) == RationalQ(-1)
    assert both.entry((1, 1), (1, 2)) == RationalQ.one()


def test_singular_inverse():
    space = SuperSpace(2, 0)
    with pytest.raises(DivisionByZero):
        RepMatrix.zero(space, V, V).inverse()


def test_scalar_value():
    space = SuperSpace(1, 1)
    assert RepMatrix.identity(space, V).scaled(q(3)).scalar_value() == q(3)
    assert build_qgroup(1, 1).matrix(E(1)).scalar_value() is None


def test_bad_space():
    with pytest.raises(ValueError):
        SuperSpace(0, 0)
