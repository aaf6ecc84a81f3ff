from fractions import Fraction

import pytest

from common.exceptions import PoleAtOne, StrandMismatch
from diagram import BraidWord
from hecke import (
    HeckeElem,
    Perm,
    all_perms,
    antisymmetrizer,
    braid_to_hecke,
    hecke_inverse_generator,
    hecke_mul,
    hecke_pow,
    schur_weyl_rep,
    span_rank,
    symmetric_group_specialize,
)
from quantumrep import RepMatrix, SuperSpace
from ring import LaurentQ, RationalQ, qint

Z = RationalQ.q_power(-1) - RationalQ.q_power(1)


def T(i: int, n: int) -> HeckeElem:
    return HeckeElem.generator(i, n)


def one(n: int) -> HeckeElem:
    return HeckeElem.one(n)


def random_elem(rng, n: int) -> HeckeElem:
    perms = all_perms(n)
    terms = {}
    for _ in range(3):
        w = rng.choice(perms)
        terms[w] = RationalQ.q_power(rng.randint(-2, 2), rng.choice((1, -1, 2)))
    return HeckeElem(n, terms)


# ============================================================================
# PERMUTATIONS
# ============================================================================

def test_perm_length_and_reduced_word():
    for w in all_perms(4):
        word = w.reduced_word()
        assert len(word) == w.length
        rebuilt = Perm.identity(4)
        for i in reversed(word):
            rebuilt = rebuilt.left_mul_simple(i)
        assert rebuilt == w


def test_perm_group_law():
    w = Perm((2, 3, 1))
    assert w * w.inverse() == Perm.identity(3)
    assert Perm.simple(1, 3).left_mul_simple(1) == Perm.identity(3)
    assert str(Perm((2, 1, 3))) == "(1 2)"
    assert str(Perm.identity(2)) == "e"


def test_all_perms_sorted_by_length():
    perms = all_perms(3)
    assert len(perms) == 6
    assert [w.length for w in perms] == [0, 1, 1, 2, 2, 3]


def test_bad_perm():
    with pytest.raises(ValueError):
        Perm((1, 1, 2))


# ============================================================================
# MULTIPLICATION
# ============================================================================

def test_quadratic_relation():
    assert T(1, 2) * T(1, 2) == T(1, 2).scaled(Z) + one(2)


def test_braid_relation():
    assert T(1, 3) * T(2, 3) * T(1, 3) == T(2, 3) * T(1, 3) * T(2, 3)


def test_far_generators_commute():
    assert T(1, 4) * T(3, 4) == T(3, 4) * T(1, 4)


def test_inverse_generator():
    for i in (1, 2):
        assert T(i, 3) * hecke_inverse_generator(i, 3) == one(3)
        assert hecke_inverse_generator(i, 3) * T(i, 3) == one(3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_associativity(rng, n):
    for _ in range(10):
        a, b, c = (random_elem(rng, n) for _ in range(3))
        assert hecke_mul(hecke_mul(a, b), c) == hecke_mul(a, hecke_mul(b, c))


def test_strand_mismatch():
    with pytest.raises(StrandMismatch):
        hecke_mul(T(1, 2), T(1, 3))
    with pytest.raises(StrandMismatch):
        T(1, 2) + one(3)


def test_hecke_pow():
    assert hecke_pow(T(1, 2), 0) == one(2)
    assert hecke_pow(T(1, 2), 3) == T(1, 2).scaled(Z * Z + 1) + one(2).scaled(Z)


# ============================================================================
# BRAIDS
# ============================================================================

def test_braid_to_hecke():
    assert braid_to_hecke(BraidWord(2, (1,))) == T(1, 2)
    assert braid_to_hecke(BraidWord(2, (-1, 1))) == one(2)
    assert braid_to_hecke(BraidWord(2, (1, 1, 1))) == T(1, 2).scaled(Z * Z + 1) + one(2).scaled(Z)


@pytest.mark.parametrize(
    "left, right",
    [
        ((1, 2, 1), (2, 1, 2)),
        ((1, -1, 2), (2,)),
        ((1, 3, -2), (3, 1, -2)),
        ((-1, -2, -1), (-2, -1, -2)),
    ],
)
def test_braid_relations_in_hecke(left, right):
    assert braid_to_hecke(BraidWord(4, left)) == braid_to_hecke(BraidWord(4, right))


# ============================================================================
# ANTISYMMETRIZER
# ============================================================================

def test_antisymmetrizer_small():
    assert antisymmetrizer(1) == one(1)
    expected = (one(2).scaled(RationalQ.q_power(-1)) - T(1, 2)).scaled(qint(2).inv())
    assert antisymmetrizer(2) == expected


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_antisymmetrizer_idempotent(l):
    p = antisymmetrizer(l)
    assert p * p == p


@pytest.mark.parametrize("l", [2, 3, 4])
def test_antisymmetrizer_eigenvalue(l):
    p = antisymmetrizer(l)
    for i in range(1, l):
        assert T(i, l) * p == p.scaled(-RationalQ.q_power(1))
        assert p * T(i, l) == p.scaled(-RationalQ.q_power(1))


def test_antisymmetrizer_rejects_zero():
    with pytest.raises(ValueError):
        antisymmetrizer(0)


# ============================================================================
# SPECIALIZATION
# ============================================================================

def test_specialize_generator():
    assert symmetric_group_specialize(T(1, 2)) == {Perm((2, 1)): Fraction(1)}
    assert symmetric_group_specialize(T(1, 2) * T(1, 2)) == {Perm.identity(2): Fraction(1)}


def test_specialize_antisymmetrizer():
    assert symmetric_group_specialize(antisymmetrizer(2)) == {
        Perm.identity(2): Fraction(1, 2),
        Perm((2, 1)): Fraction(-1, 2),
    }


def test_specialize_pole():
    pole = RationalQ(LaurentQ({1: 1, 0: -1})).inv()
    with pytest.raises(PoleAtOne):
        symmetric_group_specialize(HeckeElem(2, {Perm.identity(2): pole}))


# ============================================================================
# SCHUR-WEYL
# ============================================================================

def test_rep_braid_relation():
    a = schur_weyl_rep(T(1, 3), 3)
    b = schur_weyl_rep(T(2, 3), 3)
    assert a * b * a == b * a * b


@pytest.mark.parametrize("m", [1, 2, 3])
def test_rep_quadratic_relation(m):
    t = T(1, 2)
    lhs = schur_weyl_rep(t - one(2).scaled(RationalQ.q_power(-1)), m) * schur_weyl_rep(
        t + one(2).scaled(RationalQ.q_power(1)), m
    )
    assert lhs.is_zero()


def test_rep_is_homomorphism(rng):
    for _ in range(5):
        a, b = random_elem(rng, 3), random_elem(rng, 3)
        assert schur_weyl_rep(a * b, 2) == schur_weyl_rep(a, 2) * schur_weyl_rep(b, 2)


def test_rep_of_one_is_identity():
    rep = schur_weyl_rep(one(2), 2)
    assert rep == RepMatrix.identity(SuperSpace(2, 0), rep.source)


@pytest.mark.parametrize("n, m, rank", [(2, 2, 2), (3, 3, 6), (3, 2, 5), (2, 1, 1)])
def test_span_rank(n, m, rank):
    images = [schur_weyl_rep(HeckeElem.basis(w), m) for w in all_perms(n)]
    assert span_rank(images) == rank


@pytest.mark.slow
def test_span_rank_four_strands():
    images = [schur_weyl_rep(HeckeElem.basis(w), 4) for w in all_perms(4)]
    assert span_rank(images) == 24
