import math
import random

import pytest
from conftest import APERIODIC_A
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import representations, tuple_sums

from addsys.arith import FiniteSet, radix_interval
from addsys.errors import BudgetExceeded, NotAdditiveSystemError, NotDirectError
from addsys.sumsets import (
    FiniteCollection,
    british_prefix,
    contract,
    debruijn_factor,
    sumset,
    tiles_mod,
)

APERIODIC = FiniteCollection([APERIODIC_A, [0, 18], [0, 8, 16]])


def test_collection_members_need_zero_and_another_element():
    with pytest.raises(ValueError):
        FiniteCollection([[1, 2]])
    with pytest.raises(ValueError):
        FiniteCollection([[0]])


def test_sumset_binary_levels():
    res = sumset(FiniteCollection([[0, 1], [0, 2]]))
    assert res.is_direct
    assert res.sum == FiniteSet(range(4))
    assert res.witness is None


def test_sumset_overlap_has_witness():
    res = sumset(FiniteCollection([[0, 1, 2], [0, 1]]))
    assert not res.is_direct
    w = res.witness
    assert w.value == 2
    assert {w.first, w.second} == {(2, 0), (1, 1)}


def test_sumset_aperiodic_canon():
    res = sumset(APERIODIC)
    counts = tuple_sums(APERIODIC.sets)
    assert res.is_direct and len(res.sum) == 72
    assert max(counts.values()) == 1


def test_sumset_budget():
    c = FiniteCollection([range(10)] * 4)
    with pytest.raises(BudgetExceeded) as info:
        sumset(c, budget=1000)
    assert info.value.needed == 10_000


def test_sumset_big_integers_fall_back_to_exact():
    huge = 4**40
    c = FiniteCollection([[0, 1], [0, huge], [0, -huge + 1]])
    res = sumset(c)
    assert not res.is_direct
    assert res.witness.value == 1
    assert res.sum == FiniteSet({0, 1, huge, huge + 1, -huge + 1, -huge + 2, 2})


def test_contract_examples():
    decimal = british_prefix([10, 10])
    assert contract(decimal, [0, 1]) == FiniteCollection([radix_interval(100)])
    c = FiniteCollection([[0, 1], [0, 2], [0, 4]])
    assert contract(c, [0, 1]) == FiniteCollection([[0, 1, 2, 3], [0, 4]])
    assert contract(APERIODIC, [1, 2]) == FiniteCollection([APERIODIC_A, [0, 8, 16, 18, 26, 34]])


def test_contract_rejects_non_direct():
    with pytest.raises(NotDirectError) as info:
        contract(FiniteCollection([[0, 1, 2], [0, 1]]), [0])
    assert info.value.witness.value == 2


@pytest.mark.parametrize("bad", [[], [0, 0], [5]])
def test_contract_rejects_bad_indices(bad):
    with pytest.raises((ValueError, IndexError)):
        contract(FiniteCollection([[0, 1], [0, 2]]), bad)


def test_british_prefix():
    assert british_prefix([10, 10]) == FiniteCollection([range(10), range(0, 100, 10)])
    assert british_prefix([2, 4, 3]).to_lists() == [[0, 1], [0, 2, 4, 6], [0, 8, 16]]
    weights = british_prefix([16, 16, 28, 4, 20])
    assert sumset(weights).sum == radix_interval(573440)
    with pytest.raises(ValueError):
        british_prefix([2, 1])


def test_debruijn_examples():
    four = debruijn_factor(FiniteCollection([[0, 1, 2, 3]]))
    # the set containing 1 is a whole interval, so it is peeled off in one piece
    assert four.bases == (4,) and four.grouping == ((0,),)
    dec = debruijn_factor(british_prefix([10, 10]))
    assert dec.bases == (10, 10) and dec.grouping == ((0,), (1,))
    ex = debruijn_factor(british_prefix([2, 4, 3]))
    assert ex.bases == (2, 4, 3) and ex.grouping == ((0,), (1,), (2,))


def test_debruijn_interleaved_contraction():
    # [0,1,4,5] = [2] + 4[2]; [0,2] = 2[2]
    fac = debruijn_factor(FiniteCollection([[0, 1, 4, 5], [0, 2]]))
    assert fac.bases == (2, 2, 2)
    assert fac.grouping == ((0, 2), (1,))
    assert fac.rebuild() == FiniteCollection([[0, 1, 4, 5], [0, 2]])


def test_debruijn_rejects_non_systems():
    with pytest.raises(NotAdditiveSystemError) as info:
        debruijn_factor(FiniteCollection([[0, 1, 2], [0, 1]]))
    assert info.value.witness is not None
    with pytest.raises(NotAdditiveSystemError):
        debruijn_factor(FiniteCollection([[0, 1], [0, 3]]))


def test_tiles_mod_examples():
    assert tiles_mod(APERIODIC, 72)
    assert tiles_mod(FiniteCollection([[0, 1]]), 2)
    assert not tiles_mod(FiniteCollection([[0, 1]]), 3)
    assert not tiles_mod(FiniteCollection([[0, 2]]), 2)


def test_tiles_mod_doubled_balanced_ternary_prefix():
    c = FiniteCollection([[-2, 0, 2], [-6, 0, 6]])
    residues = sorted(s % 9 for s in tuple_sums(c.sets))
    assert residues == list(range(9))
    assert tiles_mod(c, 9)


# -- properties ----------------------------------------------------------------


@st.composite
def british_bases(draw):
    return draw(st.lists(st.integers(2, 6), min_size=1, max_size=4))


@st.composite
def random_contraction(draw):
    """A British prefix with a random partition of its levels merged together."""
    bases = draw(british_bases())
    labels = draw(st.lists(st.integers(0, len(bases) - 1), min_size=len(bases), max_size=len(bases)))
    levels = british_prefix(bases)
    groups = {}
    for i, lab in enumerate(labels):
        groups.setdefault(lab, []).append(i)
    sets = []
    for members in groups.values():
        sets.append(sumset(FiniteCollection(levels[i] for i in members)).sum)
    order = draw(st.permutations(range(len(sets))))
    return FiniteCollection(sets[i] for i in order)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(-20, 20), min_size=1, max_size=4), min_size=1, max_size=4))
def test_sumset_matches_oracle(raw):
    c = FiniteCollection([{0, *s} if len({0, *s}) > 1 else {0, 1} for s in raw])
    res = sumset(c)
    counts = tuple_sums(c.sets)
    assert res.sum == FiniteSet(counts)
    assert res.is_direct == (max(counts.values()) == 1)
    assert res.is_direct == (len(res.sum) == c.tuple_count())
    if not res.is_direct:
        w = res.witness
        assert w.first != w.second
        reps = representations(c.sets, w.value)
        assert w.first in reps and w.second in reps


@settings(max_examples=200, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=1, max_size=3), min_size=2, max_size=4), st.randoms())
def test_sumset_order_independent(raw, rnd):
    c = FiniteCollection([{0, *s} if len({0, *s}) > 1 else {0, 2} for s in raw])
    shuffled = list(c.sets)
    rnd.shuffle(shuffled)
    a, b = sumset(c), sumset(FiniteCollection(shuffled))
    assert a.sum == b.sum and a.is_direct == b.is_direct


@settings(max_examples=200, deadline=None)
@given(random_contraction(), st.data())
def test_contraction_preserves_sumset(c, data):
    k = data.draw(st.integers(1, len(c)))
    chosen = data.draw(st.permutations(range(len(c))))[:k]
    merged = contract(c, chosen)
    assert sumset(merged).is_direct
    assert sumset(merged).sum == sumset(c).sum


@settings(max_examples=200, deadline=None)
@given(random_contraction())
def test_debruijn_round_trip(c):
    fac = debruijn_factor(c)
    assert math.prod(fac.bases) == c.tuple_count()
    assert fac.rebuild() == c
    assert sorted(j for g in fac.grouping for j in g) == list(range(len(fac.bases)))


def test_tiles_mod_random_shifts_of_residue_systems():
    rng = random.Random(7)
    for _ in range(50):
        b0, b1 = rng.randint(2, 5), rng.randint(2, 5)
        t0 = [0] + [r + b0 * rng.randint(-3, 3) for r in range(1, b0)]
        t1 = [0] + [r + b1 * rng.randint(-3, 3) for r in range(1, b1)]
        c = FiniteCollection([t0, [b0 * x for x in t1]])
        assert tiles_mod(c, b0 * b1)
