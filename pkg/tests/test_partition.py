import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minauto.errors import GroundSetMismatch, TakeFromEmpty
from minauto.partition import (
    Policy,
    RefinablePartition,
    SplitterQueue,
    canonical,
    meet,
    preimage,
    refines,
    splitter_apply,
)

from samples import ten_state_depth_two
from strategies import dfas, partitions


def fs(*blocks):
    return canonical(blocks)


def test_splitter_apply_example():
    d = ten_state_depth_two()
    assert splitter_apply({5, 6}, 0, {0, 1, 2, 3, 4}, d) == (frozenset({4}), frozenset({0, 1, 2, 3}))
    assert splitter_apply(set(), 0, {0, 1}, d) == (frozenset({0, 1}),)


# a^{-1}P and b^{-1}P for the classes 56, 8, 79, 12 of the first Moore partition
PREIMAGES = {
    (frozenset({5, 6}), 0): {4, 9},
    (frozenset({8}), 0): {6},
    (frozenset({7, 9}), 0): {5, 8},
    (frozenset({1, 2}), 0): {0, 1, 7},
    (frozenset({5, 6}), 1): {2},
    (frozenset({8}), 1): {4, 6},
    (frozenset({7, 9}), 1): {0, 3, 5, 8},
    (frozenset({1, 2}), 1): {1, 7},
}


@pytest.mark.parametrize("key", list(PREIMAGES))
def test_preimage_table(key):
    P, a = key
    assert preimage(P, a, ten_state_depth_two()) == PREIMAGES[key]


def test_preimage_of_everything():
    d = ten_state_depth_two()
    assert preimage(range(10), 1, d) == set(range(10))


@given(dfas(max_states=8), st.data())
def test_splitter_complement_symmetry(d, data):
    n = d.num_states
    P = data.draw(st.frozensets(st.integers(0, n - 1)))
    R = data.draw(st.frozensets(st.integers(0, n - 1), min_size=1))
    a = data.draw(st.integers(0, len(d.alphabet) - 1))
    Pc = frozenset(range(n)) - P
    assert canonical(splitter_apply(P, a, R, d)) == canonical(splitter_apply(Pc, a, R, d))


def test_meet_examples():
    assert fs(*meet([{0, 2}, {1}], [{0, 1}, {2}])) == fs({0}, {1}, {2})
    p = [frozenset({0, 1}), frozenset({2})]
    assert canonical(meet(p, [{0, 1, 2}])) == canonical(p)
    with pytest.raises(GroundSetMismatch):
        meet([{0}], [{1}])


@given(st.integers(1, 8).flatmap(lambda n: partitions(range(n))))
def test_meet_idempotent(p):
    assert canonical(meet(p, p)) == canonical(p)


@given(dfas(max_states=8), st.data())
def test_splitter_lemma_identities(d, data):
    n = d.num_states
    P = data.draw(st.frozensets(st.integers(0, n - 1)))
    P1 = data.draw(st.frozensets(st.sampled_from(sorted(P)))) if P else frozenset()
    P2 = P - P1
    R = data.draw(st.frozensets(st.integers(0, n - 1), min_size=1))
    a = data.draw(st.integers(0, len(d.alphabet) - 1))
    sp, s1, s2 = (splitter_apply(X, a, R, d) for X in (P, P1, P2))
    # the three two-out-of-three meets coincide
    assert canonical(meet(sp, s1)) == canonical(meet(sp, s2)) == canonical(meet(s1, s2))
    # and each one is coarser than the meet of the other two
    assert refines(meet(s1, s2), sp)
    assert refines(meet(sp, s2), s1)


def test_mark_and_split_on_final_partition():
    rp = RefinablePartition(10, [[0, 1, 2, 3, 4, 5, 6], [7, 8, 9]])
    splits = rp.mark_and_split([5, 6, 8])
    assert len(splits) == 2
    assert canonical(rp.as_partition()) == fs({0, 1, 2, 3, 4}, {5, 6}, {7, 9}, {8})
    for old, new in splits:
        assert set(rp.members(new)) <= {5, 6, 8}
        assert not set(rp.members(old)) & {5, 6, 8}
    rp.check()


def test_mark_and_split_trivial_cases():
    rp = RefinablePartition(4, [[0, 1], [2, 3]])
    assert rp.mark_and_split([]) == []
    assert rp.mark_and_split([2, 3, 2]) == []
    rp.check()


def test_refinable_partition_fuzz():
    rng = random.Random(7)
    n = 64
    rp = RefinablePartition(n)
    reference = [set(range(n))]
    for _ in range(1000):
        hits = set(rng.sample(range(n), rng.randint(0, 12)))
        rp.mark_and_split(list(hits))
        reference = [b for c in reference for b in (c & hits, c - hits) if b]
        rp.check()
    assert canonical(rp.as_partition()) == canonical(reference)


def test_splitter_queue_fifo_lifo():
    q = SplitterQueue(Policy.FIFO)
    for s in [(0, 0), (1, 0), (2, 1)]:
        q.add(s)
    assert (1, 0) in q and len(q) == 3
    assert [q.take() for _ in range(3)] == [(0, 0), (1, 0), (2, 1)]
    with pytest.raises(TakeFromEmpty):
        q.take()
    q = SplitterQueue("lifo")
    q.add((0, 0))
    q.add((1, 0))
    assert q.take() == (1, 0)


def test_splitter_queue_replace_and_duplicates():
    q = SplitterQueue()
    q.add((0, 0))
    with pytest.raises(ValueError):
        q.add((0, 0))
    q.replace((0, 0), (0, 0), (3, 0))
    assert q.pending() == [(0, 0), (3, 0)]
    with pytest.raises(KeyError):
        q.replace((9, 0), (9, 0), (4, 0))
    with pytest.raises(ValueError):
        q.replace((0, 0), (1, 0), (5, 0))


def test_two_sets_drains_then_swaps():
    q = SplitterQueue(Policy.TWO_SETS)
    q.add((0, 0))
    q.add((1, 0))
    assert q.take() == (0, 0) and q.cycles == 1
    q.add((2, 0))  # goes to the future set
    assert q.take() == (1, 0)
    assert q.take() == (2, 0) and q.cycles == 2
    with pytest.raises(TakeFromEmpty):
        q.take()


def test_seeded_splitters_start_in_current_set():
    q = SplitterQueue(Policy.TWO_SETS)
    q.seed((0, 0))
    q.add((1, 0))
    assert q.take() == (0, 0) and q.cycles == 0
    assert q.take() == (1, 0) and q.cycles == 1
