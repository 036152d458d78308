import copy
import dataclasses
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minauto import Dfa, check_splitter_invariant, depth, enumerate_executions, format_trace, hopcroft_minimize
from minauto.errors import LimitExceeded, NotComplete
from minauto.generators import gen_dyck, gen_unary, random_dfa
from minauto.moore import moore_minimize
from minauto.oracle import distinguishing_rounds, isomorphic, naive_minimize
from minauto.partition import Policy, canonical

from samples import ten_state_depth_two, two_state_a_star
from strategies import dfas

POLICIES = list(Policy)


def pending_set(step):
    return {(frozenset(m), a) for m, a in step.pending}


@pytest.mark.parametrize("policy", POLICIES)
def test_ten_state_is_minimal_under_every_policy(policy):
    d = ten_state_depth_two()
    m, trace = hopcroft_minimize(d, policy)
    assert m.num_states == 10 and isomorphic(m, d)
    assert trace.partition == tuple((q,) for q in range(10))


def test_first_splitter_on_a():
    # FIFO takes (F, a) first
    _, trace = hopcroft_minimize(ten_state_depth_two(), Policy.FIFO, record_pending=True)
    first = trace.steps[0]
    assert first.members == (7, 8, 9) and first.letter == 0
    after = {frozenset(e.kept) for e in first.splits} | {frozenset(e.created) for e in first.splits}
    assert after == {frozenset({0, 1, 2, 3, 4}), frozenset({5, 6}), frozenset({7, 9}), frozenset({8})}
    a, b = 0, 1
    assert pending_set(first) == {
        (frozenset({7, 9}), b),
        (frozenset({8}), a),
        (frozenset({8}), b),
        (frozenset({5, 6}), a),
        (frozenset({5, 6}), b),
    }


def test_first_splitter_on_b():
    # LIFO takes (F, b) first
    _, trace = hopcroft_minimize(ten_state_depth_two(), Policy.LIFO, record_pending=True)
    first = trace.steps[0]
    assert first.members == (7, 8, 9) and first.letter == 1
    after = {frozenset(e.kept) for e in first.splits} | {frozenset(e.created) for e in first.splits}
    assert after == {frozenset({1, 2}), frozenset({0, 3, 4, 5, 6}), frozenset({7, 9}), frozenset({8})}
    a, b = 0, 1
    assert pending_set(first) == {
        (frozenset({7, 9}), a),
        (frozenset({8}), a),
        (frozenset({8}), b),
        (frozenset({1, 2}), a),
        (frozenset({1, 2}), b),
    }


def test_format_trace():
    d = ten_state_depth_two()
    lines = format_trace(hopcroft_minimize(d)[1], d.alphabet).splitlines()
    assert lines[0] == "step 1 take a {7,8,9} split {0,1,2,3,4,5,6}→{0,1,2,3,4}/{5,6} {7,8,9}→{7,9}/{8}"
    assert lines[-1] == "step 18 take b {3}"


def test_requires_complete():
    with pytest.raises(NotComplete):
        hopcroft_minimize(Dfa.build(2, "a", 0, [1], [(0, "a", 1)]))


def test_one_sided_final_set():
    m, trace = hopcroft_minimize(two_state_a_star())
    assert m.num_states == 1 and trace.steps == [] and trace.work == 0


@settings(max_examples=60)
@given(st.integers(1, 50), st.integers(1, 3), st.integers(0, 10**6))
def test_agrees_with_moore(n, k, seed):
    d = random_dfa(n, k, seed)
    assert isomorphic(hopcroft_minimize(d)[0], moore_minimize(d)[0])


@given(dfas(max_states=10, max_letters=3))
def test_policy_independence(d):
    results = [hopcroft_minimize(d, p)[1].partition for p in POLICIES]
    assert results[0] == results[1] == results[2]
    assert isomorphic(hopcroft_minimize(d)[0], naive_minimize(d))


@given(dfas(max_states=12, max_letters=3), st.sampled_from(POLICIES))
def test_counting_bounds(d, policy):
    n, k = d.num_states, len(d.alphabet)
    trace = hopcroft_minimize(d, policy)[1]
    log = int(math.log2(n))
    assert trace.max_removals() <= log
    assert trace.work <= k * n * (log + 1)


@given(dfas(max_states=12, max_letters=3))
def test_two_sets_cycles_bounded_by_depth(d):
    assert hopcroft_minimize(d, Policy.TWO_SETS)[1].cycles <= depth(d)


@pytest.mark.parametrize("n", [2, 4, 7])
def test_two_sets_cycles_on_slow_families(n):
    assert hopcroft_minimize(gen_unary(n), Policy.TWO_SETS)[1].cycles == n - 1
    assert hopcroft_minimize(gen_dyck(n), Policy.TWO_SETS)[1].cycles == n


@pytest.mark.parametrize("policy", POLICIES)
def test_invariant_on_ten_state_example(policy):
    d = ten_state_depth_two()
    assert check_splitter_invariant(d, hopcroft_minimize(d, policy)[1])


@given(dfas(max_states=7), st.sampled_from(POLICIES))
def test_invariant_on_random_traces(d, policy):
    assert check_splitter_invariant(d, hopcroft_minimize(d, policy)[1])


def _swap_events(trace):
    bad = copy.deepcopy(trace)
    i, j = [n for n, s in enumerate(bad.steps) if s.splits][:2]
    si, sj = bad.steps[i], bad.steps[j]
    bad.steps[i] = dataclasses.replace(si, splits=sj.splits)
    bad.steps[j] = dataclasses.replace(sj, splits=si.splits)
    return bad


def test_invariant_rejects_corrupted_traces():
    d = ten_state_depth_two()
    trace = hopcroft_minimize(d)[1]
    assert not check_splitter_invariant(d, _swap_events(trace))
    dropped = copy.deepcopy(trace)
    del dropped.steps[3]
    assert not check_splitter_invariant(d, dropped)
    relabeled = copy.deepcopy(trace)
    relabeled.steps[0] = dataclasses.replace(relabeled.steps[0], letter=1)
    assert not check_splitter_invariant(d, relabeled)


def test_executions_of_two_state_minimal_automaton():
    d = Dfa.build(2, "a", 0, [1], [(0, "a", 1), (1, "a", 1)])
    space = enumerate_executions(d, keep_graph=True)
    assert space.final_partitions == {((0,), (1,))}
    for execution in space.executions():
        assert all(p == ((0,), (1,)) for p in execution)


def test_execution_limit():
    with pytest.raises(LimitExceeded) as info:
        enumerate_executions(ten_state_depth_two(), node_limit=50)
    assert not info.value.partial.complete


@pytest.mark.parametrize("seed", range(50))
def test_all_executions_reach_nerode_partition(seed):
    d = random_dfa(2 + seed % 6, 2, seed)
    space = enumerate_executions(d, node_limit=10**5)
    marked = distinguishing_rounds(d)
    n = d.num_states
    nerode = canonical(
        {frozenset(q for q in range(n) if p == q or (min(p, q), max(p, q)) not in marked) for p in range(n)}
    )
    assert space.final_partitions == {nerode}
