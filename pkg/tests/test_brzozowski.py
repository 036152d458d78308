import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minauto import Dfa, Nfa, accepts, brzozowski_minimize, codeterminize, complete_with_sink, determinize, trim
from minauto.core import nfa_accepts, words_up_to
from minauto.generators import gen_nth_last_a, random_dfa
from minauto.hopcroft import hopcroft_minimize
from minauto.moore import moore_minimize
from minauto.oracle import isomorphic

from samples import ab_plus_abc_acb, ten_state_depth_two
from strategies import dfas, nfas


def test_codeterminize_of_nth_last_a():
    d = codeterminize(gen_nth_last_a(3))
    assert d.num_states == 4
    pattern = re.compile(r"[ab]{2}a[ab]*")
    for w in words_up_to("ab", 8):
        assert accepts(d, w) == bool(pattern.fullmatch(w))


def test_codeterminize_fixed_point():
    loop = Dfa.build(1, "a", 0, [0], [(0, "a", 0)])
    assert codeterminize(loop) == loop


def test_codeterminize_ten_state_example():
    d = codeterminize(ten_state_depth_two())
    # subset construction on the reversal, counted independently
    assert d.num_states == 12
    assert not d.is_complete()


@pytest.mark.parametrize("n", range(3, 11))
def test_exponential_blow_up(n):
    a = gen_nth_last_a(n)
    assert a.num_states == n + 1
    m = brzozowski_minimize(a)
    assert m.num_states == 2**n


def test_already_minimal_input():
    d = ab_plus_abc_acb()
    assert isomorphic(brzozowski_minimize(d), d)


def test_empty_language():
    a = Nfa.build(2, "a", [0], [], [(0, "a", 1)])
    assert brzozowski_minimize(a).is_empty


@settings(max_examples=80)
@given(nfas(max_states=6))
def test_random_nfa_against_determinize_then_hopcroft(a):
    m = brzozowski_minimize(a)
    for w in words_up_to(a.alphabet, 8):
        assert accepts(m, w) == nfa_accepts(a, w)
    t = trim(determinize(a))
    if t.is_empty:
        assert m.is_empty
        return
    expected = trim(hopcroft_minimize(complete_with_sink(t))[0])
    assert isomorphic(m, expected)


@given(nfas(max_states=5))
def test_idempotent(a):
    m = brzozowski_minimize(a)
    assert isomorphic(brzozowski_minimize(m), m)


@settings(max_examples=100)
@given(st.integers(1, 30), st.integers(1, 3), st.integers(0, 10**6))
def test_agrees_with_refinement(n, k, seed):
    d = random_dfa(n, k, seed)
    m = brzozowski_minimize(d)
    assert isomorphic(m, trim(moore_minimize(d)[0]))
    assert isomorphic(m, trim(hopcroft_minimize(d)[0]))
