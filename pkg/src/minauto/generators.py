"""Automaton families and words used as worst cases and benchmarks."""

from __future__ import annotations

from itertools import cycle
from typing import Iterator, Sequence

import numpy as np

from .core import Dfa, Nfa, accessible
from .hopcroft import slow_for_hopcroft_everywhere
from .moore import moore_sequence


def gen_unary(n: int) -> Dfa:
    """Words of length at least n over {a}: chain 0 -> ... -> n with a loop on n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rows = tuple((min(i + 1, n),) for i in range(n + 1))
    return Dfa(n + 1, ("a",), 0, frozenset([n]), rows)


def gen_dyck(n: int) -> Dfa:
    """Dyck words of height at most n; states 0..n plus a sink n+1.

    a goes up, b goes down; b from 0 and a from n fall into the sink.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    sink = n + 1
    rows = [(i + 1 if i < n else sink, i - 1 if i > 0 else sink) for i in range(n + 1)]
    rows.append((sink, sink))
    return Dfa(n + 2, ("a", "b"), 0, frozenset([0]), tuple(rows))


def gen_nth_last_a(n: int) -> Nfa:
    """Nfa with n+1 states for A*aA^(n-1) over {a, b}: the n-th letter from the end is a.

    State 0 loops on both letters and guesses the a; states 1..n count the
    remaining letters. Its minimal deterministic automaton has 2^n states.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    edges = [(0, "a", 0), (0, "b", 0), (0, "a", 1)]
    for i in range(1, n):
        edges += [(i, "a", i + 1), (i, "b", i + 1)]
    return Nfa.build(n + 1, ("a", "b"), [0], [n], edges)


def _check_binary(w: str) -> None:
    if set(w) - {"0", "1"}:
        raise ValueError("expected a binary word")


def gen_cyclic(w: str) -> Dfa:
    """Unary cycle of length |w|; state i (position i+1) is final iff w[i] == '1'."""
    _check_binary(w)
    if not w:
        raise ValueError("w must be nonempty")
    n = len(w)
    rows = tuple(((i + 1) % n,) for i in range(n))
    return Dfa(n, ("a",), 0, frozenset(i for i, b in enumerate(w) if b == "1"), rows)


def circular_occurrences(w: str, u: str) -> set[int]:
    """1-based positions where u occurs in w read circularly."""
    if len(u) > len(w):
        raise ValueError("u must not be longer than w")
    ww = w + w
    return {p + 1 for p in range(len(w)) if ww.startswith(u, p)}


def debruijn_word(order: int) -> str:
    """Least binary de Bruijn word of the given order (concatenated Lyndon words)."""
    if order < 1:
        raise ValueError("order must be at least 1")
    a = [0] * (order + 1)
    out: list[int] = []

    def visit(t: int, p: int) -> None:
        if t > order:
            if order % p == 0:
                out.extend(a[1 : p + 1])
            return
        a[t] = a[t - p]
        visit(t + 1, p)
        if a[t - p] == 0:
            a[t] = 1
            visit(t + 1, t)

    visit(1, 1)
    return "".join(map(str, out))


def _standard_words(directive: Sequence[int]) -> Iterator[str]:
    if not directive or any(int(x) < 1 for x in directive):
        raise ValueError("directive entries must be positive integers")
    prev, cur = "1", "0"
    yield cur
    for d in cycle(directive):
        prev, cur = cur, cur * int(d) + prev
        yield cur


def sturmian_word(directive: Sequence[int], length: int) -> str:
    """Prefix of the standard word of a directive sequence.

    Uses s_{-1} = 1, s_0 = 0 and s_{m+1} = s_m^{d_{m+1}} s_{m-1}. A finite
    directive sequence is repeated periodically.
    """
    if length < 1:
        raise ValueError("length must be at least 1")
    for s in _standard_words(directive):
        if len(s) >= length:
            return s[:length]
    raise AssertionError("unreachable")


def fibonacci_word(length: int) -> str:
    return sturmian_word((1,), length)


def _alphabet(k: int) -> tuple[str, ...]:
    if not 1 <= k <= 26:
        raise ValueError("k must be between 1 and 26")
    return tuple("abcdefghijklmnopqrstuvwxyz"[:k])


def random_dfa(n: int, k: int, seed, *, trim: bool = False) -> Dfa:
    """Uniformly random complete automaton with initial state 0.

    Every target is uniform over the n states and F is a uniform subset.
    ``seed`` is anything numpy's SeedSequence accepts (an int or a spawned
    SeedSequence). With ``trim`` only the accessible part is kept, which
    stays complete.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = np.random.Generator(np.random.PCG64(seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)))
    targets = rng.integers(0, n, size=(n, k))
    final_bits = rng.integers(0, 2, size=n)
    d = Dfa(
        n,
        _alphabet(k),
        0,
        frozenset(int(q) for q in np.flatnonzero(final_bits)),
        tuple(tuple(int(t) for t in row) for row in targets),
    )
    return accessible(d) if trim else d


def random_dfas(n: int, k: int, seed: int, count: int, *, trim: bool = False) -> list[Dfa]:
    """``count`` independent samples, one spawned child seed each."""
    children = np.random.SeedSequence(seed).spawn(count)
    return [random_dfa(n, k, child, trim=trim) for child in children]


def is_slow_moore(d: Dfa) -> bool:
    """Minimal complete automaton whose depth reaches the maximum n - 2."""
    trace = moore_sequence(d)
    minimal = len(set(trace.final_labels)) == d.num_states
    return minimal and trace.depth == d.num_states - 2


def is_slow_hopcroft(d: Dfa, node_limit: int = 10**6) -> bool:
    """Minimal complete automaton on which, in every configuration of every
    execution, the pending splitters split at most one class and all in the
    same way. Exhaustive; raises LimitExceeded past ``node_limit``.
    """
    if d.num_states < 2:
        return False
    trace = moore_sequence(d)
    if len(set(trace.final_labels)) != d.num_states:
        return False
    return slow_for_hopcroft_everywhere(d, node_limit)
