"""Independent reference implementations used to check the minimizers.

Nothing here shares code with the minimization modules beyond the value
types: the table-filling minimizer works on state pairs, language equality
walks the product automaton, and finite languages are minimized directly
from their sets of residuals.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .core import UNDEFINED, Dfa, accessible, complete_with_sink, quotient, with_alphabet
from .errors import AlphabetMismatch, NotComplete


def distinguishing_rounds(d: Dfa) -> dict[tuple[int, int], int]:
    """For each distinguishable pair p < q, the round in which it gets marked.

    Round 0 marks pairs that differ on finality; round r marks pairs with a
    letter leading to a pair marked in round r - 1 or earlier.
    """
    if not d.is_complete():
        raise NotComplete("table filling needs a complete automaton")
    n, k = d.num_states, len(d.alphabet)
    finals = d.finals
    marked: dict[tuple[int, int], int] = {}
    for p in range(n):
        for q in range(p + 1, n):
            if (p in finals) != (q in finals):
                marked[p, q] = 0
    r = 0
    while True:
        r += 1
        new = []
        for p in range(n):
            for q in range(p + 1, n):
                if (p, q) in marked:
                    continue
                for a in range(k):
                    s, t = d.delta[p][a], d.delta[q][a]
                    if s > t:
                        s, t = t, s
                    if s != t and (s, t) in marked:
                        new.append((p, q))
                        break
        if not new:
            return marked
        for pair in new:
            marked[pair] = r


def naive_minimize(d: Dfa) -> Dfa:
    """Quotient of a complete automaton by the unmarked pairs of the table."""
    if d.is_empty:
        return d
    marked = distinguishing_rounds(d)
    labels = list(range(d.num_states))
    for q in range(d.num_states):
        for p in range(q):
            if (p, q) not in marked:
                labels[q] = labels[p]
                break
    return quotient(d, labels)[0]


def naive_depth(d: Dfa) -> int:
    """Last round in which the table gains a mark (0 if it never does after round 0)."""
    return max(distinguishing_rounds(d).values(), default=0)


def is_minimal(d: Dfa) -> bool:
    """Accessible, and no two states (nor a state and the missing-arc sink) are equivalent."""
    if d.is_empty:
        return True
    if accessible(d).num_states != d.num_states:
        return False
    c = complete_with_sink(d)
    return naive_minimize(c).num_states == c.num_states


def _aligned(a: Dfa, b: Dfa) -> tuple[Dfa, Dfa]:
    if a.alphabet == b.alphabet:
        return a, b
    if set(a.alphabet) != set(b.alphabet):
        raise AlphabetMismatch(f"alphabets differ: {a.alphabet} vs {b.alphabet}")
    return a, with_alphabet(b, a.alphabet)


def find_witness(a: Dfa, b: Dfa) -> str | None:
    """A shortest word accepted by exactly one of a and b, or None if they are equivalent."""
    a, b = _aligned(a, b)
    a, b = complete_with_sink(a), complete_with_sink(b)
    start = (a.initial, b.initial)
    parent: dict[tuple[int, int], tuple | None] = {start: None}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        if (p in a.finals) != (q in b.finals):
            letters = []
            node = (p, q)
            while parent[node] is not None:
                node, x = parent[node]
                letters.append(a.alphabet[x])
            return "".join(reversed(letters))
        for x in range(len(a.alphabet)):
            nxt = (a.delta[p][x], b.delta[q][x])
            if nxt not in parent:
                parent[nxt] = ((p, q), x)
                queue.append(nxt)
    return None


def equivalent(a: Dfa, b: Dfa) -> bool:
    return find_witness(a, b) is None


def canonical_form(d: Dfa) -> tuple:
    """Accessible part renumbered in breadth-first order, letters in alphabet order."""
    if d.is_empty:
        return (d.alphabet, 0, (), ())
    order = {d.initial: 0}
    queue = deque([d.initial])
    rows = []
    while queue:
        p = queue.popleft()
        row = []
        for q in d.delta[p]:
            if q == UNDEFINED:
                row.append(UNDEFINED)
                continue
            if q not in order:
                order[q] = len(order)
                queue.append(q)
            row.append(order[q])
        rows.append(tuple(row))
    finals = tuple(sorted(order[q] for q in d.finals if q in order))
    return (d.alphabet, len(rows), finals, tuple(rows))


def isomorphic(a: Dfa, b: Dfa) -> bool:
    return canonical_form(a) == canonical_form(b)


def residual_automaton(words: Iterable[str], alphabet: Iterable[str] | None = None) -> Dfa:
    """Minimal trim automaton of a finite language, one state per nonempty residual."""
    language = frozenset(words)
    if alphabet is None:
        alphabet = sorted({c for w in language for c in w})
    alphabet = tuple(alphabet)
    if not language:
        return Dfa.empty(alphabet)
    index = {language: 0}
    todo = deque([language])
    rows = []
    finals = set()
    while todo:
        res = todo.popleft()
        if "" in res:
            finals.add(index[res])
        row = []
        for x in alphabet:
            nxt = frozenset(w[1:] for w in res if w[:1] == x)
            if not nxt:
                row.append(UNDEFINED)
                continue
            if nxt not in index:
                index[nxt] = len(index)
                todo.append(nxt)
            row.append(index[nxt])
        rows.append(tuple(row))
    return Dfa(len(rows), alphabet, 0, frozenset(finals), tuple(rows))
