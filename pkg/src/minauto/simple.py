"""Minimization of simple automata (every nontrivial SCC is one cycle).

The condensation of a simple automaton is a DAG whose nodes are single
states or cycles. Nodes are processed by increasing height. A single state
is merged with an already registered state of equal signature; the
register also contains the states of the cycles kept so far, so that a
state equivalent to a cycle state is wound onto that cycle ("wrap"). A
cycle is first reduced to the primitive root of its word of weak
signatures ("collapse"), then merged with a registered cycle whose word is
a rotation of its own ("cycle").
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import UNDEFINED, Dfa, Nfa, as_dfa, quotient, trim
from .errors import NotACycle, NotSimple

BOX = -1  # stands for the in-cycle successor in a weak signature


def scc(d: Dfa) -> list[list[int]]:
    """Strongly connected components (Tarjan), in reverse topological order."""
    n = d.num_states
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            q, i = work[-1]
            row = d.delta[q]
            if i < len(row):
                work[-1] = (q, i + 1)
                t = row[i]
                if t == UNDEFINED:
                    continue
                if index[t] == -1:
                    index[t] = low[t] = counter
                    counter += 1
                    stack.append(t)
                    on_stack[t] = True
                    work.append((t, 0))
                elif on_stack[t]:
                    low[q] = min(low[q], index[t])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[q])
            if low[q] == index[q]:
                comp = []
                while True:
                    t = stack.pop()
                    on_stack[t] = False
                    comp.append(t)
                    if t == q:
                        break
                comps.append(sorted(comp))
    return comps


def _is_nontrivial(d: Dfa, comp: list[int]) -> bool:
    return len(comp) > 1 or comp[0] in d.delta[comp[0]]


def _cycle_order(d: Dfa, comp: list[int]) -> list[int] | None:
    """The states of a component in cycle order, or None if it is not a simple cycle."""
    members = set(comp)
    nxt = {}
    for q in comp:
        inside = [t for t in d.delta[q] if t in members]
        if len(inside) != 1:  # parallel letters to the same state count twice
            return None
        nxt[q] = inside[0]
    order = [comp[0]]
    while len(order) < len(comp):
        order.append(nxt[order[-1]])
    return order if nxt[order[-1]] == order[0] and len(set(order)) == len(order) else None


def is_simple(d: Dfa | Nfa) -> bool:
    """True iff every state of a nontrivial SCC has exactly one arc staying in it."""
    d = as_dfa(d)
    return all(_cycle_order(d, c) is not None for c in scc(d) if _is_nontrivial(d, c))


WeakSignature = tuple  # (is_final, ((letter, target or BOX), ...))


@dataclass(frozen=True)
class CycleProfile:
    states: tuple[int, ...]
    weak_word: tuple[WeakSignature, ...]
    canonical_rotation: int


def weak_signature_word(d: Dfa, cycle: Sequence[int], rep: Sequence[int] | None = None) -> CycleProfile:
    """Weak signatures along ``cycle``; arcs to the next cycle state become BOX.

    ``rep`` optionally maps exit targets to representatives.
    """
    cycle = tuple(cycle)
    if not cycle or len(set(cycle)) != len(cycle):
        raise NotACycle("a cycle is a nonempty list of distinct states")
    members = set(cycle)
    word = []
    for i, q in enumerate(cycle):
        succ = cycle[(i + 1) % len(cycle)]
        arcs = []
        for a, t in enumerate(d.delta[q]):
            if t == UNDEFINED:
                continue
            if t == succ:
                arcs.append((a, BOX))
            elif t in members:
                raise NotACycle(f"state {q} has a second successor {t} inside the cycle")
            else:
                arcs.append((a, t if rep is None else rep[t]))
        if not any(t == BOX for _, t in arcs):
            raise NotACycle(f"no arc from {q} to {succ}")
        word.append((q in d.finals, tuple(arcs)))
    word = tuple(word)
    return CycleProfile(cycle, word, minimal_rotation(word))


def format_weak_signature(sig: WeakSignature, alphabet: Sequence[str], name=str) -> str:
    """Render a (weak) signature as e.g. ``-a8b□``."""
    final, arcs = sig
    return ("+" if final else "-") + "".join(
        alphabet[a] + ("□" if t == BOX else name(t)) for a, t in arcs
    )


def minimal_rotation(seq: Sequence) -> int:
    """Smallest start index of the lexicographically least rotation (Booth)."""
    s = list(seq)
    n = len(s)
    if n == 0:
        raise ValueError("empty sequence")
    s2 = s + s
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        x = s2[j]
        i = f[j - k - 1]
        while i != -1 and x != s2[k + i + 1]:
            if x < s2[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if i == -1 and x != s2[k + i + 1]:
            if x < s2[k + i + 1]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % _period(s) if n % _period(s) == 0 else k


def _period(s: Sequence) -> int:
    """Smallest period of ``s`` (length minus longest proper border)."""
    n = len(s)
    border = [0] * (n + 1)
    border[0] = -1
    k = -1
    for i in range(n):
        while k >= 0 and s[k] != s[i]:
            k = border[k]
        k += 1
        border[i + 1] = k
    return n - border[n]


def primitive_root_length(seq: Sequence) -> int:
    """Length of the shortest u with seq = u^m."""
    p = _period(seq)
    return p if len(seq) % p == 0 else len(seq)


def _condensation_heights(d: Dfa, comps: list[list[int]]) -> list[int]:
    """Height of each component in the condensation (components in reverse topological order)."""
    comp_of = [0] * d.num_states
    for i, c in enumerate(comps):
        for q in c:
            comp_of[q] = i
    h = [0] * len(comps)
    for i, c in enumerate(comps):  # successors come earlier in Tarjan's output
        best = -1
        for q in c:
            for t in d.delta[q]:
                if t != UNDEFINED and comp_of[t] != i:
                    best = max(best, h[comp_of[t]])
        h[i] = best + 1
    return h


def az_minimize(d: Dfa | Nfa, events: list | None = None) -> Dfa:
    """Minimal automaton of a simple automaton (input is trimmed first).

    ``events``, if given, receives ``(kind, removed, kept)`` triples with
    kind among ``"fuse"``, ``"wrap"``, ``"collapse"`` and ``"cycle"``.
    """
    d = trim(as_dfa(d))
    if d.is_empty:
        return d
    comps = scc(d)
    cycles = {}
    for i, c in enumerate(comps):
        if _is_nontrivial(d, c):
            order = _cycle_order(d, c)
            if order is None:
                raise NotSimple(f"component {c} is not a simple cycle")
            cycles[i] = order
    h = _condensation_heights(d, comps)
    order = sorted(range(len(comps)), key=lambda i: (h[i], i not in cycles, comps[i][0]))

    rep = list(range(d.num_states))
    on_cycle = [False] * d.num_states
    state_register: dict[tuple, int] = {}
    cycle_register: dict[tuple, list[int]] = {}

    def note(kind, removed, kept):
        if events is not None:
            events.append((kind, removed, kept))

    def strict(q):
        return (q in d.finals, tuple((a, rep[t]) for a, t in enumerate(d.delta[q]) if t != UNDEFINED))

    for i in order:
        if i not in cycles:
            (q,) = comps[i]
            sig = strict(q)
            twin = state_register.get(sig)
            if twin is None:
                state_register[sig] = q
            else:
                rep[q] = twin
                note("wrap" if on_cycle[twin] else "fuse", q, twin)
            continue

        original = cycles[i]
        word = weak_signature_word(d, original, rep).weak_word
        p = primitive_root_length(word)
        for j in range(p, len(original)):
            rep[original[j]] = original[j % p]
            note("collapse", original[j], original[j % p])
        states, word = original[:p], word[:p]
        r = minimal_rotation(word)
        key = word[r:] + word[:r]
        rotated = states[r:] + states[:r]
        kept = cycle_register.get(key)
        if kept is not None:
            target = dict(zip(rotated, kept))
            for q in rotated:
                note("cycle", q, target[q])
            for q in original:
                rep[q] = target[rep[q]]
            continue
        cycle_register[key] = rotated
        for q in states:
            on_cycle[q] = True
        for q in states:
            # the in-cycle successor is its own representative, so this is exact
            state_register.setdefault(strict(q), q)
    return quotient(d, rep)[0]
