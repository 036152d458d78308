"""Automaton values and the basic constructions on them.

Two immutable value types are used throughout the package:

* :class:`Nfa` - a general finite automaton (several initial states,
  nondeterministic transitions), stored as a set of ``(p, letter, q)``
  triples.
* :class:`Dfa` - a deterministic, possibly partial automaton with dense
  integer states. ``delta[q][a]`` is the target of state ``q`` on the letter
  of index ``a``, or ``-1`` when undefined.

The automaton with empty language is represented by a 0-state value whose
initial state is ``None`` (``is_empty`` is true). Letters are always
referred to by their index in ``alphabet``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import InvalidAutomaton, NotDeterministic, UnknownSymbol

UNDEFINED = -1


def _check_alphabet(alphabet: Sequence[str]) -> tuple[str, ...]:
    alphabet = tuple(alphabet)
    for s in alphabet:
        if not isinstance(s, str) or len(s) != 1:
            raise InvalidAutomaton(f"alphabet symbols must be single characters, got {s!r}")
    if len(set(alphabet)) != len(alphabet):
        raise InvalidAutomaton("alphabet symbols must be pairwise distinct")
    return alphabet


def _letter_index(alphabet: Sequence[str], letter) -> int:
    if isinstance(letter, str):
        try:
            return alphabet.index(letter)
        except ValueError:
            raise UnknownSymbol(f"symbol {letter!r} is not in the alphabet") from None
    if not 0 <= letter < len(alphabet):
        raise InvalidAutomaton(f"letter index {letter} out of range")
    return letter


@dataclass(frozen=True)
class Nfa:
    num_states: int
    alphabet: tuple[str, ...]
    initials: frozenset[int]
    finals: frozenset[int]
    transitions: frozenset[tuple[int, int, int]]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", _check_alphabet(self.alphabet))
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        n, k = self.num_states, len(self.alphabet)
        if n < 0:
            raise InvalidAutomaton("num_states must be nonnegative")
        for q in self.initials | self.finals:
            if not 0 <= q < n:
                raise InvalidAutomaton(f"state {q} out of range [0, {n})")
        for p, a, q in self.transitions:
            if not (0 <= p < n and 0 <= q < n):
                raise InvalidAutomaton(f"transition ({p}, {a}, {q}) has a state out of range")
            if not 0 <= a < k:
                raise InvalidAutomaton(f"transition ({p}, {a}, {q}) has a letter out of range")

    @classmethod
    def build(cls, num_states, alphabet, initials, finals, transitions) -> "Nfa":
        """Build from transitions whose letters are symbols or indices."""
        alphabet = _check_alphabet(alphabet)
        triples = {(p, _letter_index(alphabet, a), q) for p, a, q in transitions}
        return cls(num_states, alphabet, frozenset(initials), frozenset(finals), frozenset(triples))

    @property
    def is_empty(self) -> bool:
        return self.num_states == 0

    def is_deterministic(self) -> bool:
        if len(self.initials) > 1:
            return False
        seen = set()
        for p, a, _ in self.transitions:
            if (p, a) in seen:
                return False
            seen.add((p, a))
        return True

    def to_dfa(self) -> "Dfa":
        """Reinterpret a deterministic Nfa as a Dfa (state ids unchanged)."""
        if not self.is_deterministic():
            raise NotDeterministic("automaton is not deterministic")
        if not self.initials:
            if self.num_states:
                raise NotDeterministic("a Dfa needs an initial state")
            return Dfa.empty(self.alphabet)
        k = len(self.alphabet)
        rows = [[UNDEFINED] * k for _ in range(self.num_states)]
        for p, a, q in self.transitions:
            rows[p][a] = q
        (initial,) = self.initials
        return Dfa(self.num_states, self.alphabet, initial, self.finals, tuple(map(tuple, rows)))


@dataclass(frozen=True)
class Dfa:
    num_states: int
    alphabet: tuple[str, ...]
    initial: int | None
    finals: frozenset[int]
    delta: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", _check_alphabet(self.alphabet))
        object.__setattr__(self, "finals", frozenset(self.finals))
        n, k = self.num_states, len(self.alphabet)
        if n < 0:
            raise InvalidAutomaton("num_states must be nonnegative")
        if self.initial is None:
            if n:
                raise InvalidAutomaton("only the empty automaton has no initial state")
        elif not 0 <= self.initial < n:
            raise InvalidAutomaton(f"initial state {self.initial} out of range")
        for q in self.finals:
            if not 0 <= q < n:
                raise InvalidAutomaton(f"final state {q} out of range")
        if len(self.delta) != n:
            raise InvalidAutomaton("delta must have one row per state")
        for row in self.delta:
            if len(row) != k:
                raise InvalidAutomaton("delta rows must have one entry per letter")
            for q in row:
                if not (q == UNDEFINED or 0 <= q < n):
                    raise InvalidAutomaton(f"transition target {q} out of range")

    @classmethod
    def empty(cls, alphabet: Sequence[str] = ()) -> "Dfa":
        return cls(0, tuple(alphabet), None, frozenset(), ())

    @classmethod
    def build(cls, num_states, alphabet, initial, finals, transitions) -> "Dfa":
        """Build from ``(p, letter, q)`` triples; letters are symbols or indices."""
        alphabet = _check_alphabet(alphabet)
        rows = [[UNDEFINED] * len(alphabet) for _ in range(num_states)]
        for p, a, q in transitions:
            a = _letter_index(alphabet, a)
            if rows[p][a] != UNDEFINED and rows[p][a] != q:
                raise NotDeterministic(f"two targets for state {p} on {alphabet[a]!r}")
            rows[p][a] = q
        return cls(num_states, alphabet, initial, frozenset(finals), tuple(map(tuple, rows)))

    @property
    def is_empty(self) -> bool:
        return self.num_states == 0

    def is_complete(self) -> bool:
        return all(q != UNDEFINED for row in self.delta for q in row)

    def step(self, q: int, letter) -> int:
        return self.delta[q][_letter_index(self.alphabet, letter)]

    def transitions(self) -> Iterator[tuple[int, int, int]]:
        """Defined transitions as (source, letter index, target), sorted."""
        for p, row in enumerate(self.delta):
            for a, q in enumerate(row):
                if q != UNDEFINED:
                    yield p, a, q

    def num_transitions(self) -> int:
        return sum(q != UNDEFINED for row in self.delta for q in row)

    def to_nfa(self) -> Nfa:
        initials = frozenset() if self.initial is None else frozenset([self.initial])
        return Nfa(self.num_states, self.alphabet, initials, self.finals, frozenset(self.transitions()))


class Signature(NamedTuple):
    """Final flag plus the defined transitions ordered by letter index."""

    is_final: bool
    arcs: tuple[tuple[int, int], ...]


def as_dfa(a: Dfa | Nfa) -> Dfa:
    return a if isinstance(a, Dfa) else a.to_dfa()


def as_nfa(a: Dfa | Nfa) -> Nfa:
    return a if isinstance(a, Nfa) else a.to_nfa()


def encode_word(alphabet: Sequence[str], w: Iterable[str]) -> list[int]:
    """Translate a word to letter indices, raising UnknownSymbol on foreign symbols."""
    index = {s: i for i, s in enumerate(alphabet)}
    try:
        return [index[s] for s in w]
    except KeyError as exc:
        raise UnknownSymbol(f"symbol {exc.args[0]!r} is not in the alphabet") from None


def reverse(a: Nfa) -> Nfa:
    """Exchange initial and final states and flip every edge."""
    a = as_nfa(a)
    return Nfa(
        a.num_states,
        a.alphabet,
        a.finals,
        a.initials,
        frozenset((q, x, p) for p, x, q in a.transitions),
    )


_NO_STATES: frozenset[int] = frozenset()


def determinize(a: Nfa) -> Dfa:
    """Accessible subset construction.

    Subsets are numbered in breadth-first discovery order starting from the
    set of initial states, letters explored in alphabet order. The empty
    subset is never materialized: a letter leading to it is left undefined,
    so the result may be partial.
    """
    a = as_nfa(a)
    k = len(a.alphabet)
    if not a.initials:
        return Dfa.empty(a.alphabet)
    succ: list[list[list[int]]] = [[[] for _ in range(k)] for _ in range(a.num_states)]
    for p, x, q in a.transitions:
        succ[p][x].append(q)

    start = frozenset(a.initials)
    index = {start: 0}
    subsets = [start]
    rows = []
    for current in subsets:  # grows while iterating: breadth-first order
        members = [succ[p] for p in current]
        row = []
        for x in range(k):
            target = _NO_STATES.union(*[s[x] for s in members])
            if not target:
                row.append(UNDEFINED)
                continue
            i = index.get(target)
            if i is None:
                i = index[target] = len(subsets)
                subsets.append(target)
            row.append(i)
        rows.append(tuple(row))
    finals = frozenset(i for i, s in enumerate(subsets) if not s.isdisjoint(a.finals))
    return Dfa(len(subsets), a.alphabet, 0, finals, tuple(rows))


def _live_states(n, initials, finals, edges) -> list[bool]:
    fwd = [[] for _ in range(n)]
    bwd = [[] for _ in range(n)]
    for p, q in edges:
        fwd[p].append(q)
        bwd[q].append(p)

    def reach(seeds, adj):
        seen = [False] * n
        stack = list(seeds)
        for q in stack:
            seen[q] = True
        while stack:
            p = stack.pop()
            for q in adj[p]:
                if not seen[q]:
                    seen[q] = True
                    stack.append(q)
        return seen

    acc = reach(initials, fwd)
    coacc = reach(finals, bwd)
    return [x and y for x, y in zip(acc, coacc)]


def trim(a: Nfa | Dfa) -> Nfa | Dfa:
    """Keep the states lying on some path from an initial to a final state.

    Survivors are renumbered densely in their original relative order. The
    result has the same type as the input; when no state survives the empty
    value (0 states, ``is_empty``) is returned.
    """
    if isinstance(a, Dfa):
        initials = [] if a.initial is None else [a.initial]
        live = _live_states(a.num_states, initials, a.finals, ((p, q) for p, _, q in a.transitions()))
        if all(live):
            return a
        if not any(live):
            return Dfa.empty(a.alphabet)
        new = _renumber(live)
        rows = tuple(
            tuple(new[q] if q != UNDEFINED and live[q] else UNDEFINED for q in a.delta[p])
            for p in range(a.num_states)
            if live[p]
        )
        return Dfa(len(rows), a.alphabet, new[a.initial], frozenset(new[q] for q in a.finals if live[q]), rows)

    live = _live_states(a.num_states, a.initials, a.finals, ((p, q) for p, _, q in a.transitions))
    if all(live):
        return a
    if not any(live):
        return Nfa(0, a.alphabet, frozenset(), frozenset(), frozenset())
    new = _renumber(live)
    return Nfa(
        sum(live),
        a.alphabet,
        frozenset(new[q] for q in a.initials if live[q]),
        frozenset(new[q] for q in a.finals if live[q]),
        frozenset((new[p], x, new[q]) for p, x, q in a.transitions if live[p] and live[q]),
    )


def accessible(d: Dfa) -> Dfa:
    """Drop the states not reachable from the initial state (order-preserving)."""
    if d.is_empty:
        return d
    seen = [False] * d.num_states
    seen[d.initial] = True
    stack = [d.initial]
    while stack:
        p = stack.pop()
        for q in d.delta[p]:
            if q != UNDEFINED and not seen[q]:
                seen[q] = True
                stack.append(q)
    if all(seen):
        return d
    new = _renumber(seen)
    rows = tuple(
        tuple(UNDEFINED if q == UNDEFINED else new[q] for q in d.delta[p]) for p in range(d.num_states) if seen[p]
    )
    return Dfa(len(rows), d.alphabet, new[d.initial], frozenset(new[q] for q in d.finals if seen[q]), rows)


def _renumber(keep: Sequence[bool]) -> list[int]:
    new = [UNDEFINED] * len(keep)
    nxt = 0
    for q, k in enumerate(keep):
        if k:
            new[q] = nxt
            nxt += 1
    return new


def complete_with_sink(d: Dfa) -> Dfa:
    """Route every missing transition to one fresh non-final sink state.

    A complete input is returned unchanged. The empty automaton becomes a
    single non-final sink, which is its complete representation.
    """
    if d.is_empty:
        k = len(d.alphabet)
        return Dfa(1, d.alphabet, 0, frozenset(), ((0,) * k,))
    if d.is_complete():
        return d
    sink = d.num_states
    rows = tuple(tuple(sink if q == UNDEFINED else q for q in row) for row in d.delta)
    rows += ((sink,) * len(d.alphabet),)
    return Dfa(d.num_states + 1, d.alphabet, d.initial, d.finals, rows)


def accepts(d: Dfa, w: str) -> bool:
    """True iff reading ``w`` from the initial state ends in a final state."""
    letters = encode_word(d.alphabet, w)
    q = d.initial
    if q is None:
        return False
    delta = d.delta
    for a in letters:
        q = delta[q][a]
        if q == UNDEFINED:
            return False
    return q in d.finals


def state_signature(d: Dfa, q: int) -> Signature:
    row = d.delta[q]
    return Signature(q in d.finals, tuple((a, t) for a, t in enumerate(row) if t != UNDEFINED))


def with_alphabet(d: Dfa, alphabet: Sequence[str]) -> Dfa:
    """Re-index ``d`` over a superset alphabet (new letters undefined everywhere)."""
    alphabet = _check_alphabet(alphabet)
    missing = set(d.alphabet) - set(alphabet)
    if missing:
        raise InvalidAutomaton(f"new alphabet lacks symbols {sorted(missing)}")
    if alphabet == d.alphabet:
        return d
    pos = [alphabet.index(s) for s in d.alphabet]
    rows = []
    for row in d.delta:
        new_row = [UNDEFINED] * len(alphabet)
        for a, q in enumerate(row):
            new_row[pos[a]] = q
        rows.append(tuple(new_row))
    return Dfa(d.num_states, alphabet, d.initial, d.finals, tuple(rows))


def quotient(d: Dfa, class_of: Sequence[int]) -> tuple[Dfa, tuple[int, ...]]:
    """Quotient of ``d`` by a congruence given as a class label per state.

    Classes are renumbered in the order of their smallest member (the class
    representative), so the output is independent of how labels were
    chosen. Returns the quotient and the map from old states to new ones.
    """
    n = d.num_states
    new_of_label: dict[int, int] = {}
    reps: list[int] = []
    state_map = [0] * n
    for q in range(n):
        lab = class_of[q]
        if lab not in new_of_label:
            new_of_label[lab] = len(reps)
            reps.append(q)
        state_map[q] = new_of_label[lab]
    rows = tuple(
        tuple(UNDEFINED if t == UNDEFINED else state_map[t] for t in d.delta[r]) for r in reps
    )
    finals = frozenset(state_map[q] for q in d.finals)
    initial = None if d.initial is None else state_map[d.initial]
    return Dfa(len(reps), d.alphabet, initial, finals, rows), tuple(state_map)


def words_up_to(alphabet: Sequence[str], max_len: int) -> Iterator[str]:
    """All words of length <= max_len, shortest first then in alphabet order."""
    layer = [""]
    for _ in range(max_len + 1):
        yield from layer
        layer = [w + s for w in layer for s in alphabet]


def nfa_accepts(a: Nfa, w: str) -> bool:
    letters = encode_word(a.alphabet, w)
    succ: dict[tuple[int, int], list[int]] = {}
    for p, x, q in a.transitions:
        succ.setdefault((p, x), []).append(q)
    current = set(a.initials)
    for x in letters:
        current = {q for p in current for q in succ.get((p, x), ())}
        if not current:
            return False
    return bool(current & a.finals)
