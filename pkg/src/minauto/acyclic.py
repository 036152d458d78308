"""Bottom-up fusion for acyclic automata and dictionary maintenance.

Two states are merged when they have the same signature: same final flag
and same outgoing arcs after earlier merges have been applied to the
targets. Processing states children-first makes signature equality
coincide with language equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .core import UNDEFINED, Dfa, accessible, encode_word, quotient, trim, with_alphabet
from .errors import NotAcyclic, NotMinimal, NotSorted, WordAlreadyAccepted, WordNotAccepted


def heights(d: Dfa) -> list[int]:
    """Length of the longest path leaving each state (0 for states without arcs)."""
    n = d.num_states
    indegree = [0] * n
    for row in d.delta:
        for t in row:
            if t != UNDEFINED:
                indegree[t] += 1
    # Kahn order; anything left over sits on or behind a cycle
    order = [q for q in range(n) if indegree[q] == 0]
    for q in order:
        for t in d.delta[q]:
            if t != UNDEFINED:
                indegree[t] -= 1
                if indegree[t] == 0:
                    order.append(t)
    if len(order) < n:
        stuck = next(q for q in range(n) if indegree[q])
        raise NotAcyclic(f"state {stuck} is reachable from a cycle")
    h = [0] * n
    for q in reversed(order):
        best = 0
        for t in d.delta[q]:
            if t != UNDEFINED and h[t] >= best:
                best = h[t] + 1
        h[q] = best
    return h


def _signature(final: bool, row: Sequence[int], rep: Sequence[int]) -> tuple:
    return (final, tuple(UNDEFINED if t == UNDEFINED else rep[t] for t in row))


def revuz_minimize(d: Dfa) -> Dfa:
    """Minimal automaton of an acyclic ``d``, merging states height by height.

    The input is trimmed first. At each height the signatures (targets
    replaced by their representatives) are sorted so that equal ones are
    adjacent; the first state of each run becomes the representative.
    """
    d = trim(d)
    if d.is_empty:
        return d
    h = heights(d)
    by_height: list[list[int]] = [[] for _ in range(max(h) + 1)]
    for q, x in enumerate(h):
        by_height[x].append(q)
    rep = list(range(d.num_states))
    for layer in by_height:
        keyed = sorted((_signature(q in d.finals, d.delta[q], rep), q) for q in layer)
        prev_sig, prev_rep = None, -1
        for sig, q in keyed:
            if sig == prev_sig:
                rep[q] = prev_rep
            else:
                prev_sig, prev_rep = sig, q
    return quotient(d, rep)[0]


def _alphabet_of(words: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted({c for w in words for c in w}))


def build_trie(words: Iterable[str], alphabet: Sequence[str] | None = None) -> Dfa:
    """Prefix tree of ``words``; states are numbered in creation order."""
    words = list(words)
    alphabet = _alphabet_of(words) if alphabet is None else tuple(alphabet)
    k = len(alphabet)
    rows = [[UNDEFINED] * k]
    finals = set()
    for w in words:
        q = 0
        for a in encode_word(alphabet, w):
            if rows[q][a] == UNDEFINED:
                rows[q][a] = len(rows)
                rows.append([UNDEFINED] * k)
            q = rows[q][a]
        finals.add(q)
    if not finals:
        return Dfa.empty(alphabet)
    return Dfa(len(rows), alphabet, 0, frozenset(finals), tuple(map(tuple, rows)))


class PrefixSuffixSplit(NamedTuple):
    common_prefix: str
    suffix: str
    anchor: int  # state reached by common_prefix


def prefix_suffix_decomposition(d: Dfa, w: str) -> PrefixSuffixSplit:
    """Split ``w = x y`` where x is the longest prefix readable from the initial state."""
    letters = encode_word(d.alphabet, w)
    if d.is_empty:
        raise WordNotAccepted("the empty automaton has no initial state")
    q = d.initial
    i = 0
    for a in letters:
        t = d.delta[q][a]
        if t == UNDEFINED:
            break
        q = t
        i += 1
    return PrefixSuffixSplit(w[:i], w[i:], q)


@dataclass
class DaciukBuilder:
    """Incremental construction of the minimal automaton of a sorted word list.

    ``add`` inserts the next word: the part of the previous word's path
    beyond the common prefix is minimized bottom-up against the register,
    then a fresh path is appended for the new suffix. ``finish`` minimizes
    the last path. State ids are never reused, so intermediate snapshots
    keep the numbering of the construction. ``merges`` records every
    ``(removed, kept)`` fusion in order.
    """

    alphabet: tuple[str, ...] | None = None
    arcs: dict[int, dict[str, int]] = field(default_factory=lambda: {0: {}})
    finals: set[int] = field(default_factory=set)
    register: dict[tuple, int] = field(default_factory=dict)
    merges: list[tuple[int, int]] = field(default_factory=list)
    _next_id: int = 1
    _last: str | None = None
    _path: list[int] = field(default_factory=lambda: [0])
    _finished: bool = False

    def _key(self, q: int) -> tuple:
        return (q in self.finals, tuple(sorted(self.arcs[q].items())))

    def _minimize_path(self, keep: int) -> None:
        """Register or merge path states deeper than index ``keep``."""
        last = self._last
        for i in range(len(self._path) - 1, keep, -1):
            q = self._path[i]
            key = self._key(q)
            twin = self.register.get(key)
            if twin is None:
                self.register[key] = q
            else:
                self.arcs[self._path[i - 1]][last[i - 1]] = twin
                del self.arcs[q]
                self.finals.discard(q)
                self.merges.append((q, twin))
        del self._path[keep + 1 :]

    def add(self, word: str) -> None:
        if self._finished:
            raise RuntimeError("builder already finished")
        if self.alphabet is not None:
            encode_word(self.alphabet, word)
        if self._last is not None and word <= self._last:
            raise NotSorted(f"{word!r} does not come after {self._last!r}")
        prefix = 0
        if self._last is not None:
            limit = min(len(word), len(self._last))
            while prefix < limit and word[prefix] == self._last[prefix]:
                prefix += 1
            self._minimize_path(prefix)
        q = self._path[-1]
        for c in word[prefix:]:
            t = self._next_id
            self._next_id += 1
            self.arcs[t] = {}
            self.arcs[q][c] = t
            self._path.append(t)
            q = t
        self.finals.add(q)
        self._last = word

    def finish(self) -> Dfa:
        if not self._finished:
            if self._last is not None:
                self._minimize_path(0)
            self._finished = True
        return self.snapshot()

    def state_ids(self) -> list[int]:
        """Live builder ids, in increasing order (index = state in snapshots)."""
        return sorted(self.arcs)

    def snapshot(self) -> Dfa:
        """Current automaton, live ids renumbered in increasing order."""
        if self._last is None:
            return Dfa.empty(self.alphabet or ())
        alphabet = self.alphabet
        if alphabet is None:
            alphabet = tuple(sorted({c for out in self.arcs.values() for c in out}))
        ids = self.state_ids()
        index = {q: i for i, q in enumerate(ids)}
        pos = {c: i for i, c in enumerate(alphabet)}
        rows = []
        for q in ids:
            row = [UNDEFINED] * len(alphabet)
            for c, t in self.arcs[q].items():
                row[pos[c]] = index[t]
            rows.append(tuple(row))
        return Dfa(len(ids), alphabet, 0, frozenset(index[q] for q in self.finals), tuple(rows))


def daciuk_build(words: Iterable[str], alphabet: Sequence[str] | None = None) -> Dfa:
    """Minimal acyclic automaton of a strictly increasing word list."""
    builder = DaciukBuilder(tuple(alphabet) if alphabet is not None else None)
    for w in words:
        builder.add(w)
    return builder.finish()


# ---------------------------------------------------------------------------
# Dynamic updates on a minimal automaton


def _rebuild_with_clones(d: Dfa, letters: list[int], fresh_final: bool, path_len: int) -> Dfa:
    """Clone the path of ``letters[:path_len]`` and extend it with new states.

    Clone ``j`` copies the arcs of the j-th path state (if any) and points
    its ``letters[j]`` arc at clone ``j+1``. The last clone gets final flag
    ``fresh_final``. Clones are then resolved from the last one backwards:
    a clone with empty language disappears, a clone whose signature equals
    that of a state of ``d`` is replaced by it. Since the states of ``d``
    are pairwise inequivalent, the accessible part of the result is minimal.
    """
    n, k = d.num_states, len(d.alphabet)
    m = len(letters)
    path = [d.initial]
    for a in letters[:path_len]:
        path.append(d.delta[path[-1]][a])

    register = {(q in d.finals, d.delta[q]): q for q in range(n)}
    resolved = [UNDEFINED] * (m + 1)  # final id of clone j, UNDEFINED when dead
    extra_rows: list[tuple[int, ...]] = []
    extra_finals: set[int] = set()
    for j in range(m, -1, -1):
        if j < len(path):
            row = list(d.delta[path[j]])
            final = path[j] in d.finals
        else:
            row = [UNDEFINED] * k
            final = False
        if j == m:
            final = fresh_final
        else:
            row[letters[j]] = resolved[j + 1]
        if not final and all(t == UNDEFINED for t in row):
            continue  # dead
        sig = (final, tuple(row))
        twin = register.get(sig)
        if twin is not None:
            resolved[j] = twin
            continue
        resolved[j] = n + len(extra_rows)
        extra_rows.append(tuple(row))
        if final:
            extra_finals.add(resolved[j])

    if resolved[0] == UNDEFINED:
        return Dfa.empty(d.alphabet)
    full = Dfa(
        n + len(extra_rows),
        d.alphabet,
        resolved[0],
        d.finals | extra_finals,
        d.delta + tuple(extra_rows),
    )
    return accessible(full)


def _require_minimal(d: Dfa) -> None:
    from .oracle import is_minimal

    if not is_minimal(d):
        raise NotMinimal("input automaton is not minimal")


def remove_word(d: Dfa, w: str, *, check: bool = False) -> Dfa:
    """Minimal automaton of L(d) minus {w}, for a minimal (trim) ``d``.

    The path of w is cloned, the last clone made non-final, and the old
    states that become unreachable are dropped. ``d`` may have cycles.
    With ``check`` the input is first verified to be minimal.
    """
    letters = encode_word(d.alphabet, w)
    if d.is_empty or not _reads_to_final(d, letters):
        raise WordNotAccepted(f"{w!r} is not accepted")
    if check:
        _require_minimal(d)
    return _rebuild_with_clones(d, letters, False, len(letters))


def add_word(d: Dfa, w: str, *, check: bool = False) -> Dfa:
    """Minimal automaton of L(d) plus {w}, for a minimal (trim) ``d``.

    Symbols of w missing from the alphabet are appended to it in sorted
    order.
    """
    new_symbols = sorted(set(w) - set(d.alphabet))
    if new_symbols:
        d = with_alphabet(d, d.alphabet + tuple(new_symbols))
    letters = encode_word(d.alphabet, w)
    if d.is_empty:
        k = len(d.alphabet)
        rows = []
        for i, a in enumerate(letters):
            row = [UNDEFINED] * k
            row[a] = i + 1
            rows.append(tuple(row))
        rows.append((UNDEFINED,) * k)
        return Dfa(len(rows), d.alphabet, 0, frozenset([len(letters)]), tuple(rows))
    if _reads_to_final(d, letters):
        raise WordAlreadyAccepted(f"{w!r} is already accepted")
    if check:
        _require_minimal(d)
    q, readable = d.initial, 0
    for a in letters:
        q = d.delta[q][a]
        if q == UNDEFINED:
            break
        readable += 1
    return _rebuild_with_clones(d, letters, True, readable)


def _reads_to_final(d: Dfa, letters: list[int]) -> bool:
    q = d.initial
    for a in letters:
        q = d.delta[q][a]
        if q == UNDEFINED:
            return False
    return q in d.finals
