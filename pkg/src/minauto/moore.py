"""Moore's partition refinement and the depth of an automaton."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Dfa, quotient
from .errors import NotComplete


@dataclass(frozen=True)
class MooreTrace:
    """The Moore partitions M_0, ..., M_{depth+1} (the last two are equal).

    Each partition is stored as a tuple giving the class label of every
    state; labels are numbered by first occurrence, so two partitions are
    equal iff their label tuples are equal.
    """

    labels: tuple[tuple[int, ...], ...]

    @property
    def depth(self) -> int:
        return len(self.labels) - 2

    @property
    def partitions(self) -> list[tuple[tuple[int, ...], ...]]:
        """Each M_h as sorted tuples of states."""
        out = []
        for lab in self.labels:
            classes: dict[int, list[int]] = {}
            for q, c in enumerate(lab):
                classes.setdefault(c, []).append(q)
            out.append(tuple(sorted(tuple(c) for c in classes.values())))
        return out

    @property
    def final_labels(self) -> tuple[int, ...]:
        return self.labels[-1]


def _require_complete(d: Dfa) -> None:
    if not d.is_complete():
        raise NotComplete("Moore's algorithm needs a complete automaton; use complete_with_sink")


def _counting_sort(order: list[int], key: list[int], buckets: int) -> list[int]:
    """Stable sort of ``order`` by ``key[q]`` with values in range(buckets)."""
    count = [0] * (buckets + 1)
    for q in order:
        count[key[q] + 1] += 1
    for i in range(buckets):
        count[i + 1] += count[i]
    out = [0] * len(order)
    for q in order:
        k = key[q]
        out[count[k]] = q
        count[k] += 1
    return out


def refine_once(d: Dfa, labels: list[int], num_classes: int) -> tuple[list[int], int]:
    """One Moore round: split by the tuple (label(q), label(q.a_1), ..., label(q.a_k)).

    The tuples are sorted by a stable counting-sort pass per coordinate,
    last coordinate first, then equal neighbours share a new label. New
    labels are renumbered by first occurrence in state order.
    """
    n = d.num_states
    order = list(range(n))
    delta = d.delta
    for a in range(len(d.alphabet) - 1, -1, -1):
        key = [labels[delta[q][a]] for q in range(n)]
        order = _counting_sort(order, key, num_classes)
    order = _counting_sort(order, labels, num_classes)

    raw = [0] * n
    group = -1
    prev = None
    for q in order:
        sig = (labels[q], *(labels[t] for t in delta[q]))
        if sig != prev:
            group += 1
            prev = sig
        raw[q] = group
    # renumber by first occurrence so that labels are canonical
    renum: dict[int, int] = {}
    new = [renum.setdefault(g, len(renum)) for g in raw]
    return new, len(renum)


def initial_labels(d: Dfa) -> tuple[list[int], int]:
    """M_0 = {F, F^c} restricted to its nonempty blocks."""
    renum: dict[bool, int] = {}
    finals = d.finals
    labels = [renum.setdefault(q in finals, len(renum)) for q in range(d.num_states)]
    return labels, len(renum)


def moore_sequence(d: Dfa) -> MooreTrace:
    _require_complete(d)
    labels, count = initial_labels(d)
    history = [tuple(labels)]
    while True:
        labels, new_count = refine_once(d, labels, count)
        history.append(tuple(labels))
        if new_count == count:
            break
        count = new_count
    return MooreTrace(tuple(history))


def depth(d: Dfa) -> int:
    """Smallest h such that the Moore equivalences of order h and h+1 agree."""
    _require_complete(d)
    labels, count = initial_labels(d)
    h = 0
    while True:
        labels, new_count = refine_once(d, labels, count)
        if new_count == count:
            return h
        count = new_count
        h += 1


def moore_minimize(d: Dfa) -> tuple[Dfa, tuple[int, ...]]:
    """Quotient of a complete automaton by its final Moore partition.

    States of the result are numbered in the order of their smallest
    original member; the returned map sends every state of ``d`` to its
    state in the quotient. For an accessible ``d`` the result is minimal.
    """
    if d.is_empty:
        return d, ()
    trace = moore_sequence(d)
    return quotient(d, trace.final_labels)
