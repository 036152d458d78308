"""Partitions of state sets and the waiting set of splitters.

Plain partitions (the values handled by :func:`meet`, :func:`splitter_apply`
and :func:`refines`) are tuples of frozensets. :class:`RefinablePartition`
is the mutable structure used by Hopcroft's algorithm: class lookup in
constant time, member enumeration in time proportional to the class size,
and splitting by a set of hit states in time proportional to the number of
hits.
"""

from __future__ import annotations

import enum
from collections import deque
from typing import Collection, Hashable, Iterable, Sequence

from .core import Dfa, UNDEFINED
from .errors import GroundSetMismatch, TakeFromEmpty

Partition = tuple[frozenset, ...]


def canonical(partition: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    """Order-free form of a partition: sorted classes, sorted by first member."""
    return tuple(sorted(tuple(sorted(c)) for c in partition))


def preimage(P: Collection[int], a: int, d: Dfa) -> frozenset[int]:
    """States ``q`` with ``q . a`` defined and in ``P``."""
    P = set(P)
    return frozenset(q for q, row in enumerate(d.delta) if row[a] != UNDEFINED and row[a] in P)


def splitter_apply(P: Collection[int], a: int, R: Collection[int], d: Dfa) -> Partition:
    """The partition ``(P, a)|R``: nonempty sets among R ∩ a⁻¹P and R ∖ a⁻¹P.

    When both blocks are nonempty the intersection comes first.
    """
    P = set(P)
    inside, outside = [], []
    for q in R:
        t = d.delta[q][a]
        (inside if t != UNDEFINED and t in P else outside).append(q)
    return tuple(frozenset(b) for b in (inside, outside) if b)


def meet(p1: Iterable[Iterable[int]], p2: Iterable[Iterable[int]]) -> Partition:
    """Coarsest common refinement of two partitions of the same ground set.

    Each element gets the label pair (class in p1, class in p2); the pairs
    are grouped with two stable bucket passes, so the cost is linear.
    """
    p1 = [list(c) for c in p1]
    p2 = [list(c) for c in p2]
    label1: dict[Hashable, int] = {}
    for i, c in enumerate(p1):
        for x in c:
            label1[x] = i
    label2: dict[Hashable, int] = {}
    for j, c in enumerate(p2):
        for x in c:
            label2[x] = j
    if label1.keys() != label2.keys():
        raise GroundSetMismatch("partitions are over different ground sets")

    # Bucket by the second label, then stably by the first.
    by2: list[list] = [[] for _ in p2]
    for x in label1:
        by2[label2[x]].append(x)
    by1: list[list] = [[] for _ in p1]
    for bucket in by2:
        for x in bucket:
            by1[label1[x]].append(x)
    blocks = []
    for bucket in by1:
        current, last = [], None
        for x in bucket:
            if current and label2[x] != last:
                blocks.append(frozenset(current))
                current = []
            current.append(x)
            last = label2[x]
        if current:
            blocks.append(frozenset(current))
    return tuple(blocks)


def meet_all(partitions: Iterable[Iterable[Iterable[int]]], ground: Iterable[int]) -> Partition:
    """Meet of several partitions of ``ground``; the universal partition if none."""
    ground = frozenset(ground)
    result: Partition = (ground,) if ground else ()
    for p in partitions:
        result = meet(result, p)
    return result


def refines(fine: Iterable[Iterable[int]], coarse: Iterable[Iterable[int]]) -> bool:
    """True iff every class of ``fine`` lies inside a class of ``coarse``."""
    owner = {}
    for i, c in enumerate(coarse):
        for x in c:
            owner[x] = i
    for c in fine:
        labels = {owner.get(x, -1) for x in c}
        if len(labels) != 1 or -1 in labels:
            return False
    return True


class RefinablePartition:
    """Partition of ``range(n)`` supporting constant-time splitting bookkeeping.

    Members of a class occupy a contiguous slice ``elements[start:end]``;
    ``location`` inverts ``elements``. Marking moves a state to the front of
    its class's slice, so the marked part of every class is a prefix.
    """

    def __init__(self, n: int, blocks: Sequence[Iterable[int]] | None = None):
        if blocks is None:
            blocks = [range(n)] if n else []
        self.elements: list[int] = []
        self.location = [0] * n
        self.class_of = [-1] * n
        self.start: list[int] = []
        self.end: list[int] = []
        self.marked: list[int] = []
        for block in blocks:
            block = list(block)
            if not block:
                raise ValueError("classes must be nonempty")
            cid = len(self.start)
            self.start.append(len(self.elements))
            for q in block:
                if self.class_of[q] != -1:
                    raise ValueError(f"state {q} appears in two classes")
                self.location[q] = len(self.elements)
                self.elements.append(q)
                self.class_of[q] = cid
            self.end.append(len(self.elements))
            self.marked.append(0)
        if len(self.elements) != n:
            raise ValueError("blocks do not cover the ground set")

    def __len__(self) -> int:
        return len(self.start)

    def size(self, c: int) -> int:
        return self.end[c] - self.start[c]

    def members(self, c: int) -> list[int]:
        return self.elements[self.start[c] : self.end[c]]

    def classes(self) -> list[list[int]]:
        return [self.members(c) for c in range(len(self.start))]

    def as_partition(self) -> Partition:
        return tuple(frozenset(self.members(c)) for c in range(len(self.start)))

    def _mark(self, q: int) -> None:
        c = self.class_of[q]
        i = self.location[q]
        j = self.start[c] + self.marked[c]
        if i < j:
            return  # already marked
        other = self.elements[j]
        self.elements[i], self.elements[j] = other, q
        self.location[other], self.location[q] = i, j
        self.marked[c] += 1

    def mark_and_split(self, hits: Iterable[int]) -> list[tuple[int, int]]:
        """Split every class C with 0 < |C ∩ hits| < |C|.

        C ∖ hits keeps the old class id, C ∩ hits gets a fresh one. Returns
        ``(old_id, new_id)`` per split, in order of first touch.
        """
        touched: list[int] = []
        for q in hits:
            c = self.class_of[q]
            if self.marked[c] == 0:
                touched.append(c)
            self._mark(q)
        splits = []
        for c in touched:
            m = self.marked[c]
            self.marked[c] = 0
            if m == self.end[c] - self.start[c]:
                continue
            new = len(self.start)
            s = self.start[c]
            self.start.append(s)
            self.end.append(s + m)
            self.marked.append(0)
            self.start[c] = s + m
            for i in range(s, s + m):
                self.class_of[self.elements[i]] = new
            splits.append((c, new))
        return splits

    def check(self) -> None:
        """Assert the structural invariants (used by tests)."""
        n = len(self.location)
        assert sorted(self.elements) == list(range(n))
        for q in range(n):
            assert self.elements[self.location[q]] == q
            c = self.class_of[q]
            assert self.start[c] <= self.location[q] < self.end[c]
        for c in range(len(self.start)):
            assert self.start[c] < self.end[c]
            assert self.marked[c] == 0


class Policy(str, enum.Enum):
    """Which pending splitter ``take`` returns."""

    FIFO = "fifo"
    LIFO = "lifo"
    TWO_SETS = "two-sets"


class SplitterQueue:
    """Waiting set of (class id, letter) splitters with exact membership.

    ``TWO_SETS`` keeps a current set and a future set: additions go to the
    future set, ``take`` drains the current set and swaps the two when it is
    empty. ``cycles`` counts those swaps. Splitters given to ``seed`` start
    in the current set, so the first drain is not counted. Replacement puts
    the fresh splitter in the same set as the one it replaces.
    """

    def __init__(self, policy: Policy | str = Policy.FIFO):
        self.policy = Policy(policy)
        self._current: deque = deque()
        self._future: deque = deque()
        self._where: dict[tuple[int, int], int] = {}  # 0 = current, 1 = future
        self.cycles = 0

    def __len__(self) -> int:
        return len(self._where)

    def __contains__(self, s) -> bool:
        return s in self._where

    contains = __contains__

    def pending(self) -> list[tuple[int, int]]:
        return list(self._current) + list(self._future)

    def _push(self, s, where: int) -> None:
        if s in self._where:
            raise ValueError(f"splitter {s} is already pending")
        self._where[s] = where
        (self._current if where == 0 else self._future).append(s)

    def add(self, s: tuple[int, int]) -> None:
        self._push(s, 1 if self.policy is Policy.TWO_SETS else 0)

    def seed(self, s: tuple[int, int]) -> None:
        """Initial splitters go straight to the current set."""
        self._push(s, 0)

    def replace(self, old, kept, fresh) -> None:
        """Replace pending ``old`` by ``kept`` and ``fresh``.

        Class ids survive a split on the untouched part, so ``kept`` must be
        ``old`` itself and only ``fresh`` is actually inserted.
        """
        if old not in self._where:
            raise KeyError(f"splitter {old} is not pending")
        if kept != old:
            raise ValueError("the kept splitter must reuse the old class id")
        self._push(fresh, self._where[old])

    def take(self) -> tuple[int, int]:
        if not self._where:
            raise TakeFromEmpty("no pending splitter")
        if self.policy is Policy.LIFO:
            s = self._current.pop()
        else:
            if not self._current:
                self._current, self._future = self._future, self._current
                for s in self._current:
                    self._where[s] = 0
                self.cycles += 1
            s = self._current.popleft()
        del self._where[s]
        return s
