"""Hopcroft's minimization algorithm, instrumented.

:func:`hopcroft_minimize` runs one execution under a splitter-choice
policy and records a :class:`HopcroftTrace`. :func:`enumerate_executions`
explores every execution (every choice of pending splitter, and every
tie-break between equal-size halves) over configurations represented with
bitmask sets, which is what the non-simulation and slowness experiments
need. :func:`check_splitter_invariant` replays a trace and verifies, at
every configuration, that each (P, a)|R is coarser than the meet of the
pending (W, a)|R.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .core import Dfa, quotient
from .errors import LimitExceeded, NotComplete
from .partition import Policy, RefinablePartition, SplitterQueue, meet_all, refines


@dataclass(frozen=True)
class SplitEvent:
    """Class ``old`` was split into ``kept`` (keeps its id) and ``created``."""

    old: tuple[int, ...]
    kept: tuple[int, ...]
    created: tuple[int, ...]


@dataclass(frozen=True)
class HopcroftStep:
    members: tuple[int, ...]  # the splitter's class when it was taken
    letter: int
    splits: tuple[SplitEvent, ...]
    pending: tuple[tuple[tuple[int, ...], int], ...] | None = None  # after the step


@dataclass
class HopcroftTrace:
    initial_pending: tuple[tuple[tuple[int, ...], int], ...]
    steps: list[HopcroftStep] = field(default_factory=list)
    work: int = 0
    removals: dict[tuple[int, int], int] = field(default_factory=dict)
    cycles: int = 0
    partition: tuple[tuple[int, ...], ...] = ()

    def max_removals(self) -> int:
        return max(self.removals.values(), default=0)

    def max_pending(self) -> int:
        """Largest waiting-set size seen just before a take."""
        sizes = [len(self.initial_pending)]
        sizes += [len(s.pending) for s in self.steps[:-1] if s.pending is not None]
        return max(sizes) if self.steps else 0


def hopcroft_minimize(
    d: Dfa, policy: Policy | str = Policy.FIFO, *, record_pending: bool = False
) -> tuple[Dfa, HopcroftTrace]:
    """Minimize a complete automaton; return the quotient and the trace.

    The initial waiting set holds (min(F, F^c), a) for every letter, taking
    F when both have the same size. After a split of P into P' (untouched
    part, keeps the id) and P'' (hit part, fresh id): a pending (P, b)
    stands for (P', b) and (P'', b) is added next to it; otherwise the
    smaller half is added, the fresh one on ties.
    """
    if not d.is_complete():
        raise NotComplete("Hopcroft's algorithm needs a complete automaton; use complete_with_sink")
    n, k = d.num_states, len(d.alphabet)
    finals = [q for q in range(n) if q in d.finals]
    others = [q for q in range(n) if q not in d.finals]
    if not finals or not others:
        trace = HopcroftTrace(initial_pending=(), partition=(tuple(range(n)),) if n else ())
        return quotient(d, [0] * n)[0] if n else d, trace

    inverse = [[[] for _ in range(n)] for _ in range(k)]
    for p, row in enumerate(d.delta):
        for a, q in enumerate(row):
            inverse[a][q].append(p)

    rp = RefinablePartition(n, [others, finals])
    queue = SplitterQueue(policy)
    first = 1 if len(finals) <= len(others) else 0
    for a in range(k):
        queue.seed((first, a))

    def snapshot():
        return tuple((tuple(sorted(rp.members(c))), a) for c, a in queue.pending())

    trace = HopcroftTrace(initial_pending=snapshot())
    removals = trace.removals
    while len(queue):
        w, a = queue.take()
        members = rp.members(w)
        hits = []
        inv = inverse[a]
        for q in members:
            removals[q, a] = removals.get((q, a), 0) + 1
            hits.extend(inv[q])
        trace.work += len(hits)

        before = {}
        for q in hits:
            c = rp.class_of[q]
            if c not in before:
                before[c] = tuple(sorted(rp.members(c)))
        events = []
        for old, new in rp.mark_and_split(hits):
            for b in range(k):
                if (old, b) in queue:
                    queue.replace((old, b), (old, b), (new, b))
                else:
                    queue.add((new if rp.size(new) <= rp.size(old) else old, b))
            events.append(SplitEvent(before[old], tuple(sorted(rp.members(old))), tuple(sorted(rp.members(new)))))
        trace.steps.append(
            HopcroftStep(tuple(sorted(members)), a, tuple(events), snapshot() if record_pending else None)
        )

    trace.cycles = queue.cycles
    trace.partition = tuple(sorted(tuple(sorted(c)) for c in rp.classes()))
    labels = rp.class_of
    return quotient(d, labels)[0], trace


def format_trace(trace: HopcroftTrace, alphabet) -> str:
    """Line-per-step export: ``step i take x {..} split {..}→{..}/{..} ...``."""

    def fmt(states):
        return "{" + ",".join(map(str, states)) + "}"

    lines = []
    for i, step in enumerate(trace.steps, start=1):
        parts = [f"step {i} take {alphabet[step.letter]} {fmt(step.members)}"]
        if step.splits:
            parts.append("split")
            parts.extend(f"{fmt(e.old)}→{fmt(e.kept)}/{fmt(e.created)}" for e in step.splits)
        lines.append(" ".join(parts))
    return "\n".join(lines) + ("\n" if lines else "")


# ---------------------------------------------------------------------------
# Replay and the splitter invariant


def _initial_configuration(d: Dfa):
    n = d.num_states
    F = frozenset(q for q in range(n) if q in d.finals)
    Fc = frozenset(range(n)) - F
    partition = [b for b in (Fc, F) if b]
    smaller = F if len(F) <= len(Fc) else Fc
    pending = {(smaller, a) for a in range(len(d.alphabet))} if F and Fc else set()
    return partition, pending


def _invariant_holds(d: Dfa, partition, pending) -> bool:
    k = len(d.alphabet)
    delta = d.delta
    for a in range(k):
        splitters = [W for W, b in pending if b == a]
        for R in partition:
            bound = meet_all((_split(W, a, R, delta) for W in splitters), R)
            for P in partition:
                if not refines(bound, _split(P, a, R, delta)):
                    return False
    return True


def _split(P, a, R, delta):
    inside = frozenset(q for q in R if delta[q][a] in P)
    return tuple(b for b in (inside, frozenset(R) - inside) if b)


def check_splitter_invariant(d: Dfa, trace: HopcroftTrace) -> bool:
    """Replay ``trace`` on ``d`` and check the splitter inequality everywhere.

    The replay also fails (returns False) when a recorded step is not what
    the recorded splitter actually does to the current partition.
    """
    partition, pending = _initial_configuration(d)
    if {(frozenset(m), a) for m, a in trace.initial_pending} != pending:
        return False
    if not _invariant_holds(d, partition, pending):
        return False
    delta = d.delta
    k = len(d.alphabet)
    for step in trace.steps:
        W = frozenset(step.members)
        s = (W, step.letter)
        if s not in pending:
            return False
        pending.discard(s)
        actual = set()
        for C in partition:
            parts = _split(W, step.letter, C, delta)
            if len(parts) == 2:
                actual.add((C, frozenset(parts)))
        recorded = {
            (frozenset(e.old), frozenset([frozenset(e.kept), frozenset(e.created)])) for e in step.splits
        }
        if actual != recorded:
            return False
        for e in step.splits:
            old, kept, created = frozenset(e.old), frozenset(e.kept), frozenset(e.created)
            partition.remove(old)
            partition.extend([kept, created])
            for b in range(k):
                if (old, b) in pending:
                    pending.discard((old, b))
                    pending.update({(kept, b), (created, b)})
                else:
                    pending.add((created if len(created) <= len(kept) else kept, b))
        if not _invariant_holds(d, partition, pending):
            return False
    return not pending and sorted(sorted(c) for c in partition) == [list(c) for c in trace.partition]


# ---------------------------------------------------------------------------
# Exhaustive exploration of executions


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mask(states) -> int:
    m = 0
    for q in states:
        m |= 1 << q
    return m


def _partition_of_masks(masks) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(_bits(m)) for m in masks))


@dataclass
class ExecutionSpace:
    """All configurations reachable by some execution.

    ``partitions`` are the current partitions of all configurations and
    ``final_partitions`` those of configurations with an empty waiting set,
    both as sorted tuples of sorted state tuples. ``complete`` is False when
    the node limit stopped the search. When ``graph`` was requested, it
    maps each configuration to its successors, and :meth:`executions` walks
    the individual executions.
    """

    partitions: set = field(default_factory=set)
    final_partitions: set = field(default_factory=set)
    configurations: int = 0
    complete: bool = True
    root: object = None
    graph: dict | None = None

    def executions(self, limit: int | None = None) -> Iterator[list]:
        """Yield executions as lists of partitions (one per configuration)."""
        if self.graph is None:
            raise ValueError("enumerate_executions was called without keep_graph=True")
        count = 0
        stack = [(self.root, [self.root])]
        while stack:
            node, path = stack.pop()
            succ = self.graph.get(node, ())
            if not succ:
                yield [_partition_of_masks(c[0]) for c in path]
                count += 1
                if limit is not None and count >= limit:
                    return
                continue
            for nxt in succ:
                stack.append((nxt, path + [nxt]))


def _split_effect(partition, code, k, inverse_masks, cache):
    """(new partition, [(class, outside, inside)]) for one splitter; memoized."""
    key = (partition, code)
    hit = cache.get(key)
    if hit is not None:
        return hit
    W, a = divmod(code, k)
    hits = 0
    inv = inverse_masks[a]
    for q in _bits(W):
        hits |= inv[q]
    splits = []
    for C in partition:
        inter = C & hits
        if inter and inter != C:
            splits.append((C, C & ~hits, inter))
    if splits:
        parts = set(partition)
        for C, outside, inter in splits:
            parts.discard(C)
            parts.update((outside, inter))
        parts = frozenset(parts)
    else:
        parts = partition
    cache[key] = result = (parts, splits)
    return result


def _successors(config, inverse_masks, k, branch_ties, cache):
    """Configurations reachable by processing one pending splitter.

    A splitter (W, a) is encoded as the integer ``W * k + a``.
    """
    partition, pending = config
    out = []
    for s in pending:
        parts, splits = _split_effect(partition, s, k, inverse_masks, cache)
        if not splits:
            out.append((parts, pending - {s}))
            continue
        rest = set(pending)
        rest.discard(s)
        choices = []  # per (split, b) without a pending entry, on ties
        for C, outside, inter in splits:
            ni, no = inter.bit_count(), outside.bit_count()
            C, outside, inter = C * k, outside * k, inter * k
            for b in range(k):
                if C + b in rest:
                    rest.discard(C + b)
                    rest.add(outside + b)
                    rest.add(inter + b)
                elif ni < no:
                    rest.add(inter + b)
                elif no < ni:
                    rest.add(outside + b)
                elif branch_ties:
                    choices.append((inter + b, outside + b))
                else:
                    rest.add(inter + b)
        if not choices:
            out.append((parts, frozenset(rest)))
            continue
        combos = [frozenset(rest)]
        for option in choices:
            combos = [c | {pick} for c in combos for pick in option]
        out.extend((parts, c) for c in combos)
    return out


def _setup(d: Dfa):
    if not d.is_complete():
        raise NotComplete("Hopcroft's algorithm needs a complete automaton")
    n, k = d.num_states, len(d.alphabet)
    inverse = [[0] * n for _ in range(k)]
    for p, row in enumerate(d.delta):
        for a, q in enumerate(row):
            inverse[a][q] |= 1 << p
    partition, pending = _initial_configuration(d)
    root = (
        frozenset(_mask(c) for c in partition),
        frozenset(_mask(W) * k + a for W, a in pending),
    )
    return root, inverse, k


def enumerate_executions(
    d: Dfa, node_limit: int = 10**6, *, branch_ties: bool = True, keep_graph: bool = False
) -> ExecutionSpace:
    """Explore every execution of Hopcroft's algorithm on a complete ``d``.

    Configurations are deduplicated by (partition, waiting set). With
    ``branch_ties`` the choice between equal-size halves is also explored.
    Raises LimitExceeded (with the partial space attached) if more than
    ``node_limit`` configurations are reached.
    """
    root, inverse, k = _setup(d)
    space = ExecutionSpace(root=root, graph={} if keep_graph else None)
    seen = {root}
    stack = [root]
    cache: dict = {}
    while stack:
        config = stack.pop()
        space.configurations += 1
        partition, pending = config
        space.partitions.add(partition)
        if not pending:
            space.final_partitions.add(partition)
        succ = _successors(config, inverse, k, branch_ties, cache)
        if keep_graph:
            space.graph[config] = list(dict.fromkeys(succ))
        for nxt in succ:
            if nxt not in seen:
                if len(seen) >= node_limit:
                    space.complete = False
                    _finish(space)
                    raise LimitExceeded(f"more than {node_limit} configurations", space)
                seen.add(nxt)
                stack.append(nxt)
    _finish(space)
    return space


def _finish(space: ExecutionSpace) -> None:
    space.partitions = {_partition_of_masks(p) for p in space.partitions}
    space.final_partitions = {_partition_of_masks(p) for p in space.final_partitions}


def slow_for_hopcroft_everywhere(d: Dfa, node_limit: int = 10**6, *, branch_ties: bool = True) -> bool:
    """Check, in every reachable configuration, the slowness condition.

    At most one class is split by the pending splitters, and every pending
    splitter that splits it produces the same two blocks.
    """
    root, inverse, k = _setup(d)
    seen = {root}
    stack = [root]
    cache: dict = {}
    while stack:
        config = stack.pop()
        partition, pending = config
        split_class = None
        shape = None
        for code in pending:
            for C, outside, inter in _split_effect(partition, code, k, inverse, cache)[1]:
                blocks = frozenset((inter, outside))
                if split_class is None:
                    split_class, shape = C, blocks
                elif C != split_class or blocks != shape:
                    return False
        for nxt in _successors(config, inverse, k, branch_ties, cache):
            if nxt not in seen:
                if len(seen) >= node_limit:
                    raise LimitExceeded(f"more than {node_limit} configurations")
                seen.add(nxt)
                stack.append(nxt)
    return True
