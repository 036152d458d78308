"""Reading and writing the line-oriented ``.aut`` automaton format.

Example::

    # the language (ab)*
    states 2
    alphabet a b
    initial 0
    final 0
    trans 0 a 1
    trans 1 b 0

Directives: ``states N``, ``alphabet s1 s2 ...``, ``initial q [q ...]``,
``final q ...`` (may repeat), ``trans p s q`` (one per transition) and the
optional ``kind nfa|dfa``. A ``#`` starts a comment. With a single initial
state the file is read in deterministic mode and a :class:`Dfa` is returned;
duplicate ``(p, s)`` pairs are then rejected. Several initial states, or
``kind nfa``, give an :class:`Nfa`.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .core import Dfa, Nfa, UNDEFINED
from .errors import ParseError


def parse_aut(text: str) -> Dfa | Nfa:
    num_states = None
    alphabet = None
    initials: list[int] | None = None
    finals: list[int] = []
    trans: list[tuple[int, str, int, int]] = []
    kind = None

    def state(tok, lineno):
        try:
            q = int(tok)
        except ValueError:
            raise ParseError(f"bad state id {tok!r}", lineno) from None
        if num_states is None:
            raise ParseError("'states' must come first", lineno)
        if not 0 <= q < num_states:
            raise ParseError(f"state {q} out of range", lineno)
        return q

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].split()
        if not line:
            continue
        head, args = line[0], line[1:]
        if head == "states":
            if num_states is not None or len(args) != 1:
                raise ParseError("expected a single 'states N'", lineno)
            try:
                num_states = int(args[0])
            except ValueError:
                raise ParseError(f"bad state count {args[0]!r}", lineno) from None
            if num_states < 0:
                raise ParseError("negative state count", lineno)
        elif head == "alphabet":
            if alphabet is not None:
                raise ParseError("duplicate 'alphabet'", lineno)
            if any(len(s) != 1 for s in args) or len(set(args)) != len(args):
                raise ParseError("alphabet symbols must be distinct single characters", lineno)
            alphabet = tuple(args)
        elif head == "initial":
            if initials is not None:
                raise ParseError("duplicate 'initial'", lineno)
            initials = [state(t, lineno) for t in args]
        elif head == "final":
            finals.extend(state(t, lineno) for t in args)
        elif head == "trans":
            if len(args) != 3:
                raise ParseError("expected 'trans p s q'", lineno)
            if alphabet is None:
                raise ParseError("'alphabet' must precede transitions", lineno)
            if args[1] not in alphabet:
                raise ParseError(f"symbol {args[1]!r} not in alphabet", lineno)
            trans.append((state(args[0], lineno), args[1], state(args[2], lineno), lineno))
        elif head == "kind":
            if len(args) != 1 or args[0] not in ("nfa", "dfa"):
                raise ParseError("expected 'kind nfa' or 'kind dfa'", lineno)
            kind = args[0]
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)

    if num_states is None:
        raise ParseError("missing 'states'")
    if alphabet is None:
        raise ParseError("missing 'alphabet'")
    initials = initials or []
    if kind is None:
        kind = "nfa" if len(initials) > 1 else "dfa"

    if kind == "nfa":
        return Nfa.build(num_states, alphabet, initials, finals, [(p, s, q) for p, s, q, _ in trans])

    if len(initials) > 1:
        raise ParseError("a deterministic automaton has at most one initial state")
    if not initials and num_states:
        raise ParseError("missing initial state")
    rows = [[UNDEFINED] * len(alphabet) for _ in range(num_states)]
    for p, s, q, lineno in trans:
        a = alphabet.index(s)
        if rows[p][a] != UNDEFINED:
            raise ParseError(f"duplicate transition for state {p} on {s!r}", lineno)
        rows[p][a] = q
    initial = initials[0] if initials else None
    return Dfa(num_states, alphabet, initial, frozenset(finals), tuple(map(tuple, rows)))


def format_aut(a: Dfa | Nfa) -> str:
    """Serialize with a stable line order (transitions sorted by source then letter)."""
    lines = [f"states {a.num_states}", "alphabet " + " ".join(a.alphabet)]
    if isinstance(a, Dfa):
        initials = [] if a.initial is None else [a.initial]
        transitions = list(a.transitions())
    else:
        initials = sorted(a.initials)
        transitions = sorted(a.transitions)
        if len(initials) <= 1:
            lines.append("kind nfa")
    lines.append(" ".join(["initial", *map(str, initials)]))
    if a.finals:
        lines.append(" ".join(["final", *map(str, sorted(a.finals))]))
    lines.extend(f"trans {p} {a.alphabet[x]} {q}" for p, x, q in transitions)
    return "\n".join(lines) + "\n"


def read_aut(path) -> Dfa | Nfa:
    with open(path, encoding="utf-8") as fh:
        return parse_aut(fh.read())


def write_aut(a: Dfa | Nfa, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_aut(a))


def read_wordlist(fh: TextIO) -> list[str]:
    """One word per line; blank lines are skipped."""
    return [line for line in fh.read().splitlines() if line]


def format_wordlist(words: Iterable[str]) -> str:
    return "".join(w + "\n" for w in words)


def to_dot(a: Dfa | Nfa, name: str = "A") -> str:
    """Graphviz rendering, edges with the same endpoints share one label."""
    if isinstance(a, Dfa):
        initials = [] if a.initial is None else [a.initial]
        transitions = list(a.transitions())
    else:
        initials = sorted(a.initials)
        transitions = sorted(a.transitions)
    labels: dict[tuple[int, int], list[str]] = {}
    for p, x, q in transitions:
        labels.setdefault((p, q), []).append(a.alphabet[x])
    out = [f"digraph {name} {{", "  rankdir=LR;"]
    for q in range(a.num_states):
        shape = "doublecircle" if q in a.finals else "circle"
        out.append(f"  {q} [shape={shape}];")
    for i, q in enumerate(initials):
        out.append(f'  init{i} [shape=point, label=""];')
        out.append(f"  init{i} -> {q};")
    for (p, q), ls in sorted(labels.items()):
        out.append(f'  {p} -> {q} [label="{",".join(ls)}"];')
    out.append("}")
    return "\n".join(out) + "\n"
