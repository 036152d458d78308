"""Command-line front end.

Exit codes: 0 success or "true", 1 "false" or a failed precondition,
2 usage error, 3 unreadable or malformed input, 4 search limit exceeded.
"""

from __future__ import annotations

import argparse
import io
import statistics
import sys
from typing import Sequence

from . import __version__
from .acyclic import add_word, build_trie, daciuk_build, remove_word, revuz_minimize
from .autfile import format_aut, format_wordlist, parse_aut, read_wordlist, to_dot
from .brzozowski import brzozowski_minimize
from .core import Dfa, Nfa, accessible, complete_with_sink, determinize, trim
from .errors import AutomatonError, LimitExceeded, ParseError
from .generators import (
    debruijn_word,
    fibonacci_word,
    gen_cyclic,
    gen_dyck,
    gen_unary,
    is_slow_hopcroft,
    is_slow_moore,
    random_dfas,
    sturmian_word,
)
from .hopcroft import format_trace, hopcroft_minimize
from .moore import depth, moore_minimize
from .oracle import find_witness, is_minimal, naive_minimize
from .partition import Policy
from .simple import az_minimize, is_simple

ALGORITHMS = ("moore", "hopcroft", "brzozowski", "revuz", "az", "naive")


class InputError(Exception):
    """Input file missing or malformed (exit code 3)."""


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load(path: str) -> Dfa | Nfa:
    try:
        return parse_aut(_read_text(path))
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_dfa(path: str) -> Dfa:
    a = _load(path)
    return a if isinstance(a, Dfa) else _nfa_to_dfa(a)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _emit_automaton(d: Dfa, out: str | None, dot: str | None) -> None:
    # The empty language is written as a single non-final sink.
    _write(out, format_aut(complete_with_sink(d) if d.is_empty else d))
    if dot:
        _write(dot, to_dot(d))


def _minimize(d: Dfa | Nfa, algo: str, policy: str) -> tuple[Dfa, dict]:
    info: dict = {}
    if algo == "brzozowski":
        return brzozowski_minimize(d), info
    d = accessible(d if isinstance(d, Dfa) else _nfa_to_dfa(d))
    if algo == "revuz":
        return revuz_minimize(d), info
    if algo == "az":
        return az_minimize(d), info
    c = complete_with_sink(d)
    if algo == "moore":
        m = moore_minimize(c)[0]
    elif algo == "naive":
        m = naive_minimize(c)
    else:
        m, trace = hopcroft_minimize(c, policy)
        info["work"] = trace.work
        info["max_removals"] = trace.max_removals()
    return m, info


def _nfa_to_dfa(a: Nfa) -> Dfa:
    return a.to_dfa() if a.is_deterministic() else determinize(a)


def cmd_min(args) -> int:
    a = _load(args.input)
    m, info = _minimize(a, args.algo, args.policy)
    if args.trim:
        m = trim(m)
    _emit_automaton(m, args.output, args.dot)
    report = sys.stderr if args.output in (None, "-") else sys.stdout
    print(f"states_in={a.num_states}", file=report)
    print(f"states_out={max(m.num_states, 1)}", file=report)
    for key, value in info.items():
        print(f"{key}={value}", file=report)
    return 0


def cmd_dict(args) -> int:
    if args.action == "build":
        words = read_wordlist(_open_words(args.words))
        if args.method == "daciuk":
            d = daciuk_build(words)
        else:
            d = revuz_minimize(build_trie(words))
        _emit_automaton(d, args.output, args.dot)
        if args.output not in (None, "-"):
            print(f"states={max(d.num_states, 1)}")
        return 0

    d = _load_dfa(args.automaton)
    d = trim(d)  # the file form of the empty language is a lone sink
    if args.action == "add":
        d = add_word(d, args.word)
    else:
        d = remove_word(d, args.word)
    _emit_automaton(d, args.automaton, None)
    print(f"states={max(d.num_states, 1)}")
    return 0


def _open_words(path: str):
    return io.StringIO(_read_text(path))


def cmd_gen(args) -> int:
    family, params = args.family, args.params
    try:
        if family in ("unary", "dyck", "cyclic"):
            if len(params) != 1:
                raise ValueError(f"{family} takes one parameter")
            if family == "cyclic":
                d = gen_cyclic(params[0])
            else:
                d = (gen_unary if family == "unary" else gen_dyck)(int(params[0]))
            _emit_automaton(d, args.output, args.dot)
            return 0
        if family == "debruijn" and len(params) == 1:
            word = debruijn_word(int(params[0]))
        elif family == "fib" and len(params) == 1:
            word = fibonacci_word(int(params[0]))
        elif family == "sturmian" and len(params) == 2:
            word = sturmian_word([int(x) for x in params[0].split(",")], int(params[1]))
        else:
            raise ValueError(f"bad parameters for {family}")
    except ValueError as exc:
        print(f"minauto gen: {exc}", file=sys.stderr)
        return 2
    _write(args.output, format_wordlist([word]))
    return 0


def cmd_check(args) -> int:
    if args.what == "equiv":
        a, b = _load_dfa(args.files[0]), _load_dfa(args.files[1])
        witness = find_witness(a, b)
        if witness is None:
            print("equivalent")
            return 0
        print(f"not equivalent; witness: {witness!r}", file=sys.stderr)
        return 1
    d = _load_dfa(args.files[0])
    if args.what == "minimal":
        ok = is_minimal(d)
    elif args.what == "simple":
        ok = is_simple(trim(d))
    else:
        c = complete_with_sink(accessible(d))
        ok = is_slow_moore(c)
        print(f"depth={depth(c)} states={c.num_states} slow_moore={str(ok).lower()}")
        if args.exhaustive:
            try:
                hop = is_slow_hopcroft(c, args.limit)
            except LimitExceeded as exc:
                print(f"minauto check: {exc}", file=sys.stderr)
                return 4
            print(f"slow_hopcroft={str(hop).lower()}")
            ok = ok and hop
    print("true" if ok else "false")
    return 0 if ok else 1


def cmd_bench(args) -> int:
    samples = random_dfas(args.n, args.k, args.seed, args.samples)
    print("n\tk\tsample\tdepth")
    depths = []
    for i, d in enumerate(samples):
        x = depth(d)
        depths.append(x)
        print(f"{args.n}\t{args.k}\t{i}\t{x}")
    print(f"mean_depth={statistics.fmean(depths):.4f}")
    return 0


def cmd_trace(args) -> int:
    d = complete_with_sink(accessible(_load_dfa(args.input)))
    _, trace = hopcroft_minimize(d, args.policy)
    _write(args.output, format_trace(trace, d.alphabet))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="minauto", description="Finite automata minimization toolkit.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    policies = [p.value for p in Policy]

    p = sub.add_parser("min", help="minimize an automaton")
    p.add_argument("input")
    p.add_argument("--algo", choices=ALGORITHMS, default="hopcroft")
    p.add_argument("--policy", choices=policies, default="fifo")
    p.add_argument("-o", "--output")
    p.add_argument(
        "--trim",
        action="store_true",
        help="drop the sink state from the complete result of moore, hopcroft and naive",
    )
    p.add_argument("--dot", metavar="FILE", help="also write a Graphviz rendering")
    p.set_defaults(func=cmd_min)

    p = sub.add_parser("dict", help="build or edit a dictionary automaton")
    dsub = p.add_subparsers(dest="action", required=True)
    b = dsub.add_parser("build")
    b.add_argument("words")
    b.add_argument("--method", choices=("daciuk", "trie-revuz"), default="daciuk")
    b.add_argument("-o", "--output")
    b.add_argument("--dot", metavar="FILE")
    for name in ("add", "remove"):
        e = dsub.add_parser(name)
        e.add_argument("automaton")
        e.add_argument("word")
    p.set_defaults(func=cmd_dict)

    p = sub.add_parser("gen", help="generate an automaton family member or a word")
    p.add_argument("family", choices=("unary", "dyck", "cyclic", "debruijn", "fib", "sturmian"))
    p.add_argument("params", nargs="+")
    p.add_argument("-o", "--output")
    p.add_argument("--dot", metavar="FILE")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="check a property")
    p.add_argument("what", choices=("equiv", "minimal", "slow", "simple"))
    p.add_argument("files", nargs="+")
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--limit", type=int, default=10**6)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", help="benchmarks")
    bsub = p.add_subparsers(dest="bench", required=True)
    b = bsub.add_parser("depth")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", type=int, default=2)
    b.add_argument("--samples", type=int, default=100)
    b.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("trace", help="export a Hopcroft trace")
    tsub = p.add_subparsers(dest="algorithm", required=True)
    t = tsub.add_parser("hopcroft")
    t.add_argument("input")
    t.add_argument("--policy", choices=policies, default="fifo")
    t.add_argument("-o", "--output")
    p.set_defaults(func=cmd_trace)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "check":
        expected = 2 if args.what == "equiv" else 1
        if len(args.files) != expected:
            parser.error(f"check {args.what} takes {expected} file(s)")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"minauto: {exc}", file=sys.stderr)
        return 3
    except LimitExceeded as exc:
        print(f"minauto: {exc}", file=sys.stderr)
        return 4
    except AutomatonError as exc:
        print(f"minauto: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
