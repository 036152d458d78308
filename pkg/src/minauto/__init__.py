"""Minimization of finite automata: refinement, double reversal and fusion."""

__version__ = "0.1.0"

from .acyclic import (
    DaciukBuilder,
    PrefixSuffixSplit,
    add_word,
    build_trie,
    daciuk_build,
    heights,
    prefix_suffix_decomposition,
    remove_word,
    revuz_minimize,
)
from .autfile import format_aut, parse_aut, read_aut, to_dot, write_aut
from .brzozowski import brzozowski_minimize, codeterminize
from .core import (
    UNDEFINED,
    Dfa,
    Nfa,
    Signature,
    accepts,
    accessible,
    complete_with_sink,
    determinize,
    reverse,
    state_signature,
    trim,
)
from .errors import *  # noqa: F401,F403
from .generators import (
    circular_occurrences,
    debruijn_word,
    fibonacci_word,
    gen_cyclic,
    gen_dyck,
    gen_nth_last_a,
    gen_unary,
    is_slow_hopcroft,
    is_slow_moore,
    random_dfa,
    random_dfas,
    sturmian_word,
)
from .hopcroft import (
    HopcroftTrace,
    check_splitter_invariant,
    enumerate_executions,
    format_trace,
    hopcroft_minimize,
)
from .moore import MooreTrace, depth, moore_minimize, moore_sequence
from .oracle import equivalent, find_witness, is_minimal, isomorphic, naive_minimize, residual_automaton
from .partition import Policy, RefinablePartition, SplitterQueue, meet, preimage, refines, splitter_apply
from .simple import CycleProfile, az_minimize, is_simple, minimal_rotation, scc, weak_signature_word
