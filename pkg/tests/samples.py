"""Hand-built automata shared by several test modules.

Automata drawn with states numbered from 1 are shifted down by one;
``shift`` converts such labels.
"""

from minauto import Dfa, Nfa


def edges(arcs: str):
    """'1a2 1b3' -> [(1, 'a', 2), (1, 'b', 3)]."""
    out = []
    for e in arcs.split():
        i = next(i for i, c in enumerate(e) if c.isalpha())
        out.append((int(e[:i]), e[i], int(e[i + 1 :])))
    return out


def shift(*labels):
    return tuple(x - 1 for x in labels)


def from_one_based(n, alphabet, initial, finals, arcs) -> Dfa:
    return Dfa.build(n, alphabet, initial - 1, [f - 1 for f in finals], [(p - 1, a, q - 1) for p, a, q in edges(arcs)])


TEN_A = [2, 1, 3, 3, 5, 7, 8, 1, 7, 6]
TEN_B = [9, 1, 5, 7, 8, 7, 8, 1, 7, 4]


def ten_state_depth_two() -> Dfa:
    """Complete, minimal, Moore depth 2; F = {7, 8, 9}."""
    return Dfa(10, ("a", "b"), 0, frozenset({7, 8, 9}), tuple(zip(TEN_A, TEN_B)))


def two_state_a_star() -> Dfa:
    """Two final states swapping on a: a* with a redundant state."""
    return Dfa.build(2, "a", 0, [0, 1], [(0, "a", 1), (1, "a", 0)])


def two_cycles_simple() -> Dfa:
    """Simple automaton with cycles (2,4) and (3,5,9,6) in 1-based labels; 12 states."""
    return from_one_based(
        12,
        "ab",
        1,
        [2, 5, 6, 8, 11, 12],
        "1a2 1b3 2a4 2b7 3a11 3b5 4a12 4b2 5a9 5b7 6a3 6b10 7b8 9a8 9b6 10b8",
    )


def two_cycles_after_acyclic_merges() -> Dfa:
    """The previous automaton with 11, 12 merged into 8 and 10 into 7 (1-based labels, 9 states)."""
    keep = [1, 2, 3, 4, 5, 6, 7, 8, 9]
    arcs = "1a2 1b3 2a4 2b7 3a8 3b5 4a8 4b2 5a9 5b7 6a3 6b7 7b8 9a8 9b6"
    return from_one_based(len(keep), "ab", 1, [2, 5, 6, 8], arcs)


def wrapping_example() -> Dfa:
    """Simple automaton needing two wraps; 8 states, 1-based labels."""
    return from_one_based(8, "abc", 1, [6, 8], "1a4 1b2 2a3 2c5 3a3 3c7 4a4 4c5 5a6 6b7 7a8 8b7")


def ab_plus_abc_acb() -> Dfa:
    """(ab)^+ plus {abc, acb}, minimal with 7 states."""
    return Dfa.build(7, "abc", 0, [2, 5, 6], edges("0a1 1b2 1c3 2a4 2c5 3b5 4b6 6a4"))


def ab_plus_abc_acb_minus_abab() -> Dfa:
    """Minimal automaton after removing abab from the previous language; 9 states."""
    return Dfa.build(9, "abc", 0, [2, 5, 8], edges("0a1 1b2 1c3 2a4 2c5 3b5 4b6 6a7 7b8 8a7"))


def cloned_path_product() -> Dfa:
    """Old states 0..6 kept intact, clones 7..11 of the path of abab; initial 7."""
    lang = "0a1 1b2 1c3 2a4 2c5 3b5 4b6 6a4"
    clones = "7a8 8b9 8c3 9a10 9c5 10b11 11a4"
    return Dfa.build(12, "abc", 7, [2, 5, 6, 9], edges(lang + " " + clones))


# Intermediate automata of the incremental construction of aa, aba, ba, bba, bc.
# Builder ids are kept; they are renumbered densely in increasing order.
def _dense(ids, finals, arcs, alphabet="ab") -> Dfa:
    index = {q: i for i, q in enumerate(ids)}
    return Dfa.build(len(ids), alphabet, 0, [index[f] for f in finals], [(index[p], a, index[q]) for p, a, q in edges(arcs)])


def trie_aa_aba() -> Dfa:
    return _dense([0, 1, 2, 3, 4], [2, 4], "0a1 1a2 1b3 3a4")


def dictionary_after_ba() -> Dfa:
    return _dense([0, 1, 2, 3, 5, 6], [2, 6], "0a1 1a2 1b3 3a2 0b5 5a6")


def dictionary_after_bba() -> Dfa:
    return _dense([0, 1, 2, 3, 5, 7, 8], [2, 8], "0a1 1a2 1b3 3a2 0b5 5a2 5b7 7a8")


def dictionary_after_bc() -> Dfa:
    """Before the last path is minimized: 6 states, the leaf 9 not yet merged."""
    return _dense([0, 1, 2, 3, 5, 9], [2, 9], "0a1 1a2 1b3 3a2 0b5 5a2 5b3 5c9", "abc")


FIVE_WORDS = ["aa", "aba", "ba", "bba", "bc"]


def a_b_star_c_star_loop_on_3() -> Nfa:
    """a(b*+c*)ab+ with the final loop before the last b."""
    shared = "0a1 0a2 1b1 2c2 1a3 2a3 3b4"
    return Nfa.build(5, "abc", [0], [4], edges(shared + " 3b3"))


def a_b_star_c_star_loop_on_4() -> Nfa:
    """Same language as the previous one, loop on the final state."""
    shared = "0a1 0a2 1b1 2c2 1a3 2a3 3b4"
    return Nfa.build(5, "abc", [0], [4], edges(shared + " 4b4"))
