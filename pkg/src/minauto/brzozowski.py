"""Minimization by two rounds of reverse, determinize, trim."""

from __future__ import annotations

from .core import Dfa, Nfa, as_nfa, determinize, reverse, trim


def codeterminize(a: Nfa | Dfa) -> Dfa:
    """trim(determinize(reverse(a))).

    For a deterministic accessible input the result is the minimal
    automaton of the reversed language. An empty language gives the 0-state
    value.
    """
    return trim(determinize(reverse(as_nfa(a))))


def brzozowski_minimize(a: Nfa | Dfa) -> Dfa:
    """Minimal trim automaton of L(a); the input may be nondeterministic."""
    return codeterminize(codeterminize(a))
