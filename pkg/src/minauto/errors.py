"""Exception hierarchy shared by every module of the package."""


class AutomatonError(Exception):
    """Base class for all errors raised by minauto."""


class InvalidAutomaton(AutomatonError, ValueError):
    """An automaton value violates its structural invariants."""


class UnknownSymbol(AutomatonError, ValueError):
    """A word uses a symbol that is not in the automaton's alphabet."""


class EmptyLanguage(AutomatonError):
    """The operation needs a nonempty language."""


class NotComplete(AutomatonError):
    """The algorithm requires a complete deterministic automaton."""


class NotAcyclic(AutomatonError):
    """The algorithm requires an acyclic automaton."""


class NotSimple(AutomatonError):
    """Some nontrivial strongly connected component is not a simple cycle."""


class NotDeterministic(AutomatonError):
    """The automaton has several initial states or several targets for a (state, letter) pair."""


class NotACycle(AutomatonError):
    """The given state list is not a simple cycle of the automaton."""


class NotSorted(AutomatonError, ValueError):
    """Words were not given in strictly increasing lexicographic order."""


class WordNotAccepted(AutomatonError):
    pass


class WordAlreadyAccepted(AutomatonError):
    pass


class NotMinimal(AutomatonError):
    pass


class GroundSetMismatch(AutomatonError, ValueError):
    pass


class AlphabetMismatch(AutomatonError, ValueError):
    pass


class TakeFromEmpty(AutomatonError, IndexError):
    """take() was called on a waiting set with no pending splitter."""


class LimitExceeded(AutomatonError):
    """An exhaustive search hit its node limit.

    ``partial`` carries whatever was computed before the limit was reached.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ParseError(AutomatonError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
