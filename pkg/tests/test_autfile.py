import io

import pytest
from hypothesis import given

from minauto import Dfa, Nfa, format_aut, parse_aut, to_dot
from minauto.autfile import read_wordlist
from minauto.errors import ParseError

from samples import ten_state_depth_two
from strategies import dfas, nfas

AB_STAR = """\
# the language (ab)*
states 2
alphabet a b
initial 0
final 0
trans 0 a 1
trans 1 b 0
"""


def test_parse_example():
    d = parse_aut(AB_STAR)
    assert isinstance(d, Dfa)
    assert d.delta == ((1, -1), (-1, 0)) and d.finals == {0}


def test_multiple_initials_give_nfa():
    a = parse_aut("states 2\nalphabet a\ninitial 0 1\nfinal 1\ntrans 0 a 1\n")
    assert isinstance(a, Nfa) and a.initials == {0, 1}


def test_duplicate_pair_rejected_in_deterministic_mode():
    text = "states 2\nalphabet a\ninitial 0\ntrans 0 a 1\ntrans 0 a 0\n"
    with pytest.raises(ParseError, match="line 5"):
        parse_aut(text)
    assert isinstance(parse_aut("kind nfa\n" + text), Nfa)


@pytest.mark.parametrize(
    "text",
    [
        "alphabet a\nstates 1\n",
        "states 1\nalphabet a\ninitial 0\ntrans 0 b 0\n",
        "states 1\nalphabet a\ninitial 3\n",
        "states 1\nalphabet ab\ninitial 0\n",
        "states 1\nalphabet a\nbogus\n",
        "states 2\nalphabet a\nfinal 1\ntrans 0 a 1\n",
    ],
)
def test_malformed_inputs(text):
    with pytest.raises(ParseError):
        parse_aut(text)


def test_format_is_stable():
    d = ten_state_depth_two()
    text = format_aut(d)
    assert text.splitlines()[:4] == ["states 10", "alphabet a b", "initial 0", "final 7 8 9"]
    assert format_aut(parse_aut(text)) == text


@given(dfas(max_states=6, complete=False))
def test_round_trip_dfa(d):
    assert parse_aut(format_aut(d)) == d


@given(nfas())
def test_round_trip_nfa(a):
    b = parse_aut(format_aut(a))
    assert isinstance(b, Nfa) and b == a


def test_empty_value_round_trip():
    e = Dfa.empty("ab")
    assert parse_aut(format_aut(e)) == e


def test_wordlist_and_dot():
    assert read_wordlist(io.StringIO("aa\n\nab\n")) == ["aa", "ab"]
    dot = to_dot(parse_aut(AB_STAR))
    assert "0 [shape=doublecircle]" in dot and '0 -> 1 [label="a"]' in dot
