import pytest

from coxword.system import CoxeterError, registry_system
from coxword.wordio import (
    format_involution,
    format_window,
    format_word,
    parse_cycles,
    parse_involution,
    parse_window,
    parse_word,
)


def test_word_roundtrip_plain():
    assert format_word((1, 0, 1, 2)) == "2123"
    assert parse_word("2123") == (1, 0, 1, 2)
    assert parse_word("s1") == (0,)
    assert parse_word("2 1 2 3") == (1, 0, 1, 2)
    assert parse_word("2,1,2,3") == (1, 0, 1, 2)


def test_word_roundtrip_primed():
    w = ((0, False), (2, True), (1, False), (0, False))
    assert format_word(w) == "13'21"
    assert parse_word("13'21") == w
    assert parse_word("1'") == ((0, True),)


def test_wide_ranks_use_commas():
    word = (9, 10, 9)
    assert format_word(word, rank=11) == "10,11,10"
    assert parse_word("10,11,10", rank=11) == word


def test_word_errors():
    with pytest.raises(CoxeterError):
        parse_word("abc")
    with pytest.raises(CoxeterError):
        parse_word("0")
    with pytest.raises(CoxeterError):
        parse_word("5", rank=3)


def test_window_roundtrip():
    assert parse_window("[2,1,4,3]") == (2, 1, 4, 3)
    assert parse_window("[-2, 2, 6]") == (-2, 2, 6)
    assert format_window((2, 1, 4, 3)) == "[2,1,4,3]"
    with pytest.raises(CoxeterError):
        parse_window("2,1,4,3")


def test_cycles():
    assert parse_cycles("(1,4)(2,3)", 4) == (4, 3, 2, 1)
    assert parse_cycles("(1,2)", 4) == (2, 1, 3, 4)
    with pytest.raises(CoxeterError):
        parse_cycles("(1,5)", 4)
    with pytest.raises(CoxeterError):
        parse_cycles("1 4", 4)


def test_parse_involution_forms():
    twisted = registry_system("2A3")
    by_cycles = parse_involution(twisted, "(1,4)(2,3)")
    by_window = parse_involution(twisted, "[4,3,2,1]")
    by_word = parse_involution(twisted, "2123")
    assert by_cycles == by_window == by_word
    assert format_involution(by_word) == "[4,3,2,1]"
    generic = registry_system("H3")
    z = parse_involution(generic, "12")
    assert format_involution(z) == "12"
    with pytest.raises(CoxeterError):
        parse_involution(generic, "(1,2)")
