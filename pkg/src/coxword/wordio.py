"""
Text forms for words, windows, and involutions.

Letters are 1-based in text ("2123" is the word s_2 s_1 s_2 s_3) and 0-based
internally.  A trailing apostrophe primes the preceding letter ("13'21").
Systems of rank ten or more use comma-separated letters instead of digit
strings.  Windows are written "[2,1,3,4]" and involutions may also be given
in cycle notation "(1,4)(2,3)" on the permutation backends.
"""

import re

from .system import CoxeterError, InvalidWindow
from .elements import from_window
from .involutions import TwistedInvolution, fold_word


def format_word(word, rank=None):
    """Text for a plain or primed word (1-based letters)."""
    parts = []
    wide = rank is not None and rank > 9
    for letter in word:
        if isinstance(letter, tuple):
            s, primed = letter
        else:
            s, primed = letter, False
        if rank is None and s > 8:
            wide = True
        parts.append(f"{s + 1}'" if primed else f"{s + 1}")
    return ",".join(parts) if wide else "".join(parts)


def parse_word(text, rank=None):
    """Parse word text into a primed tuple; plain if no primes appear.

    Accepts digit strings ("2123"), primes ("13'21"), comma-separated
    letters for large ranks, and an optional "s" before each letter.
    """
    text = text.strip()
    out = []
    any_primes = False
    if "," in text or " " in text or (rank is not None and rank > 9):
        chunks = [c for c in re.split(r"[,\s]+", text) if c]
    else:
        chunks = re.findall(r"s?\d'?", text)
        if "".join(chunks) != text:
            raise CoxeterError(f"cannot parse word {text!r}")
    for chunk in chunks:
        m = re.fullmatch(r"s?(\d+)(')?", chunk)
        if not m:
            raise CoxeterError(f"cannot parse word letter {chunk!r}")
        s = int(m.group(1)) - 1
        primed = m.group(2) is not None
        if s < 0 or (rank is not None and s >= rank):
            raise CoxeterError(f"letter {chunk!r} out of range")
        any_primes = any_primes or primed
        out.append((s, primed))
    if any_primes:
        return tuple(out)
    return tuple(s for s, _ in out)


def format_window(window):
    return "[" + ",".join(str(v) for v in window) + "]"


def parse_window(text):
    m = re.fullmatch(r"\[([-\d,\s]*)\]", text.strip())
    if not m:
        raise InvalidWindow(f"cannot parse window {text!r}")
    return tuple(int(v) for v in m.group(1).split(","))


def parse_cycles(text, n):
    """Window for a product of disjoint cycles like "(1,4)(2,3)"."""
    window = list(range(1, n + 1))
    body = text.strip()
    if not re.fullmatch(r"(\(\s*\d+(\s*,\s*\d+)*\s*\))+", body):
        raise CoxeterError(f"cannot parse cycles {text!r}")
    for part in re.findall(r"\(([^)]*)\)", body):
        cycle = [int(v) for v in part.split(",")]
        if any(v < 1 or v > n for v in cycle):
            raise CoxeterError(f"cycle entry out of range in {text!r}")
        for i, v in enumerate(cycle):
            window[v - 1] = cycle[(i + 1) % len(cycle)]
    return tuple(window)


def parse_involution(system, text):
    """An involution given as a word, a window, or cycles.

    Word input is read as an involution word (the twisted fold of the
    letters); windows and cycles need the permutation backend.
    """
    text = text.strip()
    if text.startswith("["):
        elem = from_window(system, parse_window(text))
        return TwistedInvolution(elem)
    if text.startswith("("):
        if system.backend != "perm":
            raise CoxeterError("cycle notation needs a permutation backend")
        elem = from_window(system, parse_cycles(text, system.perm_n))
        return TwistedInvolution(elem)
    word = parse_word(text, system.rank)
    if word and isinstance(word[0], tuple):
        word = tuple(s for s, _ in word)
    return fold_word(system, word)


def format_involution(z):
    """Canonical text: the window on permutation backends, else the
    lexicographically least involution word."""
    elem = z.elem
    if elem.system.backend == "perm":
        return format_window(elem.window)
    from .involutions import involution_words
    words = involution_words(z)
    return format_word(min(words), elem.system.rank) if words else ""
