"""
Specializations for the (affine) symmetric group with the trivial twist.

Letters here are generator indices 0..n-1 of S~_n (or 0..n-2 of the finite
S_n inside it); two letters a, b bond iff a - b is congruent to +-1 mod n,
and commute iff a - b avoids {-1, 0, 1} mod n.  The word relations of the
general theory then collapse to a short list of local moves:

  * initial moves    (a, ---) ~ (a', ---) and (a, b, ---) ~ (b, a, ---);
  * commuting swaps  anywhere, keeping primes with their letters;
  * braid moves      (a, b, a) ~ (b, a, b) and (a', b, a) ~ (b, a, b')
                     anywhere, when a and b bond.

For reduced involution Hecke words there is a second family of moves that
grows an initial (a, b) to (a, b, a) when the rest of the word is a reduced
word for a permutation keeping both a before a+1 and b before b+1; on the
inverse windows of Hecke atoms these moves act as the pattern exchanges
[..., c, b, a, ...] ~ [..., c, a, b, ...] ~ [..., b, c, a, ...] on three
consecutive entries (a < b < c).  The minimal atom alpha_min(z) is read off
directly from the cycles of z.
"""

from .system import NotInvolution, InvalidWindow
from .elements import from_word, from_window
from .involutions import TwistedInvolution


def _params(system):
    if system.backend != "perm" or any(s != t for s, t in
                                       enumerate(system.star)):
        raise NotInvolution(
            "type A words need a permutation-backed system with trivial star")
    return system.perm_n, system.affine


def _bonded(a, b, n):
    return (a - b) % n in (1, n - 1)


def _commuting(a, b, n):
    return (a - b) % n not in (0, 1, n - 1)


# ---------------------------------------------------------------------------
# the local moves
# ---------------------------------------------------------------------------

def sim_a_neighbors(system, word):
    """One application of each move of the primed-word relation.

    ``word`` is a primed word (tuples of (letter, primed)).
    """
    n, _ = _params(system)
    if word:
        (a, ap) = word[0]
        yield ((a, not ap),) + word[1:]
    if len(word) >= 2 and not word[0][1] and not word[1][1]:
        yield (word[1], word[0]) + word[2:]
    for i in range(len(word) - 1):
        (a, ap), (b, bp) = word[i], word[i + 1]
        if _commuting(a, b, n):
            yield word[:i] + (word[i + 1], word[i]) + word[i + 2:]
    for i in range(len(word) - 2):
        (a, ap), (b, bp), (c, cp) = word[i:i + 3]
        if a != c or not _bonded(a, b, n):
            continue
        if not ap and not bp and not cp:
            yield word[:i] + ((b, False), (a, False), (b, False)) + word[i + 3:]
        elif ap and not bp and not cp:
            yield word[:i] + ((b, False), (a, False), (b, True)) + word[i + 3:]
        elif not ap and not bp and cp:
            yield word[:i] + ((b, True), (a, False), (b, False)) + word[i + 3:]


def sim_a_unprimed_neighbors(system, word):
    """The restriction of the primed-word moves to plain words."""
    n, _ = _params(system)
    if len(word) >= 2:
        yield (word[1], word[0]) + word[2:]
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if _commuting(a, b, n):
            yield word[:i] + (b, a) + word[i + 2:]
    for i in range(len(word) - 2):
        a, b, c = word[i:i + 3]
        if a == c and _bonded(a, b, n):
            yield word[:i] + (b, a, b) + word[i + 3:]


def hecke_sim_a_neighbors(system, word, max_len=None):
    """Plain moves plus (---, a, a, ---) ~ (---, a, ---)."""
    yield from sim_a_unprimed_neighbors(system, word)
    for i in range(len(word) - 1):
        if word[i] == word[i + 1]:
            yield word[:i] + word[i + 1:]
    if max_len is None or len(word) < max_len:
        for i in range(len(word)):
            yield word[:i] + (word[i],) + word[i:]


def _keeps_order(w, a):
    """True iff w^{-1}(a+1) < w^{-1}(a+2) for the 0-based letter a, i.e.
    s_a is not a left descent."""
    return not w.has_left_descent(a)


def approx_a_neighbors(system, word):
    """Moves spanning the reduced involution Hecke words.

    Commuting swaps and braid moves anywhere, plus the initial exchanges
    (a, b, ---) ~ (a, b, a, ---) ~ (b, a, ---) when a and b bond and the
    tail is a reduced word for a permutation without a or b as a left
    descent.
    """
    n, _ = _params(system)
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if _commuting(a, b, n):
            yield word[:i] + (b, a) + word[i + 2:]
    for i in range(len(word) - 2):
        a, b, c = word[i:i + 3]
        if a == c and _bonded(a, b, n):
            yield word[:i] + (b, a, b) + word[i + 3:]
    if len(word) >= 2:
        a, b = word[0], word[1]
        if a != b and _bonded(a, b, n):
            grown = len(word) >= 3 and word[2] == a
            rest = word[3:] if grown else word[2:]
            w = from_word(system, rest)
            if (w.length() == len(rest) and _keeps_order(w, a)
                    and _keeps_order(w, b)):
                if grown:
                    yield (a, b) + rest
                    yield (b, a) + rest
                else:
                    yield (a, b, a) + rest
                    yield (b, a) + rest


# ---------------------------------------------------------------------------
# forbidden subwords
# ---------------------------------------------------------------------------

def forbidden_subwords(system, word):
    """Scan a primed word for the patterns no involution word can contain.

    Returns a list of (index, description) pairs; involution words must
    yield the empty list.  ``a+1`` wraps around modulo n only in the
    affine case.
    """
    n, affine = _params(system)
    out = []
    for i in range(len(word) - 1):
        (a, ap), (b, bp) = word[i], word[i + 1]
        succ = (a + 1) % n if affine else a + 1
        pred = (a - 1) % n if affine else a - 1
        if a == b:
            out.append((i, "aa"))
        elif ap and bp and (b == succ or b == pred):
            out.append((i, "a'(a+-1)'"))
        if i == 0 and not ap and bp and (b == succ or b == pred):
            out.append((i, "initial a(a+-1)'"))
    for i in range(len(word) - 2):
        (a, ap), (b, bp), (c, cp) = word[i:i + 3]
        if a != c or a == b:
            continue
        if bp or (ap and cp):
            out.append((i, "aba with inner or double primes"))
        elif i == 0:
            out.append((i, "initial aba"))
        elif not _bonded(a, b, n):
            out.append((i, "aba with commuting letters"))
    return out


# ---------------------------------------------------------------------------
# atoms via windows
# ---------------------------------------------------------------------------

def window_from_sequence(seq, system):
    """The group element whose window is ``seq`` up to the shift d.

    An integer sequence with entries distinct modulo n determines a unique
    element w with w(i + d) = seq[i - 1]; the shift d is fixed by the
    window-sum normalization.
    """
    n, affine = _params(system)
    seq = list(seq)
    if len(seq) != n or len({x % n for x in seq}) != n:
        raise InvalidWindow(f"{seq} is not a window of rank {n}")
    total = sum(seq) - n * (n + 1) // 2
    if total % n != 0:
        raise InvalidWindow(f"{seq} has an impossible window sum")
    d = total // n
    window = []
    for y in range(1, n + 1):
        i, k = (y - d - 1) % n, (y - d - 1) // n
        window.append(seq[i] + k * n)
    return from_window(system, tuple(window))


def alpha_min(z):
    """The minimal Hecke atom of an involution, read off from its cycles.

    For a_1 < a_2 < ... in [n] with a_i <= z(a_i), this is the inverse of
    the element with window [z(a_1), a_1, z(a_2), a_2, ...], duplicates
    removed.
    """
    elem = z.elem if isinstance(z, TwistedInvolution) else z
    system = elem.system
    n, _ = _params(system)
    if elem.inverse() != elem:
        raise NotInvolution(f"{elem!r} is not an involution")
    seq = []
    for a in range(1, n + 1):
        za = elem.value(a)
        if a <= za:
            for x in (za, a):
                if x not in seq:
                    seq.append(x)
    return window_from_sequence(seq, system).inverse()


def atom_pattern_neighbors(x):
    """The pattern exchanges linking the Hecke atoms of one involution.

    Three atoms are linked when their inverses' windows show the patterns
    [..., c, b, a, ...], [..., c, a, b, ...], [..., b, c, a, ...] on the
    same three consecutive positions, for any integers a < b < c.  In the
    affine case positions wrap around the window with the usual shift by n.
    """
    system = x.system
    n, affine = _params(system)
    u = x.inverse()
    top = n if affine else n - 2
    for i in range(1, top + 1):
        vals = [u.value(i), u.value(i + 1), u.value(i + 2)]
        a, b, c = sorted(vals)
        arrangements = [[c, b, a], [c, a, b], [b, c, a]]
        if vals not in arrangements:
            continue
        for other in arrangements:
            if other == vals:
                continue
            seq = [u.value(j) for j in range(1, n + 1)]
            for k in range(3):
                p = i + k
                if p <= n:
                    seq[p - 1] = other[k]
                else:
                    seq[p - n - 1] = other[k] - n
            yield window_from_sequence(seq, system).inverse()


def atom_pattern_class(seed, max_size=10**6):
    """BFS closure of one atom under the pattern exchanges."""
    from .system import ClosureBoundExceeded
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for x in frontier:
            for y in atom_pattern_neighbors(x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > max_size:
                        raise ClosureBoundExceeded("atom class too large")
        frontier = nxt
    return frozenset(seen)


def is_commutation_by_fixed_points(y, a):
    """The window-notation criterion for a commutation: the 0-based letter
    a is a commutation at the prefix fold y iff a+1 and a+2 (1-based) are
    fixed points of y."""
    return y.value(a + 1) == a + 1 and y.value(a + 2) == a + 2
