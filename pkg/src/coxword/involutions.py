"""
Twisted involutions z (with z^{-1} = z*) and their word sets: involution
words, primed involution words, Hecke atoms, and involution Hecke words.

The underline action z |-> z s-bar generates all twisted involutions from the
identity; involution words are the minimal-length generating sequences, and
are enumerated here by backward recursion over right descents.
"""

from dataclasses import dataclass

from .system import NotInvolutionWord, ClosureBoundExceeded
from .elements import (
    demazure,
    enumerate_group,
    from_word,
    identity,
    m_twisted,
    twisted_fold_gen,
    _trim,
)


@dataclass(frozen=True)
class TwistedInvolution:
    """An element z with z^{-1} = z*."""

    elem: object

    def __post_init__(self):
        if self.elem.inverse() != self.elem.star_elem():
            raise NotInvolutionWord(
                f"{self.elem!r} is not a twisted involution")

    @property
    def system(self):
        return self.elem.system

    def length(self):
        return self.elem.length()

    def sort_key(self):
        return self.elem.sort_key()

    def __repr__(self):
        return f"TwistedInvolution({self.elem!r})"


def identity_involution(system):
    return TwistedInvolution(identity(system))


def underline_act(z, s):
    """z s-bar: zs when zs = s*z, else s*zs.  Self-inverse in s."""
    elem = z.elem
    zs = elem.times(s)
    sz = elem.times_left(elem.system.star[s])
    if zs == sz:
        return TwistedInvolution(zs)
    return TwistedInvolution(sz.times(s))


def demazure_twist(z, s):
    """s* o z o s (the three-case formula)."""
    return TwistedInvolution(twisted_fold_gen(z.elem, s))


def fold_word(system, word):
    """The twisted involution s_n* o ... o s_1* o s_1 o ... o s_n."""
    z = identity(system)
    for s in word:
        z = twisted_fold_gen(z, s)
    return TwistedInvolution(z)


def is_commutation_step(z, s):
    """True iff s* z = z s, i.e. the underline action at z multiplies on one
    side only."""
    elem = z.elem
    return elem.times(s) == elem.times_left(elem.system.star[s])


def twisted_involutions(system, rho_bound=None, max_elements=100000):
    """All twisted involutions reachable within rho_bound length-increasing
    underline steps, as a dict z -> rho_*(z)."""
    z0 = identity_involution(system)
    out = {z0: 0}
    frontier = [z0]
    depth = 0
    while frontier and (rho_bound is None or depth < rho_bound):
        nxt = []
        for z in frontier:
            for s in range(system.rank):
                zs = underline_act(z, s)
                if zs.length() > z.length() and zs not in out:
                    out[zs] = depth + 1
                    nxt.append(zs)
                    if len(out) > max_elements:
                        raise ClosureBoundExceeded(
                            "too many twisted involutions; raise max_elements")
        frontier = nxt
        depth += 1
    return out


def rho(z):
    """The common length of every involution word for z."""
    system = z.system
    cache = system.cache("rho")
    key = z.elem
    got = cache.get(key)
    if got is None:
        if z.length() == 0:
            got = 0
        else:
            s = min(z.elem.right_descents())
            got = 1 + rho(underline_act(z, s))
        cache[key] = got
    return got


def involution_words(z):
    """R_inv,*(z): all involution words, by descent recursion (memoized)."""
    system = z.system
    cache = system.cache("invol_words")
    key = z.elem
    got = cache.get(key)
    if got is None:
        if z.length() == 0:
            got = frozenset({()})
        else:
            words = set()
            for s in z.elem.right_descents():
                for a in involution_words(underline_act(z, s)):
                    words.add(a + (s,))
            got = frozenset(words)
        cache[key] = got
        _trim(system, cache)
    return got


def commutations(word, z):
    """The set of commutation indices (0-based) of an involution word for z.

    Raises NotInvolutionWord if the word is not an involution word (some
    prefix fold fails to grow, or the full fold differs from z).
    """
    system = z.system
    y = identity_involution(system)
    out = set()
    for i, s in enumerate(word):
        if not 0 <= s < system.rank:
            raise NotInvolutionWord(f"letter {s} out of range")
        if is_commutation_step(y, s):
            out.add(i)
        y2 = underline_act(y, s)
        if y2.length() <= y.length():
            raise NotInvolutionWord(f"prefix fold shrinks at index {i}")
        y = y2
    if y != z:
        raise NotInvolutionWord("word does not fold to z")
    return frozenset(out)


def commutation_count(z):
    """2 rho_*(z) - l(z), the number of commutations of every word for z."""
    return 2 * rho(z) - z.length()


def primed_words(z):
    """R+_inv,*(z): primed involution words as tuples of (letter, primed)."""
    out = set()
    for a in involution_words(z):
        comm = sorted(commutations(a, z))
        base = [(s, False) for s in a]
        for mask in range(1 << len(comm)):
            w = list(base)
            for bit, i in enumerate(comm):
                if mask >> bit & 1:
                    w[i] = (a[i], True)
            out.add(tuple(w))
    return frozenset(out)


def hecke_fold_of(w):
    """(w^{-1})* o w."""
    return demazure(w.inverse().star_elem(), w)


def hecke_atoms(z):
    """B_*(z) = { w : (w^{-1})* o w = z }.

    Every atom satisfies l(z) <= 2 l(w) and l(w) <= l(z), so the search
    filters the ball of radius l(z); both bounds are asserted.
    """
    system = z.system
    cache = system.cache("atom_map")
    key = z.length()
    atoms_by_fold = cache.get("by_fold")
    done_len = cache.get("len", -1)
    if atoms_by_fold is None or done_len < key:
        atoms_by_fold = {}
        for w in enumerate_group(system, key):
            fold = hecke_fold_of(w)
            atoms_by_fold.setdefault(fold, []).append(w)
        cache["by_fold"] = atoms_by_fold
        cache["len"] = key
    atoms = frozenset(atoms_by_fold.get(z.elem, ()))
    for w in atoms:
        assert z.length() <= 2 * w.length() and w.length() <= z.length()
    return atoms


def min_atom(z):
    """The unique minimal-length Hecke atom; its reduced words are R_inv,*(z)."""
    return min(hecke_atoms(z), key=lambda w: w.sort_key())


def reduced_hecke_words(z):
    """H^red_inv,*(z): the union of the reduced words of all Hecke atoms."""
    out = set()
    for w in hecke_atoms(z):
        out.update(w.reduced_words())
    return frozenset(out)


def _fold_states(system, max_len):
    """Transition table y -> (y s-twist) over twisted involutions of length
    <= max_len, reachable from the identity by Demazure twists."""
    start = identity(system)
    table = {}
    frontier = [start]
    seen = {start}
    while frontier:
        nxt = []
        for y in frontier:
            row = []
            for s in range(system.rank):
                y2 = twisted_fold_gen(y, s)
                if y2.length() > max_len:
                    row.append(None)
                    continue
                row.append(y2)
                if y2 not in seen:
                    seen.add(y2)
                    nxt.append(y2)
            table[y] = row
        frontier = nxt
    return table


def hecke_words(z, max_len, max_words=10**6):
    """H_inv,*(z) truncated at length max_len.

    Depth-first search over the fold automaton, pruning states from which z
    is no longer reachable (the fold length never decreases).
    """
    system = z.system
    table = _fold_states(system, z.length())
    # reverse reachability to z
    reach = {z.elem}
    changed = True
    while changed:
        changed = False
        for y, row in table.items():
            if y in reach:
                continue
            if any(y2 in reach for y2 in row if y2 is not None):
                reach.add(y)
                changed = True
    out = []
    word = []

    def dfs(y):
        if y == z.elem:
            out.append(tuple(word))
            if len(out) > max_words:
                raise ClosureBoundExceeded(
                    f"more than {max_words} Hecke words")
        if len(word) == max_len:
            return
        for s in range(system.rank):
            y2 = table[y][s]
            if y2 is not None and y2 in reach:
                word.append(s)
                dfs(y2)
                word.pop()

    start = identity(system)
    if start in reach:
        dfs(start)
    return frozenset(out)


def hecke_word_count(z, max_len):
    """|H_inv,*(z)| truncated at length max_len, counted by dynamic
    programming over the fold automaton (no enumeration)."""
    system = z.system
    table = _fold_states(system, z.length())
    counts = {identity(system): 1}
    total = 1 if z.length() == 0 else 0
    for _ in range(max_len):
        nxt = {}
        for y, c in counts.items():
            for y2 in table[y]:
                if y2 is not None:
                    nxt[y2] = nxt.get(y2, 0) + c
        counts = nxt
        total += counts.get(z.elem, 0)
    return total


def is_hecke_word(z, word):
    """True iff the word's Demazure-twist fold lands on z (so the word
    belongs to H_inv,*(z), in any length)."""
    system = z.system
    steps = system.cache("fold-steps")
    y = identity(system)
    target = z.length()
    for s in word:
        key = (y, s)
        y2 = steps.get(key)
        if y2 is None:
            y2 = steps[key] = twisted_fold_gen(y, s)
        if y2.length() > target:
            return False
        y = y2
    return y == z.elem


def adstar(z):
    """Ad*_z: the map w -> (z w z^{-1})*, restricted to generators."""
    elem = z.elem if isinstance(z, TwistedInvolution) else z

    inv_word = elem.inverse().reduced_word()

    def theta(s):
        return elem.times(s).mult_word(inv_word).star_elem()

    return theta


def m_twisted_ad(z, s, t):
    """m(s, t; Ad*_z)."""
    elem = z.elem if isinstance(z, TwistedInvolution) else z
    return m_twisted(elem.system, s, t, adstar(elem))
