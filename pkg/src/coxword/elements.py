"""
Group elements of a twisted Coxeter system, in two interchangeable backends.

GenericElement works for any Coxeter matrix: an element is stored as the
lexicographically least reduced word in its braid class, which is a complete
invariant by the Matsumoto-Tits word property.  Canonical forms, descent
data, and products are computed by breadth-first search over braid moves and
memoized in the owning system's caches.

PermutationElement covers the symmetric group S_n and the affine symmetric
group, in window notation [w(1), ..., w(n)].  Products, descents, and
lengths are direct window arithmetic.

Both backends expose the same surface: length, descents, products with
generators, inverse, star, reduced words, and the Demazure product.
"""

import os

from .system import (
    INF,
    CoxeterError,
    InfiniteParabolic,
    InvalidWindow,
)


def cache_limit():
    raw = os.environ.get("COXWORD_CACHE_LIMIT")
    if not raw:
        return None
    try:
        return max(1, int(raw))
    except ValueError:
        return None


def _trim(system, cache):
    limit = cache_limit()
    if limit is not None and len(cache) > limit:
        cache.clear()


# ---------------------------------------------------------------------------
# braid moves on plain words
# ---------------------------------------------------------------------------

def _braid_blocks(system):
    """Row-indexed table [s][t] -> (m, block from s, flipped block from t),
    None on the diagonal and for infinite bonds."""
    cache = system.cache("braid-blocks")
    rows = cache.get("rows")
    if rows is None:
        n = system.rank
        rows = [[None] * n for _ in range(n)]
        for s in range(n):
            for t in range(n):
                m = system.m(s, t)
                if s != t and m is not INF:
                    a = tuple(s if k % 2 == 0 else t for k in range(m))
                    b = tuple(t if k % 2 == 0 else s for k in range(m))
                    rows[s][t] = (m, a, b)
        cache["rows"] = rows
    return rows


def braid_move_targets(system, word):
    """All words obtained from ``word`` by one braid move, with positions.

    Yields (i, m, new_word): the move rewrote word[i:i+m].
    """
    rows = _braid_blocks(system)
    L = len(word)
    for i in range(L - 1):
        info = rows[word[i]][word[i + 1]]
        if info is None:
            continue
        m, a, b = info
        if m == 2:
            yield i, 2, word[:i] + b + word[i + 2:]
        elif i + m <= L and word[i + 2] == word[i] and word[i:i + m] == a:
            yield i, m, word[:i] + b + word[i + m:]


def braid_class(system, word):
    """The full braid class of a reduced word, as a frozenset.

    By Matsumoto-Tits this is exactly the set of reduced words of the
    element, so for the generic backend it doubles as R(w).
    """
    cache = system.cache("braid_class")
    got = cache.get(word)
    if got is not None:
        return got
    seen = {word}
    frontier = [word]
    while frontier:
        nxt = []
        for w in frontier:
            for _, _, other in braid_move_targets(system, w):
                if other not in seen:
                    seen.add(other)
                    nxt.append(other)
        frontier = nxt
    out = frozenset(seen)
    for w in out:
        cache[w] = out
    _trim(system, cache)
    return out


def _canonical(system, word):
    """Lex-least reduced word braid-equivalent to the reduced word ``word``."""
    if not word:
        return ()
    return min(braid_class(system, word))


def _last_letter_reps(system, canonical_word):
    """Map: last letter -> some reduced word in the class ending with it."""
    cache = system.cache("last_reps")
    got = cache.get(canonical_word)
    if got is None:
        got = {}
        for w in braid_class(system, canonical_word):
            got.setdefault(w[-1], w)
        cache[canonical_word] = got
        _trim(system, cache)
    return got


# ---------------------------------------------------------------------------
# element classes
# ---------------------------------------------------------------------------

class GroupElement:
    """Shared surface of the two element backends."""

    __slots__ = ("system",)

    def length(self):
        raise NotImplementedError

    def right_descents(self):
        raise NotImplementedError

    def has_right_descent(self, s):
        raise NotImplementedError

    def has_left_descent(self, s):
        return self.inverse().has_right_descent(s)

    def left_descents(self):
        return self.inverse().right_descents()

    def times(self, s):
        """Right product w s with a generator."""
        raise NotImplementedError

    def times_left(self, s):
        """Left product s w with a generator."""
        return self.inverse().times(s).inverse()

    def inverse(self):
        raise NotImplementedError

    def star_elem(self):
        """Image under the diagram involution of the system."""
        raise NotImplementedError

    def reduced_word(self):
        """The lexicographically least reduced word (both backends agree)."""
        raise NotImplementedError

    def is_identity(self):
        return self.length() == 0

    def mult_word(self, word):
        out = self
        for s in word:
            out = out.times(s)
        return out

    def sort_key(self):
        return (self.length(), self.reduced_word())


class GenericElement(GroupElement):
    __slots__ = ("word",)

    def __init__(self, system, word):
        self.system = system
        self.word = word

    def length(self):
        return len(self.word)

    def right_descents(self):
        if not self.word:
            return frozenset()
        return frozenset(_last_letter_reps(self.system, self.word))

    def has_right_descent(self, s):
        return s in self.right_descents()

    def times(self, s):
        system = self.system
        cache = system.cache("mul")
        key = (self.word, s)
        got = cache.get(key)
        if got is None:
            if not self.word:
                got = (s,)
            else:
                reps = _last_letter_reps(system, self.word)
                if s in reps:
                    got = _canonical(system, reps[s][:-1])
                else:
                    got = _canonical(system, self.word + (s,))
            cache[key] = got
            _trim(system, cache)
        return GenericElement(system, got)

    def inverse(self):
        system = self.system
        cache = system.cache("inv")
        got = cache.get(self.word)
        if got is None:
            got = _canonical(system, tuple(reversed(self.word)))
            cache[self.word] = got
            cache[got] = self.word
            _trim(system, cache)
        return GenericElement(system, got)

    def star_elem(self):
        system = self.system
        starred = tuple(system.star[s] for s in self.word)
        return GenericElement(system, _canonical(system, starred))

    def reduced_word(self):
        return self.word

    def reduced_words(self):
        return braid_class(self.system, self.word)

    def __eq__(self, other):
        return (isinstance(other, GenericElement) and self.word == other.word
                and (self.system is other.system or self.system == other.system))

    def __hash__(self):
        return hash(("gen", self.word))

    def __repr__(self):
        return f"GenericElement{self.word}"


class PermutationElement(GroupElement):
    __slots__ = ("window", "_length")

    def __init__(self, system, window, validate=False):
        self.system = system
        self.window = tuple(window)
        self._length = None
        if validate:
            validate_window(self.window, system.perm_n, system.affine)

    # window value at an arbitrary integer position (1-based), with the
    # affine periodicity w(i + n) = w(i) + n
    def value(self, j):
        n = self.system.perm_n
        return self.window[(j - 1) % n] + n * ((j - 1) // n)

    def length(self):
        if self._length is None:
            # descent reduction to the identity; the inversion-count
            # formula is kept separate as an independent oracle
            count = 0
            w = self
            s = w._first_descent()
            while s is not None:
                w = w.times(s)
                count += 1
                s = w._first_descent()
            self._length = count
        return self._length

    def _first_descent(self):
        for s in range(self.system.rank):
            if self.value(s + 1) > self.value(s + 2):
                return s
        return None

    def right_descents(self):
        return frozenset(s for s in range(self.system.rank)
                         if self.value(s + 1) > self.value(s + 2))

    def has_right_descent(self, s):
        return self.value(s + 1) > self.value(s + 2)

    def times(self, s):
        n = self.system.perm_n
        j = s + 1
        w = list(self.window)
        if j < n:
            w[j - 1], w[j] = w[j], w[j - 1]
        else:
            # only the affine system has the wrapping generator
            w[0], w[n - 1] = self.window[n - 1] - n, self.window[0] + n
        return PermutationElement(self.system, w)

    def times_left(self, s):
        # left product permutes window values s <-> s+1 (mod n, affine)
        n = self.system.perm_n
        j = s + 1
        w = []
        for v in self.window:
            r = (v - j) % n
            if r == 0:
                w.append(v + 1)
            elif r == 1:
                w.append(v - 1)
            else:
                w.append(v)
        return PermutationElement(self.system, w)

    def inverse(self):
        n = self.system.perm_n
        w = [0] * n
        for i, v in enumerate(self.window):
            r = (v - 1) % n
            d = (v - 1 - r) // n
            w[r] = (i + 1) - d * n
        return PermutationElement(self.system, w)

    def star_elem(self):
        star = self.system.star
        if all(star[i] == i for i in range(self.system.rank)):
            return self
        n = self.system.perm_n
        if not self.system.affine and all(star[i] == self.system.rank - 1 - i
                                          for i in range(self.system.rank)):
            # s_i -> s_{n-i}: conjugation by the longest element
            w = tuple(n + 1 - self.value(n + 1 - i) for i in range(1, n + 1))
            return PermutationElement(self.system, w)
        raise CoxeterError("permutation backend supports star = id or reversal")

    def reduced_word(self):
        # lex-least reduced word, built by removing the smallest left descent
        out = []
        w = self
        while True:
            for s in range(self.system.rank):
                if w.has_left_descent(s):
                    out.append(s)
                    w = w.times_left(s)
                    break
            else:
                break
        return tuple(out)

    def reduced_words(self):
        cache = self.system.cache("rwords")
        got = cache.get(self.window)
        if got is None:
            if self.length() == 0:
                got = frozenset({()})
            else:
                words = set()
                for s in self.right_descents():
                    for r in self.times(s).reduced_words():
                        words.add(r + (s,))
                got = frozenset(words)
            cache[self.window] = got
            _trim(self.system, cache)
        return got

    def __eq__(self, other):
        return (isinstance(other, PermutationElement)
                and self.window == other.window
                and (self.system is other.system or self.system == other.system))

    def __hash__(self):
        return hash(("perm", self.window))

    def __repr__(self):
        return f"PermutationElement{list(self.window)}"

    def sort_key(self):
        return (self.length(), self.window)


def inversion_length(window, n, affine=True):
    """Length by inversion pair-counting, independent of descent reduction.

    Counts pairs of positions i < j (j ranging over all later integers in
    the periodic extension) whose values appear out of order; the shift
    range is bounded by the spread of the window entries.
    """
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            d = window[i] - window[j]
            if not affine:
                total += 1 if d > 0 else 0
                continue
            # inversions (i, j + kn) for k >= 0 and (j, i + kn) for k >= 1
            k = 0
            while d > k * n:
                total += 1
                k += 1
            k = 1
            while -d > k * n:
                total += 1
                k += 1
    return total


def validate_window(window, n, affine):
    if len(window) != n:
        raise InvalidWindow(f"window must have {n} entries")
    if len({v % n for v in window}) != n:
        raise InvalidWindow("window entries are not distinct mod n")
    if sum(window) != n * (n + 1) // 2:
        raise InvalidWindow("window entries do not sum to n(n+1)/2")
    if not affine and sorted(window) != list(range(1, n + 1)):
        raise InvalidWindow("window is not a permutation of 1..n")


def identity(system):
    if system.backend == "perm":
        return PermutationElement(system, range(1, system.perm_n + 1))
    return GenericElement(system, ())


def from_word(system, word):
    return identity(system).mult_word(word)


def from_window(system, window):
    return PermutationElement(system, window, validate=True)


# ---------------------------------------------------------------------------
# products, Demazure product, star-twisted operations
# ---------------------------------------------------------------------------

def multiply_gen(w, s):
    """w s; the length changes by exactly one."""
    return w.times(s)


def is_right_descent(w, s):
    return w.has_right_descent(s)


def multiply(v, w):
    return v.mult_word(w.reduced_word())


def demazure_gen(x, s):
    """x o s: multiply unless s is already a right descent."""
    return x if x.has_right_descent(s) else x.times(s)


def demazure(v, w):
    """The Demazure product v o w (associative; v o w = vw when lengths add)."""
    x = v
    for s in w.reduced_word():
        x = demazure_gen(x, s)
    return x


def star_elem(w):
    return w.star_elem()


def twisted_fold_gen(z, s):
    """s* o z o s for a twisted involution z, by the three-case formula."""
    zs = z.times(s)
    if zs.length() < z.length():
        return z
    sz = z.times_left(z.system.star[s])
    if zs == sz:
        return zs
    return zs.times_left(z.system.star[s])


def twisted_fold(system, word):
    """s_n* o ... o s_1* o s_1 o ... o s_n applied to the identity."""
    z = identity(system)
    for s in word:
        z = twisted_fold_gen(z, s)
    return z


# ---------------------------------------------------------------------------
# group enumeration and parabolic data
# ---------------------------------------------------------------------------

def enumerate_group(system, max_length, gens=None, max_elements=None):
    """All elements of length <= max_length, BFS by length then lex word.

    ``gens`` restricts right multiplications to a parabolic subgroup.
    Raises InfiniteParabolic if ``max_elements`` is exceeded.
    """
    if gens is None:
        gens = range(system.rank)
    gens = sorted(gens)
    start = identity(system)
    seen = {start}
    out = [start]
    frontier = [start]
    length = 0
    while frontier and length < max_length:
        nxt = []
        for w in frontier:
            for s in gens:
                ws = w.times(s)
                if ws not in seen:
                    seen.add(ws)
                    nxt.append(ws)
                    if max_elements is not None and len(seen) > max_elements:
                        raise InfiniteParabolic(
                            f"more than {max_elements} elements enumerated")
        nxt.sort(key=lambda w: w.sort_key())
        out.extend(nxt)
        frontier = nxt
        length += 1
    return out


DEFAULT_PARABOLIC_BOUND = 10000


def longest_element(system, J=None, bound=DEFAULT_PARABOLIC_BOUND):
    """The longest element of the (finite) parabolic W_J."""
    if J is None:
        J = range(system.rank)
    J = sorted(J)
    elements = enumerate_group(system, max_length=2 * bound, gens=J,
                               max_elements=bound)
    return max(elements, key=lambda w: w.sort_key())


def is_min_coset_rep(w, J):
    """True iff l(s w) > l(w) for every s in J (w is in ^J W)."""
    return not any(w.has_left_descent(s) for s in J)


# ---------------------------------------------------------------------------
# the twisted dihedral invariant m(s, t; theta)
# ---------------------------------------------------------------------------

def _theta_value(system, theta, s):
    v = theta(s) if callable(theta) else theta[s]
    if isinstance(v, int):
        v = from_word(system, (v,))
    return v


def m_twisted(system, s, t, theta):
    """m(s, t; theta): the common length of the twisted involution words for
    the longest dihedral element, by the four-case formula.

    theta maps {s, t} into W (a dict or callable; values may be generator
    indices or elements).  Returns INF when m(s, t) is infinite.
    """
    m = system.m(s, t)
    if m is INF:
        return INF
    if s == t:
        return 1
    ts = _theta_value(system, theta, s)
    tt = _theta_value(system, theta, t)
    es = from_word(system, (s,))
    et = from_word(system, (t,))
    if m % 2 == 1:
        if {ts, tt} == {es, et}:
            return (m + 1) // 2
        return m
    if ts == es and tt == et:
        return m // 2 + 1
    if ts == et and tt == es:
        return m // 2
    return m
