"""
Relation families on (primed) words and their equivalence-class closures.

A plain word is a tuple of generator indices; a primed word is a tuple of
(letter, primed) pairs.  Each relation family is a neighbor generator: given
a word it yields (kind, other_word) for every single application of one of
its relations.  Named bundles of families (``relation_set``) correspond to
the spanning theorems for involution words, primed involution words, reduced
involution Hecke words, and unrestricted involution Hecke words; closures of
these bundles are computed by plain breadth-first search with a configurable
size cap.

The dihedral relations all hinge on the twisted bond m(s,t;*): a half-braid
relation exchanges the two alternating prefixes of that length, a primed
half-braid relation additionally toggles a prime on the final prefix letter,
and a mixed half-braid relation grows an alternating prefix of p terms to
p+1 terms (m(s,t;*) <= p < m(s,t)) in front of a reduced word with no left
descent at either letter.  Initial relations in rank 3 and 4 exist only for
the four exceptional twisted types; they exchange whole prefixes drawn from
the word sets of the longest parabolic element.
"""

from dataclasses import dataclass, field

from .system import (
    INF,
    ClosureBoundExceeded,
    classify_twisted_type,
    restrict_system,
)
from .elements import (
    braid_move_targets,
    from_word,
    longest_element,
    m_twisted,
)
from .involutions import (
    TwistedInvolution,
    involution_words,
    primed_words,
    reduced_hecke_words,
)

# edge kinds, also used as DOT colors classes
BRAID = "braid"
HALF = "half-braid"
INITIAL = "initial"
PBRAID = "primed-braid"
PHALF = "primed-half-braid"
PINITIAL = "primed-initial"
MIXED = "mixed-half-braid"
HINITIAL = "hecke-initial"
DOUBLE = "double"

DOT_COLORS = {
    BRAID: "gray",
    PBRAID: "gray",
    HALF: "red",
    PHALF: "red",
    MIXED: "red",
    INITIAL: "blue",
    PINITIAL: "blue",
    HINITIAL: "blue",
    DOUBLE: "green",
}


def _alt(s, t, p):
    """The alternating word (s, t, s, t, ...) with p terms."""
    return tuple(s if i % 2 == 0 else t for i in range(p))


def _alt_end(s, t, p):
    """The alternating word with p terms whose *last* term is s."""
    return _alt(s, t, p) if p % 2 else _alt(t, s, p)


def unprime(word):
    return tuple(s for s, _ in word)


def prime_free(word):
    """A plain word dressed with no primes."""
    return tuple((s, False) for s in word)


# ---------------------------------------------------------------------------
# braid-type families
# ---------------------------------------------------------------------------

def braid_neighbors(system, word):
    for _, _, other in braid_move_targets(system, word):
        yield BRAID, other


def half_braid_neighbors(system, word):
    """Exchange the two alternating prefixes of length m(s,t;*).

    Applies when {s*, t*} = {s, t} and m(s,t) is finite; the trivial-star
    m(s,t) = 2 case is dropped (it coincides with a braid move).
    """
    star = system.star
    for s in range(system.rank):
        for t in range(system.rank):
            if s == t:
                continue
            m = system.m(s, t)
            if m is INF or {star[s], star[t]} != {s, t}:
                continue
            if star[s] == s and m == 2:
                continue
            p = m_twisted(system, s, t, star)
            if len(word) >= p and word[:p] == _alt(s, t, p):
                yield HALF, _alt(t, s, p) + word[p:]


def primed_braid_neighbors(system, word):
    """The four primed forms of the braid relation on primed words.

    Writing n = m(s,t): two adjacent primed letters commute when n = 2; an
    unprimed n-letter block flips as usual; a block primed only on its first
    letter flips into one primed only on its last.
    """
    L = len(word)
    for i in range(L - 1):
        (s, sp), (t, tp) = word[i], word[i + 1]
        if s != t and sp and tp and system.m(s, t) == 2:
            yield PBRAID, word[:i] + (word[i + 1], word[i]) + word[i + 2:]
    for i in range(L):
        s, sp = word[i]
        for t in range(system.rank):
            if t == s:
                continue
            m = system.m(s, t)
            if m is INF or i + m > L:
                continue
            block = word[i:i + m]
            if unprime(block) != _alt(s, t, m):
                continue
            primes = tuple(p for _, p in block)
            flipped = _alt(t, s, m)
            if not any(primes):
                yield PBRAID, (word[:i] + prime_free(flipped) + word[i + m:])
            elif primes == (True,) + (False,) * (m - 1):
                out = prime_free(flipped[:-1]) + ((flipped[-1], True),)
                yield PBRAID, word[:i] + out + word[i + m:]
            elif primes == (False,) * (m - 1) + (True,):
                out = ((flipped[0], True),) + prime_free(flipped[1:])
                yield PBRAID, word[:i] + out + word[i + m:]


def primed_half_braid_neighbors(system, word):
    """Half-braid exchanges on primed words, plus the prime toggle.

    The exchange applies to unprimed alternating prefixes of length
    m(s,t;*) when {s*, t*} = {s, t} and m(s,t) is finite.  The toggle
    primes/unprimes the final letter of such a prefix when s* = s = t* = t
    with m even (excluding m = 2), or s* = t with m odd; taking s = t gives
    the rank-one toggle (s, ---) ~ (s', ---) for each s = s*.
    """
    star = system.star
    for s in range(system.rank):
        for t in range(system.rank):
            m = system.m(s, t)
            if m is INF:
                continue
            fixed = star[s] == s and star[t] == t
            swapped = star[s] == t and star[t] == s
            p = m_twisted(system, s, t, star)
            if p > len(word):
                continue
            prefix = word[:p]
            letters = unprime(prefix)
            primes = tuple(pr for _, pr in prefix)
            if letters != _alt_end(s, t, p):
                continue
            if s != t and (fixed or swapped) and not any(primes):
                other = _alt_end(t, s, p)
                yield PHALF, prime_free(other) + word[p:]
            toggle = (fixed and m % 2 == 0 and m != 2) or (swapped and m % 2)
            if toggle and not any(primes[:-1]):
                last = (letters[-1], not primes[-1])
                yield PHALF, prefix[:-1] + (last,) + word[p:]


def _suffix_is_min_coset_word(system, word, J):
    """True iff ``word`` is a reduced word for an element with no left
    descent in J."""
    w = from_word(system, word)
    if w.length() != len(word):
        return False
    return not any(w.has_left_descent(s) for s in J)


def mixed_half_braid_neighbors(system, word):
    """Grow or shrink an alternating prefix of p vs p+1 terms.

    Requires m(s,t;*) <= p < m(s,t) < infinity and that the rest of the
    word is a reduced word for an element with neither s nor t as a left
    descent.
    """
    star = system.star
    for s in range(system.rank):
        for t in range(system.rank):
            if s == t:
                continue
            m = system.m(s, t)
            if m is INF:
                continue
            lo = m_twisted(system, s, t, star)
            for p in range(lo, m):
                if p > len(word) or word[:p] != _alt(s, t, p):
                    continue
                rest = word[p:]
                if rest[:1] == (_alt(s, t, p + 1)[p],):
                    # the grown word: shrink instead
                    if _suffix_is_min_coset_word(system, rest[1:], (s, t)):
                        yield MIXED, word[:p] + rest[1:]
                if _suffix_is_min_coset_word(system, rest, (s, t)):
                    yield MIXED, _alt(s, t, p + 1) + rest


def double_neighbors(system, word, max_len=None):
    """(---, s, s, ---) ~ (---, s, ---): drop or duplicate a letter."""
    L = len(word)
    for i in range(L - 1):
        if word[i] == word[i + 1]:
            yield DOUBLE, word[:i] + word[i + 1:]
    if max_len is None or L < max_len:
        for i in range(L):
            yield DOUBLE, word[:i] + (word[i],) + word[i:]


# ---------------------------------------------------------------------------
# initial relation families
# ---------------------------------------------------------------------------

@dataclass
class InitialFamily:
    """Exchange of whole prefixes drawn from a fixed word set.

    ``members`` maps prefix length -> set of prefixes; all members are
    mutually exchangeable.  For the Hecke variant the remaining suffix must
    be a reduced word for an element with no left descent in J.
    """

    kind: str
    J: tuple
    members: dict
    check_suffix: bool = False

    def neighbors(self, system, word):
        for q, memset in self.members.items():
            if q > len(word):
                continue
            prefix = word[:q]
            if prefix not in memset:
                continue
            suffix = word[q:]
            if self.check_suffix and not _suffix_is_min_coset_word(
                    system, _plain(suffix), self.J):
                continue
            for q2, memset2 in self.members.items():
                for other in memset2:
                    if other != prefix:
                        yield self.kind, other + suffix


def _plain(word):
    """Strip primes if the word is primed; identity on plain words."""
    if word and isinstance(word[0], tuple):
        return unprime(word)
    return word


def _map_word(word, mapping):
    return tuple(mapping[s] for s in word)


def _map_primed(word, mapping):
    return tuple((mapping[s], p) for s, p in word)


def _star_invariant_subsets(system, sizes):
    from itertools import combinations
    star = system.star
    for k in sizes:
        for J in combinations(range(system.rank), k):
            if frozenset(star[s] for s in J) == frozenset(J):
                yield J


def initial_families(system, variant):
    """All initial relation families carried by the spanning theorems.

    ``variant`` is "inv", "primed", or "hecke".  Rank-1 and rank-2 families
    are instantiated for every finite star-invariant pair (except where the
    relation collapses to a braid move); rank-3 and rank-4 families exist
    only for the four exceptional twisted types.
    """
    cache = system.cache("initial_families")
    got = cache.get(variant)
    if got is not None:
        return got
    fams = []
    sizes = (1, 2, 3, 4) if variant == "primed" else (2, 3, 4)
    for J in _star_invariant_subsets(system, sizes):
        label, _ = classify_twisted_type(system, J)
        if label.kind == "A1":
            if variant != "primed" or system.star[J[0]] != J[0]:
                continue
        elif label.kind in ("I2", "2I2"):
            if label.n is None:
                continue
            if label.kind == "I2" and label.n == 2 and variant != "primed":
                continue
        elif label.kind == "other":
            continue
        sub, mapping = restrict_system(system, J)
        z0 = TwistedInvolution(longest_element(sub))
        small = len(J) <= 2
        if variant == "inv":
            words = {_map_word(a, mapping) for a in involution_words(z0)}
            kind = HALF if small else INITIAL
            check = False
        elif variant == "primed":
            words = {_map_primed(a, mapping) for a in primed_words(z0)}
            kind = PHALF if small else PINITIAL
            check = False
        else:
            words = {_map_word(a, mapping) for a in reduced_hecke_words(z0)}
            kind = MIXED if small else HINITIAL
            check = True
        if len(words) < 2:
            continue
        members = {}
        for a in words:
            members.setdefault(len(a), set()).add(a)
        fams.append(InitialFamily(kind, J, members, check))
    cache[variant] = fams
    return fams


# ---------------------------------------------------------------------------
# the exceptional minimal relation lists
# ---------------------------------------------------------------------------

# Minimal spanning relations for the four exceptional types, as words over
# the diagram letters.  "primed": pairs of primed prefixes (a trailing '
# primes the previous letter); "hecke": one mutually-exchangeable chain.
MINIMAL_RELATIONS = {
    "2A3": {
        "primed": [("bcab", "bcba"), ("bcab", "bcab'"), ("bcba", "bcba'")],
        "hecke": ["bcab", "bcba", "bcbab"],
    },
    "BC3": {
        "primed": [("abcaba", "abcbab"), ("abcaba", "abcaba'"),
                   ("abcbab", "abcbab'")],
        "hecke": ["abcaba", "abcbab", "abcbaba"],
    },
    "D4": {
        "primed": [("dbacbacd", "dbacbadc"), ("dbacbacd", "dbacbacd'"),
                   ("dbacbadc", "dbacbadc'")],
        "hecke": ["dbacbacd", "dbacbadc", "dbacbadcd"],
    },
    "H3": {
        "primed": [("acbacbabc", "acbacbacb"), ("acbacbabc", "acbacbabc'"),
                   ("acbacbacb", "acbacbacb'")],
        "hecke": ["acbacbabc", "acbacbacb", "acbacbacbc", "acbacbacba",
                  "acbacbacbab"],
    },
}


def _parse_letters(text):
    """A letter word with optional trailing primes -> primed tuple."""
    out = []
    for ch in text:
        if ch == "'":
            s, _ = out[-1]
            out[-1] = (s, True)
        else:
            out.append((ord(ch) - ord("a"), False))
    return tuple(out)


@dataclass
class MinimalExceptionalFamily:
    """The hand-listed prefix relations of one exceptional subsystem."""

    kind: str
    J: tuple
    pairs: list            # list of (prefix, prefix) with matching handling
    check_suffix: bool = False

    def neighbors(self, system, word):
        for lhs, rhs in self.pairs:
            for a, b in ((lhs, rhs), (rhs, lhs)):
                q = len(a)
                if q <= len(word) and word[:q] == a:
                    suffix = word[q:]
                    if self.check_suffix and not _suffix_is_min_coset_word(
                            system, _plain(suffix), self.J):
                        continue
                    yield self.kind, b + suffix


def minimal_exceptional_families(system, variant):
    """The hand-listed relations of Figure-3-labeled exceptional subsystems.

    ``variant`` is "plain", "primed", or "hecke"; "plain" keeps only the
    prime-free relation of each type.  Every labeling of each subsystem
    that matches the pinned diagram is instantiated.
    """
    cache = system.cache("minimal_families")
    got = cache.get(variant)
    if got is not None:
        return got
    fams = []
    for J in _star_invariant_subsets(system, (3, 4)):
        label, labelings = classify_twisted_type(system, J)
        if label.kind not in MINIMAL_RELATIONS:
            continue
        data = MINIMAL_RELATIONS[label.kind]
        for lab in labelings:
            mapping = {ord(ch) - ord("a"): lab[ch] for ch in sorted(lab)}
            if variant == "primed":
                pairs = [(_map_primed(_parse_letters(x), mapping),
                          _map_primed(_parse_letters(y), mapping))
                         for x, y in data["primed"]]
                fams.append(MinimalExceptionalFamily(PINITIAL, J, pairs))
            elif variant == "plain":
                x, y = data["primed"][0]
                pairs = [(_map_word(unprime(_parse_letters(x)), mapping),
                          _map_word(unprime(_parse_letters(y)), mapping))]
                fams.append(MinimalExceptionalFamily(INITIAL, J, pairs))
            else:
                chain = [_map_word(unprime(_parse_letters(x)), mapping)
                         for x in data["hecke"]]
                pairs = [(chain[i], chain[j])
                         for i in range(len(chain))
                         for j in range(i + 1, len(chain))]
                fams.append(MinimalExceptionalFamily(HINITIAL, J, pairs,
                                                     check_suffix=True))
    cache[variant] = fams
    return fams


# ---------------------------------------------------------------------------
# relation bundles and closures
# ---------------------------------------------------------------------------

THEOREM_SETS = (
    "hh", "hh2", "pr-rel", "hecke", "pr-rel-hecke", "hecke-full",
    "simply-inv", "simply-primed", "simply-hecke",
)


class RelationSet:
    """A bundle of relation families with a common neighbors() surface."""

    def __init__(self, system, name, funcs, families, primed=False,
                 max_len=None):
        self.system = system
        self.name = name
        self.funcs = funcs
        self.families = families
        self.primed = primed
        self.max_len = max_len

    def neighbors(self, word):
        for f in self.funcs:
            yield from f(self.system, word)
        for fam in self.families:
            yield from fam.neighbors(self.system, word)


def relation_set(system, name, max_len=None):
    """The relation bundle used by each spanning theorem.

    hh            braid + half-braid + exceptional initial    (R_inv)
    hh2           primed braid + all primed initial           (R+)
    pr-rel        primed braid + primed half-braid + minimal  (R+)
    hecke         braid + initial Hecke                       (H^red)
    pr-rel-hecke  braid + mixed half-braid + minimal          (H^red)
    hecke-full    hh relations + (s,s) ~ (s)                  (H_inv)
    simply-*      the half-braid-only bundles of the simply
                  braided equivalence theorem
    """
    if name == "hh":
        return RelationSet(system, name, [braid_neighbors],
                           initial_families(system, "inv"))
    if name == "hh2":
        return RelationSet(system, name, [primed_braid_neighbors],
                           initial_families(system, "primed"), primed=True)
    if name == "pr-rel":
        return RelationSet(
            system, name,
            [primed_braid_neighbors, primed_half_braid_neighbors],
            minimal_exceptional_families(system, "primed"), primed=True)
    if name == "hecke":
        return RelationSet(system, name, [braid_neighbors],
                           initial_families(system, "hecke"))
    if name == "pr-rel-hecke":
        return RelationSet(system, name,
                           [braid_neighbors, mixed_half_braid_neighbors],
                           minimal_exceptional_families(system, "hecke"))
    if name == "hecke-full":
        def double(sys_, word):
            return double_neighbors(sys_, word, max_len)
        return RelationSet(system, name, [braid_neighbors, double],
                           initial_families(system, "inv"), max_len=max_len)
    if name == "simply-inv":
        return RelationSet(system, name,
                           [braid_neighbors, half_braid_neighbors], [])
    if name == "simply-primed":
        return RelationSet(
            system, name,
            [primed_braid_neighbors, primed_half_braid_neighbors], [],
            primed=True)
    if name == "simply-hecke":
        return RelationSet(system, name,
                           [braid_neighbors, mixed_half_braid_neighbors], [])
    raise KeyError(f"unknown relation set: {name!r}")


def equivalence_class(relset, seed, max_size=10**6, max_len=None):
    """BFS closure of one word under a relation bundle.

    Raises ClosureBoundExceeded past ``max_size`` words.  ``max_len``
    truncates the closure for bundles whose relations change word length.
    """
    if max_len is None:
        max_len = relset.max_len
    seed = tuple(seed)
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for w in frontier:
            for _, other in relset.neighbors(w):
                if max_len is not None and len(other) > max_len:
                    continue
                if other not in seen:
                    seen.add(other)
                    nxt.append(other)
                    if len(seen) > max_size:
                        raise ClosureBoundExceeded(
                            f"class of {seed} exceeds {max_size} words")
        frontier = nxt
    return frozenset(seen)


# ---------------------------------------------------------------------------
# word graphs
# ---------------------------------------------------------------------------

@dataclass
class WordGraph:
    """Labeled graph on a fixed word set; parallel edge kinds are kept."""

    vertices: frozenset
    edges: dict = field(default_factory=dict)   # kind -> set of frozensets

    def adjacency(self):
        adj = {v: set() for v in self.vertices}
        for pairs in self.edges.values():
            for pair in pairs:
                a, b = tuple(pair)
                adj[a].add(b)
                adj[b].add(a)
        return adj


def word_graph(relset, vertices):
    """Edges of the relation bundle restricted to the given vertex set."""
    vertices = frozenset(tuple(v) for v in vertices)
    edges = {}
    for v in vertices:
        for kind, other in relset.neighbors(v):
            if other in vertices and other != v:
                edges.setdefault(kind, set()).add(frozenset((v, other)))
    return WordGraph(vertices, edges)


def graph_stats(graph):
    """Vertex/edge counts by kind, component count, and diameter.

    The diameter is the largest eccentricity within any component
    (breadth-first search from every vertex).
    """
    adj = graph.adjacency()
    seen = set()
    components = 0
    for v in graph.vertices:
        if v in seen:
            continue
        components += 1
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    diameter = 0
    for v in graph.vertices:
        dist = {v: 0}
        frontier = [v]
        d = 0
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = d + 1
                        nxt.append(w)
            frontier = nxt
            d += 1
        if dist:
            diameter = max(diameter, max(dist.values()))
    return {
        "vertices": len(graph.vertices),
        "edges": {kind: len(pairs) for kind, pairs in sorted(graph.edges.items())},
        "edge_count": sum(len(p) for p in graph.edges.values()),
        "components": components,
        "diameter": diameter,
    }


def to_dot(graph, label=None, name="words"):
    """DOT text; braid-type edges are gray, the rest use named colors."""
    if label is None:
        label = repr
    order = sorted(graph.vertices)
    ids = {v: f"w{i}" for i, v in enumerate(order)}
    lines = [f"graph {name} {{", "  node [shape=box];"]
    for v in order:
        lines.append(f'  {ids[v]} [label="{label(v)}"];')
    for kind in sorted(graph.edges):
        color = DOT_COLORS.get(kind, "black")
        for pair in sorted(graph.edges[kind], key=sorted):
            a, b = sorted(pair)
            lines.append(
                f'  {ids[a]} -- {ids[b]} [color={color}, label="{kind}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def is_simply_braided(system):
    """True iff no star-invariant parabolic has one of the four
    exceptional twisted types."""
    for J in _star_invariant_subsets(system, (3, 4)):
        label, _ = classify_twisted_type(system, J)
        if label.kind in MINIMAL_RELATIONS:
            return False
    return True
