import pytest

from coxword.system import registry_system
from coxword.elements import from_word, longest_element
from coxword.involutions import (
    NotInvolutionWord,
    TwistedInvolution,
    commutation_count,
    commutations,
    fold_word,
    hecke_atoms,
    hecke_words,
    identity_involution,
    involution_words,
    m_twisted_ad,
    min_atom,
    primed_words,
    reduced_hecke_words,
    rho,
    twisted_involutions,
    underline_act,
)
from coxword.wordio import format_word


def test_twisted_involution_validation():
    a3 = registry_system("2A3")
    with pytest.raises(NotInvolutionWord):
        TwistedInvolution(from_word(a3, (0,)))  # s1* = s3 != s1
    z = fold_word(a3, (1,))
    assert z.length() == 1  # s2 is star-fixed, so s2-bar acts by right mult
    z = fold_word(a3, (0,))
    assert z.length() == 2  # s1* != s1: s1-bar acts by twisted conjugation
    plain = registry_system("A3")
    assert fold_word(plain, (0,)).length() == 1


def test_underline_action_cases():
    a3 = registry_system("A3")
    e = identity_involution(a3)
    z = underline_act(e, 0)  # s*z = zs, so z s-bar = zs
    assert z.length() == 1
    z2 = underline_act(z, 1)  # s*z != zs: conjugate
    assert z2.length() == 3
    assert underline_act(z2, 1) == z  # descent undoes
    twisted = registry_system("2A3")
    z = underline_act(identity_involution(twisted), 1)
    assert z.length() == 1  # s2 is star-fixed


def test_fig1_involution_words():
    twisted = registry_system("2A3")
    z = fold_word(twisted, (1, 0, 1, 2))
    assert z.elem.window == (4, 3, 2, 1)
    words = involution_words(z)
    texts = {format_word(w) for w in words}
    assert texts == {"2123", "1213", "1231", "3213", "3231",
                     "2321", "2312", "2132"}
    assert rho(z) == 4
    assert commutation_count(z) == 2 * 4 - 6


def test_involution_word_counts_small():
    a3 = registry_system("A3")
    z0 = TwistedInvolution(longest_element(a3))
    assert rho(z0) == 4
    assert len(involution_words(z0)) == 8
    assert commutation_count(z0) == 2


def test_commutations():
    a3 = registry_system("A3")
    z = fold_word(a3, (0, 2))
    c = commutations((0, 2), z)
    assert c == {0, 1}
    z0 = TwistedInvolution(longest_element(a3))
    for w in involution_words(z0):
        assert len(commutations(w, z0)) == commutation_count(z0)
    with pytest.raises(NotInvolutionWord):
        commutations((0, 0), z)
    with pytest.raises(NotInvolutionWord):
        commutations((0, 2), z0)


def test_primed_word_cardinality():
    for name in ("A3", "2A3", "BC3"):
        system = registry_system(name)
        for z in twisted_involutions(system):
            assert len(primed_words(z)) == \
                2 ** commutation_count(z) * len(involution_words(z))


def test_primed_words_structure():
    a1 = registry_system("A1")
    z = fold_word(a1, (0,))
    assert primed_words(z) == frozenset({((0, False),), ((0, True),)})


def test_hecke_atoms_counts():
    expected = {"2A3": 7, "BC3": 13, "D4": 29, "H3": 37}
    for name, count in expected.items():
        system = registry_system(name)
        z0 = TwistedInvolution(longest_element(system))
        atoms = hecke_atoms(z0)
        assert len(atoms) == count
        for w in atoms:
            assert w.length() <= z0.length()
        assert min_atom(z0) in atoms


def test_reduced_hecke_words_union():
    a3 = registry_system("2A3")
    z = TwistedInvolution(longest_element(a3))
    words = reduced_hecke_words(z)
    assert involution_words(z) <= words
    lengths = {len(w) for w in words}
    assert min(lengths) == rho(z)


def test_hecke_words_truncated():
    a3 = registry_system("2A3")
    z = fold_word(a3, (1,))
    words = hecke_words(z, z.length() + 2)
    assert min(involution_words(z)) in words
    assert all(len(w) <= z.length() + 2 for w in words)
    # every reduced involution Hecke word appears
    assert reduced_hecke_words(z) <= words


def test_enumeration_by_rho():
    aff = registry_system("affA2")
    tis = twisted_involutions(aff, rho_bound=4)
    assert all(r <= 4 for r in tis.values())
    assert identity_involution(aff) in tis
    for z, r in tis.items():
        assert rho(z) == r


def test_m_twisted_ad_matches_star():
    # for z = identity, Ad*_z is just the star map
    twisted = registry_system("2A3")
    e = identity_involution(twisted)
    assert m_twisted_ad(e, 0, 2) == 1   # m=2, star swaps 1,3
    assert m_twisted_ad(e, 0, 1) == 3   # star moves s1 off the pair
    plain = registry_system("A3")
    e = identity_involution(plain)
    assert m_twisted_ad(e, 0, 1) == 2   # odd order, trivial star
    assert m_twisted_ad(e, 0, 2) == 2   # even order, both fixed
