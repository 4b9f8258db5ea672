import pytest

from coxword.system import InvalidWindow, NotInvolution, registry_system
from coxword.elements import from_window
from coxword.involutions import (
    TwistedInvolution,
    fold_word,
    hecke_atoms,
    identity_involution,
    involution_words,
    is_commutation_step,
    primed_words,
    twisted_involutions,
    underline_act,
)
from coxword.rewriting import prime_free
from coxword.type_a import (
    alpha_min,
    atom_pattern_class,
    atom_pattern_neighbors,
    forbidden_subwords,
    is_commutation_by_fixed_points,
    sim_a_neighbors,
    sim_a_unprimed_neighbors,
    window_from_sequence,
)


def closure(seed, nbrs):
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for w in frontier:
            for o in nbrs(w):
                if o not in seen:
                    seen.add(o)
                    nxt.append(o)
        frontier = nxt
    return frozenset(seen)


def test_needs_trivial_star():
    with pytest.raises(NotInvolution):
        list(sim_a_neighbors(registry_system("2A3"), ((0, False),)))
    with pytest.raises(NotInvolution):
        alpha_min(fold_word(registry_system("H3").generic_twin(), (0,)))


def test_alpha_min_worked_example():
    # z = s2 s3 s2 = (2,5)(3,4) in S_5 gives the interleaved sequence
    # 5,2,4,3 with 1 in front, so alpha_min is the inverse of [5,1,4,2,3]
    # after dedup -- its window is (1,3,4,2,5)
    a4 = registry_system("A4")
    z = fold_word(a4, (1, 2, 1))
    am = alpha_min(z)
    assert am.window == (1, 3, 4, 2, 5)
    assert am in hecke_atoms(z)


def test_alpha_min_identity_and_validation():
    a3 = registry_system("A3")
    e = identity_involution(a3)
    assert alpha_min(e).is_identity()
    w = from_window(a3, (2, 3, 1, 4))  # a 3-cycle, not an involution
    with pytest.raises(NotInvolution):
        alpha_min(w)


def test_window_from_sequence():
    a4 = registry_system("A4")
    w = window_from_sequence((5, 1, 4, 2, 3), a4)
    assert w.window == (5, 1, 4, 2, 3)
    with pytest.raises(InvalidWindow):
        window_from_sequence((1, 1, 2, 3, 4), a4)
    aff = registry_system("affA2")
    # entries distinct mod 3 with the right sum, shifted off [1..3]
    w = window_from_sequence((2, 0, 4), aff)
    assert sorted(v % 3 for v in w.window) == [0, 1, 2]


def test_atom_pattern_closure_matches_atoms():
    for name in ("A3", "A4"):
        system = registry_system(name)
        for z in twisted_involutions(system):
            atoms = hecke_atoms(z)
            assert atom_pattern_class(alpha_min(z)) == atoms


def test_atom_pattern_closure_affine():
    aff = registry_system("affA2")
    for z in twisted_involutions(aff, rho_bound=4):
        if z.length() > 5:
            continue
        assert atom_pattern_class(alpha_min(z)) == hecke_atoms(z)


def test_pattern_moves_stay_within_atoms():
    a4 = registry_system("A4")
    z = fold_word(a4, (1, 2, 1))
    atoms = hecke_atoms(z)
    for x in atoms:
        for y in atom_pattern_neighbors(x):
            assert y in atoms


def test_local_moves_span_word_sets():
    a3 = registry_system("A3")
    for z in twisted_involutions(a3):
        seed = min(involution_words(z))
        got = closure(seed, lambda w: sim_a_unprimed_neighbors(a3, w))
        assert got == involution_words(z)
        got = closure(prime_free(seed), lambda w: sim_a_neighbors(a3, w))
        assert got == primed_words(z)


def test_forbidden_subwords_clean_on_real_words():
    a3 = registry_system("A3")
    for z in twisted_involutions(a3):
        for w in primed_words(z):
            assert forbidden_subwords(a3, w) == []


def test_forbidden_subwords_flag_bad_patterns():
    a3 = registry_system("A3")
    double = ((0, False), (0, False))
    assert forbidden_subwords(a3, double)
    initial_aba = ((0, False), (1, False), (0, False))
    assert forbidden_subwords(a3, initial_aba)
    inner_prime = ((1, False), (0, False), (1, True), (0, False))
    # the 010 block starting at index 1 has a primed inner letter
    assert any("prime" in why for _, why in
               forbidden_subwords(a3, inner_prime))
    commuting_aba = ((1, False), (0, False), (2, False), (0, False))
    assert any("commuting" in why for _, why in
               forbidden_subwords(a3, commuting_aba))


def test_commutation_fixed_point_criterion():
    for name in ("A3", "A4"):
        system = registry_system(name)
        for z in twisted_involutions(system):
            for a in involution_words(z):
                y = identity_involution(system)
                for s in a:
                    assert is_commutation_step(y, s) == \
                        is_commutation_by_fixed_points(y.elem, s)
                    y = underline_act(y, s)
