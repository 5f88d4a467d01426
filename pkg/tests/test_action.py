import pytest

from permact.action import (
    LetterNotPresentError,
    NonIntegralBError,
    class_polys,
    orbit,
    orbit_members,
    phi_closure,
    phi_prime_full,
    phi_prime_S,
    phi_prime_x,
    phi_S,
    phi_x,
    x_factorization,
)
from permact.polynomials import uni
from permact.words import LetterClass, all_permutations, classify, des

W0 = (5, 7, 3, 1, 4, 8, 9, 2, 6)


def test_x_factorization_fixtures():
    assert x_factorization(W0, 8) == ((), (5, 7, 3, 1, 4), 8, (), (9, 2, 6))
    assert x_factorization(W0, 7) == ((), (5,), 7, (3, 1, 4), (8, 9, 2, 6))
    assert x_factorization(W0, 4) == ((5, 7), (3, 1), 4, (), (8, 9, 2, 6))
    assert x_factorization(W0, 2) == ((5, 7, 3, 1, 4, 8, 9), (), 2, (), (6,))
    with pytest.raises(LetterNotPresentError):
        x_factorization(W0, 10)


def test_phi_x_fixtures():
    assert phi_x(W0, 8) == (8, 5, 7, 3, 1, 4, 9, 2, 6)
    # valleys have both side blocks empty, so nothing moves
    assert phi_x(W0, 1) == W0


def test_phi_x_involution_and_commutation():
    for n in range(1, 6):
        for w in all_permutations(n):
            for x in range(1, n + 1):
                assert phi_x(phi_x(w, x), x) == w
            for x in range(1, n + 1):
                for y in range(1, n + 1):
                    assert phi_x(phi_x(w, x), y) == phi_x(phi_x(w, y), x)


def test_phi_prime_fixtures():
    # double ascents hop left, double descents hop right
    assert phi_prime_x(W0, 4) == (5, 7, 4, 3, 1, 8, 9, 2, 6)
    assert phi_prime_x(W0, 3) == (5, 7, 1, 3, 4, 8, 9, 2, 6)
    assert phi_prime_x(W0, 7) == W0
    assert phi_prime_x(W0, 5) == W0


def test_phi_prime_matches_phi_off_peaks():
    for n in range(1, 7):
        for w in all_permutations(n):
            classes = classify(w)
            for x in range(1, n + 1):
                cls = classes[w.index(x)]
                if cls is LetterClass.PEAK:
                    assert phi_prime_x(w, x) == w
                elif cls is LetterClass.VALLEY:
                    assert phi_prime_x(w, x) == w == phi_x(w, x)
                else:
                    assert phi_prime_x(w, x) == phi_x(w, x)


def test_subset_maps_compose():
    assert phi_S(W0, (8,)) == phi_x(W0, 8)
    assert phi_S(W0, (3, 4)) == phi_x(phi_x(W0, 3), 4)
    assert phi_prime_S(W0, (3, 4)) == phi_prime_x(phi_prime_x(W0, 3), 4)
    assert phi_prime_full(W0) == phi_prime_S(W0, range(1, 10))


def test_orbit_small():
    rep = orbit((2, 1))
    assert set(rep.members) == {(1, 2), (2, 1)}
    assert rep.rep == (1, 2)
    assert rep.peak == 0
    assert rep.descent_poly == uni([1, 1])
    assert rep.gamma_claim.gamma == (1,)


def test_orbit_fixture_word():
    rep = orbit(W0)
    # two double ascents move freely on each side of each peak: 2^4 members
    assert len(rep.members) == 16
    assert rep.peak == 2
    assert rep.descent_poly == uni([0, 0, 1]) * uni([1, 1]) ** 4
    for member in rep.members:
        assert classify(member).count(LetterClass.PEAK) == 2
    assert all(
        cls is not LetterClass.DOUBLE_DESCENT for cls in classify(rep.rep)
    )


def test_orbit_members_vs_phi_closure():
    w = (1, 3, 2)
    assert orbit_members(w) == {(1, 3, 2)}
    closure = phi_closure(w)
    assert closure >= {(1, 3, 2), (2, 3, 1)}
    for member in closure:
        for x in (1, 2, 3):
            assert phi_x(member, x) in closure


def test_class_polys_full_symmetric_group():
    cp = class_polys(all_permutations(3))
    assert cp.b == (1, 2)
    counts = [0, 0, 0]
    for w in all_permutations(3):
        counts[des(w)] += 1
    assert cp.W == uni(counts)


def test_class_polys_single_orbit():
    rep = orbit(W0)
    cp = class_polys(rep.members)
    assert cp.W == rep.descent_poly


def test_class_polys_rejects_non_invariant_input():
    with pytest.raises((NonIntegralBError, ValueError)):
        class_polys([(1, 2)])
