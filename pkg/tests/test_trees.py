import pytest

from permact.trees import (
    MalformedPathError,
    Not231AvoidingError,
    all_dyck_paths,
    binary_tree,
    dyck_path,
    kreweras_stats,
    label_heights,
    odd_set,
    phi_cap,
    psi,
    psi_prime,
    psi_prime_recursive,
    redge_set,
    right_edge_depths,
    unordered_tree,
    veh,
    word_of,
)
from permact.words import all_permutations, descent_set, des
from permact.patterns import avoiding_permutations

W1 = (6, 5, 2, 4, 1, 9, 7, 3, 8)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_binary_tree_round_trip():
    for n in range(1, 7):
        for w in all_permutations(n):
            assert word_of(binary_tree(w)) == w


def test_right_edge_depths_fixture():
    assert right_edge_depths(W1) == {
        9: 0, 6: 0, 5: 1, 4: 2, 2: 2, 1: 3, 8: 1, 7: 1, 3: 2,
    }
    assert odd_set(W1) == frozenset({1, 5, 7, 8})


def test_redge_set_counts_descents():
    assert redge_set(W1) == frozenset({1, 3, 4, 5, 8})
    for n in range(1, 7):
        for w in all_permutations(n):
            assert len(redge_set(w)) == des(w)


def test_unordered_tree_heights_fixture():
    heights = label_heights(unordered_tree(W1))
    assert heights == {6: 1, 5: 2, 2: 3, 4: 3, 1: 4, 9: 1, 7: 2, 3: 3, 8: 2}
    assert {x for x, h in heights.items() if h % 2 == 0} == {1, 5, 7, 8}
    assert veh(W1) == 4


def test_veh_small():
    assert veh((1,)) == 0
    assert veh((2, 1)) == 1
    for n in range(1, 7):
        for w in all_permutations(n):
            assert veh(w) == len(odd_set(w))


def test_psi_phi_cap_are_inverse():
    for n in range(1, 6):
        for w in all_permutations(n):
            assert phi_cap(psi(w)) == w
            assert psi(phi_cap(w)) == w
            assert odd_set(w) == redge_set(psi(w))
            assert redge_set(w) == odd_set(phi_cap(w))


def test_psi_prime_matches_recursive():
    for n in range(1, 6):
        seen = set()
        for w in all_permutations(n):
            v = psi_prime(w)
            assert v == psi_prime_recursive(w)
            assert des(v) == veh(w)
            seen.add(v)
        assert len(seen) == len(list(all_permutations(n)))


def test_dyck_path_fixture():
    assert dyck_path((2, 1, 3)) == "uduudd"
    assert dyck_path((1,)) == "ud"
    with pytest.raises(Not231AvoidingError):
        dyck_path((2, 3, 1))


def test_dyck_path_is_a_bijection():
    for n in range(1, 7):
        image = sorted(dyck_path(w) for w in avoiding_permutations(n))
        assert image == sorted(all_dyck_paths(n))
        assert len(image) == CATALAN[n]


def test_kreweras_stats_fixtures():
    assert kreweras_stats("uduudd") == (1, 1)
    assert kreweras_stats("ududud") == (0, 0)
    assert kreweras_stats("uuuddd") == (1, 2)


@pytest.mark.parametrize("path", ["udx", "uuddu", "du", "uudddu", "u"])
def test_kreweras_stats_rejects_malformed(path):
    with pytest.raises(MalformedPathError):
        kreweras_stats(path)


def test_path_statistics_translate():
    for n in range(1, 6):
        for w in avoiding_permutations(n):
            even_up, double_up = kreweras_stats(dyck_path(w))
            assert even_up == veh(w)
            assert double_up == des(w)


def test_path_statistics_equidistributed():
    for n in range(1, 7):
        dist_even: dict[int, int] = {}
        dist_double: dict[int, int] = {}
        for p in all_dyck_paths(n):
            even_up, double_up = kreweras_stats(p)
            dist_even[even_up] = dist_even.get(even_up, 0) + 1
            dist_double[double_up] = dist_double.get(double_up, 0) + 1
        assert dist_even == dist_double
