import pytest

from permact.patterns import (
    apq_polynomial,
    avoiders,
    avoiding_permutations,
    avoids_231,
    bni_polynomial,
    check_divisibility,
    check_mahonian,
    check_pq_symmetry,
    count_13_2,
    count_13_2_via_runs,
    count_2_31,
    count_2_31_via_runs,
    narayana,
)
from permact.polynomials import IntPolynomial
from permact.words import all_permutations

W0 = (5, 7, 3, 1, 4, 8, 9, 2, 6)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def brute_2_31(w):
    n = len(w)
    return sum(
        1
        for i in range(n)
        for j in range(i + 1, n - 1)
        if w[j] > w[i] > w[j + 1]
    )


def brute_13_2(w):
    n = len(w)
    return sum(
        1
        for i in range(n - 1)
        for j in range(i + 2, n)
        if w[i] < w[j] < w[i + 1]
    )


def test_pattern_count_fixtures():
    assert count_2_31((2, 3, 1)) == 1
    assert count_13_2((1, 3, 2)) == 1
    assert count_2_31(W0) == 6
    assert count_13_2(W0) == 3


def test_pattern_counts_match_brute_force():
    for n in range(1, 7):
        for w in all_permutations(n):
            assert count_2_31(w) == brute_2_31(w)
            assert count_13_2(w) == brute_13_2(w)
            assert count_2_31_via_runs(w) == count_2_31(w)
            assert count_13_2_via_runs(w) == count_13_2(w)


def test_avoids_231():
    assert avoids_231((1, 3, 2))
    assert not avoids_231((2, 3, 1))
    for n in range(1, 7):
        for w in all_permutations(n):
            brute = not any(
                w[k] < w[i] < w[j]
                for i in range(n)
                for j in range(i + 1, n)
                for k in range(j + 1, n)
            )
            assert avoids_231(w) == brute


def test_avoider_counts_are_catalan():
    for n in range(1, 9):
        found = list(avoiding_permutations(n))
        assert len(found) == CATALAN[n]
        assert set(found) == set(avoiders(range(1, n + 1)))


def _pqt(name):
    return IntPolynomial.variable(name, ("p", "q", "t"))


def test_apq_polynomial_small():
    p, q, t = _pqt("p"), _pqt("q"), _pqt("t")
    assert apq_polynomial(1) == t**0
    assert apq_polynomial(2) == 1 + t
    assert apq_polynomial(3) == (1 + t) ** 2 + (p + q) * t


def test_bni_polynomial():
    pq = IntPolynomial.variable("p", ("p", "q")) + IntPolynomial.variable(
        "q", ("p", "q")
    )
    assert bni_polynomial(3, 0) == pq**0
    assert bni_polynomial(3, 1) == pq
    assert bni_polynomial(4, 1) == pq * (pq + 2)


def test_distribution_checks():
    for n in range(1, 7):
        assert check_pq_symmetry(n)
        assert check_mahonian(n)
        assert check_divisibility(n)


NARAYANA_ROWS = {
    1: [1],
    2: [1, 1],
    3: [1, 3, 1],
    4: [1, 6, 6, 1],
    5: [1, 10, 20, 10, 1],
    6: [1, 15, 50, 50, 15, 1],
}


@pytest.mark.parametrize("n", sorted(NARAYANA_ROWS))
def test_narayana_rows(n):
    poly, gamma = narayana(n)
    assert poly.coeffs_list() == NARAYANA_ROWS[n]
    assert gamma.reconstruct() == poly
    assert sum(poly.coeffs_list()) == CATALAN[n]


def test_narayana_gamma_fixture():
    assert narayana(5)[1].gamma == (1, 6, 2)
