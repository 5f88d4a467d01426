import pytest

from permact.polynomials import (
    GammaExpansion,
    IntPolynomial,
    NoExpansionError,
    NotSymmetricError,
    gamma_expand,
    gessel_expand,
    h_from_f,
    latex_gamma_form,
    latex_poly,
    one_plus,
    q_factorial,
    try_divide,
    uni,
)
from permact.words import all_permutations, des

T = IntPolynomial.variable("t")


def test_arithmetic():
    assert ((1 + T) ** 3).coeffs_list() == [1, 3, 3, 1]
    assert (T - T).is_zero()
    assert (1 - T) * (1 + T) == 1 - T**2
    assert T**0 == IntPolynomial.constant(("t",), 1)
    with pytest.raises(ValueError):
        T ** (-1)


def test_variable_mismatch_raises():
    q = IntPolynomial.variable("q")
    with pytest.raises(ValueError):
        T + q


def test_coefficient_and_degree():
    p = IntPolynomial(("p", "t"), {(2, 1): 3, (0, 0): 1})
    assert p.coefficient((2, 1)) == 3
    assert p.coefficient((1, 1)) == 0
    assert p.degree("t") == 1
    assert p.degree("p") == 2
    assert p.degree() == 3
    with pytest.raises(ValueError):
        p.coeffs_list()


def test_uni_and_one_plus():
    assert uni([1, 2, 1]) == (1 + T) ** 2
    assert one_plus() == 1 + T
    assert str(uni([1, 2, 1])) == "1 + 2t + t^2"
    assert str(uni([0])) == "0"


def test_substitute():
    q = IntPolynomial.variable("q")
    p = IntPolynomial(("p", "q", "t"), {(1, 0, 1): 1, (0, 0, 0): 1})
    assert p.substitute({"p": q**2, "q": q, "t": q}) == 1 + q**3


def test_swap_vars():
    p = IntPolynomial(("p", "q"), {(2, 1): 5})
    assert p.swap_vars("p", "q") == IntPolynomial(("p", "q"), {(1, 2): 5})


def test_json_round_trip():
    p = IntPolynomial(("p", "q", "t"), {(1, 2, 0): -3, (0, 0, 4): 7})
    assert IntPolynomial.from_json_dict(p.to_json_dict()) == p


def test_gamma_expand_fixtures():
    assert gamma_expand(uni([1, 11, 11, 1]), 3).gamma == (1, 8)
    assert gamma_expand(uni([1]), 0).gamma == (1,)
    got = gamma_expand(uni([1, 4, 1]), 2)
    assert got == GammaExpansion(d=2, gamma=(1, 2))
    assert got.reconstruct() == uni([1, 4, 1])
    assert got.is_nonnegative()


def test_gamma_expand_rejects_asymmetric():
    with pytest.raises(NotSymmetricError):
        gamma_expand(uni([1, 2]), 2)
    with pytest.raises(NotSymmetricError):
        gamma_expand(uni([1, 1, 1]), 1)


def test_gamma_round_trip_on_descent_polynomials():
    for n in range(1, 8):
        counts = [0] * n
        for w in all_permutations(n):
            counts[des(w)] += 1
        poly = uni(counts)
        assert gamma_expand(poly, n - 1).reconstruct() == poly


def test_gessel_expand_basics():
    s = IntPolynomial.variable("s", ("s", "t"))
    t = IntPolynomial.variable("t", ("s", "t"))
    got = gessel_expand(s + t, 2)
    assert got.coeffs == {(1, 0): 1}
    assert got.negative_entries() == []
    assert got.reconstruct() == s + t
    assert gessel_expand(1 + s * t, 2).coeffs == {(0, 0): 1}
    # joint descent distribution of S_3 against the identity
    dist3 = 1 + 4 * s * t + s**2 * t**2
    assert gessel_expand(dist3, 3).coeffs == {(0, 0): 1, (0, 1): 2}


def test_gessel_expand_no_expansion():
    s = IntPolynomial.variable("s", ("s", "t"))
    with pytest.raises(NoExpansionError):
        gessel_expand(s, 2)
    with pytest.raises(ValueError):
        gessel_expand(T, 2)


def test_h_from_f():
    # boundary of a square: 4 vertices, 4 edges
    assert h_from_f((1, 4, 4), 2) == (1, 2, 1)
    # boundary of an octahedron
    assert h_from_f((1, 6, 12, 8), 3) == (1, 3, 3, 1)
    with pytest.raises(ValueError):
        h_from_f((1, 4), 2)
    with pytest.raises(ValueError):
        h_from_f((2, 4, 4), 2)


def test_q_factorial():
    assert q_factorial(0) == IntPolynomial.constant(("q",), 1)
    assert q_factorial(3).coeffs_list() == [1, 2, 2, 1]
    assert q_factorial(5).degree() == 10


def test_try_divide():
    f = (1 + T) ** 2
    assert try_divide(f, 1 + T) == 1 + T
    assert try_divide(f, T) is None
    assert try_divide(f, uni([1, 1, 1])) is None
    with pytest.raises(ValueError):
        try_divide(f, 2 * T)
    with pytest.raises(ZeroDivisionError):
        try_divide(f, uni([0]))


def test_latex_output():
    assert latex_poly((1 + T) ** 2) == "t^2 + 2t + 1"
    form = latex_gamma_form((1, 8), 3)
    assert "(1+t)^3" in form and "8" in form
