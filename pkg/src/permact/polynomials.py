"""Exact sparse polynomials over the integers, and the basis changes used
throughout the package: gamma expansions, the bivariate (s+t)/(st) basis,
h-vector extraction, and q-factorials.

All arithmetic is exact; there are no floats anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class NotSymmetricError(ValueError):
    """Coefficient sequence is not palindromic about the requested degree."""


class NonzeroRemainderError(ArithmeticError):
    """A peel-off expansion terminated with a nonzero remainder."""


class NoExpansionError(ArithmeticError):
    """The linear system for a basis expansion has no (unique) solution."""


class NonIntegralError(ArithmeticError):
    """An exact division or solve produced a non-integer where one was required."""


class IntPolynomial:
    """Sparse polynomial with integer coefficients in named variables.

    Terms are stored as a dict mapping exponent tuples to nonzero integer
    coefficients; the exponent tuple is aligned with ``vars``.

    >>> t = IntPolynomial.variable("t")
    >>> str((1 + t) ** 2)
    '1 + 2t + t^2'
    """

    __slots__ = ("vars", "terms")

    def __init__(
        self,
        variables: Iterable[str],
        terms: Mapping[tuple[int, ...], int] | Iterable[tuple[tuple[int, ...], int]] = (),
    ):
        self.vars: tuple[str, ...] = tuple(variables)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, ...], int] = {}
        for exps, c in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.vars):
                raise ValueError(f"exponent tuple {exps} does not match vars {self.vars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = int(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables: Iterable[str]) -> "IntPolynomial":
        return cls(variables)

    @classmethod
    def constant(cls, variables: Iterable[str], c: int) -> "IntPolynomial":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): int(c)})

    @classmethod
    def variable(cls, name: str, variables: Iterable[str] | None = None) -> "IntPolynomial":
        variables = (name,) if variables is None else tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if sum(exps) != 1:
            raise ValueError(f"{name!r} does not occur exactly once in {variables}")
        return cls(variables, {exps: 1})

    @classmethod
    def from_counts(
        cls, variables: Iterable[str], counts: Mapping[tuple[int, ...], int]
    ) -> "IntPolynomial":
        """Wrap an accumulated {exponents: count} dict without copying per-term."""
        return cls(variables, counts)

    # -- ring operations ----------------------------------------------

    def _coerce(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return IntPolynomial.constant(self.vars, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return IntPolynomial(self.vars, terms)

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> "IntPolynomial":
        return (-self) + other

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return IntPolynomial(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == IntPolynomial.constant(self.vars, other).terms
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    # -- inspection -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    def degree(self, var: str | None = None) -> int:
        """Max exponent of var (total degree if var is None); zero poly -> -1."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def coeffs_list(self) -> list[int]:
        """Dense coefficient list [c_0, ..., c_d] for a univariate polynomial."""
        if len(self.vars) != 1:
            raise ValueError("coeffs_list is for univariate polynomials")
        d = self.degree()
        return [self.terms.get((i,), 0) for i in range(d + 1)]

    def substitute(self, assignment: Mapping[str, "IntPolynomial"]) -> "IntPolynomial":
        """Simultaneously replace every variable by a polynomial.

        All images must share one variable tuple, which becomes the result's.

        >>> p, q = (IntPolynomial.variable(v, ("p", "q")) for v in "pq")
        >>> qq = IntPolynomial.variable("q")
        >>> str((p + q).substitute({"p": qq, "q": qq}))
        '2q'
        """
        missing = [v for v in self.vars if v not in assignment]
        if missing:
            raise ValueError(f"no image given for {missing}")
        images = [assignment[v] for v in self.vars]
        target = images[0].vars if images else ()
        for img in images:
            if img.vars != target:
                raise ValueError("images must share a single variable tuple")
        result = IntPolynomial.zero(target)
        powers: dict[tuple[int, int], IntPolynomial] = {}
        for exps, c in sorted(self.terms.items()):
            term = IntPolynomial.constant(target, c)
            for slot, e in enumerate(exps):
                if e:
                    key = (slot, e)
                    if key not in powers:
                        powers[key] = images[slot] ** e
                    term = term * powers[key]
            result = result + term
        return result

    def swap_vars(self, a: str, b: str) -> "IntPolynomial":
        """Exchange two variables, keeping the variable tuple fixed."""
        i, j = self.vars.index(a), self.vars.index(b)
        terms = {}
        for exps, c in self.terms.items():
            e = list(exps)
            e[i], e[j] = e[j], e[i]
            terms[tuple(e)] = c
        return IntPolynomial(self.vars, terms)

    # -- serialization ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"e": list(e), "c": c} for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "IntPolynomial":
        return cls(tuple(data["vars"]), {tuple(t["e"]): int(t["c"]) for t in data["terms"]})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in sorted(self.terms.items()):
            body = "".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.vars, exps)
                if e
            )
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{c}{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"IntPolynomial({self.vars!r}, {dict(sorted(self.terms.items()))!r})"


def uni(coeffs: Sequence[int], var: str = "t") -> IntPolynomial:
    """Univariate polynomial from a dense coefficient list (constant first)."""
    return IntPolynomial((var,), {(i,): c for i, c in enumerate(coeffs)})


def one_plus(var: str = "t") -> IntPolynomial:
    return uni([1, 1], var)


# -- gamma expansion ----------------------------------------------------


@dataclass(frozen=True)
class GammaExpansion:
    """p(t) = sum_i gamma_i t^i (1+t)^(d-2i), for a palindrome of center d/2."""

    d: int
    gamma: tuple[int, ...]

    def reconstruct(self, var: str = "t") -> IntPolynomial:
        t = IntPolynomial.variable(var)
        acc = IntPolynomial.zero((var,))
        for i, g in enumerate(self.gamma):
            acc = acc + g * t**i * one_plus(var) ** (self.d - 2 * i)
        return acc

    def is_nonnegative(self) -> bool:
        return all(g >= 0 for g in self.gamma)

    def to_json_dict(self) -> dict:
        return {"d": self.d, "gamma": list(self.gamma)}


def gamma_expand(p: IntPolynomial, d: int) -> GammaExpansion:
    """Expand a palindromic univariate polynomial in the t^i (1+t)^(d-2i) basis.

    >>> gamma_expand(uni([1, 11, 11, 1]), 3).gamma
    (1, 8)
    """
    if len(p.vars) != 1:
        raise ValueError("gamma_expand needs a univariate polynomial")
    if d < 0:
        raise ValueError("d must be nonnegative")
    var = p.vars[0]
    coeffs = [p.terms.get((i,), 0) for i in range(max(d, p.degree()) + 1)]
    if len(coeffs) > d + 1 and any(coeffs[d + 1 :]):
        raise NotSymmetricError(f"degree exceeds d={d}")
    coeffs = coeffs[: d + 1]
    if coeffs != coeffs[::-1]:
        raise NotSymmetricError(f"coefficients {coeffs} are not palindromic for d={d}")
    remainder = p
    gamma = []
    for i in range(d // 2 + 1):
        g = remainder.terms.get((i,), 0)
        gamma.append(g)
        if g:
            remainder = remainder - g * uni([0] * i + [1], var) * one_plus(var) ** (d - 2 * i)
    if not remainder.is_zero():
        raise NonzeroRemainderError(f"nonzero remainder {remainder} after peeling")
    while gamma and gamma[-1] == 0:
        gamma.pop()
    if not gamma:
        gamma = [0]
    return GammaExpansion(d, tuple(gamma))


# -- bivariate (s+t)^k (st)^j (1+st)^(n-k-1-2j) expansion -----------------


@dataclass(frozen=True)
class GesselExpansion:
    """F(s,t) = sum c[(k,j)] (s+t)^k (st)^j (1+st)^(n-k-1-2j)."""

    n: int
    coeffs: dict[tuple[int, int], int]

    def reconstruct(self) -> IntPolynomial:
        acc = IntPolynomial.zero(("s", "t"))
        for (k, j), c in sorted(self.coeffs.items()):
            acc = acc + c * _gessel_basis(self.n, k, j)
        return acc

    def negative_entries(self) -> list[tuple[int, int, int]]:
        return [(k, j, c) for (k, j), c in sorted(self.coeffs.items()) if c < 0]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "coeffs": [{"k": k, "j": j, "c": c} for (k, j), c in sorted(self.coeffs.items())],
        }


def _gessel_pairs(n: int) -> list[tuple[int, int]]:
    return [(k, j) for j in range((n - 1) // 2 + 1) for k in range(n - 2 * j)]


def _gessel_basis(n: int, k: int, j: int) -> IntPolynomial:
    s = IntPolynomial.variable("s", ("s", "t"))
    t = IntPolynomial.variable("t", ("s", "t"))
    one = IntPolynomial.constant(("s", "t"), 1)
    return (s + t) ** k * (s * t) ** j * (one + s * t) ** (n - k - 1 - 2 * j)


def gessel_expand(F: IntPolynomial, n: int) -> GesselExpansion:
    """Solve exactly for the coefficients of F in the (s+t)^k (st)^j (1+st)^... basis.

    Raises NoExpansionError if the system is inconsistent (or, defensively, if
    the basis were dependent) and NonIntegralError if a coefficient is not an
    integer.  Zero coefficients are dropped.

    >>> s, t = (IntPolynomial.variable(v, ("s", "t")) for v in "st")
    >>> gessel_expand(1 + s * t, 2).coeffs
    {(0, 0): 1}
    """
    if F.vars != ("s", "t"):
        raise ValueError("expected a polynomial in vars ('s', 't')")
    pairs = _gessel_pairs(n)
    basis = [_gessel_basis(n, k, j) for k, j in pairs]
    monomials = sorted(set(itertools.chain(F.terms, *(b.terms for b in basis))))
    # rows: one equation per monomial; columns: one unknown per basis element
    rows = [
        [Fraction(b.terms.get(m, 0)) for b in basis] + [Fraction(F.terms.get(m, 0))]
        for m in monomials
    ]
    ncols = len(pairs)
    pivot_of_col: dict[int, int] = {}
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivot_of_col[col] = r
        r += 1
    for i in range(r, len(rows)):
        if rows[i][ncols] != 0:
            raise NoExpansionError(f"no expansion exists for n={n}")
    if len(pivot_of_col) < ncols:
        raise NoExpansionError(f"basis is linearly dependent at n={n}; expansion ambiguous")
    values = {}
    for col, (k, j) in enumerate(pairs):
        val = rows[pivot_of_col[col]][ncols]
        if val.denominator != 1:
            raise NonIntegralError(f"coefficient c[{k},{j}] = {val} is not an integer")
        if val:
            values[(k, j)] = int(val)
    expansion = GesselExpansion(n, values)
    if expansion.reconstruct() != F:
        raise NoExpansionError("internal: reconstruction mismatch after solve")
    return expansion


# -- h-vector from f-vector ----------------------------------------------


def h_from_f(f: Sequence[int], d: int) -> tuple[int, ...]:
    """Solve sum h_i t^i (1+t)^(d-i) = sum f_(i-1) t^i triangularly.

    The input lists f_(-1), f_0, ..., f_(d-1) with f_(-1) = 1.

    >>> h_from_f([1, 4, 4], 2)
    (1, 2, 1)
    """
    f = [int(x) for x in f]
    if len(f) != d + 1:
        raise ValueError(f"need d+1={d + 1} entries, got {len(f)}")
    if f[0] != 1:
        raise ValueError("f_(-1) must be 1")
    rhs = uni(f)
    h = []
    remainder = rhs
    for i in range(d + 1):
        hi = remainder.terms.get((i,), 0)
        h.append(hi)
        if hi:
            remainder = remainder - hi * uni([0] * i + [1]) * one_plus() ** (d - i)
    if not remainder.is_zero():
        raise NonzeroRemainderError(f"nonzero remainder {remainder}")
    return tuple(h)


# -- q-analogues ----------------------------------------------------------


def q_factorial(n: int, var: str = "q") -> IntPolynomial:
    """[n]_q! = prod_k (1 + q + ... + q^(k-1)).

    >>> str(q_factorial(3))
    '1 + 2q + 2q^2 + q^3'
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = IntPolynomial.constant((var,), 1)
    for k in range(1, n + 1):
        acc = acc * uni([1] * k, var)
    return acc


# -- exact division --------------------------------------------------------


def try_divide(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial | None:
    """Exact polynomial division: return q with f = q*g, or None.

    Reduction is by the lex-leading term of g, so it needs g's leading
    coefficient to be 1 or -1 (true for the divisors used here, e.g. p + q).
    """
    if f.vars != g.vars:
        raise ValueError("variable mismatch")
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    lead = max(g.terms)
    lc = g.terms[lead]
    if lc not in (1, -1):
        raise ValueError("divisor must have lex-leading coefficient +-1")
    quotient: dict[tuple[int, ...], int] = {}
    rem = f
    while not rem.is_zero():
        rlead = max(rem.terms)
        diff = tuple(a - b for a, b in zip(rlead, lead))
        if any(e < 0 for e in diff):
            return None
        c = rem.terms[rlead] * lc  # lc is +-1 so this is exact
        quotient[diff] = quotient.get(diff, 0) + c
        rem = rem - IntPolynomial(f.vars, {diff: c}) * g
    return IntPolynomial(f.vars, quotient)


# -- LaTeX rendering --------------------------------------------------------


def _latex_power(base: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return base
    return f"{base}^{e}" if e < 10 else f"{base}^{{{e}}}"


def latex_poly(p: IntPolynomial) -> str:
    """Deterministic LaTeX-ish rendering: terms sorted by descending exponents."""
    if not p.terms:
        return "0"
    parts = []
    for exps, c in sorted(p.terms.items(), reverse=True):
        body = "".join(_latex_power(v, e) for v, e in zip(p.vars, exps) if e)
        if not body:
            parts.append(str(c))
        elif c == 1:
            parts.append(body)
        elif c == -1:
            parts.append("-" + body)
        else:
            parts.append(f"{c}{body}")
    out = " + ".join(parts)
    return out.replace("+ -", "- ")


def latex_gamma_form(
    bs: Sequence[IntPolynomial | int], d: int, tvar: str = "t"
) -> str:
    """Render sum_i b_i t^i (1+t)^(d-2i), skipping zero b_i.

    >>> p = IntPolynomial.variable("p", ("p", "q"))
    >>> q = IntPolynomial.variable("q", ("p", "q"))
    >>> latex_gamma_form([1, p + q], 2)
    '(1+t)^2 + (p+q)t'
    """
    pieces = []
    for i, b in enumerate(bs):
        if isinstance(b, IntPolynomial):
            if b.is_zero():
                continue
            if b == 1:
                coeff = ""
            else:
                coeff = "(" + latex_poly(b).replace(" ", "") + ")"
        else:
            if b == 0:
                continue
            coeff = "" if b == 1 else str(b)
        factors = [coeff]
        factors.append(_latex_power(tvar, i))
        e = d - 2 * i
        if e > 0:
            factors.append(_latex_power(f"(1+{tvar})", 1) if e == 1 else f"(1+{tvar})^{e}")
        body = "".join(factors)
        pieces.append(body if body else "1")
    return " + ".join(pieces) if pieces else "0"
