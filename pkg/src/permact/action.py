"""Commuting involutions on words, their orbits, and class polynomials.

For a letter x of w, write w = w1 w2 x w4 w5 where w2 (resp. w4) is the
maximal contiguous block of letters smaller than x immediately left (resp.
right) of x.  The block swap ``phi_x`` exchanges w2 and w4.  Equivalently,
when x sits between a larger left neighbor and a smaller right one it hops
right to the first gap (a, b) with a < x < b, and in the mirrored situation
it hops left; letters with two larger neighbors (valleys) are fixed either
way.

The modified involution ``phi_prime_x`` applies the swap only when x is a
double ascent or double descent, so peaks and valleys both stay put.  These
involutions commute, and the group they generate cuts each symmetric group
into orbits whose descent generating function is t^k (1+t)^(n-1-2k).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .polynomials import GammaExpansion, IntPolynomial
from .words import (
    Boundary,
    LetterClass,
    Word,
    des,
    double_descent,
    letter_class_at,
    peak,
)


class LetterNotPresentError(ValueError):
    pass


class NonIntegralBError(ValueError):
    """The 2-adic peak-count formula fails; the class is not action-invariant."""


def x_factorization(w: Word, x: int) -> tuple[Word, Word, int, Word, Word]:
    """Split w = w1 w2 x w4 w5 around the letter x.

    w2 and w4 are the maximal contiguous all-smaller-than-x blocks adjacent
    to x; they are empty exactly when the neighboring letter (if any) is
    larger than x.

    >>> x_factorization((5, 7, 3, 1, 4, 8, 9, 2, 6), 8)
    ((), (5, 7, 3, 1, 4), 8, (), (9, 2, 6))
    """
    try:
        k = w.index(x)
    except ValueError:
        raise LetterNotPresentError(f"letter {x} not in word") from None
    i = k
    while i > 0 and w[i - 1] < x:
        i -= 1
    j = k + 1
    while j < len(w) and w[j] < x:
        j += 1
    return w[:i], w[i:k], x, w[k + 1 : j], w[j:]


def phi_x(w: Word, x: int) -> Word:
    """Swap the two all-smaller blocks adjacent to x.  An involution.

    >>> phi_x((3, 1, 2), 2)
    (3, 2, 1)
    """
    w1, w2, _, w4, w5 = x_factorization(w, x)
    return w1 + w4 + (x,) + w2 + w5


def phi_prime_x(w: Word, x: int, boundary: Boundary = Boundary.TOP) -> Word:
    """Block swap at x if x is a double ascent or double descent, else w.

    Classification uses the given boundary sentinels; with TOP this moves
    double descents right and double ascents left while fixing peaks and
    valleys.

    >>> phi_prime_x((5, 7, 3, 1, 4, 8, 9, 2, 6), 4)
    (5, 7, 4, 3, 1, 8, 9, 2, 6)
    """
    try:
        k = w.index(x)
    except ValueError:
        raise LetterNotPresentError(f"letter {x} not in word") from None
    cls = letter_class_at(w, k, boundary)
    if cls in (LetterClass.DOUBLE_ASCENT, LetterClass.DOUBLE_DESCENT):
        return phi_x(w, x)
    return w


def phi_S(w: Word, letters: Iterable[int]) -> Word:
    """Apply phi_x for every x in the set, in increasing letter order."""
    for x in sorted(set(letters)):
        w = phi_x(w, x)
    return w


def phi_prime_S(
    w: Word, letters: Iterable[int], boundary: Boundary = Boundary.TOP
) -> Word:
    """Apply phi_prime_x for every x in the set, in increasing letter order.

    The factors commute, so the order is immaterial; increasing order makes
    the computation reproducible.
    """
    for x in sorted(set(letters)):
        w = phi_prime_x(w, x, boundary)
    return w


def phi_prime_full(w: Word, boundary: Boundary = Boundary.TOP) -> Word:
    """Apply phi_prime_x at every letter; complements the descent count:
    des(phi_prime_full(w)) + des(w) = len(w) - 1 under TOP."""
    return phi_prime_S(w, w, boundary)


@dataclass(frozen=True)
class OrbitReport:
    """One orbit of the commuting involutions, with its verified invariants.

    ``peak`` is the descent count of the canonical representative (the unique
    member without double descents); it equals the peak count of every member
    under the TOP boundary.
    """

    members: tuple[Word, ...]
    rep: Word
    peak: int
    descent_poly: IntPolynomial
    gamma_claim: GammaExpansion

    def to_json_dict(self) -> dict:
        return {
            "members": [list(m) for m in self.members],
            "rep": list(self.rep),
            "peak": self.peak,
            "descent_poly": self.descent_poly.to_json_dict(),
            "gamma_claim": self.gamma_claim.to_json_dict(),
        }


def orbit_members(
    w: Word, boundary: Boundary = Boundary.TOP
) -> frozenset[Word]:
    """Closure of {w} under all phi_prime_x."""
    members = {w}
    stack = [w]
    while stack:
        v = stack.pop()
        for x in v:
            u = phi_prime_x(v, x, boundary)
            if u not in members:
                members.add(u)
                stack.append(u)
    return frozenset(members)


def phi_closure(w: Word) -> frozenset[Word]:
    """Closure of {w} under the unmodified block swaps phi_x (peaks move too)."""
    members = {w}
    stack = [w]
    while stack:
        v = stack.pop()
        for x in v:
            u = phi_x(v, x)
            if u not in members:
                members.add(u)
                stack.append(u)
    return frozenset(members)


def orbit(w: Word, boundary: Boundary = Boundary.TOP) -> OrbitReport:
    """Orbit of w with its descent polynomial and the verified closed form.

    >>> orbit((2, 1)).descent_poly.coeffs_list()
    [1, 1]
    """
    if not w:
        raise ValueError("empty word has no orbit")
    members = orbit_members(w, boundary)
    reps = [v for v in members if double_descent(v, boundary) == 0]
    if len(reps) != 1:
        raise RuntimeError(
            f"orbit of {w} has {len(reps)} double-descent-free members, expected 1"
        )
    rep = reps[0]
    k = des(rep)
    n = len(w)
    counts: dict[tuple[int, ...], int] = {}
    for v in members:
        e = (des(v),)
        counts[e] = counts.get(e, 0) + 1
    poly = IntPolynomial.from_counts(("t",), counts)
    claim = GammaExpansion(n - 1, (0,) * k + (1,))
    verifiable = boundary is Boundary.TOP or all(a < 0 for a in w)
    if verifiable:
        if claim.reconstruct() != poly:
            raise RuntimeError(
                f"orbit of {w}: descent polynomial {poly} != t^{k}(1+t)^{n - 1 - 2 * k}"
            )
        if peak(w, boundary) != k:
            raise RuntimeError(f"orbit of {w}: rep descent count differs from peak count")
    return OrbitReport(tuple(sorted(members)), rep, k, poly, claim)


@dataclass(frozen=True)
class ClassPolys:
    """Descent and peak polynomials of an action-invariant class, with the
    2-adically scaled peak counts b_i linking them."""

    W: IntPolynomial
    Wbar: IntPolynomial
    b: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "W": self.W.to_json_dict(),
            "Wbar": self.Wbar.to_json_dict(),
            "b": list(self.b),
        }


def class_polys(T: Iterable[Word], boundary: Boundary = Boundary.TOP) -> ClassPolys:
    """Compute W(T;t), the peak polynomial, and b_i = 2^(2i+1-n) #{peak = i}.

    Raises NonIntegralBError when a b_i is not an integer and ValueError when
    the b_i fail to reconstruct W; either one means T is not closed under the
    involutions.

    >>> from .words import all_permutations
    >>> class_polys(all_permutations(3)).b
    (1, 2)
    """
    words = [tuple(v) for v in T]
    if not words:
        raise ValueError("empty class")
    n = len(words[0])
    if any(len(v) != n for v in words):
        raise ValueError("class members must share one length")
    des_counts: dict[tuple[int, ...], int] = {}
    peak_counts: dict[int, int] = {}
    for v in words:
        e = (des(v),)
        des_counts[e] = des_counts.get(e, 0) + 1
        p = peak(v, boundary)
        peak_counts[p] = peak_counts.get(p, 0) + 1
    W = IntPolynomial.from_counts(("t",), des_counts)
    Wbar = IntPolynomial.from_counts(("t",), {(p,): c for p, c in peak_counts.items()})
    b = []
    for i in range((n - 1) // 2 + 1):
        cnt = peak_counts.get(i, 0)
        num = cnt << (2 * i)  # cnt * 2^(2i)
        den = 1 << (n - 1)
        if num % den:
            raise NonIntegralBError(
                f"b_{i} = {cnt} * 2^({2 * i + 1 - n}) is not an integer; "
                "class is not action-invariant"
            )
        b.append(num // den)
    while b and b[-1] == 0:
        b.pop()
    if not b:
        b = [0]
    if GammaExpansion(n - 1, tuple(b)).reconstruct() != W:
        raise ValueError(
            "descent polynomial does not match the scaled peak counts; "
            "class is not action-invariant"
        )
    return ClassPolys(W, Wbar, tuple(b))
