"""Words and their descent/peak statistics.

A word is a finite sequence of distinct nonzero integers, stored as a tuple.
Permutations are the special case with letter set {1, ..., n}.  The letter 0
is reserved: it acts as a boundary sentinel under the ZERO convention, so it
is never a valid letter.
"""

from __future__ import annotations

import itertools
from enum import Enum
from typing import Iterable, Iterator

Word = tuple[int, ...]


class Boundary(Enum):
    """Virtual letters placed at both ends of a word before classifying.

    TOP:  both sentinels compare greater than every letter.
    ZERO: both sentinels are the reserved letter 0, so they compare below
          positive letters and above negative ones.
    """

    TOP = "top"
    ZERO = "zero"


class LetterClass(Enum):
    VALLEY = "valley"
    PEAK = "peak"
    DOUBLE_ASCENT = "double_ascent"
    DOUBLE_DESCENT = "double_descent"


def as_word(letters: Iterable[int]) -> Word:
    """Validate and normalize a sequence of letters into a Word.

    >>> as_word([5, 7, 3])
    (5, 7, 3)
    """
    w = tuple(int(a) for a in letters)
    seen: set[int] = set()
    for a in w:
        if a == 0:
            raise ValueError("0 is reserved as a boundary sentinel, not a letter")
        if a in seen:
            raise ValueError(f"letters must be distinct; {a} repeats")
        seen.add(a)
    return w


def parse_word(text: str) -> Word:
    """Parse a word from text.

    Letters may be separated by whitespace or commas.  A single undelimited
    token of digits that forms a permutation of {1..n} (n <= 9) is read one
    digit per letter, so "573148926" and "5 7 3 1 4 8 9 2 6" agree.

    >>> parse_word("21")
    (2, 1)
    >>> parse_word("-1, -2, 1")
    (-1, -2, 1)
    """
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ValueError("empty word text")
    if len(tokens) == 1 and tokens[0].isdigit():
        digits = [int(c) for c in tokens[0]]
        if sorted(digits) == list(range(1, len(digits) + 1)):
            return as_word(digits)
    return as_word(int(tok) for tok in tokens)


def format_word(w: Word) -> str:
    """Canonical text form: letters separated by single spaces."""
    return " ".join(str(a) for a in w)


def identity(n: int) -> Word:
    return tuple(range(1, n + 1))


def is_permutation(w: Word) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def all_permutations(n: int) -> Iterator[Word]:
    """All n! permutations of {1..n} in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def involutions(n: int) -> Iterator[Word]:
    """All permutations of {1..n} equal to their own inverse.

    Built directly by choosing, for the largest remaining element, either a
    fixed point or a 2-cycle partner; this avoids scanning all of S_n.
    """

    def build(elems: tuple[int, ...]) -> Iterator[dict[int, int]]:
        if not elems:
            yield {}
            return
        x = elems[-1]
        rest = elems[:-1]
        for m in build(rest):
            out = dict(m)
            out[x] = x
            yield out
        for idx in range(len(rest)):
            j = rest[idx]
            for m in build(rest[:idx] + rest[idx + 1 :]):
                out = dict(m)
                out[x] = j
                out[j] = x
                yield out

    for mapping in build(tuple(range(1, n + 1))):
        yield tuple(mapping[i] for i in range(1, n + 1))


def perm_inverse(w: Word) -> Word:
    inv = [0] * len(w)
    for i, a in enumerate(w):
        inv[a - 1] = i + 1
    return tuple(inv)


def perm_compose(u: Word, v: Word) -> Word:
    """(u . v)(i) = u(v(i)); both must be permutations of the same {1..n}."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def descent_set(w: Word) -> set[int]:
    """Positions i (1-indexed, 1 <= i < n) with w_i > w_{i+1}.

    >>> sorted(descent_set((5, 7, 3, 1, 4, 8, 9, 2, 6)))
    [2, 3, 7]
    """
    return {i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]}


def des(w: Word) -> int:
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def maj(w: Word) -> int:
    """Sum of descent positions.

    >>> maj((5, 7, 3, 1, 4, 8, 9, 2, 6))
    12
    """
    return sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def _sentinel(w: Word, boundary: Boundary) -> int:
    if boundary is Boundary.ZERO:
        return 0
    return max(w) + 1


def classify(w: Word, boundary: Boundary = Boundary.TOP) -> tuple[LetterClass, ...]:
    """Class of every letter relative to its neighbors (sentinels at the ends).

    >>> [c.name[0] for c in classify((2, 3, 1))]
    ['V', 'P', 'V']
    """
    if not w:
        return ()
    s = _sentinel(w, boundary)
    n = len(w)
    out = []
    for k, a in enumerate(w):
        left = w[k - 1] if k > 0 else s
        right = w[k + 1] if k + 1 < n else s
        if left > a < right:
            out.append(LetterClass.VALLEY)
        elif left < a > right:
            out.append(LetterClass.PEAK)
        elif left < a < right:
            out.append(LetterClass.DOUBLE_ASCENT)
        else:
            out.append(LetterClass.DOUBLE_DESCENT)
    return tuple(out)


def letter_class_at(w: Word, k: int, boundary: Boundary = Boundary.TOP) -> LetterClass:
    """Class of the letter at 0-based index k; avoids classifying the rest."""
    s = _sentinel(w, boundary)
    a = w[k]
    left = w[k - 1] if k > 0 else s
    right = w[k + 1] if k + 1 < len(w) else s
    if left > a < right:
        return LetterClass.VALLEY
    if left < a > right:
        return LetterClass.PEAK
    if left < a < right:
        return LetterClass.DOUBLE_ASCENT
    return LetterClass.DOUBLE_DESCENT


def _count(w: Word, boundary: Boundary, cls: LetterClass) -> int:
    return classify(w, boundary).count(cls)


def peak(w: Word, boundary: Boundary = Boundary.TOP) -> int:
    return _count(w, boundary, LetterClass.PEAK)


def valley(w: Word, boundary: Boundary = Boundary.TOP) -> int:
    return _count(w, boundary, LetterClass.VALLEY)


def double_ascent(w: Word, boundary: Boundary = Boundary.TOP) -> int:
    return _count(w, boundary, LetterClass.DOUBLE_ASCENT)


def double_descent(w: Word, boundary: Boundary = Boundary.TOP) -> int:
    return _count(w, boundary, LetterClass.DOUBLE_DESCENT)


def complement(w: Word) -> Word:
    """Reverse the relative order of the letters within their own letter set.

    The i-th smallest letter maps to the i-th largest.

    >>> complement((5, 8, 6, 3, 1, 7, 4, 9, 2))
    (5, 2, 4, 7, 9, 3, 6, 1, 8)
    """
    ordered = sorted(w)
    mirror = {a: b for a, b in zip(ordered, reversed(ordered))}
    return tuple(mirror[a] for a in w)


def reverse(w: Word) -> Word:
    return w[::-1]


def dec_subseq_counts(w: Word, k_max: int) -> tuple[int, ...]:
    """d_i = number of strictly decreasing subsequences of length i + 1,
    for i = 1..k_max.

    >>> dec_subseq_counts((3, 2, 1), 2)
    (3, 1)
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    n = len(w)
    # ways[i] = number of decreasing subsequences of the current length
    # ending at index i
    ways = [1] * n
    out = []
    for _ in range(k_max):
        ways = [sum(ways[q] for q in range(i) if w[q] > w[i]) for i in range(n)]
        out.append(sum(ways))
    return tuple(out)
