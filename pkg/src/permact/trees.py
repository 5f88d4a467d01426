"""Tree encodings of words and the statistics they carry.

Two decreasing trees are used.  The binary tree splits at the maximum with
in-order readout; the number of right edges above a letter, taken mod 2,
picks out the letters ("odd set") where block swaps turn right edges into the
descents of the image word.  The unordered tree hangs each left-to-right
maximum below a virtual root and recurses on the segments in between; its
non-root vertices of even height give veh, the statistic matched to descents
by the modified involutions.

231-avoiding words are exactly those whose unordered tree readout loses no
information; ordering each vertex's children decreasingly and walking the
tree in pre-order gives the classical bijection to Dyck paths.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .action import phi_prime_full, phi_prime_x, phi_x
from .patterns import avoids_231
from .words import Word


class Not231AvoidingError(ValueError):
    pass


class MalformedPathError(ValueError):
    pass


# -- decreasing binary tree -------------------------------------------------


@dataclass
class BinaryTreeNode:
    label: int
    left: "BinaryTreeNode | None" = None
    right: "BinaryTreeNode | None" = None


def binary_tree(w: Word) -> BinaryTreeNode | None:
    """Decreasing binary tree: maximum at the root, parts on either side below."""
    if not w:
        return None
    k = w.index(max(w))
    return BinaryTreeNode(w[k], binary_tree(w[:k]), binary_tree(w[k + 1 :]))


def word_of(node: BinaryTreeNode | None) -> Word:
    """In-order readout; inverse of binary_tree."""
    if node is None:
        return ()
    return word_of(node.left) + (node.label,) + word_of(node.right)


def right_edge_depths(w: Word) -> dict[int, int]:
    """For each letter, the number of right edges on its path from the root."""
    depths: dict[int, int] = {}

    def walk(node: BinaryTreeNode | None, r: int) -> None:
        if node is None:
            return
        depths[node.label] = r
        walk(node.left, r)
        walk(node.right, r + 1)

    walk(binary_tree(w), 0)
    return depths


def odd_set(w: Word) -> frozenset[int]:
    """Letters whose right-edge depth in the binary tree is odd.

    >>> sorted(odd_set((3, 1, 2)))
    [1, 2]
    """
    return frozenset(x for x, r in right_edge_depths(w).items() if r % 2 == 1)


def redge_set(w: Word) -> frozenset[int]:
    """Letters that are right children in the binary tree; one per descent.

    >>> sorted(redge_set((3, 2, 1)))
    [1, 2]
    """
    out: set[int] = set()

    def walk(node: BinaryTreeNode | None) -> None:
        if node is None:
            return
        if node.right is not None:
            out.add(node.right.label)
        walk(node.left)
        walk(node.right)

    walk(binary_tree(w))
    return frozenset(out)


# -- unordered decreasing tree ----------------------------------------------


@dataclass
class UnorderedTree:
    """Rooted tree with integer labels; the virtual root is labeled None."""

    label: int | None
    children: list["UnorderedTree"] = field(default_factory=list)

    def signature(self) -> tuple:
        """Canonical nested form, invariant under reordering children."""
        return (self.label, tuple(sorted(c.signature() for c in self.children)))


def _ltr_segments(w: Word) -> list[tuple[int, Word]]:
    """Split w as m1 w1 m2 w2 ... by its left-to-right maxima."""
    segments: list[tuple[int, list[int]]] = []
    for a in w:
        if not segments or a > segments[-1][0]:
            segments.append((a, []))
        else:
            segments[-1][1].append(a)
    return [(m, tuple(rest)) for m, rest in segments]


def unordered_tree(w: Word) -> UnorderedTree:
    """Hang each left-to-right maximum below the root; recurse on segments."""

    def build(label: int | None, sub: Word) -> UnorderedTree:
        return UnorderedTree(label, [build(m, rest) for m, rest in _ltr_segments(sub)])

    return build(None, w)


def label_heights(tree: UnorderedTree) -> dict[int, int]:
    """Height of each labeled vertex (the virtual root has height 0)."""
    heights: dict[int, int] = {}

    def walk(node: UnorderedTree, h: int) -> None:
        if node.label is not None:
            heights[node.label] = h
        for child in node.children:
            walk(child, h + 1)

    walk(tree, 0)
    return heights


def veh(w: Word) -> int:
    """Number of letters at even height in the unordered decreasing tree.

    >>> veh((6, 5, 2, 4, 1, 9, 7, 3, 8))
    4
    """
    return sum(1 for h in label_heights(unordered_tree(w)).values() if h % 2 == 0)


# -- transports between the statistics ---------------------------------------


def psi(w: Word) -> Word:
    """Block swaps at every odd-set letter; sends the odd set to right edges.

    >>> psi((3, 1, 2))
    (3, 2, 1)
    """
    out = w
    for x in sorted(odd_set(w)):
        out = phi_x(out, x)
    return out


def phi_cap(w: Word) -> Word:
    """Block swaps at every right-edge letter; inverse of psi.

    >>> phi_cap((3, 2, 1))
    (3, 1, 2)
    """
    out = w
    for x in sorted(redge_set(w)):
        out = phi_x(out, x)
    return out


def psi_prime(w: Word) -> Word:
    """Modified swaps at every odd-set letter; turns veh into the descent count.

    >>> psi_prime((3, 1, 2))
    (3, 2, 1)
    """
    out = w
    for x in sorted(odd_set(w)):
        out = phi_prime_x(out, x)
    return out


def psi_prime_recursive(w: Word) -> Word:
    """Independent route to psi_prime via the maximum split:
    L m R maps to psi'(L), m, then the full hop applied to psi'(R)."""
    if not w:
        return w
    k = w.index(max(w))
    return (
        psi_prime_recursive(w[:k])
        + (w[k],)
        + phi_prime_full(psi_prime_recursive(w[k + 1 :]))
    )


# -- Dyck paths ---------------------------------------------------------------


def dyck_path(w: Word) -> str:
    """Pre-order walk of the unordered tree with children ordered decreasingly;
    defined (and injective) on 231-avoiding words.

    >>> dyck_path((2, 1, 3))
    'uduudd'
    """
    if not avoids_231(w):
        raise Not231AvoidingError(f"{w} contains a 231 pattern")
    out: list[str] = []

    def walk(node: UnorderedTree) -> None:
        for child in sorted(node.children, key=lambda c: -(c.label or 0)):
            out.append("u")
            walk(child)
            out.append("d")

    walk(unordered_tree(w))
    return "".join(out)


def kreweras_stats(path: str) -> tuple[int, int]:
    """(up-steps ending at even height, double up-steps uu) of a Dyck path.

    >>> kreweras_stats("uduudd")
    (1, 1)
    """
    h = 0
    even_ups = 0
    doubles = 0
    prev = ""
    for step in path:
        if step == "u":
            h += 1
            if h % 2 == 0:
                even_ups += 1
            if prev == "u":
                doubles += 1
        elif step == "d":
            h -= 1
            if h < 0:
                raise MalformedPathError("path dips below the axis")
        else:
            raise MalformedPathError(f"invalid step {step!r}")
        prev = step
    if h != 0:
        raise MalformedPathError("path does not return to the axis")
    return even_ups, doubles


def all_dyck_paths(n: int) -> Iterator[str]:
    """All Dyck paths with n up-steps, lexicographically with 'd' < 'u'."""

    def extend(prefix: list[str], ups: int, h: int) -> Iterator[str]:
        if ups == 0:
            yield "".join(prefix) + "d" * h
            return
        if h > 0:
            prefix.append("d")
            yield from extend(prefix, ups, h - 1)
            prefix.pop()
        prefix.append("u")
        yield from extend(prefix, ups - 1, h + 1)
        prefix.pop()

    if n < 0:
        raise ValueError("n must be nonnegative")
    yield from extend([], n, 0)
