"""An increasing-tree statistic pair equidistributed with (des, maj).

The increasing tree of a word hangs every right-to-left minimum below a root
labeled 0; any other letter becomes a child of the leftmost smaller letter to
its right.  EV collects the positions whose letters sit at even (positive)
height; its size veh' refines to siveh, the sum of those positions, and the
recursion theta below transports (veh', siveh) onto (des, maj) exactly.
"""

from __future__ import annotations

from .trees import UnorderedTree
from .words import Word, complement


def increasing_tree(w: Word) -> UnorderedTree:
    """Root labeled 0; parent of b is the leftmost smaller letter right of b.

    >>> increasing_tree((2, 1)).signature()
    (0, ((1, ((2, ()),)),))
    """
    nodes = {a: UnorderedTree(a) for a in w}
    root = UnorderedTree(0)
    for i, b in enumerate(w):
        parent = next((a for a in w[i + 1 :] if a < b), None)
        (root if parent is None else nodes[parent]).children.append(nodes[b])
    return root


def _letter_heights(w: Word) -> dict[int, int]:
    heights: dict[int, int] = {}

    def walk(node: UnorderedTree, h: int) -> None:
        for child in node.children:
            heights[child.label] = h + 1
            walk(child, h + 1)

    walk(increasing_tree(w), 0)
    return heights


def ev_set(w: Word) -> frozenset[int]:
    """Positions i (1-indexed) whose letter has even height in the tree.

    >>> sorted(ev_set((5, 8, 6, 3, 1, 7, 4, 9, 2)))
    [2, 4, 7, 8]
    """
    heights = _letter_heights(w)
    return frozenset(i + 1 for i, a in enumerate(w) if heights[a] % 2 == 0)


def veh_prime(w: Word) -> int:
    """|EV|; equidistributed with des over each symmetric group.

    >>> veh_prime((5, 8, 6, 3, 1, 7, 4, 9, 2))
    4
    """
    return len(ev_set(w))


def siveh(w: Word) -> int:
    """Sum of the EV positions; the Mahonian partner of veh'.

    >>> siveh((5, 8, 6, 3, 1, 7, 4, 9, 2))
    21
    """
    return sum(ev_set(w))


def theta(w: Word) -> Word:
    """Bijection taking (veh', siveh) to (des, maj): EV(theta(w)) is the
    descent set of w.

    Split at the minimum m into sigma m tau; recurse on the complement of
    sigma (within its own letters) and on tau.

    >>> theta((5, 8, 6, 3, 1, 7, 4, 9, 2))
    (6, 3, 5, 8, 1, 9, 7, 4, 2)
    """
    if not w:
        return w
    k = w.index(min(w))
    sigma, m, tau = w[:k], w[k], w[k + 1 :]
    return theta(complement(sigma)) + (m,) + theta(tau)
