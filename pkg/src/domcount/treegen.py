"""Canonical codes for free trees and exhaustive generation by order.

A free tree is identified up to isomorphism by a canonical level sequence:
the depth of every vertex in preorder, rooted at a center of the tree,
with sibling subtrees arranged in lexicographically decreasing order.  For
a bicentral tree the rooting is fixed by comparing the two halves obtained
by cutting the central edge (larger half carries the root; equal-size
halves are compared lexicographically).

Generation steps through all canonical *rooted* level sequences (successor
stepping in decreasing lexicographic order, starting from the path rooted
at its center) and keeps exactly the sequences that are canonical for
their free tree.  Correctness is not taken on faith: the test suite checks
the stream against an independent labeled-tree oracle and an
automorphism-weighted count identity.

Codes carry a total order under which the stream is strictly increasing:
smaller orders first, and within one order path-like (deep) trees before
star-like (flat) ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterator

from .forest import Forest, build_forest


@total_ordering
@dataclass(frozen=True)
class CanonicalCode:
    levels: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.levels)

    def _key(self):
        return (len(self.levels), tuple(-x for x in self.levels))

    def __lt__(self, other: "CanonicalCode") -> bool:
        return self._key() < other._key()

    def parents(self) -> tuple[int, ...]:
        """Parent index of vertices 1..n-1 in canonical preorder."""
        parents = []
        stack: list[int] = []
        for i, level in enumerate(self.levels):
            while len(stack) > level:
                stack.pop()
            if stack:
                parents.append(stack[-1])
            stack.append(i)
        return tuple(parents)

    def to_string(self) -> str:
        return " ".join(["c", str(self.n), *map(str, self.parents())])

    @classmethod
    def from_string(cls, text: str) -> "CanonicalCode":
        tokens = text.split()
        if not tokens or tokens[0] != "c":
            raise ValueError(f"canonical code must start with 'c', got {text!r}")
        n = int(tokens[1])
        parents = [int(t) for t in tokens[2:]]
        if len(parents) != n - 1:
            raise ValueError(f"expected {n - 1} parent entries, got {len(parents)}")
        levels = [0]
        for child, p in enumerate(parents, start=1):
            if not 0 <= p < child:
                raise ValueError(f"parent index {p} of vertex {child} out of range")
            levels.append(levels[p] + 1)
        return cls(tuple(levels))

    def decode(self) -> Forest:
        """Rebuild the tree, labeled 0..n-1 in canonical preorder."""
        return build_forest(self.n, [(p, child) for child, p in enumerate(self.parents(), start=1)])


def _next_rooted(levels: list[int]) -> list[int] | None:
    """Successor of a canonical rooted level sequence (decreasing lex)."""
    p = len(levels) - 1
    while p >= 0 and levels[p] <= 1:
        p -= 1
    if p < 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    result = list(levels)
    for i in range(p, len(result)):
        result[i] = result[i - (p - q)]
    return result


def _split_first_subtree(levels) -> tuple[list[int], list[int]]:
    """Split off the first subtree of the root.

    Returns (first subtree re-rooted at level 0, root + remaining subtrees).
    """
    m = len(levels)
    for i in range(2, len(levels)):
        if levels[i] == 1:
            m = i
            break
    left = [levels[i] - 1 for i in range(1, m)]
    rest = [0] + [levels[i] for i in range(m, len(levels))]
    return left, rest


def _is_free_canonical(levels) -> bool:
    """Is this rooted sequence the canonical representative of its free tree?

    The root must be a center: the first (tallest) subtree, re-rooted, may
    not be taller than the rest of the tree, and on equal heights the first
    subtree must not be bigger, nor lexicographically later, than the rest.
    """
    left, rest = _split_first_subtree(levels)
    left_height = max(left)
    rest_height = max(rest)
    if rest_height > left_height:
        return True
    if rest_height < left_height:
        return False
    if len(left) != len(rest):
        return len(left) < len(rest)
    return left <= rest


def generate_trees(n: int) -> Iterator[CanonicalCode]:
    """Yield one CanonicalCode per isomorphism class of free trees of order n.

    The stream is deterministic and strictly increasing in code order.
    """
    if n < 1:
        raise ValueError(f"order must be at least 1, got {n}")
    if n == 1:
        yield CanonicalCode((0,))
        return
    # Path rooted at its center: the largest canonical free code of order n.
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        if _is_free_canonical(layout):
            yield CanonicalCode(tuple(layout))
        layout = _next_rooted(layout)


def _tree_centers(adj: dict[int, list[int]], vertices: list[int]) -> list[int]:
    """Centers of a tree by iterative leaf stripping (one or two vertices)."""
    if len(vertices) <= 2:
        return sorted(vertices)
    degree = {v: len(adj[v]) for v in vertices}
    layer = [v for v in vertices if degree[v] == 1]
    remaining = len(vertices)
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                if degree[w] > 1:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def _canonical_rooted_levels(adj, root: int, blocked: int | None) -> list[int]:
    """Canonical level sequence of the subtree at ``root`` looking away from
    ``blocked``; sibling subtrees sorted in decreasing sequence order."""
    parent: dict[int, int | None] = {root: blocked}
    order = [root]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in adj[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    seqs: dict[int, list[int]] = {}
    kids: dict[int, list[list[int]]] = {v: [] for v in order}
    for v in reversed(order):
        subs = sorted(kids.pop(v), reverse=True)
        out = [0]
        for s in subs:
            out.extend(x + 1 for x in s)
        seqs[v] = out
        p = parent[v]
        if p is not None and p != blocked:
            kids[p].append(seqs.pop(v))
    return seqs[root]


def canonical_code(forest: Forest, component: int = 0) -> CanonicalCode:
    """Canonical code of one tree component of a forest."""
    vertices = forest.components[component]
    adj = {v: forest.adj[v] for v in vertices}
    centers = _tree_centers(adj, vertices)
    if len(centers) == 1:
        return CanonicalCode(tuple(_canonical_rooted_levels(adj, centers[0], None)))
    c1, c2 = centers
    s1 = _canonical_rooted_levels(adj, c1, c2)
    s2 = _canonical_rooted_levels(adj, c2, c1)
    # Root on the side of the bigger (or lexicographically later) half.
    if (len(s1), s1) < (len(s2), s2):
        s1, s2 = s2, s1
    levels = [0] + [x + 1 for x in s2] + s1[1:]
    return CanonicalCode(tuple(levels))
