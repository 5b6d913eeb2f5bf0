"""Exact independence number and maximum-independent-set counting.

Mirrors the domination counter with a two-state (max, count) program: per
vertex either IN (in the independent set, children must be OUT) or OUT
(children free).  Also ships the structural recognizer for the trees that
meet the 2^(alpha-1)+1 count with equality: a star with all but one edge
subdivided once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .forest import Forest, root_at
from .limits import oracle_max_order


@dataclass(frozen=True)
class MaxCount:
    size: int
    count: int


def xc_combine(a: MaxCount, b: MaxCount) -> MaxCount:
    return MaxCount(a.size + b.size, a.count * b.count)


def xc_select(a: MaxCount, b: MaxCount) -> MaxCount:
    if a.size > b.size:
        return a
    if b.size > a.size:
        return b
    return MaxCount(a.size, a.count + b.count)


@dataclass(frozen=True)
class IndResult:
    alpha: int
    mis_count: int


def _component_tables(forest: Forest, component: int):
    tree = root_at(forest, forest.components[component][0])
    inside: dict[int, MaxCount] = {}
    outside: dict[int, MaxCount] = {}
    for v in tree.post_order:
        rec_in = MaxCount(1, 1)
        rec_out = MaxCount(0, 1)
        for c in tree.children[v]:
            rec_in = xc_combine(rec_in, outside[c])
            rec_out = xc_combine(rec_out, xc_select(inside[c], outside[c]))
        inside[v] = rec_in
        outside[v] = rec_out
    return tree, inside, outside


def independence_number(forest: Forest) -> int:
    return count_max_independent_sets(forest).alpha


def count_max_independent_sets(forest: Forest) -> IndResult:
    """Exact independence number and number of maximum independent sets;
    sizes add and counts multiply over components."""
    alpha = 0
    count = 1
    for comp in range(forest.component_count):
        tree, inside, outside = _component_tables(forest, comp)
        best = xc_select(inside[tree.root], outside[tree.root])
        alpha += best.size
        count *= best.count
    return IndResult(alpha, count)


def enumerate_max_independent_sets(forest: Forest, limit: int | None = None) -> list[frozenset[int]]:
    """All maximum independent sets, ordered by their sorted vertex lists."""
    guard = oracle_max_order()
    if forest.n > guard:
        raise ValueError(f"enumeration capped at order {guard}, got {forest.n}")
    combined = [frozenset()]
    for comp in range(forest.component_count):
        tree, inside, outside = _component_tables(forest, comp)
        memo: dict[tuple[int, bool], list[frozenset[int]]] = {}

        def sets(v: int, in_state: bool) -> list[frozenset[int]]:
            key = (v, in_state)
            if key in memo:
                return memo[key]
            if in_state:
                options = [sets(c, False) for c in tree.children[v]]
                result = [frozenset({v}).union(*parts)
                          for parts in itertools.product(*options)]
            else:
                options = []
                for c in tree.children[v]:
                    best = xc_select(inside[c], outside[c])
                    choice = []
                    if inside[c].size == best.size:
                        choice.extend(sets(c, True))
                    if outside[c].size == best.size:
                        choice.extend(sets(c, False))
                    options.append(choice)
                result = [frozenset().union(*parts)
                          for parts in itertools.product(*options)]
            memo[key] = result
            return result

        best = xc_select(inside[tree.root], outside[tree.root])
        here: list[frozenset[int]] = []
        if inside[tree.root].size == best.size:
            here.extend(sets(tree.root, True))
        if outside[tree.root].size == best.size:
            here.extend(sets(tree.root, False))
        combined = [acc | s for acc in combined for s in here]
    combined.sort(key=lambda s: tuple(sorted(s)))
    if limit is not None:
        combined = combined[:limit]
    return combined


def brute_force_independence(forest: Forest) -> IndResult:
    """Oracle: scan subsets by decreasing cardinality, independent of the DP."""
    guard = oracle_max_order()
    if forest.n > guard:
        raise ValueError(f"brute force capped at order {guard}, got {forest.n}")
    n = forest.n
    adj_mask = [0] * n
    for v in range(n):
        for w in forest.adj[v]:
            adj_mask[v] |= 1 << w
    for size in range(n, -1, -1):
        count = 0
        for combo in itertools.combinations(range(n), size):
            mask = 0
            ok = True
            for v in combo:
                if adj_mask[v] & mask:
                    ok = False
                    break
                mask |= 1 << v
            if ok:
                count += 1
        if count:
            return IndResult(size, count)
    return IndResult(0, 1)


@dataclass(frozen=True)
class SpiderShape:
    """Recognizer verdict: is the tree a star with all but one edge
    subdivided once, and for which leg count."""
    is_subdivided_star: bool
    k: int | None = None


NOT_SUBDIVIDED_STAR = SpiderShape(False, None)


def is_subdivided_star(forest: Forest) -> SpiderShape:
    """Recognize a center with k legs of length 2 plus one leg of length 1.

    Order 2k+2 with independence number k+1; k=0 is the single edge and
    k=1 the path on four vertices.  Works by degree profile only, so the
    verdict is independent of vertex labeling.
    """
    if forest.component_count != 1:
        raise ValueError("recognizer expects a single tree component")
    n = forest.n
    if n < 2 or n % 2 != 0:
        return NOT_SUBDIVIDED_STAR
    k = (n - 2) // 2
    if k == 0:
        return SpiderShape(True, 0)
    degrees = [forest.degree(v) for v in range(n)]
    if k == 1:
        # Only the path has profile (1,1,2,2) among the two 4-vertex trees.
        return SpiderShape(True, 1) if sorted(degrees) == [1, 1, 2, 2] else NOT_SUBDIVIDED_STAR
    centers = [v for v in range(n) if degrees[v] == k + 1]
    if len(centers) != 1:
        return NOT_SUBDIVIDED_STAR
    center = centers[0]
    pendant_legs = 0
    long_legs = 0
    for w in forest.adj[center]:
        if degrees[w] == 1:
            pendant_legs += 1
        elif degrees[w] == 2:
            tip = [x for x in forest.adj[w] if x != center][0]
            if degrees[tip] != 1:
                return NOT_SUBDIVIDED_STAR
            long_legs += 1
        else:
            return NOT_SUBDIVIDED_STAR
    if pendant_legs == 1 and long_legs == k:
        return SpiderShape(True, k)
    return NOT_SUBDIVIDED_STAR
