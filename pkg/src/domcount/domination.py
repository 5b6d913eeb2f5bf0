"""Exact domination number and minimum-dominating-set counting on forests.

The counter runs a three-state dynamic program over each rooted component.
Per vertex it tracks (size, count) records for:

  sigma0 -- the vertex is in the dominating set,
  sigma1 -- the vertex is out but dominated by one of its children,
  sigma2 -- the vertex is out and not yet dominated (its parent must be in).

Records combine by adding sizes and multiplying counts; alternatives merge
by keeping the smaller size and adding counts on ties.  The sigma1 state
needs at least one sigma0 child.  That constraint is folded with a pair of
running records (no chosen child yet / at least one chosen child); it is
not recovered by subtracting unconstrained counts, because the constrained
minimum can be strictly larger than the unconstrained one and subtraction
would lose those sets.

Counts are exact arbitrary-precision integers throughout.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .forest import Forest, RootedTree, root_at
from .limits import oracle_max_order


@dataclass(frozen=True)
class MinCount:
    """A subproblem optimum: minimal size plus the exact number of optima.

    ``size`` is None when the subproblem is infeasible, in which case the
    count is zero; a feasible record always counts at least one set.
    """
    size: int | None
    count: int

    @property
    def feasible(self) -> bool:
        return self.size is not None


INFEASIBLE = MinCount(None, 0)


def mc_combine(a: MinCount, b: MinCount) -> MinCount:
    """Join independent subproblems: sizes add, counts multiply."""
    if a.size is None or b.size is None:
        return INFEASIBLE
    return MinCount(a.size + b.size, a.count * b.count)


def mc_select(a: MinCount, b: MinCount) -> MinCount:
    """Choose the better alternative: min size, counts add on ties."""
    if a.size is None:
        return b
    if b.size is None:
        return a
    if a.size < b.size:
        return a
    if b.size < a.size:
        return b
    return MinCount(a.size, a.count + b.count)


@dataclass
class DomStateTable:
    """Per-vertex DP records for one rooted component."""
    tree: RootedTree
    sigma0: dict[int, MinCount]
    sigma1: dict[int, MinCount]
    sigma2: dict[int, MinCount]
    # sigma1 fold prefixes per vertex: list of (no sigma0 child yet, has one)
    # after each child, kept for DP-guided enumeration.
    sigma1_prefix: dict[int, list[tuple[MinCount, MinCount]]]

    def root_result(self) -> MinCount:
        return mc_select(self.sigma0[self.tree.root], self.sigma1[self.tree.root])


def dominating_state_table(tree: RootedTree) -> DomStateTable:
    s0: dict[int, MinCount] = {}
    s1: dict[int, MinCount] = {}
    s2: dict[int, MinCount] = {}
    prefixes: dict[int, list[tuple[MinCount, MinCount]]] = {}
    for v in tree.post_order:
        kids = tree.children[v]
        in_set = MinCount(1, 1)
        undominated = MinCount(0, 1)
        track = [(MinCount(0, 1), INFEASIBLE)]
        for c in kids:
            any_state = mc_select(mc_select(s0[c], s1[c]), s2[c])
            in_set = mc_combine(in_set, any_state)
            undominated = mc_combine(undominated, s1[c])
            no_chosen, has_chosen = track[-1]
            track.append((
                mc_combine(no_chosen, s1[c]),
                mc_select(mc_combine(has_chosen, mc_select(s0[c], s1[c])),
                          mc_combine(no_chosen, s0[c])),
            ))
        s0[v] = in_set
        s1[v] = track[-1][1]
        s2[v] = undominated
        prefixes[v] = track
    return DomStateTable(tree=tree, sigma0=s0, sigma1=s1, sigma2=s2, sigma1_prefix=prefixes)


@dataclass(frozen=True)
class DomResult:
    gamma: int
    mds_count: int


def _component_result(forest: Forest, component: int) -> MinCount:
    tree = root_at(forest, forest.components[component][0])
    return dominating_state_table(tree).root_result()


def domination_number(forest: Forest) -> int:
    return count_min_dominating_sets(forest).gamma


def count_min_dominating_sets(forest: Forest) -> DomResult:
    """Exact domination number and number of minimum dominating sets.

    Both aggregate over components: sizes add, counts multiply.  The empty
    forest has domination number 0 and one (empty) minimum dominating set.
    """
    gamma = 0
    count = 1
    for comp in range(forest.component_count):
        record = _component_result(forest, comp)
        gamma += record.size
        count *= record.count
    return DomResult(gamma, count)


def _component_sets(table: DomStateTable) -> list[frozenset[int]]:
    """All minimum dominating sets of one component, DP-guided.

    Only state choices that achieve the recorded minima are expanded, so
    the work is polynomial in component size times the number of sets.
    """
    tree = table.tree
    memo: dict[tuple[int, int], list[frozenset[int]]] = {}
    prefix_memo: dict[tuple[int, int, bool], list[frozenset[int]]] = {}

    def sets(v: int, state: int) -> list[frozenset[int]]:
        key = (v, state)
        if key in memo:
            return memo[key]
        kids = tree.children[v]
        if state == 0:
            options = []
            for c in kids:
                best = mc_select(mc_select(table.sigma0[c], table.sigma1[c]), table.sigma2[c])
                choice = []
                for child_state, record in ((0, table.sigma0[c]), (1, table.sigma1[c]), (2, table.sigma2[c])):
                    if record.feasible and record.size == best.size:
                        choice.extend(sets(c, child_state))
                options.append(choice)
            result = [frozenset({v}).union(*parts)
                      for parts in itertools.product(*options)]
        elif state == 2:
            options = [sets(c, 1) for c in kids]
            result = [frozenset().union(*parts)
                      for parts in itertools.product(*options)]
        else:
            result = sigma1_sets(v, len(kids), True)
        memo[key] = result
        return result

    def sigma1_sets(v: int, i: int, has_chosen: bool) -> list[frozenset[int]]:
        # Walk the sigma1 fold backwards through the child prefix records.
        key = (v, i, has_chosen)
        if key in prefix_memo:
            return prefix_memo[key]
        if i == 0:
            return [] if has_chosen else [frozenset()]
        target = table.sigma1_prefix[v][i][1 if has_chosen else 0]
        c = tree.children[v][i - 1]
        prev_no, prev_has = table.sigma1_prefix[v][i - 1]
        out: list[frozenset[int]] = []
        if has_chosen:
            for prev_state, prev_record, child_record, child_state in (
                (True, prev_has, table.sigma0[c], 0),
                (True, prev_has, table.sigma1[c], 1),
                (False, prev_no, table.sigma0[c], 0),
            ):
                if (prev_record.feasible and child_record.feasible
                        and prev_record.size + child_record.size == target.size):
                    for head in sigma1_sets(v, i - 1, prev_state):
                        for tail in sets(c, child_state):
                            out.append(head | tail)
        else:
            if prev_no.feasible and table.sigma1[c].feasible:
                for head in sigma1_sets(v, i - 1, False):
                    for tail in sets(c, 1):
                        out.append(head | tail)
        prefix_memo[key] = out
        return out

    root = tree.root
    best = table.root_result()
    result: list[frozenset[int]] = []
    for state, record in ((0, table.sigma0[root]), (1, table.sigma1[root])):
        if record.feasible and record.size == best.size:
            result.extend(sets(root, state))
    return result


def enumerate_min_dominating_sets(forest: Forest, limit: int | None = None) -> list[frozenset[int]]:
    """All minimum dominating sets, ordered by their sorted vertex lists.

    Truncated to ``limit`` entries when given.  Guarded by the oracle order
    cap since output size can grow exponentially.
    """
    guard = oracle_max_order()
    if forest.n > guard:
        raise ValueError(f"enumeration capped at order {guard}, got {forest.n}")
    per_component: list[list[frozenset[int]]] = []
    for comp in range(forest.component_count):
        tree = root_at(forest, forest.components[comp][0])
        per_component.append(_component_sets(dominating_state_table(tree)))
    combined = [frozenset()]
    for sets_here in per_component:
        combined = [acc | s for acc in combined for s in sets_here]
    combined.sort(key=lambda s: tuple(sorted(s)))
    if limit is not None:
        combined = combined[:limit]
    return combined


def brute_force_domination(forest: Forest) -> DomResult:
    """Oracle: scan vertex subsets by increasing cardinality.

    Kept deliberately independent of the dynamic program; the first
    cardinality admitting a dominating set is gamma, and every subset of
    that cardinality is tested.
    """
    guard = oracle_max_order()
    if forest.n > guard:
        raise ValueError(f"brute force capped at order {guard}, got {forest.n}")
    n = forest.n
    closed = [1 << v for v in range(n)]
    for v in range(n):
        for w in forest.adj[v]:
            closed[v] |= 1 << w
    full = (1 << n) - 1
    for size in range(n + 1):
        count = 0
        for combo in itertools.combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= closed[v]
            if mask == full:
                count += 1
        if count:
            return DomResult(size, count)
    return DomResult(0, 1)
