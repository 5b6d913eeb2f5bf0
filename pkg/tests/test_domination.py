import pytest
from hypothesis import given, settings

from strategies import forests, labeled_trees
from domcount.domination import (
    INFEASIBLE,
    DomResult,
    MinCount,
    brute_force_domination,
    count_min_dominating_sets,
    dominating_state_table,
    domination_number,
    enumerate_min_dominating_sets,
    mc_combine,
    mc_select,
)
from domcount.forest import build_forest, classify_vertices, disjoint_union, path, root_at, spider, star
from domcount.treegen import generate_trees


def is_dominating(forest, vertices):
    covered = set(vertices)
    for v in vertices:
        covered.update(forest.adj[v])
    return len(covered) == forest.n


def test_semiring_select_and_combine():
    a, b = MinCount(2, 3), MinCount(2, 5)
    assert mc_select(a, b) == MinCount(2, 8)
    assert mc_select(MinCount(1, 7), b) == MinCount(1, 7)
    assert mc_combine(a, b) == MinCount(4, 15)
    assert mc_combine(a, INFEASIBLE) == INFEASIBLE
    assert mc_select(INFEASIBLE, b) == b


def test_leaf_state_invariants():
    table = dominating_state_table(root_at(path(2), 0))
    leaf = 1
    assert table.sigma0[leaf] == MinCount(1, 1)
    assert table.sigma1[leaf] == INFEASIBLE
    assert table.sigma2[leaf] == MinCount(0, 1)
    assert all(table.sigma0[v].size >= 1 for v in (0, 1))


def test_single_vertex():
    assert count_min_dominating_sets(build_forest(1, [])) == DomResult(1, 1)


def test_empty_forest():
    assert count_min_dominating_sets(build_forest(0, [])) == DomResult(0, 1)


def test_paths_and_stars():
    assert count_min_dominating_sets(path(2)) == DomResult(1, 2)
    assert brute_force_domination(path(3)) == DomResult(1, 1)
    assert count_min_dominating_sets(path(3)) == DomResult(1, 1)
    assert count_min_dominating_sets(path(4)) == DomResult(2, 4)
    assert brute_force_domination(path(4)) == DomResult(2, 4)
    assert count_min_dominating_sets(star(3)) == DomResult(1, 1)


def test_spider_2_2_4(tstar):
    assert domination_number(tstar) == 4
    assert count_min_dominating_sets(tstar) == DomResult(4, 18)
    assert brute_force_domination(tstar) == DomResult(4, 18)


def test_two_spiders_multiply(tstar):
    double = disjoint_union(tstar, tstar)
    assert count_min_dominating_sets(double) == DomResult(8, 18 * 18)


def test_isolated_vertices_add_one_each():
    forest = build_forest(3, [(0, 1)])
    assert count_min_dominating_sets(forest) == DomResult(2, 2)


def test_dp_matches_brute_force_all_trees_small():
    for n in range(1, 11):
        for code in generate_trees(n):
            forest = code.decode()
            assert count_min_dominating_sets(forest) == brute_force_domination(forest)


def test_root_choice_is_irrelevant():
    for n in range(1, 10):
        for code in generate_trees(n):
            forest = code.decode()
            results = set()
            for v in range(forest.n):
                table = dominating_state_table(root_at(forest, v))
                record = table.root_result()
                results.add((record.size, record.count))
            assert len(results) == 1


def test_enumeration_path4():
    assert [sorted(s) for s in enumerate_min_dominating_sets(path(4))] == [
        [0, 2], [0, 3], [1, 2], [1, 3]]


def test_enumeration_single_edge():
    assert [sorted(s) for s in enumerate_min_dominating_sets(path(2))] == [[0], [1]]


def test_enumeration_matches_count(tstar):
    sets = enumerate_min_dominating_sets(tstar)
    assert len(sets) == 18
    assert len(set(sets)) == 18
    gamma = domination_number(tstar)
    for s in sets:
        assert len(s) == gamma
        assert is_dominating(tstar, s)


def test_enumeration_is_sorted_and_complete_small():
    for n in range(1, 11):
        for code in generate_trees(n):
            forest = code.decode()
            sets = enumerate_min_dominating_sets(forest)
            result = count_min_dominating_sets(forest)
            assert len(sets) == result.mds_count
            assert len(set(sets)) == len(sets)
            keys = [tuple(sorted(s)) for s in sets]
            assert keys == sorted(keys)
            for s in sets:
                assert len(s) == result.gamma
                assert is_dominating(forest, s)


def test_enumeration_limit(tstar):
    sets = enumerate_min_dominating_sets(tstar, limit=5)
    assert len(sets) == 5
    assert sets == enumerate_min_dominating_sets(tstar)[:5]


def test_enumeration_over_components():
    forest = disjoint_union(path(2), path(2))
    sets = [sorted(s) for s in enumerate_min_dominating_sets(forest)]
    assert sets == [[0, 2], [0, 3], [1, 2], [1, 3]]


def test_strong_supports_in_every_set():
    # Every strong support vertex lies in every minimum dominating set.
    for legs in [(1, 1, 2), (1, 1, 1), (2, 2, 1, 1)]:
        forest = spider(*legs)
        strong = classify_vertices(forest).strong_support
        assert strong
        for s in enumerate_min_dominating_sets(forest):
            assert strong <= s


def test_brute_force_guard():
    big = path(26)
    with pytest.raises(ValueError):
        brute_force_domination(big)
    with pytest.raises(ValueError):
        enumerate_min_dominating_sets(big)


def test_guard_env_override(monkeypatch):
    monkeypatch.setenv("DOMCOUNT_MAX_ORDER", "26")
    assert brute_force_domination(path(26)).gamma == 9


@settings(max_examples=50, deadline=None)
@given(forests(max_components=3, max_order=6))
def test_multiplicativity_over_components(forest):
    total = count_min_dominating_sets(forest)
    gamma_sum, count_prod = 0, 1
    for comp in forest.components:
        index = {v: i for i, v in enumerate(comp)}
        sub = build_forest(len(comp), [(index[u], index[v]) for u, v in forest.edges
                                       if u in index and v in index])
        part = count_min_dominating_sets(sub)
        gamma_sum += part.gamma
        count_prod *= part.mds_count
    assert total == DomResult(gamma_sum, count_prod)


@settings(max_examples=50, deadline=None)
@given(labeled_trees(max_order=9))
def test_dp_matches_brute_force_random(tree):
    assert count_min_dominating_sets(tree) == brute_force_domination(tree)
