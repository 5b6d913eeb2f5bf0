import pytest

from domcount.forest import (
    ForestError,
    build_forest,
    classify_vertices,
    disjoint_union,
    forest_to_text,
    parse_forest,
    path,
    pendant_two_paths,
    root_at,
    spider,
    star,
)


def test_parse_single_edge():
    forest = parse_forest("n 2\n0 1")
    assert forest.n == 2
    assert forest.edges == [(0, 1)]
    assert forest.component_count == 1


def test_parse_single_vertex():
    forest = parse_forest("n 1")
    assert forest.n == 1
    assert forest.edges == []
    assert forest.components == [[0]]


def test_parse_spider_2_2_4(tstar_text, tstar):
    forest = parse_forest(tstar_text)
    assert forest.n == 9
    assert len(forest.edges) == 8
    assert forest.edges == tstar.edges


def test_parse_comments_and_blank_lines():
    forest = parse_forest("# header\n\nn 3\n# mid\n0 1\n\n1 2\n")
    assert forest.n == 3
    assert forest.edges == [(0, 1), (1, 2)]


def test_parse_unreferenced_ids_are_isolated():
    forest = parse_forest("n 4\n0 1")
    assert forest.components == [[0, 1], [2], [3]]


@pytest.mark.parametrize("text", [
    "0 1",                # missing header
    "n x",                # bad count
    "n 2\n0",             # malformed edge line
    "n 2\n0 a",           # non-integer endpoint
    "n 2\n0 2",           # vertex id out of range
    "n 2\n0 0",           # self-loop
    "n 2\n0 1\n1 0",      # duplicate edge
    "n 3\n0 1\n1 2\n0 2", # cycle
])
def test_parse_errors(text):
    with pytest.raises(ForestError):
        parse_forest(text)


def test_text_round_trip(tstar):
    assert parse_forest(forest_to_text(tstar)).edges == tstar.edges


def test_build_rejects_negative_order():
    with pytest.raises(ForestError):
        build_forest(-1, [])


def test_adjacency_is_sorted_and_symmetric(tstar):
    for v in range(tstar.n):
        assert tstar.adj[v] == sorted(tstar.adj[v])
        for w in tstar.adj[v]:
            assert v in tstar.adj[w]


def test_classify_single_edge():
    cls = classify_vertices(path(2))
    assert cls.endvertices == {0, 1}
    assert cls.support == {0, 1}
    assert cls.strong_support == frozenset()


def test_classify_star():
    cls = classify_vertices(star(3))
    assert cls.endvertices == {1, 2, 3}
    assert cls.support == {0}
    assert cls.strong_support == {0}


def test_classify_spider_2_2_4(tstar):
    cls = classify_vertices(tstar)
    assert len(cls.endvertices) == 3
    assert len(cls.support) == 3
    assert cls.strong_support == frozenset()


def test_classify_isolated_vertex():
    cls = classify_vertices(build_forest(1, []))
    assert cls.endvertices == {0}
    assert cls.support == frozenset()


@pytest.mark.parametrize("legs", [(2,), (1, 1), (2, 2, 4), (3, 3)])
def test_star_like_strong_support(legs):
    # Any star with >= 2 leaves has exactly one strong support vertex.
    cls = classify_vertices(star(max(2, sum(legs))))
    assert len(cls.strong_support) == 1


def test_root_single_edge():
    tree = root_at(path(2), 0)
    assert tree.parent == {0: None, 1: 0}
    assert tree.post_order == [1, 0]


def test_root_path_at_endvertex():
    tree = root_at(path(4), 0)
    assert tree.post_order[-1] == 0
    assert tree.post_order == [3, 2, 1, 0]


def test_root_spider_at_center(tstar):
    tree = root_at(tstar, 0)
    assert sorted(_subtree_sizes(tree)) == [2, 2, 4]


def _subtree_sizes(tree):
    sizes = {}
    for v in tree.post_order:
        sizes[v] = 1 + sum(sizes[c] for c in tree.children[v])
    return [sizes[c] for c in tree.children[tree.root]]


def test_root_outside_component_rejected():
    forest = parse_forest("n 4\n0 1")
    with pytest.raises(ForestError):
        root_at(forest, 2, component=0)
    tree = root_at(forest, 2, component=1)
    assert tree.post_order == [2]


def test_post_order_children_first(tstar):
    tree = root_at(tstar, 5)
    seen = set()
    for v in tree.post_order:
        for child in tree.children[v]:
            assert child in seen
        seen.add(v)
    assert tree.post_order[-1] == 5


def test_disjoint_union_offsets(tstar):
    both = disjoint_union(tstar, path(3))
    assert both.n == 12
    assert both.component_count == 2
    assert (9, 10) in both.edges


def test_spider_rejects_zero_leg():
    with pytest.raises(ForestError):
        spider(2, 0)


def test_pendant_two_paths_detection(tstar):
    # At vertex 5 of the 2-2-4 spider: hub 0 hangs two pendant 2-paths,
    # hub 6 hangs one.
    assert sorted(pendant_two_paths(tstar, 0, 5)) == [(1, 2), (3, 4)]
    assert pendant_two_paths(tstar, 6, 5) == [(7, 8)]
    # Looking toward the center from 6, vertex 7's subtree is a bare path.
    assert pendant_two_paths(tstar, 7, 6) is None
    # A leaf hub has no pendant paths at all.
    assert pendant_two_paths(tstar, 8, 7) is None
