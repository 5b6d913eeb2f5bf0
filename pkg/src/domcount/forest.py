"""Forests as plain adjacency-list structures, plus text I/O and rooting.

Vertices are dense 0-based integers.  Isolated vertices are legal and form
their own components, which is why the text format declares the vertex
count explicitly instead of inferring it from the edge list.

All structures are built once and never mutated afterwards, so they are
safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class ForestError(ValueError):
    """Malformed input: bad file format, bad vertex ids, or a cycle."""


@dataclass
class Forest:
    n: int
    edges: list[tuple[int, int]]
    adj: list[list[int]]
    components: list[list[int]]
    comp_id: list[int] = field(repr=False)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def component_count(self) -> int:
        return len(self.components)


def build_forest(n: int, edges) -> Forest:
    """Validate an edge list and assemble a Forest.

    Raises ForestError on self-loops, duplicate or out-of-range edges, and
    on any cycle.
    """
    if n < 0:
        raise ForestError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    normalized: list[tuple[int, int]] = []
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ForestError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
        if u == v:
            raise ForestError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ForestError(f"duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        normalized.append(key)
        adj[u].append(v)
        adj[v].append(u)
    for neighbors in adj:
        neighbors.sort()
    normalized.sort()

    components: list[list[int]] = []
    comp_id = [-1] * n
    for start in range(n):
        if comp_id[start] != -1:
            continue
        comp_index = len(components)
        stack = [start]
        comp_id[start] = comp_index
        members = [start]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if comp_id[w] == -1:
                    comp_id[w] = comp_index
                    members.append(w)
                    stack.append(w)
        members.sort()
        components.append(members)

    # A simple graph is acyclic exactly when |E| = n - #components.
    if len(normalized) != n - len(components):
        raise ForestError("cycle detected: edge count exceeds n - #components")
    return Forest(n=n, edges=normalized, adj=adj, components=components, comp_id=comp_id)


def parse_forest(text: str) -> Forest:
    """Parse the line-oriented forest format.

    Lines starting with '#' are comments.  The first significant line must
    be ``n <count>``; every following significant line is an edge ``u v``.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ForestError(f"line {lineno}: expected 'n <count>' header, got {line!r}")
            try:
                n = int(tokens[1])
            except ValueError:
                raise ForestError(f"line {lineno}: vertex count {tokens[1]!r} is not an integer") from None
            if n < 0:
                raise ForestError(f"line {lineno}: vertex count must be nonnegative")
            continue
        if len(tokens) != 2:
            raise ForestError(f"line {lineno}: expected edge 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ForestError(f"line {lineno}: edge endpoints must be integers, got {line!r}") from None
        edges.append((u, v))
    if n is None:
        raise ForestError("missing 'n <count>' header line")
    return build_forest(n, edges)


def forest_to_text(forest: Forest, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {forest.n}")
    lines.extend(f"{u} {v}" for u, v in forest.edges)
    return "\n".join(lines) + "\n"


# Convenience constructors used all over the tests and demos.

def path(n: int) -> Forest:
    """Path on n vertices, 0-1-2-...-(n-1)."""
    return build_forest(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Forest:
    """Star with the given number of leaves; center is vertex 0."""
    return build_forest(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def spider(*leg_lengths: int) -> Forest:
    """Spider: center 0 with one pendant path per entry of leg_lengths."""
    edges = []
    nxt = 1
    for length in leg_lengths:
        if length < 1:
            raise ForestError("spider legs must have positive length")
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return build_forest(nxt, edges)


def disjoint_union(*forests: Forest) -> Forest:
    edges: list[tuple[int, int]] = []
    offset = 0
    for f in forests:
        edges.extend((u + offset, v + offset) for u, v in f.edges)
        offset += f.n
    return build_forest(offset, edges)


@dataclass(frozen=True)
class VertexClassification:
    endvertices: frozenset[int]
    support: frozenset[int]
    strong_support: frozenset[int]


def classify_vertices(forest: Forest) -> VertexClassification:
    """Split vertices into endvertices (degree <= 1), supports (adjacent to
    an endvertex) and strong supports (adjacent to at least two)."""
    endvertices = frozenset(v for v in range(forest.n) if forest.degree(v) <= 1)
    support = []
    strong = []
    for v in range(forest.n):
        pendant_neighbors = sum(1 for w in forest.adj[v] if w in endvertices)
        if pendant_neighbors >= 1:
            support.append(v)
        if pendant_neighbors >= 2:
            strong.append(v)
    return VertexClassification(endvertices, frozenset(support), frozenset(strong))


def pendant_two_paths(forest: Forest, hub: int, away_from: int) -> list[tuple[int, int]] | None:
    """(inner, tip) vertex pairs when everything hanging at ``hub`` away
    from ``away_from`` is pendant paths of length two; None otherwise."""
    chains = []
    for v in forest.adj[hub]:
        if v == away_from:
            continue
        if forest.degree(v) != 2:
            return None
        tip = [y for y in forest.adj[v] if y != hub][0]
        if forest.degree(tip) != 1:
            return None
        chains.append((v, tip))
    return chains if chains else None


@dataclass
class RootedTree:
    forest: Forest
    component: int
    root: int
    parent: dict[int, int | None]
    children: dict[int, list[int]]
    post_order: list[int]


def root_at(forest: Forest, root: int, component: int | None = None) -> RootedTree:
    """Orient one tree component away from ``root``.

    ``post_order`` lists every child before its parent, with the root last.
    """
    if not (0 <= root < forest.n):
        raise ForestError(f"vertex {root} outside range 0..{forest.n - 1}")
    comp = forest.comp_id[root]
    if component is not None and component != comp:
        raise ForestError(f"vertex {root} is not in component {component}")
    parent: dict[int, int | None] = {root: None}
    children: dict[int, list[int]] = {}
    order = [root]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        kids = [w for w in forest.adj[v] if w != parent[v]]
        children[v] = kids
        for w in kids:
            parent[w] = v
        order.extend(kids)
    post: list[int] = []
    stack: list[tuple[int, bool]] = [(root, False)]
    while stack:
        v, expanded = stack.pop()
        if expanded:
            post.append(v)
            continue
        stack.append((v, True))
        for c in reversed(children[v]):
            stack.append((c, False))
    return RootedTree(forest=forest, component=comp, root=root,
                      parent=parent, children=children, post_order=post)
