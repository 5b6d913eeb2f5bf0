"""Counting walk-through: domination and independence on small forests.

Run with: python demos/counting_basics.py
"""

from domcount import (
    brute_force_domination,
    classify_vertices,
    count_max_independent_sets,
    count_min_dominating_sets,
    disjoint_union,
    enumerate_min_dominating_sets,
    parse_forest,
    path,
    spider,
    star,
)

# A forest can come from a text description: "n <count>" then edge lines.
forest = parse_forest("""
# path on four vertices
n 4
0 1
1 2
2 3
""")
print("P4:", count_min_dominating_sets(forest))
print("P4 minimum dominating sets:")
for s in enumerate_min_dominating_sets(forest):
    print("  ", sorted(s))

# Or from the constructors.  The 2-2-4 spider is the classic example of a
# tree whose minimum dominating sets outnumber 2^gamma: gamma is 4 but
# there are 18 sets, not at most 16.
tstar = spider(2, 2, 4)
print("\n2-2-4 spider:", count_min_dominating_sets(tstar))
print("same, by subset scan:", brute_force_domination(tstar))
print("2^gamma would be:", 2**4)

# Counts multiply over components, so m copies push the count to 18^m
# while gamma grows by 4 per copy (about 2.0598^gamma overall).
for m in (2, 3, 4):
    copies = disjoint_union(*([tstar] * m))
    result = count_min_dominating_sets(copies)
    print(f"{m} copies: gamma={result.gamma} count={result.mds_count} "
          f"(rate {result.mds_count ** (1 / result.gamma):.4f}^gamma)")

# Vertex classification: endvertices, supports, strong supports.  Every
# minimum dominating set contains every strong support vertex.
double_star = star(3)
cls = classify_vertices(double_star)
print("\nstar K(1,3) classification:", cls)

# Independence counting mirrors the domination side.
print("\nindependence on P5:", count_max_independent_sets(path(5)))
print("independence on the spider:", count_max_independent_sets(tstar))
