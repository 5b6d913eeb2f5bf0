from fractions import Fraction

import pytest

from domcount.family import build_family_tree
from domcount.forest import path, spider
from domcount.independence import SpiderShape, is_subdivided_star
from domcount.search import (
    compute_growth_base,
    extremal_diagnostics,
    mis_order_bound,
    report_csv_lines,
    report_text,
    search_extremal,
    verify_mds_bound,
    verify_mis_bound,
)
from domcount.treegen import generate_trees


def cubic(x):
    return x**3 - x**2 - 4 * x + 1


def test_cubic_bracket_endpoints():
    assert cubic(Fraction(2)) == -3
    assert cubic(Fraction(3)) == 7


def test_growth_base_bracket():
    bracket = compute_growth_base(Fraction(1, 10000))
    assert Fraction(2) < bracket.lo <= bracket.hi < Fraction(3)
    assert bracket.hi - bracket.lo <= Fraction(1, 10000)
    assert cubic(bracket.lo) <= 0 <= cubic(bracket.hi)
    # The root sits just below the four-decimal constant used in the bound:
    # the bracket certifies root < 2.4606, so the exact integer check is
    # strictly safe.
    assert bracket.hi < Fraction(24606, 10000)
    assert abs(bracket.lo - Fraction(24606, 10000)) < Fraction(2, 10000)


def test_growth_base_width_validation():
    with pytest.raises(ValueError):
        compute_growth_base(0)


def test_support_rate_bracket():
    bracket = compute_growth_base(Fraction(1, 10**8))
    lo, hi = bracket.support_rate_bracket()
    assert lo <= hi
    # rate = base/(base-1), close to the displayed 1.6847
    assert Fraction(16846, 10000) < lo <= hi < Fraction(16848, 10000)


def test_mds_bound_examples():
    assert verify_mds_bound(4, 18)
    assert verify_mds_bound(1, 2)
    assert not verify_mds_bound(4, 40)
    edge = 24606**4 // 10000**4
    assert verify_mds_bound(4, edge)
    assert not verify_mds_bound(4, edge + 1)
    with pytest.raises(ValueError):
        verify_mds_bound(0, 1)


def test_mis_bound_examples():
    check = verify_mis_bound(4, 9, SpiderShape(True, 3))
    assert check.passed and check.equality and check.consistent
    check = verify_mis_bound(3, 1, SpiderShape(False, None))
    assert check.passed and not check.equality and check.consistent
    check = verify_mis_bound(1, 2, SpiderShape(True, 0))
    assert check.passed and check.equality and check.consistent
    check = verify_mis_bound(4, 9, SpiderShape(False, None))
    assert check.passed and check.equality and not check.consistent
    assert not verify_mis_bound(3, 6, SpiderShape(False, None)).passed


def test_mis_order_bound_values():
    assert mis_order_bound(1) == 1
    assert mis_order_bound(2) == 2
    assert mis_order_bound(3) == 1
    assert mis_order_bound(4) == 3
    assert mis_order_bound(5) == 2
    assert mis_order_bound(8) == 9
    with pytest.raises(ValueError):
        mis_order_bound(0)


def test_diagnostics_spider(tstar):
    diag = extremal_diagnostics(tstar)
    assert diag.endvertices_covered
    assert diag.uncovered_endvertices == ()
    assert len(diag.configurations) == 1
    config = diag.configurations[0]
    assert config.at == 5 and config.parts == (2, 1) and config.gap == 1
    assert diag.max_hub_gap == 1


def test_diagnostics_balanced_family():
    forest = build_family_tree((3, 3, 3)).forest
    diag = extremal_diagnostics(forest)
    assert diag.max_hub_gap == 0
    assert any(c.parts == (3, 3, 3) for c in diag.configurations)


def test_diagnostics_unbalanced_family():
    forest = build_family_tree((4, 2)).forest
    assert extremal_diagnostics(forest).max_hub_gap == 2


def test_diagnostics_uncovered_endvertex():
    # The 3-path's only minimum dominating set is its center.
    diag = extremal_diagnostics(path(3))
    assert not diag.endvertices_covered
    assert diag.uncovered_endvertices == (0, 2)
    assert diag.max_hub_gap is None


def test_diagnostics_requires_tree():
    from domcount.forest import disjoint_union
    with pytest.raises(ValueError):
        extremal_diagnostics(disjoint_union(path(2), path(2)))


def test_search_orders_1_to_9(tstar):
    report = search_extremal(1, 9)
    assert report.trees_processed == 95
    assert report.violation_count == 0
    record = report.gamma_records[4]
    assert record.best_count == 18
    assert record.witness_order == 9
    assert record.best_count > 2**4
    from domcount.treegen import canonical_code
    assert record.witness == canonical_code(tstar)
    text = report_text(report)
    assert "exceeds 2^gamma=16" in text
    assert "trees processed: 95" in text


def test_search_alpha_records_track_subdivided_stars():
    report = search_extremal(1, 10)
    for alpha in (2, 3, 4, 5):
        record = report.alpha_records[alpha]
        assert record.best_count == 2 ** (alpha - 1) + 1
        assert record.witness_order == 2 * alpha
        assert is_subdivided_star(record.witness.decode()).is_subdivided_star


def test_search_no_violations_up_to_12():
    report = search_extremal(1, 12, checks=("mds-bound", "mis-bound", "order-bound"))
    assert report.violation_count == 0
    assert report.diagnostics is None


def test_search_row_emission():
    report = search_extremal(4, 4, emit_rows=True)
    lines = report_csv_lines(report)
    assert lines[0].startswith("order,code,gamma")
    assert len(lines) == 3
    star_row = [line for line in lines if line.split(",")[9] == "true"]
    assert len(star_row) == 1  # only the 4-path is a subdivided star


def test_search_deterministic_across_workers():
    solo = search_extremal(1, 9, jobs=1, emit_rows=True)
    multi = search_extremal(1, 9, jobs=2, emit_rows=True)
    assert report_text(solo) == report_text(multi)
    assert report_csv_lines(solo) == report_csv_lines(multi)


def test_search_parameter_validation():
    with pytest.raises(ValueError):
        search_extremal(0, 5)
    with pytest.raises(ValueError):
        search_extremal(5, 4)
    with pytest.raises(ValueError):
        search_extremal(1, 99)
    with pytest.raises(ValueError):
        search_extremal(1, 5, jobs=0)
    with pytest.raises(ValueError):
        search_extremal(1, 5, checks=("nonsense",))


def test_search_ceiling_env_override(monkeypatch):
    monkeypatch.setenv("DOMCOUNT_MAX_ORDER", "8")
    with pytest.raises(ValueError):
        search_extremal(1, 9)
    assert search_extremal(1, 8).trees_processed == 48


def test_search_records_agree_with_direct_sweep():
    report = search_extremal(1, 8)
    from domcount.domination import count_min_dominating_sets
    best = {}
    for n in range(1, 9):
        for code in generate_trees(n):
            result = count_min_dominating_sets(code.decode())
            incumbent = best.get(result.gamma, 0)
            best[result.gamma] = max(incumbent, result.mds_count)
    assert {g: r.best_count for g, r in report.gamma_records.items()} == best
