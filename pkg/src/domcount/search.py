"""Exhaustive sweep over free trees: bound checks and extremal records.

Walks every isomorphism class in an order range, counts minimum dominating
sets and maximum independent sets, and checks three things per tree:

  * the MDS count stays within 2.4606^gamma, compared exactly as
    count * 10000^gamma <= 24606^gamma so no rounding is involved;
  * the MIS count stays within 2^(alpha-1)+1, with equality exactly on the
    trees the subdivided-star recognizer accepts;
  * the MIS count stays within the order-based ceiling for trees
    (2^((n-2)/2)+1 for even n, 2^((n-3)/2) for odd n >= 3).

Per domination number and per independence number the best count seen is
kept with a witness (ties broken to the smaller order, then the smaller
canonical code).  The sweep parallelizes over contiguous chunks of the
generation stream; partial results merge associatively, so the report is
identical for any worker count.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from fractions import Fraction
from functools import partial

from .domination import count_min_dominating_sets, enumerate_min_dominating_sets
from .forest import Forest, classify_vertices, pendant_two_paths
from .independence import SpiderShape, count_max_independent_sets, is_subdivided_star
from .limits import search_max_order
from .treegen import CanonicalCode, generate_trees

ALL_CHECKS = ("mds-bound", "mis-bound", "order-bound", "diagnostics")

# 2.4606 as an exact rational: the bound's base, truncated to the four
# decimals used in the statement being checked.
_BOUND_NUMERATOR = 24606
_BOUND_DENOMINATOR = 10000


@dataclass(frozen=True)
class GrowthBaseBracket:
    """Rational bracket around the largest root of x^3 - x^2 - 4x + 1."""
    lo: Fraction
    hi: Fraction

    def support_rate_bracket(self) -> tuple[Fraction, Fraction]:
        """Bracket for the companion rate b/(b-1), decreasing in b."""
        return (self.hi / (self.hi - 1), self.lo / (self.lo - 1))


def _cubic(x: Fraction) -> Fraction:
    return x * x * x - x * x - 4 * x + 1


def compute_growth_base(width) -> GrowthBaseBracket:
    """Bisect x^3 - x^2 - 4x + 1 on [2, 3] down to the requested width.

    The cubic is -3 at 2 and +7 at 3, so the bracket is valid from the
    start and every midpoint keeps exact rational endpoints.
    """
    width = Fraction(width)
    if width <= 0:
        raise ValueError(f"width must be positive, got {width}")
    lo, hi = Fraction(2), Fraction(3)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if _cubic(mid) <= 0:
            lo = mid
        else:
            hi = mid
    return GrowthBaseBracket(lo, hi)


def verify_mds_bound(gamma: int, count: int) -> bool:
    """count <= 2.4606^gamma, checked exactly over the integers."""
    if gamma < 1:
        raise ValueError(f"gamma must be at least 1, got {gamma}")
    return count * _BOUND_DENOMINATOR**gamma <= _BOUND_NUMERATOR**gamma


@dataclass(frozen=True)
class MisBoundCheck:
    passed: bool
    equality: bool
    consistent: bool


def verify_mis_bound(alpha: int, count: int, shape: SpiderShape) -> MisBoundCheck:
    """count <= 2^(alpha-1)+1, equality expected exactly on subdivided stars."""
    if alpha < 1:
        raise ValueError(f"alpha must be at least 1, got {alpha}")
    bound = (1 << (alpha - 1)) + 1
    equality = count == bound
    return MisBoundCheck(passed=count <= bound, equality=equality,
                         consistent=equality == shape.is_subdivided_star)


def mis_order_bound(n: int) -> int:
    """Ceiling for the MIS count of a tree, by order alone.

    The single vertex is handled directly (the odd-n formula is fractional
    at n=1); it has exactly one maximum independent set.
    """
    if n < 1:
        raise ValueError(f"order must be at least 1, got {n}")
    if n == 1:
        return 1
    if n % 2 == 0:
        return (1 << ((n - 2) // 2)) + 1
    return 1 << ((n - 3) // 2)


@dataclass(frozen=True)
class HubConfiguration:
    """A vertex together with the pendant-2-path counts of those neighbors
    whose whole hanging subtree is such a bundle of paths."""
    at: int
    parts: tuple[int, ...]

    @property
    def gap(self) -> int:
        return max(self.parts) - min(self.parts)


@dataclass(frozen=True)
class DiagnosticsReport:
    endvertices_covered: bool
    uncovered_endvertices: tuple[int, ...]
    configurations: tuple[HubConfiguration, ...]

    @property
    def max_hub_gap(self) -> int | None:
        if not self.configurations:
            return None
        return max(c.gap for c in self.configurations)


def extremal_diagnostics(forest: Forest) -> DiagnosticsReport:
    """Structural sanity checks expected of count-maximizing trees.

    (1) every endvertex should appear in at least one minimum dominating
    set; (2) wherever two or more neighbors of a common vertex hang whole
    bundles of pendant 2-paths, the bundle sizes should differ by at most
    one.  Both are reported, never enforced.
    """
    if forest.component_count != 1:
        raise ValueError("diagnostics expect a single tree component")
    covered: set[int] = set()
    for dom_set in enumerate_min_dominating_sets(forest):
        covered |= dom_set
    endvertices = sorted(classify_vertices(forest).endvertices)
    uncovered = tuple(v for v in endvertices if v not in covered)
    configurations = []
    for x in range(forest.n):
        parts = []
        for w in forest.adj[x]:
            chains = pendant_two_paths(forest, w, x)
            if chains:
                parts.append(len(chains))
        if len(parts) >= 2:
            configurations.append(HubConfiguration(at=x, parts=tuple(sorted(parts, reverse=True))))
    return DiagnosticsReport(
        endvertices_covered=not uncovered,
        uncovered_endvertices=uncovered,
        configurations=tuple(configurations),
    )


@dataclass(frozen=True)
class ExtremalRecord:
    key: int
    best_count: int
    witness: CanonicalCode
    witness_order: int


@dataclass(frozen=True)
class TreeRow:
    order: int
    code: str
    gamma: int
    mds_count: int
    alpha: int
    mis_count: int
    mds_bound_ok: bool
    mis_bound_ok: bool
    mis_equality: bool
    is_subdivided_star: bool


@dataclass
class SearchReport:
    min_order: int
    max_order: int
    checks: tuple[str, ...]
    trees_processed: int
    gamma_records: dict[int, ExtremalRecord]
    alpha_records: dict[int, ExtremalRecord]
    mds_bound_violations: list[tuple[str, str]]
    mis_bound_violations: list[tuple[str, str]]
    order_bound_violations: list[tuple[str, str]]
    rows: list[TreeRow] | None = None
    diagnostics: dict[int, DiagnosticsReport] | None = None

    @property
    def violation_count(self) -> int:
        return (len(self.mds_bound_violations) + len(self.mis_bound_violations)
                + len(self.order_bound_violations))


@dataclass
class _Partial:
    trees: int
    gamma_records: dict[int, tuple[int, int, tuple[int, ...]]]
    alpha_records: dict[int, tuple[int, int, tuple[int, ...]]]
    mds_violations: list[tuple[str, str]]
    mis_violations: list[tuple[str, str]]
    order_violations: list[tuple[str, str]]
    rows: list[TreeRow] | None


def _better(a: tuple[int, int, tuple[int, ...]], b: tuple[int, int, tuple[int, ...]]):
    """Record merge: larger count, then smaller order, then smaller code."""
    a_count, a_order, a_levels = a
    b_count, b_order, b_levels = b
    if a_count != b_count:
        return a if a_count > b_count else b
    if a_order != b_order:
        return a if a_order < b_order else b
    a_key = tuple(-x for x in a_levels)
    b_key = tuple(-x for x in b_levels)
    return a if a_key <= b_key else b


def _merge_record(records: dict, key: int, entry: tuple[int, int, tuple[int, ...]]):
    incumbent = records.get(key)
    records[key] = entry if incumbent is None else _better(incumbent, entry)


def _process_batch(levels_batch, emit_rows: bool) -> _Partial:
    partial_report = _Partial(0, {}, {}, [], [], [], [] if emit_rows else None)
    for levels in levels_batch:
        code = CanonicalCode(levels)
        forest = code.decode()
        n = forest.n
        dom = count_min_dominating_sets(forest)
        ind = count_max_independent_sets(forest)
        shape = is_subdivided_star(forest)
        mds_ok = verify_mds_bound(dom.gamma, dom.mds_count)
        mis_check = verify_mis_bound(ind.alpha, ind.mis_count, shape)
        order_ok = ind.mis_count <= mis_order_bound(n)
        code_str = code.to_string()
        if not mds_ok:
            partial_report.mds_violations.append(
                (code_str, f"gamma={dom.gamma} count={dom.mds_count} exceeds 2.4606^gamma"))
        if not mis_check.passed:
            partial_report.mis_violations.append(
                (code_str, f"alpha={ind.alpha} count={ind.mis_count} exceeds 2^(alpha-1)+1"))
        elif not mis_check.consistent:
            partial_report.mis_violations.append(
                (code_str,
                 f"alpha={ind.alpha} count={ind.mis_count} equality={mis_check.equality} "
                 f"recognizer={shape.is_subdivided_star}"))
        if not order_ok:
            partial_report.order_violations.append(
                (code_str, f"order={n} count={ind.mis_count} exceeds order bound {mis_order_bound(n)}"))
        _merge_record(partial_report.gamma_records, dom.gamma, (dom.mds_count, n, levels))
        _merge_record(partial_report.alpha_records, ind.alpha, (ind.mis_count, n, levels))
        if emit_rows:
            partial_report.rows.append(TreeRow(
                order=n, code=code_str, gamma=dom.gamma, mds_count=dom.mds_count,
                alpha=ind.alpha, mis_count=ind.mis_count, mds_bound_ok=mds_ok,
                mis_bound_ok=mis_check.passed, mis_equality=mis_check.equality,
                is_subdivided_star=shape.is_subdivided_star))
        partial_report.trees += 1
    return partial_report


def _iter_batches(min_order: int, max_order: int, batch_size: int = 256):
    for n in range(min_order, max_order + 1):
        batch = []
        for code in generate_trees(n):
            batch.append(code.levels)
            if len(batch) >= batch_size:
                yield batch
                batch = []
        if batch:
            yield batch


def search_extremal(min_order: int, max_order: int, checks=None, jobs: int = 1,
                    emit_rows: bool = False) -> SearchReport:
    """Sweep all free trees with min_order <= n <= max_order.

    ``checks`` selects which verdicts are collected (default: all).  The
    report is byte-for-byte identical for every ``jobs`` value: batches are
    contiguous chunks of the deterministic generation stream and merging is
    associative with fixed tie-breaking.
    """
    ceiling = search_max_order()
    if not 1 <= min_order <= max_order:
        raise ValueError(f"need 1 <= min_order <= max_order, got {min_order}..{max_order}")
    if max_order > ceiling:
        raise ValueError(f"max order {max_order} exceeds the search ceiling {ceiling}")
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")
    if checks is None:
        checks = ALL_CHECKS
    checks = tuple(checks)
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")

    worker = partial(_process_batch, emit_rows=emit_rows)
    if jobs == 1:
        partials = map(worker, _iter_batches(min_order, max_order))
        merged = _merge_partials(partials, emit_rows)
    else:
        with multiprocessing.Pool(jobs) as pool:
            partials = pool.imap(worker, _iter_batches(min_order, max_order))
            merged = _merge_partials(partials, emit_rows)

    report = SearchReport(
        min_order=min_order,
        max_order=max_order,
        checks=checks,
        trees_processed=merged.trees,
        gamma_records={g: ExtremalRecord(g, c, CanonicalCode(lv), o)
                       for g, (c, o, lv) in sorted(merged.gamma_records.items())},
        alpha_records={a: ExtremalRecord(a, c, CanonicalCode(lv), o)
                       for a, (c, o, lv) in sorted(merged.alpha_records.items())},
        mds_bound_violations=merged.mds_violations if "mds-bound" in checks else [],
        mis_bound_violations=merged.mis_violations if "mis-bound" in checks else [],
        order_bound_violations=merged.order_violations if "order-bound" in checks else [],
        rows=merged.rows,
    )
    if "diagnostics" in checks:
        report.diagnostics = {
            g: extremal_diagnostics(record.witness.decode())
            for g, record in report.gamma_records.items()
        }
    return report


def _merge_partials(partials, emit_rows: bool) -> _Partial:
    merged = _Partial(0, {}, {}, [], [], [], [] if emit_rows else None)
    for p in partials:
        merged.trees += p.trees
        for key, entry in p.gamma_records.items():
            _merge_record(merged.gamma_records, key, entry)
        for key, entry in p.alpha_records.items():
            _merge_record(merged.alpha_records, key, entry)
        merged.mds_violations.extend(p.mds_violations)
        merged.mis_violations.extend(p.mis_violations)
        merged.order_violations.extend(p.order_violations)
        if emit_rows:
            merged.rows.extend(p.rows)
    return merged


CSV_HEADER = ("order,code,gamma,mds_count,alpha,mis_count,"
              "mds_bound_ok,mis_bound_ok,mis_equality,is_subdivided_star")


def _fmt_bool(value: bool) -> str:
    return "true" if value else "false"


def report_csv_lines(report: SearchReport) -> list[str]:
    lines = [CSV_HEADER]
    for row in report.rows or ():
        lines.append(",".join([
            str(row.order), row.code, str(row.gamma), str(row.mds_count),
            str(row.alpha), str(row.mis_count), _fmt_bool(row.mds_bound_ok),
            _fmt_bool(row.mis_bound_ok), _fmt_bool(row.mis_equality),
            _fmt_bool(row.is_subdivided_star),
        ]))
    return lines


def report_text(report: SearchReport) -> str:
    lines = [
        "search report",
        f"orders: {report.min_order}..{report.max_order}",
        f"trees processed: {report.trees_processed}",
        f"checks: {', '.join(report.checks)}",
        f"mds bound violations: {len(report.mds_bound_violations)}",
    ]
    lines.extend(f"  {code} {detail}" for code, detail in report.mds_bound_violations)
    lines.append(f"mis bound violations: {len(report.mis_bound_violations)}")
    lines.extend(f"  {code} {detail}" for code, detail in report.mis_bound_violations)
    lines.append(f"order bound violations: {len(report.order_bound_violations)}")
    lines.extend(f"  {code} {detail}" for code, detail in report.order_bound_violations)
    lines.append("per-gamma records:")
    for gamma, record in report.gamma_records.items():
        suffix = ""
        if record.best_count > (1 << gamma):
            suffix = f" exceeds 2^gamma={1 << gamma}"
        lines.append(f"  gamma={gamma} count={record.best_count} "
                     f"order={record.witness_order} code={record.witness.to_string()}{suffix}")
    lines.append("per-alpha records:")
    for alpha, record in report.alpha_records.items():
        lines.append(f"  alpha={alpha} count={record.best_count} "
                     f"order={record.witness_order} code={record.witness.to_string()}")
    if report.diagnostics is not None:
        lines.append(f"record diagnostics (within order <= {report.max_order}):")
        for gamma, diag in report.diagnostics.items():
            gap = "-" if diag.max_hub_gap is None else str(diag.max_hub_gap)
            lines.append(f"  gamma={gamma}: endvertices_covered={_fmt_bool(diag.endvertices_covered)} "
                         f"max_hub_gap={gap}")
    return "\n".join(lines) + "\n"
