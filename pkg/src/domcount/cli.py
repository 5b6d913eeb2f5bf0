"""Command line front door.

Subcommands: count, enumerate, family, optimize-family, search, verify.
Exit status: 0 on success, 1 when a check fails (bound violation or oracle
mismatch), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from .domination import brute_force_domination, count_min_dominating_sets, enumerate_min_dominating_sets
from .family import balanced_partition, build_family_tree, closed_form_count, family_tree_text, growth_trend, optimize_k
from .forest import ForestError, parse_forest
from .independence import brute_force_independence, count_max_independent_sets, enumerate_max_independent_sets
from .search import report_csv_lines, report_text, search_extremal
from .treegen import generate_trees


def sci4(value: int) -> str:
    """Mantissa.e-exponent rendering with four significant digits, truncated."""
    if value < 0:
        raise ValueError("sci4 expects a nonnegative integer")
    if value == 0:
        return "0.000e0"
    digits = str(value)
    return f"{digits[0]}.{digits[1:4].ljust(3, '0')}e{len(digits) - 1}"


def _read_forest(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_forest(handle.read())


def _cmd_count(args) -> int:
    forest = _read_forest(args.input)
    dom = count_min_dominating_sets(forest)
    ind = count_max_independent_sets(forest)
    if args.format == "csv":
        print("n,components,gamma,mds_count,mds_count_sci,alpha,mis_count,mis_count_sci")
        print(",".join(map(str, [forest.n, forest.component_count, dom.gamma, dom.mds_count,
                                 sci4(dom.mds_count), ind.alpha, ind.mis_count, sci4(ind.mis_count)])))
    else:
        print(f"n={forest.n} components={forest.component_count}")
        print(f"gamma={dom.gamma}")
        print(f"mds_count={dom.mds_count} ({sci4(dom.mds_count)})")
        print(f"alpha={ind.alpha}")
        print(f"mis_count={ind.mis_count} ({sci4(ind.mis_count)})")
    return 0


def _cmd_enumerate(args) -> int:
    forest = _read_forest(args.input)
    if args.set == "mis":
        sets = enumerate_max_independent_sets(forest, limit=args.limit)
        size_name, total = "alpha", count_max_independent_sets(forest)
        size_value, count_value = total.alpha, total.mis_count
    else:
        sets = enumerate_min_dominating_sets(forest, limit=args.limit)
        dom = count_min_dominating_sets(forest)
        size_name, size_value, count_value = "gamma", dom.gamma, dom.mds_count
    if args.format == "csv":
        print("index,size,vertices")
        for i, s in enumerate(sets):
            print(f"{i},{len(s)},{' '.join(map(str, sorted(s)))}")
    else:
        print(f"{size_name}={size_value} count={count_value} shown={len(sets)}")
        for s in sets:
            print(" ".join(map(str, sorted(s))))
    return 0


def _parse_parts(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"--p expects comma-separated integers, got {text!r}") from None
    return parts


def _cmd_family(args) -> int:
    if args.p is not None:
        parts = _parse_parts(args.p)
    elif args.gamma is not None and args.k is not None:
        parts = balanced_partition(args.gamma, args.k)
    else:
        raise ValueError("family needs either --p or both --gamma and --k")
    tree = build_family_tree(parts)
    dom = count_min_dominating_sets(tree.forest)
    k = len(parts)
    balanced = parts == balanced_partition(dom.gamma, k)
    closed = closed_form_count(dom.gamma, k) if balanced else None
    if args.format == "csv":
        print("order,gamma,k,p,mds_count,mds_count_sci,closed_form")
        closed_field = "" if closed is None else str(closed)
        print(",".join(map(str, [tree.forest.n, dom.gamma, k, " ".join(map(str, parts)),
                                 dom.mds_count, sci4(dom.mds_count), closed_field])))
    else:
        sys.stdout.write(family_tree_text(tree))
        line = (f"order={tree.forest.n} gamma={dom.gamma} k={k} "
                f"mds_count={dom.mds_count} ({sci4(dom.mds_count)})")
        if closed is not None:
            line += f" closed_form={closed}"
        print(line)
    return 0


def _cmd_optimize_family(args) -> int:
    gammas = [int(tok) for tok in args.gamma.split(",")]
    rows = [optimize_k(g) for g in gammas]
    trend = {t.gamma: t for t in growth_trend(gammas)} if args.trend else {}
    if args.format == "csv":
        header = "gamma,best_k,formula_value,formula_sci,table_value,table_sci"
        if args.trend:
            header += ",ratio_to_reference,k_scaled"
        print(header)
        for row in rows:
            fields = [row.gamma, row.best_k, row.formula_value, sci4(row.formula_value),
                      row.table_interpretation_value, sci4(row.table_interpretation_value)]
            if args.trend:
                t = trend[row.gamma]
                fields.extend([f"{t.ratio_to_reference:.4f}", f"{t.k_scaled:.4f}"])
            print(",".join(map(str, fields)))
    else:
        for row in rows:
            line = (f"gamma={row.gamma} best_k={row.best_k} "
                    f"formula_value={row.formula_value} ({sci4(row.formula_value)}) "
                    f"table_value={row.table_interpretation_value} "
                    f"({sci4(row.table_interpretation_value)})")
            if args.trend:
                t = trend[row.gamma]
                line += f" ratio_to_reference={t.ratio_to_reference:.4f} k_scaled={t.k_scaled:.4f}"
            print(line)
    return 0


def _cmd_search(args) -> int:
    report = search_extremal(args.min_order, args.max_order, jobs=args.jobs,
                             emit_rows=args.emit_all)
    if args.format == "csv":
        for line in report_csv_lines(report):
            print(line)
        sys.stderr.write(report_text(report))
    else:
        if args.emit_all:
            for line in report_csv_lines(report):
                print(line)
        sys.stdout.write(report_text(report))
    return 1 if report.violation_count else 0


def _cmd_verify(args) -> int:
    failures = 0
    total = 0
    for n in range(1, args.max_order + 1):
        trees = 0
        for code in generate_trees(n):
            forest = code.decode()
            dom, dom_oracle = count_min_dominating_sets(forest), brute_force_domination(forest)
            ind, ind_oracle = count_max_independent_sets(forest), brute_force_independence(forest)
            if dom != dom_oracle:
                print(f"mismatch (domination) {code.to_string()}: dp={dom} oracle={dom_oracle}")
                failures += 1
            if ind != ind_oracle:
                print(f"mismatch (independence) {code.to_string()}: dp={ind} oracle={ind_oracle}")
                failures += 1
            trees += 1
        total += trees
        print(f"order {n}: {trees} trees checked")
    if failures:
        print(f"verify FAILED: {failures} mismatches over {total} trees")
        return 1
    print(f"verify ok: orders 1..{args.max_order}, {total} trees, dp == brute force")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domcount",
        description="Exact minimum-dominating-set and maximum-independent-set "
                    "counting on forests, with exhaustive bound checking.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="gamma, MDS count, alpha, MIS count of a forest file")
    p_count.add_argument("--input", required=True, help="forest file")
    p_count.add_argument("--format", choices=("csv", "text"), default="text")
    p_count.set_defaults(func=_cmd_count)

    p_enum = sub.add_parser("enumerate", help="list minimum dominating or maximum independent sets")
    p_enum.add_argument("--input", required=True, help="forest file")
    p_enum.add_argument("--set", choices=("mds", "mis"), default="mds")
    p_enum.add_argument("--limit", type=int, default=None)
    p_enum.add_argument("--format", choices=("csv", "text"), default="text")
    p_enum.set_defaults(func=_cmd_enumerate)

    p_family = sub.add_parser("family", help="build and evaluate a two-level spider family tree")
    p_family.add_argument("--p", help="comma-separated hub part sizes, e.g. 3,3,3")
    p_family.add_argument("--gamma", type=int, help="target domination number (with --k)")
    p_family.add_argument("--k", type=int, help="hub count for the balanced partition")
    p_family.add_argument("--format", choices=("csv", "text"), default="text")
    p_family.set_defaults(func=_cmd_family)

    p_opt = sub.add_parser("optimize-family", help="best hub count and counts per gamma")
    p_opt.add_argument("--gamma", required=True, help="gamma value or comma-separated list")
    p_opt.add_argument("--trend", action="store_true",
                       help="add ratio columns against gamma*2^gamma/ln(gamma)")
    p_opt.add_argument("--format", choices=("csv", "text"), default="text")
    p_opt.set_defaults(func=_cmd_optimize_family)

    p_search = sub.add_parser("search", help="exhaustive sweep with bound checks")
    p_search.add_argument("--min-order", type=int, default=1)
    p_search.add_argument("--max-order", type=int, default=10)
    p_search.add_argument("--jobs", type=int, default=1)
    p_search.add_argument("--emit-all", action="store_true",
                          help="emit one CSV row per processed tree")
    p_search.add_argument("--format", choices=("csv", "text"), default="text")
    p_search.set_defaults(func=_cmd_search)

    p_verify = sub.add_parser("verify", help="dynamic program vs brute force, all trees up to an order")
    p_verify.add_argument("--max-order", type=int, default=10)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ForestError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
