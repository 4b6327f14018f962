"""Bottom-up dynamic program over the decomposition tree.

Every tree node H gets a table of budget-indexed label sets: entry x holds
the nondominated objective pairs achievable in H when the interdictor may
allot exactly x units. Leaf tables come straight from the arc (uninterdicted
label below the arc's cost, the (inf, inf) label from the cost upward, or
uninterdicted everywhere if the arc is unaffordable). An internal node at
budget x unions one combination per budget split k: the componentwise sum
of child labels for a series node, the componentwise minimum for a parallel
node, then filters dominated candidates. The instance frontier is the root
table entry at the full budget.

Tables are budget-monotone: raising x never loses ground. That invariant is
asserted in debug mode and justifies reading only the final index.

Strategy recovery: each surviving label carries a backpointer, either the
leaf's interdicted flag or a record (left_budget, right_budget, left_index,
right_index) naming the child labels it was combined from. The budgets are
stored explicitly (rather than a single split of x) so equal consecutive
table slots can share one label-set object. Ties are broken deterministically:
smallest split first, then child label positions.
"""

from __future__ import annotations

import math
import time
from bisect import bisect_left
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from .decompose import LEAF, SERIES, DecompositionTree, decompose
from .errors import CoordinateOverflow, InvariantViolation, MalformedInstance
from .model import (
    INF,
    MAX_COORD,
    Arc,
    Instance,
    InterdictionStrategy,
    Point,
    POINT_INF,
    coord_to_json,
)
from .pareto import LabelSet, _sweep

BudgetTable = Sequence[LabelSet]


def leaf_labels(arc: Arc, budget: int) -> list[LabelSet]:
    """Budget table of a single-arc graph.

    Affordable arcs are cut from x = cost onward; unaffordable arcs keep
    their uninterdicted label at every allotment. A zero-cost arc is cut
    at every x (the uninterdicted range is empty).
    """
    live = LabelSet((Point(arc.len1, arc.len2),), (False,))
    if arc.cost > budget:
        return [live] * (budget + 1)
    cut = LabelSet((POINT_INF,), (True,))
    return [live] * arc.cost + [cut] * (budget + 1 - arc.cost)


def _products_series(
    a_pts: tuple[Point, ...], b_pts: tuple[Point, ...]
) -> list[tuple[Point, int, int]]:
    if a_pts == (POINT_INF,) or b_pts == (POINT_INF,):
        return [(POINT_INF, 0, 0)]
    out = []
    for i, a in enumerate(a_pts):
        a1, a2 = a
        for j, b in enumerate(b_pts):
            f1 = a1 + b[0]
            f2 = a2 + b[1]
            if f1 > MAX_COORD and not math.isinf(f1):
                raise CoordinateOverflow(f"f1 coordinate {f1} exceeds {MAX_COORD}")
            if f2 > MAX_COORD and not math.isinf(f2):
                raise CoordinateOverflow(f"f2 coordinate {f2} exceeds {MAX_COORD}")
            out.append((Point(f1, f2), i, j))
    return out


def _products_parallel(
    a_pts: tuple[Point, ...], b_pts: tuple[Point, ...]
) -> list[tuple[Point, int, int]]:
    if a_pts == (POINT_INF,):
        return [(b, 0, j) for j, b in enumerate(b_pts)]
    if b_pts == (POINT_INF,):
        return [(a, i, 0) for i, a in enumerate(a_pts)]
    out = []
    for i, a in enumerate(a_pts):
        a1, a2 = a
        for j, b in enumerate(b_pts):
            out.append((Point(a1 if a1 < b[0] else b[0],
                              a2 if a2 < b[1] else b[1]), i, j))
    return out


def _compose(
    t1: BudgetTable,
    t2: BudgetTable,
    budget: int,
    products: Callable,
    filter_seconds: list[float] | None = None,
) -> list[LabelSet]:
    if len(t1) != budget + 1 or len(t2) != budget + 1:
        raise ValueError("child tables must have budget + 1 entries")
    memo: dict[tuple[int, int], list] = {}
    out: list[LabelSet] = []
    for x in range(budget + 1):
        chosen: dict[Point, tuple] = {}
        get = chosen.get
        seen_pairs = set()
        for k in range(x + 1):
            a_set, b_set = t1[k], t2[x - k]
            key = (id(a_set), id(b_set))
            if key in seen_pairs:
                continue  # identical product already claimed these points
            seen_pairs.add(key)
            prods = memo.get(key)
            if prods is None:
                prods = products(a_set.points, b_set.points)
                memo[key] = prods
            xk = x - k
            for p, i, j in prods:
                if get(p) is None:
                    chosen[p] = (k, xk, i, j)
        t0 = time.perf_counter() if filter_seconds is not None else 0.0
        pts = _sweep(chosen)
        label_set = LabelSet(tuple(pts), tuple(chosen[p] for p in pts))
        if filter_seconds is not None:
            filter_seconds.append(time.perf_counter() - t0)
        if x and label_set.points == out[-1].points:
            out.append(out[-1])  # share the slot; backpointers stay valid
        else:
            out.append(label_set)
    return out


def compose_series(t1: BudgetTable, t2: BudgetTable, budget: int) -> list[LabelSet]:
    """Tables of the series composition: labels combine by componentwise sum."""
    return _compose(t1, t2, budget, _products_series)


def compose_parallel(t1: BudgetTable, t2: BudgetTable, budget: int) -> list[LabelSet]:
    """Tables of the parallel composition: labels combine by componentwise min."""
    return _compose(t1, t2, budget, _products_parallel)


# ---------------------------------------------------------------------------
# Invariant checks (debug instrumentation)
# ---------------------------------------------------------------------------

def weakly_covered(p: Point, label_set: LabelSet) -> bool:
    """True iff some member of the set equals p or dominates it."""
    pts = label_set.points
    # First member with f1 >= p.f1; it has the largest f2 of that suffix.
    i = bisect_left(pts, (p[0],))
    return i < len(pts) and pts[i][1] >= p[1]


def check_label_bound(inst: Instance, label_set: LabelSet) -> None:
    """Size bound: finite f1 values range over 0..(n-1)*L_max, plus (inf, inf)."""
    bound = (inst.n - 1) * inst.max_length + 2
    if len(label_set) > bound:
        raise InvariantViolation(
            f"label set of size {len(label_set)} exceeds bound {bound}"
        )


def check_budget_monotone(table: BudgetTable, *, all_pairs: bool = False) -> None:
    """Every point at allotment k must be weakly covered at allotment x > k.

    Adjacent slots suffice (weak coverage is transitive); ``all_pairs``
    checks every k <= x pair explicitly.
    """
    for x in range(1, len(table)):
        lower = range(x) if all_pairs else (x - 1,)
        for k in lower:
            if table[k] is table[x]:
                continue
            for p in table[k].points:
                if not weakly_covered(p, table[x]):
                    raise InvariantViolation(
                        f"point {p} at budget {k} is uncovered at budget {x}"
                    )


# ---------------------------------------------------------------------------
# Solve
# ---------------------------------------------------------------------------

@dataclass
class SolveResult:
    frontier: LabelSet
    strategies: dict[Point, InterdictionStrategy]
    tree: DecompositionTree | None = None
    tables: list[list[LabelSet]] | None = None


def _recover_strategy(
    tree: DecompositionTree,
    tables: list[list[LabelSet]],
    node_idx: int,
    budget: int,
    point_idx: int,
) -> InterdictionStrategy:
    arcs: list[str] = []
    stack = [(node_idx, budget, point_idx)]
    while stack:
        idx, x, i = stack.pop()
        node = tree.nodes[idx]
        record = tables[idx][x].provenance[i]
        if node.kind == LEAF:
            if record:
                arcs.append(node.arc_id)
        else:
            kl, kr, il, ir = record
            stack.append((node.left, kl, il))
            stack.append((node.right, kr, ir))
    return InterdictionStrategy(frozenset(arcs))


def solve(
    inst: Instance,
    *,
    threads: int = 1,
    check_invariants: bool | None = None,
    keep_tables: bool = False,
    stats: dict | None = None,
) -> SolveResult:
    """Exact nondominated frontier plus one witnessing strategy per point.

    Requires a two-terminal series-parallel instance (decompose must
    accept it). ``threads`` > 1 evaluates independent subtrees in a pool;
    results are identical for any thread count. ``check_invariants``
    defaults to __debug__ and validates the budget-monotonicity and
    label-count bounds at every node.
    """
    if check_invariants is None:
        check_invariants = __debug__
    budget = inst.budget
    t_start = time.perf_counter()
    tree = decompose(inst)
    t_decomposed = time.perf_counter()
    # per-slot filter timings; appended to (atomically) by worker threads
    filter_seconds: list[float] | None = [] if stats is not None else None

    tables: list[list[LabelSet] | None] = [None] * len(tree.nodes)

    def evaluate(idx: int) -> None:
        node = tree.nodes[idx]
        if node.kind == LEAF:
            table = leaf_labels(inst.arc_by_id[node.arc_id], budget)
        else:
            products = _products_series if node.kind == SERIES else _products_parallel
            table = _compose(
                tables[node.left], tables[node.right], budget, products,
                filter_seconds,
            )
        if check_invariants:
            for label_set in table:
                check_label_bound(inst, label_set)
            check_budget_monotone(table)
        tables[idx] = table

    if threads <= 1:
        for idx in range(len(tree.nodes)):
            evaluate(idx)  # children always precede parents
    else:
        height = [0] * len(tree.nodes)
        for idx, node in enumerate(tree.nodes):
            if node.kind != LEAF:
                height[idx] = 1 + max(height[node.left], height[node.right])
        by_level: dict[int, list[int]] = {}
        for idx, h in enumerate(height):
            by_level.setdefault(h, []).append(idx)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for h in sorted(by_level):
                list(pool.map(evaluate, by_level[h]))

    t_solved = time.perf_counter()
    frontier = tables[tree.root][budget]
    strategies = {
        p: _recover_strategy(tree, tables, tree.root, budget, i)
        for i, p in enumerate(frontier.points)
    }
    t_done = time.perf_counter()
    if stats is not None:
        stats["decompose_s"] = t_decomposed - t_start
        stats["dp_s"] = t_solved - t_decomposed
        stats["filter_s"] = sum(filter_seconds)
        stats["recover_s"] = t_done - t_solved
    return SolveResult(
        frontier=frontier,
        strategies=strategies,
        tree=tree if keep_tables else None,
        tables=tables if keep_tables else None,
    )


@dataclass
class Decision:
    answer: bool
    point: Point | None = None
    witness: InterdictionStrategy | None = None


def decide(
    inst: Instance,
    threshold: Point,
    mode: str = "weak",
    *,
    solve_result: SolveResult | None = None,
) -> Decision:
    """Is some feasible strategy's objective pair at least ``threshold``?

    weak mode accepts componentwise >=; strict mode additionally requires
    the point to differ from the threshold. The witness is the stored
    strategy of the qualifying frontier point with smallest f1.
    """
    if mode not in ("weak", "strict"):
        raise ValueError(f"mode must be 'weak' or 'strict', got {mode!r}")
    if math.isinf(threshold[0]) or math.isinf(threshold[1]):
        raise MalformedInstance("decision threshold must be finite")
    result = solve_result if solve_result is not None else solve(inst)
    for p in result.frontier.points:
        if p[0] >= threshold[0] and p[1] >= threshold[1]:
            if mode == "strict" and p == threshold:
                continue
            return Decision(True, p, result.strategies[p])
    return Decision(False)


# ---------------------------------------------------------------------------
# Frontier serialization (shared by the oracle and the CLI)
# ---------------------------------------------------------------------------

def frontier_rows(
    frontier: LabelSet, strategies: dict[Point, InterdictionStrategy]
) -> list[dict]:
    rows = []
    for p in frontier.points:  # canonical order: ascending f1
        rows.append(
            {
                "f1": coord_to_json(p.f1),
                "f2": coord_to_json(p.f2),
                "strategy": sorted(strategies[p].interdicted),
            }
        )
    return rows


def rows_to_csv(rows: list[dict]) -> str:
    lines = ["f1,f2,strategy_size,arc_ids"]
    for row in rows:
        arc_ids = ";".join(row["strategy"])
        lines.append(f"{row['f1']},{row['f2']},{len(row['strategy'])},{arc_ids}")
    return "\n".join(lines) + "\n"
