"""Ground truth by exhaustive enumeration of feasible interdiction subsets.

Valid on arbitrary directed multigraphs, not just series-parallel ones;
this is the independent verifier the dynamic program is checked against.
Depth-first include/exclude over the arcs (sorted by id), pruning any
branch whose accumulated cost already exceeds the budget. A hard cap on
the number of cost-feasible subsets guards against accidental blowups:
the count is computed exactly up front and the run is refused, never
silently truncated, when it exceeds the cap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InstanceTooLarge
from .model import (
    Instance,
    InterdictionStrategy,
    Point,
    dominates,
    shortest_length,
)
from .pareto import LabelSet, filter_nondominated

DEFAULT_CAP = 2**24


@dataclass
class OracleResult:
    frontier: LabelSet
    strategies_per_point: dict[Point, list[InterdictionStrategy]]
    strategies_enumerated: int


def shortest_path_length(
    inst: Instance, removed: frozenset[str] | set[str], objective: int
) -> int | float:
    """Shortest s-t length for one player after removing the given arcs."""
    return shortest_length(inst, frozenset(removed), objective)


def count_feasible_strategies(inst: Instance) -> int:
    """Exact number of arc subsets with total cost <= budget."""
    ways = [0] * (inst.budget + 1)
    ways[0] = 1
    for arc in inst.arcs:
        c = arc.cost
        if c == 0:
            ways = [2 * w for w in ways]
        elif c <= inst.budget:
            for b in range(inst.budget, c - 1, -1):
                ways[b] += ways[b - c]
    return sum(ways)


def enumerate_frontier(inst: Instance, *, cap: int = DEFAULT_CAP) -> OracleResult:
    """Evaluate every feasible strategy; return the frontier and all its witnesses.

    Raises InstanceTooLarge (with the exact count) instead of running when
    more than ``cap`` subsets are feasible.
    """
    count = count_feasible_strategies(inst)
    if count > cap:
        raise InstanceTooLarge(count, cap)

    arcs = sorted(inst.arcs, key=lambda a: a.id)
    budget = inst.budget
    # Incrementally maintained frontier: a dominated point can never return,
    # so evicting it (and its witnesses) as soon as a dominating point shows
    # up keeps memory proportional to the final answer.
    witnesses: dict[Point, list[InterdictionStrategy]] = {}
    evaluated = 0

    removed: list[str] = []

    def record() -> None:
        nonlocal evaluated
        evaluated += 1
        removed_ids = frozenset(removed)
        p = Point(
            shortest_length(inst, removed_ids, 1),
            shortest_length(inst, removed_ids, 2),
        )
        existing = witnesses.get(p)
        if existing is not None:
            existing.append(InterdictionStrategy(removed_ids))
            return
        if any(dominates(q, p) for q in witnesses):
            return
        for q in [q for q in witnesses if dominates(p, q)]:
            del witnesses[q]
        witnesses[p] = [InterdictionStrategy(removed_ids)]

    # Depth-first include/exclude, exclude branch first (the empty set leads).
    # Iterative so instances with many arcs but few feasible subsets do not
    # exhaust the recursion limit; marker frames manage the shared path.
    stack: list[tuple] = [("visit", 0, 0)]
    while stack:
        frame = stack.pop()
        if frame[0] == "pop":
            removed.pop()
            continue
        if frame[0] == "push":
            removed.append(frame[1])
            continue
        _, index, spent = frame
        if index == len(arcs):
            record()
            continue
        arc = arcs[index]
        if spent + arc.cost <= budget:
            stack.append(("pop",))
            stack.append(("visit", index + 1, spent + arc.cost))
            stack.append(("push", arc.id))
        stack.append(("visit", index + 1, spent))
    assert evaluated == count

    frontier = filter_nondominated(witnesses)
    ordered = {p: witnesses[p] for p in frontier.points}
    return OracleResult(
        frontier=frontier,
        strategies_per_point=ordered,
        strategies_enumerated=evaluated,
    )
