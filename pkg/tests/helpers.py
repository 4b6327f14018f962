"""Shared test utilities: independent reference implementations and
hand-built fixture instances.

The quadratic filter reference deliberately shares no code with the
library's sort-and-sweep filter: it answers "is this point dominated by
any other input point" literally, over all pairs (vectorized so the
10^4-point acceptance sets stay affordable).
"""

from __future__ import annotations

import numpy as np

from interdict import Arc, Instance, Point


def pareto_reference(points) -> set:
    """All-pairs nondominance filter; returns the surviving points as a set."""
    pts = list(points)
    if not pts:
        return set()
    arr = np.asarray(pts, dtype=float)
    f1, f2 = arr[:, 0], arr[:, 1]
    n = len(pts)
    dominated = np.zeros(n, dtype=bool)
    chunk = max(1, (1 << 22) // n)
    for s in range(0, n, chunk):
        e = min(n, s + chunk)
        ge1 = f1[None, :] >= f1[s:e, None]
        ge2 = f2[None, :] >= f2[s:e, None]
        eq = (f1[None, :] == f1[s:e, None]) & (f2[None, :] == f2[s:e, None])
        dominated[s:e] = (ge1 & ge2 & ~eq).any(axis=1)
    return {pts[i] for i in range(n) if not dominated[i]}


def make_instance(arc_specs, budget=1, source=None, sink=None) -> Instance:
    """Instance from (id, tail, head, l1, l2, cost) tuples; vertices inferred."""
    arcs = tuple(Arc(*spec) for spec in arc_specs)
    vertices: list[str] = []
    for a in arcs:
        for v in (a.tail, a.head):
            if v not in vertices:
                vertices.append(v)
    return Instance(
        vertices=tuple(vertices),
        arcs=arcs,
        source=source if source is not None else "s",
        sink=sink if sink is not None else "t",
        budget=budget,
    )


def unit_arcs(pairs):
    """(tail, head) pairs to unit-everything arc specs with generated ids."""
    return [
        (f"a{i}", u, v, 1, 1, 1) for i, (u, v) in enumerate(pairs)
    ]


def wheatstone() -> Instance:
    """The classic bridge obstruction: s->a, s->b, a->b, a->t, b->t."""
    return make_instance(
        unit_arcs([("s", "a"), ("s", "b"), ("a", "b"), ("a", "t"), ("b", "t")])
    )


def non_sp_instances() -> dict[str, Instance]:
    """Ten hand-built graphs that stall the series-parallel reduction.

    Every vertex and arc lies on a source-sink path and there are no
    self-loops, so rejection is genuinely NotSeriesParallel. Most embed
    the bridge behind local reductions; two add distinct obstructions
    (a 2-cycle and a wider crossing pattern).
    """
    bridge = [("s", "a"), ("s", "b"), ("a", "b"), ("a", "t"), ("b", "t")]
    out: dict[str, Instance] = {}

    out["doubled_arcs"] = make_instance(
        unit_arcs(bridge + bridge)  # every bridge arc as a parallel pair
    )
    subdivided = []
    for i, (u, v) in enumerate(bridge):
        mid = f"m{i}"
        subdivided += [(u, mid), (mid, v)]
    out["all_arcs_subdivided"] = make_instance(unit_arcs(subdivided))
    out["bridge_plus_direct_arc"] = make_instance(unit_arcs(bridge + [("s", "t")]))
    out["bridge_behind_tail_arc"] = make_instance(
        unit_arcs([("r", "s")] + bridge), source="r"
    )
    double = [("s", "a"), ("s", "b"), ("a", "b"), ("a", "m"), ("b", "m")]
    double += [("m", "c"), ("m", "d"), ("c", "d"), ("c", "t"), ("d", "t")]
    out["two_bridges_in_series"] = make_instance(unit_arcs(double))
    out["reversed_diagonal"] = make_instance(
        unit_arcs([("s", "a"), ("s", "b"), ("b", "a"), ("a", "t"), ("b", "t")])
    )
    out["two_cycle"] = make_instance(
        unit_arcs([("s", "a"), ("a", "t"), ("s", "b"), ("b", "t"), ("a", "b"), ("b", "a")])
    )
    out["doubled_diagonal_only"] = make_instance(
        unit_arcs(bridge + [("a", "b")])
    )
    out["crossing_ladder"] = make_instance(
        unit_arcs(
            [("s", "a"), ("s", "b"), ("a", "b"), ("a", "c"), ("b", "c"),
             ("b", "t"), ("c", "t")]
        )
    )
    out["subdivided_diagonal_only"] = make_instance(
        unit_arcs(
            [("s", "a"), ("s", "b"), ("a", "x"), ("x", "b"), ("a", "t"), ("b", "t")]
        )
    )
    assert len(out) == 10
    return out
