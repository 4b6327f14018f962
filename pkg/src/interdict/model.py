"""Core domain types: instances, interdiction strategies, objective points.

Objective points are pairs of extended naturals. Infinity is the IEEE
symbolic value ``math.inf`` (never a sentinel integer), so the absorbing
rules ``inf + x == inf`` and ``min(inf, x) == x`` hold by construction.
Finite coordinates are plain Python ints, validated against a 64-bit
range so results stay portable across implementations.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from heapq import heappop, heappush
from typing import Iterable, NamedTuple

from .errors import CoordinateOverflow, MalformedInstance

INF = math.inf

# Largest finite coordinate: signed 64-bit, so frontiers are exchangeable
# with implementations that use fixed-width integers.
MAX_COORD = 2**63 - 1


class Point(NamedTuple):
    """A pair of shortest-path lengths, one per path player."""

    f1: int | float
    f2: int | float


POINT_INF = Point(INF, INF)


def dominates(a: Point, b: Point) -> bool:
    """Pareto order: ``a`` beats ``b`` in the componentwise >= sense and differs."""
    return a[0] >= b[0] and a[1] >= b[1] and a != b


def point_add(a: Point, b: Point) -> Point:
    """Componentwise sum; infinity absorbs. Overflow raises, never wraps."""
    f1 = a[0] + b[0]
    f2 = a[1] + b[1]
    if f1 > MAX_COORD and not math.isinf(f1):
        raise CoordinateOverflow(f"f1 coordinate {f1} exceeds {MAX_COORD}")
    if f2 > MAX_COORD and not math.isinf(f2):
        raise CoordinateOverflow(f"f2 coordinate {f2} exceeds {MAX_COORD}")
    return Point(f1, f2)


def point_min(a: Point, b: Point) -> Point:
    """Componentwise minimum; infinity is neutral."""
    return Point(min(a[0], b[0]), min(a[1], b[1]))


def _check_natural(name: str, value: object) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise MalformedInstance(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise MalformedInstance(f"{name} must be nonnegative, got {value}")
    if value > MAX_COORD:
        raise CoordinateOverflow(f"{name} {value} exceeds {MAX_COORD}")
    return value


@dataclass(frozen=True)
class Arc:
    """A directed arc with one length per player and an interdiction cost.

    Parallel arcs (same tail/head) are allowed; ``id`` must be unique
    within an instance.
    """

    id: str
    tail: str
    head: str
    len1: int
    len2: int
    cost: int

    def __post_init__(self):
        _check_natural(f"arc {self.id!r} len1", self.len1)
        _check_natural(f"arc {self.id!r} len2", self.len2)
        _check_natural(f"arc {self.id!r} cost", self.cost)


@dataclass(frozen=True)
class InterdictionStrategy:
    """A set of arc ids removed by the interdictor."""

    interdicted: frozenset[str]

    def __post_init__(self):
        if not isinstance(self.interdicted, frozenset):
            object.__setattr__(self, "interdicted", frozenset(self.interdicted))

    def __len__(self) -> int:
        return len(self.interdicted)


EMPTY_STRATEGY = InterdictionStrategy(frozenset())


@dataclass(frozen=True)
class Instance:
    """A directed multigraph with two arc lengths, arc costs, terminals
    and an interdiction budget. Immutable after construction."""

    vertices: tuple[str, ...]
    arcs: tuple[Arc, ...]
    source: str
    sink: str
    budget: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arcs", tuple(self.arcs))
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise MalformedInstance("duplicate vertex ids")
        if self.source == self.sink:
            raise MalformedInstance("source and sink must differ")
        for name in (self.source, self.sink):
            if name not in vset:
                raise MalformedInstance(f"terminal {name!r} not among vertices")
        _check_natural("budget", self.budget)
        seen: set[str] = set()
        for arc in self.arcs:
            if arc.id in seen:
                raise MalformedInstance(f"duplicate arc id {arc.id!r}")
            seen.add(arc.id)
            if arc.tail not in vset or arc.head not in vset:
                raise MalformedInstance(
                    f"arc {arc.id!r} references unknown vertex"
                )
        # Any finite shortest-path value is at most (n-1) * L_max; reject
        # instances where that bound leaves the representable range.
        if self.arcs and (self.n - 1) * self.max_length > MAX_COORD:
            raise CoordinateOverflow(
                "(n-1) * L_max exceeds the finite coordinate range"
            )

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def max_length(self) -> int:
        """L_max: largest arc length over both players (0 if no arcs)."""
        return max((max(a.len1, a.len2) for a in self.arcs), default=0)

    @cached_property
    def arc_by_id(self) -> dict[str, Arc]:
        return {a.id: a for a in self.arcs}

    @cached_property
    def adjacency(self) -> dict[str, tuple[Arc, ...]]:
        adj: dict[str, list[Arc]] = {v: [] for v in self.vertices}
        for a in self.arcs:
            adj[a.tail].append(a)
        return {v: tuple(lst) for v, lst in adj.items()}


def _resolve_arc_ids(inst: Instance, arc_ids: Iterable[str]) -> frozenset[str]:
    ids = frozenset(arc_ids)
    unknown = ids - inst.arc_by_id.keys()
    if unknown:
        raise MalformedInstance(f"unknown arc ids: {sorted(unknown)}")
    return ids


def shortest_length(
    inst: Instance, removed: frozenset[str] | set[str], objective: int
) -> int | float:
    """Single-objective shortest s-t path length with ``removed`` arcs gone.

    Dijkstra with a binary heap; lengths are nonnegative by construction.
    Returns INF when the sink is unreachable.
    """
    if objective not in (1, 2):
        raise ValueError(f"objective must be 1 or 2, got {objective}")
    target = inst.sink
    dist: dict[str, int] = {inst.source: 0}
    done: set[str] = set()
    heap: list[tuple[int, str]] = [(0, inst.source)]
    adjacency = inst.adjacency
    while heap:
        d, v = heappop(heap)
        if v == target:
            return d
        if v in done:
            continue
        done.add(v)
        for arc in adjacency[v]:
            if arc.id in removed:
                continue
            nd = d + (arc.len1 if objective == 1 else arc.len2)
            head = arc.head
            if head not in done and nd < dist.get(head, nd + 1):
                dist[head] = nd
                heappush(heap, (nd, head))
    return INF


def evaluate_strategy(inst: Instance, strategy: InterdictionStrategy) -> Point:
    """Both players' shortest-path lengths after removing the interdicted arcs."""
    removed = _resolve_arc_ids(inst, strategy.interdicted)
    return Point(
        shortest_length(inst, removed, 1), shortest_length(inst, removed, 2)
    )


def total_cost(inst: Instance, strategy: InterdictionStrategy) -> int:
    """Sum of interdiction costs over the strategy's arcs."""
    ids = _resolve_arc_ids(inst, strategy.interdicted)
    by_id = inst.arc_by_id
    return sum(by_id[i].cost for i in ids)


def is_feasible(inst: Instance, strategy: InterdictionStrategy) -> bool:
    return total_cost(inst, strategy) <= inst.budget


# ---------------------------------------------------------------------------
# Canonical JSON instance format
# ---------------------------------------------------------------------------

def coord_to_json(value: int | float) -> int | str:
    """Finite coordinates serialize as ints, infinity as the string "inf"."""
    return "inf" if math.isinf(value) else value


def coord_from_json(value: object) -> int | float:
    if value == "inf":
        return INF
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    raise MalformedInstance(f"coordinate must be an int or \"inf\", got {value!r}")


def point_to_json(p: Point) -> dict:
    return {"f1": coord_to_json(p.f1), "f2": coord_to_json(p.f2)}


def instance_to_json_dict(inst: Instance) -> dict:
    return {
        "vertices": list(inst.vertices),
        "source": inst.source,
        "sink": inst.sink,
        "budget": inst.budget,
        "arcs": [
            {
                "id": a.id,
                "tail": a.tail,
                "head": a.head,
                "l1": a.len1,
                "l2": a.len2,
                "cost": a.cost,
            }
            for a in inst.arcs
        ],
    }


def _require(obj: dict, key: str, kind: type, where: str):
    if key not in obj:
        raise MalformedInstance(f"{where}: missing key {key!r}")
    value = obj[key]
    if kind is int and isinstance(value, bool) or not isinstance(value, kind):
        raise MalformedInstance(
            f"{where}: key {key!r} must be {kind.__name__}, got {value!r}"
        )
    return value


def instance_from_json_dict(obj: dict) -> Instance:
    if not isinstance(obj, dict):
        raise MalformedInstance("instance JSON must be an object")
    vertices = _require(obj, "vertices", list, "instance")
    if not all(isinstance(v, str) for v in vertices):
        raise MalformedInstance("vertex ids must be strings")
    arcs = []
    for i, raw in enumerate(_require(obj, "arcs", list, "instance")):
        if not isinstance(raw, dict):
            raise MalformedInstance(f"arc #{i} must be an object")
        where = f"arc #{i}"
        arcs.append(
            Arc(
                id=_require(raw, "id", str, where),
                tail=_require(raw, "tail", str, where),
                head=_require(raw, "head", str, where),
                len1=_require(raw, "l1", int, where),
                len2=_require(raw, "l2", int, where),
                cost=_require(raw, "cost", int, where),
            )
        )
    return Instance(
        vertices=tuple(vertices),
        arcs=tuple(arcs),
        source=_require(obj, "source", str, "instance"),
        sink=_require(obj, "sink", str, "instance"),
        budget=_require(obj, "budget", int, "instance"),
    )


def dump_instance(inst: Instance, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_json_dict(inst), fh, indent=2)
        fh.write("\n")


def load_instance(path: str) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return instance_from_json_dict(json.load(fh))
