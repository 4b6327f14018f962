"""Two-terminal series-parallel recognition and decomposition trees.

Recognition runs the classic reduction: repeatedly merge a pair of
parallel arcs into one virtual arc, or contract an interior vertex with
in-degree 1 and out-degree 1, recording a Parallel / Series tree node per
step. The graph is series-parallel iff the reduction reaches a single
source-sink arc; the recorded nodes then form the decomposition tree.

Reductions are applied deterministically: any applicable parallel merge
is taken before any series contraction, and candidates are ranked by arc
order (original arcs ordered by ascending id; a virtual arc inherits the
smaller order of the two arcs it replaces). Folding parallel groups and
series chains pairwise from the smallest order yields left-deep binary
subtrees, so identical instances always produce identical trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from heapq import heappop, heappush

from .errors import MalformedInstance, NotSeriesParallel
from .model import Instance

LEAF = "leaf"
SERIES = "series"
PARALLEL = "parallel"


@dataclass(frozen=True)
class TreeNode:
    kind: str
    source: str
    sink: str
    arc_id: str | None = None
    left: int | None = None
    right: int | None = None


@dataclass(frozen=True)
class DecompositionTree:
    """Binary decomposition tree; children always precede parents by index."""

    nodes: tuple[TreeNode, ...]
    root: int

    @property
    def leaf_count(self) -> int:
        return sum(1 for n in self.nodes if n.kind == LEAF)

    def to_json_dict(self) -> dict:
        """Nested {"op": ...} rendering for debugging and golden files."""
        built: list[dict] = []
        for node in self.nodes:
            if node.kind == LEAF:
                built.append(
                    {"op": LEAF, "arc": node.arc_id,
                     "source": node.source, "sink": node.sink}
                )
            else:
                built.append(
                    {"op": node.kind, "source": node.source, "sink": node.sink,
                     "left": built[node.left], "right": built[node.right]}
                )
        return built[self.root]


def _check_on_st_paths(inst: Instance) -> None:
    """Reject self-loops and vertices/arcs that lie on no source-sink path."""
    fwd_adj: dict[str, list[str]] = {v: [] for v in inst.vertices}
    rev_adj: dict[str, list[str]] = {v: [] for v in inst.vertices}
    for a in inst.arcs:
        if a.tail == a.head:
            raise MalformedInstance(f"self-loop {a.id!r} at vertex {a.tail!r}")
        fwd_adj[a.tail].append(a.head)
        rev_adj[a.head].append(a.tail)

    def reach(start: str, adj: dict[str, list[str]]) -> set[str]:
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    from_source = reach(inst.source, fwd_adj)
    to_sink = reach(inst.sink, rev_adj)
    if inst.sink not in from_source:
        raise MalformedInstance("sink is unreachable from source")
    on_path = from_source & to_sink
    stray = [v for v in inst.vertices if v not in on_path]
    if stray:
        raise MalformedInstance(f"vertices on no source-sink path: {stray}")
    stray_arcs = [
        a.id for a in inst.arcs
        if a.tail not in from_source or a.head not in to_sink
    ]
    if stray_arcs:
        raise MalformedInstance(f"arcs on no source-sink path: {stray_arcs}")


def decompose(inst: Instance) -> DecompositionTree:
    """Reduce ``inst`` to a decomposition tree or raise.

    Raises MalformedInstance for inputs the reduction is not defined on
    (see _check_on_st_paths) and NotSeriesParallel when the reduction
    stalls with more than one arc left.
    """
    _check_on_st_paths(inst)
    if not inst.arcs:
        raise MalformedInstance("instance has no arcs")

    nodes: list[TreeNode] = []
    # Working arcs keyed by order; original arcs take 0..m-1 by ascending id.
    tail: dict[int, str] = {}
    head: dict[int, str] = {}
    node_of: dict[int, int] = {}
    group: dict[tuple[str, str], list[int]] = {}  # endpoint pair -> min-heap of orders
    in_arcs: dict[str, set[int]] = {v: set() for v in inst.vertices}
    out_arcs: dict[str, set[int]] = {v: set() for v in inst.vertices}
    par_heap: list[tuple[int, tuple[str, str]]] = []
    ser_heap: list[tuple[int, str]] = []

    def add_arc(order: int, u: str, v: str, node_idx: int) -> None:
        tail[order], head[order], node_of[order] = u, v, node_idx
        bucket = group.setdefault((u, v), [])
        heappush(bucket, order)
        out_arcs[u].add(order)
        in_arcs[v].add(order)
        if len(bucket) >= 2:
            heappush(par_heap, (bucket[0], (u, v)))

    def drop_arc(order: int) -> None:
        u, v = tail.pop(order), head.pop(order)
        del node_of[order]
        bucket = group[(u, v)]
        bucket.remove(order)
        if bucket:
            # restore the heap property after an arbitrary removal
            bucket.sort()
        else:
            del group[(u, v)]
        out_arcs[u].discard(order)
        in_arcs[v].discard(order)

    def series_key(v: str) -> int | None:
        """Candidate rank of vertex v, or None if not contractible."""
        if v == inst.source or v == inst.sink:
            return None
        ins, outs = in_arcs[v], out_arcs[v]
        if len(ins) != 1 or len(outs) != 1 or ins == outs:
            return None
        return min(next(iter(ins)), next(iter(outs)))

    def push_series(v: str) -> None:
        key = series_key(v)
        if key is not None:
            heappush(ser_heap, (key, v))

    for order, arc in enumerate(sorted(inst.arcs, key=lambda a: a.id)):
        nodes.append(TreeNode(LEAF, arc.tail, arc.head, arc_id=arc.id))
        add_arc(order, arc.tail, arc.head, order)
    for v in inst.vertices:
        push_series(v)

    while len(tail) > 1:
        # Any valid parallel merge first, smallest order wins.
        pair = None
        while par_heap:
            key, cand = par_heap[0]
            bucket = group.get(cand)
            if bucket and len(bucket) >= 2 and bucket[0] == key:
                pair = cand
                break
            heappop(par_heap)
            if bucket and len(bucket) >= 2:
                heappush(par_heap, (bucket[0], cand))
        if pair is not None:
            bucket = group[pair]
            a = heappop(bucket)
            b = heappop(bucket)
            heappush(bucket, a)  # the merged arc keeps the smaller order a
            u, v = pair
            nodes.append(
                TreeNode(PARALLEL, u, v, left=node_of[a], right=node_of[b])
            )
            node_of[a] = len(nodes) - 1
            del node_of[b], tail[b], head[b]
            out_arcs[u].discard(b)
            in_arcs[v].discard(b)
            # the heap's top entry for this pair stays valid while the
            # group still holds two arcs; no push needed
            push_series(u)
            push_series(v)
            continue

        # No parallel merge anywhere: smallest valid series contraction.
        contracted = False
        while ser_heap:
            key, v = heappop(ser_heap)
            if series_key(v) != key:
                push_series(v)  # re-rank if still eligible
                continue
            e_in = next(iter(in_arcs[v]))
            e_out = next(iter(out_arcs[v]))
            u, w = tail[e_in], head[e_out]
            nodes.append(
                TreeNode(SERIES, u, w, left=node_of[e_in], right=node_of[e_out])
            )
            new_idx = len(nodes) - 1
            new_order = min(e_in, e_out)
            drop_arc(e_in)
            drop_arc(e_out)
            add_arc(new_order, u, w, new_idx)
            push_series(u)
            push_series(w)
            contracted = True
            break
        if not contracted:
            raise NotSeriesParallel(
                f"reduction stalled with {len(tail)} arcs remaining"
            )

    (last_order,) = tail
    if tail[last_order] != inst.source or head[last_order] != inst.sink:
        raise NotSeriesParallel(
            "reduction terminated on an arc that does not span source to sink"
        )
    tree = DecompositionTree(tuple(nodes), node_of[last_order])
    assert len(tree.nodes) == 2 * inst.m - 1
    return tree


def recompose(
    inst: Instance, tree: DecompositionTree, trail: list[str] | None = None
) -> bool:
    """Replay the tree's compositions and confirm they rebuild ``inst``.

    Returns False on any mismatch; when ``trail`` is given, appends one
    message per defect found.
    """
    def fail(msg: str) -> bool:
        if trail is not None:
            trail.append(msg)
        return False

    ok = True
    arcs_at: list[frozenset[str]] = []
    for idx, node in enumerate(tree.nodes):
        if node.kind == LEAF:
            arc = inst.arc_by_id.get(node.arc_id)
            if arc is None:
                ok = fail(f"node {idx}: unknown arc {node.arc_id!r}")
                arcs_at.append(frozenset())
                continue
            if (arc.tail, arc.head) != (node.source, node.sink):
                ok = fail(f"node {idx}: leaf endpoints disagree with arc {arc.id!r}")
            arcs_at.append(frozenset((arc.id,)))
            continue
        if node.kind not in (SERIES, PARALLEL):
            return fail(f"node {idx}: unknown kind {node.kind!r}")
        if not (0 <= node.left < idx and 0 <= node.right < idx):
            return fail(f"node {idx}: children must precede the node")
        lt, rt = tree.nodes[node.left], tree.nodes[node.right]
        if node.kind == SERIES:
            if lt.source != node.source or rt.sink != node.sink or lt.sink != rt.source:
                ok = fail(f"node {idx}: series endpoint chain broken")
        else:
            if (lt.source, lt.sink) != (node.source, node.sink) or (
                rt.source, rt.sink
            ) != (node.source, node.sink):
                ok = fail(f"node {idx}: parallel children endpoints disagree")
        left_arcs, right_arcs = arcs_at[node.left], arcs_at[node.right]
        if left_arcs & right_arcs:
            ok = fail(f"node {idx}: children share arcs {sorted(left_arcs & right_arcs)}")
        arcs_at.append(left_arcs | right_arcs)

    root = tree.nodes[tree.root]
    if (root.source, root.sink) != (inst.source, inst.sink):
        ok = fail("root endpoints are not the instance terminals")
    all_ids = frozenset(inst.arc_by_id)
    if arcs_at[tree.root] != all_ids:
        missing = sorted(all_ids - arcs_at[tree.root])
        extra = sorted(arcs_at[tree.root] - all_ids)
        ok = fail(f"root arc set mismatch: missing {missing}, extra {extra}")
    counts: dict[int, int] = {}
    for node in tree.nodes:
        if node.kind != LEAF:
            for child in (node.left, node.right):
                counts[child] = counts.get(child, 0) + 1
            if counts.get(node.left, 0) > 1 or counts.get(node.right, 0) > 1:
                ok = fail("a node is referenced by more than one parent")
    return ok
