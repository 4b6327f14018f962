"""Instance generators: the exponential-frontier family, random
series-parallel instances, and random DAGs for oracle-only testing.

All randomness flows through SplitMix64, a small named generator that is
trivial to reimplement bit-for-bit in any language, so a (generator, seed,
parameters) triple identifies one instance across implementations. The
draw order consumed from the stream is documented per generator and is
part of the format.
"""

from __future__ import annotations

from itertools import combinations

from .model import Arc, Instance, Point
from .pareto import LabelSet

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: 64-bit state, one multiply-xorshift scramble per draw."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def bits(self, k: int) -> int:
        """A k-bit unsigned integer assembled from whole 64-bit words."""
        value = 0
        for _ in range((k + 63) // 64):
            value = (value << 64) | self.next64()
        return value >> (-k % 64) if k % 64 else value

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) via unbiased bit rejection."""
        if n <= 0:
            raise ValueError(f"below() needs a positive bound, got {n}")
        if n == 1:
            return 0
        k = (n - 1).bit_length()
        while True:
            r = self.bits(k)
            if r < n:
                return r


# ---------------------------------------------------------------------------
# Hard family: exponentially many nondominated points
# ---------------------------------------------------------------------------

def _validate_odd(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1 or n % 2 == 0:
        raise ValueError(f"family parameter must be an odd integer >= 1, got {n!r}")
    return n


def gen_intractable(n: int) -> Instance:
    """Chain of n+1 parallel stages whose frontier has C(n+1, (n+1)/2) points.

    Stage i (vertices v_i -> v_{i+1}) holds one zero-length arc plus
    (n+1)/2 identical copies of an arc with lengths (2^i, 2^n - 2^i); every
    arc costs 1 and the budget is (n+1)/2, so no stage can be fully cut.
    """
    _validate_odd(n)
    copies = (n + 1) // 2
    vertices = tuple(f"v{i}" for i in range(n + 2))
    arcs = []
    for i in range(n + 1):
        tail, head = f"v{i}", f"v{i + 1}"
        arcs.append(Arc(f"a1_{i}", tail, head, 0, 0, 1))
        long1, long2 = 2**i, 2**n - 2**i
        for j in range(copies):
            arcs.append(Arc(f"a2_{i}_{j}", tail, head, long1, long2, 1))
    return Instance(
        vertices=vertices,
        arcs=tuple(arcs),
        source="v0",
        sink=f"v{n + 1}",
        budget=copies,
    )


def predicted_intractable_frontier(n: int) -> LabelSet:
    """Closed-form frontier of gen_intractable(n).

    The efficient strategies cut the zero-length arc in exactly B = (n+1)/2
    stages; player one then pays the sum of those stages' powers of two and
    player two pays B * 2^n minus the same sum.
    """
    _validate_odd(n)
    b = (n + 1) // 2
    top = b * 2**n
    f1_values = sorted(
        sum(c) for c in combinations([2**i for i in range(n + 1)], b)
    )
    return LabelSet(tuple(Point(f1, top - f1) for f1 in f1_values))


# ---------------------------------------------------------------------------
# Random series-parallel instances
# ---------------------------------------------------------------------------

def _catalan(upto: int) -> list[int]:
    cat = [1]
    for i in range(upto):
        cat.append(cat[i] * 2 * (2 * i + 1) // (i + 2))
    return cat


def gen_random_sp(
    leaves: int,
    seed: int,
    max_len: int = 10,
    max_cost: int = 3,
    budget: int = 3,
) -> Instance:
    """Random series-parallel instance with exactly ``leaves`` arcs.

    Stream order: first the tree, in preorder; at every internal node one
    draw picks the left subtree's leaf count (weighted by Catalan counts,
    so shapes are uniform) and one draw in {0, 1} picks series (0) or
    parallel (1). Then, per leaf from left to right: l1 and l2 uniform in
    0..max_len, cost uniform in 1..max_cost.
    """
    if leaves < 1:
        raise ValueError(f"leaves must be >= 1, got {leaves}")
    if max_cost < 1:
        raise ValueError(f"max_cost must be >= 1, got {max_cost}")
    rng = SplitMix64(seed)
    cat = _catalan(leaves)

    def shape(size: int):
        if size == 1:
            return "leaf"
        r = rng.below(cat[size - 1])
        acc = 0
        for k in range(1, size):
            acc += cat[k - 1] * cat[size - k - 1]
            if r < acc:
                break
        kind = "series" if rng.below(2) == 0 else "parallel"
        return (kind, shape(k), shape(size - k))

    tree = shape(leaves)
    vertices = ["s", "t"]
    arcs: list[Arc] = []

    def emit(node, src: str, dst: str) -> None:
        if node == "leaf":
            arcs.append(
                Arc(
                    id=f"a{len(arcs)}",
                    tail=src,
                    head=dst,
                    len1=rng.below(max_len + 1),
                    len2=rng.below(max_len + 1),
                    cost=1 + rng.below(max_cost),
                )
            )
            return
        kind, left, right = node
        if kind == "series":
            mid = f"v{len(vertices) - 1}"
            vertices.append(mid)
            emit(left, src, mid)
            emit(right, mid, dst)
        else:
            emit(left, src, dst)
            emit(right, src, dst)

    emit(tree, "s", "t")
    return Instance(
        vertices=tuple(vertices),
        arcs=tuple(arcs),
        source="s",
        sink="t",
        budget=budget,
    )


# ---------------------------------------------------------------------------
# Random DAGs (oracle-only; generally not series-parallel)
# ---------------------------------------------------------------------------

def gen_random_digraph(
    n: int,
    arc_prob: float,
    seed: int,
    max_len: int = 10,
    max_cost: int = 3,
    budget: int = 3,
) -> Instance:
    """Random DAG on a fixed topological order, source first, sink last.

    Stream order: vertex pairs (i, j) with i < j in lexicographic order;
    one draw decides inclusion (u64 < arc_prob * 2^64), and included arcs
    immediately draw l1, l2 in 0..max_len and cost in 1..max_cost.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 0.0 <= arc_prob <= 1.0:
        raise ValueError(f"arc_prob must be in [0, 1], got {arc_prob}")
    if max_cost < 1:
        raise ValueError(f"max_cost must be >= 1, got {max_cost}")
    rng = SplitMix64(seed)
    threshold = int(arc_prob * float(1 << 64))
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.next64() < threshold:
                arcs.append(
                    Arc(
                        id=f"a{i}_{j}",
                        tail=f"v{i}",
                        head=f"v{j}",
                        len1=rng.below(max_len + 1),
                        len2=rng.below(max_len + 1),
                        cost=1 + rng.below(max_cost),
                    )
                )
    return Instance(
        vertices=tuple(f"v{i}" for i in range(n)),
        arcs=tuple(arcs),
        source="v0",
        sink=f"v{n - 1}",
        budget=budget,
    )
