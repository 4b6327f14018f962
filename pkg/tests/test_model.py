"""Core types: point algebra, strategy evaluation, instance validation, JSON."""

import json
import random

import pytest

from interdict import (
    INF,
    MAX_COORD,
    Arc,
    CoordinateOverflow,
    EMPTY_STRATEGY,
    Instance,
    InterdictionStrategy,
    MalformedInstance,
    Point,
    dominates,
    evaluate_strategy,
    gen_intractable,
    gen_random_digraph,
    instance_from_json_dict,
    instance_to_json_dict,
    point_add,
    point_min,
    total_cost,
)
from helpers import make_instance


class TestDominates:
    def test_componentwise_ge_and_unequal(self):
        assert dominates(Point(3, 5), Point(3, 4))

    def test_equal_points_do_not_dominate(self):
        assert not dominates(Point(3, 5), Point(3, 5))

    def test_infinity_beats_any_finite(self):
        assert dominates(Point(INF, INF), Point(7, 0))

    def test_incomparable(self):
        assert not dominates(Point(1, 9), Point(9, 1))
        assert not dominates(Point(9, 1), Point(1, 9))

    def test_irreflexive_and_asymmetric(self):
        rng = random.Random(7)
        pool = [Point(rng.randint(0, 8), rng.randint(0, 8)) for _ in range(200)]
        pool += [Point(INF, INF), Point(0, 0)]
        for p in pool:
            assert not dominates(p, p)
        for p in pool[:60]:
            for q in pool[:60]:
                assert not (dominates(p, q) and dominates(q, p))

    def test_transitive(self):
        rng = random.Random(11)
        pool = [Point(rng.randint(0, 5), rng.randint(0, 5)) for _ in range(40)]
        for p in pool:
            for q in pool:
                for r in pool:
                    if dominates(p, q) and dominates(q, r):
                        assert dominates(p, r)


class TestPointAlgebra:
    def test_add(self):
        assert point_add(Point(2, 3), Point(4, 1)) == Point(6, 4)

    def test_add_absorbs_infinity(self):
        assert point_add(Point(2, 3), Point(INF, INF)) == Point(INF, INF)

    def test_add_identity(self):
        assert point_add(Point(0, 0), Point(5, 7)) == Point(5, 7)

    def test_add_overflow_detected(self):
        point_add(Point(MAX_COORD, 0), Point(0, 0))  # boundary is fine
        with pytest.raises(CoordinateOverflow):
            point_add(Point(MAX_COORD, 0), Point(1, 0))
        with pytest.raises(CoordinateOverflow):
            point_add(Point(0, MAX_COORD), Point(0, 1))

    def test_add_properties(self):
        rng = random.Random(3)
        pool = [Point(rng.randint(0, 99), rng.randint(0, 99)) for _ in range(30)]
        pool.append(Point(INF, INF))
        for a in pool:
            for b in pool:
                assert point_add(a, b) == point_add(b, a)
        for a, b, c in zip(pool, pool[1:], pool[2:]):
            assert point_add(point_add(a, b), c) == point_add(a, point_add(b, c))

    def test_min(self):
        assert point_min(Point(2, 3), Point(4, 1)) == Point(2, 1)

    def test_min_infinity_neutral(self):
        assert point_min(Point(INF, INF), Point(4, 1)) == Point(4, 1)

    def test_min_idempotent(self):
        assert point_min(Point(5, 5), Point(5, 5)) == Point(5, 5)

    def test_min_properties(self):
        rng = random.Random(4)
        pool = [Point(rng.randint(0, 99), rng.randint(0, 99)) for _ in range(30)]
        for a in pool:
            for b in pool:
                assert point_min(a, b) == point_min(b, a)
            assert point_min(a, Point(INF, INF)) == a
        for a, b, c in zip(pool, pool[1:], pool[2:]):
            assert point_min(point_min(a, b), c) == point_min(a, point_min(b, c))


class TestEvaluateStrategy:
    def test_hard_family_single_cut(self):
        inst = gen_intractable(1)
        got = evaluate_strategy(inst, InterdictionStrategy(frozenset({"a1_0"})))
        assert got == Point(1, 1)

    def test_empty_strategy_gives_uninterdicted_lengths(self):
        inst = make_instance(
            [("a", "s", "t", 2, 3, 1), ("b", "s", "t", 4, 1, 1)], budget=1
        )
        assert evaluate_strategy(inst, EMPTY_STRATEGY) == Point(2, 1)

    def test_disconnection_is_infinite(self):
        inst = make_instance([("a", "s", "t", 3, 5, 1)], budget=1)
        got = evaluate_strategy(inst, InterdictionStrategy(frozenset({"a"})))
        assert got == Point(INF, INF)

    def test_unknown_arc_id(self):
        inst = make_instance([("a", "s", "t", 3, 5, 1)])
        with pytest.raises(MalformedInstance):
            evaluate_strategy(inst, InterdictionStrategy(frozenset({"nope"})))

    def test_multigraph_parallel_arcs(self):
        inst = make_instance(
            [("a", "s", "t", 5, 5, 1), ("b", "s", "t", 7, 2, 1)], budget=2
        )
        assert evaluate_strategy(inst, EMPTY_STRATEGY) == Point(5, 2)
        only_b = evaluate_strategy(inst, InterdictionStrategy(frozenset({"a"})))
        assert only_b == Point(7, 2)

    def test_monotone_under_inclusion(self):
        for seed in range(8):
            inst = gen_random_digraph(6, 0.6, seed, budget=10)
            ids = sorted(inst.arc_by_id)
            rng = random.Random(seed)
            chain: list[str] = []
            prev = evaluate_strategy(inst, EMPTY_STRATEGY)
            for arc_id in rng.sample(ids, min(4, len(ids))):
                chain.append(arc_id)
                cur = evaluate_strategy(
                    inst, InterdictionStrategy(frozenset(chain))
                )
                assert cur.f1 >= prev.f1 and cur.f2 >= prev.f2
                prev = cur


class TestTotalCost:
    def test_empty(self):
        inst = make_instance([("a", "s", "t", 1, 1, 3)])
        assert total_cost(inst, EMPTY_STRATEGY) == 0

    def test_sum(self):
        inst = make_instance(
            [("a", "s", "v", 1, 1, 2), ("b", "v", "t", 1, 1, 3)], budget=9
        )
        assert total_cost(inst, InterdictionStrategy(frozenset({"a", "b"}))) == 5

    def test_all_arcs_of_hard_family(self):
        inst = gen_intractable(1)
        everything = InterdictionStrategy(frozenset(inst.arc_by_id))
        assert total_cost(inst, everything) == 4

    def test_unknown_arc_id(self):
        inst = make_instance([("a", "s", "t", 1, 1, 1)])
        with pytest.raises(MalformedInstance):
            total_cost(inst, InterdictionStrategy(frozenset({"zzz"})))


class TestInstanceValidation:
    def test_duplicate_arc_id(self):
        with pytest.raises(MalformedInstance):
            make_instance([("a", "s", "t", 1, 1, 1), ("a", "s", "t", 2, 2, 1)])

    def test_unknown_vertex(self):
        with pytest.raises(MalformedInstance):
            Instance(("s", "t"), (Arc("a", "s", "x", 1, 1, 1),), "s", "t", 1)

    def test_source_equals_sink(self):
        with pytest.raises(MalformedInstance):
            Instance(("s",), (), "s", "s", 0)

    def test_negative_values(self):
        with pytest.raises(MalformedInstance):
            Arc("a", "s", "t", -1, 0, 0)
        with pytest.raises(MalformedInstance):
            Arc("a", "s", "t", 0, 0, -2)
        with pytest.raises(MalformedInstance):
            make_instance([("a", "s", "t", 1, 1, 1)], budget=-1)

    def test_zero_cost_arcs_accepted(self):
        inst = make_instance([("a", "s", "t", 1, 1, 0)])
        assert inst.arc_by_id["a"].cost == 0

    def test_path_bound_overflow(self):
        big = MAX_COORD // 2 + 1
        with pytest.raises(CoordinateOverflow):
            make_instance(
                [("a", "s", "v", big, 0, 1), ("b", "v", "t", big, 0, 1)]
            )

    def test_derived_stats(self):
        inst = make_instance(
            [("a", "s", "v", 3, 9, 1), ("b", "v", "t", 4, 1, 2)], budget=7
        )
        assert (inst.n, inst.m, inst.max_length) == (3, 2, 9)


class TestJsonFormat:
    def test_round_trip(self):
        inst = gen_intractable(3)
        again = instance_from_json_dict(instance_to_json_dict(inst))
        assert again == inst

    def test_canonical_keys(self):
        obj = instance_to_json_dict(make_instance([("a", "s", "t", 1, 2, 3)]))
        assert list(obj) == ["vertices", "source", "sink", "budget", "arcs"]
        assert obj["arcs"][0] == {
            "id": "a", "tail": "s", "head": "t", "l1": 1, "l2": 2, "cost": 3,
        }

    def test_rejects_wrong_types(self):
        obj = instance_to_json_dict(make_instance([("a", "s", "t", 1, 2, 3)]))
        bad = json.loads(json.dumps(obj))
        bad["arcs"][0]["l1"] = "three"
        with pytest.raises(MalformedInstance):
            instance_from_json_dict(bad)
        bad = json.loads(json.dumps(obj))
        del bad["budget"]
        with pytest.raises(MalformedInstance):
            instance_from_json_dict(bad)

    def test_not_an_object(self):
        with pytest.raises(MalformedInstance):
            instance_from_json_dict([1, 2, 3])
