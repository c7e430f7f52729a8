import json
import re

import numpy as np
import pytest
from hypothesis import given, settings

from revdom import action, analysis, oracles
from revdom.analysis import (
    TransitionMap,
    build_transition_map,
    check_corollary_maxindep,
    check_ore_minimal,
    check_perfect_minimal,
    check_prop_cdominating,
    check_sutner_odd_closed,
    check_theorem_main,
    classify_attractors,
    convergence_scan,
    export_dot,
)
from revdom.conditions import ODD_OPEN, PERFECT_OPEN
from revdom.errors import Disconnected, WidthTooLarge
from revdom.graph import from_index_edges, parse_edge_list

from conftest import brute_f, graphs

# A hand-drawn transition diagram of g3, every arrow as drawn.
DRAWN_EDGES = {
    0: 0, 1: 8, 2: 20, 3: 35, 4: 42, 5: 42, 6: 56, 7: 56, 8: 21, 9: 20, 10: 21, 11: 52,
    12: 51, 13: 50, 14: 49, 15: 48, 16: 42, 17: 42, 18: 44, 19: 44, 20: 42, 21: 42,
    22: 40, 23: 40, 24: 39, 25: 38, 26: 37, 27: 37, 28: 35, 29: 34, 30: 33, 31: 32,
    32: 20, 33: 28, 34: 20, 35: 28, 36: 27, 37: 26, 38: 24, 39: 24, 40: 21, 41: 20,
    42: 21, 43: 20, 44: 19, 45: 18, 46: 17, 47: 16, 48: 14, 49: 14, 50: 12, 51: 12,
    52: 10, 53: 10, 54: 9, 55: 8, 56: 7, 57: 6, 58: 5, 59: 4, 60: 3, 61: 2, 62: 1, 63: 0,
}
# Arrows whose drawn target contradicts the map on g3's edge set.
MISDRAWN = {3: 28, 11: 20, 27: 36, 36: 26, 54: 8}
G3_TWO_CYCLES = [(21, 42), (28, 35), (7, 56), (19, 44), (24, 39), (14, 49), (12, 51), (26, 37)]


def f_map(g):
    return build_transition_map(g, action.f_generator(g))


class TestTransitionMap:
    def test_examples(self, g3, k2):
        succ = f_map(g3).successor
        assert (succ[20], succ[61], succ[2], succ[0]) == (42, 2, 20, 0)
        assert f_map(k2).successor.tolist() == [0, 2, 1, 0]

    def test_drawn_diagram(self, g3):
        succ = f_map(g3).successor.tolist()
        for k, drawn in DRAWN_EDGES.items():
            assert succ[k] == brute_f(g3, k)
            if k in MISDRAWN:
                assert succ[k] == MISDRAWN[k] != drawn
            else:
                assert succ[k] == drawn

    def test_threads_partition(self):
        g = from_index_edges(13, [(i, (i * 5 + 3) % 13) for i in range(13) if i != (i * 5 + 3) % 13])
        single = build_transition_map(g, action.f_generator(g))
        split = build_transition_map(g, action.f_generator(g), threads=3)
        assert np.array_equal(single.successor, split.successor)

    def test_cap(self, g3):
        with pytest.raises(WidthTooLarge):
            build_transition_map(g3, action.f_generator(g3), cap=5)


class TestAttractors:
    def test_g3(self, g3):
        rep = classify_attractors(f_map(g3))
        assert rep.fixed_points == [0]
        assert sorted(c for c in rep.cycles if len(c) == 2) == sorted(tuple(sorted(p)) for p in G3_TWO_CYCLES)
        assert len(rep.cycles) == 9
        assert sum(rep.basin_sizes) == 64

    def test_k2(self, k2):
        rep = classify_attractors(f_map(k2))
        assert rep.fixed_points == [0]
        assert rep.cycles == [(0,), (1, 2)]
        assert rep.basin_sizes == [2, 2]

    def test_constant_map(self):
        rep = classify_attractors(TransitionMap(4, np.zeros(16, dtype=np.int64)))
        assert rep.fixed_points == [0] and rep.cycles == [(0,)]
        assert rep.basin_sizes == [16]
        assert rep.tails.tolist() == [0] + [1] * 15

    def test_long_cycle_and_tail(self):
        # 0 -> 1 -> ... -> 6 -> 2 : tail 2 into a 5-cycle, state 7 feeds state 0
        succ = np.array([1, 2, 3, 4, 5, 6, 2, 0])
        rep = classify_attractors(TransitionMap(3, succ))
        assert rep.cycles == [(2, 3, 4, 5, 6)]
        assert rep.tails.tolist() == [2, 1, 0, 0, 0, 0, 0, 3]
        assert rep.entry.tolist() == [2, 2, 2, 3, 4, 5, 6, 2]

    @given(graphs(max_n=9))
    @settings(max_examples=40, deadline=None)
    def test_report_matches_orbit_summaries(self, g):
        f = action.f_generator(g)
        rep = classify_attractors(f_map(g))
        succ = f_map(g).successor
        for cycle in rep.cycles:
            assert len(set(cycle)) == len(cycle)
            for x, y in zip(cycle, cycle[1:] + cycle[:1]):
                assert succ[x] == y
        assert sum(rep.basin_sizes) == 1 << g.n
        for k in range(1 << g.n):
            summary = action.orbit_summary(f, k)
            assert rep.tails[k] == summary.tail_length
            assert rep.entry[k] == summary.entry_state
            assert set(rep.cycles[rep.attractor[k]]) == set(summary.cycle_members)
        assert sorted(k for c in rep.cycles for k in c) == action.im_epsilon_set(action.f_system(g))

    @given(graphs(min_n=2, max_n=10, connected=True))
    @settings(max_examples=40, deadline=None)
    def test_f_cycles_are_c0_or_complementary_pairs(self, g):
        rep = classify_attractors(f_map(g))
        for cycle in rep.cycles:
            if len(cycle) == 1:
                assert cycle == (0,)
            else:
                assert len(cycle) == 2 and cycle[0] ^ cycle[1] == g.full_mask


class TestCheckers:
    def test_theorem(self, g3, p3, k2):
        rep = check_theorem_main(g3)
        assert rep.passed and rep.stats["true_side"]["count"] == 16
        assert check_theorem_main(p3).stats["true_side"]["states"] == [2, 5]
        assert check_theorem_main(k2).stats["true_side"]["states"] == [1, 2]

    def test_corollary(self, g3, p3, k2):
        rep = check_corollary_maxindep(p3)
        assert rep.passed and rep.stats["true_side"]["states"] == [2, 5]
        assert rep.stats["c0_member"] and rep.stats["other_non_surjective_members"] == []
        rep = check_corollary_maxindep(g3)
        assert rep.passed and {21, 42} <= set(rep.stats["true_side"]["states"])
        assert oracles.is_independent(g3, {1, 3, 5})
        assert check_corollary_maxindep(k2).stats["true_side"]["states"] == [1, 2]

    def test_prop_cdom(self, g3, p3, k2):
        rep = check_prop_cdominating(g3, PERFECT_OPEN)
        assert rep.passed and 24 in rep.stats["members"]["states"]
        rep = check_prop_cdominating(p3, PERFECT_OPEN)
        assert rep.passed and rep.stats["members"]["states"] == [2]
        assert check_prop_cdominating(k2, PERFECT_OPEN).stats["members"]["states"] == [1, 2]
        assert check_prop_cdominating(g3, ODD_OPEN).passed

    def test_convergence(self, g3, p3, k2):
        rep = convergence_scan(g3)
        assert rep.passed and rep.stats["max_tail"] == 3
        assert rep.universe == "62 surjective states"
        assert convergence_scan(p3).stats["max_tail"] == 2
        assert convergence_scan(k2).stats["max_tail"] == 0

    def test_oracle_claims(self, g3, p3):
        assert check_ore_minimal(g3).passed
        assert check_sutner_odd_closed(g3).passed
        rep = check_perfect_minimal(p3)
        assert not rep.passed
        assert 0b110 in rep.counterexamples  # {v1, v2}

    @pytest.mark.parametrize("checker", list(analysis.CLAIMS.values()))
    def test_refuses_disconnected(self, checker):
        with pytest.raises(Disconnected):
            checker(parse_edge_list("a b\nc d"))

    def test_single_vertex_is_vacuous(self):
        g = parse_edge_list("vertices: v1")
        for name, checker in analysis.CLAIMS.items():
            if name == "sutner-odd-closed":
                continue
            rep = checker(g)
            assert rep.passed and rep.stats == {"vacuous": True}

    def test_width_caps(self):
        g = from_index_edges(17, [(i, i + 1) for i in range(16)])
        with pytest.raises(WidthTooLarge):
            check_corollary_maxindep(g)
        with pytest.raises(WidthTooLarge):
            check_prop_cdominating(g)

    def test_report_json(self, g3):
        rep = check_theorem_main(g3, seed=7)
        doc = json.loads(rep.to_json())
        assert set(doc) == {"claim", "graph", "seed", "universe", "pass", "counterexamples", "stats"}
        assert doc["seed"] == 7 and doc["graph"]["vertices"]["v6"] == 5
        assert rep.to_json() == check_theorem_main(g3, seed=7).to_json()

    def test_counterexample_cap(self):
        # star: the centre plus any leaves is perfect, only the centre alone is minimal
        g = from_index_edges(8, [(0, j) for j in range(1, 8)])
        rep = check_perfect_minimal(g)
        assert len(rep.counterexamples) == analysis.COUNTEREXAMPLE_CAP
        assert rep.stats["counterexample_total"] > analysis.COUNTEREXAMPLE_CAP

    @given(graphs(min_n=2, max_n=10, connected=True))
    @settings(max_examples=40, deadline=None)
    def test_domatic_count_is_half_surjective_members(self, g):
        members = action.im_epsilon_set(action.f_system(g))
        surjective = [k for k in members if k not in (0, g.full_mask)]
        assert 2 * len(oracles.domatic_2_partitions(g)) == len(surjective)


class TestDot:
    def test_g3(self, g3):
        dot = export_dot(f_map(g3), action.im_epsilon_set(action.f_system(g3)))
        assert len(re.findall(r"^  s\d+ \[", dot, re.M)) == 64
        assert dot.count("style=filled") == 17
        assert len(re.findall(r"->", dot)) == 64
        assert "s20 -> s42;" in dot and "s0 -> s0;" in dot

    def test_no_highlight(self, k2):
        dot = export_dot(f_map(k2), [])
        assert "style" not in dot and "fill" not in dot

    def test_k2(self, k2):
        dot = export_dot(f_map(k2), [1, 2])
        assert len(re.findall(r"^  s\d+ \[", dot, re.M)) == 4
        assert dot.count("style=filled") == 2

    def test_guard(self):
        g = from_index_edges(13, [(i, i + 1) for i in range(12)])
        t = f_map(g)
        with pytest.raises(WidthTooLarge):
            export_dot(t, [])
        assert export_dot(t, [], force=True).count("->") == 1 << 13

    def test_deterministic(self, g3):
        assert export_dot(f_map(g3), [42, 21]) == export_dot(f_map(g3), [21, 42])
