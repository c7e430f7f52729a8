import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from revdom import action, analysis
from revdom.action import (
    apply_word,
    f_system,
    im_epsilon_set,
    im_epsilon_set_by_orbits,
    independence_system,
    is_in_im_epsilon,
    orbit_closure,
    orbit_summary,
    reverse_lookup,
    system_preset,
)
from revdom.conditions import ODD_OPEN, PERFECT_OPEN
from revdom.dynamics import State, step_a, step_b_independence
from revdom.errors import NotReversible, UnknownGenerator, UnknownName, WidthMismatch, WidthTooLarge
from revdom.graph import from_index_edges

from conftest import graphs

G3_IM = [0, 7, 12, 14, 19, 21, 24, 26, 28, 35, 37, 39, 42, 44, 49, 51, 56]


def words(letters, max_len):
    for n in range(max_len + 1):
        for w in itertools.product(letters, repeat=n):
            yield "".join(w)


def presets(g):
    return [f_system(g), independence_system(g), action.condition_system(g, PERFECT_OPEN),
            action.condition_system(g, ODD_OPEN)]


class TestWords:
    def test_examples(self, g3):
        m = independence_system(g3)
        assert apply_word(m, "a", 42) == 42
        assert apply_word(m, "ba", 42) == 42
        for sys in (m, f_system(g3)):
            for k in (0, 13, 63):
                assert apply_word(sys, "", k) == k

    def test_rightmost_letter_first(self, g3):
        m = independence_system(g3)
        for k in range(64):
            s = State(k, 6)
            assert apply_word(m, "ab", k) == step_a(g3, step_b_independence(g3, s)).index
            assert apply_word(m, "ba", k) == step_b_independence(g3, step_a(g3, s)).index
        assert any(apply_word(m, "ab", k) != apply_word(m, "ba", k) for k in range(64))

    def test_unknown_generator(self, g3):
        with pytest.raises(UnknownGenerator):
            apply_word(f_system(g3), "a", 0)

    def test_state_objects(self, g3):
        assert apply_word(f_system(g3), "F", State(20, 6)) == 42
        with pytest.raises(WidthMismatch):
            apply_word(f_system(g3), "F", State(1, 3))

    def test_presets(self, g3):
        assert system_preset(g3, "N-F").letters == "F"
        assert system_preset(g3, "M-indep").letters == "ab"
        assert system_preset(g3, "M-cond:odd-open").name == "M-cond:odd-open"
        assert system_preset(g3, "M-cond", ODD_OPEN).name == "M-cond:odd-open"
        assert system_preset(g3, "M-cond").name == "M-cond:perfect-open"
        with pytest.raises(UnknownName):
            system_preset(g3, "Z")


class TestOrbits:
    def test_closure_examples(self, g3, p3):
        assert orbit_closure(f_system(g3), 29) == {29, 34, 20, 42, 21}
        assert orbit_closure(f_system(p3), 0) == {0}
        assert orbit_closure(independence_system(g3), 42) == {42}

    def test_membership_examples(self, g3):
        assert is_in_im_epsilon(f_system(g3), 42)
        assert not is_in_im_epsilon(f_system(g3), 29)
        assert is_in_im_epsilon(f_system(g3), 0)
        assert not is_in_im_epsilon(independence_system(g3), 7)

    def test_im_set_examples(self, g3, k2, p3):
        assert im_epsilon_set(f_system(g3)) == G3_IM
        assert im_epsilon_set(f_system(k2)) == [0, 1, 2]
        assert im_epsilon_set(independence_system(p3)) == [0, 2, 5]

    def test_width_cap(self):
        g = from_index_edges(25, [(i, i + 1) for i in range(24)])
        with pytest.raises(WidthTooLarge):
            im_epsilon_set(f_system(g))
        with pytest.raises(WidthTooLarge):
            im_epsilon_set(f_system(from_index_edges(6, [(0, 1)])), cap=5)

    def test_orbit_summary(self, g3):
        f = action.f_generator(g3)
        r = orbit_summary(f, 29)
        assert (r.tail_length, r.cycle_length, set(r.cycle_members)) == (3, 2, {42, 21})
        assert r.entry_state == 42
        r = orbit_summary(f, 0)
        assert (r.tail_length, r.cycle_length) == (0, 1)
        r = orbit_summary(f, 63)
        assert (r.tail_length, r.cycle_length, r.cycle_members) == (1, 1, (0,))

    @given(graphs(max_n=8), st.data())
    @settings(max_examples=60)
    def test_orbit_summary_invariant(self, g, data):
        f = action.f_generator(g)
        k = data.draw(st.integers(0, g.full_mask))
        r = orbit_summary(f, k)
        x = k
        for _ in range(r.tail_length):
            x = f(x)
        assert x == r.entry_state and x in r.cycle_members
        for _ in range(r.cycle_length):
            x = f(x)
        assert x == r.entry_state


class TestReverse:
    def test_examples(self, g3):
        sys = f_system(g3)
        assert reverse_lookup(sys, 42, "F") == 21
        assert reverse_lookup(sys, 0, "FF") == 0
        for k in G3_IM:
            assert reverse_lookup(sys, k, "") == k
        with pytest.raises(NotReversible):
            reverse_lookup(sys, 29, "F")
        with pytest.raises(UnknownGenerator):
            reverse_lookup(sys, 42, "x")

    @pytest.mark.parametrize("make", [f_system, independence_system,
                                      lambda g: action.condition_system(g, PERFECT_OPEN),
                                      lambda g: action.condition_system(g, ODD_OPEN)])
    def test_round_trip_and_inv_relation(self, g3, c4, make):
        for g in (g3, c4):
            sys = make(g)
            for k in im_epsilon_set(sys):
                for w in words(sys.letters, 4):
                    assert apply_word(sys, w, reverse_lookup(sys, k, w)) == k
                for u in words(sys.letters, 3):
                    sigma_u = reverse_lookup(sys, k, u)
                    for w in words(sys.letters, 3 - len(u)):
                        assert apply_word(sys, w, reverse_lookup(sys, k, u + w)) == sigma_u


# -- cross-route and structural properties --------------------------------

@given(graphs(max_n=7))
@settings(max_examples=30, deadline=None)
def test_three_routes_agree(g):
    for sys in presets(g):
        vectorised = im_epsilon_set(sys)
        assert im_epsilon_set_by_orbits(sys) == vectorised
        assert [k for k in range(1 << g.n) if is_in_im_epsilon(sys, k)] == vectorised


@given(graphs(max_n=7))
@settings(max_examples=30, deadline=None)
def test_membership_closed_under_orbits(g):
    for sys in presets(g):
        members = set(im_epsilon_set(sys))
        for k in members:
            assert orbit_closure(sys, k) <= members


@given(graphs(max_n=8))
@settings(max_examples=30, deadline=None)
def test_bijective_sub_action(g):
    for sys in presets(g):
        members = im_epsilon_set(sys)
        for gen in sys.generators:
            image = sorted(gen.func(k) for k in members)
            assert image == members
        # recomputing on the sub-action alone returns it unchanged
        tables = action.transition_tables(sys)
        sub = np.array(members)
        lookup = {k: i for i, k in enumerate(members)}
        restricted = [np.array([lookup[int(t[k])] for k in sub]) for t in tables.values()]
        assert action.im_epsilon_mask_from_tables(restricted).all()


@given(graphs(max_n=10))
@settings(max_examples=30, deadline=None)
def test_single_generator_is_cycle_set(g):
    sys = f_system(g)
    t = analysis.build_transition_map(g, sys.generators[0])
    cycles = analysis.classify_attractors(t).cycles
    assert im_epsilon_set(sys) == sorted(k for c in cycles for k in c)


def test_disconnected_graph_still_runs():
    g = from_index_edges(4, [(0, 1), (2, 3)])
    assert im_epsilon_set(f_system(g)) == im_epsilon_set_by_orbits(f_system(g))
