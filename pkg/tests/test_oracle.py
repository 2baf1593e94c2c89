"""Unit tests for the exact solvers: independence and domination numbers,
their linear relaxations, and depth-bounded clique-minor search."""

from fractions import Fraction

import pytest

import bruteforce
import corpus
from drisk.generators import (
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from drisk.graph import (
    Graph,
    GraphError,
    is_distance_dominating,
    is_distance_independent,
)
from drisk.oracle import (
    MinorModel,
    OracleLimitError,
    domination_number,
    find_clique_minor,
    independence_number,
    lp_domination,
    lp_packing,
    validate_minor_model,
)


def member_sets(g):
    yield tuple(range(g.n))
    if g.n >= 4:
        yield tuple(range(0, g.n, 2))


class TestIndependenceNumber:
    def test_examples(self):
        p6 = path_graph(6)
        size, witness = independence_number(p6, range(6), 2)
        assert size == 2 and len(witness) == 2
        assert is_distance_independent(p6, witness, 2)
        assert independence_number(p6, range(6), 1)[0] == 3
        assert independence_number(star_graph(5), range(6), 2)[0] == 1
        assert independence_number(complete_graph(4), range(4), 1)[0] == 1
        assert independence_number(p6, [], 1) == (0, ())

    def test_matches_reference_on_corpus(self):
        for name, g in corpus.small_corpus():
            for a in member_sets(g):
                for r in (1, 2, 3):
                    size, witness = independence_number(g, a, r)
                    assert size == bruteforce.alpha(g, a, r), (name, r)
                    assert len(witness) == size
                    assert set(witness) <= set(a)
                    assert is_distance_independent(g, witness, r), (name, r)

    def test_limit_refusal(self):
        g = path_graph(12)
        with pytest.raises(OracleLimitError):
            independence_number(g, range(12), 1, limit=11)


class TestDominationNumber:
    def test_examples(self):
        assert domination_number(star_graph(5), range(6), 1) == (1, (0,))
        p6 = path_graph(6)
        assert domination_number(p6, range(6), 1)[0] == 2
        assert domination_number(p6, range(6), 2)[0] == 2
        assert domination_number(p6, [], 1) == (0, ())

    def test_cover_may_use_non_members(self):
        # members are the leaves of a star: the center is the best cover
        g = star_graph(4)
        size, witness = domination_number(g, [1, 2, 3, 4], 1)
        assert size == 1 and witness == (0,)

    def test_matches_reference_on_corpus(self):
        for name, g in corpus.small_corpus():
            for a in member_sets(g):
                for r in (1, 2, 3):
                    size, witness = domination_number(g, a, r)
                    assert size == bruteforce.gamma(g, a, r), (name, r)
                    assert len(witness) == size
                    assert is_distance_dominating(g, witness, a, r), (name, r)

    def test_limit_refusal(self):
        g = path_graph(12)
        with pytest.raises(OracleLimitError):
            domination_number(g, range(12), 1, limit=11)


class TestLinearRelaxations:
    def test_four_cycle_value(self):
        c4 = cycle_graph(4)
        cover = lp_domination(c4, range(4), 1)
        packing = lp_packing(c4, range(4), 1)
        assert cover.value == Fraction(4, 3)
        assert packing.value == Fraction(4, 3)

    def test_strong_duality_on_corpus(self):
        for name, g in corpus.small_corpus():
            for a in member_sets(g):
                for r in (1, 2):
                    cover = lp_domination(g, a, r)
                    packing = lp_packing(g, a, r)
                    assert cover.value == packing.value, (name, r)

    def test_sandwich_between_integral_optima(self):
        for name, g in corpus.small_corpus():
            if g.n > 10:
                continue
            for a in member_sets(g):
                for r in (1, 2):
                    value = lp_domination(g, a, r).value
                    lo = bruteforce.alpha(g, a, 2 * r)
                    hi = bruteforce.gamma(g, a, r)
                    assert lo <= value <= hi, (name, r)

    def test_matches_float_solver(self):
        pytest.importorskip("scipy")
        for name, g in corpus.small_corpus():
            if g.n > 12:
                continue
            a = tuple(range(g.n))
            for r in (1, 2):
                exact = lp_domination(g, a, r)
                approx = bruteforce.lp_cover_float(g, a, r)
                assert abs(float(exact.value) - approx) < 1e-7, (name, r)

    def test_weights_are_reported_solutions(self):
        g = cycle_graph(5)
        cover = lp_domination(g, range(5), 1)
        assert sum(cover.weights.values()) == cover.value
        packing = lp_packing(g, range(5), 1)
        assert set(packing.weights) == set(range(5))
        assert sum(packing.weights.values()) == packing.value

    def test_empty_member_set(self):
        g = path_graph(3)
        assert lp_domination(g, [], 2).value == 0
        assert lp_packing(g, [], 2).value == 0


class TestMinorSearch:
    def test_cycles_contain_triangle_minor(self):
        for n in (3, 6, 9):
            model = find_clique_minor(cycle_graph(n), 3, 1)
            assert model is not None
            validate_minor_model(cycle_graph(n), model)

    def test_trees_have_no_triangle_minor(self):
        assert find_clique_minor(path_graph(9), 3, 2) is None
        assert find_clique_minor(star_graph(8), 3, 2) is None

    def test_complete_graph_minors(self):
        k4 = complete_graph(4)
        assert find_clique_minor(k4, 4, 1) is not None
        missing_edge = Graph(4, [e for e in k4.edges if e != (2, 3)])
        assert find_clique_minor(missing_edge, 4, 1) is None
        assert find_clique_minor(missing_edge, 3, 1) is not None

    def test_depth_matters(self):
        # a triangle subdivided twice per edge: contracting needs radius 1
        sub = Graph(
            9,
            [
                (0, 3), (3, 4), (4, 1),
                (1, 5), (5, 6), (6, 2),
                (2, 7), (7, 8), (8, 0),
            ],
        )
        assert find_clique_minor(sub, 3, 1) is not None

    def test_single_branch_set(self):
        assert find_clique_minor(path_graph(2), 1, 1) is not None
        assert find_clique_minor(Graph(0), 1, 1) is None

    def test_refusals(self):
        with pytest.raises(OracleLimitError):
            find_clique_minor(path_graph(17), 3, 1)
        with pytest.raises(OracleLimitError):
            find_clique_minor(path_graph(4), 6, 1)
        with pytest.raises(GraphError):
            find_clique_minor(path_graph(4), 0, 1)


class TestValidateMinorModel:
    def test_accepts_hand_built_model(self):
        g = cycle_graph(6)
        model = MinorModel(((0, 1), (2, 3), (4, 5)), 1)
        validate_minor_model(g, model)

    def test_rejects_overlap(self):
        g = cycle_graph(6)
        with pytest.raises(GraphError, match="overlap"):
            validate_minor_model(g, MinorModel(((0, 1), (1, 2), (4, 5)), 1))

    def test_rejects_empty_branch_set(self):
        g = cycle_graph(6)
        with pytest.raises(GraphError, match="empty"):
            validate_minor_model(g, MinorModel(((0, 1), (), (4, 5)), 1))

    def test_rejects_missing_cross_edge(self):
        g = path_graph(6)
        with pytest.raises(GraphError, match="no edge"):
            validate_minor_model(g, MinorModel(((0, 1), (4, 5)), 1))

    def test_rejects_radius_violation(self):
        g = path_graph(6)
        with pytest.raises(GraphError, match="radius"):
            validate_minor_model(g, MinorModel(((0, 1, 2, 3, 4),), 1))

    def test_rejects_disconnected_branch_set(self):
        g = Graph(4, [(0, 1), (2, 3), (1, 2)])
        with pytest.raises(GraphError, match="radius|connected"):
            validate_minor_model(g, MinorModel(((0, 3),), 1))
