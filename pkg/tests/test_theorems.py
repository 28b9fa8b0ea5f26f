import random

import pytest
from hypothesis import given, settings, strategies as st

from rhued import (
    Graph,
    GraphStructureError,
    chi_hued_exact,
    chi_hued_tree,
    chi_list_hued_cycle,
    chi_list_hued_tree,
    chi_list_hued_unicyclic,
    degree_cap,
    predict,
)
from rhued.instances import (
    cycle_graph,
    cycle_with_pendants,
    path_graph,
    random_unicyclic,
    single_vertex,
    star_graph,
)
from rhued.theorems import EXACT, TWO_CANDIDATES


def test_tree_values():
    assert chi_list_hued_tree(star_graph(5), 3).value == 4
    assert chi_list_hued_tree(single_vertex(), 1).value == 1
    assert chi_list_hued_tree(path_graph(5), 7).value == 3
    assert chi_list_hued_tree(path_graph(2), 1).value == 2
    with pytest.raises(GraphStructureError):
        chi_list_hued_tree(cycle_graph(3), 2)


def test_hued_tree_values():
    assert chi_hued_tree(path_graph(3), 2).value == 3
    assert chi_hued_tree(star_graph(4), 1).value == 2
    assert chi_hued_tree(path_graph(6), 9).value == 3
    assert chi_hued_tree(single_vertex(), 5).value == 1
    assert chi_hued_tree(path_graph(2), 5).value == 2


def test_cycle_values():
    assert chi_list_hued_cycle(5, 2).value == 5
    assert chi_list_hued_cycle(9, 4).value == 3
    assert chi_list_hued_cycle(4, 1).value == 2
    assert chi_list_hued_cycle(7, 1).value == 3
    assert chi_list_hued_cycle(7, 2).value == 4
    with pytest.raises(ValueError):
        chi_list_hued_cycle(2, 1)


def test_unicyclic_r1_parity():
    assert chi_list_hued_unicyclic(cycle_with_pendants(6, {0: 1}), 1).value == 2
    assert chi_list_hued_unicyclic(cycle_with_pendants(5, {0: 1}), 1).value == 3


def test_unicyclic_n5_r2():
    one = cycle_with_pendants(5, {0: 1})
    pred = chi_list_hued_unicyclic(one, 2)
    assert pred.value == 4 and pred.provenance == "n5-classification"
    # two branch vertices, adjacent on the cycle: value drops to k
    adjacent = cycle_with_pendants(5, {0: 1, 1: 1})
    assert chi_list_hued_unicyclic(adjacent, 2).value == 3
    opposite = cycle_with_pendants(5, {0: 1, 2: 1})
    assert chi_list_hued_unicyclic(opposite, 2).value == 4


def test_unicyclic_n5_higher_r():
    one = cycle_with_pendants(5, {0: 1})  # max degree 3
    assert chi_list_hued_unicyclic(one, 4).value == 5
    assert chi_list_hued_unicyclic(one, 3).value == 5
    # a degree-4 cycle vertex with r=3 drops back to k
    deg4 = cycle_with_pendants(5, {0: 2})
    assert chi_list_hued_unicyclic(deg4, 3).value == 4
    # ... but an off-cycle degree-4 vertex keeps the bump at r=3
    spider = Graph(9, [(i, (i + 1) % 5) for i in range(5)]
                   + [(0, 5), (5, 6), (5, 7), (5, 8)])
    pred = chi_list_hued_unicyclic(spider, 3)
    assert pred.value == 5
    # at r=4 the same graph needs only k: no bump clause applies
    assert chi_list_hued_unicyclic(spider, 4).value == 5  # k = min(4,4)+1
    deg5 = cycle_with_pendants(5, {0: 3})
    assert chi_list_hued_unicyclic(deg5, 4).value == 5  # min{4,5}+1, no bump


def test_unicyclic_away_from_five():
    assert chi_list_hued_unicyclic(cycle_with_pendants(6, {0: 1}), 3).value == 4
    assert chi_list_hued_unicyclic(cycle_with_pendants(6, {0: 1}), 2).value == 3
    obs14 = chi_list_hued_unicyclic(cycle_with_pendants(4, {0: 1}), 2)
    assert obs14.value == 4 and obs14.provenance == "obs-14"
    obs15 = chi_list_hued_unicyclic(cycle_with_pendants(4, {0: 1, 1: 1, 2: 1}), 2)
    assert obs15.value == 3 and obs15.provenance == "obs-15"
    band = chi_list_hued_unicyclic(cycle_with_pendants(7, {0: 1, 1: 1}), 2)
    assert band.kind == TWO_CANDIDATES and band.candidates == (3, 4)


def test_predict_dispatch():
    assert predict(path_graph(4), 2).provenance == "tree-theorem"
    assert predict(cycle_graph(6), 2).value == 3
    assert predict(cycle_with_pendants(6, {0: 1}), 3).value == 4
    with pytest.raises(GraphStructureError):
        predict(Graph(4, [(0, 1), (2, 3)]), 2)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9), st.integers(1, 6))
def test_sandwich_and_k5_invariants(seed, r):
    rng = random.Random(seed)
    n = rng.choice([3, 4, 5, 6, 7, 8])
    g = random_unicyclic(rng, n, n + rng.randint(1, 4))
    k = degree_cap(g, r)
    pred = chi_list_hued_unicyclic(g, r)
    values = pred.possible_values()
    assert all(k <= v <= k + 1 for v in values)
    if k >= 5:
        assert pred.kind == EXACT and pred.value == k


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_predictions_monotone_in_r(seed):
    rng = random.Random(seed)
    n = rng.choice([3, 4, 5, 6, 7])
    g = random_unicyclic(rng, n, n + rng.randint(1, 3))
    lows = [min(chi_list_hued_unicyclic(g, r).possible_values()) for r in range(1, 7)]
    highs = [max(chi_list_hued_unicyclic(g, r).possible_values()) for r in range(1, 7)]
    assert lows == sorted(lows)
    assert highs == sorted(highs)


def test_exact_predictions_are_tight_on_small_instances():
    """Where the prediction says exactly m: the solver colors every sampled
    m-list and the oracle exhibits a bad (m-1)-list."""
    from rhued import color_unicyclic, find_bad_list, verify_coloring
    from rhued.solver import UnsatisfiableCycle
    rng = random.Random(99)
    cases = [(cycle_with_pendants(4, {0: 1}), 2),       # 4 via obs-14
             (cycle_with_pendants(5, {0: 1}), 2),       # 4 via 5-cycle rule
             (cycle_with_pendants(6, {0: 1}), 2),       # 3: divisible by 3
             (cycle_with_pendants(7, {0: 1}), 3)]       # 4: large r
    for g, r in cases:
        pred = chi_list_hued_unicyclic(g, r)
        assert pred.kind == EXACT
        m = pred.value
        for _ in range(50):
            lists = __import__("rhued").instances.random_k_lists(
                rng, g.vertices, m, 2 * m)
            out = color_unicyclic(g, lists, r)
            assert not isinstance(out, UnsatisfiableCycle)
            assert verify_coloring(g, lists, out, r).ok
        assert find_bad_list(g, r, m - 1, attempts=300, seed=1) is not None


@pytest.mark.parametrize("r", [1, 2, 3])
def test_prediction_matches_plain_hued_oracle_small(r):
    """On instances where the exact value is pinned, the plain r-hued number
    must sit inside the prediction window."""
    cases = [cycle_with_pendants(3, {0: 1}), cycle_with_pendants(4, {0: 1}),
             cycle_with_pendants(5, {0: 1}), cycle_with_pendants(6, {0: 1, 2: 1}),
             cycle_with_pendants(7, {0: 1})]
    for g in cases:
        pred = chi_list_hued_unicyclic(g, r)
        chi = chi_hued_exact(g, r)
        assert chi <= max(pred.possible_values())
        if pred.kind == EXACT:
            assert chi <= pred.value
