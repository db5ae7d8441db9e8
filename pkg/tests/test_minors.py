"""Minor containment: generic search, the two fast paths, contraction witnesses."""

from __future__ import annotations

import pytest

from cutkoszul.graphs import (
    Graph,
    GraphError,
    clique_sum,
    complete_graph,
    complete_multipartite,
    contract_edge,
    cycle_graph,
    graph,
    graph_classes,
    is_isomorphic,
    is_two_connected,
    star_graph,
)
from cutkoszul.minors import (
    _TARGETS,
    contraction_witness,
    has_c5_minor,
    has_k4_minor,
    has_minor,
)

HOUSE = clique_sum(cycle_graph(4), cycle_graph(3), {1: 3, 2: 4}).graph
CHORDED_HOUSE = graph(5, [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4), (3, 5), (4, 5)])
WHEEL4 = graph(5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5), (2, 5)])


# ---------------------------------------------------------------------------
# named verdicts
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "g,k4,c5",
    [
        (complete_graph(4), True, False),
        (complete_graph(5), True, True),
        (cycle_graph(5), False, True),
        (HOUSE, False, True),
        (CHORDED_HOUSE, False, True),
        (WHEEL4, True, True),
        (complete_multipartite([2, 3]), False, False),
        (complete_multipartite([1, 1, 3]), False, False),  # glued triangles reduce away
        (star_graph(6), False, False),
        (cycle_graph(6), False, True),
    ],
    ids=["K4", "K5", "C5", "house", "house+chord", "W4", "K23", "K113", "star6", "C6"],
)
def test_fast_paths_on_named_graphs(g, k4, c5):
    assert has_k4_minor(g) == k4
    assert has_c5_minor(g) == c5


def test_generic_search_basics():
    assert has_minor(complete_graph(5), complete_graph(4))
    assert not has_minor(complete_graph(4), complete_graph(5))
    assert has_minor(HOUSE, cycle_graph(5))
    assert not has_minor(HOUSE, complete_graph(4))
    assert has_minor(CHORDED_HOUSE, HOUSE)
    assert has_minor(cycle_graph(6), cycle_graph(3))


def test_edgeless_targets_count_vertices():
    h = graph(3)
    assert has_minor(cycle_graph(4), h)
    assert not has_minor(complete_graph(2), h)


def test_targets_mixing_edges_and_isolated_vertices_refused():
    h = graph(4, [(1, 2), (2, 3)])  # vertex 4 isolated
    with pytest.raises(GraphError):
        has_minor(complete_graph(5), h)


def test_minor_of_disconnected_host():
    g = graph(7, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (6, 7), (4, 7)])
    assert has_minor(g, cycle_graph(4))
    assert has_minor(g, complete_graph(3))
    assert not has_minor(g, complete_graph(4))


# ---------------------------------------------------------------------------
# fast paths agree with the generic search
# ---------------------------------------------------------------------------

def test_fast_paths_agree_with_generic_search_up_to_six():
    k4, c5 = complete_graph(4), cycle_graph(5)
    for n in range(1, 7):
        for g in graph_classes(n, connected_only=True):
            assert has_k4_minor(g) == has_minor(g, k4), g
            assert has_c5_minor(g) == has_minor(g, c5), g


def test_minor_predicates_are_closed_under_single_steps():
    for n in range(2, 6):
        for g in graph_classes(n, connected_only=True):
            for e in g.edge_list():
                children = [contract_edge(g, e), Graph(g.n, g.edges - {e})]
                for child in children:
                    if has_k4_minor(child):
                        assert has_k4_minor(g)
                    if has_c5_minor(child):
                        assert has_c5_minor(g)


# ---------------------------------------------------------------------------
# contraction witnesses
# ---------------------------------------------------------------------------

def test_targets_are_the_three_expected_shapes():
    names = [name for name, _ in _TARGETS]
    assert names == ["C5", "C4#C3", "(K4-e)#C3"]
    assert is_isomorphic(dict(_TARGETS)["C4#C3"], HOUSE)
    assert is_isomorphic(dict(_TARGETS)["(K4-e)#C3"], CHORDED_HOUSE)


def test_witness_on_the_targets_themselves():
    for name, t in _TARGETS:
        w = contraction_witness(t)
        assert w is not None and w.steps == () and w.target_name == name


def test_witness_replays_to_its_result():
    g = cycle_graph(7)
    w = contraction_witness(g)
    assert w is not None and w.target_name == "C5"
    cur = g
    for e in w.steps:
        cur = contract_edge(cur, e)
    assert cur == w.result
    assert is_isomorphic(cur, cycle_graph(5))


def test_no_witness_without_a_c5_minor_or_below_five_vertices():
    assert contraction_witness(complete_multipartite([2, 3])) is None
    assert contraction_witness(complete_graph(4)) is None


def test_witnesses_cover_the_two_connected_k4_free_corpus_to_six():
    targets = dict(_TARGETS)
    hits = 0
    for n in range(5, 7):
        for g in graph_classes(n, connected_only=True):
            if not is_two_connected(g) or has_k4_minor(g) or not has_c5_minor(g):
                continue
            w = contraction_witness(g)
            assert w is not None, g
            cur = g
            for e in w.steps:
                cur = contract_edge(cur, e)
            assert cur == w.result and is_isomorphic(cur, targets[w.target_name])
            hits += 1
    assert hits == 16  # 3 shapes at n=5 plus 13 classes at n=6
