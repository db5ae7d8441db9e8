"""Theorem-level classification and the cross-validation harness."""

from __future__ import annotations

import dataclasses

import pytest

from cutkoszul.classify import (
    AGREEMENT_LABELS,
    CHECK_NAMES,
    CSV_HEADER,
    ResourceGuardError,
    _check_koszul,
    classify,
    cross_validate,
    induced_cycles,
)
from cutkoszul.cuts import cut_matrix
from cutkoszul.graphs import (
    Graph,
    clique_sum,
    complete_graph,
    complete_multipartite,
    contract_edge,
    cycle_graph,
    graph,
    graph_classes,
    star_graph,
)

HOUSE = clique_sum(cycle_graph(4), cycle_graph(3), {1: 3, 2: 4}).graph


# ---------------------------------------------------------------------------
# induced cycles
# ---------------------------------------------------------------------------

def test_induced_cycle_lengths():
    assert induced_cycles(cycle_graph(5)) == {5}
    assert induced_cycles(complete_multipartite([2, 3])) == {4}
    assert induced_cycles(complete_graph(4)) == {3}
    assert induced_cycles(star_graph(4)) == frozenset()
    # the pentagon of the house has a chord, so only 3 and 4 survive
    assert induced_cycles(HOUSE) == {3, 4}
    assert induced_cycles(cycle_graph(6)) == {6}


# ---------------------------------------------------------------------------
# theorem fields
# ---------------------------------------------------------------------------

def test_classify_on_the_reference_graphs():
    r = classify(complete_multipartite([2, 3]))
    assert r.strongly_koszul_theorem and r.quadratic_gb_theorem and r.compressed_theorem

    r = classify(cycle_graph(5))
    assert not r.strongly_koszul_theorem
    assert r.quadratic_generation_theorem  # no K4 minor
    assert not r.compressed_theorem
    assert r.quadratic_gb_theorem is None

    r = classify(complete_graph(4))
    assert not r.strongly_koszul_theorem and not r.quadratic_generation_theorem
    assert r.compressed_theorem  # no K5 minor, only triangles

    r = classify(HOUSE)
    assert not r.strongly_koszul_theorem and r.quadratic_generation_theorem


def test_quadratic_gb_field_is_never_false():
    for n in range(1, 6):
        for g in graph_classes(n, connected_only=True):
            r = classify(g)
            assert r.quadratic_gb_theorem in (True, None)
            assert r.quadratic_gb_theorem == (True if r.strongly_koszul_theorem else None)


def test_strong_koszulness_field_is_minor_closed():
    for n in range(2, 7):
        for g in graph_classes(n, connected_only=True):
            if not classify(g).strongly_koszul_theorem:
                continue
            children = []
            for e in g.edge_list():
                children.append(contract_edge(g, e))
                children.append(Graph(g.n, g.edges - {e}))
            for v in range(1, g.n + 1):
                if g.n > 1:
                    keep = [u for u in range(1, g.n + 1) if u != v]
                    relab = {u: k + 1 for k, u in enumerate(keep)}
                    children.append(
                        Graph(g.n - 1,
                              frozenset((relab[i], relab[j]) for i, j in g.edges
                                        if v not in (i, j)))
                    )
            for child in children:
                assert classify(child).strongly_koszul_theorem, (g, child)


def test_disconnected_input_takes_component_conjunction():
    def disjoint_union(a: Graph, b: Graph) -> Graph:
        edges = list(a.edges) + [(i + a.n, j + a.n) for i, j in b.edges]
        return graph(a.n + b.n, edges)

    good = disjoint_union(star_graph(2), complete_graph(3))
    assert classify(good).strongly_koszul_theorem
    bad = disjoint_union(cycle_graph(5), complete_graph(3))
    assert not classify(bad).strongly_koszul_theorem
    assert classify(bad).c5_minor


# ---------------------------------------------------------------------------
# cross validation
# ---------------------------------------------------------------------------

def test_check_vocabulary_is_fixed():
    assert CHECK_NAMES == ("koszul", "markov", "compressed", "gb")
    assert set(AGREEMENT_LABELS) == {"supported", "consistent", "unconfirmed", "disagree"}


def test_cross_validate_canonical_check_order():
    r = cross_validate(cycle_graph(4), checks=("gb", "compressed", "koszul", "markov"))
    assert [c.name for c in r.computational_checks] == ["koszul", "markov", "compressed", "gb"]


def test_cross_validate_rejects_unknown_checks():
    with pytest.raises(ValueError):
        cross_validate(complete_graph(3), checks=("koszul", "ghost"))


def test_agreement_labels_across_the_four_situations():
    # theorem false + failure found -> supported
    r = cross_validate(cycle_graph(5), degree=3, checks=("koszul",))
    assert r.computational_checks[0].agreement == "supported"
    # theorem true + bounded pass -> consistent
    r = cross_validate(complete_multipartite([2, 3]), degree=3, checks=("koszul",))
    assert r.computational_checks[0].agreement == "consistent"
    # theorem false + bounded pass -> unconfirmed (K4's failure needs degree 4)
    r = cross_validate(complete_graph(4), degree=3, checks=("koszul",))
    assert r.computational_checks[0].agreement == "unconfirmed"
    assert r.agreement  # unconfirmed is not a disagreement


def test_disagreement_is_reachable_only_by_contradiction():
    # doctor the theorem field to force the conclusive-contradiction label
    g = cycle_graph(5)
    report = classify(g)
    doctored = dataclasses.replace(report, strongly_koszul_theorem=True)
    check = _check_koszul(doctored, cut_matrix(g), 3)
    assert check.agreement == "disagree"


def test_koszul_witness_detail_fields():
    r = cross_validate(HOUSE, degree=3, checks=("koszul",))
    detail = r.computational_checks[0].detail
    assert set(detail) == {"pair", "cuts", "degree", "vector"}
    i, j = detail["pair"]
    assert "|" in detail["cuts"][0] and "|" in detail["cuts"][1]
    assert detail["degree"] == 3
    assert len(detail["vector"]) == HOUSE.m + 1


def test_exhaustive_koszul_lists_every_failing_pair():
    r = cross_validate(cycle_graph(5), degree=3, checks=("koszul",), exhaustive=True)
    pairs = r.computational_checks[0].detail["failing_pairs"]
    assert [0, 9] in pairs and len(pairs) == 40


def test_gb_check_only_on_recognized_families():
    r = cross_validate(HOUSE, degree=3, checks=("gb",))
    assert r.computational_checks == ()
    r = cross_validate(star_graph(2), degree=3, checks=("gb",))
    assert [c.name for c in r.computational_checks] == ["gb"]
    assert r.computational_checks[0].verdict == "family-certified"


def test_gb_check_certifies_nonstandard_labelings_against_standard():
    r = cross_validate(cycle_graph(4), degree=4, checks=("gb",))
    c = r.computational_checks[0]
    assert c.verdict == "family-certified"
    assert c.detail["labeling"] == "standard"
    assert c.detail["family"] == "K_{2,2}"


def test_markov_check_on_k4():
    r = cross_validate(complete_graph(4), degree=4, checks=("markov",))
    c = r.computational_checks[0]
    assert c.verdict == "degree-4-generator-found"
    assert c.agreement == "supported"
    assert c.detail["generator_degrees"] == {"4": 1}


def test_resource_guard_and_override():
    big_path = graph(9, [(i, i + 1) for i in range(1, 9)])
    with pytest.raises(ResourceGuardError):
        cross_validate(big_path)
    r = cross_validate(big_path, checks=(), override_guard=True)
    assert r.computational_checks == ()
    assert r.strongly_koszul_theorem  # a path has no K4 or C5 minor


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def test_json_schema_fields():
    d = cross_validate(cycle_graph(4), degree=3).to_json_dict()
    assert set(d) == {
        "descriptor", "n", "m", "edges",
        "k4_minor", "c5_minor", "k5_minor", "induced_cycle_lengths",
        "strongly_koszul_theorem", "quadratic_generation_theorem",
        "compressed_theorem", "quadratic_gb_theorem",
        "computational_checks", "agreement",
    }
    assert d["descriptor"] == "K_{2,2}"
    assert all(set(c) == {"name", "verdict", "bound", "agreement", "detail"}
               for c in d["computational_checks"])


def test_csv_row_shape_and_tristate():
    row = classify(complete_graph(4)).csv_row()
    assert len(row) == len(CSV_HEADER) == 10
    as_dict = dict(zip(CSV_HEADER, row))
    assert as_dict["k4_minor"] == "true"
    assert as_dict["quadratic_gb_theorem"] == "unknown"
    assert as_dict["agreement"] == "true"  # no checks run, nothing disagrees
