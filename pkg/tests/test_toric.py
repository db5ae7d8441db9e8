"""Binomial machinery of the cut ideal.

Covers the monomial/binomial layer, the min-size grevlex order and its
tie-break variants, fibers and Markov generators, Buchberger with
autoreduction, the closed-form bases for stars and two-apex complete
bipartite graphs, the Hilbert comparison, and the random-order
compressedness probe.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutkoszul.cuts import SemigroupElement, cut_matrix, evaluate_monomial
from cutkoszul.graphs import (
    GraphError,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    graph,
    graph_classes,
    star_graph,
)
from cutkoszul.toric import (
    Binomial,
    KernelValidationError,
    Monomial,
    MonomialOrder,
    TIE_BREAKS,
    bipartite_groebner_family,
    buchberger,
    compressed_probe,
    fiber,
    groebner_text,
    hilbert_check,
    is_autoreduced,
    is_groebner_basis,
    kernel_binomial,
    markov_generators_up_to,
    minsize_order,
    random_grevlex_order,
    star_groebner_family,
)

M = Monomial.from_multiset


# ---------------------------------------------------------------------------
# monomials and binomials
# ---------------------------------------------------------------------------

def test_monomial_arithmetic():
    a = M([0, 0, 3])
    b = M([0, 5])
    assert a.degree == 3 and a.to_text() == "q[0]^2*q[3]"
    assert a.mul(b).degree == 5
    assert M([0]).divides(a) and not b.divides(a)
    assert a.lcm(b).to_text() == "q[0]^2*q[3]*q[5]"
    assert M([1, 2]).coprime(M([3, 4])) and not a.coprime(b)
    assert M([1, 2]).is_squarefree() and not a.is_squarefree()


def test_monomial_division():
    quot = M([0, 0, 3]).divide(M([0, 3]))
    assert quot == M([0])


def test_kernel_binomial_accepts_only_kernel_pairs():
    X = cut_matrix(cycle_graph(4))
    # the four cuts of weight (1,1,1,1): indices 1,2 and 0,6 pair up
    b = kernel_binomial(X, M([1, 4]), M([0, 5]))
    assert evaluate_monomial(X, b.lead.pairs) == evaluate_monomial(X, b.tail.pairs)
    with pytest.raises(KernelValidationError):
        kernel_binomial(X, M([1, 4]), M([0, 0]))


def test_binomial_needs_distinct_sides():
    with pytest.raises(GraphError):
        Binomial(M([1, 4]), M([1, 4]))


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

def test_order_requires_a_permutation():
    with pytest.raises(GraphError):
        MonomialOrder([0, 0, 1])


def test_grevlex_comparison_basics():
    order = MonomialOrder([0, 1, 2])
    assert order.is_greater(M([2]), M([1]))
    assert order.is_greater(M([1, 1]), M([2]))  # degree wins first
    # at equal degree, more of the smallest variable means smaller
    assert order.is_greater(M([1, 2]), M([0, 2]))
    assert order.compare(M([0, 2]), M([0, 2])) == 0


@given(st.data())
@settings(max_examples=80, deadline=None)
def test_sort_key_matches_compare(data):
    order = minsize_order(4, tie_break=data.draw(st.sampled_from(TIE_BREAKS)))
    var = st.integers(0, 7)
    a = M(data.draw(st.lists(var, min_size=1, max_size=4)))
    b = M(data.draw(st.lists(var, min_size=1, max_size=4)))
    cmp = order.compare(a, b)
    ka, kb = order.sort_key(a), order.sort_key(b)
    assert cmp == (ka > kb) - (ka < kb)


def test_minsize_order_anchors():
    # the empty cut is the smallest variable under every tie-break; the
    # promotion of the cut isolating vertex 1 to second smallest belongs
    # to the default and revmask variants only
    for tb in TIE_BREAKS:
        assert minsize_order(5, tie_break=tb).rank_of[0] == 0
    for tb in ("default", "revmask"):
        assert minsize_order(5, tie_break=tb).rank_of[0b1111] == 1
    # the plain variants leave ties in plain mask order, so the full mask
    # sits at the other end of its block
    assert minsize_order(5, tie_break="plain").rank_of[0b1111] == 5


def test_minsize_blocks_are_tie_break_invariant():
    # tie-breaks shuffle variables only inside a block of equal smaller
    # side size; the block sequence itself is fixed
    n = 5
    for tb in TIE_BREAKS:
        order = minsize_order(n, tie_break=tb)
        sizes_by_rank = [0] * (1 << (n - 1))
        for idx in range(1 << (n - 1)):
            pc = bin(idx).count("1")
            sizes_by_rank[order.rank_of[idx]] = min(pc, n - pc)
        assert sizes_by_rank == sorted(sizes_by_rank), tb


def test_random_grevlex_is_seed_deterministic():
    a = random_grevlex_order(8, random.Random(7))
    b = random_grevlex_order(8, random.Random(7))
    assert a.rank_of == b.rank_of


# ---------------------------------------------------------------------------
# fibers
# ---------------------------------------------------------------------------

def brute_fiber(matrix, w, degree):
    hits = []
    for combo in itertools.combinations_with_replacement(range(matrix.n_columns), degree):
        image = evaluate_monomial(matrix, Counter(combo).items())
        if image == w:
            hits.append(Monomial.from_multiset(combo))
    return sorted(hits, key=lambda m: m.pairs)


@given(small_g=st.sampled_from([complete_graph(3), cycle_graph(4), star_graph(3)]),
       data=st.data())
@settings(max_examples=30, deadline=None)
def test_fiber_matches_brute_force(small_g, data):
    X = cut_matrix(small_g)
    degree = data.draw(st.integers(1, 3))
    combo = data.draw(
        st.lists(st.integers(0, X.n_columns - 1), min_size=degree, max_size=degree)
    )
    w = evaluate_monomial(X, Counter(combo).items())
    assert fiber(X, w) == brute_fiber(X, w, degree)


def test_cycle_fiber_of_the_all_ones_image_has_four_points():
    X = cut_matrix(cycle_graph(4))
    w = SemigroupElement((1, 1, 1, 1), 2)
    members = fiber(X, w)
    assert len(members) == 4
    pairs = {m.to_text() for m in members}
    assert pairs == {"q[0]*q[5]", "q[1]*q[4]", "q[2]*q[7]", "q[3]*q[6]"}


# ---------------------------------------------------------------------------
# Markov generators
# ---------------------------------------------------------------------------

def test_zero_ideals_have_no_generators():
    for g in [complete_graph(2), complete_graph(3)]:
        assert markov_generators_up_to(cut_matrix(g), 4) == []


def test_k4_needs_a_quartic():
    gens = markov_generators_up_to(cut_matrix(complete_graph(4)), 4)
    assert [b.lead.degree for b in gens] == [4]


def test_generators_are_kernel_elements_with_matching_images():
    X = cut_matrix(cycle_graph(5))
    for b in markov_generators_up_to(X, 3):
        assert evaluate_monomial(X, b.lead.pairs) == evaluate_monomial(X, b.tail.pairs)


def test_generator_degrees_capped_by_bound():
    X = cut_matrix(complete_graph(4))
    assert markov_generators_up_to(X, 3) == []  # the quartic is out of reach
    assert markov_generators_up_to(X, 2) == []


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

def test_buchberger_is_deterministic_and_autoreduced():
    X = cut_matrix(cycle_graph(5))
    order = minsize_order(5)
    gens = markov_generators_up_to(X, 4)
    gb1 = buchberger(gens, order, matrix=X)
    gb2 = buchberger(gens, order, matrix=X)
    assert gb1 == gb2
    assert is_autoreduced(gb1)


def test_buchberger_of_empty_input_is_empty():
    assert buchberger([], minsize_order(3)) == []


def test_is_groebner_basis_rejects_non_kernel_candidates():
    X = cut_matrix(cycle_graph(4))
    fake = [Binomial(M([1, 4]), M([0, 0]))]
    with pytest.raises(KernelValidationError):
        is_groebner_basis(fake, minsize_order(4), X, 3)


def test_is_groebner_basis_rejects_incomplete_candidates():
    # a strict subset of the C4 basis generates a smaller ideal; the
    # Hilbert comparison notices the missing standard-monomial collisions
    X = cut_matrix(cycle_graph(4))
    order = minsize_order(4)
    full = buchberger(markov_generators_up_to(X, 4), order, matrix=X)
    assert len(full) >= 2
    assert is_groebner_basis(full, order, X, 3)
    assert not is_groebner_basis(full[:1], order, X, 3)


# ---------------------------------------------------------------------------
# closed-form families
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("m", [2, 3])
def test_star_family_equals_reduced_basis(m):
    g = star_graph(m)
    X = cut_matrix(g)
    order = minsize_order(g.n)
    family = star_groebner_family(m)
    assert is_autoreduced(family)
    gb = buchberger(markov_generators_up_to(X, 3), order, matrix=X)
    assert {b.unordered() for b in family} == {b.unordered() for b in gb}


def test_star_family_sizes():
    # pairs of incomparable leaf subsets
    assert len(star_groebner_family(2)) == 1
    assert len(star_groebner_family(3)) == 9


@pytest.mark.parametrize("m", [2, 3])
def test_bipartite_family_certifies(m):
    g = complete_multipartite([2, m])
    X = cut_matrix(g)
    family = bipartite_groebner_family(m)
    assert is_groebner_basis(family, minsize_order(g.n), X, 4)


def test_bipartite_family_sizes_and_redundancy():
    fam2 = bipartite_groebner_family(2)
    fam3 = bipartite_groebner_family(3)
    assert len(fam2) == 4
    assert len(fam3) == 22
    # the family repeats leading monomials across its first two kinds, so
    # it is a Groebner basis without being auto-reduced
    assert not is_autoreduced(fam3)


@pytest.mark.parametrize("m", [2, 3])
def test_bipartite_family_leads_match_reduced_basis(m):
    g = complete_multipartite([2, m])
    X = cut_matrix(g)
    order = minsize_order(g.n)
    family = bipartite_groebner_family(m)
    gb = buchberger(markov_generators_up_to(X, 4), order, matrix=X)

    def initial_monomials(basis, degree):
        leads = [b.lead for b in basis]
        out = set()
        for combo in itertools.combinations_with_replacement(range(X.n_columns), degree):
            mono = Monomial.from_multiset(combo)
            if any(l.divides(mono) for l in leads):
                out.add(mono)
        return out

    for d in (2, 3, 4):
        assert initial_monomials(family, d) == initial_monomials(gb, d)


# ---------------------------------------------------------------------------
# Hilbert comparison over the small corpus
# ---------------------------------------------------------------------------

def test_hilbert_check_passes_with_full_basis_everywhere_small():
    for n in range(2, 6):
        for g in graph_classes(n, connected_only=True):
            X = cut_matrix(g)
            order = minsize_order(n)
            gb = buchberger(markov_generators_up_to(X, 4), order, matrix=X)
            assert hilbert_check(gb, X, 3), g


# ---------------------------------------------------------------------------
# compressedness probe
# ---------------------------------------------------------------------------

def test_probe_is_consistent_for_squarefree_cases():
    for g in [complete_graph(3), cycle_graph(4)]:
        res = compressed_probe(cut_matrix(g), trials=20, seed=0)
        assert res.verdict == "consistent-with-compressed"
        assert res.trials_run == 20


def test_probe_finds_a_cycle_witness():
    res = compressed_probe(cut_matrix(cycle_graph(5)), trials=50, seed=0)
    assert res.witness_found
    assert res.witness_lead is not None and not res.witness_lead.is_squarefree()
    # early exit: no more trials after the witness
    assert res.trials_run <= 50


def test_probe_is_seed_reproducible():
    X = cut_matrix(cycle_graph(5))
    a = compressed_probe(X, trials=50, seed=3)
    b = compressed_probe(X, trials=50, seed=3)
    assert (a.verdict, a.trials_run) == (b.verdict, b.trials_run)
    if a.witness_found:
        assert a.witness_lead == b.witness_lead


# ---------------------------------------------------------------------------
# text emission
# ---------------------------------------------------------------------------

def test_groebner_text_layout():
    X = cut_matrix(cycle_graph(4))
    order = minsize_order(4)
    gb = buchberger(markov_generators_up_to(X, 4), order, matrix=X)
    text = groebner_text(gb, X, order, 4)
    lines = text.strip().splitlines()
    assert lines[0].startswith("# graph: n=4")
    assert any(l.startswith("# basis-size: ") for l in lines)
    body = [l for l in lines if not l.startswith("#")]
    assert len(body) == len(gb)
    assert all(" - " in l for l in body)
