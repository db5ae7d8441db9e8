"""Graph minor containment: a generic search plus two fast paths.

The generic test branches over single edge deletions and contractions
(with isolated vertices dropped when the host is too big), memoizing on
canonical forms, and is exact for hosts up to about 10 vertices.  The
fast paths decide the two minors the classifier cares about without
branching: K4 via series-parallel reduction, cycles via circumference.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Graph,
    GraphError,
    _canonical_mask,
    canonical_form,
    circumference,
    complete_graph,
    contract_edge,
    cycle_graph,
    graph,
    graph_to_mask,
    is_isomorphic,
)


def _drop_isolated(g: Graph) -> Graph:
    touched = {v for e in g.edges for v in e}
    if len(touched) == g.n or not touched:
        return g
    keep = sorted(touched)
    relab = {v: k + 1 for k, v in enumerate(keep)}
    return Graph(len(keep), frozenset((relab[i], relab[j]) for i, j in g.edges))


def has_minor(g: Graph, h: Graph) -> bool:
    """Does g contain h as a minor (deletions, contractions, vertex drops)?

    Recursive branching with memoization on canonical forms.  Isolated
    vertices of the host are discarded up front whenever the host still
    has more vertices than the target, which subsumes vertex deletion:
    a vertex to delete first loses its edges to deletion branches.
    """
    if h.m == 0:
        return g.n >= h.n
    if any(len(us) == 0 for us in h.adjacency().values()):
        raise GraphError("minor targets mixing edges with isolated vertices are not supported")
    target = canonical_form(h)
    memo: dict[tuple[int, int], bool] = {}

    def search(cur: Graph) -> bool:
        if cur.n < h.n or cur.m < h.m:
            return False
        if cur.n > h.n:
            cur = _drop_isolated(cur)
            if cur.n < h.n:
                return False
        key = (cur.n, _canonical_mask(cur.n, graph_to_mask(cur)))
        if key == target:
            return True
        if key in memo:
            return memo[key]
        found = False
        for e in cur.edge_list():
            if search(contract_edge(cur, e)):
                found = True
                break
            smaller = Graph(cur.n, cur.edges - {e})
            if search(smaller):
                found = True
                break
        memo[key] = found
        return found

    return search(g)


def has_k4_minor(g: Graph) -> bool:
    """Series-parallel reduction: K4-minor-free iff the graph reduces away.

    Repeatedly remove degree-0/1 vertices and suppress degree-2 vertices
    (coalescing any parallel edge the suppression creates).  A nonempty
    remainder has minimum degree 3 and therefore a K4 minor; an empty
    remainder certifies treewidth at most 2.
    """
    adj = {v: set(us) for v, us in g.adjacency().items()}
    queue = sorted(adj)
    while queue:
        next_round: set[int] = set()
        for v in queue:
            if v not in adj:
                continue
            deg = len(adj[v])
            if deg > 2:
                continue
            if deg <= 1:
                for u in adj[v]:
                    adj[u].discard(v)
                    next_round.add(u)
                del adj[v]
            else:
                a, b = sorted(adj[v])
                adj[a].discard(v)
                adj[b].discard(v)
                del adj[v]
                if b not in adj[a]:
                    adj[a].add(b)
                    adj[b].add(a)
                next_round.update((a, b))
        queue = sorted(next_round)
    return bool(adj)


def has_c5_minor(g: Graph) -> bool:
    """A cycle minor of length k exists iff some cycle has length >= k."""
    return circumference(g) >= 5


def has_cycle_minor(g: Graph, k: int) -> bool:
    if k < 3:
        raise GraphError("cycle minors need k >= 3")
    return circumference(g) >= k


# the three 5-vertex targets every 2-connected K4-minor-free graph with a
# C5 minor contracts to: the plain 5-cycle, the 5-cycle with one chord,
# and the 5-cycle with two crossing-free chords at a shared vertex
_TARGETS = (
    ("C5", cycle_graph(5)),
    ("C4#C3", graph(5, [(1, 2), (2, 3), (3, 4), (1, 4), (3, 5), (4, 5)])),
    ("(K4-e)#C3", graph(5, [(1, 2), (1, 3), (1, 4), (2, 3), (3, 4), (3, 5), (4, 5)])),
)


@dataclass(frozen=True)
class ContractionWitness:
    """A contraction sequence landing on one of the three named targets.

    Each step names an edge in the labeling current at that step (labels
    shift as contractions merge vertices).
    """

    steps: tuple[tuple[int, int], ...]
    result: Graph
    target_name: str


def contraction_witness(g: Graph) -> ContractionWitness | None:
    """Breadth-first contraction search down to a named 5-vertex target.

    Returns None when no contraction sequence reaches any target, which
    for 2-connected K4-minor-free hosts with a C5 minor never happens.
    """
    if g.n < 5:
        return None

    def match(cur: Graph) -> str | None:
        for name, t in _TARGETS:
            if is_isomorphic(cur, t):
                return name
        return None

    start = (g, ())
    seen = {canonical_form(g)}
    frontier = [start]
    while frontier:
        nxt = []
        for cur, steps in frontier:
            if cur.n == 5:
                name = match(cur)
                if name is not None:
                    return ContractionWitness(steps, cur, name)
                continue
            for e in cur.edge_list():
                child = contract_edge(cur, e)
                key = canonical_form(child)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append((child, steps + (e,)))
        frontier = nxt
    return None


def minor_reasons(g: Graph) -> dict[str, bool]:
    """Fast-path verdicts used by the classifier."""
    return {
        "k4": has_k4_minor(g),
        "c5": has_c5_minor(g),
        "k5": has_minor(g, complete_graph(5)),
    }
