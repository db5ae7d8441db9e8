"""Finite simple graphs on vertex sets {1, ..., n}.

Construction, relabeling transforms (induced subgraphs, edge deletion and
contraction, clique sums), block decomposition, circumference, isomorphism
testing, family recognition, exhaustive enumeration of small isomorphism
classes, and a plain text exchange format.

Vertices are always the integers 1..n; every transform that drops or merges
vertices relabels the survivors compactly while preserving their relative
order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple


class GraphError(ValueError):
    """Invalid graph construction or operation argument."""


class GraphParseError(GraphError):
    """Malformed graph text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def _normalize_edge(e) -> tuple[int, int]:
    i, j = e
    if i == j:
        raise GraphError(f"loop edge {i}-{j} not allowed")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edges stored as sorted pairs (i, j), i < j."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be >= 1, got {self.n}")
        for i, j in self.edges:
            if not (1 <= i < j <= self.n):
                raise GraphError(f"edge ({i},{j}) outside vertex range 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, i: int, j: int) -> bool:
        return _normalize_edge((i, j)) in self.edges

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges sorted lexicographically; this is the canonical edge order."""
        return sorted(self.edges)

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices()}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def __repr__(self):
        es = ",".join(f"{i}-{j}" for i, j in self.edge_list())
        return f"Graph(n={self.n}, edges=[{es}])"


def graph(n: int, edges: Iterable = ()) -> Graph:
    """Normalizing constructor: sorts endpoints, rejects loops and duplicates."""
    normalized = [_normalize_edge(e) for e in edges]
    if len(normalized) != len(set(normalized)):
        raise GraphError("duplicate edge in input")
    return Graph(n, frozenset(normalized))


# ---------------------------------------------------------------------------
# standard families
# ---------------------------------------------------------------------------

FAMILY_TAGS = ("K1", "K2", "K3", "K1m", "K2m", "K11m", "Cm", "other")


@dataclass(frozen=True)
class GraphFamily:
    """Recognized family tag plus its size parameter (None for the fixed ones).

    K1m is the star with m >= 2 leaves (K_{1,1} is already K2); K2m is the
    complete bipartite graph on parts of size 2 and m (m >= 2); K11m is the
    complete tripartite graph on parts 1, 1, m (m >= 2, since K_{1,1,1} is
    already K3); Cm is the cycle on m >= 3 vertices.
    """

    tag: str
    m: int | None = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise GraphError(f"unknown family tag {self.tag!r}")
        if self.tag in ("K1", "K2", "K3", "other"):
            if self.m is not None:
                raise GraphError(f"family {self.tag} takes no parameter")
        elif self.tag == "Cm":
            if self.m is None or self.m < 3:
                raise GraphError("cycle family needs m >= 3")
        elif self.tag in ("K1m", "K2m", "K11m"):
            if self.m is None or self.m < 2:
                raise GraphError(f"family {self.tag} needs m >= 2")

    def label(self) -> str:
        return {
            "K1": "K1", "K2": "K2", "K3": "K3",
            "K1m": f"K_{{1,{self.m}}}",
            "K2m": f"K_{{2,{self.m}}}",
            "K11m": f"K_{{1,1,{self.m}}}",
            "Cm": f"C{self.m}",
            "other": "other",
        }[self.tag]


def complete_graph(k: int) -> Graph:
    if k < 1:
        raise GraphError("complete graph needs k >= 1")
    return graph(k, itertools.combinations(range(1, k + 1), 2))


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycle needs k >= 3 vertices")
    return graph(k, [(i, i + 1) for i in range(1, k)] + [(1, k)])


def complete_multipartite(sizes: Iterable[int]) -> Graph:
    """Complete multipartite graph; part i occupies the next sizes[i] labels.

    complete_multipartite([2, 3]) puts part one on {1,2} and part two on
    {3,4,5}, matching the labeling used throughout for K_{2,m}.
    """
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise GraphError("part sizes must be positive")
    parts = []
    start = 1
    for s in sizes:
        parts.append(list(range(start, start + s)))
        start += s
    n = start - 1
    edges = [
        (a, b)
        for p, q in itertools.combinations(parts, 2)
        for a in p
        for b in q
    ]
    return graph(n, edges)


def star_graph(m: int) -> Graph:
    """Star with center 1 and leaves 2..m+1 (the complete bipartite 1 + m)."""
    if m < 1:
        raise GraphError("star needs at least one leaf")
    return complete_multipartite([1, m])


def make_family(family: GraphFamily) -> Graph:
    if family.tag == "K1":
        return graph(1)
    if family.tag == "K2":
        return complete_graph(2)
    if family.tag == "K3":
        return complete_graph(3)
    if family.tag == "K1m":
        return star_graph(family.m)
    if family.tag == "K2m":
        return complete_multipartite([2, family.m])
    if family.tag == "K11m":
        return complete_multipartite([1, 1, family.m])
    if family.tag == "Cm":
        return cycle_graph(family.m)
    raise GraphError("cannot construct the 'other' family")


# ---------------------------------------------------------------------------
# transforms
# ---------------------------------------------------------------------------

def _relabel_compact(n: int, edges: Iterable[tuple[int, int]], keep: Iterable[int]) -> Graph:
    keep = sorted(keep)
    new_label = {v: i + 1 for i, v in enumerate(keep)}
    return graph(len(keep), [(new_label[i], new_label[j]) for i, j in edges])


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced on s, relabeled 1..|s| preserving relative order."""
    s = set(s)
    if not s:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    if not s <= set(g.vertices()):
        raise GraphError(f"vertex set {sorted(s)} not within 1..{g.n}")
    kept = [e for e in g.edges if e[0] in s and e[1] in s]
    return _relabel_compact(g.n, kept, s)


def delete_edge(g: Graph, e) -> Graph:
    e = _normalize_edge(e)
    if e not in g.edges:
        raise GraphError(f"edge {e} not in graph")
    return Graph(g.n, g.edges - {e})


def contract_edge(g: Graph, e) -> Graph:
    """Contract e = (a, b): merge b into a, drop loops, coalesce parallels.

    The merged vertex keeps the smaller endpoint's position; remaining
    vertices relabel compactly.
    """
    a, b = _normalize_edge(e)
    if (a, b) not in g.edges:
        raise GraphError(f"edge ({a},{b}) not in graph")
    moved = set()
    for i, j in g.edges:
        i2 = a if i == b else i
        j2 = a if j == b else j
        if i2 != j2:
            moved.add(_normalize_edge((i2, j2)))
    return _relabel_compact(g.n, moved, set(g.vertices()) - {b})


class CliqueSumResult(NamedTuple):
    graph: Graph
    k: int  # a (k+1)-clique is shared, i.e. this is a k-sum


def clique_sum(g1: Graph, g2: Graph, glue: dict[int, int]) -> CliqueSumResult:
    """Glue g2 onto g1, identifying g2-vertex v with g1-vertex glue[v].

    The glued vertices must induce a clique of equal size in both graphs
    (so a single shared vertex is a 0-sum, a shared edge a 1-sum).  g1
    keeps its labels; unglued g2 vertices are appended in ascending order.
    """
    if not glue:
        raise GraphError("clique sum needs at least one shared vertex")
    src = list(glue.keys())
    dst = [glue[v] for v in src]
    if len(set(dst)) != len(dst):
        raise GraphError("glue map must be injective")
    if not set(src) <= set(g2.vertices()) or not set(dst) <= set(g1.vertices()):
        raise GraphError("glue vertices outside graph ranges")
    for u, v in itertools.combinations(sorted(src), 2):
        if not g2.has_edge(u, v):
            raise GraphError(f"glued set not a clique in the second graph: missing {u}-{v}")
    for u, v in itertools.combinations(sorted(dst), 2):
        if not g1.has_edge(u, v):
            raise GraphError(f"glued set not a clique in the first graph: missing {u}-{v}")
    label = dict(glue)
    nxt = g1.n + 1
    for v in sorted(set(g2.vertices()) - set(src)):
        label[v] = nxt
        nxt += 1
    edges = set(g1.edges)
    for i, j in g2.edges:
        edges.add(_normalize_edge((label[i], label[j])))
    return CliqueSumResult(Graph(nxt - 1, frozenset(edges)), len(glue) - 1)


def zero_sum(g1: Graph, g2: Graph) -> Graph:
    """0-sum sharing vertex 1 of both graphs."""
    return clique_sum(g1, g2, {1: 1}).graph


# ---------------------------------------------------------------------------
# connectivity, blocks, circumference
# ---------------------------------------------------------------------------

def is_connected(g: Graph) -> bool:
    adj = g.adjacency()
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.n


def connected_components(g: Graph) -> list[list[int]]:
    adj = g.adjacency()
    seen: set[int] = set()
    comps = []
    for start in g.vertices():
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def block_vertex_sets(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the biconnected blocks, in original labels.

    Standard lowpoint DFS with an edge stack.  Bridges come out as K2
    blocks; an isolated single-vertex graph yields one singleton block.
    """
    if g.n == 1:
        return [frozenset({1})]
    if not is_connected(g):
        raise GraphError("block decomposition expects a connected graph")
    adj = g.adjacency()
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    stack: list[tuple[int, int]] = []
    out: list[frozenset[int]] = []
    counter = itertools.count(1)

    def dfs(v: int, parent: int):
        disc[v] = low[v] = next(counter)
        for u in sorted(adj[v]):
            if u == parent:
                continue
            if u not in disc:
                stack.append((v, u))
                dfs(u, v)
                low[v] = min(low[v], low[u])
                if low[u] >= disc[v]:
                    block = set()
                    while True:
                        e = stack.pop()
                        block.update(e)
                        if e == (v, u):
                            break
                    out.append(frozenset(block))
            elif disc[u] < disc[v]:
                stack.append((v, u))
                low[v] = min(low[v], disc[u])

    dfs(1, 0)
    return sorted(out, key=lambda s: sorted(s))


def blocks(g: Graph) -> list[Graph]:
    """The 2-connected blocks as graphs, each relabeled 1..|block|."""
    return [induced_subgraph(g, s) for s in block_vertex_sets(g)]


def is_two_connected(g: Graph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    return len(block_vertex_sets(g)) == 1


def circumference(g: Graph) -> int:
    """Length of a longest cycle, 0 if the graph is acyclic.

    Exhaustive path DFS anchored at each cycle's minimum vertex; exact,
    intended for n <= 10.
    """
    adj = g.adjacency()
    best = 0

    def extend(anchor: int, v: int, visited: set[int], length: int):
        nonlocal best
        for u in adj[v]:
            if u == anchor and length >= 3:
                best = max(best, length)
            elif u > anchor and u not in visited:
                visited.add(u)
                extend(anchor, u, visited, length + 1)
                visited.remove(u)

    for anchor in g.vertices():
        extend(anchor, anchor, {anchor}, 1)
    return best


# ---------------------------------------------------------------------------
# isomorphism and canonical forms
# ---------------------------------------------------------------------------

def _pair_index_table(n: int) -> dict[tuple[int, int], int]:
    return {p: k for k, p in enumerate(itertools.combinations(range(1, n + 1), 2))}


@lru_cache(maxsize=None)
def _pair_table_cached(n: int) -> tuple[dict[tuple[int, int], int], list[tuple[int, int]]]:
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    return {p: k for k, p in enumerate(pairs)}, pairs


def graph_to_mask(g: Graph) -> int:
    idx, _ = _pair_table_cached(g.n)
    mask = 0
    for e in g.edges:
        mask |= 1 << idx[e]
    return mask


def mask_to_graph(n: int, mask: int) -> Graph:
    _, pairs = _pair_table_cached(n)
    return Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))


def _refinement_classes(n: int, adj: dict[int, set[int]]) -> list[list[int]]:
    """Vertex classes under iterated degree refinement, canonically ordered.

    Colors start as degrees and refine by sorted neighbor colors until
    stable; class order follows the sorted signature history, so isomorphic
    graphs produce identically ordered class structures.
    """
    color = {v: len(adj[v]) for v in range(1, n + 1)}
    while True:
        sig = {v: (color[v], tuple(sorted(color[u] for u in adj[v]))) for v in color}
        palette = {s: i for i, s in enumerate(sorted(set(sig.values())))}
        new = {v: palette[sig[v]] for v in color}
        if len(set(new.values())) == len(set(color.values())):
            color = new
            break
        color = new
    classes: dict[int, list[int]] = {}
    for v, c in color.items():
        classes.setdefault(c, []).append(v)
    return [sorted(classes[c]) for c in sorted(classes)]


@lru_cache(maxsize=None)
def _canonical_mask(n: int, mask: int) -> int:
    """Minimum adjacency bitmask over relabelings respecting refinement classes.

    Restricting to class-preserving relabelings keeps the search small while
    remaining a complete isomorphism invariant: isomorphic graphs share the
    refinement structure, hence the same candidate set of encodings.
    """
    g = mask_to_graph(n, mask)
    adj = g.adjacency()
    classes = _refinement_classes(n, adj)
    idx, pairs = _pair_table_cached(n)
    edges = list(g.edges)
    best = None
    for perm_parts in itertools.product(*(itertools.permutations(c) for c in classes)):
        new_label = {}
        nxt = 1
        for part in perm_parts:
            for v in part:
                new_label[v] = nxt
                nxt += 1
        enc = 0
        for i, j in edges:
            a, b = new_label[i], new_label[j]
            enc |= 1 << idx[(a, b) if a < b else (b, a)]
        if best is None or enc < best:
            best = enc
    return best if best is not None else 0


def canonical_form(g: Graph) -> tuple[int, int]:
    """(n, canonical adjacency mask); equal iff the graphs are isomorphic."""
    return (g.n, _canonical_mask(g.n, graph_to_mask(g)))


def canonical_key(g: Graph) -> str:
    n, mask = canonical_form(g)
    return f"{n}:{mask:#x}"


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Backtracking vertex matching with degree-profile pruning."""
    if g.n != h.n or g.m != h.m:
        return False
    gadj, hadj = g.adjacency(), h.adjacency()

    def profile(adj, v):
        return (len(adj[v]), tuple(sorted(len(adj[u]) for u in adj[v])))

    gprof = {v: profile(gadj, v) for v in g.vertices()}
    hprof = {v: profile(hadj, v) for v in h.vertices()}
    if sorted(gprof.values()) != sorted(hprof.values()):
        return False

    order = sorted(g.vertices(), key=lambda v: (-gprof[v][0], v))
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def assign(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for w in h.vertices():
            if w in used or hprof[w] != gprof[v]:
                continue
            ok = True
            for v2, w2 in mapping.items():
                if g.has_edge(v, v2) != h.has_edge(w, w2):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if assign(k + 1):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return assign(0)


def recognize_family(g: Graph) -> GraphFamily:
    """Match against K1, K2, K3, stars, K_{2,m}, K_{1,1,m}, and cycles.

    Overlaps resolve toward the earlier tag: the triangle reports K3 (not
    C3 or K_{1,1,1}) and the 4-cycle reports K_{2,2}.  Anything else maps
    to 'other'.
    """
    if g.n == 1:
        return GraphFamily("K1")
    if g.n == 2 and g.m == 1:
        return GraphFamily("K2")
    if g.n == 3 and g.m == 3:
        return GraphFamily("K3")
    if g.n >= 3 and g.m == g.n - 1:
        degs = sorted(len(us) for us in g.adjacency().values())
        if degs == [1] * (g.n - 1) + [g.n - 1]:
            return GraphFamily("K1m", g.n - 1)
    if g.n >= 4 and is_isomorphic(g, complete_multipartite([2, g.n - 2])):
        return GraphFamily("K2m", g.n - 2)
    if g.n >= 4 and is_isomorphic(g, complete_multipartite([1, 1, g.n - 2])):
        return GraphFamily("K11m", g.n - 2)
    if g.n >= 5 and g.m == g.n and is_isomorphic(g, cycle_graph(g.n)):
        return GraphFamily("Cm", g.n)
    return GraphFamily("other")


# ---------------------------------------------------------------------------
# enumeration of isomorphism classes
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _graph_class_masks(n: int) -> tuple[int, ...]:
    """Canonical masks of all graphs on n vertices, one per isomorphism class.

    Built by extending every (n-1)-vertex class with each possible
    neighborhood of a new vertex, then deduplicating canonically; far
    cheaper than sweeping all 2^C(n,2) bitmasks once n grows.
    """
    if n == 1:
        return (0,)
    idx, _ = _pair_table_cached(n)
    found: set[int] = set()
    for base in _graph_class_masks(n - 1):
        g = mask_to_graph(n - 1, base)
        base_edges = list(g.edges)
        for nbhd in range(1 << (n - 1)):
            edges = set(base_edges)
            for v in range(1, n):
                if nbhd >> (v - 1) & 1:
                    edges.add((v, n))
            mask = 0
            for e in edges:
                mask |= 1 << idx[e]
            found.add(_canonical_mask(n, mask))
    return tuple(sorted(found))


def graph_classes(n: int, connected_only: bool = False, two_connected_only: bool = False) -> list[Graph]:
    """One representative per isomorphism class on exactly n vertices."""
    out = []
    for mask in _graph_class_masks(n):
        g = mask_to_graph(n, mask)
        if connected_only and not is_connected(g):
            continue
        if two_connected_only and not is_two_connected(g):
            continue
        out.append(g)
    return out


def connected_graph_classes(max_n: int) -> list[Graph]:
    """Connected class representatives for every n up to max_n, in canonical order."""
    out = []
    for n in range(1, max_n + 1):
        out.extend(graph_classes(n, connected_only=True))
    return out


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def write_graph_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{i} {j}" for i, j in g.edge_list())
    return "\n".join(lines) + "\n"


def read_graph_text(text: str) -> Graph:
    """Parse the 'n m' + edge-lines format, with line numbers on errors."""
    lines = text.splitlines()
    meaningful = [(k + 1, ln.strip()) for k, ln in enumerate(lines) if ln.strip()]
    if not meaningful:
        raise GraphParseError("empty input")
    lineno, header = meaningful[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphParseError(f"header must be 'n m', got {header!r}", lineno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(f"header must be two integers, got {header!r}", lineno)
    if n < 1:
        raise GraphParseError(f"vertex count must be >= 1, got {n}", lineno)
    body = meaningful[1:]
    if len(body) != m:
        raise GraphParseError(f"expected {m} edge lines, found {len(body)}", lineno)
    edges = []
    seen = set()
    for lineno, ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphParseError(f"edge line must be 'i j', got {ln!r}", lineno)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"edge endpoints must be integers, got {ln!r}", lineno)
        if not (1 <= i < j <= n):
            raise GraphParseError(f"edge '{i} {j}' violates 1 <= i < j <= {n}", lineno)
        if (i, j) in seen:
            raise GraphParseError(f"duplicate edge '{i} {j}'", lineno)
        seen.add((i, j))
        edges.append((i, j))
    return graph(n, edges)
