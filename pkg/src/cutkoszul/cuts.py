"""Cuts of a graph, cut vectors, and the homogenized cut matrix.

A cut of a graph on {1..n} is an unordered bipartition A|B of the vertex
set; we store the side not containing vertex 1, so the 2^(n-1) cuts are
indexed 0 .. 2^(n-1)-1 by the binary encoding of that side (bit k set
means vertex k+2 belongs to it).  The cut vector marks which edges cross
the bipartition; appending a constant 1 ("s" coordinate) homogenizes the
columns, so the s-degree of any nonnegative column combination equals the
number of columns used, counted with multiplicity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .graphs import Graph, GraphError


@dataclass(frozen=True)
class Cut:
    """A bipartition of {1..n}, stored by the side avoiding vertex 1."""

    n: int
    members: frozenset[int]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("cut needs n >= 1")
        if 1 in self.members:
            raise GraphError("canonical cut side must not contain vertex 1")
        if not self.members <= set(range(2, self.n + 1)):
            raise GraphError(f"cut side {sorted(self.members)} outside 2..{self.n}")

    @classmethod
    def from_sides(cls, n: int, a: Iterable[int], b: Iterable[int]) -> "Cut":
        a, b = set(a), set(b)
        if a & b or (a | b) != set(range(1, n + 1)):
            raise GraphError("cut sides must partition 1..n")
        return cls(n, frozenset(b if 1 in a else a))

    @classmethod
    def from_index(cls, n: int, index: int) -> "Cut":
        if not 0 <= index < (1 << (n - 1)):
            raise GraphError(f"cut index {index} out of range for n={n}")
        return cls(n, frozenset(k + 2 for k in range(n - 1) if index >> k & 1))

    @property
    def index(self) -> int:
        return sum(1 << (v - 2) for v in self.members)

    def sides(self) -> tuple[frozenset[int], frozenset[int]]:
        comp = frozenset(set(range(1, self.n + 1)) - self.members)
        return self.members, comp

    def label(self) -> str:
        a, b = self.sides()
        fmt = lambda s: "{" + ",".join(map(str, sorted(s))) + "}"
        return f"{fmt(a)}|{fmt(b)}"


def enumerate_cuts(n: int) -> list[Cut]:
    """All 2^(n-1) cuts in canonical index order (index 0 is the empty cut)."""
    return [Cut.from_index(n, k) for k in range(1 << (n - 1))]


@dataclass(frozen=True)
class CutVector:
    """0/1 incidence of edges crossing a cut, plus the homogenizing s = 1."""

    edge_coords: tuple[int, ...]
    s_coord: int = 1


def cut_vector(g: Graph, cut: Cut) -> CutVector:
    """Edge e crosses the cut iff exactly one endpoint lies in the stored side."""
    if cut.n != g.n:
        raise GraphError(f"cut on {cut.n} vertices does not match graph on {g.n}")
    side = cut.members
    coords = tuple(1 if (i in side) != (j in side) else 0 for i, j in g.edge_list())
    return CutVector(coords)


class CutMatrix:
    """Columns are the homogenized cut vectors, in canonical cut order.

    Rows follow the graph's sorted edge order, with the all-ones s-row
    last.  `vectors` holds each column as a raw integer tuple (edge
    coordinates then s) for the combinatorial search routines.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self.cuts = enumerate_cuts(g.n)
        self.edge_order = g.edge_list()
        self.columns = tuple(cut_vector(g, c) for c in self.cuts)
        self.vectors = tuple(cv.edge_coords + (cv.s_coord,) for cv in self.columns)

    @property
    def n_columns(self) -> int:
        return len(self.columns)

    @property
    def n_rows(self) -> int:
        return len(self.edge_order) + 1

    def column(self, i: int) -> tuple[int, ...]:
        return self.vectors[i]

    def to_text(self) -> str:
        rows = []
        for r in range(self.n_rows):
            rows.append(" ".join(str(v[r]) for v in self.vectors))
        return "\n".join(rows) + "\n"

    def __repr__(self):
        return f"CutMatrix({self.graph!r}, {self.n_rows}x{self.n_columns})"


def cut_matrix(g: Graph) -> CutMatrix:
    return CutMatrix(g)


@dataclass(frozen=True)
class SemigroupElement:
    """A nonnegative integer combination of cut matrix columns."""

    edge_exponents: tuple[int, ...]
    s_degree: int

    def vector(self) -> tuple[int, ...]:
        return self.edge_exponents + (self.s_degree,)

    @classmethod
    def from_vector(cls, vec: tuple[int, ...]) -> "SemigroupElement":
        return cls(vec[:-1], vec[-1])


def evaluate_monomial(matrix: CutMatrix, exponents) -> SemigroupElement:
    """Image of a monomial in cut variables: the weighted column sum.

    Accepts a Monomial (anything with a `.pairs` of (index, exponent)),
    a mapping, or an iterable of pairs.
    """
    if hasattr(exponents, "pairs"):
        pairs = exponents.pairs
    elif isinstance(exponents, Mapping):
        pairs = exponents.items()
    else:
        pairs = exponents
    acc = [0] * matrix.n_rows
    for idx, exp in pairs:
        if exp < 0:
            raise GraphError("monomial exponents must be nonnegative")
        col = matrix.vectors[idx]
        for r in range(matrix.n_rows):
            acc[r] += exp * col[r]
    vec = tuple(acc)
    return SemigroupElement(vec[:-1], vec[-1])


def zero_sum_segre_check(g1: Graph, g2: Graph) -> bool:
    """Check the cut matrix of a 0-sum is the Segre-style column pairing.

    Forms the 0-sum of g1 and g2 sharing vertex 1, then verifies its column
    multiset equals, after grouping rows by originating graph, all
    concatenations of one g1-column and one g2-column under a single s-row.
    """
    from collections import Counter

    from .graphs import zero_sum

    gsum = zero_sum(g1, g2)
    m = cut_matrix(gsum)
    # row positions of g1-edges and g2-edges inside the summed graph
    g1_edges = set(g1.edges)
    relabel2 = {1: 1}
    for v in range(2, g2.n + 1):
        relabel2[v] = g1.n + v - 1
    g2_edges = {tuple(sorted((relabel2[i], relabel2[j]))) for i, j in g2.edges}
    pos1, pos2 = [], []
    for r, e in enumerate(m.edge_order):
        if e in g1_edges:
            pos1.append(r)
        elif e in g2_edges:
            pos2.append(r)
        else:
            return False
    if len(pos1) != g1.m or len(pos2) != g2.m:
        return False

    def split(vec):
        return (
            tuple(vec[r] for r in pos1),
            tuple(vec[r] for r in pos2),
        )

    actual = Counter(split(v) for v in m.vectors)
    m1, m2 = cut_matrix(g1), cut_matrix(g2)
    expected = Counter(
        (v1[:-1], v2[:-1])
        for v1, v2 in itertools.product(m1.vectors, m2.vectors)
    )
    return actual == expected
