"""Degree-bounded strong Koszulness checks on the cut semigroup.

The toric ring of a cut matrix is strongly Koszul iff for every pair of
distinct cut variables u_i, u_j the ideal intersection (u_i) n (u_j) is
generated in degree 2.  On the semigroup side, a degree-d member of the
intersection is a semigroup element w with both w - column(i) and
w - column(j) in the semigroup; the pair passes at degree d when every
such w splits off some degree-2 intersection member v with w - v still
in the semigroup.  All verdicts here are bounded: "pass" means no failure
up to the stated degree, never a proof for all degrees.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cuts import CutMatrix, SemigroupElement
from .graphs import GraphError


@dataclass(frozen=True)
class KoszulWitness:
    """A degree-d intersection member with no degree-2 splitting."""

    pair: tuple[int, int]
    degree: int
    element: SemigroupElement


@dataclass(frozen=True)
class KoszulVerdict:
    status: str  # "pass" or "fail"
    bound: int
    witness: KoszulWitness | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def label(self) -> str:
        if self.passed:
            return f"pass-up-to-{self.bound}"
        w = self.witness
        return f"fail:pair={w.pair},degree={w.degree}"


def _vec_sub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...] | None:
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def semigroup_membership(matrix: CutMatrix, w: SemigroupElement) -> bool:
    """Exact membership by depth-first search over column multiplicities.

    The s-degree fixes the combination length, so the search runs over
    columns in index order, bounding each multiplicity componentwise.
    """
    target = w.vector()
    if any(x < 0 for x in target):
        return False
    cols = matrix.vectors
    ncols = len(cols)

    def feasible(rest: tuple[int, ...]) -> bool:
        d = rest[-1]
        return all(x <= d for x in rest[:-1])

    def dfs(i: int, rest: tuple[int, ...]) -> bool:
        if all(x == 0 for x in rest):
            return True
        if i == ncols or rest[-1] == 0 or not feasible(rest):
            return False
        col = cols[i]
        cur = rest
        # exponent 0 first, then climb; any order is exhaustive
        if dfs(i + 1, cur):
            return True
        while True:
            nxt = _vec_sub(cur, col)
            if nxt is None:
                return False
            if dfs(i + 1, nxt):
                return True
            cur = nxt

    return dfs(0, target)


class _DegreeTable:
    """Per-degree tables of all semigroup elements, built lazily.

    Degree d elements are the distinct sums of d columns with repetition;
    itertools handles the multiset enumeration, a set the deduplication.
    """

    def __init__(self, matrix: CutMatrix):
        self.matrix = matrix
        self._levels: dict[int, frozenset[tuple[int, ...]]] = {
            0: frozenset({(0,) * matrix.n_rows})
        }

    def level(self, d: int) -> frozenset[tuple[int, ...]]:
        if d not in self._levels:
            cols = self.matrix.vectors
            prev = self.level(d - 1)
            found = set()
            for base in prev:
                for col in cols:
                    found.add(tuple(x + y for x, y in zip(base, col)))
            self._levels[d] = frozenset(found)
        return self._levels[d]

    def contains(self, vec: tuple[int, ...]) -> bool:
        d = vec[-1]
        if d < 0 or any(x < 0 for x in vec[:-1]):
            return False
        return vec in self.level(d)


def _intersection_level(table: _DegreeTable, i: int, j: int, d: int) -> list[tuple[int, ...]]:
    matrix = table.matrix
    ci, cj = matrix.vectors[i], matrix.vectors[j]
    lower = table.level(d - 1)
    out = set()
    for z in lower:
        w = tuple(x + y for x, y in zip(z, ci))
        rem = _vec_sub(w, cj)
        if rem is not None and rem in lower:
            out.add(w)
    return sorted(out)


def intersection_elements(matrix: CutMatrix, i: int, j: int, d: int) -> list[SemigroupElement]:
    """Degree-d semigroup elements divisible by both column(i) and column(j)."""
    _check_pair(matrix, i, j)
    if d < 1:
        raise GraphError("intersection degree must be >= 1")
    table = _DegreeTable(matrix)
    return [SemigroupElement.from_vector(v) for v in _intersection_level(table, i, j, d)]


def _check_pair(matrix: CutMatrix, i: int, j: int):
    nc = matrix.n_columns
    if not (0 <= i < nc and 0 <= j < nc):
        raise GraphError(f"column index out of range for {nc} columns")
    if i == j:
        raise GraphError("intersection pair needs two distinct columns")


def _pair_verdict(table: _DegreeTable, i: int, j: int, bound: int) -> KoszulVerdict:
    level2 = _intersection_level(table, i, j, 2)
    for d in range(3, bound + 1):
        for w in _intersection_level(table, i, j, d):
            ok = False
            for v in level2:
                rest = _vec_sub(w, v)
                if rest is not None and table.contains(rest):
                    ok = True
                    break
            if not ok:
                witness = KoszulWitness((i, j), d, SemigroupElement.from_vector(w))
                return KoszulVerdict("fail", bound, witness)
    return KoszulVerdict("pass", bound)


def is_pair_degree2_generated(matrix: CutMatrix, i: int, j: int, bound: int = 4) -> KoszulVerdict:
    """Check one variable pair up to the degree bound (default 4).

    Witnesses are the first failing element in sorted vector order, so
    reruns are reproducible.
    """
    _check_pair(matrix, i, j)
    if bound < 3:
        raise GraphError("degree bound must be >= 3 to say anything")
    return _pair_verdict(_DegreeTable(matrix), i, j, bound)


def is_strongly_koszul_up_to(matrix: CutMatrix, bound: int = 4) -> KoszulVerdict:
    """All pairs in lexicographic order, stopping at the first failure."""
    if bound < 3:
        raise GraphError("degree bound must be >= 3 to say anything")
    table = _DegreeTable(matrix)
    for i, j in itertools.combinations(range(matrix.n_columns), 2):
        verdict = _pair_verdict(table, i, j, bound)
        if not verdict.passed:
            return verdict
    return KoszulVerdict("pass", bound)


def failing_pairs(matrix: CutMatrix, bound: int = 4) -> list[KoszulVerdict]:
    """Exhaustive variant: one fail verdict per failing pair."""
    if bound < 3:
        raise GraphError("degree bound must be >= 3 to say anything")
    table = _DegreeTable(matrix)
    out = []
    for i, j in itertools.combinations(range(matrix.n_columns), 2):
        verdict = _pair_verdict(table, i, j, bound)
        if not verdict.passed:
            out.append(verdict)
    return out
