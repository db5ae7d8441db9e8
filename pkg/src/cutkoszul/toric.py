"""The toric ideal of a cut matrix: generators, Groebner bases, certificates.

Everything here works with pure difference binomials: the kernel of the
monomial map sending cut variable q_i to its matrix column is spanned by
differences of monomials with equal column sums, so S-polynomials and
normal forms of binomials stay binomial and all arithmetic reduces to
exponent bookkeeping.

Degree bounds everywhere are honest: a generating set "up to D" or a
Groebner certificate "up to D" says nothing beyond degree D.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cuts import Cut, CutMatrix, SemigroupElement, evaluate_monomial
from .graphs import GraphError


class KernelValidationError(ValueError):
    """A claimed kernel binomial whose two monomials map differently."""


# ---------------------------------------------------------------------------
# monomials and binomials
# ---------------------------------------------------------------------------

class Monomial:
    """Sparse monomial in cut variables: sorted tuple of (index, exponent)."""

    __slots__ = ("pairs", "degree", "_hash")

    def __init__(self, pairs: Iterable[tuple[int, int]]):
        items = sorted((i, e) for i, e in pairs if e != 0)
        if any(e < 0 for _, e in items):
            raise GraphError("monomial exponents must be positive")
        self.pairs = tuple(items)
        self.degree = sum(e for _, e in items)
        self._hash = hash(self.pairs)

    @classmethod
    def unit(cls) -> "Monomial":
        return cls(())

    @classmethod
    def variable(cls, i: int, e: int = 1) -> "Monomial":
        return cls(((i, e),))

    @classmethod
    def from_multiset(cls, indices: Iterable[int]) -> "Monomial":
        counts: dict[int, int] = {}
        for i in indices:
            counts[i] = counts.get(i, 0) + 1
        return cls(counts.items())

    def exponent(self, i: int) -> int:
        for j, e in self.pairs:
            if j == i:
                return e
        return 0

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.pairs)

    def mul(self, other: "Monomial") -> "Monomial":
        counts = dict(self.pairs)
        for i, e in other.pairs:
            counts[i] = counts.get(i, 0) + e
        return Monomial(counts.items())

    def divides(self, other: "Monomial") -> bool:
        it = dict(other.pairs)
        return all(it.get(i, 0) >= e for i, e in self.pairs)

    def divide(self, other: "Monomial") -> "Monomial":
        """self / other; raises if not divisible."""
        counts = dict(self.pairs)
        for i, e in other.pairs:
            have = counts.get(i, 0)
            if have < e:
                raise GraphError(f"{other!r} does not divide {self!r}")
            counts[i] = have - e
        return Monomial(counts.items())

    def lcm(self, other: "Monomial") -> "Monomial":
        counts = dict(self.pairs)
        for i, e in other.pairs:
            counts[i] = max(counts.get(i, 0), e)
        return Monomial(counts.items())

    def coprime(self, other: "Monomial") -> bool:
        mine = {i for i, _ in self.pairs}
        return all(i not in mine for i, _ in other.pairs)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.pairs)

    def to_text(self) -> str:
        if not self.pairs:
            return "1"
        return "*".join(f"q[{i}]" if e == 1 else f"q[{i}]^{e}" for i, e in self.pairs)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.pairs == other.pairs

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial({self.to_text()})"


@dataclass(frozen=True)
class Binomial:
    """lead - tail; which monomial leads depends on the monomial order in play."""

    lead: Monomial
    tail: Monomial

    def __post_init__(self):
        if self.lead == self.tail:
            raise GraphError("binomial must have distinct monomials")

    def unordered(self) -> frozenset[Monomial]:
        return frozenset((self.lead, self.tail))

    def to_text(self) -> str:
        return f"{self.lead.to_text()} - {self.tail.to_text()}"

    def __repr__(self):
        return f"Binomial({self.to_text()})"


def kernel_binomial(matrix: CutMatrix, lead: Monomial, tail: Monomial) -> Binomial:
    """Binomial constructor that verifies both monomials share an image."""
    if evaluate_monomial(matrix, lead) != evaluate_monomial(matrix, tail):
        raise KernelValidationError(
            f"not a kernel element: {lead.to_text()} and {tail.to_text()} map differently"
        )
    return Binomial(lead, tail)


def validate_kernel(matrix: CutMatrix, binomials: Iterable[Binomial]):
    for b in binomials:
        if evaluate_monomial(matrix, b.lead) != evaluate_monomial(matrix, b.tail):
            raise KernelValidationError(f"not a kernel element: {b.to_text()}")


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

class MonomialOrder:
    """Graded reverse lexicographic order for a given variable ranking.

    rank_of[i] is the rank of variable i, rank 0 being the smallest
    variable.  At equal total degree, the monomial with more of the
    smallest differing variable is the smaller one (the defining property
    of reverse lexicographic comparison).
    """

    def __init__(self, rank_of: Sequence[int], description: str = "grevlex"):
        self.rank_of = tuple(rank_of)
        if sorted(self.rank_of) != list(range(len(self.rank_of))):
            raise GraphError("rank_of must be a permutation of 0..N-1")
        self.description = description
        self.by_rank = tuple(sorted(range(len(self.rank_of)), key=lambda i: self.rank_of[i]))

    @property
    def n_variables(self) -> int:
        return len(self.rank_of)

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0, or 1 as a <, =, > b."""
        if a.degree != b.degree:
            return -1 if a.degree < b.degree else 1
        if a.pairs == b.pairs:
            return 0
        diff: dict[int, int] = {}
        for i, e in a.pairs:
            diff[self.rank_of[i]] = e
        for i, e in b.pairs:
            r = self.rank_of[i]
            diff[r] = diff.get(r, 0) - e
        for r in sorted(diff):
            if diff[r] != 0:
                return 1 if diff[r] < 0 else -1
        return 0

    def is_greater(self, a: Monomial, b: Monomial) -> bool:
        return self.compare(a, b) > 0

    def leading(self, a: Monomial, b: Monomial) -> Monomial:
        return a if self.compare(a, b) >= 0 else b

    def sort_key(self, m: Monomial):
        """Tuple key whose natural order agrees with the monomial order."""
        dense = [0] * self.n_variables
        for i, e in m.pairs:
            dense[self.rank_of[i]] = e
        return (m.degree, tuple(-x for x in dense))

    def __repr__(self):
        return f"MonomialOrder({self.description})"


TIE_BREAKS = ("default", "revmask", "plain", "plainrev")


def minsize_order(n: int, tie_break: str = "default") -> MonomialOrder:
    """Ranking by the smaller side of each cut, refined grevlex.

    Cuts rank in ascending order of min(|A|, |B|), so the empty cut is the
    smallest variable.  The default tie-break places the cut separating
    vertex 1 from the rest at the front of the min-size-1 block, making it
    the second smallest variable, and orders the remaining ties by the
    binary encoding of the stored side.  The alternates reshuffle ties
    only; the block structure never changes.
    """
    if n < 2:
        raise GraphError("need n >= 2 for a cut variable order")
    if tie_break not in TIE_BREAKS:
        raise GraphError(f"unknown tie break {tie_break!r}; choose from {TIE_BREAKS}")
    ncuts = 1 << (n - 1)
    full = ncuts - 1  # the side {2..n}, i.e. vertex 1 alone on the other side

    def key(mask: int):
        size = bin(mask).count("1")
        min_side = min(size, n - size)
        if tie_break == "default":
            return (min_side, 0 if mask == full else 1, mask)
        if tie_break == "revmask":
            return (min_side, 0 if mask == full else 1, -mask)
        if tie_break == "plain":
            return (min_side, mask)
        return (min_side, -mask)

    ordered = sorted(range(ncuts), key=key)
    rank_of = [0] * ncuts
    for r, mask in enumerate(ordered):
        rank_of[mask] = r
    return MonomialOrder(rank_of, f"minsize-grevlex(n={n},tie={tie_break})")


def random_grevlex_order(n_variables: int, rng: random.Random) -> MonomialOrder:
    """Grevlex under a uniformly random variable ranking."""
    perm = list(range(n_variables))
    rng.shuffle(perm)
    rank_of = [0] * n_variables
    for r, i in enumerate(perm):
        rank_of[i] = r
    return MonomialOrder(rank_of, "random-grevlex")


# ---------------------------------------------------------------------------
# fibers and Markov generators
# ---------------------------------------------------------------------------

def _vec_add(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def _vec_sub_nonneg(a: tuple[int, ...], b: tuple[int, ...]):
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def fiber(matrix: CutMatrix, w: SemigroupElement) -> list[Monomial]:
    """All monomials with image w, by pruned depth-first search.

    Complete and duplicate-free: columns are scanned in index order and
    every multiplicity compatible with the componentwise remainder is
    branched on; the s-coordinate caps the total degree.
    """
    target = w.vector()
    if any(x < 0 for x in target):
        return []
    cols = matrix.vectors
    ncols = len(cols)
    out: list[Monomial] = []
    chosen: list[tuple[int, int]] = []

    def dfs(i: int, rest: tuple[int, ...]):
        if all(x == 0 for x in rest):
            out.append(Monomial(tuple(chosen)))
            return
        if i == ncols or rest[-1] == 0:
            return
        if any(x > rest[-1] for x in rest[:-1]):
            return  # each column adds at most 1 per edge row
        col = cols[i]
        dfs(i + 1, rest)
        cur = rest
        e = 0
        while True:
            nxt = _vec_sub_nonneg(cur, col)
            if nxt is None:
                break
            e += 1
            chosen.append((i, e))
            dfs(i + 1, nxt)
            chosen.pop()
            cur = nxt

    dfs(0, target)
    return sorted(out, key=lambda m: m.pairs)


def _monomials_by_image(matrix: CutMatrix, d: int) -> dict[tuple[int, ...], list[Monomial]]:
    """Group all degree-d monomials by their column-sum image."""
    cols = matrix.vectors
    fibers: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for combo in itertools.combinations_with_replacement(range(len(cols)), d):
        img = cols[combo[0]]
        for i in combo[1:]:
            img = _vec_add(img, cols[i])
        fibers.setdefault(img, []).append(combo)
    return {
        img: [Monomial.from_multiset(c) for c in combos]
        for img, combos in fibers.items()
    }


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def markov_generators_up_to(matrix: CutMatrix, degree_bound: int) -> list[Binomial]:
    """Minimal generating set of the cut ideal truncated at the degree bound.

    Degree by degree, each fiber of monomials sharing an image becomes a
    graph: two fiber members are adjacent when an already collected
    lower-degree generator rewrites one into the other at some divisible
    position.  Fibers that fail to be connected contribute one new
    binomial per missing connection, which is exactly the count a minimal
    generating set needs in that degree.
    """
    if degree_bound < 2:
        raise GraphError("degree bound must be >= 2")
    order = minsize_order(matrix.graph.n) if matrix.graph.n >= 2 else None
    collected: list[Binomial] = []
    for d in range(2, degree_bound + 1):
        fibers = _monomials_by_image(matrix, d)
        for img in sorted(fibers):
            members = fibers[img]
            if len(members) < 2:
                continue
            index_of = {m: k for k, m in enumerate(members)}
            uf = _UnionFind(len(members))
            for m in members:
                for g in collected:
                    for src, dst in ((g.lead, g.tail), (g.tail, g.lead)):
                        if src.divides(m):
                            moved = m.divide(src).mul(dst)
                            uf.union(index_of[m], index_of[moved])
            components: dict[int, list[Monomial]] = {}
            for m, k in index_of.items():
                components.setdefault(uf.find(k), []).append(m)
            if len(components) == 1:
                continue
            reps = sorted(
                (min(ms, key=lambda m: m.pairs) for ms in components.values()),
                key=lambda m: m.pairs,
            )
            base = reps[0]
            for other in reps[1:]:
                lead, tail = (other, base)
                if order is not None and not order.is_greater(lead, tail):
                    lead, tail = tail, lead
                collected.append(kernel_binomial(matrix, lead, tail))
    return collected


# ---------------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------------

def _normal_form(m: Monomial, basis: list[Binomial]) -> Monomial:
    """Rewrite m by the first applicable lead -> tail rule until stuck.

    Terminates because each rewrite strictly lowers the monomial in the
    order that oriented the basis.
    """
    changed = True
    while changed:
        changed = False
        for g in basis:
            if g.lead.divides(m):
                m = m.divide(g.lead).mul(g.tail)
                changed = True
                break
    return m


def _orient(b: Binomial, order: MonomialOrder) -> Binomial:
    return b if order.is_greater(b.lead, b.tail) else Binomial(b.tail, b.lead)


def reduce_binomial(b: Binomial, basis: list[Binomial]) -> Binomial | None:
    """Normal form of a binomial modulo an oriented basis; None if it dies."""
    lead = _normal_form(b.lead, basis)
    tail = _normal_form(b.tail, basis)
    if lead == tail:
        return None
    return Binomial(lead, tail)


def buchberger(
    gens: Iterable[Binomial],
    order: MonomialOrder,
    matrix: CutMatrix | None = None,
) -> list[Binomial]:
    """Reduced Groebner basis of the binomial ideal spanned by gens.

    Normal selection strategy: S-pairs are processed in ascending lcm
    degree (ties by insertion index), with the coprime-lead pairs skipped.
    The output is reduced (minimal leads, fully reduced tails, leads
    first) and sorted by the order, so equal inputs give identical
    output lists.
    """
    if matrix is not None:
        validate_kernel(matrix, gens)
    basis: list[Binomial] = []
    for b in gens:
        ob = _orient(b, order)
        if ob not in basis:
            basis.append(ob)

    pair_heap: list[tuple[int, int, int]] = []

    def push_pairs(upto: int):
        g = basis[upto]
        for k in range(upto):
            if not basis[k].lead.coprime(g.lead):
                lcm_deg = basis[k].lead.lcm(g.lead).degree
                heapq.heappush(pair_heap, (lcm_deg, k, upto))

    for k in range(len(basis)):
        push_pairs(k)

    while pair_heap:
        _, i, j = heapq.heappop(pair_heap)
        f, g = basis[i], basis[j]
        lcm = f.lead.lcm(g.lead)
        a = lcm.divide(f.lead).mul(f.tail)
        b = lcm.divide(g.lead).mul(g.tail)
        if a == b:
            continue
        reduced = reduce_binomial(Binomial(a, b), basis)
        if reduced is None:
            continue
        basis.append(_orient(reduced, order))
        push_pairs(len(basis) - 1)

    return _autoreduce(basis, order)


def _autoreduce(basis: list[Binomial], order: MonomialOrder) -> list[Binomial]:
    minimal: list[Binomial] = []
    for k, g in enumerate(basis):
        redundant = False
        for j, h in enumerate(basis):
            if j == k or not h.lead.divides(g.lead):
                continue
            if h.lead.pairs == g.lead.pairs and j > k:
                continue  # keep the earliest among equal leads
            redundant = True
            break
        if not redundant:
            minimal.append(g)
    reduced = []
    for g in minimal:
        tail = _normal_form(g.tail, [h for h in minimal if h is not g])
        if tail != g.lead:
            reduced.append(Binomial(g.lead, tail))
    return sorted(reduced, key=lambda b: (order.sort_key(b.lead), order.sort_key(b.tail)))


def is_autoreduced(basis: list[Binomial]) -> bool:
    """No lead divides any other element's monomials (and leads are distinct)."""
    leads = [g.lead for g in basis]
    if len({m.pairs for m in leads}) != len(leads):
        return False
    for g in basis:
        for h in basis:
            if h is g:
                continue
            if h.lead.divides(g.lead) or h.lead.divides(g.tail):
                return False
    return True


# ---------------------------------------------------------------------------
# closed-form families
# ---------------------------------------------------------------------------

def star_groebner_family(m: int) -> list[Binomial]:
    """Exchange binomials presenting the cut ideal of the star with m leaves.

    The star has center 1 and leaves 2..m+1; a cut is any leaf subset S,
    and its column is the indicator of S.  For incomparable leaf sets S, T
    the binomial q_S q_T - q_{S n T} q_{S u T} lies in the kernel, and
    these form the reduced Groebner basis under the min-size grevlex
    order, with the incomparable product leading.
    """
    if m < 1:
        raise GraphError("star needs m >= 1 leaves")
    out = []
    subsets = list(range(1 << m))
    for s, t in itertools.combinations(subsets, 2):
        if s & t == s or s & t == t:
            continue  # comparable
        lead = Monomial.from_multiset((s, t))
        tail = Monomial.from_multiset((s & t, s | t))
        out.append(Binomial(lead, tail))
    return out


def _split_cut_index(n: int, leaf_subset: int) -> int:
    """Cut with vertex 1 on one side, vertex 2 and V2-complement on the other.

    leaf_subset encodes the V2 = {3..n} vertices lying with vertex 1; the
    stored side is the complement {2} u (V2 minus the subset).
    """
    members = {2}
    for k in range(n - 2):
        if not leaf_subset >> k & 1:
            members.add(k + 3)
    return sum(1 << (v - 2) for v in members)


def _sameside_cut_index(n: int, leaf_subset: int) -> int:
    """Cut with {1,2} together; leaf_subset are the V2 vertices joining them."""
    members = set()
    for k in range(n - 2):
        if not leaf_subset >> k & 1:
            members.add(k + 3)
    return sum(1 << (v - 2) for v in members)


def bipartite_groebner_family(m: int) -> list[Binomial]:
    """Groebner system for the cut ideal of K_{2,m} (parts {1,2} and {3..m+2}).

    Three kinds of kernel binomials, leading monomial written first:

    (i)   q_X q_Y - q_E q_F, where X splits 1 from 2, Y is X with every
          part-two vertex flipped, E is the empty cut and F the cut
          isolating {1,2};
    (ii)  the exchange binomials on incomparable pairs of splitting cuts;
    (iii) the exchange binomials on incomparable pairs of non-splitting
          cuts.

    Together these form a (not auto-reduced) Groebner basis under the
    min-size grevlex order.
    """
    if m < 2:
        raise GraphError("complete bipartite family needs m >= 2")
    n = m + 2
    empty_idx = 0
    both_idx = _sameside_cut_index(n, 0)  # {1,2} vs the rest
    out: list[Binomial] = []
    full = (1 << m) - 1
    # (i): each splitting cut paired with its part-two flip
    done = set()
    for s in range(1 << m):
        t = full ^ s
        if frozenset((s, t)) in done:
            continue
        done.add(frozenset((s, t)))
        lead = Monomial.from_multiset((_split_cut_index(n, s), _split_cut_index(n, t)))
        tail = Monomial.from_multiset((empty_idx, both_idx))
        out.append(Binomial(lead, tail))
    # (ii) and (iii): sortedness exchanges within each cut shape
    for encode in (_split_cut_index, _sameside_cut_index):
        for s, t in itertools.combinations(range(1 << m), 2):
            if s & t == s or s & t == t:
                continue
            lead = Monomial.from_multiset((encode(n, s), encode(n, t)))
            tail = Monomial.from_multiset((encode(n, s & t), encode(n, s | t)))
            out.append(Binomial(lead, tail))
    return out


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------

def _distinct_images(matrix: CutMatrix, d: int) -> int:
    cols = matrix.vectors
    seen = set()
    for combo in itertools.combinations_with_replacement(range(len(cols)), d):
        img = cols[combo[0]]
        for i in combo[1:]:
            img = _vec_add(img, cols[i])
        seen.add(img)
    return len(seen)


def hilbert_check(candidate: Sequence[Binomial], matrix: CutMatrix, degree_bound: int) -> bool:
    """Compare standard monomial counts against semigroup element counts.

    For each degree d <= bound, the number of monomials not divisible by
    any candidate lead must equal the number of distinct degree-d column
    sums (the dimension of the toric ring in that degree).  Equality for
    all checked degrees certifies the candidate leads generate the full
    initial ideal up to the bound; a surplus of standard monomials means
    some kernel element's lead is missing.
    """
    if degree_bound < 1:
        raise GraphError("degree bound must be >= 1")
    nvars = matrix.n_columns
    leads = [g.lead for g in candidate]
    for d in range(1, degree_bound + 1):
        standard = 0
        for combo in itertools.combinations_with_replacement(range(nvars), d):
            mono = Monomial.from_multiset(combo)
            if not any(l.divides(mono) for l in leads):
                standard += 1
        if standard != _distinct_images(matrix, d):
            return False
    return True


def is_groebner_basis(
    candidate: Sequence[Binomial],
    order: MonomialOrder,
    matrix: CutMatrix,
    degree_bound: int,
) -> bool:
    """Certify a candidate as a Groebner basis of the cut ideal up to a bound.

    Two independent halves: every S-pair must reduce to zero (so the
    candidate is a Groebner basis of the ideal it generates), and the
    Hilbert comparison must pass (so nothing of the cut ideal is missing
    up to the bound).  Input binomials are re-oriented by the order; a
    non-kernel input raises KernelValidationError rather than returning
    False.
    """
    validate_kernel(matrix, candidate)
    basis = [_orient(b, order) for b in candidate]
    for f, g in itertools.combinations(basis, 2):
        if f.lead.coprime(g.lead):
            continue
        lcm = f.lead.lcm(g.lead)
        a = lcm.divide(f.lead).mul(f.tail)
        b = lcm.divide(g.lead).mul(g.tail)
        if a == b:
            continue
        if reduce_binomial(Binomial(a, b), basis) is not None:
            return False
    return hilbert_check(basis, matrix, degree_bound)


# ---------------------------------------------------------------------------
# squarefree initial ideal probe
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CompressedProbeResult:
    verdict: str  # "witness-order-found" or "consistent-with-compressed"
    trials_run: int
    witness_order: MonomialOrder | None = None
    witness_lead: Monomial | None = None

    @property
    def witness_found(self) -> bool:
        return self.verdict == "witness-order-found"


def compressed_probe(
    matrix: CutMatrix,
    trials: int = 50,
    seed: int = 0,
    degree_bound: int = 4,
) -> CompressedProbeResult:
    """Search random grevlex orders for a non-squarefree initial ideal.

    Each trial computes the reduced Groebner basis of the cut ideal under
    a freshly sampled variable ranking and inspects the leads.  A
    non-squarefree minimal lead is conclusive (the ring is not
    compressed); exhausting the trials is only consistency, never proof.
    Generators are taken up to the degree bound, which is exact whenever
    the ideal is generated in at most that degree.
    """
    if trials < 1:
        raise GraphError("need at least one trial")
    rng = random.Random(seed)
    gens = markov_generators_up_to(matrix, degree_bound)
    if not gens:
        return CompressedProbeResult("consistent-with-compressed", trials)
    for t in range(trials):
        order = random_grevlex_order(matrix.n_columns, rng)
        gb = buchberger(gens, order)
        for g in gb:
            if not g.lead.is_squarefree():
                return CompressedProbeResult("witness-order-found", t + 1, order, g.lead)
    return CompressedProbeResult("consistent-with-compressed", trials)


# ---------------------------------------------------------------------------
# text emission
# ---------------------------------------------------------------------------

def groebner_text(
    basis: Sequence[Binomial],
    matrix: CutMatrix,
    order: MonomialOrder,
    degree_bound: int | None = None,
) -> str:
    """One binomial per line, lead first, with a commented header."""
    g = matrix.graph
    edges = ",".join(f"{i}-{j}" for i, j in g.edge_list())
    lines = [
        f"# graph: n={g.n} m={g.m} edges={edges}",
        f"# cuts: {matrix.n_columns} (variables q[0]..q[{matrix.n_columns - 1}], index = side encoding)",
        f"# order: {order.description}",
        f"# degree-bound: {degree_bound if degree_bound is not None else 'none'}",
        f"# basis-size: {len(basis)}",
    ]
    lines.extend(b.to_text() for b in basis)
    return "\n".join(lines) + "\n"
