"""Classification of cut algebras by minor criteria, with computational cross-checks.

`classify` is pure: it fills every theorem-derived field (strong Koszulness,
quadratic generation, compressedness, quadratic-GB existence) from minor
tests and induced-cycle lengths alone.  `cross_validate` then runs the
direct computations — pair-intersection checks, Markov generators, random
order probes, closed-form family certification — and records, per check,
whether the outcome supports the theorem verdict, merely fails to contradict
it within the bound, or conclusively contradicts it.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field, replace

from .cuts import cut_matrix
from .graphs import (
    Graph,
    canonical_key,
    complete_graph,
    induced_subgraph,
    is_connected,
    make_family,
    recognize_family,
)
from .koszul import failing_pairs, is_strongly_koszul_up_to
from .minors import has_c5_minor, has_k4_minor, has_minor
from .toric import (
    bipartite_groebner_family,
    compressed_probe,
    is_groebner_basis,
    markov_generators_up_to,
    minsize_order,
    star_groebner_family,
)


class ResourceGuardError(RuntimeError):
    """A computation was refused because the instance is too large.

    Cut matrices have 2^(n-1) columns, so everything downstream of them is
    exponential in the vertex count; the guard keeps accidental n=12 runs
    from appearing to hang.
    """


CHECK_NAMES = ("koszul", "markov", "compressed", "gb")

# per-check agreement labels, from strongest to weakest:
#   supported    - conclusive computation matching the theorem verdict
#   consistent   - bounded computation found nothing against a true verdict
#   unconfirmed  - bounded computation found nothing for a false verdict
#   disagree     - conclusive computation contradicting the theorem verdict
AGREEMENT_LABELS = ("supported", "consistent", "unconfirmed", "disagree")


def _bounded_agreement(theorem: bool, found_failure: bool) -> str:
    """Agreement label when only failures are conclusive.

    A found failure settles the question (supporting a false verdict,
    contradicting a true one); absence of one up to a bound settles
    nothing, so it can only be consistent-with-true or unconfirmed-false.
    """
    if found_failure:
        return "supported" if not theorem else "disagree"
    return "consistent" if theorem else "unconfirmed"


def induced_cycles(g: Graph) -> frozenset[int]:
    """Lengths of chordless cycles, by exhaustive vertex-subset search.

    A vertex subset induces a cycle exactly when the induced subgraph is
    connected and 2-regular; chordlessness is automatic for induced
    subgraphs.  One witness per length suffices.
    """
    lengths: set[int] = set()
    verts = sorted(g.vertices())
    for k in range(3, g.n + 1):
        for subset in itertools.combinations(verts, k):
            sub = induced_subgraph(g, subset)
            if sub.m != k:
                continue
            if all(len(us) == 2 for us in sub.adjacency().values()) and is_connected(sub):
                lengths.add(k)
                break
    return frozenset(lengths)


@dataclass(frozen=True, eq=True)
class CheckResult:
    """One computational check: what ran, what it concluded, how it relates
    to the theorem prediction."""

    name: str
    verdict: str
    bound: int
    agreement: str
    detail: dict = field(default_factory=dict, compare=False)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.verdict,
            "bound": self.bound,
            "agreement": self.agreement,
            "detail": self.detail,
        }


CSV_HEADER = (
    "n",
    "m",
    "canonical",
    "k4_minor",
    "c5_minor",
    "strongly_koszul_theorem",
    "quadratic_generation_theorem",
    "compressed_theorem",
    "quadratic_gb_theorem",
    "agreement",
)


def _tri(value: bool | None) -> str:
    if value is None:
        return "unknown"
    return "true" if value else "false"


@dataclass(frozen=True)
class ClassificationReport:
    graph: Graph
    descriptor: str
    k4_minor: bool
    c5_minor: bool
    k5_minor: bool
    induced_cycle_lengths: frozenset[int]
    strongly_koszul_theorem: bool
    quadratic_generation_theorem: bool
    compressed_theorem: bool
    quadratic_gb_theorem: bool | None
    computational_checks: tuple[CheckResult, ...] = ()

    @property
    def agreement(self) -> bool:
        """No check conclusively contradicts a theorem field."""
        return all(c.agreement != "disagree" for c in self.computational_checks)

    def to_json_dict(self) -> dict:
        return {
            "descriptor": self.descriptor,
            "n": self.graph.n,
            "m": self.graph.m,
            "edges": [list(e) for e in self.graph.edge_list()],
            "k4_minor": self.k4_minor,
            "c5_minor": self.c5_minor,
            "k5_minor": self.k5_minor,
            "induced_cycle_lengths": sorted(self.induced_cycle_lengths),
            "strongly_koszul_theorem": self.strongly_koszul_theorem,
            "quadratic_generation_theorem": self.quadratic_generation_theorem,
            "compressed_theorem": self.compressed_theorem,
            "quadratic_gb_theorem": self.quadratic_gb_theorem,
            "computational_checks": [c.to_json_dict() for c in self.computational_checks],
            "agreement": self.agreement,
        }

    def csv_row(self) -> tuple[str, ...]:
        return (
            str(self.graph.n),
            str(self.graph.m),
            canonical_key(self.graph),
            _tri(self.k4_minor),
            _tri(self.c5_minor),
            _tri(self.strongly_koszul_theorem),
            _tri(self.quadratic_generation_theorem),
            _tri(self.compressed_theorem),
            _tri(self.quadratic_gb_theorem),
            _tri(self.agreement),
        )


def classify(g: Graph, descriptor: str | None = None) -> ClassificationReport:
    """Fill every theorem-derived field; computational checks stay empty.

    Works verbatim on disconnected input: minor containment and induced
    cycles both distribute over connected components, so each field is
    automatically the conjunction (or union) over components.
    """
    k4 = has_k4_minor(g)
    c5 = has_c5_minor(g)
    k5 = has_minor(g, complete_graph(5))
    cycles = induced_cycles(g)
    strongly_koszul = not (k4 or c5)
    if descriptor is None:
        fam = recognize_family(g)
        descriptor = fam.label() if fam.tag != "other" else f"graph(n={g.n},m={g.m})"
    return ClassificationReport(
        graph=g,
        descriptor=descriptor,
        k4_minor=k4,
        c5_minor=c5,
        k5_minor=k5,
        induced_cycle_lengths=cycles,
        strongly_koszul_theorem=strongly_koszul,
        quadratic_generation_theorem=not k4,
        compressed_theorem=(not k5) and cycles <= {3, 4},
        # one-directional: strong Koszulness forces a quadratic GB, but its
        # absence decides nothing, hence never False
        quadratic_gb_theorem=True if strongly_koszul else None,
    )


def _check_koszul(
    report: ClassificationReport, matrix, degree: int, exhaustive: bool = False
) -> CheckResult:
    verdict = is_strongly_koszul_up_to(matrix, degree)
    detail: dict = {}
    if not verdict.passed:
        w = verdict.witness
        i, j = w.pair
        detail = {
            "pair": [i, j],
            "cuts": [matrix.cuts[i].label(), matrix.cuts[j].label()],
            "degree": w.degree,
            "vector": list(w.element.vector()),
        }
    if exhaustive:
        detail["failing_pairs"] = [list(v.witness.pair) for v in failing_pairs(matrix, degree)]
    return CheckResult(
        name="koszul",
        verdict=verdict.label(),
        bound=degree,
        agreement=_bounded_agreement(report.strongly_koszul_theorem, not verdict.passed),
        detail=detail,
    )


def _check_markov(report: ClassificationReport, matrix, degree: int) -> CheckResult:
    gens = markov_generators_up_to(matrix, degree)
    by_degree = Counter(b.lead.degree for b in gens)
    max_degree = max(by_degree, default=0)
    quadratic = max_degree <= 2
    verdict = (
        f"quadratic-up-to-{degree}" if quadratic else f"degree-{max_degree}-generator-found"
    )
    return CheckResult(
        name="markov",
        verdict=verdict,
        bound=degree,
        agreement=_bounded_agreement(report.quadratic_generation_theorem, not quadratic),
        detail={"generator_degrees": {str(d): by_degree[d] for d in sorted(by_degree)}},
    )


def _check_compressed(
    report: ClassificationReport, matrix, degree: int, trials: int, seed: int
) -> CheckResult:
    probe = compressed_probe(matrix, trials=trials, seed=seed, degree_bound=degree)
    detail: dict = {"degree_bound": degree, "seed": seed}
    if probe.witness_found:
        detail["witness_lead"] = probe.witness_lead.to_text()
    return CheckResult(
        name="compressed",
        verdict=f"{probe.verdict}-after-{probe.trials_run}-trials",
        bound=trials,
        agreement=_bounded_agreement(report.compressed_theorem, probe.witness_found),
        detail=detail,
    )


def _check_gb_family(report: ClassificationReport, matrix, degree: int) -> CheckResult | None:
    fam = recognize_family(report.graph)
    if fam.tag == "K1m":
        family = star_groebner_family(fam.m)
    elif fam.tag == "K2m":
        family = bipartite_groebner_family(fam.m)
    else:
        return None
    # the closed-form binomials are written in the family's standard
    # labeling; an isomorphic input has the same cut ideal only up to a
    # variable permutation, so certify against the standard labeling and
    # say so in the detail
    standard = make_family(fam)
    std_matrix = matrix if report.graph == standard else cut_matrix(standard)
    certified = is_groebner_basis(family, minsize_order(standard.n), std_matrix, degree)
    # certification is conclusive both ways: S-pair reduction plus the
    # Hilbert comparison either passes or exhibits a concrete defect
    return CheckResult(
        name="gb",
        verdict="family-certified" if certified else "family-rejected",
        bound=degree,
        agreement="supported" if certified else "disagree",
        detail={"family": fam.label(), "size": len(family), "labeling": "standard"},
    )


def cross_validate(
    g: Graph,
    degree: int = 4,
    trials: int = 50,
    seed: int = 0,
    checks: tuple[str, ...] = CHECK_NAMES,
    override_guard: bool = False,
    exhaustive: bool = False,
) -> ClassificationReport:
    """Run the requested computational checks and append their results.

    Checks always run and report in the canonical order koszul, markov,
    compressed, gb, whatever order they were requested in; the gb check
    silently skips graphs outside the two closed-form families.  With
    `exhaustive`, the koszul check lists every failing pair instead of
    stopping at the canonically first one.
    """
    unknown = sorted(set(checks) - set(CHECK_NAMES))
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    if g.n > 8 and not override_guard:
        raise ResourceGuardError(
            f"n={g.n} means {1 << (g.n - 1)} cut variables; "
            "set override_guard (--override-guard on the command line) to proceed"
        )
    report = classify(g)
    matrix = cut_matrix(g)
    results = []
    wanted = set(checks)
    if "koszul" in wanted:
        results.append(_check_koszul(report, matrix, degree, exhaustive=exhaustive))
    if "markov" in wanted:
        results.append(_check_markov(report, matrix, degree))
    if "compressed" in wanted:
        results.append(_check_compressed(report, matrix, degree, trials, seed))
    if "gb" in wanted:
        gb = _check_gb_family(report, matrix, degree)
        if gb is not None:
            results.append(gb)
    return replace(report, computational_checks=tuple(results))
