"""Command-line front end: graph ingestion, reports, bases, corpus sweeps.

Three subcommands:

  classify   full report (theorem fields + computational cross-checks) as JSON
  gb         Buchberger basis of the cut ideal as text, optionally with the
             closed-form family certification for stars and two-part graphs
  enumerate  CSV sweep over all connected isomorphism classes up to a size

Graphs are named by descriptor (K5, K2,3, C6, clique-sum:C4+C3@edge) or by
a path to an edge-list file.  Exit codes: 0 ok, 2 parse error, 3 resource
guard.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from .classify import (
    CSV_HEADER,
    ResourceGuardError,
    cross_validate,
)
from .cuts import cut_matrix
from .graphs import (
    Graph,
    GraphError,
    GraphParseError,
    clique_sum,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    graph_classes,
    make_family,
    read_graph_text,
    recognize_family,
    zero_sum,
)
from .toric import (
    TIE_BREAKS,
    bipartite_groebner_family,
    buchberger,
    groebner_text,
    is_groebner_basis,
    markov_generators_up_to,
    minsize_order,
    star_groebner_family,
)

_FAMILY_RE = re.compile(r"^K(\d+(?:,\d+)*)$")
_CYCLE_RE = re.compile(r"^C(\d+)$")
_CLIQUE_SUM_RE = re.compile(r"^clique-sum:([^+]+)\+([^@]+)@(vertex|edge)$")

ENUMERATE_CHECKS = ("koszul", "markov")
ENUMERATE_GUARD = 6
MATRIX_GUARD = 8


def _parse_family_descriptor(text: str) -> Graph | None:
    """K5 / K2,3 / C6 style names; None when the text is not one of them."""
    m = _FAMILY_RE.match(text)
    if m:
        parts = [int(p) for p in m.group(1).split(",")]
        if any(p < 1 for p in parts):
            raise GraphParseError(f"part sizes must be positive in {text!r}")
        if len(parts) == 1:
            return complete_graph(parts[0])
        return complete_multipartite(parts)
    m = _CYCLE_RE.match(text)
    if m:
        k = int(m.group(1))
        if k < 3:
            raise GraphParseError(f"cycles need at least 3 vertices, got {text!r}")
        return cycle_graph(k)
    return None


def _edge_glue(a: Graph, b: Graph) -> dict[int, int]:
    """Identify b's lexicographically least edge with a's greatest one,
    matching endpoints in ascending order."""
    if a.m == 0 or b.m == 0:
        raise GraphParseError("edge clique-sums need an edge on both sides")
    a1, a2 = a.edge_list()[-1]
    b1, b2 = b.edge_list()[0]
    return {b1: a1, b2: a2}


def parse_graph_input(text: str) -> Graph:
    """Resolve a descriptor or file path to a graph.

    Descriptors take precedence: a file literally named C5 has to be given
    with a ./ prefix.
    """
    fam = _parse_family_descriptor(text)
    if fam is not None:
        return fam
    m = _CLIQUE_SUM_RE.match(text)
    if m:
        left = _parse_family_descriptor(m.group(1))
        right = _parse_family_descriptor(m.group(2))
        if left is None or right is None:
            raise GraphParseError(
                f"clique-sum components must be family descriptors, got {text!r}"
            )
        if m.group(3) == "vertex":
            return zero_sum(left, right)
        return clique_sum(left, right, _edge_glue(left, right)).graph
    if text.startswith("clique-sum:"):
        raise GraphParseError(f"malformed clique-sum descriptor {text!r}")
    try:
        with open(text, "r", encoding="utf-8") as fh:
            content = fh.read()
    except OSError as exc:
        raise GraphParseError(f"not a descriptor and not a readable file: {text!r} ({exc})")
    return read_graph_text(content)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_classify(args: argparse.Namespace) -> int:
    g = parse_graph_input(args.graph)
    report = cross_validate(
        g,
        degree=args.degree,
        trials=args.trials,
        seed=args.seed,
        override_guard=args.override_guard,
        exhaustive=args.all_pairs,
    )
    payload = json.dumps(report.to_json_dict(), indent=2, sort_keys=True) + "\n"
    _emit(payload, args.out)
    return 0


def cmd_gb(args: argparse.Namespace) -> int:
    g = parse_graph_input(args.graph)
    if g.n > MATRIX_GUARD and not args.override_guard:
        raise ResourceGuardError(
            f"n={g.n} means {1 << (g.n - 1)} cut variables; rerun with --override-guard"
        )
    matrix = cut_matrix(g)
    order = minsize_order(g.n, tie_break=args.order)
    generators = markov_generators_up_to(matrix, args.degree)
    basis = buchberger(generators, order, matrix=matrix)
    chunks = [groebner_text(basis, matrix, order, args.degree)]
    if args.certify:
        chunks.append(_certify_text(g, matrix, order, args.degree))
    _emit("".join(chunks), args.out)
    return 0


def _certify_text(g: Graph, matrix, order, degree: int) -> str:
    fam = recognize_family(g)
    if fam.tag == "K1m":
        family = star_groebner_family(fam.m)
    elif fam.tag == "K2m":
        family = bipartite_groebner_family(fam.m)
    else:
        return "# certify: no closed-form family for this graph\n"
    standard = make_family(fam)
    std_matrix = matrix if g == standard else cut_matrix(standard)
    verdict = is_groebner_basis(family, minsize_order(standard.n), std_matrix, degree)
    lines = [
        f"# certify: family={fam.label()} labeling=standard size={len(family)} "
        f"verdict={'true' if verdict else 'false'}",
    ]
    lines.extend(b.to_text() for b in family)
    return "\n".join(lines) + "\n"


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.max_n > ENUMERATE_GUARD and not args.override_guard:
        raise ResourceGuardError(
            f"enumeration beyond n={ENUMERATE_GUARD} needs --override-guard"
        )
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    total = disagreements = 0
    for n in range(1, args.max_n + 1):
        for g in graph_classes(n, connected_only=True):
            report = cross_validate(
                g,
                degree=args.degree,
                trials=args.trials,
                seed=args.seed,
                checks=ENUMERATE_CHECKS,
                override_guard=args.override_guard,
            )
            writer.writerow(report.csv_row())
            total += 1
            disagreements += 0 if report.agreement else 1
    _emit(buf.getvalue(), args.out)
    print(f"classes={total} disagreements={disagreements}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cutkoszul",
        description="cut ideals of graphs: classification, bases, corpus sweeps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, with_graph: bool = True) -> None:
        if with_graph:
            p.add_argument("graph", help="descriptor (K5, K2,3, C6, clique-sum:C4+C3@edge) or file path")
        p.add_argument("--degree", type=int, default=4, help="degree bound for all bounded checks")
        p.add_argument("--trials", type=int, default=50, help="random order trials for the compressedness probe")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized probes")
        p.add_argument("--override-guard", action="store_true", help="lift the size guards")
        p.add_argument("--out", default=None, help="write output to a file instead of stdout")

    p_classify = sub.add_parser("classify", help="emit a JSON classification report")
    common(p_classify)
    p_classify.add_argument(
        "--all-pairs",
        action="store_true",
        help="list every failing pair in the koszul check, not just the first",
    )
    p_classify.set_defaults(func=cmd_classify)

    p_gb = sub.add_parser("gb", help="emit a reduced Groebner basis of the cut ideal")
    common(p_gb)
    p_gb.add_argument("--order", choices=TIE_BREAKS, default="default", help="tie-break variant of the min-size order")
    p_gb.add_argument("--certify", action="store_true", help="also certify the closed-form family when one exists")
    p_gb.set_defaults(func=cmd_gb)

    p_enum = sub.add_parser("enumerate", help="cross-validate every connected class up to a size, as CSV")
    common(p_enum, with_graph=False)
    p_enum.add_argument("--max-n", type=int, required=True, help="largest vertex count to enumerate")
    p_enum.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return 3
    except (GraphParseError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
