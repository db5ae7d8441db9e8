#!/usr/bin/env python3
"""Certify the closed-form Groebner families and time each tie-break.

For stars K_{1,m} the closed-form family is compared against the reduced
basis computed from scratch; for complete bipartite K_{2,m} the family
is certified directly (S-pairs plus a Hilbert comparison up to --degree).
Prints one row per (family, tie-break) with the verdict and wall time.

    python3 scripts/certify_families.py --max-m 4 --degree 4
"""

from __future__ import annotations

import argparse
import time

from cutkoszul.cuts import cut_matrix
from cutkoszul.graphs import complete_multipartite, star_graph
from cutkoszul.toric import (
    TIE_BREAKS,
    bipartite_groebner_family,
    buchberger,
    is_groebner_basis,
    markov_generators_up_to,
    minsize_order,
    star_groebner_family,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--degree", type=int, default=4)
    args = ap.parse_args()

    failures = 0
    print(f"{'family':>10} {'size':>5} {'tie-break':>10} {'verdict':>8} {'secs':>7}")
    for m in range(2, args.max_m + 1):
        g = star_graph(m)
        X = cut_matrix(g)
        family = star_groebner_family(m)
        for tie_break in TIE_BREAKS:
            order = minsize_order(g.n, tie_break)
            t = time.perf_counter()
            gb = buchberger(markov_generators_up_to(X, 3), order, matrix=X)
            ok = {b.unordered() for b in family} == {b.unordered() for b in gb}
            secs = time.perf_counter() - t
            failures += not ok
            print(f"{'K_{1,%d}' % m:>10} {len(family):>5} {tie_break:>10} "
                  f"{str(ok).lower():>8} {secs:>7.2f}")
    for m in range(2, args.max_m + 1):
        g = complete_multipartite([2, m])
        X = cut_matrix(g)
        family = bipartite_groebner_family(m)
        for tie_break in TIE_BREAKS:
            order = minsize_order(g.n, tie_break)
            t = time.perf_counter()
            ok = is_groebner_basis(family, order, X, args.degree)
            secs = time.perf_counter() - t
            failures += not ok
            print(f"{'K_{2,%d}' % m:>10} {len(family):>5} {tie_break:>10} "
                  f"{str(ok).lower():>8} {secs:>7.2f}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
