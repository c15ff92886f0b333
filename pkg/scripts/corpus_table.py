"""Print invariants of every built-in diagram as a table (or JSON with --json)."""

import argparse
import json

from csskein.bracket import jones_in_t
from csskein.corpus import corpus_items
from csskein.coupling import Coupling
from csskein.diagram import components, writhe
from csskein.expectation import GaugeSpec, gauge_expectation


def rows(beta: float):
    c = Coupling(beta)
    for name, d in corpus_items():
        poly, var = jones_in_t(d)
        yield {
            "name": name,
            "crossings": len(d.crossings),
            "components": components(d)[0],
            "writhe": writhe(d),
            "jones": f"{poly} ({var})",
            "su2": float(f"{gauge_expectation(d, GaugeSpec('SU2', c)):.12g}"),
        }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--beta", type=float, default=0.25)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    table = list(rows(args.beta))
    if args.json:
        print(json.dumps(table, indent=1))
        return
    print(f"{'name':<12} {'X':>2} {'c':>2} {'w':>3}  {'<W> SU2':>16}  Jones")
    for r in table:
        print(f"{r['name']:<12} {r['crossings']:>2} {r['components']:>2} {r['writhe']:>3}  "
              f"{r['su2']:>16.10g}  {r['jones']}")


if __name__ == "__main__":
    main()
