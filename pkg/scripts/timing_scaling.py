"""Wall time of the state-sum engines against crossing count.

Uses closures of random braid words of the requested lengths; every
number is the median of ``--repeat`` cold runs (caches cleared).
"""

import argparse
import random
import statistics
import time

from csskein.braids import braid_closure, random_braid
from csskein.bracket import kauffman_bracket, su2_pipeline_bracket
from csskein.coupling import Coupling
from csskein.expectation import GaugeSpec, gauge_expectation
from csskein.states import _loop_counts_cached


def timed(fn, repeat):
    times = []
    for _ in range(repeat):
        _loop_counts_cached.cache_clear()
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-crossings", type=int, default=16)
    ap.add_argument("--strands", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    c = Coupling(0.3)
    print(f"{'k':>3} {'bracket':>10} {'pipeline':>10} {'GL(3)':>10}  seconds")
    for k in range(2, args.max_crossings + 1, 2):
        d = braid_closure(random_braid(rng, args.strands, k), args.strands)
        cols = [
            timed(lambda: kauffman_bracket(d), args.repeat),
            timed(lambda: su2_pipeline_bracket(d, c), args.repeat),
            timed(lambda: gauge_expectation(d, GaugeSpec("GLN", c, n=3)), args.repeat),
        ]
        print(f"{k:>3} " + " ".join(f"{t:>10.4f}" for t in cols))


if __name__ == "__main__":
    main()
