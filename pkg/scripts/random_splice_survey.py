"""Splice random knot-like complexes and check the rank inequality on each pair.

    python scripts/random_splice_survey.py --count 200 --seed 1
"""

import argparse
import random
import time
from collections import Counter

from hfsplice.cfd_builder import build_cfd
from hfsplice.knot_library import random_normal_form
from hfsplice.pairing import splice


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--max-genus", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    ratios = Counter()
    violations = 0
    done = 0
    while done < args.count:
        l1 = build_cfd(random_normal_form(rng, args.max_genus, args.max_n))
        l2 = build_cfd(random_normal_form(rng, args.max_genus, args.max_n))
        if not (l1.genus and l2.genus):
            continue
        rep = splice(l1, l2)
        done += 1
        if not (rep.lower_bound_holds and rep.survival.ok):
            violations += 1
            print("VIOLATION", l1.nf.to_json(), l2.nf.to_json(), rep.to_json())
        ratios[rep.total_rank - rep.lower_bound] += 1
    dt = time.perf_counter() - t0
    print(f"{done} splices of nontrivial knots in {dt:.1f}s, {violations} violations")
    print("rank minus lower bound:", dict(sorted(ratios.items())))


if __name__ == "__main__":
    main()
