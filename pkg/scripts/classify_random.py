#!/usr/bin/env python3
"""Classify random pairs of presentations and tally the outcomes.

Half of the pairs are partners built from a random sign vector, the other
half are independent draws.  Every positive answer is backed by an explicit
isomorphism that is checked against all defining relations.
"""

import argparse
import collections

from qweyl.iso import build_iso, decide_iso, partner_presentation, verify_hom
from qweyl.sampling import SamplingConfig, random_mu, random_presentation


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=100)
    ap.add_argument("--max-n", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = SamplingConfig(seed=args.seed)
    rng = cfg.rng()
    tally = collections.Counter()
    for _ in range(args.pairs):
        n = rng.randint(1, args.max_n)
        A = random_presentation(rng, n, cfg)
        if rng.random() < 0.5:
            eps = tuple(rng.choice((1, -1)) for _ in range(n))
            B = partner_presentation(A, eps)
        else:
            B = random_presentation(rng, n, cfg)
        d = decide_iso(A, B)
        if d.isomorphic:
            phi = build_iso(A, B, d.eps, random_mu(rng, A))
            assert not verify_hom(phi), "constructed map is not a homomorphism"
            tally[f"n={n} isomorphic eps={''.join('+' if e > 0 else '-' for e in d.eps)}"] += 1
        else:
            tally[f"n={n} not isomorphic ({d.reason})"] += 1
    for key in sorted(tally):
        print(f"{tally[key]:5d}  {key}")


if __name__ == "__main__":
    main()
