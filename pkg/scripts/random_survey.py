#!/usr/bin/env python3
"""Survey recognition behaviour on seeded random matrices.

Draws random nonnegative matrices (a mix of arbitrary ones and guaranteed
cone slack products), runs every recognition route on each, and reports
acceptance rates plus any cross-route disagreement.  A disagreement would
be a bug; the script exits nonzero in that case.
"""

import argparse
import os
import sys
import time
from dataclasses import dataclass

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))

from slackmat import (
    affine_criterion_check,
    ccgc_check,
    cone_check_via_polytope,
    is_cone_slack,
    is_polytope_slack,
    rcgc_check,
)
from slackmat.matrix import rank

from randgen import random_nonneg_matrix, random_slack_like_matrix, rng


@dataclass(frozen=True)
class SurveyConfig:
    seed: int = 0
    count: int = 200
    max_rows: int = 6
    max_cols: int = 6


def survey(cfg: SurveyConfig) -> int:
    r = rng(cfg.seed)
    cone_yes = poly_yes = checked_poly = disagreements = 0
    t0 = time.time()
    for i in range(cfg.count):
        if i % 2:
            m = random_slack_like_matrix(r, max_dim=3, max_pts=6)
        else:
            m = random_nonneg_matrix(r, cfg.max_rows, cfg.max_cols)
        routes = [
            ccgc_check(m).verdict,
            rcgc_check(m).verdict,
            is_cone_slack(m).verdict,
            cone_check_via_polytope(m),
        ]
        if len(set(routes)) != 1:
            disagreements += 1
            print("cone-route disagreement on %r" % m, file=sys.stderr)
        cone_yes += routes[0]
        if rank(m) >= 2:
            checked_poly += 1
            a = is_polytope_slack(m).verdict
            b = affine_criterion_check(m)
            if a != b:
                disagreements += 1
                print("polytope-route disagreement on %r" % m, file=sys.stderr)
            poly_yes += a
    dt = time.time() - t0
    print("matrices:            %d" % cfg.count)
    print("cone slack rate:     %.1f%%" % (100.0 * cone_yes / cfg.count))
    print("polytope slack rate: %.1f%% (of %d with rank >= 2)"
          % (100.0 * poly_yes / max(checked_poly, 1), checked_poly))
    print("disagreements:       %d" % disagreements)
    print("elapsed:             %.2fs" % dt)
    return 1 if disagreements else 0


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-rows", type=int, default=6)
    ap.add_argument("--max-cols", type=int, default=6)
    a = ap.parse_args()
    cfg = SurveyConfig(a.seed, a.count, a.max_rows, a.max_cols)
    sys.exit(survey(cfg))


if __name__ == "__main__":
    main()
