"""Distribution of I_q over seeded random states for each entropy route."""

import argparse
from dataclasses import dataclass

import numpy as np

from qutrit_ent.density import random_density
from qutrit_ent.entropy import Route, subadditivity_report


@dataclass
class SweepConfig:
    count: int = 10_000
    seed: int = 0


ROUTES = ((3, Route.PADDED_QUTRIT), (4, Route.TWO_QUBIT), (4, Route.PADDED_6X6))


def run(cfg):
    for dim, route in ROUTES:
        iq = np.array(
            [subadditivity_report(random_density(dim, cfg.seed + i), route).iq for i in range(cfg.count)]
        )
        q = np.quantile(iq, [0.0, 0.5, 1.0])
        print(f"{route.value:14s} n={cfg.count} min={q[0]:.6f} median={q[1]:.6f} max={q[2]:.6f} violations={(iq < -1e-9).sum()}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=SweepConfig.count)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = ap.parse_args()
    run(SweepConfig(args.count, args.seed))


if __name__ == "__main__":
    main()
