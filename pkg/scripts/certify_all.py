"""Regenerate the determining system of every class and certify its relations.

Each class is checked with its own relations and with a mutant that scales one
dependent coefficient by 8/7; the mutant should fail in (nearly) every trial.

    python3 scripts/certify_all.py --trials 50
"""
import argparse
import time
from dataclasses import dataclass

import numpy as np

from heavenly import catalog, determining


@dataclass
class Config:
    trials: int = 50
    seed: int = 0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--seed", type=int, default=Config.seed)
    cfg = Config(**vars(ap.parse_args()))
    print(f"{'class':20s} {'target':18s} {'mode':6s} {'zero':>7s} {'mutant fails':>12s} {'s':>6s}")
    for cid, cdef in catalog.CLASSES.items():
        t0 = time.perf_counter()
        target, kinds, n = determining.class_target(cid)
        ds = determining.generate(target, n, kinds)
        good = determining.certify(ds, cid, cfg.trials, np.random.default_rng(cfg.seed))
        bad = determining.certify(ds, cid, cfg.trials, np.random.default_rng(cfg.seed + 1),
                                  mutate=True)
        name = cdef.system or cdef.equation
        mode = "exact" if good.exact else "float"
        print(f"{cid:20s} {name:18s} {mode:6s} {good.zero_trials:3d}/{cfg.trials:<3d} "
              f"{bad.trials - bad.zero_trials:8d}/{cfg.trials:<3d} {time.perf_counter() - t0:6.2f}")


if __name__ == "__main__":
    main()
