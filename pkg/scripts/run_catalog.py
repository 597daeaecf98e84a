"""Verify every solution class on random admissible draws and print a summary table.

    python3 scripts/run_catalog.py --draws 20 --points 100 --seed 1
"""
import argparse
import json
import time
from dataclasses import asdict, dataclass

import numpy as np

from heavenly import catalog, conditions
from heavenly.jets import parse_fn


@dataclass
class Config:
    draws: int = 20
    points: int = 100
    seed: int = 1
    bound: float = 2.5
    g: tuple = ("exp:0.5", "sin:0.7", "cosh:0.6")
    output: str | None = None


def run(cfg: Config):
    rng = np.random.default_rng(cfg.seed)
    fns = [parse_fn(s) for s in cfg.g]
    rows = []
    for cid, cdef in catalog.CLASSES.items():
        t0 = time.perf_counter()
        res, sys_res, legendre_min, noninv = 0.0, None, None, 0
        for _ in range(cfg.draws):
            p = catalog.sample_params(cid, rng, bound=cfg.bound)
            for g in fns:
                inst = catalog.instantiate(cid, p, [g])
                pts = inst.random_points(rng, cfg.points)
                rep = catalog.verify_instance(inst, None, points=pts)
                res = max(res, rep.max_residual)
                if rep.max_system_residual is not None:
                    sys_res = max(sys_res or 0.0, rep.max_system_residual)
                L = conditions.legendre_report(inst, pts)
                if L is not None:
                    m = float(np.min(np.abs(L[0]) / (1 + L[1])))
                    legendre_min = m if legendre_min is None else min(legendre_min, m)
                noninv += all(conditions.noninvariance_verdict(inst, x).satisfied for x in pts[:5])
        rows.append({"class": cid, "maxResidual": res, "maxSystemResidual": sys_res,
                     "minRelativeLegendre": legendre_min,
                     "nonInvariantDraws": f"{noninv}/{cfg.draws * len(fns)}",
                     "seconds": round(time.perf_counter() - t0, 2)})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--draws", type=int, default=Config.draws)
    ap.add_argument("--points", type=int, default=Config.points)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--output")
    cfg = Config(**vars(ap.parse_args()))
    rows = run(cfg)
    fmt = lambda v: "-" if v is None else f"{v:.1e}" if isinstance(v, float) else str(v)
    print(f"{'class':20s} {'residual':>9s} {'system':>9s} {'legendre':>9s} {'non-inv':>9s} {'s':>6s}")
    for r in rows:
        print(f"{r['class']:20s} {fmt(r['maxResidual']):>9s} {fmt(r['maxSystemResidual']):>9s} "
              f"{fmt(r['minRelativeLegendre']):>9s} {r['nonInvariantDraws']:>9s} {r['seconds']:6.2f}")
    if cfg.output:
        with open(cfg.output, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
