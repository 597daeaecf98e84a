"""Command-line driver: verify, determine, conditions, metric.

Exit codes: 0 all checks pass, 1 a check failed, 2 configuration error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from . import catalog, conditions, determining, metrics, pde
from .ansatz import eval_jet
from .errors import ConstraintError, HeavenlyError
from .jets import parse_fn

SCHEMA = "report-v1"
TOOL = f"heavenly {__version__}"


class ConfigError(Exception):
    pass


def _default_seed():
    try:
        return int(os.environ.get("HEAVENLY_SEED", "0"))
    except ValueError:
        raise ConfigError("HEAVENLY_SEED must be an integer")


@dataclass
class RunConfig:
    """Resolved settings of one CLI run (flags over config file over defaults)."""
    seed: int = 0
    class_: str | None = None
    params: object = None
    g: object = "exp"
    points: int = 100
    tolerance: float = 1e-9
    system_tolerance: float = 1e-12
    n: int | None = None
    output: str | None = None
    family: str | None = None
    system: str | None = None
    equation: str | None = None
    kinds: str | None = None
    naming: str | None = None
    certify: str | None = None
    trials: int = 50
    mutate: bool = False


def _merge(args, keys):
    """Flags win over the JSON config file, which wins over defaults."""
    cfg = {}
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                cfg = json.load(fh)
        except (OSError, ValueError) as e:
            raise ConfigError(f"cannot read config: {e}")
        if not isinstance(cfg, dict):
            raise ConfigError("config file must hold a JSON object")
    out = RunConfig(seed=None)
    for k in keys:
        v = getattr(args, k, None)
        if v is None:
            v = cfg.get(k, cfg.get(k.replace("_", "-")))
        if v is not None:
            setattr(out, "class_" if k == "class" else k, v)
    if out.seed is None:
        out.seed = _default_seed()
    try:
        ok = int(out.points) >= 1 and float(out.tolerance) > 0 and int(out.trials) >= 1
    except (TypeError, ValueError):
        ok = False
    if not ok:
        raise ConfigError("points and trials must be >= 1 and tolerance > 0")
    return out


def _cx(z):
    z = complex(z)
    return [z.real, z.imag]


def _parse_g(text):
    if isinstance(text, list):
        items = text
    else:
        items = [s for s in str(text).split(";") if s.strip()]
    try:
        return [parse_fn(s) for s in items]
    except (ValueError, TypeError) as e:
        raise ConfigError(f"bad function descriptor: {e}")


def _resolve_draws(cfg, cdef, n):
    """List of (label, exact params) according to the params setting."""
    spec = cfg.params or ""
    rng = np.random.default_rng(cfg.seed)
    if isinstance(spec, dict):
        given = {k: catalog.parse_number(v) for k, v in spec.items()}
        return [catalog.complete_params(cdef, given, rng, n)]
    if str(spec).startswith("random:"):
        parts = str(spec).split(":")
        if len(parts) != 3:
            raise ConfigError("expected random:<seed>:<draws>")
        try:
            seed, draws = int(parts[1]), int(parts[2])
        except ValueError:
            raise ConfigError("expected random:<seed>:<draws>")
        rng = np.random.default_rng(seed)
        cfg.seed = seed
        return [catalog.sample_params(cdef, rng, n, exact=True, bound=2.5) for _ in range(draws)]
    try:
        given = catalog.parse_params(spec)
    except ValueError as e:
        raise ConfigError(str(e))
    known = {p.name for p in cdef.params(n)}
    unknown = set(given) - known
    if unknown:
        raise ConfigError(f"unknown parameters for {cdef.id}: {sorted(unknown)}")
    return [catalog.complete_params(cdef, given, rng, n)]


def _check(name, value, ok):
    return {"name": name, "maxAbsResidual": value, "pass": bool(ok)}


def _verify_draw(cdef, p, n, fns, cfg, rng):
    violations = catalog.constraint_check(cdef, p, n)
    inst = catalog.instantiate(cdef, p, fns, n, check=False)
    pts = inst.random_points(rng, int(cfg.points))
    jet = eval_jet(inst.ansatz, pts)
    ejet = inst.equation_jet(jet)
    res = np.abs(pde.residual(inst.pde, ejet))
    scale = pde.residual_scale(inst.pde, ejet)
    tol = float(cfg.tolerance)
    checks = [_check("constraints", len(violations), not violations),
              _check(f"residual:{cdef.equation}", float(res.max()),
                     bool(np.all(res <= tol * np.maximum(1, scale))))]
    if inst.system is not None:
        sres = np.abs(pde.residual_system(inst.system, jet))
        sscale = np.stack([pde.residual_scale(e, jet) for e in inst.system.equations], -1)
        checks.append(_check(f"system:{cdef.system}", float(sres.max()),
                             bool(np.all(sres <= float(cfg.system_tolerance)
                                         * np.maximum(1, sscale)))))
    if cdef.real:
        defect = float(np.abs(jet.val.imag).max())
        checks.append(_check("reality", defect, defect < 1e-12 * max(1, np.abs(jet.val).max())))
    legendre_ok = None
    if cdef.legendre_eq:
        L = conditions.legendre_condition(cdef.legendre_eq, ejet)
        Ls = conditions.legendre_scale(cdef.legendre_eq, ejet)
        legendre_ok = bool(np.all(np.abs(L) > 1e-8 * (1 + Ls)))
        checks.append(_check("legendre-nonzero", float(np.abs(L).min()), legendre_ok))
    verdicts = [conditions.noninvariance_verdict(inst, x) for x in pts]
    noninv = all(v.satisfied for v in verdicts)
    zero = sorted({f for v in verdicts for f in v.zero_factors})
    notes = sorted({nt for v in verdicts for nt in v.notes})
    checks.append(_check("non-invariance", float(min(abs(v.generic_value) for v in verdicts)),
                         noninv))
    solution = all(c["pass"] for c in checks if c["name"].startswith(("residual", "system")))
    return {
        "params": {k: catalog.format_value(v) for k, v in p.items()},
        "derived": {k: catalog.format_value(v) for k, v in inst.built.derived.items()},
        "coefficients": {k: _cx(v) for k, v in inst.coefficient_table().items()},
        "violations": violations,
        "checks": checks,
        "verdicts": {"solution": solution, "legendreOk": legendre_ok, "nonInvariant": noninv},
        "zeroFactors": zero,
        "notes": notes,
        "pass": all(c["pass"] for c in checks),
    }


def _class_and_n(cfg):
    if not cfg.class_:
        raise ConfigError("--class is required")
    try:
        cdef = catalog.get_class(cfg.class_)
        n = catalog.resolve_n(cdef, cfg.n)
    except HeavenlyError as e:
        raise ConfigError(str(e))
    return cdef, n


def cmd_verify(cfg):
    cdef, n = _class_and_n(cfg)
    fns = _parse_g(cfg.g)
    draws = _resolve_draws(cfg, cdef, n)
    rng = np.random.default_rng(cfg.seed)
    results = []
    for p in draws:
        try:
            results.append(_verify_draw(cdef, p, n, fns, cfg, rng))
        except ConstraintError as e:
            raise ConfigError(str(e))
    report = _header("verify", cfg, cdef, n)
    report.update({"g": [f.describe() for f in fns], "points": int(cfg.points),
                   "tolerance": float(cfg.tolerance), "draws": results,
                   "pass": all(r["pass"] for r in results)})
    return (0 if report["pass"] else 1), report


def _header(command, cfg, cdef=None, n=None):
    out = {"schema": SCHEMA, "tool": TOOL, "command": command, "seed": cfg.seed}
    if cdef is not None:
        out["class"] = cdef.id
        out["n"] = n
    return out


def cmd_determine(cfg):
    sys_id, eq_id = cfg.system, cfg.equation
    if bool(sys_id) == bool(eq_id):
        raise ConfigError("give exactly one of --system or --equation")
    try:
        target = pde.builtin_system(sys_id) if sys_id else determining.symbolic_pde(eq_id)
    except HeavenlyError as e:
        raise ConfigError(str(e))
    cdef = None
    if cfg.certify:
        try:
            cdef = catalog.get_class(cfg.certify)
        except HeavenlyError as e:
            raise ConfigError(str(e))
    n = cfg.n
    kinds_text = cfg.kinds
    kinds = None
    if cdef is not None:
        _, class_kinds, class_n = determining.class_target(cdef, n if cdef.series else None)
        # a prefix of the terms satisfies the prefix of the determining conditions
        if n is not None and int(n) > class_n:
            raise ConfigError(f"{cdef.id} has {class_n} terms, --n says {n}")
        n = class_n if n is None else int(n)
        if not kinds_text:
            kinds = class_kinds[:n]
    if n is None:
        raise ConfigError("--n is required")
    n = int(n)
    try:
        if kinds is None:
            kinds = determining.parse_kinds(kinds_text, n)
        ds = determining.generate(target, n, kinds, cfg.naming)
    except (HeavenlyError, ValueError) as e:
        raise ConfigError(str(e))
    parts = ds if isinstance(ds, list) else [ds]
    report = _header("determine", cfg)
    report.update({"target": sys_id or eq_id, "n": n,
                   "conditions": [c for part in parts for c in part.to_json()["conditions"]],
                   "symbols": parts[0].symbols,
                   "kinds": [determining.kind_label(k) for k in kinds]})
    code = 0
    if cdef is not None:
        rng = np.random.default_rng(cfg.seed)
        try:
            cert = determining.certify(ds, cdef, int(cfg.trials), rng,
                                       mutate=bool(cfg.mutate))
        except HeavenlyError as e:
            raise ConfigError(str(e))
        report["certificate"] = cert.to_json()
        report["pass"] = cert.all_zero
        code = 0 if cert.all_zero else 1
    return code, report


def cmd_conditions(cfg):
    cdef, n = _class_and_n(cfg)
    fns = _parse_g(cfg.g)
    draws = _resolve_draws(cfg, cdef, n)
    rng = np.random.default_rng(cfg.seed)
    out = []
    for p in draws:
        inst = catalog.instantiate(cdef, p, fns, n, check=False)
        pts = inst.random_points(rng, int(cfg.points))
        rows, det_err, leg_err = [], 0.0, 0.0
        L = conditions.legendre_report(inst, pts)
        for i, x in enumerate(pts):
            v = conditions.noninvariance_verdict(inst, x)
            row = {"point": [_cx(c) for c in x], "determinant": v.to_json()}
            if v.closed_form_value is not None:
                det_err = max(det_err, _rel(v.generic_value, v.closed_form_value))
            if L is not None:
                row["legendre"] = {"generic": _cx(L[0][i]),
                                   "closedForm": None if L[2] is None else _cx(L[2][i])}
                if L[2] is not None:
                    leg_err = max(leg_err, _rel(L[0][i], L[2][i]))
            rows.append(row)
        checks = [_check("determinant-closed-form", det_err, det_err <= 1e-10),
                  _check("legendre-closed-form", leg_err, leg_err <= 1e-8),
                  _check("non-invariance", None, all(r["determinant"]["satisfied"] for r in rows))]
        out.append({"params": {k: catalog.format_value(v) for k, v in p.items()},
                    "violations": catalog.constraint_check(cdef, p, n),
                    "rows": rows, "checks": checks, "pass": all(c["pass"] for c in checks)})
    report = _header("conditions", cfg, cdef, n)
    report.update({"draws": out, "pass": all(d["pass"] for d in out)})
    return (0 if report["pass"] else 1), report


def _rel(a, b):
    a, b = complex(a), complex(b)
    return abs(a - b) / max(1.0, abs(a))


def cmd_metric(cfg):
    family = cfg.family
    if family not in metrics.FAMILIES:
        raise ConfigError(f"unknown metric family {family!r}")
    cdef, n = _class_and_n(cfg)
    if cdef.id not in metrics.PAIRINGS[family]:
        raise ConfigError(f"metric family {family} does not pair with class {cdef.id}")
    fns = _parse_g(cfg.g)
    draws = _resolve_draws(cfg, cdef, n)
    rng = np.random.default_rng(cfg.seed)
    tables = []
    for p in draws:
        inst = catalog.instantiate(cdef, p, fns, n, check=False)
        pts = inst.random_points(rng, int(cfg.points))
        jets = inst.equation_jet(eval_jet(inst.ansatz, pts))
        rows = []
        for i, x in enumerate(pts):
            row = {"point": [_cx(c) for c in x]}
            try:
                m = metrics.metric_at(family, jets[i])
            except HeavenlyError as e:
                row["error"] = str(e)
            else:
                d = metrics.metric_det(m)
                row.update({"components": m.to_json(), "det": _cx(d), "absDet": abs(d)})
                if family == "kahler":
                    row["blockDet"] = _cx(metrics.kahler_block_det(jets[i]))
            rows.append(row)
        tables.append({"params": {k: catalog.format_value(v) for k, v in p.items()},
                       "rows": rows})
    report = _header("metric", cfg, cdef, n)
    report.update({"family": family, "coords": list(metrics.COORDS[family]), "draws": tables,
                   "pass": True})
    return 0, report


def build_parser():
    ap = argparse.ArgumentParser(prog="heavenly", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=TOOL)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_class=True):
        p.add_argument("--config", help="JSON file with default settings (flags win)")
        p.add_argument("--seed", type=int, help="RNG seed (default: $HEAVENLY_SEED or 0)")
        p.add_argument("--output", help="write the JSON report here instead of stdout")
        if with_class:
            p.add_argument("--class", dest="class", help="solution class, e.g. h2-equal")
            p.add_argument("--params", help="name=value,... or random:<seed>:<draws>")
            p.add_argument("--g", help="function descriptors separated by ';', e.g. 'exp:0.5;sin'")
            p.add_argument("--points", type=int)
            p.add_argument("--n", type=int, help="series length")

    p = sub.add_parser("verify", help="check residuals, Legendre and non-invariance conditions")
    common(p)
    p.add_argument("--tolerance", type=float)
    p.add_argument("--system-tolerance", dest="system_tolerance", type=float)

    p = sub.add_parser("determine", help="emit (and optionally certify) a determining system")
    common(p, with_class=False)
    p.add_argument("--system")
    p.add_argument("--equation")
    p.add_argument("--n", type=int)
    p.add_argument("--kinds", help="term kinds, e.g. sq,sq,g,conj3")
    p.add_argument("--naming", choices=["abcd", "series"])
    p.add_argument("--certify", help="class whose relations are substituted")
    p.add_argument("--trials", type=int)
    p.add_argument("--mutate", action="store_true", default=None,
                   help="perturb one dependent coefficient by a factor 8/7")

    p = sub.add_parser("conditions", help="closed-form vs generic determinants and conditions")
    common(p)

    p = sub.add_parser("metric", help="sample a metric family on a class")
    common(p)
    p.add_argument("--family", choices=None)
    return ap


_KEYS = {
    "verify": ["class", "params", "g", "points", "n", "seed", "output", "tolerance",
               "system_tolerance"],
    "determine": ["system", "equation", "n", "kinds", "naming", "certify", "trials", "mutate",
                  "seed", "output"],
    "conditions": ["class", "params", "g", "points", "n", "seed", "output"],
    "metric": ["family", "class", "params", "g", "points", "n", "seed", "output"],
}
_COMMANDS = {"verify": cmd_verify, "determine": cmd_determine, "conditions": cmd_conditions,
             "metric": cmd_metric}


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        if args.command == "metric" and args.points is None:
            args.points_default = True
        cfg = _merge(args, _KEYS[args.command])
        if getattr(args, "points_default", False) and cfg.points == RunConfig.points:
            cfg.points = 10
        code, report = _COMMANDS[args.command](cfg)
    except ConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    text = json.dumps(report, indent=2)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
