"""Determining algebraic systems of the sum-of-functions ansatz.

Substituting u = sum_j g_j(c_j . x + beta_j) into an equation that is
quadratic in the Hessian turns the Hessian into sum_j g_j'' c_j c_j^T. The
coefficient of each product g_i'' g_j'' and of each g_i'' must vanish
separately; these coefficients are polynomials in the c's.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .ansatz import ArbitraryG, ConjugateOf, Square
from .errors import ArityError, DomainError
from .exact import Poly, RatComplex
from . import pde

SERIES_SYMBOLS = ("alpha", "gamma", "zeta", "lambda")
SPEC_SYMBOLS = ("A", "B", "C", "theta")


def symbol_names(n, naming=None):
    """Coefficient symbols per term: a1..d4 for four or fewer terms, else alpha_j.."""
    naming = naming or ("abcd" if n <= 4 else "series")
    if naming == "abcd":
        if n > 4:
            raise ArityError("letter naming supports at most four terms")
        return [[f"{x}{m}" for m in range(1, 5)] for x in "abcd"[:n]]
    return [[f"{s}{j}" for s in SERIES_SYMBOLS] for j in range(1, n + 1)]


def kind_label(kind):
    if isinstance(kind, Square):
        return "square"
    if isinstance(kind, ConjugateOf):
        return f"conj{kind.index + 1}"
    return "g"


def parse_kinds(text, n):
    """Parse ``sq,sq,g,conj3`` (1-based conjugation targets)."""
    if not text:
        return [ArbitraryG(None)] * n
    out = []
    for item in text.split(","):
        item = item.strip().lower()
        if item in ("sq", "square"):
            out.append(Square())
        elif item.startswith("conj"):
            out.append(ConjugateOf(int(item[4:]) - 1))
        elif item in ("g", "arbitrary"):
            out.append(ArbitraryG(None))
        else:
            raise ValueError(f"unknown term kind {item!r}")
    if len(out) != n:
        raise ArityError(f"{len(out)} kinds given for {n} terms")
    return out


@dataclass
class DeterminingSystem:
    source: str
    n: int
    kinds: list
    symbols: list
    quad: dict = field(default_factory=dict)   # (i, j) 1-based, i <= j
    lin: dict = field(default_factory=dict)    # i 1-based
    const: Poly = field(default_factory=Poly)
    equation: int | None = None                # member index within a linear system

    def conditions(self):
        """All condition polynomials as (name, Poly) pairs, in a fixed order."""
        tag = "" if self.equation is None else f"eq{self.equation + 1}:"
        out = [(f"{tag}quad({i},{j})", p) for (i, j), p in sorted(self.quad.items())]
        out += [(f"{tag}lin({i})", p) for i, p in sorted(self.lin.items())]
        if self.const is not None:
            out.append((f"{tag}const", self.const))
        return out

    def __add__(self, other):
        out = DeterminingSystem(self.source + "+" + other.source, self.n, self.kinds, self.symbols)
        out.quad = _sum_maps(self.quad, other.quad)
        out.lin = _sum_maps(self.lin, other.lin)
        out.const = (self.const or Poly()) + (other.const or Poly())
        return out

    def to_json(self):
        return {"source": self.source, "n": self.n,
                "kinds": [kind_label(k) for k in self.kinds],
                "symbols": self.symbols,
                "conditions": [{"name": name, "terms": p.to_json()}
                               for name, p in self.conditions()]}


def _sum_maps(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out[k] + v if k in out else v
    return out


def _bilinear(spec, X, Y):
    """Symmetrized quadratic part: sum q (X_a Y_b + X_b Y_a) / 2."""
    total = Poly()
    half = RatComplex(1, 0) / 2
    for a, b, c in spec.quad:
        total = total + Poly.coerce(c) * (X[a] * Y[b] + X[b] * Y[a]) * half
    return total


def _linear(spec, X):
    total = Poly()
    for a, c in spec.lin:
        total = total + Poly.coerce(c) * X[a]
    return total


def _rank_one(c):
    return {(m, n): c[m] * c[n] for m in range(4) for n in range(m, 4)}


def _generate_one(spec, n, kinds, names, equation=None):
    coeffs = [[Poly.var(s) for s in row] for row in names]
    R = [_rank_one(c) for c in coeffs]
    arbitrary = [i for i, k in enumerate(kinds) if not isinstance(k, Square)]
    squares = [i for i, k in enumerate(kinds) if isinstance(k, Square)]
    # squares have g'' = 2, so they add the constant matrix S = sum 2 c c^T
    S = {key: Poly() for key in R[0]} if R else {}
    for i in squares:
        for key in S:
            S[key] = S[key] + R[i][key] * 2
    ds = DeterminingSystem(spec.name, n, list(kinds), names, equation=equation)
    for a in range(len(arbitrary)):
        i = arbitrary[a]
        if spec.quad:
            for j in arbitrary[a:]:
                q = _bilinear(spec, R[i], R[j])
                ds.quad[(i + 1, j + 1)] = q if i == j else q * 2
        lin = _linear(spec, R[i])
        if squares and spec.quad:
            lin = lin + _bilinear(spec, S, R[i]) * 2
        ds.lin[i + 1] = lin
    const = Poly.coerce(spec.constant)
    if squares:
        const = const + _linear(spec, S) + (_bilinear(spec, S, S) if spec.quad else Poly())
    keep_const = bool(spec.quad) or squares or not const.is_zero()
    ds.const = const if keep_const else None
    return ds


def generate(spec, n, kinds=None, naming=None):
    """Determining system of an n-term ansatz for a PdeSpec.

    For a SystemSpec, a list with one system per member equation is returned.
    """
    if n < 1:
        raise ArityError("need at least one term")
    kinds = list(kinds) if kinds is not None else [ArbitraryG(None)] * n
    if len(kinds) != n:
        raise ArityError(f"{len(kinds)} kinds for {n} terms")
    names = symbol_names(n, naming)
    if isinstance(spec, pde.SystemSpec):
        return [_generate_one(e, n, kinds, names, equation=k)
                for k, e in enumerate(spec.equations)]
    return _generate_one(spec, n, kinds, names)


def all_conditions(ds):
    if isinstance(ds, list):
        return [c for part in ds for c in part.conditions()]
    return ds.conditions()


def symbolic_pde(eq_id):
    """Builtin equation with its parameters (A, B, C, theta) left as symbols."""
    params = {"asymm": "ABC", "evolution2": "AC"}.get(eq_id, "")
    if eq_id in ("cma-general", "mixed", "mixed-legendre"):
        return pde.builtin_pde(eq_id, theta=Poly.var("theta"))
    return pde.builtin_pde(eq_id, **{k: Poly.var(k) for k in params})


def class_target(cid, n=None):
    """The equation or system a class is certified against, with its term kinds."""
    from .catalog import get_class, resolve_n, build_terms, sample_params
    cdef = get_class(cid)
    n = resolve_n(cdef, n)
    target = pde.builtin_system(cdef.system) if cdef.system else symbolic_pde(cdef.equation)
    built = build_terms(cdef, sample_params(cdef, np.random.default_rng(0), n), n)
    kinds = []
    for t in built.terms:
        if t.kind == "sq":
            kinds.append(Square())
        elif isinstance(t.kind, tuple):
            kinds.append(ConjugateOf(t.kind[1]))
        else:
            kinds.append(ArbitraryG(None))
    return target, kinds, len(built.terms)


@dataclass
class CertReport:
    class_id: str
    trials: int
    exact: bool
    zero_trials: int
    max_residual: float
    per_condition: dict
    mutated: bool = False

    @property
    def all_zero(self):
        return self.zero_trials == self.trials

    def to_json(self):
        return {"class": self.class_id, "trials": self.trials, "exact": self.exact,
                "mutated": self.mutated, "zeroTrials": self.zero_trials,
                "maxResidual": self.max_residual, "perCondition": self.per_condition}


def _trial_values(cdef, p, n, names, mutate):
    from .catalog import build_terms
    built = build_terms(cdef, p, n)
    rows = [list(t.coeffs) for t in built.terms]
    if mutate:
        ti, slot = cdef.mutant
        rows[ti][slot] = rows[ti][slot] * (1 + RatComplex(1) / 7)
    values = {}
    for row_names, row in zip(names, rows):
        for s, v in zip(row_names, row):
            values[s] = v if isinstance(v, RatComplex) else RatComplex.coerce(v)
    for k, v in built.pde_params.items():
        values[k] = v if isinstance(v, RatComplex) else RatComplex.coerce(v)
    values.setdefault("theta", RatComplex(1))
    return values


def _slot_value(cdef, p, n):
    from .catalog import build_terms
    ti, slot = cdef.mutant
    return build_terms(cdef, p, n).terms[ti].coeffs[slot]


def certify(ds, cid, trials=50, rng=None, mutate=False, tol=1e-12) -> CertReport:
    """Substitute the class relations at random rational draws into every condition.

    Classes whose coefficients leave the Gaussian rationals (square roots,
    phases) are checked in floating point against ``tol``.
    """
    from .catalog import get_class, sample_params
    cdef = get_class(cid)
    rng = rng if rng is not None else np.random.default_rng(0)
    parts = ds if isinstance(ds, list) else [ds]
    n, names = parts[0].n, parts[0].symbols
    conds = all_conditions(ds)
    per = {name: 0.0 for name, _ in conds}
    zero_trials, worst, exact_all = 0, 0.0, True
    for _ in range(trials):
        for _ in range(100):
            p = sample_params(cdef, rng, n=n if cdef.series else None)
            # a zero slot is left unchanged by the scaling, so it would not be a mutant
            if not mutate or _slot_value(cdef, p, n):
                break
        values = _trial_values(cdef, p, n, names, mutate)
        exact = all(isinstance(v, RatComplex) for v in values.values()) and cdef.exact
        ok = True
        for name, poly in conds:
            try:
                v = poly.evaluate(values)
            except KeyError as e:
                raise DomainError(f"system symbols do not match {cdef.id}: {e}") from e
            mag = abs(complex(v))
            per[name] = max(per[name], mag)
            worst = max(worst, mag)
            if exact and isinstance(v, RatComplex):
                ok = ok and not v
            else:
                exact_all = False
                ok = ok and mag <= tol * (1 + poly.scale_estimate(values))
        zero_trials += ok
    return CertReport(cdef.id, trials, exact_all, zero_trials, worst, per, mutate)
