"""Legendre-existence conditions, closed-form class conditions and determinants,
and the non-invariance verdict."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import tables
from .ansatz import eval_jet, jacobian_matrix
from .errors import ArityError, UnknownEquation

# (coordinate pair, coordinate pair) for the 2x2 minor of each transformed equation
_LEGENDRE_MINOR = {
    "hcma-legendre": (0, 1),       # w_pp w_pbpb - w_ppb^2
    "heavenly2-legendre": (2, 1),  # theta_tt theta_rr - theta_rt^2
    "mixed-legendre": (0, 1),      # w_pp w_qq - w_pq^2
}

PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def nonzero(value, scale=0.0, rtol=1e-8):
    """Scale-aware test for the open conditions ``value != 0``."""
    return abs(complex(value)) > rtol * (1 + abs(scale))


def legendre_terms(eq_id, jet):
    if eq_id not in _LEGENDRE_MINOR:
        raise UnknownEquation(f"no Legendre condition for {eq_id!r}")
    m, n = _LEGENDRE_MINOR[eq_id]
    H = jet.hess
    return H[..., m, m] * H[..., n, n], H[..., m, n] ** 2


def legendre_condition(eq_id, jet):
    a, b = legendre_terms(eq_id, jet)
    return a - b


def legendre_scale(eq_id, jet):
    a, b = legendre_terms(eq_id, jet)
    return np.maximum(np.abs(a), np.abs(b))


def eval_table(table, values):
    total = 0
    for c, mono in table:
        t = c
        for s, e in mono:
            t = t * values[s] ** e
        total = total + t
    return total


def abcd(rows):
    """Map the first four coefficient rows to the names a1..d4."""
    return {f"{x}{m + 1}": rows[i][m] for i, x in enumerate("abcd") for m in range(4)}


_DET_TABLE = {"equal": tables.EQUAL_SYMM_DET, "high1": tables.HIGH_SYMM_I_DET,
              "high2": tables.HIGH_SYMM_II_DET, "mixed": tables.MIXED_DET}


def closed_det_polynomial(kind, rows):
    return eval_table(_DET_TABLE[kind], abcd(rows))


def _prod(xs):
    out = 1
    for x in xs:
        out = out * x
    return out


def _family_det(kind, v, d1):
    P = eval_table(_DET_TABLE[kind], v)
    g = _prod(d1[:4])
    if kind in ("equal", "high2"):
        return g / (v["a3"] ** 2 * v["b3"] ** 2 * v["c3"] ** 2 * v["d3"] ** 2) * P
    if kind == "high1":
        den = v["c1"] * v["d2"] * v["c2"] * v["d1"] * v["b2"] * v["b1"] * v["a2"] * v["a1"]
        return g / den * P
    return -g / (v["a2"] ** 2 * v["b2"] ** 2 * v["c2"] ** 2 * v["d2"] ** 2) * P


def jacobian_det_closed(cid, p, d1, n=None):
    """Closed-form Jacobian determinant of a class.

    ``d1`` holds the first derivatives of the first four terms at the point;
    for the squared terms of CMA_SQ these are the region factors Gamma_1, Gamma_2.
    Returns None for classes without a closed form.
    """
    from .catalog import KIND_OF, build_terms, get_class, conj, cma_det_factor, hcma1_det_factor
    cdef = get_class(cid)
    d1 = list(d1)
    g = _prod(d1[:4])
    if cdef.id == "CMA_SQ":
        a2 = p["a2"]
        a2b = conj(a2)
        first = d1[0] / 2                 # conj(a2) z1 + a2 conj(z1) + beta2
        second = a2b * a2 * d1[1]         # 2 z1 conj(a2) a2 + ... + 2 beta3 conj(a2) a2
        return (-1 / (2 * a2b ** 2 * a2 ** 2) * first * second
                * cma_det_factor(a2, p["d3"]) * d1[2] * d1[3])
    if cdef.id == "HCMA_I":
        d1_, d2_ = p["d1"], p["d2"]
        return 2j * p["a2"] * p["A"] / (d1_ ** 2 * d2_ ** 2) * hcma1_det_factor(d1_, d2_) * g
    if cdef.id == "HCMA_II":
        a4, b4 = p["a4"], p["b4"]
        return -(conj(a4) * b4 - a4 * conj(b4)) * p["d4"] ** 2 * g
    if cdef.id == "HCMA_III":
        return 16 * p["A2"] * p["B3"] * p["C2"] * p["H2"] * g
    if cdef.id in KIND_OF:
        rows = [t.coeffs for t in build_terms(cdef, p, n).terms]
        return _family_det(KIND_OF[cdef.id], abcd(rows), d1)
    if cdef.id in ("ASYMM_CLASS", "EVOLUTION_CLASS"):
        A, a1, a3 = p["A"], p["a1"], p["a3"]
        B = p.get("B", 0)
        c1, c3, c4 = p["c1"], p["c3"], p["c4"]
        last = -c4 * A * a3 * c1 - B * a3 * c1 ** 2 + a1 * c1 * c3 * B + a1 * c3 * c4 * A
        return 1 / (c1 * A * a3) * a1 * (p["b2"] * p["d3"] - p["b3"] * p["d2"]) * last * g
    return None


def _hcma3_condition(p, h):
    from .catalog import hcma3_radicals
    A2, B3, B4, C2, H2 = (p[k] for k in ("A2", "B3", "B4", "C2", "H2"))
    R, D = hcma3_radicals(B3, B4)

    def bracket(rows):
        return sum(c * B3 ** i * B4 ** j * R ** k / D ** m for c, i, j, k, m in rows)
    h1, h2, h3, h4 = h
    return (A2 ** 2 * bracket(tables.HCMA_III_BRACKET_12) * h1 * h2
            + H2 ** 2 * bracket(tables.HCMA_III_BRACKET_24) * h2 * h4
            - 4 * h1 * C2 ** 2 * h3 * A2 ** 2
            + (-B3 ** 2 * C2 ** 2 - B4 ** 2 * C2 ** 2) * h2 * h3
            - 16 * h1 * H2 ** 2 * h4 * A2 ** 2
            - 4 * h3 * C2 ** 2 * h4 * H2 ** 2)


def _equal_pairs(v, h):
    # sum of (x2 y3 - x3 y2)^2 over term pairs
    a, b, c, d = ([v[f"{x}2"], v[f"{x}3"]] for x in "abcd")
    h1, h2, h3, h4 = h
    return ((b[0] * d[1] - b[1] * d[0]) ** 2 * h2 * h4 + (b[0] * c[1] - b[1] * c[0]) ** 2 * h2 * h3
            + (a[0] * d[1] - a[1] * d[0]) ** 2 * h1 * h4 + (c[0] * a[1] - c[1] * a[0]) ** 2 * h1 * h3
            + (a[0] * b[1] - a[1] * b[0]) ** 2 * h1 * h2 + (c[0] * d[1] - c[1] * d[0]) ** 2 * h3 * h4)


def _table_pairs(tabs, v, h, den):
    return sum(eval_table(t, v) * h[i] * h[j] / den for t, (i, j) in zip(tabs, PAIRS))


def _series_condition(kind, rows, h):
    al = [r[0] for r in rows]
    ga = [r[1] for r in rows]
    ze = [r[2] for r in rows]
    S = lambda xs: sum(x * hj for x, hj in zip(xs, h))
    if kind in ("equal", "high2"):
        return (S([z ** 2 for z in ze]) * S([g ** 2 for g in ga])
                - S([g * z for g, z in zip(ga, ze)]) ** 2)
    if kind == "high1":
        return (S([g ** 4 / a ** 2 for g, a in zip(ga, al)]) * S([g ** 2 for g in ga])
                - S([g ** 3 / a for g, a in zip(ga, al)]) ** 2)
    s2 = [(a ** 2 + g ** 2) for a, g in zip(al, ga)]
    return (S([(a + g) ** 2 for a, g in zip(al, ga)]) * S([q ** 2 / g ** 2 for q, g in zip(s2, ga)])
            - S([q * (a + g) / g for q, a, g in zip(s2, al, ga)]) ** 2)


def closed_form_condition(cid, p, d2, n=None):
    """Closed-form Legendre condition of a class, given g'' of every term.

    Returns None for classes without one.
    """
    from .catalog import KIND_OF, build_terms, get_class
    cdef = get_class(cid)
    h = list(d2)
    if cdef.id == "HCMA_I":
        a2, A, d1_, d2_ = p["a2"], p["A"], p["d1"], p["d2"]
        h1, h2, h3, h4 = h
        return (a2 ** 2 * (d1_ - d2_) ** 2 * h1 * (h4 + h2)
                - A ** 2 * (d1_ + d2_) ** 2 * h3 * (h4 + h2)
                + (d1_ ** 2 - d2_ ** 2) ** 2 * h2 * h4 - 4 * a2 ** 2 * A ** 2 * h1 * h3)
    if cdef.id == "HCMA_II":
        return p["d4"] ** 4 * h[2] * h[3]
    if cdef.id == "HCMA_III":
        return _hcma3_condition(p, h)
    if cdef.id not in KIND_OF:
        return None
    kind = KIND_OF[cdef.id]
    rows = [t.coeffs for t in build_terms(cdef, p, n).terms]
    if cdef.series:
        return _series_condition(kind, rows, h)
    v = abcd(rows)
    if kind in ("equal", "high2"):
        return _equal_pairs(v, h)
    if kind == "high1":
        den = v["a1"] ** 2 * v["b1"] ** 2 * v["c1"] ** 2 * v["d1"] ** 2
        return _table_pairs(tables.HIGH_SYMM_I_LEGENDRE, v, h, den)
    den = v["a2"] ** 2 * v["b2"] ** 2 * v["c2"] ** 2 * v["d2"] ** 2
    return _table_pairs(tables.MIXED_LEGENDRE_N, v, h, den)


@dataclass
class ConditionReport:
    generic_value: complex
    closed_form_value: complex | None
    satisfied: bool
    region_factors: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def zero_factors(self):
        return [name for name, v, ok in self.region_factors if not ok]

    def to_json(self):
        cx = lambda z: None if z is None else [complex(z).real, complex(z).imag]
        return {"generic": cx(self.generic_value), "closedForm": cx(self.closed_form_value),
                "satisfied": bool(self.satisfied),
                "regionFactors": [{"name": n, "value": cx(v), "nonzero": bool(ok)}
                                  for n, v, ok in self.region_factors],
                "notes": list(self.notes)}


def noninvariance_verdict(inst, point) -> ConditionReport:
    """Non-invariance check at one point: the four arguments must be independent."""
    point = np.asarray(point, dtype=complex)
    factors = []
    for label, value, printed in inst.cdef.side(inst.params, inst.built):
        if not printed:
            factors.append((f"determinant factor {label}", complex(value), nonzero(value)))
    try:
        M = jacobian_matrix(inst.ansatz, point)
    except ArityError as e:
        return ConditionReport(0j, None, False, factors, [str(e)])
    _, d1, _ = inst.ansatz.derivs(point)
    for j in range(4):
        name = f"g'_{j + 1}"
        if inst.cdef.id == "CMA_SQ" and j < 2:
            name = f"Gamma_{j + 1}"
        factors.append((name, complex(d1[j]), nonzero(d1[j])))
    gen = complex(np.linalg.det(M))
    scale = float(np.prod(np.linalg.norm(M, axis=1)))
    closed = jacobian_det_closed(inst.cdef, inst.params, d1[:4], inst.n)
    ok = nonzero(gen, scale) and all(f[2] for f in factors)
    if closed is not None:
        ok = ok and nonzero(closed, scale)
    notes = []
    if not all(f[2] for f in factors if f[0].startswith("g'")):
        notes.append("g'=0: non-invariance untestable")
    return ConditionReport(gen, None if closed is None else complex(closed), bool(ok), factors, notes)


def legendre_report(inst, points):
    """Generic and closed-form Legendre conditions at a batch of points."""
    eq = inst.cdef.legendre_eq
    if eq is None:
        return None
    jet = inst.equation_jet(eval_jet(inst.ansatz, points))
    gen = legendre_condition(eq, jet)
    scale = legendre_scale(eq, jet)
    _, _, d2 = inst.ansatz.derivs(points)
    if closed_form_condition(inst.cdef, inst.params, d2.reshape(-1, d2.shape[-1])[0], inst.n) is None:
        return gen, scale, None
    closed = np.array([complex(v) if v is not None else np.nan for v in
                       (closed_form_condition(inst.cdef, inst.params, row, inst.n)
                        for row in d2.reshape(-1, d2.shape[-1]))]).reshape(gen.shape)
    return gen, scale, closed
