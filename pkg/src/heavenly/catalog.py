"""Solution classes: free parameters -> coefficients, term kinds and side conditions.

Each class is described by a ``ClassDef``. Its ``build`` function works on
plain Python complex numbers as well as on exact ``RatComplex`` values, so
the same formulas serve numerical verification and exact certification.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .ansatz import Ansatz, ArbitraryG, ConjugateOf, Square, real_slice
from .errors import ConstraintError, DomainError, UnknownClass
from .exact import RatComplex, exact_sqrt
from .jets import LinearForm, ScalarFn
from . import pde

DEFAULT_SERIES_N = 6
SERIES_N_RANGE = (4, 16)

# eta = p + t, xi = p - t: rows give the ansatz coordinates (eta, xi, q, y)
# in terms of the equation coordinates (p, q, t, y)
MIXED_TO_LEGENDRE = np.array([[1, 0, 1, 0], [1, 0, -1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])


def conj(x):
    return x.conjugate()


def sqrt(x):
    if isinstance(x, (RatComplex, Fraction, int)):
        try:
            return exact_sqrt(x)
        except DomainError:
            x = complex(x)  # not a rational square: continue in floating point
    return cmath.sqrt(x)


def _is_zero(x, scale=1.0):
    if isinstance(x, (RatComplex, Fraction, int)):
        return x == 0
    return abs(complex(x)) <= 1e-12 * (1 + scale)


@dataclass(frozen=True)
class Param:
    name: str
    domain: str = "complex"  # real, complex or sign
    nonzero: bool = False     # appears in a denominator


@dataclass(frozen=True)
class Term:
    coeffs: tuple
    offset: object = 0
    kind: object = "g"  # "g" complex arbitrary, "r" real arbitrary, "sq", ("conj", k)
    amp: object = 1


@dataclass
class Built:
    terms: list
    beta1: object = 0
    derived: dict = field(default_factory=dict)
    pde_params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ClassDef:
    id: str
    params: Callable          # n -> list[Param]
    build: Callable           # (p, n) -> Built
    equation: str
    system: str | None = None
    transform: np.ndarray | None = None
    real: bool = False
    side: Callable = None     # (p, built) -> list[(label, value, printed)]
    series: bool = False
    default_n: int = 4
    legendre_eq: str | None = None
    exact: bool = True
    mutant: tuple = (0, 3)    # (term, slot) perturbed in mutation tests
    note: str = ""

    @property
    def cli_name(self):
        return self.id.lower().replace("_", "-")


# ---------------------------------------------------------------- builders

def _betas(names, domain="complex"):
    return [Param(b, domain) for b in names]


def _cma_params(n):
    return [Param("a2", nonzero=True), Param("d3")] + \
        _betas(["beta1", "beta2", "beta3"], "real") + [Param("beta4")]


def _cma_build(p, n):
    a2, d3 = p["a2"], p["d3"]
    a2b, d3b = conj(a2), conj(d3)
    terms = [
        Term((a2b, a2, 0, 0), p["beta2"], "sq"),
        Term((1, 1, 1 / (2 * a2b), 1 / (2 * a2)), p["beta3"], "sq"),
        Term((0, 1 / (2 * a2b), 0, d3b), p["beta4"], "g"),
        Term((1 / (2 * a2), 0, d3, 0), conj(p["beta4"]), ("conj", 2)),
    ]
    return Built(terms, p["beta1"], {"beta5": conj(p["beta4"])})


def cma_det_factor(a2, d3):
    a2b, d3b = conj(a2), conj(d3)
    return (4 * d3 * d3b * a2b ** 2 * a2 - d3 * a2b
            - 4 * a2b * a2 ** 2 * d3 * d3b + d3b * a2)


def _cma_side(p, b):
    return [("a2", p["a2"], True),
            ("4*d3*conj(d3)*conj(a2)^2*a2 - d3*conj(a2) - 4*conj(a2)*a2^2*d3*conj(d3) + conj(d3)*a2",
             cma_det_factor(p["a2"], p["d3"]), False)]


def _hcma1_params(n):
    return [Param("A", "real"), Param("a2", "real"), Param("d1", "real", True),
            Param("d2", "real", True), Param("d4", "real"),
            Param("beta1", "real"), Param("beta2", "real"), Param("beta3"), Param("beta4", "real")]


def _hcma1_build(p, n):
    A, a2, d1, d2, d4 = (p[k] for k in ("A", "a2", "d1", "d2", "d4"))
    K = (d1 * d2 - d2 ** 2 - d1 * d4) / (d1 * d2)
    E = (d1 ** 2 - d2 ** 2 - d1 * d4) / d2
    F = (d1 * d2 + d2 ** 2 + d1 * d4) / (d1 * d2)
    terms = [
        Term((a2, a2, -a2 * K, -a2 * K), p["beta2"], "r"),
        Term((d2, d1, d4, -E), p["beta3"], "g"),
        Term((-1j * A, 1j * A, -1j * A * F, 1j * A * F), p["beta4"], "r"),
        Term((d1, d2, -E, d4), conj(p["beta3"]), ("conj", 1)),
    ]
    return Built(terms, p["beta1"], {"beta5": conj(p["beta3"])})


def hcma1_det_factor(d1, d2):
    return d1 ** 6 - d2 ** 6 - 3 * d1 ** 4 * d2 ** 2 + 3 * d1 ** 2 * d2 ** 4


def _hcma1_side(p, b):
    return [("d1*d2", p["d1"] * p["d2"], True),
            ("d1^6 - d2^6 - 3*d1^4*d2^2 + 3*d1^2*d2^4", hcma1_det_factor(p["d1"], p["d2"]), False),
            ("a2*A", p["a2"] * p["A"], False)]


def _hcma2_params(n):
    return [Param("a4"), Param("b4"), Param("d3", "real"), Param("d4", "real"),
            Param("beta1", "real"), Param("beta2", "real"), Param("beta3", "real"), Param("beta4")]


def _hcma2_build(p, n):
    a4, b4, d3, d4 = p["a4"], p["b4"], p["d3"], p["d4"]
    terms = [
        Term((0, 0, conj(a4), a4), p["beta2"], "r"),
        Term((0, 0, conj(b4), b4), p["beta3"], "r"),
        Term((0, d4, d4, d3), p["beta4"], "g"),
        Term((d4, 0, d3, d4), conj(p["beta4"]), ("conj", 2)),
    ]
    return Built(terms, p["beta1"], {"beta5": conj(p["beta4"])})


def _hcma2_side(p, b):
    a4, b4 = p["a4"], p["b4"]
    return [("d4", p["d4"], False),
            ("conj(a4)*b4 - a4*conj(b4)", conj(a4) * b4 - a4 * conj(b4), False)]


def _hcma3_params(n):
    return [Param(k, "real") for k in ("A2", "B3", "B4", "C2", "H2")] + \
        _betas([f"beta{j}" for j in range(1, 6)], "real")


def hcma3_radicals(B3, B4):
    R = sqrt(B3 ** 2 + B4 ** 2)
    D = B3 - B4 + R
    return R, D


def _hcma3_build(p, n):
    A2, B3, B4, C2, H2 = (p[k] for k in ("A2", "B3", "B4", "C2", "H2"))
    R, D = hcma3_radicals(B3, B4)
    if _is_zero(D):
        raise DomainError("B3 - B4 + sqrt(B3^2 + B4^2) = 0")
    N1 = R / 2 * (1 + 1j * (B3 + B4 - R) / D)
    terms = [
        Term((A2 * (1 + 1j), A2 * (1 - 1j), 2j * A2, -2j * A2), p["beta2"], "r"),
        Term((N1, conj(N1), B3 + 1j * B4, B3 - 1j * B4), p["beta3"], "r"),
        Term((1j * C2, -1j * C2, 0, 0), p["beta4"], "r"),
        Term((H2 * (-1 + 1j), H2 * (-1 - 1j), 2j * H2, -2j * H2), p["beta5"], "r"),
    ]
    return Built(terms, p["beta1"], {"R": R, "D": D, "N1": N1})


def _hcma3_side(p, b):
    B3, B4 = p["B3"], p["B4"]
    R = sqrt(B3 ** 2 + B4 ** 2)
    return [("B3 - B4 + sqrt(B3^2 + B4^2)", B3 - B4 + R, True),
            ("A2*B3*C2*H2", p["A2"] * B3 * p["C2"] * p["H2"], False)]


LETTERS = "abcd"


def _h2_params(free, nonzero):
    def params(n):
        out = []
        for x in LETTERS:
            for k in free:
                out.append(Param(f"{x}{k}", "complex", k in nonzero))
        return out + _betas([f"beta{j}" for j in range(1, 6)])
    return params


def _rel_equal(g, z):
    return g * (g + z) / z, -g * (g + z) ** 2 / z ** 2


def _rel_high1(a, g):
    return g ** 2 / a, -a ** 2 / g


def _rel_high2(g, z):
    return g ** 2 / z, -g ** 3 / z ** 2


def _rel_mixed(a, g):
    return (a ** 2 + g ** 2) / g, -(a ** 2 * g + g ** 3 - a ** 3 - a * g ** 2) / g ** 2


def _row(kind, u, v):
    # assemble (x1, x2, x3, x4) from the two free entries of a relation
    if kind == "equal":
        x1, x4 = _rel_equal(u, v)
        return (x1, u, v, x4)
    if kind == "high1":
        x3, x4 = _rel_high1(u, v)
        return (u, v, x3, x4)
    if kind == "high2":
        x1, x4 = _rel_high2(u, v)
        return (x1, u, v, x4)
    x3, x4 = _rel_mixed(u, v)
    return (u, v, x3, x4)


_FREE = {"equal": ("2", "3"), "high1": ("1", "2"), "high2": ("2", "3"), "mixed": ("1", "2")}
_SERIES_FREE = {"equal": ("gamma", "zeta"), "high1": ("alpha", "gamma"),
                "high2": ("gamma", "zeta"), "mixed": ("alpha", "gamma")}
_SERIES_NONZERO = {"equal": ("zeta",), "high1": ("alpha", "gamma"),
                   "high2": ("zeta",), "mixed": ("gamma",)}
_NONZERO = {"equal": ("3",), "high1": ("1", "2"), "high2": ("3",), "mixed": ("2",)}
SERIES_NAMES = ("alpha", "gamma", "zeta", "lambda")


def _four_term_build(kind):
    u, v = _FREE[kind]

    def build(p, n):
        terms, derived = [], {}
        for j, x in enumerate(LETTERS):
            row = _row(kind, p[f"{x}{u}"], p[f"{x}{v}"])
            derived.update({f"{x}{m + 1}": row[m] for m in range(4)})
            terms.append(Term(row, p[f"beta{j + 2}"], "g"))
        return Built(terms, p["beta1"], derived)
    return build


def _series_params(kind):
    u, v = _SERIES_FREE[kind]
    nz = _SERIES_NONZERO[kind]

    def params(n):
        out = []
        for j in range(1, n + 1):
            out += [Param(f"{u}{j}", "complex", u in nz), Param(f"{v}{j}", "complex", v in nz),
                    Param(f"beta{j}")]
        return out
    return params


def _series_build(kind):
    u, v = _SERIES_FREE[kind]

    def build(p, n):
        terms, derived = [], {}
        for j in range(1, n + 1):
            row = _row(kind, p[f"{u}{j}"], p[f"{v}{j}"])
            derived.update({f"{SERIES_NAMES[m]}{j}": row[m] for m in range(4)})
            terms.append(Term(row, p[f"beta{j}"], "g"))
        return Built(terms, 0, derived)
    return build


def _denominator_side(kind, series):
    def side(p, b):
        out = []
        rows = [t.coeffs for t in b.terms]
        if series:
            nz = _SERIES_NONZERO[kind]
            for j in range(1, len(rows) + 1):
                for name in nz:
                    out.append((f"{name}{j}", p[f"{name}{j}"], True))
        else:
            idx = [int(k) - 1 for k in _NONZERO[kind]]
            labels = [f"{x}{i + 1}" for i in idx for x in LETTERS]
            val = 1
            for r in rows:
                for i in idx:
                    val = val * r[i]
            out.append(("*".join(labels), val, True))
        from .conditions import closed_det_polynomial
        out.append(("determinant polynomial", closed_det_polynomial(kind, rows[:4]), False))
        return out
    return side


def _asymm_params(with_B):
    def params(n):
        names = ["A"] + (["B"] if with_B else []) + ["a1", "a3", "b2", "b3", "c1", "c2", "c3",
                                                   "c4", "d2", "d3"]
        nz = {"A", "a3", "c1", "c4"}
        return [Param(k, "complex", k in nz) for k in names] + \
            _betas([f"beta{j}" for j in range(1, 6)])
    return params


def asymm_relations(A, B, a1, a3, c1, c2, c3, c4):
    Q = -B * a3 * c1 ** 2 + a1 * c1 * c3 * B + a1 * c3 * c4 * A
    C = -c3 * (B * c1 + A * c4) / c1 ** 2
    a2 = a1 * c2 * Q / (A * a3 * c1 ** 2 * c4)
    a4 = a1 * Q / (A * a3 * c1 ** 2)
    return C, a2, a4


def _asymm_build(with_B):
    def build(p, n):
        B = p["B"] if with_B else 0
        A, a1, a3 = p["A"], p["a1"], p["a3"]
        c = [p[f"c{i}"] for i in range(1, 5)]
        C, a2, a4 = asymm_relations(A, B, a1, a3, *c)
        rows = [(a1, a2, a3, a4), (0, p["b2"], p["b3"], 0), tuple(c), (0, p["d2"], p["d3"], 0)]
        terms = [Term(r, p[f"beta{j + 2}"], "g") for j, r in enumerate(rows)]
        derived = {"C": C, "a2": a2, "a4": a4, "b1": 0, "b4": 0, "d1": 0, "d4": 0}
        pp = {"A": A, "B": B, "C": C} if with_B else {"A": A, "C": C}
        return Built(terms, p["beta1"], derived, pp)
    return build


def _asymm_side(with_B):
    def side(p, b):
        B = p["B"] if with_B else 0
        A, a1, a3 = p["A"], p["a1"], p["a3"]
        c1, c2, c3, c4 = (p[f"c{i}"] for i in range(1, 5))
        last = -c4 * A * a3 * c1 - B * a3 * c1 ** 2 + a1 * c1 * c3 * B + a1 * c3 * c4 * A
        return [("A*c1*a3*c4", A * c1 * a3 * c4, True),
                ("a1", a1, False),
                ("b2*d3 - b3*d2", p["b2"] * p["d3"] - p["b3"] * p["d2"], False),
                ("-c4*A*a3*c1 - B*a3*c1^2 + a1*c1*c3*B + a1*c3*c4*A", last, False)]
    return side


def _sheftel_params(n):
    out = []
    for j in range(1, n + 1):
        out += [Param(f"A{j}", "real", True), Param(f"B{j}", "real"), Param(f"C{j}", "real"),
                Param(f"H{j}", "real"), Param(f"s{j}", "sign")]
    return out


def sheftel_terms(A, B, C, H, s):
    """The two exponential pieces of one summand, as (coeffs, amplitude) pairs."""
    k = s * sqrt(A * (A - B))
    out = []
    for sigma in (1, -1):
        coeffs = (k, sigma * 1j * A, sigma * 1j * B, k * B / A - sigma * 1j * B)
        out.append((coeffs, C / 2 + sigma * H / 2j))
    return out


def _sheftel_build(p, n):
    terms = []
    for j in range(1, n + 1):
        for coeffs, amp in sheftel_terms(*(p[f"{k}{j}"] for k in "ABCHs")):
            terms.append(Term(coeffs, 0, "g", amp))
    return Built(terms, 0)


def _sheftel_side(p, b):
    return [(f"A{j}", p[f"A{j}"], True) for j in range(1, len(b.terms) // 2 + 1)]


def _malykh_params(n):
    out = [Param("a", "complex", True), Param("b")]
    for j in range(1, n + 1):
        out += [Param(f"phi{j}", "real"), Param(f"alpha{j}", "real", True),
                Param(f"beta{j}", "real")]
    return out


def malykh_form(a, b, phi):
    a, b = complex(a), complex(b)
    e = cmath.exp(1j * phi)
    g = 2 * (a * e).real * e
    ab = conj(a)
    dl = 1j * (g ** 2 - (ab + 1j * conj(b)) * g) / ab
    return (g, conj(g), dl, conj(dl))


def _malykh_build(p, n):
    terms = [Term(malykh_form(p["a"], p["b"], float(complex(p[f"phi{j}"]).real)),
                  p[f"beta{j}"], "r", p[f"alpha{j}"]) for j in range(1, n + 1)]
    return Built(terms, 0)


def _malykh_side(p, b):
    return [("a", p["a"], True)]


def _hs_def(cid, kind, series, system, legendre_eq="heavenly2-legendre", equation=None,
            transform=None):
    if series:
        params, build = _series_params(kind), _series_build(kind)
    else:
        params = _h2_params(_FREE[kind], _NONZERO[kind])
        build = _four_term_build(kind)
    return ClassDef(cid, params, build, equation or "heavenly2-legendre", system, transform,
                    side=_denominator_side(kind, series), series=series,
                    default_n=DEFAULT_SERIES_N if series else 4, legendre_eq=legendre_eq)


CLASSES = {c.id: c for c in [
    ClassDef("CMA_SQ", _cma_params, _cma_build, "cma", real=True, side=_cma_side,
             mutant=(1, 2)),
    ClassDef("HCMA_I", _hcma1_params, _hcma1_build, "hcma-legendre", real=True,
             side=_hcma1_side, legendre_eq="hcma-legendre", mutant=(0, 2)),
    ClassDef("HCMA_II", _hcma2_params, _hcma2_build, "hcma-legendre", real=True,
             side=_hcma2_side, legendre_eq="hcma-legendre", mutant=(2, 1)),
    ClassDef("HCMA_III", _hcma3_params, _hcma3_build, "hcma-legendre", real=True,
             side=_hcma3_side, legendre_eq="hcma-legendre", mutant=(1, 0)),
    _hs_def("H2_EQUAL", "equal", False, "eq-symm"),
    _hs_def("H2_HIGH_I", "high1", False, "high-symm"),
    _hs_def("H2_HIGH_II", "high2", False, "high-symm"),
    _hs_def("H2_SERIES_EQUAL", "equal", True, "eq-symm"),
    _hs_def("H2_SERIES_HIGH_I", "high1", True, "high-symm"),
    _hs_def("H2_SERIES_HIGH_II", "high2", True, "high-symm"),
    _hs_def("MIXED_CLASS", "mixed", False, "mixed-lin", "mixed-legendre", "mixed-legendre",
            MIXED_TO_LEGENDRE),
    _hs_def("MIXED_SERIES", "mixed", True, "mixed-lin", "mixed-legendre", "mixed-legendre",
            MIXED_TO_LEGENDRE),
    ClassDef("ASYMM_CLASS", _asymm_params(True), _asymm_build(True), "asymm",
             side=_asymm_side(True)),
    ClassDef("EVOLUTION_CLASS", _asymm_params(False), _asymm_build(False), "evolution2",
             side=_asymm_side(False)),
    ClassDef("REF_SHEFTEL", _sheftel_params, _sheftel_build, "mixed-legendre", "mixed-lin",
             MIXED_TO_LEGENDRE, side=_sheftel_side, series=True, default_n=2,
             legendre_eq="mixed-legendre", exact=False),
    ClassDef("REF_MALYKH_EXP", _malykh_params, _malykh_build, "hcma-legendre", real=True,
             side=_malykh_side, series=True, default_n=4, legendre_eq="hcma-legendre",
             exact=False),
]}

# which closed-form tables apply to the four-term classes
KIND_OF = {"H2_EQUAL": "equal", "H2_HIGH_I": "high1", "H2_HIGH_II": "high2",
           "H2_SERIES_EQUAL": "equal", "H2_SERIES_HIGH_I": "high1",
           "H2_SERIES_HIGH_II": "high2", "MIXED_CLASS": "mixed", "MIXED_SERIES": "mixed"}


def get_class(cid) -> ClassDef:
    if isinstance(cid, ClassDef):
        return cid
    key = str(cid).upper().replace("-", "_")
    if key not in CLASSES:
        raise UnknownClass(f"unknown class {cid!r}")
    return CLASSES[key]


def resolve_n(cdef: ClassDef, n=None):
    if not cdef.series:
        return 4
    n = cdef.default_n if n is None else int(n)
    lo = 1 if cdef.id == "REF_SHEFTEL" else SERIES_N_RANGE[0]
    if not lo <= n <= SERIES_N_RANGE[1]:
        raise DomainError(f"series length {n} outside {lo}..{SERIES_N_RANGE[1]}")
    return n


# ---------------------------------------------------------------- instances

@dataclass
class Instance:
    cdef: ClassDef
    params: dict          # floating-point values used for evaluation
    n: int
    built: Built
    ansatz: Ansatz
    pde: pde.PdeSpec
    system: pde.SystemSpec | None
    source_params: dict = field(default_factory=dict)  # as given (possibly exact)

    @property
    def id(self):
        return self.cdef.id

    @property
    def rows(self):
        return np.array([[complex(c) for c in t.coeffs] for t in self.built.terms])

    def equation_jet(self, jet):
        """Re-express an ansatz-coordinate jet in the bound equation's coordinates."""
        if self.cdef.transform is None:
            return jet
        return jet.transform(self.cdef.transform)

    def random_points(self, rng, count):
        if self.cdef.real:
            return real_slice(random_polydisk(rng, count, 2))
        return random_polydisk(rng, count, 4)

    def coefficient_table(self):
        names = coefficient_names(self.n, self.cdef.series)
        return {nm: complex(c) for nm, c in zip(names, (c for t in self.built.terms
                                                       for c in t.coeffs))}


def coefficient_names(n, series=False):
    if series or n != 4:
        return [f"{s}{j}" for j in range(1, n + 1) for s in SERIES_NAMES]
    return [f"{x}{m}" for x in LETTERS for m in range(1, 5)]


def random_polydisk(rng, count, dim=4):
    r = np.sqrt(rng.uniform(0, 1, (count, dim)))
    phase = rng.uniform(0, 2 * np.pi, (count, dim))
    return r * np.exp(1j * phase)


def _check_domains(cdef, p, n):
    out = []
    for prm in cdef.params(n):
        if prm.name not in p:
            out.append(f"missing parameter {prm.name}")
            continue
        v = p[prm.name]
        if prm.domain == "real" and not _is_zero(complex(v).imag):
            out.append(f"{prm.name} must be real")
        if prm.domain == "sign" and complex(v) not in (1, -1):
            out.append(f"{prm.name} must be +1 or -1")
        if prm.nonzero and _is_zero(v):
            out.append(f"{prm.name} must be nonzero")
    extra = set(p) - {prm.name for prm in cdef.params(n)}
    if extra:
        out.append(f"unknown parameters {sorted(extra)}")
    return out


def build_terms(cid, p, n=None) -> Built:
    cdef = get_class(cid)
    n = resolve_n(cdef, n)
    try:
        return cdef.build(p, n)
    except ZeroDivisionError as e:
        raise DomainError(f"zero denominator in the {cdef.id} relations") from e


def constraint_check(cid, p, n=None, determinant=True):
    """List of violated domain tags and side conditions (empty if admissible).

    With ``determinant`` False the factors that only matter for
    non-invariance (not for the instance being a solution) are skipped.
    """
    cdef = get_class(cid)
    n = resolve_n(cdef, n)
    bad = _check_domains(cdef, p, n)
    if bad:
        return bad
    try:
        built = build_terms(cdef, p, n)
    except DomainError as e:
        return [str(e)]
    for label, value, printed in cdef.side(p, built):
        if (printed or determinant) and _is_zero(value):
            bad.append(f"{label} = 0")
    return bad


def _as_float(p):
    return {k: (v if isinstance(v, int) else complex(v)) for k, v in p.items()}


def _assign_fns(built, g):
    fns = list(g) if g else [ScalarFn("exp")]
    terms, i = [], 0
    for t in built.terms:
        if isinstance(t.kind, tuple):
            kind = ConjugateOf(t.kind[1])
        elif t.kind == "sq":
            kind = Square()
        else:
            fn = fns[i % len(fns)]
            i += 1
            if t.kind == "r" and not fn.is_real:
                raise DomainError(f"term needs a real-valued function, got {fn.describe()}")
            if t.amp != 1:
                fn = ScalarFn(fn.kind, fn.k, fn.amp * complex(t.amp), fn.coeffs)
            kind = ArbitraryG(fn)
        terms.append((LinearForm([complex(c) for c in t.coeffs], complex(t.offset)), kind))
    return Ansatz(complex(built.beta1), tuple(terms))


def instantiate(cid, p, g=None, n=None, check=True) -> Instance:
    """Build the ansatz for a class.

    ``g`` is a list of ScalarFn used for the arbitrary terms in order (cycled).
    With ``check`` a ConstraintError is raised for parameters outside their
    domains or violating a condition the class needs to exist; vanishing
    determinant factors are left to the non-invariance verdict.
    """
    cdef = get_class(cid)
    n = resolve_n(cdef, n)
    if check:
        bad = constraint_check(cdef, p, n, determinant=False)
        if bad:
            raise ConstraintError(bad)
    fp = _as_float(p)
    built = build_terms(cdef, fp, n)
    ansatz = _assign_fns(built, g)
    spec = pde.builtin_pde(cdef.equation, **{k: complex(v) for k, v in built.pde_params.items()})
    system = pde.builtin_system(cdef.system) if cdef.system else None
    return Instance(cdef, fp, n, built, ansatz, spec, system, dict(p))


# ---------------------------------------------------------------- sampling

def _draw_rational(rng, nonzero=False):
    while True:
        num = int(rng.integers(-9, 10))
        if num or not nonzero:
            return Fraction(num, int(rng.integers(1, 10)))


def _draw_param(rng, prm, bound=None):
    for _ in range(1000):
        if prm.domain == "sign":
            return int(rng.choice([-1, 1]))
        if prm.domain == "real":
            v = RatComplex(_draw_rational(rng, prm.nonzero))
        else:
            v = RatComplex(_draw_rational(rng), _draw_rational(rng))
            if prm.nonzero and not v:
                continue
        if bound is None or abs(complex(v)) <= bound:
            return v
    raise DomainError(f"could not draw {prm.name}")


def _pythagorean(rng, bound=None):
    # (B3, B4) with a rational norm: scale * (m^2 - k^2, 2 m k) up to signs and swap
    while True:
        m, k = int(rng.integers(1, 4)), int(rng.integers(0, 3))
        x, y = m * m - k * k, 2 * m * k
        if rng.integers(2):
            x, y = y, x
        s = Fraction(int(rng.integers(1, 4)), int(rng.integers(1, 4)))
        if bound is None or s * (m * m + k * k) <= bound:
            break
    return (RatComplex(s * x * int(rng.choice([-1, 1]))),
            RatComplex(s * y * int(rng.choice([-1, 1]))))


def _term_of(cdef, name):
    """Index of the term a free parameter belongs to, for term-wise resampling."""
    if cdef.id in KIND_OF and not name.startswith("beta"):
        if cdef.series:
            return int(name.lstrip("abcdefghijklmnopqrstuvwxyz")) - 1
        return LETTERS.index(name[0])
    return None


def _refine_terms(cdef, p, n, rng, bound, fixed, tries=200):
    # redraw the free parameters of any term whose coefficients exceed the bound
    params = [prm for prm in cdef.params(n) if prm.name not in fixed]
    groups = {}
    for prm in params:
        j = _term_of(cdef, prm.name)
        if j is not None:
            groups.setdefault(j, []).append(prm)
    for j, group in groups.items():
        for _ in range(tries):
            try:
                row = build_terms(cdef, p, n).terms[j].coeffs
                if max(abs(complex(c)) for c in row) <= bound:
                    break
            except DomainError:
                pass
            for prm in group:
                p[prm.name] = _draw_param(rng, prm, bound)


def _distinct_forms(built):
    rows = [tuple(complex(c) for c in t.coeffs) for t in built.terms]
    return len(set(rows)) == len(rows)


def sample_params(cid, rng, n=None, exact=True, bound=None, fixed=None, max_attempts=100):
    """Draw admissible rational parameters (small numerators and denominators).

    With ``bound`` set, every free parameter, derived coefficient and offset
    is kept at most ``bound`` in modulus. With ``exact`` False the values are
    converted to floats.
    """
    cdef = get_class(cid)
    n = resolve_n(cdef, n)
    fixed = dict(fixed or {})
    owners = {}
    for prm in cdef.params(n):
        j = _term_of(cdef, prm.name)
        if j is not None:
            owners.setdefault(j, []).append(prm.name)
    frozen = {j for j, names in owners.items() if all(k in fixed for k in names)}
    for _ in range(max_attempts):
        p = {}
        for prm in cdef.params(n):
            if prm.name in fixed:
                p[prm.name] = fixed[prm.name]
            elif prm.name.startswith("phi"):
                p[prm.name] = RatComplex(Fraction(int(rng.integers(0, 628)), 100))
            else:
                p[prm.name] = _draw_param(rng, prm, bound)
        if cdef.id == "HCMA_III" and not {"B3", "B4"} & set(fixed):
            p["B3"], p["B4"] = _pythagorean(rng, bound)
        if bound is not None:
            _refine_terms(cdef, p, n, rng, bound, fixed)
        if constraint_check(cdef, p, n):
            continue
        built = build_terms(cdef, p, n)
        if not _distinct_forms(built):
            continue
        if bound is not None:
            # rows fixed entirely by the caller are exempt from the bound
            terms = [t for j, t in enumerate(built.terms) if j not in frozen]
            mags = [abs(complex(c)) for t in terms for c in t.coeffs]
            mags += [abs(complex(t.offset)) for t in terms]
            mags += [abs(complex(v)) for v in built.pde_params.values()]
            if max(mags) > bound:
                continue
        return p if exact else _as_float(p)
    raise ConstraintError([f"no admissible {cdef.id} draw in {max_attempts} attempts"])


def complete_params(cid, given, rng, n=None, bound=2.5, max_attempts=100):
    """Fill parameters missing from ``given`` with random draws.

    Prefers admissible completions with moderate coefficients; if the given
    values themselves violate a side condition, a completion is still
    returned so the violation can be reported.
    """
    cdef = get_class(cid)
    n = resolve_n(cdef, n)
    for b in (bound, None):
        try:
            return sample_params(cdef, rng, n, exact=True, bound=b, fixed=given,
                                 max_attempts=max_attempts)
        except (ConstraintError, DomainError):
            pass
    p = dict(given)
    for prm in cdef.params(n):
        if prm.name not in p:
            p[prm.name] = _draw_param(rng, prm)
    return p


def format_value(v):
    """Exact, human-readable form of a parameter value."""
    if isinstance(v, RatComplex):
        if v.im == 0:
            return str(v.re)
        sign = "+" if v.im >= 0 else "-"
        return f"{v.re}{sign}{abs(v.im)}i"
    if isinstance(v, (int, Fraction)):
        return str(v)
    z = complex(v)
    return repr(z.real) if z.imag == 0 else f"{z.real!r}{z.imag:+}i"


def parse_params(text):
    """Parse ``a2=1,a3=1+2i`` into a dict of exact values where possible."""
    out = {}
    if not text:
        return out
    for item in text.split(","):
        if not item.strip():
            continue
        if "=" not in item:
            raise ValueError(f"expected name=value, got {item!r}")
        k, v = (s.strip() for s in item.split("=", 1))
        out[k] = parse_number(v)
    return out


def parse_number(v):
    if isinstance(v, (int, float, complex, Fraction, RatComplex)):
        return v
    s = str(v).strip().replace(" ", "")
    try:
        return RatComplex(Fraction(s))
    except ValueError:
        pass
    if "/" in s:
        raise ValueError(f"cannot parse {v!r}")
    return RatComplex(complex(s.replace("i", "j")))


# ---------------------------------------------------------------- verification

@dataclass
class VerifyReport:
    class_id: str
    points: int
    max_residual: float
    max_system_residual: float | None
    max_reality_defect: float | None
    flags: list

    def to_json(self):
        return {"class": self.class_id, "points": self.points,
                "maxResidual": self.max_residual, "maxSystemResidual": self.max_system_residual,
                "maxRealityDefect": self.max_reality_defect, "flags": list(self.flags)}


def verify_instance(cid, p, g=None, points=None, n=None, rng=None, count=100) -> VerifyReport:
    """Residuals of the bound equation (and linear system) over a batch of points.

    ``points`` are in the ansatz coordinates; if omitted, ``count`` random points
    are drawn from ``rng`` (real-slice points for real classes).
    """
    from .ansatz import eval_jet
    inst = cid if isinstance(cid, Instance) else instantiate(cid, p, g, n)
    if points is None:
        points = inst.random_points(rng if rng is not None else np.random.default_rng(0), count)
    points = np.asarray(points, dtype=complex)
    jet = eval_jet(inst.ansatz, points)
    res = pde.residual(inst.pde, inst.equation_jet(jet))
    sys_res = None
    if inst.system is not None:
        sys_res = float(np.max(np.abs(pde.residual_system(inst.system, jet))))
    defect = None
    if inst.cdef.real:
        defect = float(np.max(np.abs(jet.val.imag)))
    flags = []
    _, d1, _ = inst.ansatz.derivs(points)
    if np.any(np.all(d1 == 0, axis=tuple(range(d1.ndim - 1)))):
        flags.append("g'=0: non-invariance untestable")
    return VerifyReport(inst.id, int(points.reshape(-1, 4).shape[0]), float(np.max(np.abs(res))),
                        sys_res, defect, flags)
