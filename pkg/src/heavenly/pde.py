"""PDEs and linear systems written as data over Hessian entries.

A spec is ``sum q * H[a] * H[b] + sum l * H[a] + constant`` where ``a`` and
``b`` index entries of the (symmetric) Hessian. Equations whose right-hand
side is a parameter theta store ``-theta`` as the constant, so a solution is
always a zero of the residual.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import UnknownEquation


def hidx(mu, nu):
    return (mu, nu) if mu <= nu else (nu, mu)


def _merge(items):
    # combine duplicate keys; drop zeros that are plain numbers
    out = {}
    for key, c in items:
        out[key] = out[key] + c if key in out else c
    return tuple((k, c) for k, c in sorted(out.items())
                 if not (isinstance(c, (int, float, complex)) and c == 0))


@dataclass(frozen=True)
class PdeSpec:
    quad: tuple = ()
    lin: tuple = ()
    constant: object = 0
    coord_names: tuple = ("x1", "x2", "x3", "x4")
    name: str = ""

    def __post_init__(self):
        quad = []
        for a, b, c in self.quad:
            a, b = hidx(*a), hidx(*b)
            quad.append(((min(a, b), max(a, b)), c))
        lin = [(hidx(*a), c) for a, c in self.lin]
        object.__setattr__(self, "quad", tuple((a, b, c) for (a, b), c in _merge(quad)))
        object.__setattr__(self, "lin", _merge(lin))
        object.__setattr__(self, "coord_names", tuple(self.coord_names))

    @property
    def is_linear(self):
        return not self.quad

    def __add__(self, other: "PdeSpec") -> "PdeSpec":
        return PdeSpec(self.quad + other.quad, self.lin + other.lin,
                       self.constant + other.constant, self.coord_names,
                       f"{self.name}+{other.name}")

    def index(self, label):
        return self.coord_names.index(label)


@dataclass(frozen=True)
class SystemSpec:
    equations: tuple
    name: str = ""

    def __post_init__(self):
        if any(not e.is_linear for e in self.equations):
            raise ValueError("system members must be linear in the Hessian")

    @property
    def coord_names(self):
        return self.equations[0].coord_names


def residual(spec: PdeSpec, jet) -> np.ndarray:
    H = jet.hess
    r = np.zeros(H.shape[:-2], complex) + complex(spec.constant)
    for (a, b, c) in spec.quad:
        r = r + complex(c) * H[..., a[0], a[1]] * H[..., b[0], b[1]]
    for a, c in spec.lin:
        r = r + complex(c) * H[..., a[0], a[1]]
    return r


def residual_system(system: SystemSpec, jet) -> np.ndarray:
    """Residuals of every member equation, stacked along the last axis."""
    return np.stack([residual(e, jet) for e in system.equations], axis=-1)


def _builder(coords):
    ix = {c: i for i, c in enumerate(coords)}

    def H(pair):
        return hidx(ix[pair[0]], ix[pair[1]])

    def make(quad=(), lin=(), const=0, name=""):
        q = [(H(a), H(b), c) for a, b, c in quad]
        l = [(H(a), c) for a, c in lin]
        return PdeSpec(tuple(q), tuple(l), const, tuple(coords), name)
    return make


# Pair labels below are two-letter strings of coordinate names; coordinate
# names are single characters within each equation.
def _cma(theta=1, name="cma"):
    m = _builder("aAbB")  # z1, conj z1, z2, conj z2
    spec = m(quad=[("aA", "bB", 1), ("aB", "Ab", -1)], const=-theta, name=name)
    return PdeSpec(spec.quad, spec.lin, spec.constant, ("z1", "z1b", "z2", "z2b"), name)


def _hcma_legendre():
    m = _builder("pPzZ")
    spec = m(quad=[("pP", "zZ", 1), ("pZ", "Pz", -1), ("pP", "pP", -1), ("pp", "PP", 1)],
             name="hcma-legendre")
    return PdeSpec(spec.quad, (), 0, ("p", "pb", "z2", "z2b"), spec.name)


def _heavenly2():
    m = _builder("xywz")
    return m(quad=[("xx", "yy", 1), ("xy", "xy", -1)], lin=[("xw", 1), ("yz", 1)],
             name="heavenly2")


def _heavenly2_legendre():
    m = _builder("xrtz")
    return m(quad=[("tt", "xx", 1), ("tt", "rz", 1), ("xt", "rr", 1), ("xt", "xt", -1),
                   ("rt", "rx", -1), ("rt", "tz", -1)], name="heavenly2-legendre")


def _mixed(theta=1):
    m = _builder("txyz")
    return m(quad=[("ty", "xz", 1), ("tz", "xy", -1), ("tt", "xx", 1), ("tx", "tx", -1)],
             const=-theta, name="mixed")


def _mixed_legendre(theta=1):
    m = _builder("pqty")
    return m(quad=[("tq", "py", 1), ("pq", "ty", -1), ("tt", "qq", 1), ("tq", "tq", -1),
                   ("pp", "qq", theta), ("pq", "pq", -theta)], name="mixed-legendre")


def _asymm(A=1, B=1, C=1, name="asymm"):
    # coordinates follow the ansatz variable order x1..x4 = x, y, z, t
    m = _builder("xyzt")
    return m(quad=[("tx", "ty", 1), ("tt", "xy", -1)],
             lin=[("tz", A), ("xz", B), ("xx", C)], name=name)


def _params(params, allowed):
    bad = set(params) - set(allowed)
    if bad:
        raise UnknownEquation(f"unexpected parameters {sorted(bad)}")
    return params


EQUATIONS = ("cma", "cma-general", "hcma-legendre", "heavenly2", "heavenly2-legendre",
             "mixed", "mixed-legendre", "asymm", "evolution2")
SYSTEMS = ("eq-symm", "high-symm", "mixed-lin")


def builtin_pde(eq_id: str, **params) -> PdeSpec:
    """Return the spec for an equation id.

    ``cma-general``, ``mixed`` and ``mixed-legendre`` take ``theta`` (default 1);
    ``asymm`` takes ``A``, ``B``, ``C`` and ``evolution2`` takes ``A``, ``C``.
    Parameter values may be numbers or symbolic polynomials.
    """
    if eq_id == "cma":
        return _cma(1, "cma")
    if eq_id == "cma-general":
        return _cma(_params(params, ["theta"]).get("theta", 1), "cma-general")
    if eq_id == "hcma-legendre":
        return _hcma_legendre()
    if eq_id == "heavenly2":
        return _heavenly2()
    if eq_id == "heavenly2-legendre":
        return _heavenly2_legendre()
    if eq_id == "mixed":
        return _mixed(_params(params, ["theta"]).get("theta", 1))
    if eq_id == "mixed-legendre":
        return _mixed_legendre(_params(params, ["theta"]).get("theta", 1))
    if eq_id == "asymm":
        p = _params(params, "ABC")
        return _asymm(p.get("A", 1), p.get("B", 1), p.get("C", 1))
    if eq_id == "evolution2":
        p = _params(params, "AC")
        return _asymm(p.get("A", 1), 0, p.get("C", 1), name="evolution2")
    raise UnknownEquation(f"unknown equation {eq_id!r}")


def builtin_system(sys_id: str) -> SystemSpec:
    if sys_id == "eq-symm":
        m = _builder("xrtz")
        eqs = (m(lin=[("rt", 1), ("rr", 1), ("xt", -1)]),
               m(lin=[("xx", 1), ("rz", 1)]),
               m(lin=[("rx", 1), ("xt", 1), ("tz", 1)]))
    elif sys_id == "high-symm":
        m = _builder("xrtz")
        eqs = (m(lin=[("rr", 1), ("xt", -1)]),
               m(lin=[("rx", 1), ("tz", 1)]),
               m(lin=[("xx", 1), ("rz", 1)]))
    elif sys_id == "mixed-lin":
        m = _builder("exqy")  # eta, xi, q, y
        eqs = tuple(PdeSpec(e.quad, e.lin, e.constant, ("eta", "xi", "q", "y"))
                    for e in (m(lin=[("ee", 1), ("xx", 1), ("xq", -1)]),
                              m(lin=[("xq", 1), ("eq", -1), ("xy", 1)]),
                              m(lin=[("xq", 1), ("eq", 1), ("qq", -1), ("ey", 1)])))
    else:
        raise UnknownEquation(f"unknown system {sys_id!r}")
    return SystemSpec(eqs, sys_id)


def residual_scale(spec: PdeSpec, jet) -> np.ndarray:
    """Largest magnitude among the individual terms of the residual sum."""
    H = jet.hess
    s = np.zeros(H.shape[:-2]) + abs(complex(spec.constant))
    for (a, b, c) in spec.quad:
        s = np.maximum(s, np.abs(complex(c) * H[..., a[0], a[1]] * H[..., b[0], b[1]]))
    for a, c in spec.lin:
        s = np.maximum(s, np.abs(complex(c) * H[..., a[0], a[1]]))
    return s
