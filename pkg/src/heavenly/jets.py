"""Second-order jets of complex functions of four variables.

A jet stores the value, gradient and Hessian of a function at a point.
Every array may carry leading batch axes, so a jet can describe many points
at once: ``val`` has shape ``B``, ``grad`` ``B + (4,)`` and ``hess``
``B + (4, 4)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

DIM = 4


def _sym(h):
    # mirror the upper triangle so symmetry is exact, not approximate
    h = np.asarray(h, dtype=complex)
    iu = np.triu_indices(DIM, 1)
    out = h.copy()
    out[..., iu[1], iu[0]] = h[..., iu[0], iu[1]]
    return out


def _outer(a, b):
    return a[..., :, None] * b[..., None, :]


@dataclass(frozen=True)
class Jet4:
    val: np.ndarray
    grad: np.ndarray
    hess: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "val", np.asarray(self.val, dtype=complex))
        object.__setattr__(self, "grad", np.asarray(self.grad, dtype=complex))
        object.__setattr__(self, "hess", _sym(self.hess))

    @classmethod
    def constant(cls, c, batch=()):
        return cls(np.full(batch, c, dtype=complex), np.zeros(batch + (DIM,), complex),
                   np.zeros(batch + (DIM, DIM), complex))

    @property
    def batch_shape(self):
        return self.val.shape

    def __getitem__(self, i):
        """Pick one point (or a sub-batch) out of a batched jet."""
        return Jet4(self.val[i], self.grad[i], self.hess[i])

    def conj(self):
        return Jet4(np.conj(self.val), np.conj(self.grad), np.conj(self.hess))

    def transform(self, L):
        """Jet of f(L y) as a function of y, for a constant 4x4 matrix L."""
        L = np.asarray(L, dtype=complex)
        g = self.grad @ L
        h = np.swapaxes(L, 0, 1) @ self.hess @ L
        return Jet4(self.val, g, h)

    def __add__(self, other):
        return jet_add(self, other)

    def __mul__(self, other):
        return jet_mul(self, other)

    __radd__ = __add__
    __rmul__ = __mul__


@dataclass(frozen=True)
class LinearForm:
    coeffs: np.ndarray
    offset: complex = 0j

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.shape != (DIM,):
            raise ValueError("a linear form needs exactly four coefficients")
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "offset", complex(self.offset))

    def __call__(self, point):
        point = np.asarray(point, dtype=complex)
        return point @ self.coeffs + self.offset


def jet_linform(form: LinearForm, point) -> Jet4:
    point = np.asarray(point, dtype=complex)
    batch = point.shape[:-1]
    val = form(point)
    grad = np.broadcast_to(form.coeffs, batch + (DIM,)).copy()
    return Jet4(val, grad, np.zeros(batch + (DIM, DIM), complex))


def jet_add(a: Jet4, b) -> Jet4:
    if not isinstance(b, Jet4):
        return Jet4(a.val + b, a.grad, a.hess)
    return Jet4(a.val + b.val, a.grad + b.grad, a.hess + b.hess)


def jet_scale(a: Jet4, c) -> Jet4:
    c = np.asarray(c, dtype=complex)
    return Jet4(a.val * c, a.grad * c[..., None], a.hess * c[..., None, None])


def jet_mul(a: Jet4, b) -> Jet4:
    if not isinstance(b, Jet4):
        return jet_scale(a, b)
    va, vb = a.val[..., None], b.val[..., None]
    cross = _outer(a.grad, b.grad)
    hess = (a.hess * vb[..., None] + b.hess * va[..., None]
            + cross + np.swapaxes(cross, -1, -2))
    return Jet4(a.val * b.val, a.grad * vb + b.grad * va, hess)


_KINDS = ("exp", "sin", "cos", "cosh", "poly", "square")


@dataclass(frozen=True)
class ScalarFn:
    """One of a small library of entire functions with exact derivatives.

    ``kind`` is exp, sin, cos, cosh (all of ``k*s``), poly (coefficients in
    increasing degree, up to degree 6) or square. ``amp`` scales the whole
    function.
    """
    kind: str
    k: complex = 1.0
    amp: complex = 1.0
    coeffs: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown function kind {self.kind!r}")
        if self.kind == "poly" and not 1 <= len(self.coeffs) <= 7:
            raise ValueError("polynomial must have between 1 and 7 coefficients")

    @property
    def is_real(self):
        vals = [self.k, self.amp, *self.coeffs]
        return all(complex(v).imag == 0 for v in vals)

    def conjugate(self) -> "ScalarFn":
        """The function s -> conj(f(conj(s)))."""
        c = np.conj
        return ScalarFn(self.kind, complex(c(self.k)), complex(c(self.amp)),
                        tuple(complex(c(x)) for x in self.coeffs))

    def derivs(self, s):
        """Return (f, f', f'') at s."""
        s = np.asarray(s, dtype=complex)
        k, kind = self.k, self.kind
        with np.errstate(over="ignore", invalid="ignore"):
            if kind == "exp":
                e = np.exp(k * s)
                out = (e, k * e, k * k * e)
            elif kind == "sin":
                sn, cs = np.sin(k * s), np.cos(k * s)
                out = (sn, k * cs, -k * k * sn)
            elif kind == "cos":
                sn, cs = np.sin(k * s), np.cos(k * s)
                out = (cs, -k * sn, -k * k * cs)
            elif kind == "cosh":
                ch, sh = np.cosh(k * s), np.sinh(k * s)
                out = (ch, k * sh, k * k * ch)
            elif kind == "square":
                out = (s * s, 2 * s, np.full_like(s, 2))
            else:
                p = np.polynomial.Polynomial(np.asarray(self.coeffs, dtype=complex))
                d1, d2 = p.deriv(1), p.deriv(2)
                out = (p(s), d1(s), d2(s))
            out = tuple(self.amp * np.asarray(v, dtype=complex) for v in out)
        if not all(np.all(np.isfinite(v)) for v in out):
            raise DomainError(f"{self.kind} is not finite at the given argument")
        return out

    def __call__(self, s):
        return self.derivs(s)[0]

    def describe(self):
        if self.kind == "poly":
            body = "poly:" + ",".join(_fmt(c) for c in self.coeffs)
        elif self.kind == "square":
            body = "square"
        else:
            body = f"{self.kind}:{_fmt(self.k)}"
        if self.amp != 1:
            body += f"*{_fmt(self.amp)}"
        return body


def _fmt(c):
    c = complex(c)
    if c.imag == 0:
        return repr(c.real)
    return repr(c).strip("()")


def parse_fn(text: str) -> ScalarFn:
    """Parse a descriptor such as ``exp``, ``sin:0.5``, ``poly:1,0,2`` or ``exp:1*0.3``.

    The optional ``*amp`` suffix sets the amplitude.
    """
    text = text.strip()
    amp = 1.0
    if "*" in text:
        text, a = text.rsplit("*", 1)
        amp = complex(a.replace("i", "j"))
    kind, _, arg = text.partition(":")
    kind = kind.strip().lower()
    if kind == "poly":
        coeffs = tuple(complex(x.replace("i", "j")) for x in arg.split(",") if x.strip())
        return ScalarFn("poly", amp=amp, coeffs=coeffs)
    if kind == "square":
        return ScalarFn("square", amp=amp)
    k = complex(arg.replace("i", "j")) if arg else 1.0
    return ScalarFn(kind, k=k, amp=amp)


def jet_compose_scalar(g: ScalarFn, inner: Jet4) -> Jet4:
    f0, f1, f2 = g.derivs(inner.val)
    d = inner.grad
    hess = f2[..., None, None] * _outer(d, d) + f1[..., None, None] * inner.hess
    return Jet4(f0, f1[..., None] * d, hess)


def fd_hessian(f, point, h: float = 1e-4) -> Jet4:
    """Finite-difference jet of a vectorized pointwise function ``f``.

    ``f`` takes an array of shape (..., 4) and returns complex values. The
    stencil is applied once along each real coordinate direction and once
    along each imaginary direction; for a holomorphic ``f`` both estimate
    the same complex derivatives and the two are averaged.
    """
    point = np.asarray(point, dtype=complex)
    eye = np.eye(DIM)
    grads, hesss = [], []
    for step, factor in ((h, 1.0), (1j * h, -1j)):
        # stencil: center, +-e_mu, and +-e_mu +-e_nu for mu < nu
        pts = [point]
        for m in range(DIM):
            pts += [point + step * eye[m], point - step * eye[m]]
        pairs = [(m, n) for m in range(DIM) for n in range(m + 1, DIM)]
        for m, n in pairs:
            for sm, sn in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                pts.append(point + step * (sm * eye[m] + sn * eye[n]))
        vals = np.asarray(f(np.array(pts)), dtype=complex)
        f0 = vals[0]
        g = np.zeros(DIM, complex)
        H = np.zeros((DIM, DIM), complex)
        for m in range(DIM):
            fp, fm = vals[1 + 2 * m], vals[2 + 2 * m]
            g[m] = (fp - fm) / (2 * h)
            H[m, m] = (fp - 2 * f0 + fm) / h ** 2
        base = 1 + 2 * DIM
        for q, (m, n) in enumerate(pairs):
            pp, pm, mp, mm = vals[base + 4 * q: base + 4 * q + 4]
            H[m, n] = H[n, m] = (pp - pm - mp + mm) / (4 * h * h)
        # a step of i*h measures i*f' and -f''
        grads.append(g * factor)
        hesss.append(H * factor ** 2)
    hess = (hesss[0] + hesss[1]) / 2
    hess = (hess + hess.T) / 2
    return Jet4(f(point[None])[0], (grads[0] + grads[1]) / 2, hess)
