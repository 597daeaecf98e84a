"""The sum-of-functions ansatz u = beta1 + sum_j g_j(Sigma_j)."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ArityError
from .jets import Jet4, LinearForm, ScalarFn, jet_compose_scalar, jet_linform


@dataclass(frozen=True)
class ArbitraryG:
    fn: ScalarFn


@dataclass(frozen=True)
class Square:
    pass


@dataclass(frozen=True)
class ConjugateOf:
    """g_j = conj o g_k o conj, where k is a 0-based index of an earlier term."""
    index: int


SQUARE_FN = ScalarFn("square")


@dataclass(frozen=True)
class Ansatz:
    beta1: complex
    terms: tuple  # of (LinearForm, kind)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        for j, (_, kind) in enumerate(self.terms):
            if isinstance(kind, ConjugateOf):
                k = kind.index
                if not (0 <= k < j and isinstance(self.terms[k][1], ArbitraryG)):
                    raise ValueError(f"term {j} conjugates {k}, which is not an earlier arbitrary term")

    @property
    def n(self):
        return len(self.terms)

    def term_fn(self, j) -> ScalarFn:
        kind = self.terms[j][1]
        if isinstance(kind, Square):
            return SQUARE_FN
        if isinstance(kind, ConjugateOf):
            # conj(g(conj s)) is again in the library, with conjugated parameters
            return self.terms[kind.index][1].fn.conjugate()
        return kind.fn

    def forms(self):
        return [f for f, _ in self.terms]

    def coeff_matrix(self):
        return np.array([f.coeffs for f, _ in self.terms])

    def __call__(self, points):
        """Pointwise value, vectorized over leading axes of ``points``."""
        points = np.asarray(points, dtype=complex)
        out = np.zeros(points.shape[:-1], complex) + self.beta1
        for j, (form, _) in enumerate(self.terms):
            out = out + self.term_fn(j)(form(points))
        return out

    def derivs(self, points):
        """(g_j, g_j', g_j'') at Sigma_j(points), each of shape batch + (n,)."""
        points = np.asarray(points, dtype=complex)
        cols = [self.term_fn(j).derivs(form(points)) for j, (form, _) in enumerate(self.terms)]
        return tuple(np.stack([c[i] for c in cols], axis=-1) for i in range(3))


def eval_jet(a: Ansatz, point) -> Jet4:
    point = np.asarray(point, dtype=complex)
    acc = Jet4.constant(a.beta1, point.shape[:-1])
    for j, (form, _) in enumerate(a.terms):
        acc = acc + jet_compose_scalar(a.term_fn(j), jet_linform(form, point))
    return acc


def jacobian_matrix(a: Ansatz, point) -> np.ndarray:
    """Row j is g_j'(Sigma_j) times the coefficients of Sigma_j (first four terms)."""
    if a.n < 4:
        raise ArityError(f"need at least 4 terms, got {a.n}")
    _, d1, _ = a.derivs(point)
    C = a.coeff_matrix()[:4]
    return d1[..., :4, None] * C


def real_slice(base):
    """Assemble (z1, conj z1, z2, conj z2) from base points (z1, z2)."""
    base = np.asarray(base, dtype=complex)
    z1, z2 = base[..., 0], base[..., 1]
    return np.stack([z1, np.conj(z1), z2, np.conj(z2)], axis=-1)


def reality_defect(a: Ansatz, base) -> np.ndarray:
    return np.abs(np.imag(a(real_slice(base))))


def make_ansatz(forms, kinds, beta1=0.0):
    return Ansatz(complex(beta1), tuple(
        (f if isinstance(f, LinearForm) else LinearForm(*f), k) for f, k in zip(forms, kinds)))
