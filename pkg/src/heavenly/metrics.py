"""Metrics built from a solution jet.

Quadratic forms are stored as symmetric matrices: ds^2 = sum g_mn dx^m dx^n, so
a product of two different differentials contributes 1/2 to each of g_mn, g_nm.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SingularDenominator

FAMILIES = ("kahler", "hcma-leg", "heavenly", "heavenly-leg")

# which catalog classes carry the potential each family expects
PAIRINGS = {
    "kahler": ("CMA_SQ",),
    "hcma-leg": ("HCMA_I", "HCMA_II", "HCMA_III", "REF_MALYKH_EXP"),
    "heavenly-leg": ("H2_EQUAL", "H2_HIGH_I", "H2_HIGH_II", "H2_SERIES_EQUAL",
                     "H2_SERIES_HIGH_I", "H2_SERIES_HIGH_II"),
    "heavenly": (),
}

COORDS = {
    "kahler": ("z1", "z1b", "z2", "z2b"),
    "hcma-leg": ("p", "pb", "z2", "z2b"),
    "heavenly": ("x", "y", "w", "z"),
    "heavenly-leg": ("x", "r", "t", "z"),
}


@dataclass(frozen=True)
class Metric4:
    g: np.ndarray
    coord_names: tuple

    def __post_init__(self):
        g = np.asarray(self.g, dtype=complex)
        object.__setattr__(self, "g", np.triu(g) + np.triu(g, 1).T)

    def to_json(self):
        return [[[complex(v).real, complex(v).imag] for v in row] for row in self.g]


def _e(i):
    v = np.zeros(4, complex)
    v[i] = 1
    return v


def _sq(a):
    return np.outer(a, a)


def _prod(a, b):
    # symmetric product of two one-forms
    return (np.outer(a, b) + np.outer(b, a)) / 2


def _require(name, value, rtol=1e-12, scale=1.0):
    if abs(value) <= rtol * (1 + scale):
        raise SingularDenominator(name, value)


def kahler_block_det(jet):
    H = jet.hess
    return H[..., 0, 1] * H[..., 2, 3] - H[..., 0, 3] * H[..., 2, 1]


def _kahler(H):
    g = np.zeros((4, 4), complex)
    for i in (0, 2):
        for k in (1, 3):
            g = g + H[i, k] * _prod(_e(i), _e(k))
    return g


def _hcma_leg(H):
    P, PB, Z, ZB = range(4)
    wpp, wbb, wpb = H[P, P], H[PB, PB], H[P, PB]
    delta = wpp * wbb - wpb ** 2
    _require("w_pp*w_pbpb - w_ppb^2", delta, scale=abs(wpp * wbb) + abs(wpb) ** 2)
    _require("w_ppb", wpb, scale=np.abs(H).max())
    om = wpb * _e(P) + H[PB, Z] * _e(Z)
    om_bar = wpb * _e(PB) + H[P, ZB] * _e(ZB)
    bracket = (wpp * _sq(om) + wbb * _sq(om_bar)
               + (wpp * wbb + wpb ** 2) / wpb * _prod(om, om_bar))
    return bracket / delta - delta / wpb * _prod(_e(Z), _e(ZB))


def _heavenly(H):
    X, Y, W, Z = range(4)
    return (_prod(_e(W), _e(X)) + _prod(_e(Z), _e(Y)) - H[X, X] * _sq(_e(Z))
            - H[Y, Y] * _sq(_e(W)) + 2 * H[X, Y] * _prod(_e(W), _e(Z)))


def _heavenly_leg(H):
    X, R, T, Z = range(4)
    tt = H[T, T]
    _require("theta_tt", tt, scale=np.abs(H).max())
    delta = tt * H[R, R] - H[T, R] ** 2
    _require("theta_tt*theta_rr - theta_tr^2", delta, scale=abs(tt * H[R, R]) + abs(H[T, R]) ** 2)
    om_t = H[T, T] * _e(T) + H[T, R] * _e(R) + H[T, X] * _e(X) + H[T, Z] * _e(Z)
    om_r = H[R, T] * _e(T) + H[R, R] * _e(R) + H[R, X] * _e(X) + H[R, Z] * _e(Z)
    a = tt * om_t + (tt * H[R, X] - H[T, R] * H[T, X]) * _e(Z)
    return (_sq(a) / (tt * delta) - (tt * H[X, X] - H[T, X] ** 2) / tt * _sq(_e(Z))
            - _prod(om_t, _e(X)) - _prod(om_r, _e(Z)))


_BUILDERS = {"kahler": _kahler, "hcma-leg": _hcma_leg, "heavenly": _heavenly,
             "heavenly-leg": _heavenly_leg}


def metric_at(family, jet) -> Metric4:
    """Metric of a family at a single point; ``jet`` is in the family's coordinates."""
    if family not in _BUILDERS:
        raise ValueError(f"unknown metric family {family!r}")
    H = np.asarray(jet.hess, dtype=complex)
    if H.shape != (4, 4):
        raise ValueError("metric_at expects the jet of a single point")
    return Metric4(_BUILDERS[family](H), COORDS[family])


def metric_det(m: Metric4) -> complex:
    return complex(np.linalg.det(m.g))
