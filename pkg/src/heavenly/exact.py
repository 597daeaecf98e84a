"""Exact Gaussian-rational numbers and multivariate polynomials over them."""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import DomainError


class RatComplex:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, RatComplex):
            re, im = re.re, re.im + Fraction(im)
        elif isinstance(re, complex):
            re, im = Fraction(re.real), Fraction(re.imag) + Fraction(im)
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def coerce(x):
        if isinstance(x, RatComplex):
            return x
        if isinstance(x, (int, Fraction)):
            return RatComplex(x)
        if isinstance(x, (float, complex)):
            return RatComplex(complex(x))
        return NotImplemented

    def __add__(self, o):
        o = RatComplex.coerce(o)
        if o is NotImplemented:
            return o
        return RatComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return RatComplex(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, o):
        o = RatComplex.coerce(o)
        if o is NotImplemented:
            return o
        return RatComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return RatComplex.coerce(o) - self

    def __mul__(self, o):
        o = RatComplex.coerce(o)
        if o is NotImplemented:
            return o
        return RatComplex(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = RatComplex.coerce(o)
        if o is NotImplemented:
            return o
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise DomainError("division by exact zero")
        return RatComplex((self.re * o.re + self.im * o.im) / d,
                          (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, o):
        return RatComplex.coerce(o) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return RatComplex(1) / self ** (-n)
        out, base = RatComplex(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self):
        return RatComplex(self.re, -self.im)

    def __eq__(self, o):
        o = RatComplex.coerce(o)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __abs__(self):
        return abs(complex(self))

    @property
    def real(self):
        return RatComplex(self.re)

    @property
    def imag(self):
        return RatComplex(self.im)

    def __repr__(self):
        if self.im == 0:
            return f"RatComplex({self.re})"
        return f"RatComplex({self.re}, {self.im})"

    def to_pairs(self):
        return [[self.re.numerator, self.re.denominator], [self.im.numerator, self.im.denominator]]


def _rat_sqrt(q: Fraction):
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def exact_sqrt(x):
    """Square root of a non-negative rational perfect square, kept exact."""
    x = RatComplex.coerce(x)
    if x.im != 0:
        raise DomainError("exact square root only for real values")
    r = _rat_sqrt(x.re)
    if r is None:
        raise DomainError(f"{x.re} is not a rational square")
    return RatComplex(r)


def conj(x):
    return x.conjugate()


class Poly:
    """Sparse polynomial: dict from monomial to RatComplex coefficient.

    A monomial is a sorted tuple of (symbol, exponent) pairs; the empty tuple
    is the constant monomial. Zero coefficients are never stored.
    """
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for m, c in (terms or {}).items():
            c = RatComplex.coerce(c)
            if c:
                self.terms[m] = c

    @classmethod
    def var(cls, name):
        return cls({((name, 1),): RatComplex(1)})

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @staticmethod
    def coerce(x):
        if isinstance(x, Poly):
            return x
        c = RatComplex.coerce(x)
        if c is NotImplemented:
            return c
        return Poly.const(c)

    def __add__(self, o):
        o = Poly.coerce(o)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for m, c in o.terms.items():
            s = out.get(m, RatComplex(0)) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        p = Poly()
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self):
        p = Poly()
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, o):
        return self + (-Poly.coerce(o))

    def __rsub__(self, o):
        return Poly.coerce(o) - self

    def __mul__(self, o):
        o = Poly.coerce(o)
        if o is NotImplemented:
            return o
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, RatComplex(0)) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Poly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def is_zero(self):
        return not self.terms

    def __eq__(self, o):
        o = Poly.coerce(o)
        return o is not NotImplemented and (self - o).is_zero()

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def symbols(self):
        return sorted({s for m in self.terms for s, _ in m})

    def sorted_terms(self):
        # graded order: total degree, then lexicographic on the monomial
        return sorted(self.terms.items(), key=lambda mc: (-sum(e for _, e in mc[0]), mc[0]))

    def evaluate(self, values):
        """Substitute numbers for every symbol. Exact if the values are exact."""
        exact = all(isinstance(v, (int, Fraction, RatComplex)) for v in values.values())
        total = RatComplex(0) if exact else 0j
        for m, c in self.terms.items():
            t = c if exact else complex(c)
            for s, e in m:
                if s not in values:
                    raise KeyError(f"no value for symbol {s}")
                t = t * values[s] ** e
            total = total + t
        return total

    def scale_estimate(self, values):
        """Largest magnitude of a single term after substitution."""
        best = 0.0
        for m, c in self.terms.items():
            t = abs(complex(c))
            for s, e in m:
                t *= abs(complex(values[s])) ** e
            best = max(best, t)
        return best

    def to_json(self):
        return [{"coef": c.to_pairs(), "monomial": {s: e for s, e in m}}
                for m, c in self.sorted_terms()]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(s if e == 1 else f"{s}^{e}" for s, e in m)
            parts.append(f"({_fmt(c)})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def _fmt(c):
    if c.im == 0:
        return str(c.re)
    return f"{c.re}+{c.im}i"


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for s, e in m2:
        d[s] = d.get(s, 0) + e
    return tuple(sorted(d.items()))


