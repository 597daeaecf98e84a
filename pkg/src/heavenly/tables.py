"""Closed-form polynomials transcribed as coefficient tables.

Each table is a tuple of ``(coefficient, monomial)`` rows, and a monomial is a
tuple of ``(symbol, exponent)`` pairs over the coefficient names a1..d4.
"""


# determinant polynomial, equal symmetries (over a3^2 b3^2 c3^2 d3^2)
EQUAL_SYMM_DET = (
    (-1, (('a2', 2), ('a3', 1), ('b2', 1), ('b3', 2), ('c3', 3), ('d2', 3))),
    (1, (('a2', 2), ('a3', 1), ('b2', 1), ('b3', 2), ('c2', 3), ('d3', 3))),
    (-1, (('a2', 2), ('a3', 1), ('b2', 3), ('c2', 1), ('c3', 2), ('d3', 3))),
    (1, (('a2', 2), ('a3', 1), ('b3', 3), ('c2', 1), ('c3', 2), ('d2', 3))),
    (-1, (('a2', 2), ('a3', 1), ('b3', 3), ('c2', 3), ('d2', 1), ('d3', 2))),
    (1, (('a2', 2), ('a3', 1), ('b2', 3), ('c3', 3), ('d2', 1), ('d3', 2))),
    (1, (('a2', 1), ('a3', 2), ('b2', 2), ('b3', 1), ('c3', 3), ('d2', 3))),
    (-1, (('a2', 1), ('a3', 2), ('b2', 2), ('b3', 1), ('c2', 3), ('d3', 3))),
    (1, (('a2', 3), ('b2', 2), ('b3', 1), ('c2', 1), ('c3', 2), ('d3', 3))),
    (-1, (('a3', 3), ('b2', 2), ('b3', 1), ('c2', 1), ('c3', 2), ('d2', 3))),
    (1, (('a3', 3), ('b2', 2), ('b3', 1), ('c2', 3), ('d2', 1), ('d3', 2))),
    (-1, (('a2', 3), ('b2', 2), ('b3', 1), ('c3', 3), ('d2', 1), ('d3', 2))),
    (1, (('a2', 1), ('a3', 2), ('b2', 3), ('c2', 2), ('c3', 1), ('d3', 3))),
    (-1, (('a2', 1), ('a3', 2), ('b3', 3), ('c2', 2), ('c3', 1), ('d2', 3))),
    (-1, (('a2', 3), ('b2', 1), ('b3', 2), ('c2', 2), ('c3', 1), ('d3', 3))),
    (1, (('a3', 3), ('b2', 1), ('b3', 2), ('c2', 2), ('c3', 1), ('d2', 3))),
    (-1, (('a3', 3), ('b2', 3), ('c2', 2), ('c3', 1), ('d2', 1), ('d3', 2))),
    (1, (('a2', 3), ('b3', 3), ('c2', 2), ('c3', 1), ('d2', 1), ('d3', 2))),
    (1, (('a2', 1), ('a3', 2), ('b3', 3), ('c2', 3), ('d2', 2), ('d3', 1))),
    (-1, (('a2', 1), ('a3', 2), ('b2', 3), ('c3', 3), ('d2', 2), ('d3', 1))),
    (-1, (('a3', 3), ('b2', 1), ('b3', 2), ('c2', 3), ('d2', 2), ('d3', 1))),
    (1, (('a2', 3), ('b2', 1), ('b3', 2), ('c3', 3), ('d2', 2), ('d3', 1))),
    (1, (('a3', 3), ('b2', 3), ('c2', 1), ('c3', 2), ('d2', 2), ('d3', 1))),
    (-1, (('a2', 3), ('b3', 3), ('c2', 1), ('c3', 2), ('d2', 2), ('d3', 1))),
)

# determinant polynomial, higher symmetry I (over a1 a2 b1 b2 c1 c2 d1 d2)
HIGH_SYMM_I_DET = (
    (-1, (('a1', 2), ('a2', 1), ('b1', 1), ('b2', 2), ('c2', 3), ('d1', 3))),
    (1, (('a1', 2), ('a2', 1), ('b1', 1), ('b2', 2), ('c1', 3), ('d2', 3))),
    (-1, (('a1', 2), ('a2', 1), ('b1', 3), ('c1', 1), ('c2', 2), ('d2', 3))),
    (1, (('a1', 2), ('a2', 1), ('b2', 3), ('c1', 1), ('c2', 2), ('d1', 3))),
    (-1, (('a1', 2), ('a2', 1), ('b2', 3), ('c1', 3), ('d1', 1), ('d2', 2))),
    (1, (('a1', 2), ('a2', 1), ('b1', 3), ('c2', 3), ('d1', 1), ('d2', 2))),
    (1, (('a1', 1), ('a2', 2), ('b1', 2), ('b2', 1), ('c2', 3), ('d1', 3))),
    (-1, (('a1', 1), ('a2', 2), ('b1', 2), ('b2', 1), ('c1', 3), ('d2', 3))),
    (1, (('a1', 3), ('b1', 2), ('b2', 1), ('c1', 1), ('c2', 2), ('d2', 3))),
    (-1, (('a2', 3), ('b1', 2), ('b2', 1), ('c1', 1), ('c2', 2), ('d1', 3))),
    (1, (('a2', 3), ('b1', 2), ('b2', 1), ('c1', 3), ('d1', 1), ('d2', 2))),
    (-1, (('a1', 3), ('b1', 2), ('b2', 1), ('c2', 3), ('d1', 1), ('d2', 2))),
    (1, (('a1', 1), ('a2', 2), ('b1', 3), ('c1', 2), ('c2', 1), ('d2', 3))),
    (-1, (('a1', 1), ('a2', 2), ('b2', 3), ('c1', 2), ('c2', 1), ('d1', 3))),
    (-1, (('a1', 3), ('b1', 1), ('b2', 2), ('c1', 2), ('c2', 1), ('d2', 3))),
    (1, (('a2', 3), ('b1', 1), ('b2', 2), ('c1', 2), ('c2', 1), ('d1', 3))),
    (-1, (('a2', 3), ('b1', 3), ('c1', 2), ('c2', 1), ('d1', 1), ('d2', 2))),
    (1, (('a1', 3), ('b2', 3), ('c1', 2), ('c2', 1), ('d1', 1), ('d2', 2))),
    (1, (('a1', 1), ('a2', 2), ('b2', 3), ('c1', 3), ('d1', 2), ('d2', 1))),
    (-1, (('a1', 1), ('a2', 2), ('b1', 3), ('c2', 3), ('d1', 2), ('d2', 1))),
    (-1, (('a2', 3), ('b1', 1), ('b2', 2), ('c1', 3), ('d1', 2), ('d2', 1))),
    (1, (('a1', 3), ('b1', 1), ('b2', 2), ('c2', 3), ('d1', 2), ('d2', 1))),
    (1, (('a2', 3), ('b1', 3), ('c1', 1), ('c2', 2), ('d1', 2), ('d2', 1))),
    (-1, (('a1', 3), ('b2', 3), ('c1', 1), ('c2', 2), ('d1', 2), ('d2', 1))),
)

# determinant polynomial, higher symmetry II (over a3^2 b3^2 c3^2 d3^2)
HIGH_SYMM_II_DET = (
    (-1, (('a2', 2), ('a3', 1), ('b2', 1), ('b3', 2), ('c3', 3), ('d2', 3))),
    (1, (('a2', 2), ('a3', 1), ('b2', 1), ('b3', 2), ('c2', 3), ('d3', 3))),
    (-1, (('a2', 2), ('a3', 1), ('b2', 3), ('c2', 1), ('c3', 2), ('d3', 3))),
    (1, (('a2', 2), ('a3', 1), ('b3', 3), ('c2', 1), ('c3', 2), ('d2', 3))),
    (-1, (('a2', 2), ('a3', 1), ('b3', 3), ('c2', 3), ('d2', 1), ('d3', 2))),
    (1, (('a2', 2), ('a3', 1), ('b2', 3), ('c3', 3), ('d2', 1), ('d3', 2))),
    (1, (('a2', 1), ('a3', 2), ('b2', 2), ('b3', 1), ('c3', 3), ('d2', 3))),
    (-1, (('a2', 1), ('a3', 2), ('b2', 2), ('b3', 1), ('c2', 3), ('d3', 3))),
    (1, (('a2', 3), ('b2', 2), ('b3', 1), ('c2', 1), ('c3', 2), ('d3', 3))),
    (-1, (('a3', 3), ('b2', 2), ('b3', 1), ('c2', 1), ('c3', 2), ('d2', 3))),
    (1, (('a3', 3), ('b2', 2), ('b3', 1), ('c2', 3), ('d2', 1), ('d3', 2))),
    (-1, (('a2', 3), ('b2', 2), ('b3', 1), ('c3', 3), ('d2', 1), ('d3', 2))),
    (1, (('a2', 1), ('a3', 2), ('b2', 3), ('c2', 2), ('c3', 1), ('d3', 3))),
    (-1, (('a2', 1), ('a3', 2), ('b3', 3), ('c2', 2), ('c3', 1), ('d2', 3))),
    (-1, (('a2', 3), ('b2', 1), ('b3', 2), ('c2', 2), ('c3', 1), ('d3', 3))),
    (1, (('a3', 3), ('b2', 1), ('b3', 2), ('c2', 2), ('c3', 1), ('d2', 3))),
    (-1, (('a3', 3), ('b2', 3), ('c2', 2), ('c3', 1), ('d2', 1), ('d3', 2))),
    (1, (('a2', 3), ('b3', 3), ('c2', 2), ('c3', 1), ('d2', 1), ('d3', 2))),
    (1, (('a2', 1), ('a3', 2), ('b3', 3), ('c2', 3), ('d2', 2), ('d3', 1))),
    (-1, (('a2', 1), ('a3', 2), ('b2', 3), ('c3', 3), ('d2', 2), ('d3', 1))),
    (-1, (('a3', 3), ('b2', 1), ('b3', 2), ('c2', 3), ('d2', 2), ('d3', 1))),
    (1, (('a2', 3), ('b2', 1), ('b3', 2), ('c3', 3), ('d2', 2), ('d3', 1))),
    (1, (('a3', 3), ('b2', 3), ('c2', 1), ('c3', 2), ('d2', 2), ('d3', 1))),
    (-1, (('a2', 3), ('b3', 3), ('c2', 1), ('c3', 2), ('d2', 2), ('d3', 1))),
)

# determinant polynomial, mixed class (overall -1/(a2^2 b2^2 c2^2 d2^2))
MIXED_DET = (
    (-1, (('a1', 1), ('a2', 2), ('b2', 3), ('c1', 2), ('c2', 1), ('d1', 3))),
    (1, (('a1', 1), ('a2', 2), ('b2', 3), ('c1', 3), ('d1', 2), ('d2', 1))),
    (-1, (('a1', 1), ('a2', 2), ('b1', 3), ('c2', 3), ('d1', 2), ('d2', 1))),
    (1, (('a1', 1), ('a2', 2), ('b1', 2), ('b2', 1), ('c2', 3), ('d1', 3))),
    (-1, (('a1', 1), ('a2', 2), ('b1', 2), ('b2', 1), ('c1', 3), ('d2', 3))),
    (1, (('a1', 1), ('a2', 2), ('b1', 3), ('c1', 2), ('c2', 1), ('d2', 3))),
    (1, (('a2', 3), ('b1', 1), ('b2', 2), ('c1', 2), ('c2', 1), ('d1', 3))),
    (-1, (('a2', 3), ('b1', 1), ('b2', 2), ('c1', 3), ('d1', 2), ('d2', 1))),
    (1, (('a1', 3), ('b1', 1), ('b2', 2), ('c2', 3), ('d1', 2), ('d2', 1))),
    (-1, (('a1', 2), ('a2', 1), ('b1', 1), ('b2', 2), ('c2', 3), ('d1', 3))),
    (1, (('a1', 2), ('a2', 1), ('b1', 1), ('b2', 2), ('c1', 3), ('d2', 3))),
    (-1, (('a1', 3), ('b1', 1), ('b2', 2), ('c1', 2), ('c2', 1), ('d2', 3))),
    (1, (('a2', 3), ('b1', 3), ('c1', 1), ('c2', 2), ('d1', 2), ('d2', 1))),
    (-1, (('a2', 3), ('b1', 2), ('b2', 1), ('c1', 1), ('c2', 2), ('d1', 3))),
    (-1, (('a1', 3), ('b2', 3), ('c1', 1), ('c2', 2), ('d1', 2), ('d2', 1))),
    (1, (('a1', 2), ('a2', 1), ('b2', 3), ('c1', 1), ('c2', 2), ('d1', 3))),
    (-1, (('a1', 2), ('a2', 1), ('b1', 3), ('c1', 1), ('c2', 2), ('d2', 3))),
    (1, (('a1', 3), ('b1', 2), ('b2', 1), ('c1', 1), ('c2', 2), ('d2', 3))),
    (1, (('a2', 3), ('b1', 2), ('b2', 1), ('c1', 3), ('d1', 1), ('d2', 2))),
    (-1, (('a2', 3), ('b1', 3), ('c1', 2), ('c2', 1), ('d1', 1), ('d2', 2))),
    (-1, (('a1', 2), ('a2', 1), ('b2', 3), ('c1', 3), ('d1', 1), ('d2', 2))),
    (1, (('a1', 3), ('b2', 3), ('c1', 2), ('c2', 1), ('d1', 1), ('d2', 2))),
    (1, (('a1', 2), ('a2', 1), ('b1', 3), ('c2', 3), ('d1', 1), ('d2', 2))),
    (-1, (('a1', 3), ('b1', 2), ('b2', 1), ('c2', 3), ('d1', 1), ('d2', 2))),
)

# Legendre condition numerators, higher symmetry I, pairs 12,13,14,23,24,34
# (each over a1^2 b1^2 c1^2 d1^2)
HIGH_SYMM_I_LEGENDRE = (
    (
        (1, (('a1', 2), ('a2', 2), ('b2', 4), ('c1', 2), ('d1', 2))),
        (-2, (('a1', 1), ('a2', 3), ('b1', 1), ('b2', 3), ('c1', 2), ('d1', 2))),
        (1, (('a2', 4), ('b1', 2), ('b2', 2), ('c1', 2), ('d1', 2))),
    ),
    (
        (-2, (('a1', 1), ('a2', 3), ('b1', 2), ('c1', 1), ('c2', 3), ('d1', 2))),
        (1, (('a1', 2), ('a2', 2), ('b1', 2), ('c2', 4), ('d1', 2))),
        (1, (('a2', 4), ('b1', 2), ('c1', 2), ('c2', 2), ('d1', 2))),
    ),
    (
        (-2, (('a1', 1), ('a2', 3), ('b1', 2), ('c1', 2), ('d1', 1), ('d2', 3))),
        (1, (('a2', 4), ('b1', 2), ('c1', 2), ('d1', 2), ('d2', 2))),
        (1, (('a1', 2), ('a2', 2), ('b1', 2), ('c1', 2), ('d2', 4))),
    ),
    (
        (1, (('a1', 2), ('b1', 2), ('b2', 2), ('c2', 4), ('d1', 2))),
        (1, (('a1', 2), ('b2', 4), ('c1', 2), ('c2', 2), ('d1', 2))),
        (-2, (('a1', 2), ('b1', 1), ('b2', 3), ('c1', 1), ('c2', 3), ('d1', 2))),
    ),
    (
        (-2, (('a1', 2), ('b1', 1), ('b2', 3), ('c1', 2), ('d1', 1), ('d2', 3))),
        (1, (('a1', 2), ('b2', 4), ('c1', 2), ('d1', 2), ('d2', 2))),
        (1, (('a1', 2), ('b1', 2), ('b2', 2), ('c1', 2), ('d2', 4))),
    ),
    (
        (1, (('a1', 2), ('b1', 2), ('c1', 2), ('c2', 2), ('d2', 4))),
        (1, (('a1', 2), ('b1', 2), ('c2', 4), ('d1', 2), ('d2', 2))),
        (-2, (('a1', 2), ('b1', 2), ('c1', 1), ('c2', 3), ('d1', 1), ('d2', 3))),
    ),
)

# Legendre condition numerators N1..N6 for the mixed class, same pair order
# (each over a2^2 b2^2 c2^2 d2^2)
MIXED_LEGENDRE_N = (
    (
        (1, (('a1', 4), ('b2', 4), ('c2', 2), ('d2', 2))),
        (1, (('a2', 4), ('b1', 4), ('c2', 2), ('d2', 2))),
        (1, (('a1', 2), ('a2', 2), ('b1', 4), ('c2', 2), ('d2', 2))),
        (2, (('a1', 1), ('a2', 3), ('b1', 4), ('c2', 2), ('d2', 2))),
        (1, (('a2', 4), ('b1', 2), ('b2', 2), ('c2', 2), ('d2', 2))),
        (1, (('a1', 2), ('a2', 2), ('b2', 4), ('c2', 2), ('d2', 2))),
        (-2, (('a1', 1), ('a2', 3), ('b1', 3), ('b2', 1), ('c2', 2), ('d2', 2))),
        (-2, (('a1', 1), ('a2', 3), ('b1', 1), ('b2', 3), ('c2', 2), ('d2', 2))),
        (2, (('a1', 2), ('a2', 2), ('b1', 1), ('b2', 3), ('c2', 2), ('d2', 2))),
        (-2, (('a1', 3), ('a2', 1), ('b1', 3), ('b2', 1), ('c2', 2), ('d2', 2))),
        (-2, (('a1', 3), ('a2', 1), ('b1', 2), ('b2', 2), ('c2', 2), ('d2', 2))),
        (-2, (('a1', 3), ('a2', 1), ('b1', 1), ('b2', 3), ('c2', 2), ('d2', 2))),
        (2, (('a1', 2), ('a2', 2), ('b1', 2), ('b2', 2), ('c2', 2), ('d2', 2))),
        (2, (('a1', 1), ('a2', 3), ('b1', 2), ('b2', 2), ('c2', 2), ('d2', 2))),
        (1, (('a1', 4), ('b1', 2), ('b2', 2), ('c2', 2), ('d2', 2))),
        (2, (('a1', 4), ('b1', 1), ('b2', 3), ('c2', 2), ('d2', 2))),
        (-2, (('a1', 3), ('a2', 1), ('b2', 4), ('c2', 2), ('d2', 2))),
        (-2, (('a2', 4), ('b1', 3), ('b2', 1), ('c2', 2), ('d2', 2))),
        (-2, (('a1', 2), ('a2', 2), ('b1', 3), ('b2', 1), ('c2', 2), ('d2', 2))),
    ),
    (
        (1, (('a1', 2), ('a2', 2), ('b2', 2), ('c2', 4), ('d2', 2))),
        (2, (('a1', 1), ('a2', 3), ('b2', 2), ('c1', 4), ('d2', 2))),
        (1, (('a2', 4), ('b2', 2), ('c1', 4), ('d2', 2))),
        (1, (('a1', 4), ('b2', 2), ('c2', 4), ('d2', 2))),
        (2, (('a1', 4), ('b2', 2), ('c1', 1), ('c2', 3), ('d2', 2))),
        (-2, (('a1', 3), ('a2', 1), ('b2', 2), ('c2', 4), ('d2', 2))),
        (1, (('a2', 4), ('b2', 2), ('c1', 2), ('c2', 2), ('d2', 2))),
        (1, (('a1', 4), ('b2', 2), ('c1', 2), ('c2', 2), ('d2', 2))),
        (1, (('a1', 2), ('a2', 2), ('b2', 2), ('c1', 4), ('d2', 2))),
        (-2, (('a1', 2), ('a2', 2), ('b2', 2), ('c1', 3), ('c2', 1), ('d2', 2))),
        (-2, (('a2', 4), ('b2', 2), ('c1', 3), ('c2', 1), ('d2', 2))),
        (2, (('a1', 1), ('a2', 3), ('b2', 2), ('c1', 2), ('c2', 2), ('d2', 2))),
        (2, (('a1', 2), ('a2', 2), ('b2', 2), ('c1', 1), ('c2', 3), ('d2', 2))),
        (-2, (('a1', 3), ('a2', 1), ('b2', 2), ('c1', 3), ('c2', 1), ('d2', 2))),
        (-2, (('a1', 1), ('a2', 3), ('b2', 2), ('c1', 3), ('c2', 1), ('d2', 2))),
        (-2, (('a1', 1), ('a2', 3), ('b2', 2), ('c1', 1), ('c2', 3), ('d2', 2))),
        (2, (('a1', 2), ('a2', 2), ('b2', 2), ('c1', 2), ('c2', 2), ('d2', 2))),
        (-2, (('a1', 3), ('a2', 1), ('b2', 2), ('c1', 2), ('c2', 2), ('d2', 2))),
        (-2, (('a1', 3), ('a2', 1), ('b2', 2), ('c1', 1), ('c2', 3), ('d2', 2))),
    ),
    (
        (1, (('a1', 4), ('b2', 2), ('c2', 2), ('d1', 2), ('d2', 2))),
        (2, (('a1', 4), ('b2', 2), ('c2', 2), ('d1', 1), ('d2', 3))),
        (2, (('a1', 1), ('a2', 3), ('b2', 2), ('c2', 2), ('d1', 2), ('d2', 2))),
        (1, (('a1', 4), ('b2', 2), ('c2', 2), ('d2', 4))),
        (1, (('a1', 2), ('a2', 2), ('b2', 2), ('c2', 2), ('d2', 4))),
        (2, (('a1', 2), ('a2', 2), ('b2', 2), ('c2', 2), ('d1', 1), ('d2', 3))),
        (-2, (('a1', 3), ('a2', 1), ('b2', 2), ('c2', 2), ('d2', 4))),
        (-2, (('a2', 4), ('b2', 2), ('c2', 2), ('d1', 3), ('d2', 1))),
        (1, (('a2', 4), ('b2', 2), ('c2', 2), ('d1', 4))),
        (1, (('a2', 4), ('b2', 2), ('c2', 2), ('d1', 2), ('d2', 2))),
        (2, (('a1', 2), ('a2', 2), ('b2', 2), ('c2', 2), ('d1', 2), ('d2', 2))),
        (-2, (('a1', 3), ('a2', 1), ('b2', 2), ('c2', 2), ('d1', 1), ('d2', 3))),
        (-2, (('a1', 2), ('a2', 2), ('b2', 2), ('c2', 2), ('d1', 3), ('d2', 1))),
        (-2, (('a1', 1), ('a2', 3), ('b2', 2), ('c2', 2), ('d1', 3), ('d2', 1))),
        (-2, (('a1', 3), ('a2', 1), ('b2', 2), ('c2', 2), ('d1', 2), ('d2', 2))),
        (-2, (('a1', 3), ('a2', 1), ('b2', 2), ('c2', 2), ('d1', 3), ('d2', 1))),
        (1, (('a1', 2), ('a2', 2), ('b2', 2), ('c2', 2), ('d1', 4))),
        (-2, (('a1', 1), ('a2', 3), ('b2', 2), ('c2', 2), ('d1', 1), ('d2', 3))),
        (2, (('a1', 1), ('a2', 3), ('b2', 2), ('c2', 2), ('d1', 4))),
    ),
    (
        (2, (('a2', 2), ('b1', 1), ('b2', 3), ('c1', 4), ('d2', 2))),
        (1, (('a2', 2), ('b1', 2), ('b2', 2), ('c2', 4), ('d2', 2))),
        (1, (('a2', 2), ('b1', 2), ('b2', 2), ('c1', 4), ('d2', 2))),
        (-2, (('a2', 2), ('b1', 3), ('b2', 1), ('c1', 1), ('c2', 3), ('d2', 2))),
        (-2, (('a2', 2), ('b1', 2), ('b2', 2), ('c1', 3), ('c2', 1), ('d2', 2))),
        (-2, (('a2', 2), ('b2', 4), ('c1', 3), ('c2', 1), ('d2', 2))),
        (-2, (('a2', 2), ('b1', 3), ('b2', 1), ('c2', 4), ('d2', 2))),
        (-2, (('a2', 2), ('b1', 3), ('b2', 1), ('c1', 3), ('c2', 1), ('d2', 2))),
        (-2, (('a2', 2), ('b1', 3), ('b2', 1), ('c1', 2), ('c2', 2), ('d2', 2))),
        (2, (('a2', 2), ('b1', 2), ('b2', 2), ('c1', 1), ('c2', 3), ('d2', 2))),
        (1, (('a2', 2), ('b2', 4), ('c1', 2), ('c2', 2), ('d2', 2))),
        (1, (('a2', 2), ('b2', 4), ('c1', 4), ('d2', 2))),
        (1, (('a2', 2), ('b1', 4), ('c2', 4), ('d2', 2))),
        (2, (('a2', 2), ('b1', 4), ('c1', 1), ('c2', 3), ('d2', 2))),
        (2, (('a2', 2), ('b1', 1), ('b2', 3), ('c1', 2), ('c2', 2), ('d2', 2))),
        (2, (('a2', 2), ('b1', 2), ('b2', 2), ('c1', 2), ('c2', 2), ('d2', 2))),
        (1, (('a2', 2), ('b1', 4), ('c1', 2), ('c2', 2), ('d2', 2))),
        (-2, (('a2', 2), ('b1', 1), ('b2', 3), ('c1', 3), ('c2', 1), ('d2', 2))),
        (-2, (('a2', 2), ('b1', 1), ('b2', 3), ('c1', 1), ('c2', 3), ('d2', 2))),
    ),
    (
        (1, (('a2', 2), ('b1', 2), ('b2', 2), ('c2', 2), ('d2', 4))),
        (-2, (('a2', 2), ('b2', 4), ('c2', 2), ('d1', 3), ('d2', 1))),
        (2, (('a2', 2), ('b1', 1), ('b2', 3), ('c2', 2), ('d1', 2), ('d2', 2))),
        (1, (('a2', 2), ('b1', 2), ('b2', 2), ('c2', 2), ('d1', 4))),
        (-2, (('a2', 2), ('b1', 3), ('b2', 1), ('c2', 2), ('d2', 4))),
        (1, (('a2', 2), ('b2', 4), ('c2', 2), ('d1', 2), ('d2', 2))),
        (2, (('a2', 2), ('b1', 2), ('b2', 2), ('c2', 2), ('d1', 1), ('d2', 3))),
        (2, (('a2', 2), ('b1', 4), ('c2', 2), ('d1', 1), ('d2', 3))),
        (2, (('a2', 2), ('b1', 1), ('b2', 3), ('c2', 2), ('d1', 4))),
        (2, (('a2', 2), ('b1', 2), ('b2', 2), ('c2', 2), ('d1', 2), ('d2', 2))),
        (1, (('a2', 2), ('b1', 4), ('c2', 2), ('d1', 2), ('d2', 2))),
        (1, (('a2', 2), ('b1', 4), ('c2', 2), ('d2', 4))),
        (-2, (('a2', 2), ('b1', 1), ('b2', 3), ('c2', 2), ('d1', 1), ('d2', 3))),
        (-2, (('a2', 2), ('b1', 3), ('b2', 1), ('c2', 2), ('d1', 3), ('d2', 1))),
        (1, (('a2', 2), ('b2', 4), ('c2', 2), ('d1', 4))),
        (-2, (('a2', 2), ('b1', 3), ('b2', 1), ('c2', 2), ('d1', 1), ('d2', 3))),
        (-2, (('a2', 2), ('b1', 2), ('b2', 2), ('c2', 2), ('d1', 3), ('d2', 1))),
        (-2, (('a2', 2), ('b1', 1), ('b2', 3), ('c2', 2), ('d1', 3), ('d2', 1))),
        (-2, (('a2', 2), ('b1', 3), ('b2', 1), ('c2', 2), ('d1', 2), ('d2', 2))),
    ),
    (
        (2, (('a2', 2), ('b2', 2), ('c1', 1), ('c2', 3), ('d1', 4))),
        (1, (('a2', 2), ('b2', 2), ('c2', 4), ('d1', 2), ('d2', 2))),
        (2, (('a2', 2), ('b2', 2), ('c1', 4), ('d1', 1), ('d2', 3))),
        (-2, (('a2', 2), ('b2', 2), ('c1', 3), ('c2', 1), ('d1', 1), ('d2', 3))),
        (-2, (('a2', 2), ('b2', 2), ('c1', 2), ('c2', 2), ('d1', 3), ('d2', 1))),
        (1, (('a2', 2), ('b2', 2), ('c1', 2), ('c2', 2), ('d2', 4))),
        (1, (('a2', 2), ('b2', 2), ('c1', 4), ('d1', 2), ('d2', 2))),
        (-2, (('a2', 2), ('b2', 2), ('c1', 3), ('c2', 1), ('d1', 2), ('d2', 2))),
        (-2, (('a2', 2), ('b2', 2), ('c2', 4), ('d1', 3), ('d2', 1))),
        (1, (('a2', 2), ('b2', 2), ('c1', 2), ('c2', 2), ('d1', 4))),
        (-2, (('a2', 2), ('b2', 2), ('c1', 3), ('c2', 1), ('d1', 3), ('d2', 1))),
        (-2, (('a2', 2), ('b2', 2), ('c1', 3), ('c2', 1), ('d2', 4))),
        (-2, (('a2', 2), ('b2', 2), ('c1', 1), ('c2', 3), ('d1', 3), ('d2', 1))),
        (-2, (('a2', 2), ('b2', 2), ('c1', 1), ('c2', 3), ('d1', 1), ('d2', 3))),
        (1, (('a2', 2), ('b2', 2), ('c2', 4), ('d1', 4))),
        (1, (('a2', 2), ('b2', 2), ('c1', 4), ('d2', 4))),
        (2, (('a2', 2), ('b2', 2), ('c1', 2), ('c2', 2), ('d1', 1), ('d2', 3))),
        (2, (('a2', 2), ('b2', 2), ('c1', 2), ('c2', 2), ('d1', 2), ('d2', 2))),
        (2, (('a2', 2), ('b2', 2), ('c1', 1), ('c2', 3), ('d1', 2), ('d2', 2))),
    ),
)

# Class III Legendre condition. Rows (c, i, j, k, m) stand for
# c * B3^i * B4^j * R^k / D^m with R = sqrt(B3^2 + B4^2), D = B3 - B4 + R.
# The first bracket multiplies A2^2 g1'' g2'', the second H2^2 g2'' g4''.
HCMA_III_BRACKET_12 = (
    (-4, 2, 2, 0, 2), (2, 0, 3, 1, 2), (2, 3, 0, 1, 2), (-2, 3, 1, 0, 2), (-2, 1, 3, 0, 2),
    (2, 2, 1, 0, 1), (2, 1, 2, 0, 1), (-2, 0, 2, 1, 1), (-2, 2, 0, 1, 1), (2, 2, 1, 1, 2),
    (2, 1, 2, 1, 2), (2, 0, 3, 0, 1), (-2, 0, 4, 0, 2), (-2, 4, 0, 0, 2), (2, 3, 0, 0, 1),
    (-1, 0, 2, 0, 0), (-1, 2, 0, 0, 0),
)
HCMA_III_BRACKET_24 = (
    (2, 0, 3, 1, 2), (2, 3, 0, 1, 2), (-4, 2, 2, 0, 2), (-2, 0, 4, 0, 2), (-2, 4, 0, 0, 2),
    (-2, 2, 1, 0, 1), (-2, 1, 2, 0, 1), (-1, 2, 0, 0, 0), (-1, 0, 2, 0, 0), (2, 0, 2, 1, 1),
    (-2, 3, 1, 0, 2), (-2, 1, 3, 0, 2), (2, 2, 0, 1, 1), (2, 1, 2, 1, 2), (-2, 3, 0, 0, 1),
    (-2, 0, 3, 0, 1), (2, 2, 1, 1, 2),
)
