"""Frozen reference values used by the verification suite and the tests.

Series tables are stored as {composition: coefficient} per degree, with
PolyT coefficients given by ascending rational coefficient lists and EPoly
coefficients by {partition: int} dictionaries.  Entries listed in
DOCUMENTED_DEVIATIONS record spots where commonly printed versions of these
tables disagree with the values forced by the defining identities; the
verification suite asserts the corrected value and reports the note instead
of failing.
"""

from __future__ import annotations

from fractions import Fraction

from .coeffring import EPoly, PolyT


def pt(*coeffs) -> PolyT:
    return PolyT([Fraction(c) for c in coeffs])


def ep(terms) -> EPoly:
    return EPoly(terms)


# ---------------------------------------------------------------------------
# OEIS prefixes (vendored constants; no network lookups anywhere)

A000108_CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]
A071724_GEODE_SUMS = [1, 1, 3, 9, 28, 90, 297, 1001]
A239204_RIBBON_SUMS = [1, 1, 4, 17, 76, 353, 1688, 8257, 41128, 207905]
A238112_LAMBDA_SUMS = [1, 1, 5, 23, 107, 509, 2473, 12235, 61463, 312761, 1609005]
A006318_LARGE_SCHROEDER = [1, 2, 6, 22, 90, 394, 1806]
PRIME_SCHROEDER_COUNTS = {1: 1, 2: 2, 3: 6, 4: 22, 5: 90}

# ---------------------------------------------------------------------------
# integer series, low degrees

G_LOW = {
    0: {(): 1},
    1: {(1,): 1},
    2: {(2,): 1, (1, 1): 1},
    3: {(3,): 1, (2, 1): 2, (1, 2): 1, (1, 1, 1): 1},
}

GAMMA_LOW = {
    0: {(): 1},
    1: {(1,): 1},
    2: {(2,): 2, (1, 1): 1},
    3: {(3,): 3, (2, 1): 3, (1, 2): 2, (1, 1, 1): 1},
}

GAMMA3_RIBBON = {(3,): 9, (2, 1): 4, (1, 2): 3, (1, 1, 1): 1}
GAMMA3_LAMBDA = {(3,): 3, (2, 1): -6, (1, 2): -5, (1, 1, 1): 9}

FREE_CUMULANTS_LOW = {
    0: {(): 1},
    1: {(1,): 1},
    2: {(2,): 1, (1, 1): -1},
    3: {(3,): 1, (2, 1): -2, (1, 2): -1, (1, 1, 1): 2},
}

# ---------------------------------------------------------------------------
# the t-hierarchy tables, degrees 1..4

G_T_TABLE = {
    1: {(1,): pt(1)},
    2: {(2,): pt(1), (1, 1): pt(0, 1)},
    3: {(3,): pt(1), (2, 1): pt(0, 2), (1, 2): pt(0, 1),
        (1, 1, 1): pt(0, Fraction(-1, 2), Fraction(3, 2))},
    4: {(4,): pt(1), (3, 1): pt(0, 3), (2, 2): pt(0, 2),
        (2, 1, 1): pt(0, -1, 4), (1, 3): pt(0, 1),
        (1, 2, 1): pt(0, Fraction(-1, 2), Fraction(5, 2)),
        (1, 1, 2): pt(0, Fraction(-1, 2), Fraction(3, 2)),
        (1, 1, 1, 1): pt(0, Fraction(1, 3), -2, Fraction(8, 3))},
}

GAMMA_T_TABLE = {
    1: {(1,): pt(0, 1)},
    2: {(2,): pt(0, 2), (1, 1): pt(0, Fraction(-1, 2), Fraction(3, 2))},
    3: {(3,): pt(0, 3), (2, 1): pt(0, -1, 4),
        (1, 2): pt(0, Fraction(-1, 2), Fraction(5, 2)),
        (1, 1, 1): pt(0, Fraction(1, 3), -2, Fraction(8, 3))},
    4: {(4,): pt(0, 4),
        (3, 1): pt(0, Fraction(-3, 2), Fraction(15, 2)),
        (2, 2): pt(0, -1, 6),
        (2, 1, 1): pt(0, Fraction(2, 3), -5, Fraction(25, 3)),
        (1, 3): pt(0, Fraction(-1, 2), Fraction(7, 2)),
        (1, 2, 1): pt(0, Fraction(1, 3), -3, Fraction(17, 3)),
        (1, 1, 2): pt(0, Fraction(1, 3), Fraction(-5, 2), Fraction(25, 6)),
        (1, 1, 1, 1): pt(0, Fraction(-1, 4), Fraction(55, 24),
                         Fraction(-25, 4), Fraction(125, 24))},
}

THETA_T_TABLE = {
    1: {(1,): pt(1)},
    2: {(2,): pt(2), (1, 1): pt(-1, 2)},
    3: {(3,): pt(3), (2, 1): pt(-3, 6), (1, 2): pt(-1, 3),
        (1, 1, 1): pt(2, Fraction(-11, 2), Fraction(9, 2))},
    4: {(4,): pt(4), (3, 1): pt(-6, 12), (2, 2): pt(-3, 8),
        (2, 1, 1): pt(7, -19, 16), (1, 3): pt(-1, 4),
        (1, 2, 1): pt(3, -10, 10),
        (1, 1, 2): pt(2, -6, 6),
        (1, 1, 1, 1): pt(-5, Fraction(101, 6), Fraction(-43, 2), Fraction(32, 3))},
}

H_T_TABLE = {
    1: {(1,): pt(1)},
    2: {(2,): pt(1)},
    3: {(3,): pt(1), (2, 1): pt(0, 1)},
    4: {(4,): pt(1), (3, 1): pt(0, 2), (2, 2): pt(0, 1),
        (2, 1, 1): pt(0, Fraction(-1, 2), Fraction(3, 2))},
}

ETA_T_TABLE = {
    1: {},
    2: {(2,): pt(0, 1)},
    3: {(3,): pt(0, 2), (2, 1): pt(0, Fraction(-1, 2), Fraction(3, 2))},
    4: {(4,): pt(0, 3), (3, 1): pt(0, -1, 4),
        (2, 2): pt(0, Fraction(-1, 2), Fraction(5, 2)),
        (2, 1, 1): pt(0, Fraction(1, 3), -2, Fraction(8, 3))},
}

DOCUMENTED_DEVIATIONS = {
    "table-theta-t-4": "printed coefficient 6t^2-6t+12 of S^{112} fails the "
                       "t=1 cross-check with the geode; derived value is "
                       "6t^2-6t+2",
    "table-h-t-4": "printed term names S^{111}, a degree-3 word inside the "
                   "degree-4 component; the derivation forces S^{211}",
    "table-eta-t-4": "printed coefficients 4t^2-1 and term S^{1111} disagree "
                     "with the derivation, which forces 4t^2-t on S^{31} and "
                     "the word S^{211}",
}

# ---------------------------------------------------------------------------
# the e-series tables

G_E_TABLE = {
    0: {(): ep({(): 1})},
    1: {(1,): ep({(): 1})},
    2: {(2,): ep({(): 1}), (1, 1): ep({(1,): 1})},
    3: {(3,): ep({(): 1}), (2, 1): ep({(1,): 2}), (1, 2): ep({(1,): 1}),
        (1, 1, 1): ep({(2,): 1, (1, 1): 1})},
    4: {(4,): ep({(): 1}), (3, 1): ep({(1,): 3}), (2, 2): ep({(1,): 2}),
        (2, 1, 1): ep({(1, 1): 3, (2,): 2}), (1, 3): ep({(1,): 1}),
        (1, 2, 1): ep({(1, 1): 2, (2,): 1}), (1, 1, 2): ep({(1, 1): 1, (2,): 1}),
        (1, 1, 1, 1): ep({(1, 1, 1): 1, (2, 1): 3, (3,): 1})},
}

GAMMA_E_TABLE = {
    1: {(1,): ep({(1,): 1})},
    2: {(2,): ep({(1,): 2}), (1, 1): ep({(1, 1): 1, (2,): 1})},
    3: {(3,): ep({(1,): 3}), (2, 1): ep({(1, 1): 3, (2,): 2}),
        (1, 2): ep({(1, 1): 2, (2,): 1}),
        (1, 1, 1): ep({(1, 1, 1): 1, (2, 1): 3, (3,): 1})},
    4: {(4,): ep({(1,): 4}),
        (3, 1): ep({(1, 1): 6, (2,): 3}),
        (2, 2): ep({(1, 1): 5, (2,): 2}),
        (2, 1, 1): ep({(1, 1, 1): 4, (2, 1): 8, (3,): 2}),
        (1, 3): ep({(1, 1): 3, (2,): 1}),
        (1, 2, 1): ep({(1, 1, 1): 3, (2, 1): 5, (3,): 1}),
        (1, 1, 2): ep({(1, 1, 1): 2, (2, 1): 4, (3,): 1}),
        (1, 1, 1, 1): ep({(1, 1, 1, 1): 1, (2, 1, 1): 6, (3, 1): 4,
                          (2, 2): 2, (4,): 1})},
}

# diagonal system solution, words carrying the explicit placeholder letter;
# the degree-2 word (2,0,0,0) is the consistent value where a commonly
# printed version shows an extra placeholder letter
SYSTEM_Y_TABLE = {
    0: {(0,): ep({(): 1})},
    1: {(1, 0, 0): ep({(1,): 1})},
    2: {(1, 1, 0, 0, 0): ep({(1, 1): 1}),
        (2, 0, 0, 0): ep({(1,): 1}),
        (1, 0, 1, 0, 0): ep({(2,): 1})},
}

SYSTEM_X_TABLE = {
    1: {(1, 0): ep({(): 1})},
    2: {(1, 1, 0, 0): ep({(1,): 1}), (2, 0, 0): ep({(): 1})},
    3: {(1, 1, 1, 0, 0, 0): ep({(1, 1): 1}),
        (1, 2, 0, 0, 0): ep({(1,): 1}),
        (1, 1, 0, 1, 0, 0): ep({(2,): 1}),
        (2, 1, 0, 0, 0): ep({(1,): 1}),
        (2, 0, 1, 0, 0): ep({(1,): 1}),
        (3, 0, 0, 0): ep({(): 1})},
}

# G_3 = X_3 * S0; a commonly printed version drops the e_1 on the word
# (1,2,0,0,0,0)
SYSTEM_G3_TABLE = {
    (3, 0, 0, 0, 0): ep({(): 1}),
    (2, 1, 0, 0, 0, 0): ep({(1,): 1}),
    (2, 0, 1, 0, 0, 0): ep({(1,): 1}),
    (1, 2, 0, 0, 0, 0): ep({(1,): 1}),
    (1, 1, 1, 0, 0, 0, 0): ep({(1, 1): 1}),
    (1, 1, 0, 1, 0, 0, 0): ep({(2,): 1}),
}

PRIME_SCHROEDER_3_CODES = [
    (3, 0, 0, 0, 0),
    (2, 1, 0, 0, 0, 0),
    (2, 0, 1, 0, 0, 0),
    (1, 2, 0, 0, 0, 0),
    (1, 1, 1, 0, 0, 0, 0),
    (1, 1, 0, 1, 0, 0, 0),
]

# ---------------------------------------------------------------------------
# combinatorial examples

LUKASIEWICZ_2 = [(2, 0, 0), (1, 1, 0)]
LUKASIEWICZ_3 = [(3, 0, 0, 0), (2, 1, 0, 0), (2, 0, 1, 0), (1, 2, 0, 0), (1, 1, 1, 0)]

DYCK_EXAMPLE = ((2, 1, 0, 0), "aababbb")
NDPF_EXAMPLE = ((2, 1, 0, 0), (1, 1, 2), ((1, 3), (2,)))

SHIFT_EXAMPLES = {
    (3, 0, 0, 0): [(1, 1, 1), (2, 2, 2), (3, 3, 3)],
    (2, 1, 0, 0): [(1, 1, 2), (2, 2, 3)],
    (2, 0, 1, 0): [(1, 1, 3)],
    (1, 2, 0, 0): [(1, 2, 2), (2, 3, 3)],
    (1, 1, 1, 0): [(1, 2, 3)],
}

# d_3 applied to 310130000; a commonly printed version gives the five-letter
# word 31010, which cannot be a tree code of size 5
COROLLA_EXAMPLE = ((3, 1, 0, 1, 3, 0, 0, 0, 0), 3, (3, 1, 0, 1, 0, 0))

# fillings of segment shape (3,1); a commonly printed list contains 1213|4,
# not weakly increasing, where the count 9 forces 113|4
PQR_31_FILLINGS = [
    ((1, 1, 1), (2,)), ((1, 1, 1), (3,)), ((1, 1, 1), (4,)),
    ((1, 1, 2), (3,)), ((1, 1, 2), (4,)), ((1, 1, 3), (4,)),
    ((1, 2, 2), (3,)), ((1, 2, 2), (4,)), ((1, 2, 3), (4,)),
]
PQR_121_FILLINGS = [
    ((1,), (2, 2), (3,)), ((1,), (2, 2), (4,)), ((1,), (2, 3), (4,)),
]
PQR_211_FILLINGS = [
    ((1, 1), (2,), (3,)), ((1, 1), (2,), (4,)),
    ((1, 1), (3,), (4,)), ((1, 2), (3,), (4,)),
]

DELTA_211 = pt(0, -1, 4)
DELTA_1111 = pt(0, Fraction(1, 3), -2, Fraction(8, 3))
