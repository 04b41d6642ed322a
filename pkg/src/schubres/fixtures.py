"""Reference data transcribed from the published displays.

Weights are stored as ``(top row, column)`` pairs in the picture layout:
the top row reads ``x1 u y1 y2 ...`` and the column reads ``z1 z2``.
Formats store positive generation degrees.  Polynomials are listed from the
constant term upwards.
"""

from __future__ import annotations

from .resolution import GradedFormat
from .schur import EquivariantFormat, Summand


def _fmt(*degrees):
    return GradedFormat.of(*degrees)


# -- graded formats ----------------------------------------------------------

FORMATS: dict[str, dict[str, GradedFormat]] = {
    "e6": {
        "sigma3": _fmt([0], [4] + [3] * 4, [5] * 6, [7] * 2),
        "sigma3p": _fmt([0], [4] + [3] * 4, [5] * 6, [7] * 2),
        "sum": _fmt([0], [4] + [3] * 6, [5] * 12, [7] * 6 + [6], [10]),
    },
    "e7": {
        "sigma3": _fmt([0], [7] + [6] * 5, [9] * 7, [13] * 2),
        "sigma3p": _fmt([0], [7] + [6] * 4, [10] * 7, [13] * 3),
        "sum": _fmt([0], [7] + [6] * 7, [10] * 7 + [9] * 7, [13] * 7 + [12], [19]),
    },
    "e8": {
        "sigma3": _fmt([0], [16] + [15] * 6, [21] * 8, [31] * 2),
        "sigma3p": _fmt([0], [16] + [15] * 4, [25] * 8, [31] * 4),
        "sum": _fmt([0], [16] + [15] * 8, [25] * 8 + [21] * 8, [31] * 8 + [30], [46]),
    },
}

# Gorenstein shift of the sum ideal (the top twist of its resolution)
SUM_SHIFT = {"e6": 10, "e7": 19, "e8": 46}

# -- Hilbert numerators ------------------------------------------------------

NUMERATORS: dict[str, dict[str, tuple[int, ...]]] = {
    "e6": {
        "sigma3": (1, 3, 6, 6, 2),
        "sigma3p": (1, 3, 6, 6, 2),
        "sum": (1, 4, 10, 14, 10, 4, 1),
    },
    "e7": {
        "sigma3": (1, 3, 6, 10, 15, 21, 23, 20, 12, 6, 2),
        "sigma3p": (1, 3, 6, 10, 15, 21, 24, 23, 18, 9, 3),
        "sum": (1, 4, 10, 20, 35, 56, 77, 91, 91, 77, 56, 35, 20, 10, 4, 1),
    },
    "e8": {
        "sigma3": (
            1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91, 105, 120,
            130, 134, 132, 124, 110, 90, 72, 56, 42, 30, 20, 12, 6, 2,
        ),
        "sigma3p": (
            1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66, 78, 91, 105, 120,
            132, 140, 144, 144, 140, 132, 120, 104, 84, 60, 40, 24, 12, 4,
        ),
        "sum": (
            1, 4, 10, 20, 35, 56, 84, 120, 165, 220, 286, 364, 455, 560,
            680, 808, 936, 1056, 1160, 1240, 1288, 1304, 1288, 1240, 1160,
            1056, 936, 808, 680, 560, 455, 364, 286, 220, 165, 120, 84, 56,
            35, 20, 10, 4, 1,
        ),
    },
}

DEGREES = {
    "e6": {"sigma3": 18, "sigma3p": 18, "sum": 44},
    "e7": {"sigma3": 119, "sigma3p": 133, "sum": 588},
    "e8": {"sigma3": 1640, "sigma3p": 1960, "sum": 20400},
}

# only the E6 complete intersection degrees are stated; the others are derived
CI_DEGREES = {"e6": (4, 3, 3)}
CI_PRODUCT = {"e6": 36, "e7": 252, "e8": 3600}

# -- weights ----------------------------------------------------------------

SIGMA_DISPLAYS = {
    "e6": {
        "sigma0": ((1, 0, 0, 0), (0, 0)),
        "sigma1": ((-1, 1, 0, 0), (0, 0)),
        "sigma2": ((0, -1, 1, 0), (1, 0)),
        "sigma3": ((0, 0, 1, 0), (-1, 1)),
        "sigma3p": ((0, 0, -1, 1), (1, 0)),
    },
}

GENERATOR_WEIGHTS = {
    "e6": {
        "sigma3": [
            ((1, 0, 0, 0), (0, 0)),
            ((-1, 1, 0, 0), (0, 0)),
            ((0, -1, 1, 0), (1, 0)),
            ((0, 0, -1, 1), (1, 0)),
            ((0, 0, 0, -1), (1, 0)),
        ],
        # not displayed: the sigma3 list with the y and z arms swapped
        "sigma3p": [
            ((1, 0, 0, 0), (0, 0)),
            ((-1, 1, 0, 0), (0, 0)),
            ((0, -1, 1, 0), (1, 0)),
            ((0, 0, 1, 0), (-1, 1)),
            ((0, 0, 1, 0), (0, -1)),
        ],
    },
    "e7": {
        "sigma3": [
            ((1, 0, 0, 0, 0), (0, 0)),
            ((-1, 1, 0, 0, 0), (0, 0)),
            ((0, -1, 1, 0, 0), (1, 0)),
            ((0, 0, -1, 1, 0), (1, 0)),
            ((0, 0, 0, -1, 1), (1, 0)),
            ((0, 0, 0, 0, -1), (1, 0)),
        ],
        "sigma3p": [
            ((1, 0, 0, 0, 0), (0, 0)),
            ((-1, 1, 0, 0, 0), (0, 0)),
            ((0, -1, 1, 0, 0), (1, 0)),
            ((0, 0, 1, 0, 0), (-1, 1)),
            ((0, 0, 1, 0, 0), (0, -1)),
        ],
    },
    "e8": {
        "sigma3": [
            ((1, 0, 0, 0, 0, 0), (0, 0)),
            ((-1, 1, 0, 0, 0, 0), (0, 0)),
            ((0, -1, 1, 0, 0, 0), (1, 0)),
            ((0, 0, -1, 1, 0, 0), (1, 0)),
            ((0, 0, 0, -1, 1, 0), (1, 0)),
            ((0, 0, 0, 0, -1, 1), (1, 0)),
            ((0, 0, 0, 0, 0, -1), (1, 0)),
        ],
        "sigma3p": [
            ((1, 0, 0, 0, 0, 0), (0, 0)),
            ((-1, 1, 0, 0, 0, 0), (0, 0)),
            ((0, -1, 1, 0, 0, 0), (1, 0)),
            ((0, 0, 1, 0, 0, 0), (-1, 1)),
            ((0, 0, 1, 0, 0, 0), (0, -1)),
        ],
    },
}

# length bound used when listing the generators of each ideal
GENERATOR_LENGTH = {
    "e6": {"sigma3": 4, "sigma3p": 4},
    "e7": {"sigma3": 5, "sigma3p": 4},
    "e8": {"sigma3": 6, "sigma3p": 4},
}

LEVI_BLOCKS = {"e6": {"sigma3": (2, 4), "sigma3p": (4, 2), "sigma0": (6,)}}

# -- Lie algebra gradings ---------------------------------------------------

GRADED_DIMS = {
    "e6": (1, 20, 36, 20, 1),
    "e7": (7, 35, 49, 35, 7),
    "e8": (8, 28, 56, 64, 56, 28, 8),
}
LIE_DIMENSION = {"e6": 78, "e7": 133, "e8": 248}
BIG_CELL = {"e6": 21, "e7": 42, "e8": 92}
MODULE_SPAN = {"e6": 4, "e7": 7, "e8": 16}

# -- equivariant displays ---------------------------------------------------


def _eq(name, dim_f, dim_g, *degrees):
    return EquivariantFormat(
        name,
        dim_f,
        dim_g,
        tuple(tuple(Summand(tuple(f), tuple(g), t) for f, g, t in deg) for deg in degrees),
    )


EQUIVARIANT = {
    ("e7", "sigma3"): _eq(
        "e7 sigma3", 5, 2,
        [((), (), 0)],
        [((3, 3, 3, 3, 3), (3, 3), 7), ((3, 3, 3, 3, 2), (2, 2), 6)],
        [((4, 4, 4, 4, 4), (4, 3), 9), ((5, 4, 4, 4, 4), (3, 3), 9)],
        [((6, 6, 6, 6, 6), (5, 4), 13)],
    ),
    ("e7", "sigma3p"): _eq(
        "e7 sigma3p", 3, 4,
        [((), (), 0)],
        [((3, 3, 3), (3, 3, 3, 3), 7), ((3, 3, 3), (3, 2, 2, 2), 6)],
        [((5, 5, 4), (4, 4, 4, 4), 10), ((5, 5, 5), (4, 4, 4, 3), 10)],
        [((7, 6, 6), (5, 5, 5, 5), 13)],
    ),
    ("e8", "sigma3"): _eq(
        "e8 sigma3", 6, 2,
        [((), (), 0)],
        [((6, 6, 6, 6, 6, 6), (6, 6), 16), ((6, 6, 6, 6, 6, 5), (5, 5), 15)],
        # twist 9 is printed; the weight rule forces 21
        [((8, 8, 8, 8, 8, 8), (8, 7), 9), ((9, 8, 8, 8, 8, 8), (7, 7), 21)],
        [((12, 12, 12, 12, 12, 12), (11, 10), 31)],
    ),
    ("e8", "sigma3p"): _eq(
        "e8 sigma3p", 4, 4,
        [((), (), 0)],
        [((6, 6, 6, 6), (6, 6, 6, 6), 16), ((6, 6, 6, 6), (6, 5, 5, 5), 15)],
        # twist 9 is printed; the weight rule forces 25
        [((10, 10, 10, 10), (9, 9, 9, 8), 9), ((10, 10, 10, 9), (9, 9, 9, 9), 25)],
        [((13, 12, 12, 12), (11, 11, 11, 11), 31)],
    ),
}

# expected outcome of the weight-rule check: corrected twists of misprinted summands
EQUIVARIANT_ERRATA = {
    ("e7", "sigma3"): [],
    ("e7", "sigma3p"): [],
    ("e8", "sigma3"): [21],
    ("e8", "sigma3p"): [25],
}

# -- exterior-algebra invariants --------------------------------------------

# degree of the hyperdiscriminant on g_1 and the number of variables
INVARIANT_DEGREE = {"e6": (4, 20), "e7": (7, 35), "e8": (16, 56)}
