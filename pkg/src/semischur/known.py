"""Published reference values used by the verification suites and tests.

Row-level data for orders 2 to 4 lives in ``data/order{n}.tsv`` and is read
through ``census.known_rows``.
"""
from __future__ import annotations

# equivalence classes of semigroups of order n = 0..7
CENSUS_COUNTS = {0: 1, 1: 1, 2: 4, 3: 18, 4: 126, 5: 1160, 6: 15973, 7: 836021}

# isomorphism classes (no anti-isomorphism identification), used as a generator cross-check
ISOMORPHISM_COUNTS = {0: 1, 1: 1, 2: 5, 3: 24, 4: 188, 5: 1915, 6: 28634}

# Ω value -> number of semigroups, as printed
OMEGA_DISTRIBUTIONS = {
    5: {1: 246, 2: 517, 3: 84, 4: 117, 5: 153, 6: 9, 7: 12, 8: 2, 9: 3, 10: 19, 15: 7, 52: 1},
    6: {
        1: 2093, 2: 5259, 3: 916, 4: 2202, 5: 2443, 6: 400, 7: 215, 8: 173, 9: 46, 10: 292,
        11: 12, 12: 17, 13: 2, 14: 13, 15: 1832, 16: 2, 17: 2, 18: 18, 20: 10, 22: 1,
        25: 5, 30: 9, 31: 1, 45: 1, 52: 8, 203: 1,
    },
    7: {
        1: 22667, 2: 67360, 3: 12394, 4: 40933, 5: 30789, 6: 8812, 7: 5338, 8: 5551,
        9: 1077, 10: 8846, 11: 125, 12: 680, 13: 73, 14: 471, 15: 423748, 16: 45356,
        17: 9503, 18: 836, 19: 89, 20: 823, 21: 25, 22: 72, 23: 7, 24: 10, 25: 265,
        26: 8, 27: 6, 28: 6, 29: 8, 30: 328, 31: 8, 32: 5, 33: 9, 34: 2, 35: 11, 36: 3,
        40: 1, 41: 3, 44: 2, 45: 9, 50: 8, 52: 149705, 53: 2, 54: 1, 55: 1, 57: 1,
        60: 9, 65: 1, 67: 6, 75: 7, 77: 1, 82: 1, 104: 9, 203: 9, 877: 1,
    },
}

# (mean, population stdev) of Ω, two decimals
OMEGA_MOMENTS = {3: (1.72, 1.02), 4: (2.29, 1.76), 5: (2.75, 2.35), 6: (4.67, 4.70), 7: (18.96, 16.24)}

# group -> Ω as (group, monoid, semigroup)
GROUP_COUNTS = {
    "Z1": (1, 1, 1), "Z2": (1, 1, 2), "Z3": (2, 2, 3), "Z4": (3, 3, 5), "V4": (5, 5, 9),
    "Z5": (3, 3, 4), "Z6": (7, 7, 11), "S3": (10, 22, 45), "Z7": (4, 4, 5), "Z8": (10, 10, 15),
    "E8": (100, 100, 143), "Z4xZ2": (28, 28, 43), "D4": (34, 66, 107), "Q8": (25, 26, 35),
    "Z9": (7, 7, 10), "E9": (40, 40, 49), "Z10": (10, 10, 15), "D5": (25, 95, 197),
    "Z11": (4, 4, 5), "Z12": (32, 32, 46), "Z6xZ2": (76, 76, 108), "A4": (52, 266, 482),
    "D6": (120, 324, 532), "Dic12": (54, 90, 138), "Z13": (6, 6, 7), "Z14": (13, 13, 19),
    "D7": (55, 237, 505), "Z15": (21, 21, 27),
}

GROUP_ORDERS = {name: int(name[1:]) if name[0] == "Z" and name[1:].isdigit() else None for name in GROUP_COUNTS}
GROUP_ORDERS.update({"V4": 4, "S3": 6, "E8": 8, "Z4xZ2": 8, "D4": 8, "Q8": 8, "E9": 9, "D5": 10,
                     "Z6xZ2": 12, "A4": 12, "D6": 12, "Dic12": 12, "D7": 14})

# Ω of individually named semigroups of orders 5 to 7, keyed by family spec
NAMED_OMEGA = {
    "OLO(3,2)": 7,
    "ORO(3,2)": 15,
    "OLO(2,3)": 6,
    "ORO(2,3)": 15,
    "S3": 45,
    "Z(6)": 11,
    "prod(LO(3),Z(2))": 31,
    "unite(unite(ORO(2,1),ORO(2,1)),CH(2))": 22,
    "OLO(2,4)": 16,
    "OLO(3,3)": 13,
    "prod(LO(3),RO(2))": 13,
    "Z(7)": 5,
    "LO(7)": 877,
    "unite(ORO(3,2),zero(RO(2)))": 55,
    "unite(unite(ORO(2,1),ORO(2,1)),K1(2))": 65,
    "OLO(3,2,3)": 36,
    "OLO(2,2,4)": 54,
}
