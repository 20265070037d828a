"""Dehn twist generator images for a fixed list of curves on the genus-4 surface.

Each curve is a cyclic word; a twist about a curve touching only handles 1..h
moves only x1..x2h, so the same entry serves every genus >= h. Only moved
generators are listed. Entries are re-validated when the catalog loads.
"""

CURVE_TWISTS = {
    "a1": ((1,), {2: (2, 1)}, {2: (2, -1)}),
    "a2": ((3,), {4: (4, 3)}, {4: (4, -3)}),
    "a3": ((5,), {6: (6, 5)}, {6: (6, -5)}),
    "a4": ((7,), {8: (8, 7)}, {8: (8, -7)}),
    "b1": ((2,), {1: (1, -2)}, {1: (1, 2)}),
    "b2": ((4,), {3: (3, -4)}, {3: (3, 4)}),
    "b3": ((6,), {5: (5, -6)}, {5: (5, 6)}),
    "b4": ((8,), {7: (7, -8)}, {7: (7, 8)}),
    "c1": ((2, -1, -2, 3), {2: (-3, 2, 1), 3: (-3, 2, 1, -2, 3, 2, -1, -2, 3), 4: (4, 2, -1, -2, 3)}, {2: (2, -1, -2, 3, 2), 3: (2, -1, -2, 3, 2, 1, -2), 4: (4, -3, 2, 1, -2)}),
    "c2": ((4, -3, -4, 5), {4: (-5, 4, 3), 5: (-5, 4, 3, -4, 5, 4, -3, -4, 5), 6: (6, 4, -3, -4, 5)}, {4: (4, -3, -4, 5, 4), 5: (4, -3, -4, 5, 4, 3, -4), 6: (6, -5, 4, 3, -4)}),
    "c3": ((6, -5, -6, 7), {6: (-7, 6, 5), 7: (-7, 6, 5, -6, 7, 6, -5, -6, 7), 8: (8, 6, -5, -6, 7)}, {6: (6, -5, -6, 7, 6), 7: (6, -5, -6, 7, 6, 5, -6), 8: (8, -7, 6, 5, -6)}),
    "d12": ((1, 3), {1: (-3, 1, 3), 2: (-3, -1, 3, 1, 2, 1, 3), 3: (-3, -1, 3, 1, 3), 4: (4, 1, 3)}, {1: (1, 3, 1, -3, -1), 2: (1, 3, -1, -3, 2, -3, -1), 3: (1, 3, -1), 4: (4, -3, -1)}),
    "d13": ((1, 5), {1: (-5, 1, 5), 2: (-5, -1, 5, 1, 2, 1, 5), 3: (-5, -1, 5, 1, 3, -1, -5, 1, 5), 4: (-5, -1, 5, 1, 4, -1, -5, 1, 5), 5: (-5, -1, 5, 1, 5), 6: (6, 1, 5)}, {1: (1, 5, 1, -5, -1), 2: (1, 5, -1, -5, 2, -5, -1), 3: (1, 5, -1, -5, 3, 5, 1, -5, -1), 4: (1, 5, -1, -5, 4, 5, 1, -5, -1), 5: (1, 5, -1), 6: (6, -5, -1)}),
    "d14": ((1, 7), {1: (-7, 1, 7), 2: (-7, -1, 7, 1, 2, 1, 7), 3: (-7, -1, 7, 1, 3, -1, -7, 1, 7), 4: (-7, -1, 7, 1, 4, -1, -7, 1, 7), 5: (-7, -1, 7, 1, 5, -1, -7, 1, 7), 6: (-7, -1, 7, 1, 6, -1, -7, 1, 7), 7: (-7, -1, 7, 1, 7), 8: (8, 1, 7)}, {1: (1, 7, 1, -7, -1), 2: (1, 7, -1, -7, 2, -7, -1), 3: (1, 7, -1, -7, 3, 7, 1, -7, -1), 4: (1, 7, -1, -7, 4, 7, 1, -7, -1), 5: (1, 7, -1, -7, 5, 7, 1, -7, -1), 6: (1, 7, -1, -7, 6, 7, 1, -7, -1), 7: (1, 7, -1), 8: (8, -7, -1)}),
    "d23": ((3, 5), {3: (-5, 3, 5), 4: (-5, -3, 5, 3, 4, 3, 5), 5: (-5, -3, 5, 3, 5), 6: (6, 3, 5)}, {3: (3, 5, 3, -5, -3), 4: (3, 5, -3, -5, 4, -5, -3), 5: (3, 5, -3), 6: (6, -5, -3)}),
    "d24": ((3, 7), {3: (-7, 3, 7), 4: (-7, -3, 7, 3, 4, 3, 7), 5: (-7, -3, 7, 3, 5, -3, -7, 3, 7), 6: (-7, -3, 7, 3, 6, -3, -7, 3, 7), 7: (-7, -3, 7, 3, 7), 8: (8, 3, 7)}, {3: (3, 7, 3, -7, -3), 4: (3, 7, -3, -7, 4, -7, -3), 5: (3, 7, -3, -7, 5, 7, 3, -7, -3), 6: (3, 7, -3, -7, 6, 7, 3, -7, -3), 7: (3, 7, -3), 8: (8, -7, -3)}),
    "d34": ((5, 7), {5: (-7, 5, 7), 6: (-7, -5, 7, 5, 6, 5, 7), 7: (-7, -5, 7, 5, 7), 8: (8, 5, 7)}, {5: (5, 7, 5, -7, -5), 6: (5, 7, -5, -7, 6, -7, -5), 7: (5, 7, -5), 8: (8, -7, -5)}),
    "e12": ((-4, 1, 2, -1), {1: (4, 1, -2, 1, -2, -1, 4, 1, 2, -1, -4), 2: (4, 1, -2, -1, -4, 1, 2, -1, 2, 1, -2, -1, 4, 1, 2, -1, -4), 3: (4, 1, -2, -1, -4, 1, 2, -1, 3, 1, 2, -1, -4), 4: (4, 1, -2, -1, 4, 1, 2, -1, -4)}, {1: (1, 2, -1, -4, 1, -4, 1, 2, -1, 4, 1, -2, -1), 2: (1, 2, -1, -4, 1, -2, -1, 4, 2, -4, 1, 2, -1, 4, 1, -2, -1), 3: (1, 2, -1, -4, 1, -2, -1, 4, 3, 4, 1, -2, -1), 4: (1, 2, -1, 4, 1, -2, -1)}),
    "e13": ((-6, 1, 2, -1), {1: (6, 1, -2, 1, -2, -1, 6, 1, 2, -1, -6), 2: (6, 1, -2, -1, -6, 1, 2, -1, 2, 1, -2, -1, 6, 1, 2, -1, -6), 3: (6, 1, -2, -1, -6, 1, 2, -1, 3, 1, -2, -1, 6, 1, 2, -1, -6), 4: (6, 1, -2, -1, -6, 1, 2, -1, 4, 1, -2, -1, 6, 1, 2, -1, -6), 5: (6, 1, -2, -1, -6, 1, 2, -1, 5, 1, 2, -1, -6), 6: (6, 1, -2, -1, 6, 1, 2, -1, -6)}, {1: (1, 2, -1, -6, 1, -6, 1, 2, -1, 6, 1, -2, -1), 2: (1, 2, -1, -6, 1, -2, -1, 6, 2, -6, 1, 2, -1, 6, 1, -2, -1), 3: (1, 2, -1, -6, 1, -2, -1, 6, 3, -6, 1, 2, -1, 6, 1, -2, -1), 4: (1, 2, -1, -6, 1, -2, -1, 6, 4, -6, 1, 2, -1, 6, 1, -2, -1), 5: (1, 2, -1, -6, 1, -2, -1, 6, 5, 6, 1, -2, -1), 6: (1, 2, -1, 6, 1, -2, -1)}),
    "e14": ((-8, 1, 2, -1), {1: (8, 1, -2, 1, -2, -1, 8, 1, 2, -1, -8), 2: (8, 1, -2, -1, -8, 1, 2, -1, 2, 1, -2, -1, 8, 1, 2, -1, -8), 3: (8, 1, -2, -1, -8, 1, 2, -1, 3, 1, -2, -1, 8, 1, 2, -1, -8), 4: (8, 1, -2, -1, -8, 1, 2, -1, 4, 1, -2, -1, 8, 1, 2, -1, -8), 5: (8, 1, -2, -1, -8, 1, 2, -1, 5, 1, -2, -1, 8, 1, 2, -1, -8), 6: (8, 1, -2, -1, -8, 1, 2, -1, 6, 1, -2, -1, 8, 1, 2, -1, -8), 7: (8, 1, -2, -1, -8, 1, 2, -1, 7, 1, 2, -1, -8), 8: (8, 1, -2, -1, 8, 1, 2, -1, -8)}, {1: (1, 2, -1, -8, 1, -8, 1, 2, -1, 8, 1, -2, -1), 2: (1, 2, -1, -8, 1, -2, -1, 8, 2, -8, 1, 2, -1, 8, 1, -2, -1), 3: (1, 2, -1, -8, 1, -2, -1, 8, 3, -8, 1, 2, -1, 8, 1, -2, -1), 4: (1, 2, -1, -8, 1, -2, -1, 8, 4, -8, 1, 2, -1, 8, 1, -2, -1), 5: (1, 2, -1, -8, 1, -2, -1, 8, 5, -8, 1, 2, -1, 8, 1, -2, -1), 6: (1, 2, -1, -8, 1, -2, -1, 8, 6, -8, 1, 2, -1, 8, 1, -2, -1), 7: (1, 2, -1, -8, 1, -2, -1, 8, 7, 8, 1, -2, -1), 8: (1, 2, -1, 8, 1, -2, -1)}),
    "e23": ((-6, 3, 4, -3), {3: (6, 3, -4, 3, -4, -3, 6, 3, 4, -3, -6), 4: (6, 3, -4, -3, -6, 3, 4, -3, 4, 3, -4, -3, 6, 3, 4, -3, -6), 5: (6, 3, -4, -3, -6, 3, 4, -3, 5, 3, 4, -3, -6), 6: (6, 3, -4, -3, 6, 3, 4, -3, -6)}, {3: (3, 4, -3, -6, 3, -6, 3, 4, -3, 6, 3, -4, -3), 4: (3, 4, -3, -6, 3, -4, -3, 6, 4, -6, 3, 4, -3, 6, 3, -4, -3), 5: (3, 4, -3, -6, 3, -4, -3, 6, 5, 6, 3, -4, -3), 6: (3, 4, -3, 6, 3, -4, -3)}),
    "e24": ((-8, 3, 4, -3), {3: (8, 3, -4, 3, -4, -3, 8, 3, 4, -3, -8), 4: (8, 3, -4, -3, -8, 3, 4, -3, 4, 3, -4, -3, 8, 3, 4, -3, -8), 5: (8, 3, -4, -3, -8, 3, 4, -3, 5, 3, -4, -3, 8, 3, 4, -3, -8), 6: (8, 3, -4, -3, -8, 3, 4, -3, 6, 3, -4, -3, 8, 3, 4, -3, -8), 7: (8, 3, -4, -3, -8, 3, 4, -3, 7, 3, 4, -3, -8), 8: (8, 3, -4, -3, 8, 3, 4, -3, -8)}, {3: (3, 4, -3, -8, 3, -8, 3, 4, -3, 8, 3, -4, -3), 4: (3, 4, -3, -8, 3, -4, -3, 8, 4, -8, 3, 4, -3, 8, 3, -4, -3), 5: (3, 4, -3, -8, 3, -4, -3, 8, 5, -8, 3, 4, -3, 8, 3, -4, -3), 6: (3, 4, -3, -8, 3, -4, -3, 8, 6, -8, 3, 4, -3, 8, 3, -4, -3), 7: (3, 4, -3, -8, 3, -4, -3, 8, 7, 8, 3, -4, -3), 8: (3, 4, -3, 8, 3, -4, -3)}),
    "e34": ((-8, 5, 6, -5), {5: (8, 5, -6, 5, -6, -5, 8, 5, 6, -5, -8), 6: (8, 5, -6, -5, -8, 5, 6, -5, 6, 5, -6, -5, 8, 5, 6, -5, -8), 7: (8, 5, -6, -5, -8, 5, 6, -5, 7, 5, 6, -5, -8), 8: (8, 5, -6, -5, 8, 5, 6, -5, -8)}, {5: (5, 6, -5, -8, 5, -8, 5, 6, -5, 8, 5, -6, -5), 6: (5, 6, -5, -8, 5, -6, -5, 8, 6, -8, 5, 6, -5, 8, 5, -6, -5), 7: (5, 6, -5, -8, 5, -6, -5, 8, 7, 8, 5, -6, -5), 8: (5, 6, -5, 8, 5, -6, -5)}),
    "p1": ((-4, 1, 2, -1), {1: (4, 1, -2, 1, -2, -1, 4, 1, 2, -1, -4), 2: (4, 1, -2, -1, -4, 1, 2, -1, 2, 1, -2, -1, 4, 1, 2, -1, -4), 3: (4, 1, -2, -1, -4, 1, 2, -1, 3, 1, 2, -1, -4), 4: (4, 1, -2, -1, 4, 1, 2, -1, -4)}, {1: (1, 2, -1, -4, 1, -4, 1, 2, -1, 4, 1, -2, -1), 2: (1, 2, -1, -4, 1, -2, -1, 4, 2, -4, 1, 2, -1, 4, 1, -2, -1), 3: (1, 2, -1, -4, 1, -2, -1, 4, 3, 4, 1, -2, -1), 4: (1, 2, -1, 4, 1, -2, -1)}),
    "p10": ((-2,), {1: (1, -2)}, {1: (1, 2)}),
    "p11": ((-3,), {4: (4, 3)}, {4: (4, -3)}),
    "p12": ((-4,), {3: (3, -4)}, {3: (3, 4)}),
    "p13": ((-5, -3, 5, -1), {1: (-5, -3, 5, 1, -5, 3, 5), 2: (-5, -3, 5, -1, -5, 3, 5, 1, 2, 1, -5, 3, 5), 3: (-5, -3, 5, -1, -5, 3, 5, 1, 5, -1, -5, 3, 5, 1, -5, -1, -5, -3, 5, 1, -5, 3, 5), 4: (-5, -3, 5, -1, -5, 3, 5, 1, 5, -1, -5, -3, 5, 1, -5, 3, 4, 3, 5, 1, -5, -1, -5, -3, 5, 1, -5, 3, 5), 5: (-5, -3, 5, -1, -5, 3, 5, 1, 5, -1, -5, -3, 5, 1, -5, 3, 5), 6: (6, -1, -5, -3, 5, 1, -5, 3, 5)}, {1: (1, -5, 3, 5, 1, -5, -3, 5, -1), 2: (1, -5, 3, 5, -1, -5, -3, 5, 2, -5, -3, 5, -1), 3: (1, -5, 3, 5, -1, -5, -3, 5, 3, 5, 1, -5, 3, 5, -1, -5, -3, -5, 3, 5, 1, -5, -3, 5, -1), 4: (1, -5, 3, 5, -1, -5, -3, 5, 3, 5, 1, -5, -3, 5, -1, -5, 4, 5, -1, -5, -3, -5, 3, 5, 1, -5, -3, 5, -1), 5: (1, -5, 3, 5, -1, -5, -3, 5, 3, 5, 1, -5, -3, 5, -1), 6: (6, -5, 3, 5, 1, -5, -3, 5, -1)}),
    "p14": ((-6, -1, 6, -3), {1: (6, -3, -6, 1, 6, 3, -6), 2: (6, -3, -6, -1, 6, 3, -6, 1, 2, 1, 6, 3, -6), 3: (6, -3, -6, -1, 6, 3, -6, 1, -6, -1, 6, 3, -6, 1, 6, -1, 6, -3, -6, 1, 6, 3, -6), 4: (6, -3, -6, -1, 6, 3, -6, 1, -6, -1, 6, -3, -6, 1, 6, 3, 4, 3, -6, 1, 6, -1, 6, -3, -6, 1, 6, 3, -6), 5: (6, -3, -6, -1, 6, 3, -6, 1, -6, -1, 6, -3, -6, 1, 6, 3, 5, -1, 6, -3, -6, 1, 6, 3, -6), 6: (6, -3, -6, -1, 6, 3, -6, 1, 6, -1, 6, -3, -6, 1, 6, 3, -6)}, {1: (1, 6, 3, -6, 1, 6, -3, -6, -1), 2: (1, 6, 3, -6, -1, 6, -3, -6, 2, 6, -3, -6, -1), 3: (1, 6, 3, -6, -1, 6, -3, -6, 3, -6, 1, 6, 3, -6, -1, 6, -3, 6, 3, -6, 1, 6, -3, -6, -1), 4: (1, 6, 3, -6, -1, 6, -3, -6, 3, -6, 1, 6, -3, -6, -1, 6, 4, -6, -1, 6, -3, 6, 3, -6, 1, 6, -3, -6, -1), 5: (1, 6, 3, -6, -1, 6, -3, -6, 3, -6, 1, 6, -3, -6, -1, 6, 5, 6, 3, -6, 1, 6, -3, -6, -1), 6: (1, 6, 3, -6, -1, 6, -3, 6, 3, -6, 1, 6, -3, -6, -1)}),
    "p15": ((-5, -4, 5, 1), {1: (-5, 4, 5, 1, -5, -4, 5), 2: (-5, 4, 5, -1, -5, -4, 5, 1, 2, 1, -5, -4, 5), 3: (-5, 4, 5, -1, -5, -4, 5, 1, 3, -4, 5, 1, -5, -1, -5, 4, 5, 1, -5, -4, 5), 4: (-5, 4, 5, -1, -5, -4, 5, 1, 5, -1, -5, 4, 5, 1, -5, -1, -5, 4, 5, 1, -5, -4, 5), 5: (-5, 4, 5, -1, -5, -4, 5, 1, 5, -1, -5, 4, 5, 1, -5, -4, 5), 6: (6, -1, -5, 4, 5, 1, -5, -4, 5)}, {1: (1, -5, -4, 5, 1, -5, 4, 5, -1), 2: (1, -5, -4, 5, -1, -5, 4, 5, 2, -5, 4, 5, -1), 3: (1, -5, -4, 5, -1, -5, 4, 5, 3, 5, -1, -5, 4, -5, -4, 5, 1, -5, 4, 5, -1), 4: (1, -5, -4, 5, -1, -5, 4, 5, -4, 5, 1, -5, 4, 5, -1, -5, 4, -5, -4, 5, 1, -5, 4, 5, -1), 5: (1, -5, -4, 5, -1, -5, 4, 5, -4, 5, 1, -5, 4, 5, -1), 6: (6, -5, -4, 5, 1, -5, 4, 5, -1)}),
    "p16": ((-6, -1, 6, 4), {1: (6, 4, -6, 1, 6, -4, -6), 2: (6, 4, -6, -1, 6, -4, -6, 1, 2, 1, 6, -4, -6), 3: (6, 4, -6, -1, 6, -4, -6, 1, 3, -4, -6, 1, 6, -1, 6, 4, -6, 1, 6, -4, -6), 4: (6, 4, -6, -1, 6, -4, -6, 1, -6, -1, 6, 4, -6, 1, 6, -1, 6, 4, -6, 1, 6, -4, -6), 5: (6, 4, -6, -1, 6, -4, -6, 1, -6, -1, 6, 4, -6, 1, 6, -4, 5, -1, 6, 4, -6, 1, 6, -4, -6), 6: (6, 4, -6, -1, 6, -4, -6, 1, 6, -1, 6, 4, -6, 1, 6, -4, -6)}, {1: (1, 6, -4, -6, 1, 6, 4, -6, -1), 2: (1, 6, -4, -6, -1, 6, 4, -6, 2, 6, 4, -6, -1), 3: (1, 6, -4, -6, -1, 6, 4, -6, 3, -6, -1, 6, 4, 6, -4, -6, 1, 6, 4, -6, -1), 4: (1, 6, -4, -6, -1, 6, 4, -6, -4, -6, 1, 6, 4, -6, -1, 6, 4, 6, -4, -6, 1, 6, 4, -6, -1), 5: (1, 6, -4, -6, -1, 6, 4, -6, -4, -6, 1, 6, 4, -6, -1, 6, 5, 6, -4, -6, 1, 6, 4, -6, -1), 6: (1, 6, -4, -6, -1, 6, 4, 6, -4, -6, 1, 6, 4, -6, -1)}),
    "p17": ((-5, -3, 5, 2), {1: (1, -2, -5, 3, 5), 2: (-5, -3, 5, 2, -5, 3, 5), 3: (-5, -3, 5, 2, -5, 3, 5, -2, 5, 2, -5, 3, 5, -2, -5, 2, -5, -3, 5, -2, -5, 3, 5), 4: (-5, -3, 5, 2, -5, 3, 5, -2, 5, 2, -5, -3, 5, -2, -5, 3, 4, 3, 5, -2, -5, 2, -5, -3, 5, -2, -5, 3, 5), 5: (-5, -3, 5, 2, -5, 3, 5, -2, 5, 2, -5, -3, 5, -2, -5, 3, 5), 6: (6, 2, -5, -3, 5, -2, -5, 3, 5)}, {1: (1, -5, -3, 5, 2), 2: (-2, -5, 3, 5, 2, -5, -3, 5, 2), 3: (-2, -5, 3, 5, 2, -5, -3, 5, 3, 5, -2, -5, 3, 5, 2, -5, -3, -5, 3, 5, -2, -5, -3, 5, 2), 4: (-2, -5, 3, 5, 2, -5, -3, 5, 3, 5, -2, -5, -3, 5, 2, -5, 4, 5, 2, -5, -3, -5, 3, 5, -2, -5, -3, 5, 2), 5: (-2, -5, 3, 5, 2, -5, -3, 5, 3, 5, -2, -5, -3, 5, 2), 6: (6, -5, 3, 5, -2, -5, -3, 5, 2)}),
    "p18": ((-6, -2, 6, 3), {1: (1, -2, 6, 3, -6), 2: (6, -3, -6, 2, 6, 3, -6), 3: (6, -3, -6, 2, 6, 3, -6, -2, -6, 2, 6, 3, -6, -2, 6, 2, 6, -3, -6, -2, 6, 3, -6), 4: (6, -3, -6, 2, 6, 3, -6, -2, -6, 2, 6, -3, -6, -2, 6, 3, 4, 3, -6, -2, 6, 2, 6, -3, -6, -2, 6, 3, -6), 5: (6, -3, -6, 2, 6, 3, -6, -2, -6, 2, 6, -3, -6, -2, 6, 3, 5, 2, 6, -3, -6, -2, 6, 3, -6), 6: (6, -3, -6, 2, 6, 3, -6, -2, 6, 2, 6, -3, -6, -2, 6, 3, -6)}, {1: (1, 6, -3, -6, 2), 2: (-2, 6, 3, -6, 2, 6, -3, -6, 2), 3: (-2, 6, 3, -6, 2, 6, -3, -6, 3, -6, -2, 6, 3, -6, 2, 6, -3, 6, 3, -6, -2, 6, -3, -6, 2), 4: (-2, 6, 3, -6, 2, 6, -3, -6, 3, -6, -2, 6, -3, -6, 2, 6, 4, -6, 2, 6, -3, 6, 3, -6, -2, 6, -3, -6, 2), 5: (-2, 6, 3, -6, 2, 6, -3, -6, 3, -6, -2, 6, -3, -6, 2, 6, 5, 6, 3, -6, -2, 6, -3, -6, 2), 6: (-2, 6, 3, -6, 2, 6, -3, 6, 3, -6, -2, 6, -3, -6, 2)}),
    "p19": ((-5, -4, 5, -2), {1: (1, -2, -5, -4, 5), 2: (-5, 4, 5, 2, -5, -4, 5), 3: (-5, 4, 5, 2, -5, -4, 5, -2, 3, -4, 5, -2, -5, 2, -5, 4, 5, -2, -5, -4, 5), 4: (-5, 4, 5, 2, -5, -4, 5, -2, 5, 2, -5, 4, 5, -2, -5, 2, -5, 4, 5, -2, -5, -4, 5), 5: (-5, 4, 5, 2, -5, -4, 5, -2, 5, 2, -5, 4, 5, -2, -5, -4, 5), 6: (6, 2, -5, 4, 5, -2, -5, -4, 5)}, {1: (1, -5, 4, 5, 2), 2: (-2, -5, -4, 5, 2, -5, 4, 5, 2), 3: (-2, -5, -4, 5, 2, -5, 4, 5, 3, 5, 2, -5, 4, -5, -4, 5, -2, -5, 4, 5, 2), 4: (-2, -5, -4, 5, 2, -5, 4, 5, -4, 5, -2, -5, 4, 5, 2, -5, 4, -5, -4, 5, -2, -5, 4, 5, 2), 5: (-2, -5, -4, 5, 2, -5, 4, 5, -4, 5, -2, -5, 4, 5, 2), 6: (6, -5, -4, 5, -2, -5, 4, 5, 2)}),
    "p2": ((-6, 1, 2, -1), {1: (6, 1, -2, 1, -2, -1, 6, 1, 2, -1, -6), 2: (6, 1, -2, -1, -6, 1, 2, -1, 2, 1, -2, -1, 6, 1, 2, -1, -6), 3: (6, 1, -2, -1, -6, 1, 2, -1, 3, 1, -2, -1, 6, 1, 2, -1, -6), 4: (6, 1, -2, -1, -6, 1, 2, -1, 4, 1, -2, -1, 6, 1, 2, -1, -6), 5: (6, 1, -2, -1, -6, 1, 2, -1, 5, 1, 2, -1, -6), 6: (6, 1, -2, -1, 6, 1, 2, -1, -6)}, {1: (1, 2, -1, -6, 1, -6, 1, 2, -1, 6, 1, -2, -1), 2: (1, 2, -1, -6, 1, -2, -1, 6, 2, -6, 1, 2, -1, 6, 1, -2, -1), 3: (1, 2, -1, -6, 1, -2, -1, 6, 3, -6, 1, 2, -1, 6, 1, -2, -1), 4: (1, 2, -1, -6, 1, -2, -1, 6, 4, -6, 1, 2, -1, 6, 1, -2, -1), 5: (1, 2, -1, -6, 1, -2, -1, 6, 5, 6, 1, -2, -1), 6: (1, 2, -1, 6, 1, -2, -1)}),
    "p20": ((-6, -2, 6, -4), {1: (1, -2, 6, -4, -6), 2: (6, 4, -6, 2, 6, -4, -6), 3: (6, 4, -6, 2, 6, -4, -6, -2, 3, -4, -6, -2, 6, 2, 6, 4, -6, -2, 6, -4, -6), 4: (6, 4, -6, 2, 6, -4, -6, -2, -6, 2, 6, 4, -6, -2, 6, 2, 6, 4, -6, -2, 6, -4, -6), 5: (6, 4, -6, 2, 6, -4, -6, -2, -6, 2, 6, 4, -6, -2, 6, -4, 5, 2, 6, 4, -6, -2, 6, -4, -6), 6: (6, 4, -6, 2, 6, -4, -6, -2, 6, 2, 6, 4, -6, -2, 6, -4, -6)}, {1: (1, 6, 4, -6, 2), 2: (-2, 6, -4, -6, 2, 6, 4, -6, 2), 3: (-2, 6, -4, -6, 2, 6, 4, -6, 3, -6, 2, 6, 4, 6, -4, -6, -2, 6, 4, -6, 2), 4: (-2, 6, -4, -6, 2, 6, 4, -6, -4, -6, -2, 6, 4, -6, 2, 6, 4, 6, -4, -6, -2, 6, 4, -6, 2), 5: (-2, 6, -4, -6, 2, 6, 4, -6, -4, -6, -2, 6, 4, -6, 2, 6, 5, 6, -4, -6, -2, 6, 4, -6, 2), 6: (-2, 6, -4, -6, 2, 6, 4, 6, -4, -6, -2, 6, 4, -6, 2)}),
    "p3": ((-4, 1, 2, -3), {1: (4, 3, -2, -2, -1, 4, 3, 1, 2, -3, -4), 2: (4, 3, -2, -1, -3, -4, 1, 2, 2, 1, 2, -3, -4), 3: (4, 3, -2, -1, -3, -4, 1, 2, 3, 1, 2, -3, -4), 4: (4, 3, -2, -1, 4, -2, -1, 4, 3, 1, 2, -3, -4)}, {1: (1, 2, -3, -4, 1, -3, -4, 1, 2, 4, 3, -2, -1), 2: (1, 2, -3, -4, -2, -1, 4, 3, 2, 4, 3, -2, -1), 3: (1, 2, -3, -4, -2, -1, 4, 3, 3, 4, 3, -2, -1), 4: (1, 2, -3, -3, -4, 1, 2, 4, 3, -2, -1)}),
    "p4": ((-6, 1, 2, -5), {1: (6, 5, -2, -2, -1, 6, 5, 1, 2, -5, -6), 2: (6, 5, -2, -1, -5, -6, 1, 2, 2, 1, 2, -5, -6), 3: (6, 5, -2, -1, -5, -6, 1, 2, 3, -2, -1, 6, 5, 1, 2, -5, -6), 4: (6, 5, -2, -1, -5, -6, 1, 2, 4, -2, -1, 6, 5, 1, 2, -5, -6), 5: (6, 5, -2, -1, -5, -6, 1, 2, 5, 1, 2, -5, -6), 6: (6, 5, -2, -1, 6, -2, -1, 6, 5, 1, 2, -5, -6)}, {1: (1, 2, -5, -6, 1, -5, -6, 1, 2, 6, 5, -2, -1), 2: (1, 2, -5, -6, -2, -1, 6, 5, 2, 6, 5, -2, -1), 3: (1, 2, -5, -6, -2, -1, 6, 5, 3, -5, -6, 1, 2, 6, 5, -2, -1), 4: (1, 2, -5, -6, -2, -1, 6, 5, 4, -5, -6, 1, 2, 6, 5, -2, -1), 5: (1, 2, -5, -6, -2, -1, 6, 5, 5, 6, 5, -2, -1), 6: (1, 2, -5, -5, -6, 1, 2, 6, 5, -2, -1)}),
    "p5": ((-6, 3, 4, -3), {3: (6, 3, -4, 3, -4, -3, 6, 3, 4, -3, -6), 4: (6, 3, -4, -3, -6, 3, 4, -3, 4, 3, -4, -3, 6, 3, 4, -3, -6), 5: (6, 3, -4, -3, -6, 3, 4, -3, 5, 3, 4, -3, -6), 6: (6, 3, -4, -3, 6, 3, 4, -3, -6)}, {3: (3, 4, -3, -6, 3, -6, 3, 4, -3, 6, 3, -4, -3), 4: (3, 4, -3, -6, 3, -4, -3, 6, 4, -6, 3, 4, -3, 6, 3, -4, -3), 5: (3, 4, -3, -6, 3, -4, -3, 6, 5, 6, 3, -4, -3), 6: (3, 4, -3, 6, 3, -4, -3)}),
    "p6": ((-6, 3, 4, -5), {3: (6, 5, -4, -4, -3, 6, 5, 3, 4, -5, -6), 4: (6, 5, -4, -3, -5, -6, 3, 4, 4, 3, 4, -5, -6), 5: (6, 5, -4, -3, -5, -6, 3, 4, 5, 3, 4, -5, -6), 6: (6, 5, -4, -3, 6, -4, -3, 6, 5, 3, 4, -5, -6)}, {3: (3, 4, -5, -6, 3, -5, -6, 3, 4, 6, 5, -4, -3), 4: (3, 4, -5, -6, -4, -3, 6, 5, 4, 6, 5, -4, -3), 5: (3, 4, -5, -6, -4, -3, 6, 5, 5, 6, 5, -4, -3), 6: (3, 4, -5, -5, -6, 3, 4, 6, 5, -4, -3)}),
    "p7": ((-1,), {2: (2, 1)}, {2: (2, -1)}),
    "p8": ((-1,), {2: (2, 1)}, {2: (2, -1)}),
    "p9": ((-2,), {1: (1, -2)}, {1: (1, 2)}),
    "q1": ((-4, -3, 2, 3), {1: (1, -2, 3, 4, -3), 2: (3, -4, -3, 2, 3, 4, -3), 3: (3, -4, -3, 2, 3)}, {1: (1, 3, -4, -3, 2), 2: (-2, 3, 4, -3, 2, 3, -4, -3, 2), 3: (-2, 3, 4)}),
    "q10": ((-6, -5, 2, 6, 5), {1: (1, -2, 5, 6, -5, -6), 2: (6, 5, -6, -5, 2, 5, 6, -5, -6), 3: (6, 5, -6, -5, 2, 5, 6, -5, -6, -2, 3, 2, 6, 5, -6, -5, -2, 5, 6, -5, -6), 4: (6, 5, -6, -5, 2, 5, 6, -5, -6, -2, 4, 2, 6, 5, -6, -5, -2, 5, 6, -5, -6), 5: (6, 5, -6, -5, 2, 5, -2, 5, 6, -5, -6), 6: (6, 5, -6, -5, 2, 6, -2, 5, 6, -5, -6)}, {1: (1, 6, 5, -6, -5, 2), 2: (-2, 5, 6, -5, -6, 2, 6, 5, -6, -5, 2), 3: (-2, 5, 6, -5, -6, 2, 6, 5, -6, -5, 3, 5, 6, -5, -6, -2, 6, 5, -6, -5, 2), 4: (-2, 5, 6, -5, -6, 2, 6, 5, -6, -5, 4, 5, 6, -5, -6, -2, 6, 5, -6, -5, 2), 5: (-2, 5, 6, -5, -6, 5, 6, 5, -6, -5, 2), 6: (-2, 5, 6, -5, 6, 5, -6, -5, 2)}),
    "q11": ((-6, -5, -3, 6, 5), {3: (6, 5, -6, -5, 3, 5, 6, -5, -6), 4: (6, 5, -6, -5, -3, 5, 6, -5, -6, 3, 4, 3, 5, 6, -5, -6), 5: (6, 5, -6, -5, -3, 5, 3, 5, 6, -5, -6), 6: (6, 5, -6, -5, -3, 6, 3, 5, 6, -5, -6)}, {3: (3, 5, 6, -5, -6, 3, 6, 5, -6, -5, -3), 4: (3, 5, 6, -5, -6, -3, 6, 5, -6, -5, 4, 6, 5, -6, -5, -3), 5: (3, 5, 6, -5, -6, 5, 6, 5, -6, -5, -3), 6: (3, 5, 6, -5, 6, 5, -6, -5, -3)}),
    "q12": ((-6, -5, 4, 6, 5), {3: (3, -4, 5, 6, -5, -6), 4: (6, 5, -6, -5, 4, 5, 6, -5, -6), 5: (6, 5, -6, -5, 4, 5, -4, 5, 6, -5, -6), 6: (6, 5, -6, -5, 4, 6, -4, 5, 6, -5, -6)}, {3: (3, 6, 5, -6, -5, 4), 4: (-4, 5, 6, -5, -6, 4, 6, 5, -6, -5, 4), 5: (-4, 5, 6, -5, -6, 5, 6, 5, -6, -5, 4), 6: (-4, 5, 6, -5, 6, 5, -6, -5, 4)}),
    "q13": ((-6, -5, -3, -1, 6, 5), {1: (6, 5, -6, -5, -3, 1, 3, 5, 6, -5, -6), 2: (6, 5, -6, -5, -3, -1, 3, 5, 6, -5, -6, 1, 2, 1, 3, 5, 6, -5, -6), 3: (6, 5, -6, -5, -3, -1, 3, 1, 3, 5, 6, -5, -6), 4: (6, 5, -6, -5, -3, -1, 5, 6, -5, -6, 1, 3, 4, 1, 3, 5, 6, -5, -6), 5: (6, 5, -6, -5, -3, -1, 5, 1, 3, 5, 6, -5, -6), 6: (6, 5, -6, -5, -3, -1, 6, 1, 3, 5, 6, -5, -6)}, {1: (1, 3, 5, 6, -5, -6, 1, 6, 5, -6, -5, -3, -1), 2: (1, 3, 5, 6, -5, -6, -1, 6, 5, -6, -5, -3, 2, 6, 5, -6, -5, -3, -1), 3: (1, 3, 5, 6, -5, -6, 3, 6, 5, -6, -5, -3, -1), 4: (1, 3, 5, 6, -5, -6, -3, -1, 6, 5, -6, -5, 4, 6, 5, -6, -5, -3, -1), 5: (1, 3, 5, 6, -5, -6, 5, 6, 5, -6, -5, -3, -1), 6: (1, 3, 5, 6, -5, 6, 5, -6, -5, -3, -1)}),
    "q14": ((-6, -5, -3, -1, 6, 5), {1: (6, 5, -6, -5, -3, 1, 3, 5, 6, -5, -6), 2: (6, 5, -6, -5, -3, -1, 3, 5, 6, -5, -6, 1, 2, 1, 3, 5, 6, -5, -6), 3: (6, 5, -6, -5, -3, -1, 3, 1, 3, 5, 6, -5, -6), 4: (6, 5, -6, -5, -3, -1, 5, 6, -5, -6, 1, 3, 4, 1, 3, 5, 6, -5, -6), 5: (6, 5, -6, -5, -3, -1, 5, 1, 3, 5, 6, -5, -6), 6: (6, 5, -6, -5, -3, -1, 6, 1, 3, 5, 6, -5, -6)}, {1: (1, 3, 5, 6, -5, -6, 1, 6, 5, -6, -5, -3, -1), 2: (1, 3, 5, 6, -5, -6, -1, 6, 5, -6, -5, -3, 2, 6, 5, -6, -5, -3, -1), 3: (1, 3, 5, 6, -5, -6, 3, 6, 5, -6, -5, -3, -1), 4: (1, 3, 5, 6, -5, -6, -3, -1, 6, 5, -6, -5, 4, 6, 5, -6, -5, -3, -1), 5: (1, 3, 5, 6, -5, -6, 5, 6, 5, -6, -5, -3, -1), 6: (1, 3, 5, 6, -5, 6, 5, -6, -5, -3, -1)}),
    "q15": ((-4, -3, 2, 1, -2, 3), {2: (3, -4, -3, 2, 1), 3: (3, -4, -3, 2, 1, -2, 3)}, {2: (2, -1, -2, 3, 4, -3, 2), 3: (2, -1, -2, 3, 4)}),
    "q16": ((-4, -3, 2, 1, -2, 3), {2: (3, -4, -3, 2, 1), 3: (3, -4, -3, 2, 1, -2, 3)}, {2: (2, -1, -2, 3, 4, -3, 2), 3: (2, -1, -2, 3, 4)}),
    "q17": ((-6, -5, -3, 2, 6, 5), {1: (1, -2, 3, 5, 6, -5, -6), 2: (6, 5, -6, -5, -3, 2, 3, 5, 6, -5, -6), 3: (6, 5, -6, -5, -3, 2, 3, -2, 3, 5, 6, -5, -6), 4: (6, 5, -6, -5, -3, 2, 5, 6, -5, -6, -2, 3, 4, -2, 3, 5, 6, -5, -6), 5: (6, 5, -6, -5, -3, 2, 5, -2, 3, 5, 6, -5, -6), 6: (6, 5, -6, -5, -3, 2, 6, -2, 3, 5, 6, -5, -6)}, {1: (1, 6, 5, -6, -5, -3, 2), 2: (-2, 3, 5, 6, -5, -6, 2, 6, 5, -6, -5, -3, 2), 3: (-2, 3, 5, 6, -5, -6, 3, 6, 5, -6, -5, -3, 2), 4: (-2, 3, 5, 6, -5, -6, -3, 2, 6, 5, -6, -5, 4, 6, 5, -6, -5, -3, 2), 5: (-2, 3, 5, 6, -5, -6, 5, 6, 5, -6, -5, -3, 2), 6: (-2, 3, 5, 6, -5, 6, 5, -6, -5, -3, 2)}),
    "q18": ((-6, -5, -3, 2, 6, 5), {1: (1, -2, 3, 5, 6, -5, -6), 2: (6, 5, -6, -5, -3, 2, 3, 5, 6, -5, -6), 3: (6, 5, -6, -5, -3, 2, 3, -2, 3, 5, 6, -5, -6), 4: (6, 5, -6, -5, -3, 2, 5, 6, -5, -6, -2, 3, 4, -2, 3, 5, 6, -5, -6), 5: (6, 5, -6, -5, -3, 2, 5, -2, 3, 5, 6, -5, -6), 6: (6, 5, -6, -5, -3, 2, 6, -2, 3, 5, 6, -5, -6)}, {1: (1, 6, 5, -6, -5, -3, 2), 2: (-2, 3, 5, 6, -5, -6, 2, 6, 5, -6, -5, -3, 2), 3: (-2, 3, 5, 6, -5, -6, 3, 6, 5, -6, -5, -3, 2), 4: (-2, 3, 5, 6, -5, -6, -3, 2, 6, 5, -6, -5, 4, 6, 5, -6, -5, -3, 2), 5: (-2, 3, 5, 6, -5, -6, 5, 6, 5, -6, -5, -3, 2), 6: (-2, 3, 5, 6, -5, 6, 5, -6, -5, -3, 2)}),
    "q19": ((-6, -5, 4, 2, 6, 5), {1: (1, -2, -4, 5, 6, -5, -6), 2: (6, 5, -6, -5, 4, 2, -4, 5, 6, -5, -6), 3: (6, 5, -6, -5, 4, 2, -4, 5, 6, -5, -6, -2, 3, -2, -4, 5, 6, -5, -6), 4: (6, 5, -6, -5, 4, 2, 4, -2, -4, 5, 6, -5, -6), 5: (6, 5, -6, -5, 4, 2, 5, -2, -4, 5, 6, -5, -6), 6: (6, 5, -6, -5, 4, 2, 6, -2, -4, 5, 6, -5, -6)}, {1: (1, 6, 5, -6, -5, 4, 2), 2: (-2, -4, 5, 6, -5, -6, 2, 6, 5, -6, -5, 4, 2), 3: (-2, -4, 5, 6, -5, -6, 2, 6, 5, -6, -5, 4, 3, 6, 5, -6, -5, 4, 2), 4: (-2, -4, 5, 6, -5, -6, 4, 6, 5, -6, -5, 4, 2), 5: (-2, -4, 5, 6, -5, -6, 5, 6, 5, -6, -5, 4, 2), 6: (-2, -4, 5, 6, -5, 6, 5, -6, -5, 4, 2)}),
    "q2": ((-6, -5, 2, 5), {1: (1, -2, 5, 6, -5), 2: (5, -6, -5, 2, 5, 6, -5), 3: (5, -6, -5, 2, 5, 6, -5, -2, 3, 2, 5, -6, -5, -2, 5, 6, -5), 4: (5, -6, -5, 2, 5, 6, -5, -2, 4, 2, 5, -6, -5, -2, 5, 6, -5), 5: (5, -6, -5, 2, 5)}, {1: (1, 5, -6, -5, 2), 2: (-2, 5, 6, -5, 2, 5, -6, -5, 2), 3: (-2, 5, 6, -5, 2, 5, -6, -5, 3, 5, 6, -5, -2, 5, -6, -5, 2), 4: (-2, 5, 6, -5, 2, 5, -6, -5, 4, 5, 6, -5, -2, 5, -6, -5, 2), 5: (-2, 5, 6)}),
    "q20": ((-6, -5, 4, 2, 6, 5), {1: (1, -2, -4, 5, 6, -5, -6), 2: (6, 5, -6, -5, 4, 2, -4, 5, 6, -5, -6), 3: (6, 5, -6, -5, 4, 2, -4, 5, 6, -5, -6, -2, 3, -2, -4, 5, 6, -5, -6), 4: (6, 5, -6, -5, 4, 2, 4, -2, -4, 5, 6, -5, -6), 5: (6, 5, -6, -5, 4, 2, 5, -2, -4, 5, 6, -5, -6), 6: (6, 5, -6, -5, 4, 2, 6, -2, -4, 5, 6, -5, -6)}, {1: (1, 6, 5, -6, -5, 4, 2), 2: (-2, -4, 5, 6, -5, -6, 2, 6, 5, -6, -5, 4, 2), 3: (-2, -4, 5, 6, -5, -6, 2, 6, 5, -6, -5, 4, 3, 6, 5, -6, -5, 4, 2), 4: (-2, -4, 5, 6, -5, -6, 4, 6, 5, -6, -5, 4, 2), 5: (-2, -4, 5, 6, -5, -6, 5, 6, 5, -6, -5, 4, 2), 6: (-2, -4, 5, 6, -5, 6, 5, -6, -5, 4, 2)}),
    "q3": ((-4, -3, 2, 1), {1: (-2, 3, 4), 2: (-4, -3, 2, 1, 2), 3: (-4, -3, 2, 1, 3), 4: (4, -1, -2, 3, 4)}, {1: (1, -4, -3, 2, 1), 2: (-1, -2, 3, 4, 2), 3: (-1, -2, 3, 4, 3), 4: (-3, 2, 1)}),
    "q4": ((-6, -5, 2, 1), {1: (-2, 5, 6), 2: (-6, -5, 2, 1, 2), 3: (-6, -5, 2, 1, 5, 6, -1, -2, 3, 2, 1, -6, -5, -1, -2, 5, 6), 4: (-6, -5, 2, 1, 5, 6, -1, -2, 4, 2, 1, -6, -5, -1, -2, 5, 6), 5: (-6, -5, 2, 1, 5), 6: (6, -1, -2, 5, 6)}, {1: (1, -6, -5, 2, 1), 2: (-1, -2, 5, 6, 2), 3: (-1, -2, 5, 6, 2, 1, -6, -5, 3, 5, 6, -1, -2, -6, -5, 2, 1), 4: (-1, -2, 5, 6, 2, 1, -6, -5, 4, 5, 6, -1, -2, -6, -5, 2, 1), 5: (-1, -2, 5, 6, 5), 6: (-5, 2, 1)}),
    "q5": ((-6, -5, 4, 5), {3: (3, -4, 5, 6, -5), 4: (5, -6, -5, 4, 5, 6, -5), 5: (5, -6, -5, 4, 5)}, {3: (3, 5, -6, -5, 4), 4: (-4, 5, 6, -5, 4, 5, -6, -5, 4), 5: (-4, 5, 6)}),
    "q6": ((-6, -5, 4, 3), {3: (-4, 5, 6), 4: (-6, -5, 4, 3, 4), 5: (-6, -5, 4, 3, 5), 6: (6, -3, -4, 5, 6)}, {3: (3, -6, -5, 4, 3), 4: (-3, -4, 5, 6, 4), 5: (-3, -4, 5, 6, 5), 6: (-5, 4, 3)}),
    "q7": ((-4, -3, -1, 4, 3), {1: (4, 3, -4, -3, 1, 3, 4, -3, -4), 2: (4, 3, -4, -3, -1, 3, 4, -3, -4, 1, 2, 1, 3, 4, -3, -4), 3: (4, 3, -4, -3, -1, 3, 1, 3, 4, -3, -4), 4: (4, 3, -4, -3, -1, 4, 1, 3, 4, -3, -4)}, {1: (1, 3, 4, -3, -4, 1, 4, 3, -4, -3, -1), 2: (1, 3, 4, -3, -4, -1, 4, 3, -4, -3, 2, 4, 3, -4, -3, -1), 3: (1, 3, 4, -3, -4, 3, 4, 3, -4, -3, -1), 4: (1, 3, 4, -3, 4, 3, -4, -3, -1)}),
    "q8": ((-6, -5, -1, 6, 5), {1: (6, 5, -6, -5, 1, 5, 6, -5, -6), 2: (6, 5, -6, -5, -1, 5, 6, -5, -6, 1, 2, 1, 5, 6, -5, -6), 3: (6, 5, -6, -5, -1, 5, 6, -5, -6, 1, 3, -1, 6, 5, -6, -5, 1, 5, 6, -5, -6), 4: (6, 5, -6, -5, -1, 5, 6, -5, -6, 1, 4, -1, 6, 5, -6, -5, 1, 5, 6, -5, -6), 5: (6, 5, -6, -5, -1, 5, 1, 5, 6, -5, -6), 6: (6, 5, -6, -5, -1, 6, 1, 5, 6, -5, -6)}, {1: (1, 5, 6, -5, -6, 1, 6, 5, -6, -5, -1), 2: (1, 5, 6, -5, -6, -1, 6, 5, -6, -5, 2, 6, 5, -6, -5, -1), 3: (1, 5, 6, -5, -6, -1, 6, 5, -6, -5, 3, 5, 6, -5, -6, 1, 6, 5, -6, -5, -1), 4: (1, 5, 6, -5, -6, -1, 6, 5, -6, -5, 4, 5, 6, -5, -6, 1, 6, 5, -6, -5, -1), 5: (1, 5, 6, -5, -6, 5, 6, 5, -6, -5, -1), 6: (1, 5, 6, -5, 6, 5, -6, -5, -1)}),
    "q9": ((-4, -3, 2, 4, 3), {1: (1, -2, 3, 4, -3, -4), 2: (4, 3, -4, -3, 2, 3, 4, -3, -4), 3: (4, 3, -4, -3, 2, 3, -2, 3, 4, -3, -4), 4: (4, 3, -4, -3, 2, 4, -2, 3, 4, -3, -4)}, {1: (1, 4, 3, -4, -3, 2), 2: (-2, 3, 4, -3, -4, 2, 4, 3, -4, -3, 2), 3: (-2, 3, 4, -3, -4, 3, 4, 3, -4, -3, 2), 4: (-2, 3, 4, -3, 4, 3, -4, -3, 2)}),
}
