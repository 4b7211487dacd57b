"""Reference encoding of the old map g: flat (x_exp, y_exp, coeff) triples.

Transcribed independently of the grouped encoding in the catalog (parsed
from the published expanded form by a separate block parser); the test
suite diffs the two encodings term for term.
"""

G1_TERMS = [
    (18, 10, 1),
    (17, 9, -14),
    (16, 10, 2),
    (16, 8, 87),
    (15, 9, -30),
    (14, 10, 1),
    (14, 9, 4),
    (15, 7, -316),
    (14, 8, 202),
    (13, 9, -18),
    (13, 8, -44),
    (12, 9, 6),
    (14, 6, 743),
    (13, 7, -804),
    (12, 8, 143),
    (11, 9, -2),
    (12, 7, 208),
    (11, 8, -72),
    (10, 9, 2),
    (13, 5, -1182),
    (12, 6, 2094),
    (11, 7, -662),
    (10, 8, 34),
    (11, 6, -552),
    (10, 7, 378),
    (9, 8, -30),
    (12, 4, 1289),
    (11, 5, -3726),
    (10, 6, 1985),
    (9, 7, -226),
    (8, 8, 7),
    (10, 5, 900),
    (9, 6, -1134),
    (8, 7, 192),
    (7, 8, -2),
    (11, 3, -952),
    (10, 4, 4582),
    (9, 5, -4046),
    (8, 6, 828),
    (7, 7, -66),
    (6, 8, 1),
    (9, 4, -924),
    (8, 5, 2124),
    (7, 6, -688),
    (6, 7, 26),
    (10, 2, 456),
    (9, 3, -3840),
    (8, 4, 5702),
    (7, 5, -1922),
    (6, 6, 269),
    (5, 7, -12),
    (8, 3, 584),
    (7, 4, -2538),
    (6, 5, 1522),
    (5, 6, -128),
    (4, 7, 2),
    (9, 1, -128),
    (8, 2, 2096),
    (7, 3, -5504),
    (6, 4, 3022),
    (5, 5, -622),
    (4, 6, 58),
    (7, 2, -208),
    (6, 3, 1884),
    (5, 4, -2150),
    (4, 5, 340),
    (3, 6, -12),
    (8, 0, 16),
    (7, 1, -672),
    (6, 2, 3487),
    (5, 3, -3286),
    (4, 4, 906),
    (3, 5, -146),
    (2, 6, 1),
    (6, 1, 32),
    (5, 2, -792),
    (4, 3, 1910),
    (3, 4, -558),
    (2, 5, 28),
    (6, 0, 96),
    (5, 1, -1308),
    (4, 2, 2408),
    (3, 3, -888),
    (2, 4, 207),
    (1, 5, -2),
    (4, 1, 144),
    (3, 2, -978),
    (2, 3, 586),
    (1, 4, -30),
    (4, 0, 220),
    (3, 1, -1080),
    (2, 2, 621),
    (1, 3, -162),
    (0, 4, 1),
    (2, 1, 220),
    (1, 2, -372),
    (0, 3, 12),
    (2, 0, 224),
    (1, 1, -308),
    (0, 2, 55),
    (0, 1, 112),
    (0, 0, 85),
]

G2_TERMS = [
    (16, 12, 1),
    (15, 11, -14),
    (14, 10, 89),
    (13, 11, -2),
    (12, 11, 2),
    (13, 9, -338),
    (12, 10, 26),
    (11, 10, -22),
    (12, 8, 849),
    (11, 9, -152),
    (10, 10, 1),
    (10, 9, 108),
    (9, 10, -2),
    (11, 7, -1476),
    (10, 8, 524),
    (9, 9, -12),
    (8, 10, 1),
    (9, 8, -308),
    (8, 9, 20),
    (10, 6, 1808),
    (9, 7, -1176),
    (8, 8, 64),
    (7, 9, -8),
    (8, 7, 558),
    (7, 8, -88),
    (9, 5, -1562),
    (8, 6, 1792),
    (7, 7, -198),
    (6, 8, 28),
    (7, 6, -662),
    (6, 7, 220),
    (8, 4, 944),
    (7, 5, -1878),
    (6, 6, 391),
    (5, 7, -54),
    (6, 5, 514),
    (5, 6, -340),
    (7, 3, -398),
    (6, 4, 1344),
    (5, 5, -512),
    (4, 6, 61),
    (5, 4, -258),
    (4, 5, 332),
    (6, 2, 121),
    (5, 3, -644),
    (4, 4, 447),
    (3, 5, -40),
    (4, 3, 86),
    (3, 4, -202),
    (5, 1, -28),
    (4, 2, 206),
    (3, 3, -254),
    (2, 4, 15),
    (3, 2, -22),
    (2, 3, 74),
    (4, 0, 4),
    (3, 1, -48),
    (2, 2, 90),
    (1, 3, -4),
    (2, 1, 4),
    (1, 2, -18),
    (2, 0, 8),
    (1, 1, -20),
    (0, 2, 1),
    (0, 1, 4),
    (0, 0, 4),
]

