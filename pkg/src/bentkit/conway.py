"""Bundled Conway polynomial table for p^n <= 2^20, p <= 31."""

# Regenerated from the definition: least primitive polynomial under the alternating-sign
# ordering that is compatible with every subfield entry.
CONWAY: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 0, 1, 1),
    (2, 4): (1, 0, 0, 1, 1),
    (2, 5): (1, 0, 0, 1, 0, 1),
    (2, 6): (1, 0, 1, 1, 0, 1, 1),
    (2, 7): (1, 0, 0, 0, 0, 0, 1, 1),
    (2, 8): (1, 0, 0, 0, 1, 1, 1, 0, 1),
    (2, 9): (1, 0, 0, 0, 0, 1, 0, 0, 0, 1),
    (2, 10): (1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1),
    (2, 11): (1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1),
    (2, 12): (1, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 1, 1),
    (2, 13): (1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1),
    (2, 14): (1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 1),
    (2, 15): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1),
    (2, 16): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1),
    (2, 17): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1),
    (2, 18): (1, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1),
    (2, 19): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 1),
    (2, 20): (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0, 1, 1),
    (3, 1): (1, 1),
    (3, 2): (1, 2, 2),
    (3, 3): (1, 0, 2, 1),
    (3, 4): (1, 2, 0, 0, 2),
    (3, 5): (1, 0, 0, 0, 2, 1),
    (3, 6): (1, 0, 2, 0, 1, 2, 2),
    (3, 7): (1, 0, 0, 0, 0, 2, 0, 1),
    (3, 8): (1, 0, 0, 2, 1, 0, 2, 2, 2),
    (3, 9): (1, 0, 0, 0, 0, 0, 2, 2, 1, 1),
    (3, 10): (1, 0, 0, 0, 2, 2, 2, 0, 0, 1, 2),
    (3, 11): (1, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 1),
    (3, 12): (1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 2),
    (5, 1): (1, 3),
    (5, 2): (1, 4, 2),
    (5, 3): (1, 0, 3, 3),
    (5, 4): (1, 0, 4, 4, 2),
    (5, 5): (1, 0, 0, 0, 4, 3),
    (5, 6): (1, 0, 1, 4, 1, 0, 2),
    (5, 7): (1, 0, 0, 0, 0, 0, 3, 3),
    (5, 8): (1, 0, 0, 0, 1, 0, 3, 4, 2),
    (7, 1): (1, 4),
    (7, 2): (1, 6, 3),
    (7, 3): (1, 6, 0, 4),
    (7, 4): (1, 0, 5, 4, 3),
    (7, 5): (1, 0, 0, 0, 1, 4),
    (7, 6): (1, 0, 1, 5, 4, 6, 3),
    (7, 7): (1, 0, 0, 0, 0, 0, 6, 4),
    (11, 1): (1, 9),
    (11, 2): (1, 7, 2),
    (11, 3): (1, 0, 2, 9),
    (11, 4): (1, 0, 8, 10, 2),
    (11, 5): (1, 0, 0, 10, 0, 9),
    (13, 1): (1, 11),
    (13, 2): (1, 12, 2),
    (13, 3): (1, 0, 2, 11),
    (13, 4): (1, 0, 3, 12, 2),
    (13, 5): (1, 0, 0, 0, 4, 11),
    (17, 1): (1, 14),
    (17, 2): (1, 16, 3),
    (17, 3): (1, 0, 1, 14),
    (17, 4): (1, 0, 7, 10, 3),
    (19, 1): (1, 17),
    (19, 2): (1, 18, 2),
    (19, 3): (1, 0, 4, 17),
    (19, 4): (1, 0, 2, 11, 2),
    (23, 1): (1, 18),
    (23, 2): (1, 21, 5),
    (23, 3): (1, 0, 2, 18),
    (23, 4): (1, 0, 3, 19, 5),
    (29, 1): (1, 27),
    (29, 2): (1, 24, 2),
    (29, 3): (1, 0, 2, 27),
    (29, 4): (1, 0, 2, 15, 2),
    (31, 1): (1, 28),
    (31, 2): (1, 29, 3),
    (31, 3): (1, 0, 1, 28),
    (31, 4): (1, 0, 3, 16, 3),
}
