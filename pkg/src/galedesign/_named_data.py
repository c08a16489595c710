"""Adjacency data for the named graphs, 1-indexed as drawn in the source figures.

Only the Petersen graph comes with an explicit drawing.  The labellings of
the other three were recovered from the published eigenbasis matrices by
forming A = delta * sum(lambda_i * B_i^T (B_i B_i^T)^-1 B_i) and rounding; the
rounding residual was below 1e-15 in each case, and the recovered graphs are
regular of the right degree.
"""

# Outer 5-cycle 1..5, inner pentagram 6..10, spokes i -- 5+i.
PETERSEN = [
    (6, 8), (8, 10), (5, 10), (1, 5), (1, 6), (6, 9), (4, 9), (4, 5),
    (3, 4), (3, 8), (2, 3), (2, 7), (7, 10), (1, 2), (7, 9),
]

# Recovered from the displayed U_4 / U_4bar blocks; classes of identical
# columns in the last eigenspace are {3,4,9,12}, {1,6,7,11}, {2,5,8,10}.
TRUNCATED_TETRAHEDRON = [
    (1, 2), (1, 3), (1, 11), (2, 3), (2, 8), (3, 4), (4, 5), (4, 6), (5, 6),
    (5, 10), (6, 7), (7, 8), (7, 9), (8, 9), (9, 12), (10, 11), (10, 12),
    (11, 12),
]

# Recovered from the displayed eigenbasis (golden-ratio entries); antipodal
# pairs are (1,2), (3,4), ..., (11,12).
ICOSAHEDRON = [
    (1, 3), (1, 5), (1, 6), (1, 9), (1, 10), (2, 4), (2, 7), (2, 8), (2, 11),
    (2, 12), (3, 7), (3, 8), (3, 9), (3, 10), (4, 5), (4, 6), (4, 11),
    (4, 12), (5, 6), (5, 9), (5, 11), (6, 10), (6, 12), (7, 8), (7, 9),
    (7, 11), (8, 10), (8, 12), (9, 11), (10, 12),
]

# Cayley graph of the signed permutation group B3 (generators: swap of
# coordinates 1,2 / swap of 2,3 / sign flip of 3), relabelled so that vertex
# c + 6j (j = 0..7) shares a column of the 6x48 last-eigenspace block with c.
TRUNCATED_CUBOCTAHEDRON = [
    (1, 2), (1, 3), (1, 6), (2, 4), (2, 5), (3, 10), (3, 29), (4, 9), (4, 30),
    (5, 6), (5, 27), (6, 28), (7, 8), (7, 9), (7, 12), (8, 10), (8, 11),
    (9, 35), (10, 36), (11, 12), (11, 33), (12, 34), (13, 14), (13, 15),
    (13, 18), (14, 16), (14, 17), (15, 22), (15, 41), (16, 21), (16, 42),
    (17, 18), (17, 39), (18, 40), (19, 20), (19, 21), (19, 24), (20, 22),
    (20, 23), (21, 47), (22, 48), (23, 24), (23, 45), (24, 46), (25, 27),
    (25, 30), (25, 38), (26, 28), (26, 29), (26, 37), (27, 40), (28, 39),
    (29, 36), (30, 35), (31, 33), (31, 36), (31, 44), (32, 34), (32, 35),
    (32, 43), (33, 46), (34, 45), (37, 39), (37, 42), (38, 40), (38, 41),
    (41, 48), (42, 47), (43, 45), (43, 48), (44, 46), (44, 47),
]
