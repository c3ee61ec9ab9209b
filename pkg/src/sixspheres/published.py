"""Published census counts (N0, N1, N2, N3) for 1 <= n <= 53."""

PUBLISHED_COUNTS = {
    1: (0, 0, 1, 1),
    2: (1, 0, 1, 0),
    3: (1, 1, 3, 1),
    4: (3, 1, 5, 1),
    5: (2, 3, 5, 0),
    6: (7, 2, 8, 0),
    7: (5, 6, 6, 1),
    8: (12, 5, 12, 0),
    9: (10, 8, 8, 1),
    10: (19, 6, 12, 0),
    11: (16, 14, 9, 0),
    12: (29, 11, 17, 1),
    13: (24, 17, 10, 1),
    14: (42, 16, 16, 0),
    15: (35, 23, 15, 0),
    16: (59, 18, 22, 1),
    17: (48, 33, 12, 0),
    18: (79, 22, 22, 0),
    19: (69, 36, 13, 1),
    20: (100, 34, 28, 0),
    21: (86, 46, 19, 1),
    22: (133, 33, 23, 0),
    23: (112, 62, 16, 0),
    24: (165, 44, 37, 0),
    25: (144, 57, 20, 1),
    26: (205, 54, 27, 0),
    27: (176, 75, 22, 1),
    28: (251, 61, 36, 1),
    29: (214, 95, 19, 0),
    30: (299, 61, 40, 0),
    31: (265, 96, 20, 1),
    32: (360, 89, 43, 0),
    33: (305, 111, 28, 0),
    34: (429, 80, 33, 0),
    35: (375, 134, 31, 0),
    36: (488, 105, 50, 1),
    37: (436, 133, 24, 1),
    38: (581, 118, 37, 0),
    39: (495, 159, 32, 1),
    40: (677, 112, 59, 0),
    41: (582, 187, 26, 0),
    42: (758, 133, 53, 0),
    43: (679, 180, 27, 1),
    44: (869, 172, 53, 0),
    45: (749, 199, 43, 0),
    46: (1000, 149, 44, 0),
    47: (868, 250, 30, 0),
    48: (1101, 182, 72, 1),
    49: (989, 235, 35, 2),
    50: (1259, 194, 57, 0),
    51: (1076, 270, 40, 0),
    52: (1410, 210, 61, 1),
    53: (1228, 313, 33, 0),
}
