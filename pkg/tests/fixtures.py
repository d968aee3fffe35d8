"""Frozen reference data: printed lattice matrices and expected constants."""

# The 19 elements for n=3 as bit-strings over the region order
# <1> <2> <12> <3> <13> <23> <123>, ascending as binary numbers.
MATRIX_N3 = [
    "0000000",
    "0000001",
    "0000011",
    "0000101",
    "0000111",
    "0001111",
    "0010001",
    "0010011",
    "0010101",
    "0010111",
    "0011111",
    "0110011",
    "0110111",
    "0111111",
    "1010101",
    "1010111",
    "1011111",
    "1110111",
    "1111111",
]

# The four nonzero elements for n=2 over <1> <2> <12>.
MATRIX_N2 = ["001", "011", "101", "111"]

# A common reference enumeration of the n=3 elements by defining expression,
# with each element's position in canonical (ascending-key) order.  The two
# orders differ; this table documents the correspondence.
REFERENCE_ORDER_N3 = [
    ("0", 0),
    ("t1&t2&t3", 1),
    ("t1&t2", 6),
    ("t1&t3", 3),
    ("t2&t3", 2),
    ("(t1|t2)&t3", 4),
    ("(t1|t3)&t2", 7),
    ("(t2|t3)&t1", 8),
    ("((t1&t2)|t3)&(t1|t2)", 9),
    ("t1", 14),
    ("t2", 11),
    ("t3", 5),
    ("(t1&t2)|t3", 10),
    ("(t1&t3)|t2", 12),
    ("(t2&t3)|t1", 15),
    ("t1|t2", 17),
    ("t1|t3", 16),
    ("t2|t3", 13),
    ("t1|t2|t3", 18),
]

# d(n) for n = 0..8: the two constant functions are counted, so the lattice
# for a frame of n atoms has d(n) - 1 elements.
KNOWN_D = [2, 3, 6, 20, 168, 7581, 7828354, 2414682040998, 56130437228687557907788]

LATTICE_SIZES = [1, 2, 5, 19, 167, 7580, 7828353]

# Printed storage table: n -> (bytes/elem, stored elems for n<=6 exact,
# printed size value, printed unit).
PRINTED_MEMSIZE = {
    2: (1, 4, 4, "bytes"),
    3: (1, 18, 18, "bytes"),
    4: (2, 166, 0.32, "Kb"),
    5: (4, 7579, 30, "Kb"),
    6: (8, 7828352, 59, "Mb"),
    7: (16, None, 3.6e4, "Gb"),
    8: (32, None, 1.7e15, "Gb"),
}

# Refined-powerset column 2^(2^n - 1) for n = 2..5.
PRINTED_REFINED = {2: 8, 3: 128, 4: 32768, 5: 2147483648}
