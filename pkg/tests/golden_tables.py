"""Frozen golden fixtures shared across the test suite.

Hand-transcribed reference tables for every small form, the reference
generator/parity-check matrices for the linear forms, and the expected
Gray-code row layouts.  Words are ints read MSB-first at width l + k.
"""

import numpy as np

from wiretap.bitcore import CodeTable

# reference tables keyed by form (l, k); bins listed first to last
GOLDEN = {
    (0, 1): [[0b0], [0b1]],
    (1, 1): [[0b00, 0b11], [0b01, 0b10]],
    (2, 1): [
        [0b000, 0b110, 0b011, 0b101],
        [0b001, 0b111, 0b010, 0b100],
    ],
    (1, 2): [
        [0b000, 0b111],
        [0b001, 0b110],
        [0b010, 0b101],
        [0b011, 0b100],
    ],
    (2, 2): [
        [0b0000, 0b1011, 0b1100, 0b0111],
        [0b1110, 0b1001, 0b0010, 0b0101],
        [0b0001, 0b1010, 0b1101, 0b0110],
        [0b1111, 0b1000, 0b0011, 0b0100],
    ],
    (1, 3): [
        [0b0000, 0b1111],
        [0b0001, 0b1110],
        [0b0010, 0b1101],
        [0b0011, 0b1100],
        [0b0100, 0b1011],
        [0b0101, 0b1010],
        [0b0110, 0b1001],
        [0b0111, 0b1000],
    ],
    (3, 1): [
        [0b0000, 0b0011, 0b0110, 0b1100, 0b1001, 0b1010, 0b0101, 0b1111],
        [0b0001, 0b0010, 0b0100, 0b1000, 0b0111, 0b1011, 0b1101, 0b1110],
    ],
    (3, 2): [
        [0b00000, 0b00111, 0b01100, 0b11001, 0b10010, 0b10101, 0b01010, 0b11111],
        [0b00010, 0b00101, 0b01000, 0b10001, 0b01110, 0b10111, 0b11010, 0b11101],
        [0b00001, 0b00110, 0b01101, 0b11000, 0b10011, 0b10100, 0b01011, 0b11110],
        [0b00011, 0b00100, 0b01001, 0b10000, 0b01111, 0b10110, 0b11011, 0b11100],
    ],
    (4, 1): [
        [0b00000, 0b00110, 0b01100, 0b11000, 0b10010, 0b10100, 0b01010, 0b11110,
         0b00011, 0b00101, 0b01001, 0b10001, 0b01111, 0b10111, 0b11011, 0b11101],
        [0b00001, 0b00111, 0b01101, 0b11001, 0b10011, 0b10101, 0b01011, 0b11111,
         0b00010, 0b00100, 0b01000, 0b10000, 0b01110, 0b10110, 0b11010, 0b11100],
    ],
}

# reference matrices keyed by form; rows as listed in the source grids
GOLDEN_G = {
    (1, 4): np.array(
        [[0, 1, 1, 1, 1],
         [1, 0, 1, 1, 1],
         [1, 1, 0, 1, 1],
         [1, 1, 1, 0, 1],
         [1, 1, 1, 1, 1]], dtype=np.int64),
    (2, 3): np.array(
        [[1, 1, 1, 1, 1],
         [1, 0, 1, 1, 1],
         [1, 1, 0, 1, 1],
         [1, 1, 1, 0, 1],
         [1, 1, 1, 1, 0]], dtype=np.int64),
    (4, 1): np.array(
        [[1, 1, 1, 1, 1],
         [1, 0, 1, 1, 1],
         [1, 1, 0, 1, 1],
         [1, 1, 1, 0, 1],
         [1, 1, 1, 1, 0]], dtype=np.int64),
    (3, 1): np.array(
        [[1, 0, 0, 0],
         [1, 1, 0, 0],
         [1, 0, 1, 0],
         [1, 1, 1, 1]], dtype=np.int64),
}

GOLDEN_H_T = {
    (1, 4): np.array(
        [[1, 0, 0, 0],
         [0, 1, 0, 0],
         [0, 0, 1, 0],
         [0, 0, 0, 1],
         [1, 1, 1, 1]], dtype=np.int64),
    (2, 3): np.array(
        [[1, 1, 1],
         [1, 1, 0],
         [1, 0, 1],
         [1, 0, 0],
         [1, 0, 0]], dtype=np.int64),
    (4, 1): np.array([[1], [1], [1], [1], [1]], dtype=np.int64),
    (3, 1): np.array([[1], [1], [1], [1]], dtype=np.int64),
}

# Gray layouts: row r = codeword of counter value r, one column per bit
GRAY_L2 = np.array([[0, 0], [1, 0], [1, 1], [0, 1]], dtype=np.int64)
GRAY_L3 = np.array(
    [[0, 0, 0],
     [1, 0, 0],
     [1, 1, 0],
     [0, 1, 0],
     [0, 1, 1],
     [1, 1, 1],
     [1, 0, 1],
     [0, 0, 1]], dtype=np.int64)


def make(form):
    """Golden listing for a form as a CodeTable."""
    l, k = form
    return CodeTable(l, k, [list(b) for b in GOLDEN[form]])
