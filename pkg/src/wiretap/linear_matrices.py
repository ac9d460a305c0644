"""Generator and parity-check matrices for the linear forms.

The family is linear when l = 1 (any k), when l is even (any k), and for
the lone odd case (3, 1).  For those shapes the n x n generator G and
the n x k transposed parity-check H_T follow fixed entry patterns; a
built codec is checked to satisfy G . H_T = [I_k ; 0] over GF(2), which
makes message recovery from a codeword a single matrix multiply.

Encoding maps a message m (k bits) and auxiliary word v (l bits) to
x = [m || v] G; the 2**l codewords sharing a message form one coset, and
listing the cosets for all messages in counter order rebuilds a code
table that can be fed to the equivocation engine.
"""

from dataclasses import dataclass

import numpy as np

from .bitcore import CodeTable


class UnsupportedForm(ValueError):
    """The requested form has no generator/parity-check pattern."""


class PatternViolation(RuntimeError):
    """A constructed matrix pair failed its own validity identity."""


def is_linear_form(l, k):
    return l == 1 or (l >= 2 and l % 2 == 0) or (l, k) == (3, 1)


def _generator(l, k):
    n = l + k
    if (l, k) == (3, 1):
        return np.array([[1, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 1, 1, 1]], dtype=np.int64)
    g = np.ones((n, n), dtype=np.int64)
    if l == 1:
        # zero diagonal on the first k rows
        for i in range(k):
            g[i, i] = 0
    else:
        # zero diagonal everywhere except the first row
        for i in range(1, n):
            g[i, i] = 0
    return g


def _parity_check_t(l, k):
    n = l + k
    ht = np.zeros((n, k), dtype=np.int64)
    if (l, k) == (3, 1):
        return np.ones((4, 1), dtype=np.int64)
    if l == 1:
        ht[:k, :k] = np.eye(k, dtype=np.int64)
        ht[k, :] = 1
        return ht
    ht[0, 1:] = 1
    ht[0, 0] = k % 2  # corner: 1 for odd k, 0 for even k
    ht[1:, 0] = 1
    for j in range(1, k):
        ht[j, j] = 1
    return ht


def gf2_rank(mat):
    """Rank over GF(2) by Gaussian elimination on row words."""
    mat = np.asarray(mat) % 2
    width = mat.shape[1]
    rows = [int("".join(str(int(b)) for b in row), 2) for row in mat]
    rank = 0
    for col in range(width):
        bit = 1 << (width - 1 - col)
        pivot = next((i for i in range(rank, len(rows)) if rows[i] & bit), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & bit:
                rows[i] ^= rows[rank]
        rank += 1
    return rank


@dataclass(frozen=True)
class WiretapCodec:
    l: int
    k: int
    G: np.ndarray    # n x n over GF(2)
    H_T: np.ndarray  # n x k over GF(2)

    @property
    def n(self):
        return self.l + self.k


def _identity_holds(codec):
    prod = (codec.G @ codec.H_T) % 2
    want = np.zeros((codec.n, codec.k), dtype=np.int64)
    want[: codec.k, : codec.k] = np.eye(codec.k, dtype=np.int64)
    return np.array_equal(prod, want)


def build_codec(l, k):
    """Codec for a linear form; raises UnsupportedForm otherwise.

    The constructed pair must pass the validity identity and G must be
    invertible; a violation raises PatternViolation naming the form, so
    a shape where the pattern silently breaks cannot slip through.
    """
    if l < 0 or k < 1:
        raise ValueError("need l >= 0 and k >= 1")
    if not is_linear_form(l, k):
        raise UnsupportedForm("form (%d, %d) has no linear matrix pattern" % (l, k))
    codec = WiretapCodec(l=l, k=k, G=_generator(l, k), H_T=_parity_check_t(l, k))
    if gf2_rank(codec.G) != codec.n:
        raise PatternViolation("generator for form (%d, %d) is rank deficient" % (l, k))
    if not _identity_holds(codec):
        raise PatternViolation("validity identity fails for form (%d, %d)" % (l, k))
    return codec


def _row_words(mat):
    width = mat.shape[1]
    return [int("".join(str(int(b)) for b in row), 2) for row in mat], width


def encode(codec, m, v):
    """Codeword for message m (k bits) and auxiliary v (l bits).

    Both arguments are ints read MSB-first; x = [m || v] G is the XOR of
    the generator rows selected by the set bits of the input.
    """
    if not 0 <= m < (1 << codec.k):
        raise ValueError("message does not fit in %d bits" % codec.k)
    if not 0 <= v < (1 << codec.l):
        raise ValueError("auxiliary word does not fit in %d bits" % codec.l)
    u = (m << codec.l) | v
    rows, _ = _row_words(codec.G)
    x = 0
    for i in range(codec.n):
        if (u >> (codec.n - 1 - i)) & 1:
            x ^= rows[i]
    return x


def decode(codec, x):
    """Recover the message: m = x H_T, one parity per column."""
    if not 0 <= x < (1 << codec.n):
        raise ValueError("codeword does not fit in %d bits" % codec.n)
    m = 0
    for j in range(codec.k):
        col = 0
        for i in range(codec.n):
            col = (col << 1) | int(codec.H_T[i, j])
        m = (m << 1) | ((x & col).bit_count() & 1)
    return m


def coset_table(codec):
    """Code table whose bin i holds the codewords of message i - 1.

    Messages index bins through their binary expansion (MSB first) and
    the auxiliary words run in counter order inside each bin.
    """
    bins = []
    for m in range(1 << codec.k):
        bins.append([encode(codec, m, v) for v in range(1 << codec.l)])
    return CodeTable(codec.l, codec.k, bins)


def syndrome_check(codec):
    """True iff the validity identity holds and syndromes separate bins.

    Every codeword of one bin must map to that bin's message and no
    other; checked exhaustively over all 2**n codewords.
    """
    if not _identity_holds(codec):
        return False
    for m in range(1 << codec.k):
        for v in range(1 << codec.l):
            if decode(codec, encode(codec, m, v)) != m:
                return False
    return True


def format_matrix(mat):
    """Render a 0/1 matrix as one digit-run per line."""
    return "\n".join("".join(str(int(b)) for b in row) for row in np.asarray(mat))
