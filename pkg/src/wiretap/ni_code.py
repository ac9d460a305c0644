"""Construction of the Ni binning-code family.

Two recursions grow a table one bit at a time.  RASBA adds a message bit:
each bin splits into two children, appending 0/1 in alternation so that
the children interleave the parent's words.  RAHBA adds an overhead bit:
bins are processed in consecutive pairs and the four single-bit
extensions of a pair are reshuffled into two bins of twice the size.
The standard path starts from the two-word base table and applies RAHBA
l times, then RASBA k - 1 times.

The same family also has a non-recursive description: the first form of
each case (k = 1) comes from a flipped reflected Gray code, and the
remaining message bits are alternating suffix columns enumerated as a
binary counter.  closed_form_table builds that directly.
"""

import math

import numpy as np

from .bitcore import N_CAP, CapExceeded, CodeTable, require_valid


def rasba(t):
    """Grow (l, k) into (l, k+1) by recursive alternate single-bit adding.

    Bin i spawns bins 2i-1 and 2i (1-based).  Within the first child,
    words at odd positions (1st, 3rd, ...) get a 0 appended and words at
    even positions get a 1; the second child does the reverse.  Appends
    are on the right end.
    """
    require_valid(t)
    if t.n + 1 > N_CAP:
        raise CapExceeded("blocklength %d exceeds cap %d" % (t.n + 1, N_CAP))
    bins = []
    for b in t.bins:
        first, second = [], []
        for pos, w in enumerate(b, start=1):
            if pos % 2 == 1:
                first.append(w << 1 | 0)
                second.append(w << 1 | 1)
            else:
                first.append(w << 1 | 1)
                second.append(w << 1 | 0)
        bins.append(first)
        bins.append(second)
    return CodeTable(t.l, t.k + 1, bins)


def rahba(t):
    """Grow (l, k) into (l+1, k) by recursive alternate half-bits adding.

    Bins are taken in pairs (B, C).  With V = B||0, W = B||1, U = C||0,
    Z = C||1, the pair's replacements are [V; Z] and [W; U].  For k = 1
    the table's two bins form the single pair.
    """
    require_valid(t)
    if t.n + 1 > N_CAP:
        raise CapExceeded("blocklength %d exceeds cap %d" % (t.n + 1, N_CAP))
    bins = [None] * len(t.bins)
    for i in range(0, len(t.bins), 2):
        b, c = t.bins[i], t.bins[i + 1]
        v = [w << 1 | 0 for w in b]
        wl = [w << 1 | 1 for w in b]
        u = [w << 1 | 0 for w in c]
        z = [w << 1 | 1 for w in c]
        bins[i] = v + z
        bins[i + 1] = wl + u
    return CodeTable(t.l + 1, t.k, bins)


def base_table():
    """The two-word table of form (0, 1): bins [0] and [1]."""
    return CodeTable(0, 1, [[0], [1]])


def standard_table(l, k):
    """Form (l, k) by the standard path: RAHBA l times, RASBA k-1 times."""
    if l < 0 or k < 1:
        raise ValueError("need l >= 0 and k >= 1")
    if l + k > N_CAP:
        raise CapExceeded("blocklength %d exceeds cap %d" % (l + k, N_CAP))
    t = base_table()
    for _ in range(l):
        t = rahba(t)
    for _ in range(k - 1):
        t = rasba(t)
    return t


def path_count(from_form, to_form):
    """Number of recursion orderings leading from one form to another.

    Each path is a shuffle of the required RAHBA and RASBA steps, so the
    count is C(n2 - n1, k2 - k1).
    """
    l1, k1 = from_form
    l2, k2 = to_form
    if not (l2 >= l1 >= 1 and k2 >= k1):
        raise ValueError("need to.l >= from.l >= 1 and to.k >= from.k")
    return math.comb((l2 + k2) - (l1 + k1), k2 - k1)


def gray_matrix(l):
    """Reflected Gray code on l bits with the column order reversed.

    Returns a (2**l, l) 0/1 array.  Reversing the columns keeps the
    defining property that consecutive rows differ in one position.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    out = np.zeros((1 << l, l), dtype=np.int64)
    for r in range(1 << l):
        g = r ^ (r >> 1)
        for c in range(l):
            # column c holds bit c of the Gray word (reversed order)
            out[r, c] = (g >> c) & 1
    return out


def _gray_words(l):
    # row r of gray_matrix read as an MSB-first word
    mat = gray_matrix(l)
    return [int("".join(str(b) for b in row), 2) for row in mat]


def closed_form_ff_bins(l):
    """The two bins of form (l, 1) without recursion.

    Words are one alternating-bit column followed by the flipped Gray
    block T; bin 1 uses T as is and bin 2 uses T upside down.  The
    alternating column only touches the leading position, where T is
    constant, so the overlay is a plain sum.
    """
    if l < 1:
        raise ValueError("l must be >= 1")
    t_block = _gray_words(l)
    bin1 = [((r & 1) << l) | g for r, g in enumerate(t_block)]
    bin2 = [((r & 1) << l) | g for r, g in enumerate(reversed(t_block))]
    return bin1, bin2


def closed_form_table(l, k):
    """Form (l, k) directly from the Gray-code description.

    Every bin is one of the two (l, 1) bins extended by k - 1 alternating
    suffix columns.  A suffix column either starts with 0 or with 1; the
    2**(k-1) on/off states are enumerated in binary-counter order, and
    the choice of first-form bin is the most significant choice bit, so
    bin order is deterministic.
    """
    if l < 1 or k < 1:
        raise ValueError("need l >= 1 and k >= 1")
    if l + k > N_CAP:
        raise CapExceeded("blocklength %d exceeds cap %d" % (l + k, N_CAP))
    ff_bins = closed_form_ff_bins(l)
    bins = []
    for ff in ff_bins:
        for state in range(1 << (k - 1)):
            state_bits = [(state >> (k - 2 - c)) & 1 for c in range(k - 1)]
            b = []
            for r, w in enumerate(ff):
                suffix = 0
                for sb in state_bits:
                    suffix = (suffix << 1) | ((sb + r) & 1)
                b.append((w << (k - 1)) | suffix)
            bins.append(b)
    return CodeTable(l, k, bins)


def opposite_pairing_check(t):
    """True iff every bin pairs each word with its bitwise complement.

    Only meaningful for bin size two, so l must be 1.
    """
    if t.l != 1:
        raise ValueError("opposite pairing is defined for l = 1 tables")
    require_valid(t)
    mask = (1 << t.n) - 1
    return all(b[0] ^ mask == b[1] for b in t.bins)
