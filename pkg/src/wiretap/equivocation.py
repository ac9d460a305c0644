"""Exact eavesdropper equivocation over a binary symmetric channel.

The eavesdropper sees the transmitted word through a BSC with crossover
probability p.  Because the channel is memoryless, the likelihood of an
observation z given codeword x depends only on their Hamming distance d:
it is p**d * q**(n-d) with q = 1 - p.  Summing likelihoods over the words
of each bin gives the bin posterior (messages are uniform, so the
normalizer cancels inside the entropy average), and the equivocation is
the entropy of that posterior averaged over all 2**n observations.

All computations are exhaustive; nothing is sampled.
"""

import numpy as np

from .bitcore import require_valid


class NotLinearError(ValueError):
    """total_equivocation_linear detected unequal conditional entropies."""


def channel_weights(p, n):
    """Vector gamma with gamma[d] = p**d * (1-p)**(n-d) for d = 0..n.

    Built by iterative multiplication, gamma[d+1] = gamma[d] * p / q,
    which is stable for 0 < p < 1; the endpoints p = 0 and p = 1 are
    special-cased so no 0/0 appears.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1], got %r" % (p,))
    if n < 1:
        raise ValueError("n must be positive")
    gamma = np.zeros(n + 1)
    if p == 0.0:
        gamma[0] = 1.0
        return gamma
    if p == 1.0:
        gamma[n] = 1.0
        return gamma
    q = 1.0 - p
    gamma[0] = q ** n
    ratio = p / q
    for d in range(n):
        gamma[d + 1] = gamma[d] * ratio
    return gamma


def _popcounts(arr):
    return np.bitwise_count(arr.astype(np.uint32))


def distance_profile(t, z):
    """Per-bin histogram of Hamming distances to observation z.

    Returns a (2**k, n+1) integer array whose row i counts the words of
    bin i at each distance from z.  Rows sum to 2**l and column j sums
    to C(n, j) over all bins, since the bins partition the space.
    """
    require_valid(t)
    n = t.n
    if not 0 <= z < (1 << n):
        raise ValueError("z does not fit in %d bits" % n)
    rows = np.zeros((1 << t.k, n + 1), dtype=np.int64)
    for i, b in enumerate(t.bins):
        d = _popcounts(np.asarray(b, dtype=np.uint32) ^ np.uint32(z))
        np.add.at(rows[i], d, 1)
    return rows


def bin_posteriors(t, z, p):
    """Bin probabilities given z, via the distance profile.

    P[i] = sum over distances d of rows[i, d] * gamma[d].
    """
    rows = distance_profile(t, z)
    return rows @ channel_weights(p, t.n)


def bin_posteriors_direct(t, z, p):
    """Bin probabilities given z by direct per-word summation.

    Evaluates p**d * q**(n-d) separately for every codeword instead of
    going through the distance histogram.  Slower; kept as an
    independent route for cross-checking the profile path.
    """
    n = t.n
    q = 1.0 - p
    out = np.zeros(len(t.bins))
    for i, b in enumerate(t.bins):
        acc = 0.0
        for w in b:
            d = (w ^ z).bit_count()
            acc += p ** d * q ** (n - d)
        out[i] = acc
    return out


def _entropy_bits(probs):
    probs = np.asarray(probs)
    nz = probs > 0.0
    return float(-(probs[nz] * np.log2(probs[nz])).sum())


def conditional_equivocation(t, z, p):
    """Entropy in bits of the bin posterior given one observation z.

    Uses the convention 0 * log 0 = 0.  For p = 0 or p = 1 the posterior
    is a point mass and the value is exactly 0.
    """
    return _entropy_bits(bin_posteriors(t, z, p))


# Chunk the observation loop so the distance matrix stays around this
# many cells regardless of n.
_CHUNK_CELLS = 1 << 22


def total_equivocation(t, p):
    """Average conditional equivocation over all 2**n observations.

    Equals (1 / 2**n) * sum over z of conditional_equivocation(t, z, p);
    observations are equally likely because codewords are.  The value
    lies in [0, k]: 0 at p = 0, exactly k at p = 1/2.
    """
    require_valid(t)
    n = t.n
    gamma = channel_weights(p, n)
    cols = np.asarray(t.words(), dtype=np.uint32)
    size = 1 << n
    nbins = len(t.bins)
    chunk = max(1, _CHUNK_CELLS // size)
    total = 0.0
    for start in range(0, size, chunk):
        z = np.arange(start, min(start + chunk, size), dtype=np.uint32)
        dist = np.bitwise_count(z[:, None] ^ cols[None, :])
        post = gamma[dist].reshape(len(z), nbins, 1 << t.l).sum(axis=2)
        good = post > 0.0
        total += float(-(post[good] * np.log2(post[good])).sum())
    return total / size


def total_equivocation_linear(t, p, probes=8):
    """Equivocation of a linear (coset) table via a single observation.

    For a coset partition every observation yields the same conditional
    entropy, so the all-zeros observation suffices.  The claim is
    verified on a fixed set of probe observations; a probe disagreeing
    beyond 1e-9 raises NotLinearError.  A pass is evidence, not proof,
    since only a sample of observations is inspected.
    """
    require_valid(t)
    n = t.n
    h0 = conditional_equivocation(t, 0, p)
    size = 1 << n
    if size - 1 <= probes:
        candidates = range(1, size)
    else:
        rng = np.random.default_rng(0x5eed)
        candidates = rng.choice(size - 1, size=probes, replace=False) + 1
    for z in candidates:
        hz = conditional_equivocation(t, int(z), p)
        if abs(hz - h0) > 1e-9:
            raise NotLinearError(
                "conditional entropy at z=%d differs from z=0 by %.3g bits" % (z, abs(hz - h0))
            )
    return h0


def equivocation_rate(t, p):
    """total_equivocation divided by the blocklength."""
    return total_equivocation(t, p) / t.n
