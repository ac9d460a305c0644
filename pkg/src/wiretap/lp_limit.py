"""Finite-blocklength equivocation limit via linear programming.

For one eavesdropper observation, a binning code of blocklength n and bin
size e contributes, per bin, a distance-count row r (a weak composition
of e into n+1 parts).  Whatever the code, the 2**k chosen rows must add
up column-wise to the binomial profile b[j] = C(n, j), because the bins
partition the space.  Relaxing "rows of an actual code" to "any
nonnegative combination of candidate rows" gives a linear program whose
optimum upper-bounds the total equivocation of every uniform binning
code of that shape:

    maximize    f . x        f_i = -P_i log2 P_i,  P_i = r_i . gamma
    subject to  A x = b,     column i of A is candidate row r_i
                x >= 0

The optimum sits at a vertex, so the solver below is a dense two-phase
primal simplex with Bland's rule; no external solver is involved.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bitcore import CapExceeded
from .equivocation import channel_weights

ROW_CAP = 10_000_000

# pivot tolerance shared by pricing, ratio test and zero detection
TOL = 1e-10

_MAX_PIVOTS = 100_000


class SimplexError(RuntimeError):
    """Numerical failure inside the simplex (singular basis, guard trip)."""


class CountMismatch(RuntimeError):
    """The two candidate-row counting formulas disagreed; implementation bug."""


def _compositions(parts, total):
    # ascending colexicographic order: last coordinate varies slowest
    if parts == 1:
        yield (total,)
        return
    for last in range(total + 1):
        for head in _compositions(parts - 1, total - last):
            yield head + (last,)


def enumerate_rows(n, e, cap=ROW_CAP):
    """All weak compositions of e into n+1 parts, colexicographically.

    Returns an (N, n+1) integer array with N = C(e+n, e).  Raises
    CapExceeded before materializing anything when N is past cap.
    """
    if n < 1 or e < 1:
        raise ValueError("need n >= 1 and e >= 1")
    count = math.comb(e + n, e)
    if count > cap:
        raise CapExceeded("candidate row count N = %d exceeds cap %d" % (count, cap))
    rows = np.array(list(_compositions(n + 1, e)), dtype=np.int64)
    assert rows.shape == (count, n + 1)
    return rows


@lru_cache(maxsize=None)
def _nested(colors, rem):
    # "fill rem identical slots from `colors` colors, none mandatory":
    # first layer picks j colors that appear at least once, then the
    # remaining rem - j slots reduce to the same problem with j colors.
    # An empty-range sum (rem = 0) counts as 1.
    if rem == 0:
        return 1
    total = 0
    for j in range(1, rem + 1):
        c = math.comb(colors, j)
        if c:
            total += c * _nested(j, rem - j)
    return total


def appendix_count(n, e):
    """Candidate-row count by two independent closed routes.

    Evaluates the nested-sum recursion and the single sum
    sum_i C(n+1, i) * C(e-1, i-1), i up to min(e, n+1), and returns the
    common value.  A disagreement means a transcription bug, so it
    raises instead of guessing.
    """
    if n < 1 or e < 1:
        raise ValueError("need n >= 1 and e >= 1")
    delta = min(e, n + 1)
    nested = sum(math.comb(n + 1, i) * _nested(i, e - i) for i in range(1, delta + 1))
    direct = sum(math.comb(n + 1, i) * math.comb(e - 1, i - 1) for i in range(1, delta + 1))
    if nested != direct:
        raise CountMismatch("row-count formulas disagree: %d vs %d" % (nested, direct))
    return nested


@dataclass
class LpInstance:
    n: int
    e: int
    p: float
    rows: np.ndarray   # (N, n+1) candidate rows
    f: np.ndarray      # objective coefficients, length N
    A: np.ndarray      # (n+1, N) constraint matrix, column i = rows[i]
    b: np.ndarray      # binomial right-hand side, length n+1


@dataclass
class LpSolution:
    x: np.ndarray
    objective: float
    basis: list
    selected: list     # [(row tuple, multiplicity)] for x_i > 0


def objective_coefficients(rows, gamma):
    """f_i = -P_i log2 P_i with P_i = rows[i] . gamma, 0 log 0 = 0.

    Evaluated formally for every row, including rows with P_i > 1 whose
    coefficient is negative; the maximization simply never picks them.
    """
    P = rows @ gamma
    with np.errstate(divide="ignore", invalid="ignore"):
        f = np.where(P > 0.0, -P * np.log2(P), 0.0)
    return f


def build_lp(n, e, p, cap=ROW_CAP):
    """Assemble the LP for blocklength n, bin size e, crossover p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    rows = enumerate_rows(n, e, cap=cap)
    gamma = channel_weights(p, n)
    f = objective_coefficients(rows, gamma)
    A = rows.T.astype(float)
    b = np.array([math.comb(n, j) for j in range(n + 1)], dtype=float)
    return LpInstance(n=n, e=e, p=p, rows=rows, f=f, A=A, b=b)


def _pivot_loop(A, b, c, basis):
    # Revised-ish dense iteration: refactor the basis every step.  Bland
    # entering rule (smallest eligible index) plus smallest-basis-column
    # tie-break on leaving guarantees termination.
    m = A.shape[0]
    for _ in range(_MAX_PIVOTS):
        B = A[:, basis]
        try:
            xb = np.linalg.solve(B, b)
            y = np.linalg.solve(B.T, c[basis])
        except np.linalg.LinAlgError:
            raise SimplexError("singular working basis")
        rc = c - y @ A
        rc[basis] = 0.0
        eligible = np.nonzero(rc > TOL)[0]
        if eligible.size == 0:
            return basis, xb
        enter = int(eligible[0])
        d = np.linalg.solve(B, A[:, enter])
        pos = np.nonzero(d > TOL)[0]
        if pos.size == 0:
            raise SimplexError("unbounded direction; instance is malformed")
        ratios = xb[pos] / d[pos]
        best = ratios.min()
        ties = pos[ratios <= best + TOL]
        leave_row = min(ties, key=lambda r: basis[r])
        basis[leave_row] = enter
    raise SimplexError("pivot guard tripped after %d iterations" % _MAX_PIVOTS)


def _simplex_max(A, b, f):
    """Maximize f.x s.t. A x = b, x >= 0; returns (objective, x, basis)."""
    m, ncols = A.shape
    if np.any(b < 0):
        raise ValueError("right-hand side must be nonnegative")
    # phase 1: artificial columns, maximize minus their sum
    A1 = np.hstack([A, np.eye(m)])
    c1 = np.zeros(ncols + m)
    c1[ncols:] = -1.0
    basis = list(range(ncols, ncols + m))
    basis, xb = _pivot_loop(A1, b, c1, basis)
    if float(c1[basis] @ xb) < -1e-7:
        raise SimplexError("phase 1 ended infeasible")
    # pivot any zero-level artificial out on an original column
    for r in range(m):
        if basis[r] >= ncols:
            B = A1[:, basis]
            tableau_row = np.linalg.solve(B, A)[r]
            options = [j for j in np.nonzero(np.abs(tableau_row) > TOL)[0] if j not in basis]
            if not options:
                raise SimplexError("dependent constraint row; instance is malformed")
            basis[r] = int(options[0])
    # phase 2 prices original columns only; the basis is already original
    basis, xb = _pivot_loop(A, b, f, basis)
    x = np.zeros(ncols)
    x[basis] = xb
    return float(f[basis] @ xb), x, basis


def solve_lp(inst):
    """Optimal vertex of the instance; deterministic for a fixed input.

    The returned multiplicities are those of an optimal basic feasible
    solution: at most n+1 of them are positive and each is integral up
    to roundoff, because the vertices of this polytope are integer.
    """
    objective, x, basis = _simplex_max(inst.A, inst.b, inst.f)
    selected = [
        (tuple(int(v) for v in inst.rows[i]), float(x[i]))
        for i in np.nonzero(x > 1e-9)[0]
    ]
    return LpSolution(x=x, objective=objective, basis=sorted(basis), selected=selected)


def lp_limit_bits(l, k, p, cap=ROW_CAP):
    """LP optimum in bits for form (l, k) at crossover p.

    At p = 0 or p = 1 the observation pins the codeword, equivocation 0;
    those endpoints are returned by convention instead of solving a
    degenerate program.
    """
    if l < 0 or k < 1:
        raise ValueError("need l >= 0 and k >= 1")
    if p in (0.0, 1.0):
        return 0.0
    inst = build_lp(l + k, 1 << l, p, cap=cap)
    return solve_lp(inst).objective


def lp_limit_rate(l, k, p, cap=ROW_CAP):
    """lp_limit_bits divided by the blocklength n = l + k."""
    return lp_limit_bits(l, k, p, cap=cap) / (l + k)


def optimal_rows_l1(n):
    """The optimal row multiset for bin size e = 2, in closed form.

    C(n, i) copies of the row with single counts at distances i and
    n - i, for i below n/2; for even n the centre row places both
    codewords at distance n/2 and appears C(n, n/2) / 2 times, which
    makes the column sums meet the binomial profile exactly.
    Returns [(row tuple, multiplicity)].
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for i in range((n + 1) // 2):
        row = [0] * (n + 1)
        row[i] = 1
        row[n - i] = 1
        out.append((tuple(row), math.comb(n, i)))
    if n % 2 == 0:
        row = [0] * (n + 1)
        row[n // 2] = 2
        out.append((tuple(row), math.comb(n, n // 2) // 2))
    return out


def selection_objective(selection, n, p):
    """Objective value sum_i mult_i * f(row_i) of an explicit selection."""
    gamma = channel_weights(p, n)
    rows = np.array([r for r, _ in selection], dtype=np.int64)
    mults = np.array([m for _, m in selection], dtype=float)
    return float(objective_coefficients(rows, gamma) @ mults)


def selection_satisfies_constraints(selection, n, e):
    """Exact check that a selection hits the binomial column sums."""
    cols = [0] * (n + 1)
    total = 0
    for row, mult in selection:
        if len(row) != n + 1 or sum(row) != e:
            return False
        total += mult
        for j, v in enumerate(row):
            cols[j] += mult * v
    return total == (1 << n) // e and cols == [math.comb(n, j) for j in range(n + 1)]
