"""Exact short-vector enumeration: scaling, kernel selection, parallel driver.

The quadratic form is decomposed exactly as sum_k D_k (x_k + sum_{j>k}
R_kj x_j)^2 with rational D, R from the Gram matrix.  Everything is then
cleared to integers once: with c_k the common denominator of row k of R
and Q a global multiplier, the running budget T and the per-level checks

    W_k * (c_k x_k + V_k)^2 <= T,     W_k = Q D_k / c_k^2,  V_k = c_k U_k

involve integers only, and interval endpoints come from exact integer
square roots (floor(sqrt(a/b)) = isqrt(a//b)).  No floating point decides
anything; a float pass is used only to estimate the workload in advance.

Two interchangeable kernels walk the tree: a compiled Cython one using
128-bit integers (picked at import when available and when the magnitude
precheck passes) and a pure-Python twin.  Work may be partitioned across
processes by splitting the outermost coordinate's candidate values; totals
are sums and therefore independent of the worker count.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from . import _enumpure

try:  # compiled kernel is optional
    from . import _enumcore

    HAVE_COMPILED = True
except ImportError:  # pragma: no cover
    _enumcore = None
    HAVE_COMPILED = False


DEFAULT_WORK_CEILING = 2.0e9
WORK_CEILING_ENV = "PGLAT_WORK_CEILING"

# magnitudes must stay well below 2^127 for the int128 kernel
_INT128_GUARD = 1 << 120


class WorkCeilingExceeded(RuntimeError):
    def __init__(self, estimate: float, ceiling: float):
        super().__init__(
            f"estimated enumeration workload {estimate:.3g} nodes exceeds the "
            f"configured ceiling {ceiling:.3g}; raise {WORK_CEILING_ENV} to override"
        )
        self.estimate = estimate
        self.ceiling = ceiling


def work_ceiling() -> float:
    raw = os.environ.get(WORK_CEILING_ENV)
    if raw:
        return float(raw)
    return DEFAULT_WORK_CEILING


def gso_from_gram(gram):
    """Exact Gram-Schmidt data (mu, bstar) from a Gram matrix.

    mu is lower unitriangular, bstar the list of squared orthogonal norms;
    raises ValueError unless the form is positive definite.
    """
    n = len(gram)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = [Fraction(0)] * n
    cacc = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        mu[i][i] = Fraction(1)
        for j in range(i):
            cij = Fraction(gram[i][j])
            for t in range(j):
                cij -= mu[j][t] * cacc[i][t]
            cacc[i][j] = cij
            mu[i][j] = cij / bstar[j]
        bi = Fraction(gram[i][i])
        for t in range(i):
            bi -= mu[i][t] * cacc[i][t]
        if bi <= 0:
            raise ValueError("Gram matrix is not positive definite")
        bstar[i] = bi
    return mu, bstar


@dataclass(frozen=True)
class ScaledForm:
    rank: int
    w: tuple[int, ...]
    c: tuple[int, ...]
    rint: tuple[tuple[int, ...], ...]
    qscale: int

    def int128_safe(self, bound: int) -> bool:
        t0 = self.qscale * bound
        if t0 >= _INT128_GUARD:
            return False
        # worst-case |c_k x_k + V_k| is isqrt(t0 // w_k); propagate upward
        xmax = [0] * self.rank
        dmax = [0] * self.rank
        for k in range(self.rank - 1, -1, -1):
            b = math.isqrt(t0 // self.w[k])
            vmax = sum(
                abs(self.rint[k][j]) * xmax[j] for j in range(k + 1, self.rank)
            )
            dmax[k] = b + vmax
            xmax[k] = (b + vmax) // self.c[k] + 1
            if self.w[k] * dmax[k] * dmax[k] >= _INT128_GUARD:
                return False
        return True


def scale(gram) -> ScaledForm:
    """Clear the exact Cholesky data of a positive definite Gram matrix to
    integers (one global multiplier, one denominator per row)."""
    mu, bstar = gso_from_gram(gram)
    n = len(gram)
    c = []
    for k in range(n):
        den = 1
        for i in range(k + 1, n):
            den = math.lcm(den, mu[i][k].denominator)
        c.append(den)
    qscale = 1
    for k in range(n):
        qscale = math.lcm(qscale, bstar[k].denominator * c[k] * c[k])
    w = []
    rint = []
    for k in range(n):
        wk = Fraction(qscale) * bstar[k] / (c[k] * c[k])
        if wk.denominator != 1:
            raise ArithmeticError("scaling failed to clear denominators")
        w.append(int(wk))
        row = [0] * n
        for j in range(k + 1, n):
            val = mu[j][k] * c[k]
            if val.denominator != 1:
                raise ArithmeticError("scaling failed to clear denominators")
            row[j] = int(val)
        rint.append(tuple(row))
    return ScaledForm(n, tuple(w), tuple(c), tuple(rint), qscale)


def estimate_nodes(gram, bound: int) -> float:
    """Gaussian-heuristic estimate of the enumeration tree size (float)."""
    if bound <= 0:
        return 1.0
    _, bstar = gso_from_gram(gram)
    n = len(gram)
    logs = [math.log(float(b)) / 2 for b in bstar]
    total = 1.0
    r = math.sqrt(bound)
    for k in range(n):
        m = n - k
        logvol = (
            m * math.log(r)
            + (m / 2) * math.log(math.pi)
            - math.lgamma(m / 2 + 1)
            - sum(logs[k:])
        )
        total += math.exp(min(logvol, 700.0))
    return total


def _kernel(form: ScaledForm, bound: int, prefer: str | None):
    if prefer == "pure":
        return _enumpure.enumerate_counts, "pure"
    if prefer == "compiled":
        if not HAVE_COMPILED:
            raise RuntimeError("compiled kernel requested but not available")
        if not form.int128_safe(bound):
            raise RuntimeError("compiled kernel refused: values exceed 128-bit range")
        return _enumcore.enumerate_counts, "compiled"
    if HAVE_COMPILED and form.int128_safe(bound):
        return _enumcore.enumerate_counts, "compiled"
    return _enumpure.enumerate_counts, "pure"


def _top_interval(form: ScaledForm, bound: int) -> list[int]:
    t0 = form.qscale * bound
    k = form.rank - 1
    b = math.isqrt(t0 // form.w[k])
    hi = b // form.c[k]
    return list(range(0, hi + 1))


_WORKER_STATE: dict = {}


def _worker_init(form, bound, kernel_name):
    _WORKER_STATE["args"] = (form, bound, kernel_name)


def _worker_run(values):
    form, bound, kernel_name = _WORKER_STATE["args"]
    fn = (
        _enumcore.enumerate_counts
        if kernel_name == "compiled"
        else _enumpure.enumerate_counts
    )
    return fn(form.rank, form.w, form.c, form.rint, form.qscale, bound, values)


def enumerate_scaled(form: ScaledForm, bound: int, workers: int = 1,
                     prefer: str | None = None):
    """Run the kernel (optionally across processes); returns
    (counts list, nodes, kernel name)."""
    fn, name = _kernel(form, bound, prefer)
    if workers <= 1 or form.rank == 0:
        counts, nodes = fn(form.rank, form.w, form.c, form.rint, form.qscale, bound)
        return counts, nodes, name
    values = _top_interval(form, bound)
    buckets = [values[i::workers] for i in range(workers)]
    buckets = [b for b in buckets if b]
    import multiprocessing as mp

    ctx = mp.get_context("fork")
    with ctx.Pool(
        processes=len(buckets), initializer=_worker_init, initargs=(form, bound, name)
    ) as pool:
        results = pool.map(_worker_run, buckets)
    counts = [0] * (bound + 1)
    nodes = 0
    for cts, nds in results:
        nodes += nds
        for m, v in enumerate(cts):
            counts[m] += v
    return counts, nodes, name
