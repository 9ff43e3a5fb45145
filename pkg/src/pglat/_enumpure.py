"""Pure-Python short-vector enumeration kernel.

Same contract as the compiled kernel in ``_enumcore``: a depth-first walk
over the scaled-integer Cholesky data produced by ``enumeration.scale``.
All interval bounds are computed exactly with integer square roots, so the
counts are exact; the compiled kernel must produce identical output.

Vectors are counted in (v, -v) pairs: at the highest nonzero coordinate
only positive values are explored and every leaf counts for two.
"""

from __future__ import annotations

from math import isqrt


def _floordiv(a: int, b: int) -> int:
    return a // b


def _ceildiv(a: int, b: int) -> int:
    return -((-a) // b)


def enumerate_counts(rank, w, c, rint, qscale, bound, top_values=None):
    """Count nonzero lattice vectors with norm <= bound.

    Returns (counts, nodes): counts[m] is the number of vectors of norm
    exactly m (0 <= m <= bound), nodes the number of tree nodes visited.
    ``top_values`` optionally restricts the outermost coordinate to a given
    list of values (used to partition work across processes).
    """
    counts = [0] * (bound + 1)
    nodes = 0
    if rank == 0 or bound < 0:
        return counts, nodes
    t0 = qscale * bound
    x = [0] * rank
    vcen = [0] * rank
    tbud = [0] * rank
    nxt = [0] * rank
    end = [-1] * rank
    azero = [False] * rank

    top_list = list(top_values) if top_values is not None else None
    top_idx = 0

    def set_interval(k: int) -> None:
        v = 0
        row = rint[k]
        for j in range(k + 1, rank):
            v += row[j] * x[j]
        vcen[k] = v
        b = isqrt(tbud[k] // w[k])
        lo = _ceildiv(-b - v, c[k])
        hi = _floordiv(b - v, c[k])
        if azero[k] and lo < 0:
            lo = 0
        nxt[k] = lo
        end[k] = hi

    k = rank - 1
    tbud[k] = t0
    azero[k] = True
    set_interval(k)
    while True:
        if k == rank - 1 and top_list is not None:
            if top_idx >= len(top_list):
                break
            xv = top_list[top_idx]
            top_idx += 1
            if xv < nxt[k] or xv > end[k]:
                continue
        else:
            if nxt[k] > end[k]:
                k += 1
                if k == rank:
                    break
                continue
            xv = nxt[k]
            nxt[k] += 1
        nodes += 1
        d = c[k] * xv + vcen[k]
        tn = tbud[k] - w[k] * d * d
        x[k] = xv
        if k == 0:
            if xv or not azero[0]:
                counts[(t0 - tn) // qscale] += 2
        else:
            azero[k - 1] = azero[k] and xv == 0
            tbud[k - 1] = tn
            k -= 1
            set_interval(k)
    return counts, nodes
