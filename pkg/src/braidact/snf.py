"""Smith normal form over the integers, with exact arithmetic.

Python integers are unbounded, so no overflow handling is needed; the
pivot is always a smallest-magnitude nonzero entry, which keeps the
intermediate coefficients tame in practice.
"""

from __future__ import annotations

from typing import Sequence

__all__ = ["smith_normal_form"]


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns min(m, n) non-negative integers d_1 | d_2 | ... with zeros
    last.  Row/column operations are unimodular, so the diagonal is a
    matrix invariant.
    """
    a = [[int(x) for x in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    if any(len(row) != n for row in a):
        raise ValueError("matrix rows must have equal length")

    t = 0
    while t < m and t < n:
        # Smallest-magnitude nonzero entry of the trailing block as pivot.
        pivot = None
        best = 0
        for i in range(t, m):
            for j in range(t, n):
                v = a[i][j]
                if v and (pivot is None or abs(v) < best):
                    pivot = (i, j)
                    best = abs(v)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]

        while True:
            # Clear column t below the pivot with row operations.
            dirty = False
            for i in range(t + 1, m):
                while a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            # Clear row t to the right with column operations.
            for j in range(t + 1, n):
                while a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if dirty:
                continue
            # Make the pivot divide the rest of the block.
            p = a[t][t]
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
        t += 1

    size = min(m, n)
    return [abs(a[i][i]) for i in range(size)]
