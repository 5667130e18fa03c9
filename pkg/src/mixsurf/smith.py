"""Smith normal form over the integers (Python ints, no overflow)."""

from __future__ import annotations

from typing import Sequence


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Return the nonzero diagonal of the Smith normal form of ``matrix``.

    Entries come back non-negative and in divisibility order
    ``d1 | d2 | ... | dr``; ``r`` is the rank.
    """
    A = [[int(x) for x in row] for row in matrix if any(row)]
    m = len(A)
    n = len(A[0]) if m else 0
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        while True:
            pivot = None
            best = 0
            for i in range(t, m):
                row = A[i]
                for j in range(t, n):
                    v = row[j]
                    if v and (pivot is None or abs(v) < best):
                        pivot, best = (i, j), abs(v)
            if pivot is None:
                return diag
            i0, j0 = pivot
            A[t], A[i0] = A[i0], A[t]
            if j0 != t:
                for row in A:
                    row[t], row[j0] = row[j0], row[t]

            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    rt = A[t]
                    A[i] = [a - q * b for a, b in zip(A[i], rt)]
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    for row in A[t:]:
                        row[j] -= q * row[t]
                    if A[t][j]:
                        clean = False
            if not clean:
                continue

            # pivot must divide the remaining block
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad])]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def invariant_factors(matrix: Sequence[Sequence[int]], ncols: int) -> list[int]:
    """Invariant factors (> 1) of the cokernel Z^ncols / rowspan(matrix).

    Raises ``ValueError`` if the cokernel is infinite.
    """
    diag = smith_diagonal(matrix)
    if len(diag) < ncols:
        raise ValueError("relation matrix has deficient rank; group is infinite")
    return [d for d in diag if d > 1]
