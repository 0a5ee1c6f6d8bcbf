"""Slow reference implementations, kept independent of the main code paths.

These exist purely for cross-checking: the dense textbook Smith reduction
verifies the sparse engine, and the permutation filter verifies the clique
enumeration.  Nothing here shares helpers with the modules it checks.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

from .digraph import Digraph


def naive_smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """Dense row/column reduction to diagonal form; returns (divisors, rank).

    Always pivots on the smallest nonzero entry of the remaining block and
    repeats until it divides its row and column; no sparsity, no shortcuts.
    """
    a = [[int(v) for v in row] for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    diag: list[int] = []
    t = 0
    while t < m and t < n:
        entries = [
            (abs(a[i][j]), i, j)
            for i in range(t, m)
            for j in range(t, n)
            if a[i][j] != 0
        ]
        if not entries:
            break
        _, pi, pj = min(entries)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            pivot = a[t][t]
            done = True
            for i in range(t + 1, m):
                q = a[i][t] // pivot
                for j in range(t, n):
                    a[i][j] -= q * a[t][j]
                if a[i][t] != 0:
                    a[t], a[i] = a[i], a[t]
                    done = False
                    break
            if not done:
                continue
            for j in range(t + 1, n):
                q = a[t][j] // pivot
                for i in range(t, m):
                    a[i][j] -= q * a[i][t]
                if a[t][j] != 0:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    done = False
                    break
            if done:
                break
        diag.append(abs(a[t][t]))
        t += 1
    # enforce the divisibility chain on the diagonal
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            x, y = diag[i], diag[j]
            g = x
            while y:
                g, y = y, g % y
            diag[i], diag[j] = g, diag[i] * diag[j] // g
    return diag, len(diag)


def brute_force_directed_cliques(
    g: Digraph, max_dim: int | None = None
) -> set[tuple[int, ...]]:
    """All directed cliques of g by filtering every injective tuple."""
    limit = g.n if max_dim is None else min(g.n, max_dim + 1)
    found: set[tuple[int, ...]] = set()
    for size in range(1, limit + 1):
        for t in permutations(range(1, g.n + 1), size):
            if all(g.has_edge(t[i], t[j]) for i in range(size) for j in range(i + 1, size)):
                found.add(t)
    return found


def brute_force_derangements(k: int) -> int:
    """Count fixed-point-free permutations by direct enumeration."""
    return sum(
        all(p[i] != i for i in range(k)) for p in permutations(range(k))
    )
