"""Face vectors, h-vectors, derangement numbers, and the h_k = d(k)*C(n,k) check.

All arithmetic is exact; Python integers never overflow.  The h-vector and
the derangement product deliberately use unrelated binomial helpers so the
identity check compares two independent computations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .complexes import SimplicialCellComplex, injective_words


def f_vector(k: SimplicialCellComplex) -> tuple[int, ...]:
    """(f_0, ..., f_{m-1}) counting cells by dimension, the empty cell excluded."""
    m = k.dimension() + 1
    counts = [0] * m
    for c in k.cells.values():
        if c.dim >= 0:
            counts[c.dim] += 1
    return tuple(counts)


def _binom(a: int, b: int) -> int:
    # multiplicative form, kept separate from math.comb on purpose
    if b < 0 or b > a:
        return 0
    b = min(b, a - b)
    value = 1
    for i in range(b):
        value = value * (a - i) // (i + 1)
    return value


def h_vector(k: SimplicialCellComplex) -> tuple[int, ...]:
    """(h_0, ..., h_m) with m = 1 + dimension, via the alternating binomial transform.

    h_k = sum_{i=0..k} (-1)^(k-i) * C(m-i, k-i) * f_{i-1}, with f_{-1} = 1.
    """
    f = f_vector(k)
    m = len(f)

    def f_at(i: int) -> int:
        return 1 if i == -1 else f[i]

    return tuple(
        sum((-1) ** (j - i) * _binom(m - i, j - i) * f_at(i - 1) for i in range(j + 1))
        for j in range(m + 1)
    )


def derangements(k: int) -> int:
    """Number of fixed-point-free permutations of k letters: sum (-1)^i k!/i!."""
    if k < 0:
        raise ValueError(f"argument must be nonnegative, got {k}")
    return sum((-1) ** i * (math.factorial(k) // math.factorial(i)) for i in range(k + 1))


@dataclass(frozen=True)
class HIdentityRow:
    k: int
    h_k: int
    derangement_product: int

    @property
    def equal(self) -> bool:
        return self.h_k == self.derangement_product


def check_h_identity(n: int) -> list[HIdentityRow]:
    """Compare h_k of the injective-word complex on n letters with d(k)*C(n,k) per k."""
    if n < 1:
        raise ValueError(f"letter count must be positive, got {n}")
    h = h_vector(injective_words(n))
    return [
        HIdentityRow(k, h[k], derangements(k) * math.comb(n, k))
        for k in range(n + 1)
    ]
