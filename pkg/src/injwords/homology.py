"""Integer chain complexes, sparse Smith normal form, and integral homology.

Boundary matrices of cell complexes are very sparse, so elimination works on
dict-of-dict rows with a column index, picking pivots greedily (unit entries
first, low fill-in).  All arithmetic is on Python integers; entries can grow
during elimination without overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Hashable, Sequence

from .complexes import EMPTY_ID, SimplicialCellComplex

Column = dict[int, int]


@dataclass
class ChainComplex:
    """Graded boundary matrices with labeled bases.

    basis[q] lists the degree-q generators in a fixed order; boundaries[q]
    holds one column per generator, mapping positions in basis[q-1] to
    integer coefficients.  The lowest degree maps to zero.
    """

    degrees: list[int]
    basis: dict[int, list[Hashable]]
    boundaries: dict[int, list[Column]]

    def rank_of(self, q: int) -> int:
        return len(self.basis.get(q, []))

    def boundary_columns(self, q: int) -> list[Column]:
        return self.boundaries.get(q, [])

    def composes_to_zero(self) -> bool:
        """Exact check that consecutive boundary maps compose to the zero map."""
        for q in self.degrees:
            upper = self.boundaries.get(q + 1)
            lower = self.boundaries.get(q)
            if not upper or not lower:
                continue
            for col in upper:
                acc: Column = {}
                for row, v in col.items():
                    for row2, v2 in lower[row].items():
                        acc[row2] = acc.get(row2, 0) + v * v2
                if any(acc.values()):
                    return False
        return True


@dataclass(frozen=True)
class GradedHomology:
    """Per-degree Betti numbers and torsion coefficients (elementary divisors > 1)."""

    betti: dict[int, int]
    torsion: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def betti_at(self, q: int) -> int:
        return self.betti.get(q, 0)

    def torsion_at(self, q: int) -> tuple[int, ...]:
        return self.torsion.get(q, ())

    def nonzero_betti(self) -> dict[int, int]:
        return {q: b for q, b in sorted(self.betti.items()) if b}


def chain_complex(k: SimplicialCellComplex, reduced: bool = False) -> ChainComplex:
    """Semi-simplicial chain complex of a cell complex over the integers.

    The boundary of an ordered cell is the alternating sum of its face
    references.  In reduced mode the empty cell generates degree -1 and
    every vertex maps to it, which makes the reduced homology of the
    complex containing only the empty cell Z in degree -1.
    """
    top = k.dimension()
    qmin = -1 if reduced else 0
    degrees = list(range(qmin, top + 1))
    basis: dict[int, list[Hashable]] = {}
    for q in degrees:
        basis[q] = [EMPTY_ID] if q == -1 else k.ids_of_dim(q)
    position = {
        q: {cell_id: pos for pos, cell_id in enumerate(ids)} for q, ids in basis.items()
    }
    boundaries: dict[int, list[Column]] = {}
    for q in degrees:
        if q == qmin:
            boundaries[q] = [{} for _ in basis[q]]
            continue
        rows = position[q - 1]
        cols: list[Column] = []
        for cell_id in basis[q]:
            col: Column = {}
            for i, f in enumerate(k.cells[cell_id].faces):
                col[rows[f]] = col.get(rows[f], 0) + (-1) ** i
            cols.append({r: v for r, v in col.items() if v})
        boundaries[q] = cols
    return ChainComplex(degrees, basis, boundaries)


# -- Smith normal form ---------------------------------------------------


def _pick_pivot(rows: dict[int, Column], cols: dict[int, set[int]]) -> tuple[int, int]:
    best = None
    best_key = None
    for i, r in rows.items():
        li = len(r)
        for j, v in r.items():
            unit = abs(v) == 1
            fill = (li - 1) * (len(cols[j]) - 1)
            key = (not unit, 0 if unit else abs(v), fill)
            if unit and fill == 0:
                return i, j
            if best_key is None or key < best_key:
                best_key, best = key, (i, j)
    assert best is not None
    return best


def _row_sub(
    rows: dict[int, Column], cols: dict[int, set[int]], i: int, i0: int, q: int
) -> None:
    # rows[i] -= q * rows[i0]
    if q == 0:
        return
    target = rows[i]
    for j, v in rows[i0].items():
        nv = target.get(j, 0) - q * v
        if nv:
            target[j] = nv
            cols[j].add(i)
        else:
            target.pop(j, None)
            cols[j].discard(i)


def _diagonal_of_sparse(rows: dict[int, Column]) -> list[int]:
    """Diagonalize by unimodular row/column operations; returns |diagonal| entries."""
    cols: dict[int, set[int]] = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    diag: list[int] = []
    while rows:
        i0, j0 = _pick_pivot(rows, cols)
        while True:
            p = rows[i0][j0]
            # clear the pivot column with row operations; a nonzero remainder
            # is strictly smaller than |p| and becomes the new pivot
            switched = False
            for i in sorted(cols[j0]):
                if i == i0:
                    continue
                _row_sub(rows, cols, i, i0, rows[i][j0] // p)
                r = rows[i].get(j0, 0)
                if not rows[i]:
                    del rows[i]
                if r:
                    i0 = i
                    switched = True
                    break
            if switched:
                continue
            # pivot column is now a singleton, so clearing the pivot row
            # with column operations only touches row i0
            p = rows[i0][j0]
            moved = None
            for j, v in list(rows[i0].items()):
                if j == j0:
                    continue
                if v % p == 0:
                    del rows[i0][j]
                    cols[j].discard(i0)
                    if not cols[j]:
                        del cols[j]
                else:
                    rows[i0][j] = v % p
                    moved = j
                    break
            if moved is None:
                break
            j0 = moved
        diag.append(abs(rows[i0][j0]))
        del rows[i0]
        del cols[j0]
    return diag


def _divisor_chain(diag: list[int]) -> list[int]:
    d = list(diag)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    return d


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """Elementary divisors d_1 | d_2 | ... | d_r and the rank of an integer matrix."""
    rows = {
        i: {j: int(v) for j, v in enumerate(row) if v} for i, row in enumerate(matrix)
    }
    rows = {i: r for i, r in rows.items() if r}
    divisors = _divisor_chain(_diagonal_of_sparse(rows))
    return divisors, len(divisors)


def _snf_of_columns(cols: list[Column]) -> tuple[list[int], int]:
    rows: dict[int, Column] = {}
    for j, col in enumerate(cols):
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    divisors = _divisor_chain(_diagonal_of_sparse(rows))
    return divisors, len(divisors)


def homology(c: ChainComplex) -> GradedHomology:
    """Betti numbers and torsion per degree, from SNF of adjacent boundary maps."""
    snf_cache: dict[int, tuple[list[int], int]] = {}

    def snf(q: int) -> tuple[list[int], int]:
        if q not in snf_cache:
            cols = c.boundary_columns(q)
            snf_cache[q] = _snf_of_columns(cols) if cols else ([], 0)
        return snf_cache[q]

    betti: dict[int, int] = {}
    torsion: dict[int, tuple[int, ...]] = {}
    for q in c.degrees:
        _, rank_out = snf(q)
        divisors_in, rank_in = snf(q + 1)
        betti[q] = c.rank_of(q) - rank_out - rank_in
        tors = tuple(d for d in divisors_in if d > 1)
        if tors:
            torsion[q] = tors
    return GradedHomology(betti, torsion)


def reduced_homology(k: SimplicialCellComplex) -> GradedHomology:
    return homology(chain_complex(k, reduced=True))
