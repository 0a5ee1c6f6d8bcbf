"""Simplicial cell complexes with ordered vertex tuples and explicit face references.

A cell of dimension k carries an ordered tuple of k+1 distinct vertices and
k+1 references to the cells obtained by deleting one tuple position.  The
empty cell (id 0) is always present.  Distinct cells may share a vertex
tuple; when none do, the complex is an ordered simplicial complex and
``ordered_flag`` is true.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .digraph import Digraph, complete_digraph

EMPTY_ID = 0


@dataclass(frozen=True)
class Cell:
    """One cell: ordered vertex tuple plus codimension-1 face ids.

    faces[i] is the id of the cell whose tuple is ``vertices`` with
    position i deleted; a 0-cell's single face is the empty cell.
    """

    id: int
    vertices: tuple[int, ...]
    faces: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


class SimplicialCellComplex:
    """Face poset of a simplicial poset, realized as labeled cells.

    Vertices live in the ambient set 1..ambient_n; ambient vertices that
    appear in no tuple are ghost vertices.
    """

    def __init__(self, ambient_n: int, cells: Mapping[int, Cell]):
        if ambient_n < 0:
            raise ValueError(f"ambient vertex count must be nonnegative, got {ambient_n}")
        empty = [c for c in cells.values() if not c.vertices]
        if len(empty) != 1 or empty[0].id != EMPTY_ID:
            raise ValueError("complex must contain exactly one empty cell with id 0")
        self.ambient_n = ambient_n
        self.cells: dict[int, Cell] = dict(cells)
        self._ids = sorted(self.cells)
        self.ordered_flag = len({c.vertices for c in self.cells.values()}) == len(self.cells)

    # -- basic queries -------------------------------------------------

    def cell(self, cell_id: int) -> Cell:
        return self.cells[cell_id]

    def cell_ids(self) -> list[int]:
        """All cell ids in increasing order (including the empty cell)."""
        return list(self._ids)

    def ids_of_dim(self, q: int) -> list[int]:
        return [i for i in self._ids if self.cells[i].dim == q]

    def __len__(self) -> int:
        return len(self.cells)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SimplicialCellComplex)
            and self.ambient_n == other.ambient_n
            and self.cells == other.cells
        )

    def dimension(self) -> int:
        """Maximal cell dimension; -1 for the complex containing only the empty cell."""
        return max(c.dim for c in self.cells.values())

    def vertex_set(self, cell_id: int) -> frozenset[int]:
        return frozenset(self.cells[cell_id].vertices)

    def ghost_vertices(self) -> set[int]:
        present = {v for c in self.cells.values() for v in c.vertices}
        return set(range(1, self.ambient_n + 1)) - present

    def tuple_index(self) -> dict[tuple[int, ...], list[int]]:
        """Map vertex tuple -> ids of cells carrying it (singletons iff ordered)."""
        index: dict[tuple[int, ...], list[int]] = {}
        for i in self._ids:
            index.setdefault(self.cells[i].vertices, []).append(i)
        return index

    def facets(self) -> list[int]:
        """Ids of maximal nonempty cells, in increasing id order."""
        referenced: set[int] = set()
        for c in self.cells.values():
            referenced.update(c.faces)
        return [i for i in self._ids if i != EMPTY_ID and i not in referenced]

    def is_pure(self) -> bool:
        dims = {self.cells[i].dim for i in self.facets()}
        return len(dims) <= 1

    def closure(self, cell_ids: Iterable[int]) -> set[int]:
        """All iterated faces of the given cells, the cells themselves included."""
        seen: set[int] = set()
        stack = list(cell_ids)
        while stack:
            i = stack.pop()
            if i in seen:
                continue
            seen.add(i)
            stack.extend(self.cells[i].faces)
        return seen

    def face_deleting_vertex(self, cell_id: int, v: int) -> int:
        """Face reference of the cell obtained by deleting vertex v from its tuple."""
        c = self.cells[cell_id]
        return c.faces[c.vertices.index(v)]

    # -- integrity -----------------------------------------------------

    def validate(self) -> list[str]:
        """Check all structural invariants; returns violations, empty when ok."""
        problems: list[str] = []
        for i, c in self.cells.items():
            if c.id != i:
                problems.append(f"cell {i}: stored id {c.id} disagrees with key")
            if len(set(c.vertices)) != len(c.vertices):
                problems.append(f"cell {i}: repeated vertex in tuple {c.vertices}")
            if any(not (1 <= v <= self.ambient_n) for v in c.vertices):
                problems.append(f"cell {i}: vertex out of range 1..{self.ambient_n}")
            if len(c.faces) != len(c.vertices):
                problems.append(f"cell {i}: {len(c.faces)} face refs for a {c.dim}-cell")
                continue
            for p, f in enumerate(c.faces):
                if f not in self.cells:
                    problems.append(f"cell {i}: face ref {f} does not resolve")
                elif self.cells[f].vertices != c.vertices[:p] + c.vertices[p + 1:]:
                    problems.append(f"cell {i}: face {p} has wrong vertex tuple")
        if problems:
            return problems
        # Semi-simplicial identity; with the tuple checks above this is the
        # simplicial-poset condition on lower segments.
        for i, c in self.cells.items():
            for j in range(len(c.faces)):
                for k in range(j + 1, len(c.faces)):
                    via_k = self.cells[c.faces[k]].faces[j]
                    via_j = self.cells[c.faces[j]].faces[k - 1]
                    if via_k != via_j:
                        problems.append(
                            f"cell {i}: deleting positions {j},{k} in either order "
                            f"reaches different cells ({via_k} vs {via_j})"
                        )
        flag = len({c.vertices for c in self.cells.values()}) == len(self.cells)
        if self.ordered_flag != flag:
            problems.append("ordered_flag disagrees with tuple injectivity")
        return problems

    # -- serialization -------------------------------------------------

    def to_json(self) -> str:
        payload = {
            "ambient_n": self.ambient_n,
            "cells": [
                {"id": i, "vertices": list(self.cells[i].vertices), "faces": list(self.cells[i].faces)}
                for i in self._ids
            ],
        }
        return json.dumps(payload)

    @classmethod
    def from_json(cls, text: str) -> "SimplicialCellComplex":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid complex JSON: {exc}") from None
        if not isinstance(payload, dict) or "ambient_n" not in payload or "cells" not in payload:
            raise ValueError("complex JSON must hold 'ambient_n' and 'cells'")
        cells: dict[int, Cell] = {}
        for entry in payload["cells"]:
            cell = Cell(int(entry["id"]), tuple(entry["vertices"]), tuple(entry["faces"]))
            if cell.id in cells:
                raise ValueError(f"duplicate cell id {cell.id}")
            cells[cell.id] = cell
        k = cls(int(payload["ambient_n"]), cells)
        problems = k.validate()
        if problems:
            raise ValueError("invalid complex: " + "; ".join(problems[:3]))
        return k


# -- constructors -------------------------------------------------------


def _from_tuple_set(tuples: set[tuple[int, ...]], ambient_n: int) -> SimplicialCellComplex:
    """Complex whose cells are exactly the given deletion-closed tuples plus the empty one.

    Ids are assigned in lexicographic tuple order, so the empty tuple gets id 0.
    """
    ordered = sorted(tuples | {()})
    index = {t: i for i, t in enumerate(ordered)}
    cells = {
        i: Cell(i, t, tuple([index[t[:p] + t[p + 1:]] for p in range(len(t))]))
        for i, t in enumerate(ordered)
    }
    return SimplicialCellComplex(ambient_n, cells)


def from_ordered_simplices(
    tuples: Iterable[tuple[int, ...]], ambient_n: int
) -> SimplicialCellComplex:
    """The ordered simplicial complex generated by closing tuples under position deletion."""
    closed: set[tuple[int, ...]] = set()
    stack = [tuple(t) for t in tuples]
    for t in stack:
        if len(set(t)) != len(t):
            raise ValueError(f"tuple {t} has a repeated vertex")
        if any(not (1 <= v <= ambient_n) for v in t):
            raise ValueError(f"tuple {t} uses a vertex outside 1..{ambient_n}")
    while stack:
        t = stack.pop()
        if t in closed or not t:
            continue
        closed.add(t)
        stack.extend(t[:p] + t[p + 1:] for p in range(len(t)))
    return _from_tuple_set(closed, ambient_n)


def directed_flag_complex(g: Digraph, max_dim: int | None = None) -> SimplicialCellComplex:
    """Ordered complex of directed cliques of g: tuples with an edge from every
    earlier to every later vertex, enumerated depth-first in lex order."""
    if max_dim is not None and max_dim < 0:
        raise ValueError(f"max_dim must be nonnegative, got {max_dim}")
    out = g.out_neighbors()
    limit = g.n if max_dim is None else min(g.n, max_dim + 1)
    cliques: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], candidates: list[int]) -> None:
        # candidates = vertices reachable from every member of prefix, sorted
        for w in candidates:
            t = prefix + (w,)
            cliques.append(t)
            if len(t) < limit:
                out_w = out[w]
                extend(t, [x for x in candidates if x in out_w])

    extend((), list(range(1, g.n + 1)))
    return _from_tuple_set(set(cliques), g.n)


def injective_words(n: int) -> SimplicialCellComplex:
    """The complex of injective words on 1..n: every word with distinct letters."""
    if n < 1:
        raise ValueError(f"letter count must be positive, got {n}")
    return directed_flag_complex(complete_digraph(n))


def full_subcomplex(k: SimplicialCellComplex, a: Iterable[int]) -> SimplicialCellComplex:
    """All cells whose vertex set lies in a, re-indexed to the ambient set 1..|a|.

    New vertex i stands for the i-th smallest element of a; cell ids are
    renumbered contiguously in increasing original-id order.
    """
    chosen = sorted(set(a))
    if any(not (1 <= v <= k.ambient_n) for v in chosen):
        raise ValueError(f"subset {chosen} not contained in 1..{k.ambient_n}")
    rank = {v: i + 1 for i, v in enumerate(chosen)}
    keep = [i for i in k.cell_ids() if set(k.cells[i].vertices) <= set(chosen)]
    remap = {old: new for new, old in enumerate(keep)}
    cells = {
        remap[i]: Cell(
            remap[i],
            tuple(rank[v] for v in k.cells[i].vertices),
            tuple(remap[f] for f in k.cells[i].faces),
        )
        for i in keep
    }
    return SimplicialCellComplex(len(chosen), cells)


def relabel_vertices(k: SimplicialCellComplex, mapping: Mapping[int, int]) -> SimplicialCellComplex:
    """Rename ambient vertices through a bijection of 1..ambient_n; ids are kept."""
    if sorted(mapping) != list(range(1, k.ambient_n + 1)) or sorted(
        mapping.values()
    ) != list(range(1, k.ambient_n + 1)):
        raise ValueError("mapping must be a bijection of the ambient vertex set")
    cells = {
        i: Cell(i, tuple(mapping[v] for v in c.vertices), c.faces)
        for i, c in k.cells.items()
    }
    return SimplicialCellComplex(k.ambient_n, cells)


def with_ambient(k: SimplicialCellComplex, ambient_n: int) -> SimplicialCellComplex:
    """Extend the ambient vertex set to 1..ambient_n, adding ghost vertices only."""
    if ambient_n < k.ambient_n:
        raise ValueError(f"cannot shrink ambient set from {k.ambient_n} to {ambient_n}")
    if ambient_n == k.ambient_n:
        return k
    return SimplicialCellComplex(ambient_n, k.cells)


def embed_into_injective_words(k: SimplicialCellComplex) -> dict[int, int]:
    """Map each cell to the cell of Inj[ambient_n] carrying the same vertex tuple.

    Requires an ordered simplicial complex; the map is injective and commutes
    with face references because face deletion acts on tuples identically on
    both sides.
    """
    if not k.ordered_flag:
        raise ValueError("only ordered simplicial complexes embed into injective words")
    target = injective_words(k.ambient_n)
    index = {c.vertices: i for i, c in target.cells.items()}
    return {i: index[c.vertices] for i, c in k.cells.items()}
