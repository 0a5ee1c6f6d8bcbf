"""Gluing constructions: simplices, boundary facet subcomplexes, and pushouts.

Gluing identifies two copies of a common subcomplex and keeps every other
cell distinct, even when vertex tuples coincide; this is what produces
simplicial posets that are not ordered simplicial complexes (the double
edge being the smallest example).
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .complexes import (
    EMPTY_ID,
    Cell,
    SimplicialCellComplex,
    from_ordered_simplices,
    with_ambient,
)


def simplex_complex(vertices: Sequence[int], ambient_n: int | None = None) -> SimplicialCellComplex:
    """Closure of a single ordered tuple: the face poset of a simplex."""
    t = tuple(vertices)
    if len(set(t)) != len(t):
        raise ValueError(f"tuple {t} has a repeated vertex")
    n = ambient_n if ambient_n is not None else (max(t) if t else 0)
    return from_ordered_simplices([t], n)


def boundary_facet_subcomplex(d: int, omit: Iterable[int]) -> SimplicialCellComplex:
    """Union of the closures of selected facets of the boundary of a (d-1)-simplex.

    Position p in omit selects the facet of (1, ..., d) with position p
    deleted.  The result must contain all d vertices, which fails exactly
    for singleton omit sets.
    """
    if d < 2:
        raise ValueError(f"simplex must have at least 2 vertices, got {d}")
    positions = sorted(set(omit))
    if not positions:
        raise ValueError("omit set must be nonempty")
    if any(p < 1 or p > d for p in positions):
        raise ValueError(f"omit positions {positions} outside 1..{d}")
    base = tuple(range(1, d + 1))
    facet_tuples = [base[: p - 1] + base[p:] for p in positions]
    covered = {v for t in facet_tuples for v in t}
    if covered != set(base):
        missing = sorted(set(base) - covered)
        raise ValueError(f"facet subcomplex misses vertices {missing}")
    return from_ordered_simplices(facet_tuples, d)


def double_along_boundary_facets(d: int, omit: Iterable[int]) -> SimplicialCellComplex:
    """Two copies of the simplex on (1, ..., d) glued along selected boundary facets."""
    simplex = simplex_complex(tuple(range(1, d + 1)))
    seam = boundary_facet_subcomplex(d, omit)
    by_tuple = {c.vertices: i for i, c in simplex.cells.items()}
    ids = {by_tuple[c.vertices] for c in seam.cells.values()}
    return glue(simplex, simplex, ids, ids)


def _check_closed_subcomplex(k: SimplicialCellComplex, ids: set[int], side: str) -> None:
    if EMPTY_ID not in ids:
        raise ValueError(f"{side} id set must contain the empty cell")
    for i in ids:
        if i not in k.cells:
            raise ValueError(f"{side} id {i} does not exist")
        for f in k.cells[i].faces:
            if f not in ids:
                raise ValueError(f"{side} id set is not closed under faces (cell {i})")


def _identify_by_tuples(
    k1: SimplicialCellComplex, ids1: set[int], k2: SimplicialCellComplex, ids2: set[int]
) -> dict[int, int]:
    by_tuple1 = {}
    for i in ids1:
        t = k1.cells[i].vertices
        if t in by_tuple1:
            raise ValueError(f"tuple {t} appears twice in the first gluing subcomplex")
        by_tuple1[t] = i
    by_tuple2 = {}
    for i in ids2:
        t = k2.cells[i].vertices
        if t in by_tuple2:
            raise ValueError(f"tuple {t} appears twice in the second gluing subcomplex")
        by_tuple2[t] = i
    if set(by_tuple1) != set(by_tuple2):
        raise ValueError("gluing subcomplexes carry different vertex tuples")
    return {by_tuple1[t]: by_tuple2[t] for t in by_tuple1}


def glue(
    k1: SimplicialCellComplex,
    k2: SimplicialCellComplex,
    ids1: Iterable[int],
    ids2: Iterable[int],
    identification: Mapping[int, int] | None = None,
) -> SimplicialCellComplex:
    """Pushout of k1 and k2 along a shared subcomplex.

    ids1 and ids2 name the two copies of the subcomplex; identification maps
    ids1 to ids2 and must match vertex tuples and commute with face
    references (derived from tuples when omitted).  Ambient vertex sets are
    first extended to a common size by adding ghost vertices.
    """
    n = max(k1.ambient_n, k2.ambient_n)
    k1 = with_ambient(k1, n)
    k2 = with_ambient(k2, n)
    set1, set2 = set(ids1), set(ids2)
    _check_closed_subcomplex(k1, set1, "first")
    _check_closed_subcomplex(k2, set2, "second")
    if identification is None:
        ident = _identify_by_tuples(k1, set1, k2, set2)
    else:
        ident = dict(identification)
        if set(ident) != set1 or set(ident.values()) != set2 or len(ident) != len(set1):
            raise ValueError("identification is not a bijection between the id sets")
    for i1, i2 in ident.items():
        c1, c2 = k1.cells[i1], k2.cells[i2]
        if c1.vertices != c2.vertices:
            raise ValueError(
                f"identification matches tuples {c1.vertices} and {c2.vertices}"
            )
        for f1, f2 in zip(c1.faces, c2.faces):
            if ident[f1] != f2:
                raise ValueError(f"identification does not commute with faces at cell {i1}")

    into_first = {i2: i1 for i1, i2 in ident.items()}
    remap1 = {old: new for new, old in enumerate(k1.cell_ids())}
    remap2: dict[int, int] = {}
    next_id = len(remap1)
    for old in k2.cell_ids():
        if old in into_first:
            remap2[old] = remap1[into_first[old]]
        else:
            remap2[old] = next_id
            next_id += 1

    cells: dict[int, Cell] = {}
    for old, new in remap1.items():
        c = k1.cells[old]
        cells[new] = Cell(new, c.vertices, tuple(remap1[f] for f in c.faces))
    for old, new in remap2.items():
        if old in into_first:
            continue
        c = k2.cells[old]
        cells[new] = Cell(new, c.vertices, tuple(remap2[f] for f in c.faces))
    return SimplicialCellComplex(n, cells)


def iterated_shelling_glue(
    facet_list: Sequence[Sequence[int]],
    attach_specs: Sequence[Iterable[int]] | None = None,
) -> tuple[SimplicialCellComplex, list[int]]:
    """Build a complex by gluing full simplices on [d] facet by facet.

    Every entry of facet_list must order the whole vertex set 1..d.  For
    step j >= 2, the attach spec lists the positions of the codimension-1
    faces along which the new simplex is glued; when omitted it is derived
    from the vertex tuples already present.  Each step must glue along a
    nonempty union of boundary facets covering all d vertices, and the
    matched tuples must be unique in the complex built so far.  Returns the
    glued complex together with the per-step intersection facet counts.
    """
    if not facet_list:
        raise ValueError("facet list must be nonempty")
    tuples = [tuple(f) for f in facet_list]
    d = len(tuples[0])
    for t in tuples:
        if sorted(t) != list(range(1, d + 1)):
            raise ValueError(f"facet {t} does not order the vertex set 1..{d}")
    if attach_specs is not None and len(attach_specs) != len(tuples) - 1:
        raise ValueError("need one attach spec per step from the second facet on")

    current = simplex_complex(tuples[0], ambient_n=d)
    counts: list[int] = []
    for step in range(2, len(tuples) + 1):
        word = tuples[step - 1]
        piece = simplex_complex(word, ambient_n=d)
        current_tuples = {c.vertices for c in current.cells.values()}
        if attach_specs is None:
            positions = [
                p
                for p in range(1, d + 1)
                if word[: p - 1] + word[p:] in current_tuples
            ]
            shared = {
                c.vertices
                for c in piece.cells.values()
                if c.vertices and c.vertices in current_tuples
            }
        else:
            positions = sorted(set(attach_specs[step - 2]))
            if any(p < 1 or p > d for p in positions):
                raise ValueError(f"step {step}: attach positions outside 1..{d}")
            shared = None
        if not positions:
            raise ValueError(f"step {step}: no codimension-1 face to glue along")
        seam_tuples: set[tuple[int, ...]] = set()
        for p in positions:
            face = word[: p - 1] + word[p:]
            if face not in current_tuples:
                raise ValueError(f"step {step}: face {face} is absent from the complex")
            stack = [face]
            while stack:
                t = stack.pop()
                if t in seam_tuples:
                    continue
                seam_tuples.add(t)
                stack.extend(t[: q] + t[q + 1:] for q in range(len(t)))
        covered = {v for t in seam_tuples for v in t}
        if covered != set(range(1, d + 1)):
            missing = sorted(set(range(1, d + 1)) - covered)
            raise ValueError(f"step {step}: gluing subcomplex misses vertices {missing}")
        if shared is not None and not shared <= seam_tuples:
            extra = sorted(shared - seam_tuples)[0]
            raise ValueError(
                f"step {step}: intersection is not a union of codimension-1 faces "
                f"(shared tuple {extra})"
            )
        by_tuple_current: dict[tuple[int, ...], int] = {}
        for i, c in current.cells.items():
            if c.vertices in seam_tuples:
                if c.vertices in by_tuple_current:
                    raise ValueError(
                        f"step {step}: tuple {c.vertices} is ambiguous in the complex"
                    )
                by_tuple_current[c.vertices] = i
        piece_index = {c.vertices: i for i, c in piece.cells.items()}
        ids1 = {by_tuple_current[t] for t in seam_tuples} | {EMPTY_ID}
        ids2 = {piece_index[t] for t in seam_tuples} | {EMPTY_ID}
        try:
            current = glue(current, piece, ids1, ids2)
        except ValueError as exc:
            raise ValueError(f"step {step}: {exc}") from None
        counts.append(len(positions))
    return current, counts
