"""Shelling-order verification and the boundary-attachment sphere count.

A facet order is a shelling when each facet meets the union of the earlier
ones in a nonempty pure codimension-1 subcomplex of its boundary.  Facets
attached over their entire boundary each contribute one top-dimensional
sphere to the homotopy type.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import EMPTY_ID, SimplicialCellComplex


@dataclass(frozen=True)
class ShellingReport:
    is_shelling: bool
    first_violation: tuple[int, str] | None
    full_boundary_attachments: int
    per_step_intersection_facets: tuple[int, ...]


def lex_facet_order(k: SimplicialCellComplex) -> list[int]:
    """Facet ids sorted by lexicographic comparison of their vertex tuples."""
    if not k.is_pure():
        raise ValueError("lexicographic facet order needs a pure complex")
    facets = k.facets()
    tuples = [k.cells[i].vertices for i in facets]
    if len(set(tuples)) != len(tuples):
        raise ValueError("facets are not distinguishable by vertex tuples")
    return sorted(facets, key=lambda i: k.cells[i].vertices)


def is_shelling(k: SimplicialCellComplex, order: list[int]) -> ShellingReport:
    """Verify a facet order step by step.

    Intersections are taken on cell ids, so complexes holding distinct cells
    with equal vertex tuples are handled correctly.
    """
    facets = k.facets()
    if sorted(order) != facets:
        raise ValueError("order is not a permutation of the facets")
    if not k.is_pure():
        raise ValueError("shelling is defined for pure complexes only")
    d = k.dimension()

    full_count = 0
    per_step: list[int] = []
    union_ids: set[int] = set()
    for step, facet_id in enumerate(order, start=1):
        closure = k.closure([facet_id])
        if step == 1:
            union_ids |= closure
            continue
        common = {i for i in closure & union_ids if i != EMPTY_ID}
        union_ids |= closure
        if not common:
            return ShellingReport(
                False, (step, "empty intersection with earlier facets"),
                full_count, tuple(per_step),
            )
        faces_inside = {f for i in common for f in k.cells[i].faces}
        maximal = [i for i in common if i not in faces_inside]
        bad = [i for i in maximal if k.cells[i].dim != d - 1]
        if bad:
            return ShellingReport(
                False,
                (step, f"intersection has a maximal cell of dimension {k.cells[bad[0]].dim}"),
                full_count, tuple(per_step),
            )
        per_step.append(len(maximal))
        if all(f in common for f in k.cells[facet_id].faces):
            full_count += 1
    return ShellingReport(True, None, full_count, tuple(per_step))


def predicted_sphere_count(k: SimplicialCellComplex, order: list[int]) -> int:
    """Number of facets attached over their entire boundary, for a valid shelling."""
    report = is_shelling(k, order)
    if not report.is_shelling:
        step, reason = report.first_violation  # type: ignore[misc]
        raise ValueError(f"order is not a shelling (step {step}: {reason})")
    return report.full_boundary_attachments
