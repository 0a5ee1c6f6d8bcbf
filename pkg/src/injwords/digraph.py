"""Finite directed graphs without loops or repeated same-direction edges.

Vertices are the integers 1..n.  The pair (u, v) and its reverse (v, u)
are distinct edges and may both be present.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Digraph:
    """A loop-free digraph on vertices 1..n with at most one edge per direction."""

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be positive, got {self.n}")
        object.__setattr__(self, "edges", frozenset(self.edges))
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop edge ({u}, {v}) not allowed")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{self.n}")

    def out_neighbors(self) -> dict[int, set[int]]:
        """Map each vertex to the set of targets of its outgoing edges."""
        out: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            out[u].add(v)
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges


def parse_edge_list(text: str, n: int) -> Digraph:
    """Parse an edge-list text into a Digraph on vertices 1..n.

    Each non-empty line that does not start with '#' must hold two
    integers "u v" meaning a directed edge u -> v.  Errors carry the
    1-based line number.
    """
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    edges: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected two integers, got {line!r}") from None
        if u == v:
            raise ValueError(f"line {lineno}: loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"line {lineno}: vertex out of range 1..{n} in edge ({u}, {v})")
        if (u, v) in edges:
            raise ValueError(f"line {lineno}: duplicate edge ({u}, {v})")
        edges.add((u, v))
    return Digraph(n, frozenset(edges))


def serialize_edge_list(g: Digraph) -> str:
    """Inverse of parse_edge_list, one "u v" line per edge in sorted order."""
    return "\n".join(f"{u} {v}" for u, v in sorted(g.edges))


def complete_digraph(n: int) -> Digraph:
    """The digraph on 1..n with every ordered pair of distinct vertices as an edge."""
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    edges = frozenset((u, v) for u in range(1, n + 1) for v in range(1, n + 1) if u != v)
    return Digraph(n, edges)


def random_digraph(n: int, edge_prob: float, rng: random.Random) -> Digraph:
    """Seeded random digraph: each ordered pair kept independently with edge_prob."""
    edges = set()
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u != v and rng.random() < edge_prob:
                edges.add((u, v))
    return Digraph(n, frozenset(edges))
