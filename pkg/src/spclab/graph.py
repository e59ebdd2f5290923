"""Minimal undirected simple graph with optional vertex role names.

Vertices are dense integers ``0..num_vertices-1``. Symbolic names such as
``v0`` or ``v'3`` are presentation metadata stored in ``roles``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import InvalidEdge, InvalidVertex

Edge = tuple[int, int]


def _canonical(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph.

    ``edges`` is a sorted tuple of ``(min, max)`` pairs. Build instances with
    :func:`make_graph`, which validates and canonicalises the input.
    """

    num_vertices: int
    edges: tuple[Edge, ...]
    roles: Mapping[int, str] = field(default_factory=dict)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def role(self, v: int) -> str:
        return self.roles.get(v, str(v))

    def vertex(self, role: str) -> int:
        """Look up the vertex id carrying ``role``."""
        for v, name in self.roles.items():
            if name == role:
                return v
        raise InvalidVertex(f"no vertex with role {role!r}")

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return _canonical(u, v) in set(self.edges)


def validate(g: Graph) -> list[str]:
    """Return every simple-graph invariant violation of ``g`` (empty if none)."""
    problems = []
    if g.num_vertices < 0:
        problems.append(f"negative vertex count {g.num_vertices}")
    seen = set()
    for u, v in g.edges:
        if u == v:
            problems.append(f"self-loop at {u}")
        for x in (u, v):
            if not 0 <= x < g.num_vertices:
                problems.append(f"out-of-range endpoint {x} in edge ({u}, {v})")
        key = _canonical(u, v)
        if key in seen:
            problems.append(f"duplicate edge {key}")
        seen.add(key)
    names = list(g.roles.values())
    if len(set(names)) != len(names):
        dupes = sorted({n for n in names if names.count(n) > 1})
        problems.append(f"duplicate role names {dupes}")
    for v in g.roles:
        if not 0 <= v < g.num_vertices:
            problems.append(f"role attached to out-of-range vertex {v}")
    return problems


def make_graph(
    num_vertices: int,
    edges: Iterable[tuple[int, int]],
    roles: Mapping[int, str] | None = None,
) -> Graph:
    """Build a validated :class:`Graph`.

    Duplicate edges (in either orientation) collapse to one. Self-loops and
    out-of-range endpoints raise :class:`InvalidEdge`.
    """
    if num_vertices < 0:
        raise InvalidEdge(f"negative vertex count {num_vertices}")
    canon = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise InvalidEdge(f"self-loop at {u}")
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise InvalidEdge(f"edge ({u}, {v}) has an endpoint outside 0..{num_vertices - 1}")
        canon.add(_canonical(u, v))
    g = Graph(num_vertices, tuple(sorted(canon)), dict(roles or {}))
    problems = validate(g)
    if problems:
        raise InvalidEdge("; ".join(problems))
    return g


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.num_vertices:
        raise InvalidVertex(f"vertex {v} not in 0..{g.num_vertices - 1}")
    return sum(1 for e in g.edges if v in e)
