"""Constructors for the graph families and operators used by the labeling schemes.

Every constructor attaches role names that follow the usual textbook naming:
``v0`` for an apex or hub, ``v1..vn`` for rim or leaf vertices, a trailing
prime for duplicates and pendants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import BadParameter, SpecParseError
from .graph import Graph, make_graph


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise BadParameter(msg)


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)],
                      {i: f"v{i + 1}" for i in range(n)})


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)],
                      {i: f"v{i + 1}" for i in range(n)})


def star(n: int) -> Graph:
    """K_{1,n}: vertex 0 is the apex ``v0``, leaves ``v1..vn``."""
    _require(n >= 1, f"star needs n >= 1, got {n}")
    return make_graph(n + 1, [(0, i) for i in range(1, n + 1)],
                      {i: f"v{i}" for i in range(n + 1)})


def wheel(n: int) -> Graph:
    """Hub 0 (role ``hub``) joined to an n-cycle on ``1..n``."""
    _require(n >= 3, f"wheel needs n >= 3, got {n}")
    spokes = [(0, i) for i in range(1, n + 1)]
    rim = [(i, i % n + 1) for i in range(1, n + 1)]
    roles = {0: "hub"} | {i: f"v{i}" for i in range(1, n + 1)}
    return make_graph(n + 1, spokes + rim, roles)


def helm(n: int) -> Graph:
    """Wheel W_n with a pendant on each rim vertex.

    Layout: hub ``v0`` = 0, rim ``v1..vn`` = 1..n, pendant ``v'i`` = n+i.
    """
    _require(n >= 3, f"helm needs n >= 3, got {n}")
    w = wheel(n)
    pendants = [(i, n + i) for i in range(1, n + 1)]
    roles = {0: "v0"} | {i: f"v{i}" for i in range(1, n + 1)}
    roles |= {n + i: f"v'{i}" for i in range(1, n + 1)}
    return make_graph(2 * n + 1, list(w.edges) + pendants, roles)


def bull() -> Graph:
    """Triangle v2 v3 v4 with horns v1 and v5; ids 0..4 follow v1..v5."""
    return make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)],
                      {i: f"v{i + 1}" for i in range(5)})


def path_square(n: int) -> Graph:
    _require(n >= 3, f"path square needs n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(i, i + 2) for i in range(n - 2)]
    return make_graph(n, edges, {i: f"v{i + 1}" for i in range(n)})


def splitting_graph(g: Graph) -> Graph:
    """Add a twin v' for every vertex v, adjacent to exactly the neighbours of v.

    The twin of vertex ``i`` gets id ``|V| + i``. A vertex is never joined to
    its own twin, so the result has ``2|V|`` vertices and ``3|E|`` edges.
    """
    n = g.num_vertices
    edges = list(g.edges)
    for u, w in g.edges:
        edges.append((n + u, w))
        edges.append((u, n + w))
    names = [g.role(i) for i in range(n)]
    taken = set(names)
    mark = "'"
    # nested splitting: lengthen the mark until twin names are fresh
    while any(name + mark in taken for name in names):
        mark += "'"
    roles = dict(enumerate(names))
    roles |= {n + i: name + mark for i, name in enumerate(names)}
    return make_graph(2 * n, edges, roles)


_CORONA_NAMES = ("v", "w", "t")


def corona_empty(g: Graph, m: int) -> Graph:
    """Corona of ``g`` with m isolated vertices: m new pendants per vertex.

    Original vertex ``i`` keeps id ``i`` and becomes ``u{i+1}``. The j-th
    pendant of vertex i has id ``|V|*(j+1) + i``; for m <= 3 the pendants are
    named ``v``, ``w``, ``t`` in that order, otherwise ``p{j+1}_{i+1}``.
    """
    _require(m >= 1, f"corona needs m >= 1, got {m}")
    n = g.num_vertices
    edges = list(g.edges)
    roles = {i: f"u{i + 1}" for i in range(n)}
    for j in range(m):
        for i in range(n):
            p = n * (j + 1) + i
            edges.append((i, p))
            roles[p] = f"{_CORONA_NAMES[j]}{i + 1}" if m <= 3 else f"p{j + 1}_{i + 1}"
    return make_graph(n * (1 + m), edges, roles)


def helm_dumbbell(k: int) -> Graph:
    """Two copies of H_4 whose apexes are the ends of a path on k vertices.

    Ids 0..8 are the first helm (``v0``, rim ``v1..v4``, pendants ``v'1..v'4``),
    9..17 the second (``w0``, ``w1..w4``, ``w'1..w'4``) and 18.. the k-2 path
    interior vertices ``u2..u{k-1}``. The path ends coincide with the apexes.
    """
    _require(k >= 2, f"helm dumbbell needs k >= 2, got {k}")
    h = helm(4)
    edges = list(h.edges) + [(u + 9, v + 9) for u, v in h.edges]
    roles = {i: h.role(i) for i in range(9)}
    roles |= {i + 9: h.role(i).replace("v", "w") for i in range(9)}
    chain = [0] + [18 + j for j in range(k - 2)] + [9]
    edges += list(zip(chain, chain[1:]))
    roles |= {18 + j: f"u{j + 2}" for j in range(k - 2)}
    return make_graph(k + 16, edges, roles)


KINDS = ("Path", "Cycle", "Star", "Wheel", "Helm", "Bull", "PathSquare",
         "SplittingOf", "CoronaEmpty", "HelmDumbbell")


@dataclass(frozen=True)
class FamilySpec:
    """Declarative description of a family member, e.g. ``SplittingOf(Star(8))``."""

    kind: str
    params: tuple[int, ...] = ()
    inner: FamilySpec | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadParameter(f"unknown family kind {self.kind!r}")

    def __str__(self) -> str:
        return format_spec(self)


_BUILDERS = {
    "Path": path,
    "Cycle": cycle,
    "Star": star,
    "Wheel": wheel,
    "Helm": helm,
    "PathSquare": path_square,
    "HelmDumbbell": helm_dumbbell,
}


def build(spec: FamilySpec) -> Graph:
    if spec.kind == "Bull":
        _require(not spec.params, "bull takes no parameters")
        return bull()
    if spec.kind == "SplittingOf":
        _require(spec.inner is not None, "SplittingOf needs an inner spec")
        return splitting_graph(build(spec.inner))
    if spec.kind == "CoronaEmpty":
        _require(spec.inner is not None and len(spec.params) == 1,
                 "CoronaEmpty needs an inner spec and m")
        return corona_empty(build(spec.inner), spec.params[0])
    _require(len(spec.params) == 1, f"{spec.kind} takes exactly one parameter")
    return _BUILDERS[spec.kind](spec.params[0])


_TEXT_NAMES = {
    "path": "Path", "cycle": "Cycle", "star": "Star", "wheel": "Wheel",
    "helm": "Helm", "psquare": "PathSquare", "helmdumbbell": "HelmDumbbell",
}
_KIND_TEXT = {v: k for k, v in _TEXT_NAMES.items()}


def format_spec(spec: FamilySpec) -> str:
    if spec.kind == "Bull":
        return "bull"
    if spec.kind == "SplittingOf":
        return f"spltg({format_spec(spec.inner)})"
    if spec.kind == "CoronaEmpty":
        return f"corona({format_spec(spec.inner)},{spec.params[0]})"
    return f"{_KIND_TEXT[spec.kind]}:{spec.params[0]}"


def parse_spec(text: str) -> FamilySpec:
    """Parse the textual form, e.g. ``spltg(star:8)`` or ``corona(cycle:4,3)``."""
    s = text.replace(" ", "")
    spec, rest = _parse(s, 0)
    if rest != len(s):
        raise SpecParseError(f"trailing input in {text!r} at offset {rest}")
    return spec


_ATOM = re.compile(r"([a-z]+)(?::(\d+))?")


def _parse(s: str, pos: int) -> tuple[FamilySpec, int]:
    m = _ATOM.match(s, pos)
    if not m:
        raise SpecParseError(f"expected a family name at offset {pos} in {s!r}")
    name, num = m.group(1), m.group(2)
    pos = m.end()
    if name in ("spltg", "corona"):
        if num is not None or pos >= len(s) or s[pos] != "(":
            raise SpecParseError(f"{name} must be followed by '(' in {s!r}")
        inner, pos = _parse(s, pos + 1)
        params: tuple[int, ...] = ()
        if name == "corona":
            m2 = re.compile(r",(\d+)").match(s, pos)
            if not m2:
                raise SpecParseError(f"corona needs ',m' after the inner spec in {s!r}")
            params = (int(m2.group(1)),)
            pos = m2.end()
        if pos >= len(s) or s[pos] != ")":
            raise SpecParseError(f"missing ')' in {s!r}")
        kind = "SplittingOf" if name == "spltg" else "CoronaEmpty"
        return FamilySpec(kind, params, inner), pos + 1
    if name == "bull":
        if num is not None:
            raise SpecParseError("bull takes no parameter")
        return FamilySpec("Bull"), pos
    if name not in _TEXT_NAMES:
        raise SpecParseError(f"unknown family {name!r}")
    if num is None:
        raise SpecParseError(f"{name} needs a size, e.g. {name}:4")
    return FamilySpec(_TEXT_NAMES[name], (int(num),)), pos
