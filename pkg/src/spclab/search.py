"""Exhaustive search for signed product cordial labelings.

Two independent enumerators sit behind :func:`search_spc`:

* ``prune=True``: depth-first extension in vertex-id order, cutting a branch
  as soon as the unassigned vertices and edges can no longer bring both
  deltas back within 1.
* ``prune=False``: plain vectorised enumeration of every bitmask with numpy.

Labelings are bitmasks where bit ``i`` set means vertex ``i`` is +1. Global
negation maps SPC labelings to SPC labelings without fixed points, so with
``fix_first_vertex`` only masks with bit 0 set are visited and counts are
doubled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import BadParameter, TooLarge
from .graph import Graph
from .labeling import SignedLabeling, evaluate

MODES = ("exists", "count", "collect")
_CHUNK = 1 << 16


@dataclass(frozen=True)
class SearchOptions:
    mode: str = "exists"
    fix_first_vertex: bool | None = None
    max_vertices: int = 28
    prune: bool = True

    def __post_init__(self):
        if self.mode not in MODES:
            raise BadParameter(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.max_vertices < 1:
            raise BadParameter("max_vertices must be >= 1")

    @property
    def fixing(self) -> bool:
        if self.fix_first_vertex is None:
            return self.mode == "exists"
        return self.fix_first_vertex


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an exhaustive search.

    ``count`` is the exact number of SPC labelings over all 2^|V| labelings
    (None in ``exists`` mode). ``labelings`` holds every SPC labeling, sorted
    by mask, in ``collect`` mode. ``nodes_explored`` counts the labelings
    scored (vectorised route) or the partial labelings expanded (pruned
    route).
    """

    exists: bool
    witness: SignedLabeling | None
    count: int | None
    nodes_explored: int
    symmetry_factor: int
    labelings: tuple[SignedLabeling, ...] | None = None


def _dfs_masks(g: Graph, fix_first: bool, stats: list[int]) -> Iterator[int]:
    """Yield every SPC mask (bit 0 set if ``fix_first``) by pruned DFS."""
    n = g.num_vertices
    if n == 0:
        stats[0] += 1
        yield 0
        return
    back_mask = [0] * n
    back_len = [0] * n
    open_after = [0] * n  # edges with an endpoint beyond vertex i
    for u, v in g.edges:
        back_mask[v] |= 1 << u
        back_len[v] += 1
    for u, v in g.edges:
        for i in range(v):
            open_after[i] += 1

    def ok(i: int, vd: int, ed: int) -> bool:
        return abs(vd) - (n - i - 1) <= 1 and abs(ed) - open_after[i] <= 1

    # stack entries: (next vertex, mask, v_neg - v_pos, e_neg - e_pos)
    if fix_first:
        stack = [(1, 1, -1, 0)] if ok(0, -1, 0) else []
        stats[0] += 1
    else:
        stack = [(0, 0, 0, 0)]
    while stack:
        i, mask, vd, ed = stack.pop()
        if i == n:
            yield mask
            continue
        stats[0] += 1
        bm, bl = back_mask[i], back_len[i]
        pos_agree = (mask & bm).bit_count()
        # push -1 first so +1 is explored first
        neg_agree = bl - pos_agree
        ed_neg = ed + bl - 2 * neg_agree
        if ok(i, vd + 1, ed_neg):
            stack.append((i + 1, mask, vd + 1, ed_neg))
        ed_pos = ed + bl - 2 * pos_agree
        if ok(i, vd - 1, ed_pos):
            stack.append((i + 1, mask | 1 << i, vd - 1, ed_pos))


def _brute_masks(g: Graph, fix_first: bool, stats: list[int],
                 stop_at_first: bool) -> Iterator[int]:
    """Yield every SPC mask in ascending order by scoring all masks with numpy."""
    n = g.num_vertices
    if n == 0:
        stats[0] += 1
        yield 0
        return
    free = n - 1 if fix_first else n
    total = 1 << free
    shifts = np.arange(n, dtype=np.int64)
    eu = np.array([e[0] for e in g.edges], dtype=np.int64)
    ev = np.array([e[1] for e in g.edges], dtype=np.int64)
    m_edges = len(g.edges)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        masks = (idx << 1) | 1 if fix_first else idx
        bits = ((masks[:, None] >> shifts) & 1).astype(np.int8)
        v_pos = bits.sum(axis=1, dtype=np.int64)
        cut = (bits[:, eu] ^ bits[:, ev]).sum(axis=1, dtype=np.int64)
        vd = (n - v_pos) - v_pos
        ed = cut - (m_edges - cut)
        hits = masks[(np.abs(vd) <= 1) & (np.abs(ed) <= 1)]
        if stop_at_first and len(hits):
            stats[0] += int((hits[0] >> 1) - start + 1 if fix_first else hits[0] - start + 1)
            yield int(hits[0])
            return
        stats[0] += len(idx)
        for h in hits.tolist():
            yield h


def search_spc(g: Graph, opts: SearchOptions | None = None) -> SearchResult:
    """Exhaustively decide, count or collect the SPC labelings of ``g``."""
    opts = opts or SearchOptions()
    n = g.num_vertices
    if n > opts.max_vertices:
        raise TooLarge(f"{n} vertices exceeds the search cap of {opts.max_vertices}")
    fix = opts.fixing and n > 0
    factor = 2 if fix else 1
    stats = [0]
    if opts.prune:
        masks = _dfs_masks(g, fix, stats)
    else:
        masks = _brute_masks(g, fix, stats, opts.mode == "exists")

    if opts.mode == "exists":
        first = next(masks, None)
        masks.close()
        witness = None if first is None else SignedLabeling.from_mask(first, n)
        return SearchResult(first is not None, witness, None, stats[0], factor)

    found = sorted(masks) if opts.mode == "collect" else None
    count = len(found) if found is not None else sum(1 for _ in masks)
    count *= factor
    witness = None
    labelings = None
    if found is not None:
        full = set(found)
        if fix:
            everything = (1 << n) - 1
            full |= {m ^ everything for m in found}
        labelings = tuple(SignedLabeling.from_mask(m, n) for m in sorted(full))
        witness = SignedLabeling.from_mask(found[0], n) if found else None
    return SearchResult(count > 0, witness, count, stats[0], factor, labelings)


def count_spc(g: Graph, *, fix_first_vertex: bool = False, prune: bool = True) -> int:
    return search_spc(g, SearchOptions("count", fix_first_vertex, prune=prune)).count


@dataclass(frozen=True)
class AgreementReport:
    scheme_is_spc: bool
    found_among_enumerated: bool
    oracle_exists: bool
    oracle_count: int
    agreement: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def verify_scheme_against_oracle(s, max_vertices: int = 28) -> AgreementReport:
    """Cross-check a :class:`~spclab.schemes.SchemeOutput` with full enumeration.

    Agreement means the scheme labeling is among the enumerated SPC labelings
    exactly when its own report says SPC, and an SPC scheme is never paired
    with an oracle verdict of non-existence.
    """
    g = s.graph
    res = search_spc(g, SearchOptions("collect", True, max_vertices=max_vertices))
    found = s.labeling in set(res.labelings)
    # the report is recomputed so a stale or forged report is also caught
    is_spc = evaluate(g, s.labeling).is_spc and s.report.is_spc
    agree = found == is_spc and (res.exists or not is_spc)
    return AgreementReport(is_spc, found, res.exists, res.count, agree)
