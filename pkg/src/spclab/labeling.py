"""Signed vertex labelings, induced edge signs and the cordiality verdict."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable

from .errors import LengthMismatch
from .graph import Graph

POS, NEG = 1, -1


def induced_edge_sign(a: int, b: int) -> int:
    return a * b


@dataclass(frozen=True)
class SignedLabeling:
    """One sign per vertex id, in id order."""

    signs: tuple[int, ...]

    def __post_init__(self):
        bad = [s for s in self.signs if s not in (POS, NEG)]
        if bad:
            raise ValueError(f"signs must be +1 or -1, got {bad[0]!r}")

    @classmethod
    def of(cls, signs: Iterable[int]) -> SignedLabeling:
        return cls(tuple(int(s) for s in signs))

    @classmethod
    def from_mask(cls, mask: int, n: int) -> SignedLabeling:
        """Bit i set means vertex i is +1."""
        return cls(tuple(POS if mask >> i & 1 else NEG for i in range(n)))

    def to_mask(self) -> int:
        return sum(1 << i for i, s in enumerate(self.signs) if s == POS)

    def __len__(self) -> int:
        return len(self.signs)

    def __getitem__(self, i: int) -> int:
        return self.signs[i]


def negate(lab: SignedLabeling) -> SignedLabeling:
    return SignedLabeling(tuple(-s for s in lab.signs))


@dataclass(frozen=True)
class CordialityReport:
    v_pos: int
    v_neg: int
    e_pos: int
    e_neg: int

    @property
    def vertex_delta(self) -> int:
        return self.v_neg - self.v_pos

    @property
    def edge_delta(self) -> int:
        return self.e_neg - self.e_pos

    @property
    def is_spc(self) -> bool:
        return abs(self.vertex_delta) <= 1 and abs(self.edge_delta) <= 1

    def to_dict(self) -> dict:
        d = asdict(self)
        d.update(vertex_delta=self.vertex_delta, edge_delta=self.edge_delta,
                 is_spc=self.is_spc)
        return d

    def summary(self) -> str:
        verdict = "SPC" if self.is_spc else "not SPC"
        return f"v {self.v_pos}/{self.v_neg}, e {self.e_pos}/{self.e_neg}, {verdict}"


def evaluate(g: Graph, lab: SignedLabeling) -> CordialityReport:
    if len(lab) != g.num_vertices:
        raise LengthMismatch(
            f"labeling has {len(lab)} signs but the graph has {g.num_vertices} vertices")
    signs = lab.signs
    v_pos = sum(1 for s in signs if s == POS)
    e_pos = sum(1 for u, v in g.edges if induced_edge_sign(signs[u], signs[v]) == POS)
    return CordialityReport(v_pos, g.num_vertices - v_pos, e_pos, g.num_edges - e_pos)


def format_report_table(rep: CordialityReport) -> str:
    """Aligned two-line table with the conventional count headers."""
    headers = ["v_α(1)", "v_α(-1)", "|Δv|", "e_α*(1)", "e_α*(-1)", "|Δe|", "verdict"]
    row = [rep.v_pos, rep.v_neg, abs(rep.vertex_delta), rep.e_pos, rep.e_neg,
           abs(rep.edge_delta), "SPC" if rep.is_spc else "not SPC"]
    widths = [max(len(h), len(str(c))) for h, c in zip(headers, row)]
    line = lambda cells: "  ".join(str(c).rjust(w) for c, w in zip(cells, widths))
    return line(headers) + "\n" + line(row)
