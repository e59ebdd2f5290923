"""JSON interchange for graphs, labelings and reports, plus Graphviz DOT export."""

from __future__ import annotations

import json
from pathlib import Path

from .graph import Graph, make_graph
from .labeling import POS, CordialityReport, SignedLabeling, induced_edge_sign


def graph_to_dict(g: Graph) -> dict:
    d = {"vertices": g.num_vertices, "edges": [list(e) for e in g.edges]}
    if g.roles:
        d["roles"] = {str(v): g.roles[v] for v in sorted(g.roles)}
    return d


def graph_from_dict(d: dict) -> Graph:
    roles = {int(k): v for k, v in d.get("roles", {}).items()}
    return make_graph(int(d["vertices"]), [tuple(e) for e in d["edges"]], roles)


def labeling_to_dict(lab: SignedLabeling) -> dict:
    return {"signs": list(lab.signs)}


def labeling_from_dict(d: dict) -> SignedLabeling:
    return SignedLabeling.of(d["signs"])


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def report_json(rep: CordialityReport) -> str:
    return dumps(rep.to_dict())


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(dumps(graph_to_dict(g)))


def read_graph(path) -> Graph:
    return graph_from_dict(json.loads(Path(path).read_text()))


def write_labeling(lab: SignedLabeling, path) -> None:
    Path(path).write_text(dumps(labeling_to_dict(lab)))


def read_labeling(path) -> SignedLabeling:
    return labeling_from_dict(json.loads(Path(path).read_text()))


def to_dot(g: Graph, lab: SignedLabeling | None = None, name: str = "G") -> str:
    """Render ``g`` as an undirected DOT graph.

    With a labeling, nodes show their sign and are filled by sign class, and
    edges are solid when the induced sign is +1 and dashed when it is -1.
    """
    if lab is not None and len(lab) != g.num_vertices:
        from .errors import LengthMismatch
        raise LengthMismatch(f"labeling has {len(lab)} signs for {g.num_vertices} vertices")
    out = [f'graph "{name}" {{', "  node [shape=circle, style=filled, fillcolor=white];"]
    for v in range(g.num_vertices):
        role = g.role(v)
        if lab is None:
            out.append(f'  {v} [label="{role}"];')
        else:
            cls = "pos" if lab[v] == POS else "neg"
            fill = "lightblue" if lab[v] == POS else "lightsalmon"
            text = "+1" if lab[v] == POS else "-1"
            out.append(f'  {v} [label="{role}\\n{text}", class="{cls}", fillcolor={fill}];')
    for u, v in g.edges:
        if lab is None:
            out.append(f"  {u} -- {v};")
        else:
            style = "solid" if induced_edge_sign(lab[u], lab[v]) == POS else "dashed"
            out.append(f"  {u} -- {v} [style={style}];")
    out.append("}")
    return "\n".join(out) + "\n"
