import json

import pytest

from spclab import LengthMismatch, SignedLabeling, bull, path_square_scheme, spltg_star_scheme
from spclab import interchange
from spclab.families import splitting_graph, star

from conftest import FAMILY_GRAPHS


@pytest.mark.parametrize("name", sorted(FAMILY_GRAPHS))
def test_graph_round_trip(name, tmp_path):
    g = FAMILY_GRAPHS[name]
    path = tmp_path / "g.json"
    interchange.write_graph(g, path)
    assert interchange.read_graph(path) == g


def test_graph_format():
    d = interchange.graph_to_dict(bull())
    assert d == {"vertices": 5, "edges": [[0, 1], [1, 2], [1, 3], [2, 3], [3, 4]],
                 "roles": {"0": "v1", "1": "v2", "2": "v3", "3": "v4", "4": "v5"}}
    assert interchange.graph_from_dict({"vertices": 2, "edges": [[1, 0]]}).edges == ((0, 1),)


def test_labeling_round_trip(tmp_path):
    lab = SignedLabeling.of([1, -1, -1])
    interchange.write_labeling(lab, tmp_path / "l.json")
    assert json.loads((tmp_path / "l.json").read_text()) == {"signs": [1, -1, -1]}
    assert interchange.read_labeling(tmp_path / "l.json") == lab


def test_dot_fig1():
    out = spltg_star_scheme(8)
    dot = interchange.to_dot(out.graph, out.labeling)
    assert dot.count("[label=") == 18
    assert dot.count(" -- ") == 24
    assert 'label="v0\'\\n-1"' in dot
    assert dot == interchange.to_dot(out.graph, out.labeling)


def test_dot_plain_bull():
    dot = interchange.to_dot(bull())
    assert dot.count("[label=") == 5
    assert "class=" not in dot and "style=dashed" not in dot


def test_dot_psquare_edge_styles():
    out = path_square_scheme(8)
    dot = interchange.to_dot(out.graph, out.labeling)
    assert dot.count("style=solid") == 6
    assert dot.count("style=dashed") == 7


def test_dot_length_mismatch():
    with pytest.raises(LengthMismatch):
        interchange.to_dot(splitting_graph(star(2)), SignedLabeling.of([1]))
