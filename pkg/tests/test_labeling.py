import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from spclab import (LengthMismatch, SignedLabeling, evaluate, induced_edge_sign,
                    make_graph, negate, spltg_bull_scheme)
from spclab import families as fam

from conftest import FAMILY_GRAPHS


@pytest.mark.parametrize("a,b,expected", [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)])
def test_induced_edge_sign(a, b, expected):
    assert induced_edge_sign(a, b) == expected


def test_evaluate_k2():
    rep = evaluate(fam.path(2), SignedLabeling.of([1, -1]))
    assert (rep.v_pos, rep.v_neg, rep.e_pos, rep.e_neg) == (1, 1, 0, 1)
    assert rep.is_spc


def test_evaluate_triangle_all_positive():
    rep = evaluate(fam.cycle(3), SignedLabeling.of([1, 1, 1]))
    assert (rep.v_pos, rep.v_neg, rep.e_pos, rep.e_neg) == (3, 0, 3, 0)
    assert rep.vertex_delta == -3 and rep.edge_delta == -3
    assert not rep.is_spc


def test_evaluate_bull_scheme():
    out = spltg_bull_scheme()
    rep = evaluate(out.graph, out.labeling)
    assert (rep.v_pos, rep.v_neg, rep.e_pos, rep.e_neg) == (5, 5, 8, 7)
    assert rep.is_spc


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        evaluate(fam.path(3), SignedLabeling.of([1, -1]))


def test_signs_restricted():
    with pytest.raises(ValueError):
        SignedLabeling.of([1, 0])


def test_negate():
    lab = SignedLabeling.of([1, -1])
    assert negate(lab).signs == (-1, 1)
    assert negate(negate(lab)) == lab


def test_mask_round_trip():
    lab = SignedLabeling.of([1, -1, -1, 1])
    assert lab.to_mask() == 0b1001
    assert SignedLabeling.from_mask(0b1001, 4) == lab


def test_report_dict():
    d = evaluate(fam.path(2), SignedLabeling.of([1, 1])).to_dict()
    assert d == {"v_pos": 2, "v_neg": 0, "e_pos": 1, "e_neg": 0,
                 "vertex_delta": -2, "edge_delta": -1, "is_spc": False}


def _check_laws(g, signs):
    lab = SignedLabeling.of(signs)
    rep, neg = evaluate(g, lab), evaluate(g, negate(lab))
    assert rep.v_pos + rep.v_neg == g.num_vertices
    assert rep.e_pos + rep.e_neg == g.num_edges
    assert (neg.e_pos, neg.e_neg) == (rep.e_pos, rep.e_neg)
    assert (neg.v_pos, neg.v_neg) == (rep.v_neg, rep.v_pos)
    assert neg.is_spc == rep.is_spc
    h = nx.Graph()
    h.add_nodes_from(range(g.num_vertices))
    h.add_edges_from(g.edges)
    positive = [v for v, s in enumerate(signs) if s == 1]
    assert rep.e_neg == nx.cut_size(h, positive) if positive else rep.e_neg == 0


@st.composite
def graph_and_signs(draw):
    n = draw(st.integers(1, 12))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    return make_graph(n, edges), signs


@given(graph_and_signs())
def test_laws_random_graphs(data):
    _check_laws(*data)


@pytest.mark.parametrize("name", sorted(FAMILY_GRAPHS))
def test_laws_family_graphs(name):
    g = FAMILY_GRAPHS[name]
    rng = np.random.default_rng(20240601)
    for row in rng.choice([1, -1], size=(50, g.num_vertices)):
        _check_laws(g, row.tolist())
