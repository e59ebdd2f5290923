from fractions import Fraction

import pytest

from spclab import (BadParameter, UnknownVariant, corona_scheme, evaluate,
                    helm_dumbbell_scheme, path_square_scheme, run_scheme, spltg_bull_scheme,
                    spltg_star_scheme)
from spclab.schemes import SchemeId, bull_base_signs


def counts(rep):
    return rep.v_pos, rep.v_neg, rep.e_pos, rep.e_neg


def test_star_n8():
    out = spltg_star_scheme(8)
    assert counts(out.report) == (9, 9, 12, 12) and out.report.is_spc
    assert out.expected.matches(out.report) and out.printed_agrees


def test_star_n7_orientation():
    out = spltg_star_scheme(7)
    r = out.report
    assert (r.v_pos, r.v_neg) == (8, 8)
    assert sorted((r.e_pos, r.e_neg)) == [10, 11]
    # on the twin-based splitting graph the positive count is the smaller one
    assert (r.e_pos, r.e_neg) == (10, 11)
    assert out.expected.matches(r)
    assert out.printed_agrees is False


def test_star_n1():
    r = spltg_star_scheme(1).report
    assert (r.v_pos + r.v_neg, r.e_pos + r.e_neg) == (4, 3)
    assert r.vertex_delta == 0 and abs(r.edge_delta) <= 1


def test_star_labels():
    lab = spltg_star_scheme(4).labeling.signs
    assert lab[:5] == (1, 1, -1, 1, -1)
    assert lab[5:] == tuple(-s for s in lab[:5])


@pytest.mark.parametrize("n", range(1, 51))
def test_star_range(n):
    r = spltg_star_scheme(n).report
    assert r.vertex_delta == 0 and abs(r.edge_delta) <= 1
    if n % 2 == 0:
        assert r.e_pos == r.e_neg == 3 * n // 2


def test_bull_labels_and_counts():
    assert bull_base_signs() == [-1, 1, -1, 1, 1]
    out = spltg_bull_scheme()
    assert out.labeling.signs[5:] == (1, -1, 1, -1, -1)
    assert counts(out.report) == (5, 5, 8, 7)
    assert out.report.is_spc and out.printed_agrees


def test_psquare_examples():
    r8 = path_square_scheme(8).report
    assert (r8.e_pos, r8.e_neg) == (6, 7)
    r3 = path_square_scheme(3)
    assert r3.labeling.signs == (1, -1, 1)
    assert counts(r3.report) == (2, 1, 1, 2) and r3.report.is_spc
    r9 = path_square_scheme(9).report
    assert (r9.v_pos, r9.v_neg) == (5, 4)
    with pytest.raises(BadParameter):
        path_square_scheme(2)


@pytest.mark.parametrize("n", range(3, 201))
def test_psquare_range(n):
    out = path_square_scheme(n)
    r = out.report
    assert (r.e_pos, r.e_neg) == (n - 2, n - 1)
    assert r.vertex_delta == (0 if n % 2 == 0 else -1)
    assert out.printed_agrees
    lab = out.labeling.signs
    for u, v in out.graph.edges:
        assert lab[u] * lab[v] == (-1 if v - u == 1 else 1)


def test_corona_examples():
    out = corona_scheme(4)
    assert counts(out.report) == (8, 8, 8, 8) and out.report.is_spc
    assert counts(corona_scheme(3).report) == (6, 6, 6, 6)
    assert out.expected.source == "derived"
    assert out.printed.v_pos == Fraction(2) and out.printed_agrees is False
    with pytest.raises(BadParameter):
        corona_scheme(2)


@pytest.mark.parametrize("n", range(3, 51))
def test_corona_range(n):
    out = corona_scheme(n)
    assert counts(out.report) == (2 * n,) * 4
    lab = out.labeling.signs
    for u, v in out.graph.edges:
        if u < n and v < n:
            assert lab[u] == lab[v] == 1


@pytest.mark.parametrize("variant", ["literal", "endpoints-positive"])
@pytest.mark.parametrize("k", range(2, 8))
def test_helm_dumbbell_variants(k, variant):
    out = helm_dumbbell_scheme(k, variant)
    g, r = out.graph, out.report
    assert (g.num_vertices, g.num_edges) == (k + 16, k + 23)
    assert (r.v_pos + r.v_neg, r.e_pos + r.e_neg) == (k + 16, k + 23)
    assert r == evaluate(g, out.labeling)
    lab = out.labeling.signs
    assert lab[g.vertex("v0")] == 1
    assert lab[g.vertex("w0")] == (1 if variant == "endpoints-positive" else -1)
    assert all(lab[g.vertex(f"v'{i}")] == -1 for i in range(1, 5))
    assert all(lab[g.vertex(f"w'{i}")] == 1 for i in range(1, 5))
    for i in range(2, k):
        assert lab[g.vertex(f"u{i}")] == (1 if i % 2 == 0 else -1)


def test_helm_dumbbell_literal_k5_counts():
    # first helm: 8 internal edges +1, 4 pendant edges -1; second helm the same;
    # path v0(+) u2(+) u3(-) u4(+) w0(-) gives +1, -1, -1, -1
    r = helm_dumbbell_scheme(5, "literal").report
    assert (r.e_pos, r.e_neg) == (17, 11)
    assert not r.is_spc


def test_helm_dumbbell_errors():
    with pytest.raises(UnknownVariant):
        helm_dumbbell_scheme(5, "guess")
    with pytest.raises(BadParameter):
        helm_dumbbell_scheme(1)


def test_run_scheme_dispatch():
    assert run_scheme("spltg-star:8").report.is_spc
    assert run_scheme("spltg-bull").report.is_spc
    assert run_scheme(SchemeId("helm-dumbbell", 3), "endpoints-positive").variant == "endpoints-positive"
    with pytest.raises(BadParameter):
        run_scheme("psquare")
    with pytest.raises(BadParameter):
        run_scheme("nope:3")
    with pytest.raises(UnknownVariant):
        run_scheme("psquare:4", "literal")
