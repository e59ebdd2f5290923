import itertools

import pytest

from spclab import families as fam


def family_graphs():
    """Every family and operator at a spread of small sizes, keyed by text form."""
    out = {}
    for n in range(1, 7):
        out[f"path:{n}"] = fam.path(n)
        out[f"star:{n}"] = fam.star(n)
        out[f"spltg(star:{n})"] = fam.splitting_graph(fam.star(n))
        out[f"spltg(path:{n})"] = fam.splitting_graph(fam.path(n))
    for n in range(3, 8):
        out[f"cycle:{n}"] = fam.cycle(n)
        out[f"wheel:{n}"] = fam.wheel(n)
        out[f"helm:{n}"] = fam.helm(n)
        out[f"psquare:{n}"] = fam.path_square(n)
        out[f"corona(cycle:{n},3)"] = fam.corona_empty(fam.cycle(n), 3)
        out[f"corona(cycle:{n},1)"] = fam.corona_empty(fam.cycle(n), 1)
        out[f"spltg(cycle:{n})"] = fam.splitting_graph(fam.cycle(n))
    out["bull"] = fam.bull()
    out["spltg(bull)"] = fam.splitting_graph(fam.bull())
    out["spltg(helm:4)"] = fam.splitting_graph(fam.helm(4))
    for k in range(2, 7):
        out[f"helmdumbbell:{k}"] = fam.helm_dumbbell(k)
    return out


FAMILY_GRAPHS = family_graphs()


def brute_force_spc_masks(g):
    """All SPC masks by plain itertools enumeration, no shared code with the library."""
    hits = []
    for signs in itertools.product((1, -1), repeat=g.num_vertices):
        vp = signs.count(1)
        ep = sum(1 for u, v in g.edges if signs[u] == signs[v])
        if abs(2 * vp - g.num_vertices) <= 1 and abs(2 * ep - len(g.edges)) <= 1:
            hits.append(sum(1 << i for i, s in enumerate(signs) if s == 1))
    return sorted(hits)


@pytest.fixture
def k2():
    return fam.path(2)


_ACCEPTANCE = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _ACCEPTANCE.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
