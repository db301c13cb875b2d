import itertools
import logging

import networkx as nx
import numpy as np
import pytest

from hyperspec.cli import main
from hyperspec.core.config import settings
from hyperspec.schemas import SolverOptions
from hyperspec.services.constructions import hyperstar
from hyperspec.services.hypergraph_service import build


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size acceptance runs (deselect with -m 'not slow')")


@pytest.fixture
def single_edge():
    """Одно ребро, k = 3"""
    return build(3, 3, [[0, 1, 2]])


@pytest.fixture
def star_2_3():
    return hyperstar(2, 3).host


@pytest.fixture
def star_3_3():
    return hyperstar(3, 3).host


@pytest.fixture
def loose_path_3():
    """Свободный путь из трёх рёбер, k = 3"""
    return build(3, 7, [[0, 1, 2], [2, 3, 4], [4, 5, 6]])


@pytest.fixture
def solver_opts():
    return SolverOptions(tolerance=1e-10, max_iterations=200_000)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def cli(capsys):
    """Запуск CLI в процессе: возвращает (код, stdout, stderr)"""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level

    def run(*argv):
        code = main([str(arg) for arg in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    yield run
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def guard(monkeypatch):
    """Позволяет тесту менять HYPERSPEC_GUARD"""
    def set_guard(value):
        monkeypatch.setattr(settings, "HYPERSPEC_GUARD", value)
    return set_guard


def incidence_graph(graph):
    """Двудольный граф инцидентности для сверки изоморфизма через networkx"""
    bipartite = nx.Graph()
    bipartite.add_nodes_from((("v", v) for v in range(graph.n)), kind="vertex")
    bipartite.add_nodes_from((("e", i) for i in range(graph.m)), kind="edge")
    for i, edge in enumerate(graph.edges):
        bipartite.add_edges_from((("e", i), ("v", v)) for v in edge)
    return bipartite


def networkx_isomorphic(first, second):
    return nx.is_isomorphic(
        incidence_graph(first), incidence_graph(second),
        node_match=lambda a, b: a["kind"] == b["kind"],
    )


def brute_force_isomorphic(first, second):
    """Перебор всех перестановок вершин (только для n <= 8)"""
    if (first.k, first.n, first.m) != (second.k, second.n, second.m):
        return False
    target = second.edge_set
    for permutation in itertools.permutations(range(first.n)):
        mapped = {tuple(sorted(permutation[v] for v in edge)) for edge in first.edges}
        if mapped == target:
            return True
    return False
