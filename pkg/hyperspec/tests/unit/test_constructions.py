import pytest

from hyperspec.exceptions import BadParamsError, BetaOutOfRangeError, InfeasibleSequenceError, MuOutOfRangeError
from hyperspec.schemas import FamilyParams
from hyperspec.services.bfs_ordering import check_bfs_ordering
from hyperspec.services.combinatorics import independence_number, matching_number
from hyperspec.services.constructions import (
    beta_range,
    bfs_layer_plan,
    bfs_supertree,
    h_supertree,
    hyperstar,
    mu_range,
    t_supertree,
)


def partitions(total, largest=None):
    """Разбиения числа total на невозрастающие части"""
    largest = total if largest is None else largest
    if total == 0:
        yield []
        return
    for part in range(min(total, largest), 0, -1):
        for rest in partitions(total - part, part):
            yield [part] + rest


def sequence_from_partition(parts, m, k):
    n = m * (k - 1) + 1
    return [p + 1 for p in parts] + [1] * (n - len(parts))


class TestRanges:
    """Тесты допустимых диапазонов параметров"""

    def test_beta_range(self):
        assert beta_range(4, 3) == (3, 4)
        assert beta_range(8, 3) == (6, 8)
        assert beta_range(1, 2) == (1, 1)

    def test_mu_range(self):
        assert mu_range(4, 3) == (1, 3)
        assert mu_range(12, 3) == (1, 8)
        assert mu_range(7, 4) == (1, 5)


class TestHyperstar:
    """Тесты гиперзвезды"""

    def test_shape(self):
        star = hyperstar(3, 3)
        assert star.edges == ((0, 1, 2), (0, 3, 4), (0, 5, 6))
        assert star.host.degrees[0] == 3

    def test_single_edge(self):
        assert hyperstar(1, 3).edges == ((0, 1, 2),)

    def test_bad_params(self):
        with pytest.raises(BadParamsError):
            hyperstar(0, 3)


class TestIndependenceFamily:
    """Тесты семейства T_{m,k,beta}"""

    def test_t_8_3_6(self):
        t = t_supertree(m=8, k=3, beta=6)
        assert (t.m, t.n) == (8, 17)
        assert sorted(t.host.degrees, reverse=True)[:5] == [4, 2, 2, 2, 2]
        assert independence_number(t).beta == 6

    def test_t_5_4_4(self):
        t = t_supertree(FamilyParams(m=5, k=4, beta=4))
        assert (t.m, t.n) == (5, 16)
        assert independence_number(t).beta == 4

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_beta_round_trip(self, k):
        for m in range(1, 9):
            low, high = beta_range(m, k)
            for beta in range(low, high + 1):
                t = t_supertree(m=m, k=k, beta=beta)
                assert t.m == m
                assert independence_number(t).beta == beta

    def test_out_of_range(self):
        with pytest.raises(BetaOutOfRangeError):
            t_supertree(m=4, k=3, beta=2)
        with pytest.raises(BetaOutOfRangeError):
            t_supertree(m=4, k=3, beta=5)

    def test_missing_beta(self):
        with pytest.raises(BetaOutOfRangeError):
            t_supertree(m=4, k=3)

    def test_invalid_shape(self):
        with pytest.raises(BadParamsError):
            t_supertree(m=0, k=3, beta=1)


class TestMatchingFamily:
    """Тесты семейства H_{m,k,mu}"""

    def test_h_12_3_8(self):
        h = h_supertree(m=12, k=3, mu=8)
        assert (h.m, h.n) == (12, 25)
        assert h.host.degrees[0] == 5
        assert matching_number(h).mu == 8

    def test_h_7_4_5(self):
        h = h_supertree(m=7, k=4, mu=5)
        assert h.host.degrees[0] == 3
        assert matching_number(h).mu == 5

    def test_mu_one_is_hyperstar(self):
        assert h_supertree(m=4, k=3, mu=1).edges == hyperstar(4, 3).edges

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_mu_round_trip(self, k):
        for m in range(1, 9):
            low, high = mu_range(m, k)
            for mu in range(low, high + 1):
                h = h_supertree(m=m, k=k, mu=mu)
                assert h.m == m
                assert matching_number(h).mu == mu

    def test_out_of_range(self):
        with pytest.raises(MuOutOfRangeError):
            h_supertree(m=4, k=3, mu=4)
        with pytest.raises(MuOutOfRangeError):
            h_supertree(m=4, k=3, mu=0)


class TestBfsSupertree:
    """Тесты BFS-супердерева G_pi"""

    def test_small_example(self):
        g = bfs_supertree(3, [2, 2, 1, 1, 1, 1, 1])
        assert g.edges == ((0, 1, 2), (0, 3, 4), (1, 5, 6))

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_degree_round_trip(self, k):
        for m in range(1, 7):
            for parts in partitions(m - 1):
                pi = sequence_from_partition(parts, m, k)
                g = bfs_supertree(k, pi)
                assert sorted(g.host.degrees, reverse=True) == pi
                # Vertex ids follow the construction order.
                assert list(g.host.degrees) == pi
                assert check_bfs_ordering(g, range(g.n)).holds

    def test_infeasible(self):
        with pytest.raises(InfeasibleSequenceError):
            bfs_supertree(3, [2, 1, 1, 1])
        with pytest.raises(InfeasibleSequenceError):
            bfs_supertree(3, [2, 2, 1, 1, 1])


class TestLayerPlan:
    """Тесты послойного учёта"""

    def test_small_example(self):
        plan = bfs_layer_plan(3, [2, 2, 1, 1, 1, 1, 1])
        assert [(r.edges_in, r.vertex_count, r.degree_sum) for r in plan.layers] == [(0, 1, 2), (2, 4, 5), (1, 2, 2)]
        assert plan.labels[0] == (0, 1, 1)
        assert plan.labels[4] == (1, 2, 2)
        assert plan.labels[6] == (2, 1, 2)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_recurrence(self, k):
        for m in range(1, 7):
            for parts in partitions(m - 1):
                plan = bfs_layer_plan(k, sequence_from_partition(parts, m, k))
                layers = plan.layers
                assert layers[0].vertex_count == 1
                assert layers[1].edges_in == layers[0].degree_sum
                for previous, current in zip(layers[1:], layers[2:]):
                    assert current.edges_in == previous.degree_sum - previous.vertex_count
                for record in layers[1:]:
                    assert record.vertex_count == (k - 1) * record.edges_in
                assert sum(r.edges_in for r in layers) == m
