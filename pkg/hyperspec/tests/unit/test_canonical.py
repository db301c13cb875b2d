import itertools

import pytest

from hyperspec.services.canonical import are_isomorphic, canonical_form, rooted_subtree_codes
from hyperspec.services.constructions import hyperstar, t_supertree
from hyperspec.services.enumeration import enumerate_supertrees
from hyperspec.services.hypergraph_service import build, relabel
from hyperspec.services.lemmas import random_supertree
from hyperspec.tests.conftest import brute_force_isomorphic, networkx_isomorphic


def _shuffled(graph, rng):
    permutation = [int(v) for v in rng.permutation(graph.n)]
    return relabel(graph, permutation)


class TestCanonicalForm:
    """Тесты канонической формы"""

    def test_relabel_invariance(self, rng):
        for _ in range(20):
            k = int(rng.integers(2, 5))
            m = int(rng.integers(1, 7))
            g = random_supertree(m, k, rng)
            assert canonical_form(g) == canonical_form(_shuffled(g, rng))

    def test_star_and_path_differ(self, star_3_3, loose_path_3):
        assert canonical_form(star_3_3) != canonical_form(loose_path_3)
        assert not are_isomorphic(star_3_3, loose_path_3)

    def test_attachments_to_two_edge_star(self, star_2_3):
        on_center = build(3, 7, list(star_2_3.edges) + [[0, 5, 6]])
        on_leaf = build(3, 7, list(star_2_3.edges) + [[1, 5, 6]])
        on_other_leaf = build(3, 7, list(star_2_3.edges) + [[4, 5, 6]])
        assert not are_isomorphic(on_center, on_leaf)
        assert are_isomorphic(on_leaf, on_other_leaf)

    def test_single_vertex(self):
        assert canonical_form(build(3, 1, [])) == canonical_form(build(3, 1, []))

    def test_forms_are_ordered(self, star_3_3, loose_path_3):
        forms = sorted([canonical_form(star_3_3), canonical_form(loose_path_3)])
        assert forms[0] < forms[1]
        assert isinstance(forms[0].hex(), str)

    def test_full_independence_family_is_hyperstar(self):
        for m, k in [(3, 3), (4, 3), (3, 4)]:
            assert are_isomorphic(t_supertree(m=m, k=k, beta=m), hyperstar(m, k))

    def test_different_k_never_isomorphic(self):
        assert not are_isomorphic(build(2, 2, [[0, 1]]), build(3, 3, [[0, 1, 2]]))


class TestOracleAgreement:
    """Сверка с перебором и с networkx"""

    @pytest.mark.parametrize("m,k", [(3, 3), (5, 2)])
    def test_brute_force_pairs(self, m, k):
        classes = [c.host for c in enumerate_supertrees(m=m, k=k)]
        for first, second in itertools.combinations(classes, 2):
            assert not brute_force_isomorphic(first, second)
            assert not are_isomorphic(first, second)

    def test_brute_force_on_relabeled_copies(self, rng):
        for certificate in enumerate_supertrees(m=3, k=3):
            copy = _shuffled(certificate.host, rng)
            assert brute_force_isomorphic(certificate.host, copy)
            assert are_isomorphic(certificate.host, copy)

    def test_networkx_on_enumeration(self):
        classes = [c.host for c in enumerate_supertrees(m=5, k=3)]
        for first, second in itertools.combinations(classes, 2):
            assert networkx_isomorphic(first, second) == are_isomorphic(first, second)

    def test_general_hypergraphs_against_networkx(self, rng):
        triples = list(itertools.combinations(range(6), 3))
        graphs = []
        while len(graphs) < 25:
            picked = [triples[int(i)] for i in rng.choice(len(triples), size=4, replace=False)]
            if len({v for edge in picked for v in edge}) == 6:
                graphs.append(build(3, 6, picked))
        for first, second in itertools.combinations(graphs, 2):
            assert are_isomorphic(first, second) == networkx_isomorphic(first, second)


class TestGeneralPath:
    """Тесты гиперграфов с циклами"""

    def test_hexagon_versus_two_triangles(self):
        hexagon = build(2, 6, [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5], [5, 0]])
        triangles = build(2, 6, [[0, 1], [1, 2], [2, 0], [3, 4], [4, 5], [5, 3]])
        assert not are_isomorphic(hexagon, triangles)

    def test_relabeled_cycle(self, rng):
        cycle = build(3, 6, [[0, 1, 2], [2, 3, 4], [4, 5, 0]])
        assert are_isomorphic(cycle, _shuffled(cycle, rng))

    def test_tree_and_cycle_forms_differ(self):
        tree = build(3, 5, [[0, 1, 2], [2, 3, 4]])
        doubled = build(3, 4, [[0, 1, 2], [1, 2, 3]])
        assert canonical_form(tree).code[:1] == b"T"
        assert canonical_form(doubled).code[:1] == b"G"


def test_rooted_codes_match_symmetric_leaves(star_3_3):
    codes = rooted_subtree_codes(star_3_3, 0)
    assert len(codes) == star_3_3.n
    assert len({codes[v] for v in range(1, star_3_3.n)}) == 1
    assert codes[0] != codes[1]
