import random

import pytest

from srgbounds.graphs import (
    FANO_LINES,
    Graph,
    GraphSizeError,
    check_thm42,
    distance_graph,
    heawood_graph,
    heawood_line_distance3,
    is_edge_regular,
    is_strongly_regular,
    line_graph,
    max_clique,
    max_clique_bruteforce,
    paley,
)
from srgbounds.srg import EdgeRegularParams, SrgParams


def random_graph(n, p, rng):
    g = Graph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


class TestGraph:
    def test_edges_roundtrip(self):
        g = Graph(4, [(0, 1), (1, 2), (0, 3)])
        assert g.edges() == [(0, 1), (0, 3), (1, 2)]
        assert g.edge_count() == 3
        assert g.degree(0) == 2 and g.degree(2) == 1
        assert g.has_edge(1, 0) and not g.has_edge(2, 3)

    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])


class TestPaley:
    def test_paley5_is_pentagon(self):
        g = paley(5)
        assert g.edge_count() == 5
        assert is_strongly_regular(g) == SrgParams(5, 2, 0, 1)

    @pytest.mark.parametrize("p", [5, 13, 17, 29, 37, 41])
    def test_conference_parameters(self, p):
        srg = is_strongly_regular(paley(p))
        assert srg == SrgParams(p, (p - 1) // 2, (p - 5) // 4, (p - 1) // 4)

    def test_self_complementary(self):
        g = paley(13)
        comp = Graph(13)
        for u in range(13):
            for v in range(u + 1, 13):
                if not g.has_edge(u, v):
                    comp.add_edge(u, v)
        assert is_strongly_regular(comp) == SrgParams(13, 6, 2, 3)

    def test_nonprime_rejected(self):
        with pytest.raises(ValueError):
            paley(9)  # prime power, unsupported

    def test_wrong_residue_rejected(self):
        with pytest.raises(ValueError):
            paley(7)


class TestHeawoodFixture:
    def test_fano_lines_shape(self):
        assert len(FANO_LINES) == 7
        # every point on exactly 3 lines, every pair of lines meets once
        for pt in range(1, 8):
            assert sum(pt in line for line in FANO_LINES) == 3
        for i in range(7):
            for j in range(i + 1, 7):
                assert len(set(FANO_LINES[i]) & set(FANO_LINES[j])) == 1

    def test_heawood(self):
        g = heawood_graph()
        assert g.n == 14
        assert all(g.degree(u) == 3 for u in range(14))
        assert g.edge_count() == 21

    def test_line_graph_of_heawood(self):
        lg = line_graph(heawood_graph())
        assert lg.n == 21
        assert all(lg.degree(u) == 4 for u in range(21))

    def test_delta3_edge_regular_not_srg(self):
        g = heawood_line_distance3()
        assert g.n == 21
        assert is_edge_regular(g) == EdgeRegularParams(21, 8, 3)
        assert is_strongly_regular(g) is None

    def test_delta3_clique_number(self):
        g = heawood_line_distance3()
        assert max_clique(g).size == 3
        assert max_clique_bruteforce(g) == 3

    def test_check_thm42_on_fixture(self):
        g = heawood_line_distance3()
        assert check_thm42(g, EdgeRegularParams(21, 8, 3))
        with pytest.raises(ValueError):
            check_thm42(g, EdgeRegularParams(21, 8, 4))


class TestDistanceGraph:
    def test_distance1_is_identity(self):
        g = random_graph(10, 0.4, random.Random(1))
        assert distance_graph(g, 1) == g

    def test_path_distances(self):
        path = Graph(4, [(0, 1), (1, 2), (2, 3)])
        d2 = distance_graph(path, 2)
        assert set(d2.edges()) == {(0, 2), (1, 3)}
        d3 = distance_graph(path, 3)
        assert set(d3.edges()) == {(0, 3)}

    def test_bad_distance(self):
        with pytest.raises(ValueError):
            distance_graph(Graph(3), 0)


class TestRegularityChecks:
    def test_not_regular(self):
        assert is_edge_regular(Graph(3, [(0, 1)])) is None

    def test_complete_graph(self):
        g = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        assert is_edge_regular(g) == EdgeRegularParams(4, 3, 2)
        assert is_strongly_regular(g) is None  # complete graphs excluded

    def test_cycle5(self):
        c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert is_strongly_regular(c5) == SrgParams(5, 2, 0, 1)

    def test_petersen(self):
        # Kneser graph K(5,2)
        from itertools import combinations

        pairs = list(combinations(range(5), 2))
        g = Graph(10)
        for i in range(10):
            for j in range(i + 1, 10):
                if not set(pairs[i]) & set(pairs[j]):
                    g.add_edge(i, j)
        assert is_strongly_regular(g) == SrgParams(10, 3, 0, 1)
        assert max_clique(g).size == 2

    def test_edge_regular_but_mu_varies(self):
        g = heawood_line_distance3()
        assert is_edge_regular(g) is not None
        assert is_strongly_regular(g) is None


class TestMaxClique:
    def test_empty_and_trivial(self):
        assert max_clique(Graph(0)).size == 0
        assert max_clique(Graph(3)).size == 1

    def test_witness_is_clique(self):
        g = paley(17)
        res = max_clique(g)
        assert res.size == 3
        assert len(res.witness) == res.size
        for i, u in enumerate(res.witness):
            for v in res.witness[i + 1 :]:
                assert g.has_edge(u, v)

    def test_matches_bruteforce_random(self):
        rng = random.Random(23)
        for trial in range(40):
            n = rng.randint(1, 14)
            g = random_graph(n, rng.choice([0.2, 0.5, 0.8]), rng)
            assert max_clique(g).size == max_clique_bruteforce(g)

    def test_deterministic(self):
        g = paley(29)
        r1 = max_clique(g)
        r2 = max_clique(g)
        assert r1 == r2

    def test_size_limit(self):
        with pytest.raises(GraphSizeError):
            max_clique(Graph(513))

    def test_paley37(self):
        assert max_clique(paley(37)).size == 4
