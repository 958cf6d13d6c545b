import pytest
from hypothesis import given, settings

from biclique_lab.bicliques import enumerate_bicliques
from biclique_lab.distances import (
    biclique_distance,
    distance_reports,
    find_witnesses,
    link_companions,
    verify_distance_formula,
)
from biclique_lab.graphs import GraphError, enumerate_connected_graphs, path_graph

from oracles import biclique_distance_oracle
from strategies import connected_graphs


@pytest.fixture(scope="module")
def p6():
    g = path_graph(6)
    return g, enumerate_bicliques(g)


@pytest.fixture(scope="module")
def p8():
    g = path_graph(8)
    return g, enumerate_bicliques(g)


class TestBicliqueDistance:
    def test_intersecting_pair_zero(self, p6):
        g, fam = p6  # {0,1,2} and {1,2,3}
        assert biclique_distance(g, fam, 0, 1) == 0

    def test_p6_opposite_ends(self, p6):
        g, fam = p6  # {0,1,2} and {3,4,5}
        assert biclique_distance(g, fam, 0, 3) == 1

    def test_p8_distance_three(self, p8):
        g, fam = p8  # {0,1,2} and {5,6,7}
        assert biclique_distance(g, fam, 0, 5) == 3

    def test_index_out_of_range(self, p6):
        g, fam = p6
        with pytest.raises(GraphError):
            biclique_distance(g, fam, 0, 99)

    @settings(max_examples=40)
    @given(connected_graphs(max_order=6))
    def test_matches_pairwise_oracle_and_symmetry(self, g):
        fam = enumerate_bicliques(g)
        for i in range(len(fam)):
            for j in range(i, len(fam)):
                d = biclique_distance(g, fam, i, j)
                assert d == biclique_distance(g, fam, j, i)
                if i != j:
                    assert d == biclique_distance_oracle(g, fam, i, j)
                else:
                    assert d == 0


class TestDistanceFormula:
    def test_p6_pair_formula(self, p6):
        reports = {(r.i, r.j): r for r in distance_reports(path_graph(6))}
        r = reports[(0, 3)]
        assert (r.d_g, r.formula_value, r.d_kb) == (1, 2, 2)

    def test_p8_pair_formula(self):
        reports = {(r.i, r.j): r for r in distance_reports(path_graph(8))}
        r = reports[(0, 5)]
        assert (r.d_g, r.formula_value, r.d_kb) == (3, 3, 3)

    def test_intersecting_pairs_adjacent_in_kb(self):
        for r in distance_reports(path_graph(6)):
            if r.d_g == 0:
                assert r.d_kb == 1 == r.formula_value

    def test_closest_pair_realises_distance(self, p8):
        from biclique_lab.graphs import distance as vertex_distance

        g, fam = p8
        for r in distance_reports(g):
            b, b_prime = r.closest_pair
            assert b in fam[r.i] and b_prime in fam[r.j]
            assert vertex_distance(g, b, b_prime) == r.d_g

    def test_small_corpus_exact(self):
        for n in range(2, 6):
            for g in enumerate_connected_graphs(n):
                verify_distance_formula(g)


class TestWitnesses:
    def test_p6_witnesses(self, p6):
        g, fam = p6
        ws = find_witnesses(g, fam, 0, 3)
        assert ws.k == 1
        assert {fam[w].vertices for w in ws.witnesses} == {(1, 2, 3), (2, 3, 4)}
        for w in ws.witnesses:
            assert ws.distances[w] == (0, 0)

    def test_p8_witnesses(self, p8):
        g, fam = p8
        ws = find_witnesses(g, fam, 0, 5)
        assert ws.k == 3
        assert {fam[w].vertices for w in ws.witnesses} == {
            (1, 2, 3),
            (2, 3, 4),
            (3, 4, 5),
            (4, 5, 6),
        }
        assert len(ws.witnesses) >= ws.k + 1

    def test_intersecting_pair_rejected(self, p6):
        g, fam = p6
        with pytest.raises(GraphError):
            find_witnesses(g, fam, 0, 1)

    @settings(max_examples=40)
    @given(connected_graphs(max_order=6))
    def test_witness_bound_random(self, g):
        fam = enumerate_bicliques(g)
        for i in range(len(fam)):
            for j in range(i + 1, len(fam)):
                k = biclique_distance(g, fam, i, j)
                if k == 0:
                    continue
                ws = find_witnesses(g, fam, i, j)
                assert len(ws.witnesses) >= k + 1
                for w in ws.witnesses:
                    assert max(ws.distances[w]) <= k - 1


class TestLinkCompanions:
    def test_p6_bridge(self, p6):
        g, fam = p6
        rows = link_companions(g, fam, 0, 3)
        assert rows  # the edge 2-3 links the end bicliques
        for (u, v), b1, companions in rows:
            assert u in fam[0] and v in fam[3]
            assert u in fam[b1] and v in fam[b1]
            assert companions  # some fourth biclique meets all three

    def test_requires_disjoint_pair(self, p6):
        g, fam = p6
        with pytest.raises(GraphError):
            link_companions(g, fam, 0, 1)

    @settings(max_examples=40)
    @given(connected_graphs(max_order=6))
    def test_companion_exists_for_every_touching_pair(self, g):
        fam = enumerate_bicliques(g)
        for i in range(len(fam)):
            for j in range(i + 1, len(fam)):
                if fam[i].mask & fam[j].mask:
                    continue
                if biclique_distance(g, fam, i, j) != 1:
                    continue
                for (u, v), b1, companions in link_companions(g, fam, i, j):
                    assert b1 not in (i, j)
                    assert companions
