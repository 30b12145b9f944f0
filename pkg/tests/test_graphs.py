import pytest

from matlevel import graphs as gr
from matlevel import matroid as mt
from matlevel.errors import ParseError, SizeLimit


class TestGraphicMatroid:
    def test_k4(self):
        m = gr.graphic_matroid(gr.complete_graph(4))
        assert mt.is_isomorphic(m, mt.catalog("MK4")) is not None

    def test_cycle_is_uniform(self):
        for n in (3, 4, 5):
            assert gr.graphic_matroid(gr.cycle_graph(n)) == mt.uniform(n, n - 1)

    def test_running_example_graph(self):
        # triangle on edges 0,1,2 plus edge 3 parallel to edge 2
        g = gr.graph(3, [(0, 1), (1, 2), (0, 2), (0, 2)])
        assert gr.graphic_matroid(g) == mt.running_example()

    def test_disconnected_graph_forest(self):
        g = gr.graph(4, [(0, 1), (2, 3)])
        m = gr.graphic_matroid(g)
        assert m.rank == 2 and len(m.bases) == 1


class TestCone:
    def test_cone_c3_is_k4(self):
        m = gr.graphic_matroid(gr.cone(gr.cycle_graph(3)))
        assert mt.is_isomorphic(m, mt.catalog("MK4")) is not None

    def test_cone_c4_is_w4(self):
        m = gr.graphic_matroid(gr.cone(gr.cycle_graph(4)))
        assert mt.is_isomorphic(m, mt.catalog("wheel(4)")) is not None

    def test_cone_point(self):
        g = gr.cone(gr.graph(1, []))
        assert g.vertex_count == 2 and g.edge_count == 1


class TestBiconnectivity:
    def test_cycle_minimal(self):
        assert gr.is_minimally_biconnected(gr.cycle_graph(5))

    def test_k4_not_minimal(self):
        g = gr.complete_graph(4)
        assert gr.is_biconnected(g) and not gr.is_minimally_biconnected(g)

    def test_k23_minimal(self):
        assert gr.is_minimally_biconnected(gr.complete_bipartite_graph(2, 3))

    def test_path_not_biconnected(self):
        assert not gr.is_biconnected(gr.path_graph(4))


class TestMinimallyBiconnectedEnumeration:
    def test_k3(self):
        gs = gr.minimally_biconnected_graphs(3)
        assert len(gs) == 1 and gs[0].edge_count == 3

    def test_k4_only_cycle(self):
        gs = gr.minimally_biconnected_graphs(4)
        assert len(gs) == 1 and gs[0].edge_count == 4

    def test_k5_two_graphs(self):
        gs = gr.minimally_biconnected_graphs(5)
        counts = sorted(g.edge_count for g in gs)
        assert counts == [5, 6]  # C5 and K_{2,3}

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            gr.minimally_biconnected_graphs(8)


class TestSeriesParallel:
    def test_k4_not(self):
        assert not gr.is_series_parallel(gr.complete_graph(4))

    def test_cycle_is(self):
        assert gr.is_series_parallel(gr.cycle_graph(5))

    def test_w4_not(self):
        assert not gr.is_series_parallel(gr.cone(gr.cycle_graph(4)))


class TestEdgeListFormat:
    def test_round_trip(self):
        g = gr.complete_graph(4)
        assert gr.parse_edge_list(gr.format_edge_list(g)) == g

    def test_parse_error(self):
        with pytest.raises(ParseError):
            gr.parse_edge_list("not a graph")

    def test_edge_index_is_element(self):
        g = gr.parse_edge_list("3 3\n0 1\n1 2\n0 2")
        m = gr.graphic_matroid(g)
        assert m == mt.uniform(3, 2)


class TestApexFlacet:
    def test_wheel_rim_levelness_matches_degree(self):
        # cone over H: the edge set of H is a flacet with deg(apex) values
        from matlevel import geometry as ge

        for n in (3, 4, 5):
            h = gr.cycle_graph(n)
            m = gr.graphic_matroid(gr.cone(h))
            rim = tuple(range(n))
            fs = [f for f in ge.flacets(m) if f.subset == rim]
            assert len(fs) == 1 and fs[0].levelness == n


def test_whitney_two_isomorphic_gluings():
    # the same blocks glued at different vertices give isomorphic matroids
    tri_a = gr.graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    tri_b = gr.graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
    ma = gr.graphic_matroid(tri_a)
    mb = gr.graphic_matroid(tri_b)
    assert mt.is_isomorphic(ma, mb) is not None
