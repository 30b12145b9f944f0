import random

import pytest

from matlevel import enumeration as en
from matlevel import geometry as ge
from matlevel import graphs as gr
from matlevel import matroid as mt
from matlevel.errors import SizeLimit

from conftest import random_linear_matroid


class TestHasMinor:
    def test_self_minor(self):
        m = mt.catalog("MK4")
        w = en.has_minor(m, m)
        assert w is not None and not w.deleted and not w.contracted

    def test_uniform_chain(self):
        assert en.has_minor(mt.uniform(5, 2), mt.uniform(4, 2)) is not None
        assert en.has_minor(mt.uniform(5, 2), mt.uniform(3, 1)) is not None

    def test_witness_reconstructs(self):
        rng = random.Random(9)
        hits = 0
        for _ in range(20):
            m = random_linear_matroid(rng, 6, rng.randint(2, 4))
            n = mt.uniform(3, 2)
            w = en.has_minor(m, n)
            if w is None:
                continue
            cand = mt.minor(m, w.deleted, w.contracted)
            assert mt.is_isomorphic(cand, n) is not None
            hits += 1
        assert hits >= 5

    def test_too_large_target(self):
        assert en.has_minor(mt.uniform(3, 2), mt.uniform(4, 2)) is None

    def test_wheel_has_mk4(self):
        m = mt.catalog("wheel(4)")
        assert en.has_minor(m, mt.catalog("MK4")) is not None
        assert en.has_minor(m, mt.catalog("Q6")) is None


class TestEnumeration:
    def test_counts_n_le_5(self):
        # isomorphism classes by ground set size: 1,2,4,8,17,38
        expect = {1: 2, 2: 4, 3: 8, 4: 17, 5: 38}
        for n, total in expect.items():
            assert len(en.enumerate_all_matroids(n)) == total

    def test_count_n6(self):
        assert len(en.enumerate_all_matroids(6)) == 98

    def test_rank3_on_6(self):
        assert len(en.enumerate_matroids(6, 3)) == 38

    def test_labeled_vs_classes(self):
        labeled = en.enumerate_matroids(4, 2, labeled=True)
        classes = en.enumerate_matroids(4, 2)
        assert len(labeled) > len(classes)
        canon = {mt.canonical_form(m) for m in labeled}
        assert len(canon) == len(classes)

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            en.enumerate_matroids(7, 3)

    def test_all_valid(self):
        for m in en.enumerate_matroids(5, 2):
            assert mt.from_bases(m.n, [mt.set_of(b) for b in m.bases]) == m


class TestTwoLevelCharacterization:
    def test_agreement_on_small(self):
        from matlevel import constructions as cn

        for n in range(2, 6):
            for m in en.enumerate_all_matroids(n):
                by_lev = ge.levelness(m)[0] <= 2
                assert en.is_two_level_by_minors(m) == by_lev
                assert cn.is_two_level_by_decomposition(m) == by_lev

    def test_excluded_minors_are_not_two_level(self, excluded_minors):
        for m in excluded_minors.values():
            assert not en.is_two_level_by_minors(m)


class TestMinimallyKLevel:
    def test_three_level_catalog(self, excluded_minors):
        found = en.minimally_k_level(3, 6)
        assert len(found) == 4
        matched = set()
        for m in found:
            for name, ref in excluded_minors.items():
                if mt.is_isomorphic(m, ref) is not None:
                    matched.add(name)
        assert matched == {"MK4", "W3_whirl", "Q6", "P6"}

    def test_two_level_minimal_is_u21(self):
        found = en.minimally_k_level(2, 4)
        assert len(found) == 1
        assert found[0] == mt.uniform(2, 1)

    def test_size_bound(self):
        assert en.verify_size_bound(3)


class TestGraphChecks:
    def test_excluded_minor_k2(self):
        assert en.graph_excluded_minor_check(2)

    def test_excluded_minor_k3(self):
        assert en.graph_excluded_minor_check(3)

    def test_three_level_decomposition(self):
        assert en.three_level_graph_decomposition_check()

    def test_k4_targeted(self):
        # the two cones over minimally biconnected 5-vertex graphs are
        # exactly 5-level (apex degree 5) and are their own witnesses
        w5 = mt.catalog("wheel(5)")
        cone_k23 = gr.graphic_matroid(gr.cone(gr.complete_bipartite_graph(2, 3)))
        excluded = [
            gr.graphic_matroid(gr.cone(h))
            for h in gr.minimally_biconnected_graphs(5)
        ]
        assert ge.levelness(w5)[0] == 5
        assert ge.levelness(cone_k23)[0] == 5
        assert en._graph_level_matches(w5, 4, excluded)
        assert en._graph_level_matches(cone_k23, 4, excluded)


def test_three_connected():
    assert en.is_three_connected(mt.catalog("MK4"))
    from matlevel import constructions as cn

    disc = cn.direct_sum(mt.uniform(2, 1), mt.uniform(2, 1))
    assert not en.is_three_connected(disc)

    t = cn.two_sum(mt.uniform(3, 2), 0, mt.catalog("MK4"), 0)
    assert not en.is_three_connected(t)
