import json
import random
from fractions import Fraction

import pytest

from matlevel import certificates as ct
from matlevel import geometry as ge
from matlevel import matroid as mt
from matlevel.errors import NegativeOnV, UnsupportedEntry


class TestQRoot2:
    def test_field_operations(self):
        rng = random.Random(3)
        for _ in range(30):
            x = ct.QRoot2.of(Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4)))
            y = ct.QRoot2.of(Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4)))
            assert (x + y) - y == x
            assert x * y == y * x
            if not y.is_zero():
                assert (x / y) * y == x

    def test_inverse(self):
        x = ct.QRoot2.of(Fraction(1), Fraction(1))
        assert x * x.inverse() == ct.QRoot2.of(Fraction(1))

    def test_irrationality(self):
        # a + b*sqrt2 = 0 forces a = b = 0
        x = ct.QRoot2.of(Fraction(3), Fraction(-2))
        assert not x.is_zero()
        assert abs(float(x) - (3 - 2 * 2**0.5)) < 1e-12

    def test_sqrt_entries(self):
        assert ct.sqrt_entry(0) == (0, 0)
        assert ct.sqrt_entry(1) == (1, 0)
        assert ct.sqrt_entry(2) == (0, 1)
        assert ct.sqrt_entry(4) == (2, 0)
        with pytest.raises(UnsupportedEntry):
            ct.sqrt_entry(3)


class TestSignOrbits:
    def test_forest_pin_count(self):
        entries = [[1, 1, 0], [1, 0, 2], [0, 4, 1]]
        pinned, free = ct._sign_forest(entries)
        nz = sum(1 for r in entries for x in r if x)
        # rows + cols - one connected component
        assert len(pinned) == 3 + 3 - 1
        assert len(pinned) + len(free) == nz

    def test_all_zero_rowcol_components(self):
        entries = [[1, 0], [0, 1]]
        pinned, free = ct._sign_forest(entries)
        assert len(pinned) == 2 and not free


class TestHadamardMinRank:
    def test_diagonal(self):
        out = ct.hadamard_min_rank([[1, 0], [0, 1]])
        assert out.min_rank_found == 2 and out.exhaustive

    def test_all_ones_rank_one(self):
        out = ct.hadamard_min_rank([[1, 1], [1, 1]])
        assert out.min_rank_found == 1

    def test_j4_minus_i4(self):
        a0 = [[0 if i == j else 1 for j in range(4)] for i in range(4)]
        out = ct.hadamard_min_rank(a0)
        assert out.min_rank_found == 4 and out.exhaustive

    def test_witness_signs_reproduce_rank(self):
        a0 = [[0 if i == j else 1 for j in range(4)] for i in range(4)]
        out = ct.hadamard_min_rank(a0)
        mat = [
            [
                tuple(s * c for c in ct.sqrt_entry(a0[i][j]))
                for j, s in enumerate(row)
            ]
            for i, row in enumerate(out.witness_signs)
        ]
        from matlevel import _kernels

        assert _kernels.qroot2_rank(mat) == out.min_rank_found

    def test_target_early_exit(self):
        out = ct.hadamard_min_rank([[1, 1], [1, 1]], target=1)
        assert out.min_rank_found == 1

    def test_shared_certificate_full_rank(self):
        entries = ct._fixed_certificate(mt.catalog("MK4"))
        out = ct.hadamard_min_rank(entries)
        assert out.min_rank_found == 7 and out.exhaustive

    def test_json(self):
        out = ct.hadamard_min_rank([[2]])
        data = json.loads(out.to_json())
        assert data["min_rank_found"] == 1


def test_identity_w4():
    assert ct.verify_identity_w4()


class TestSosFeasible:
    def test_square_facet_one_sos(self):
        m = mt.uniform(4, 2)
        v = ge.base_configuration(m)
        out = ct.sos_feasible(v, lambda p: 1 - p[0], 1)
        assert out.verdict == "feasible"

    def test_wheel4_rim_two_sos(self):
        m = mt.catalog("wheel(4)")
        v = ge.base_configuration(m)
        f = next(x for x in ge.flacets(m) if x.subset == (0, 1, 2, 3))
        out = ct.sos_feasible(v, ct._flacet_functional(f), 2)
        assert out.verdict == "feasible"
        assert out.residual <= 1e-8 and out.min_eigenvalue >= -1e-8

    def test_negative_functional_rejected(self):
        v = ge.base_configuration(mt.uniform(3, 1))
        with pytest.raises(NegativeOnV):
            ct.sos_feasible(v, lambda p: p[0] - 1, 1)

    def test_gram_reproduces_values(self):
        import numpy as np

        from matlevel import ideals as idl

        m = mt.catalog("MK4")
        v = ge.base_configuration(m)
        f = next(x for x in ge.flacets(m) if x.subset == (0, 1, 2))
        ell = ct._flacet_functional(f)
        out = ct.sos_feasible(v, ell, 2)
        assert out.verdict == "feasible"
        std = idl.vanishing_ideal(v).standard_monomials
        monos = [mo for mo in std if sum(mo) <= 2]
        zero_pts = [p for p in v.points if ell(p) == 0]
        zero_rows = [[idl.eval_monomial(mo, p) for mo in monos] for p in zero_pts]
        null = ge._nullspace(zero_rows, len(monos))
        w = np.array([[float(c) for c in vec] for vec in null]).T
        for p in v.points:
            mv = np.array([float(idl.eval_monomial(mo, p)) for mo in monos]) @ w
            assert abs(mv @ out.gram @ mv - float(ell(p))) < 1e-6


class TestThetaRank:
    def test_two_level_is_one(self):
        for name in ("U(4,2)", "U(5,2)"):
            assert ct.theta_rank_estimate(mt.catalog(name)) == (1, 1)

    def test_running_example(self):
        assert ct.theta_rank_estimate(mt.running_example()) == (1, 1)

    def test_excluded_minors_two(self, excluded_minors):
        for m in excluded_minors.values():
            assert ct.theta_rank_estimate(m) == (2, 2)

    def test_wheel4(self):
        assert ct.theta_rank_estimate(mt.catalog("wheel(4)")) == (2, 2)


class TestPsdMinimality:
    def test_uniform_true(self):
        for n, k in ((2, 1), (4, 2), (5, 2), (5, 3)):
            assert ct.psd_minimality_verdict(mt.uniform(n, k))

    def test_running_example_true(self):
        assert ct.psd_minimality_verdict(mt.running_example())

    def test_mk4_false(self):
        assert not ct.psd_minimality_verdict(mt.catalog("MK4"))

    def test_q6_false(self):
        assert not ct.psd_minimality_verdict(mt.catalog("Q6"))

    def test_fixed_certificate_entries(self):
        # basis {0,1,4} row against the {2,3,5} line column carries the 2
        entries = ct._fixed_certificate(mt.catalog("MK4"))
        i = ct._CERT_ROWS.index((0, 1, 4))
        assert entries[i][-1] == 2
        assert all(x in (0, 1, 2) for row in entries for x in row)
