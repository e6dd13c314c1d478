"""Free resolutions: complexes, exactness via Hilbert data, minimality."""

import pytest

from brforge.hilbert import hilbert_numerator
from brforge.ideals import Ideal
from brforge.resolution import (
    BettiTable,
    GradedMatrix,
    Resolution,
    free_resolution,
    gorenstein_certificate,
    regularity,
    syzygy_matrix,
)
from brforge.ring import Rng

from conftest import random_ideal


def _strip(coeffs):
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def euler_numerator(res):
    """1 - B_0(t) + B_1(t) - ... as an integer coefficient list; equals the
    Hilbert series numerator of R/I when the complex is exact."""
    top = max(max(t, default=0) for t in res.twists)
    out = [0] * (top + 1)
    out[0] = 1
    for k, twists in enumerate(res.twists):
        sign = -1 if k % 2 == 0 else 1
        for d in twists:
            out[d] += sign
    return _strip(out)


def assert_is_complex(res):
    for k in range(len(res.matrices) - 1):
        prod = res.matrices[k].compose(res.matrices[k + 1])
        assert prod.is_zero(), f"composition at step {k} is nonzero"


class TestKnownResolutions:
    def test_koszul_complex_of_variables(self, ring3):
        I = Ideal(ring3, list(ring3.variables()))
        res = free_resolution(I)
        assert res.betti().as_dict() == {(0, 1): 4, (1, 2): 6, (2, 3): 4, (3, 4): 1}
        assert res.is_minimal()
        assert regularity(res) == 1
        assert_is_complex(res)
        cert = gorenstein_certificate(I, resolution=res)
        assert cert.arithmetically_gorenstein
        assert cert.codimension == 4

    def test_twisted_cubic(self, ring3):
        I = Ideal(
            ring3,
            [
                ring3.parse("z1^2-z0*z2"),
                ring3.parse("z1*z2-z0*z3"),
                ring3.parse("z2^2-z1*z3"),
            ],
        )
        res = free_resolution(I)
        assert res.betti().as_dict() == {(0, 2): 3, (1, 3): 2}
        cert = gorenstein_certificate(I, resolution=res)
        assert cert.cohen_macaulay
        assert cert.last_rank == 2
        assert not cert.arithmetically_gorenstein

    def test_complete_intersection_regularity(self, ring3):
        rng = Rng(61)
        I = Ideal(ring3, [ring3.random_form(2, rng), ring3.random_form(3, rng)])
        res = free_resolution(I)
        assert res.betti().as_dict() == {(0, 2): 1, (0, 3): 1, (1, 5): 1}
        assert regularity(res) == 4
        assert_is_complex(res)

    def test_describe_layout(self, ring3):
        I = Ideal(ring3, [ring3.variable(0), ring3.variable(1)])
        res = free_resolution(I)
        assert res.describe() == "R <- 2R(-1) <- R(-2) <- 0"


class TestExactnessViaHilbert:
    def test_euler_characteristic_random(self, ring2):
        rng = Rng(62)
        for _ in range(10):
            I = random_ideal(ring2, rng, 2, 3)
            res = free_resolution(I)
            assert_is_complex(res)
            assert euler_numerator(res) == _strip(
                hilbert_numerator(I.leading_exponents(), ring2.nvars)
            )

    def test_euler_characteristic_p3(self, ring3):
        rng = Rng(63)
        for _ in range(5):
            I = random_ideal(ring3, rng, 3, 2)
            res = free_resolution(I)
            assert euler_numerator(res) == _strip(
                hilbert_numerator(I.leading_exponents(), ring3.nvars)
            )


class TestMinimize:
    def test_cancels_redundant_generator(self, ring3):
        I = Ideal(ring3, [ring3.parse("z0"), ring3.parse("z1"), ring3.parse("z0+z1")])
        raw = free_resolution(I, minimize=False)
        assert not raw.is_minimal()
        res = raw.minimize()
        assert res.is_minimal()
        assert res.betti().as_dict() == {(0, 1): 2, (1, 2): 1}
        assert_is_complex(res)

    def test_minimize_preserves_euler(self, ring3):
        rng = Rng(64)
        gens = [ring3.random_form(2, rng) for _ in range(2)]
        gens.append(gens[0] + gens[1])
        I = Ideal(ring3, gens)
        raw = free_resolution(I, minimize=False)
        mini = raw.minimize()
        assert euler_numerator(raw) == euler_numerator(mini)

    def test_minimize_of_minimal_is_identity(self, ring3):
        I = Ideal(ring3, [ring3.parse("z1^2-z0*z2")])
        res = free_resolution(I)
        assert res.is_minimal()
        assert res.minimize().betti().as_dict() == res.betti().as_dict()

    def test_regularity_requires_minimal(self, ring3):
        I = Ideal(ring3, [ring3.parse("z0"), ring3.parse("z1"), ring3.parse("z0+z1")])
        raw = free_resolution(I, minimize=False)
        with pytest.raises(ValueError):
            regularity(raw)


class TestSyzygyMatrix:
    def test_koszul_row(self, ring3):
        phi = GradedMatrix(
            ring3,
            [[ring3.variable(i) for i in range(4)]],
            (0,),
            (1, 1, 1, 1),
        )
        B = syzygy_matrix(phi)
        assert B.cols == 6
        assert set(B.col_twists) == {2}
        assert phi.compose(B).is_zero()

    def test_fixture_syzygies_are_relations(self):
        from brforge.io import read_matrix

        from conftest import fixture

        phi = read_matrix(fixture("linear_row_p5.mat"))
        B = read_matrix(fixture("linear_row_p5_syz.mat"))
        assert phi.compose(B).is_zero()
        ours = syzygy_matrix(phi)
        assert ours.cols == B.cols
        assert sorted(ours.col_twists) == sorted(B.col_twists)


class TestGradedMatrix:
    def test_rejects_wrong_degrees(self, ring3):
        with pytest.raises(ValueError):
            GradedMatrix(ring3, [[ring3.parse("z0^2")]], (0,), (1,))
        with pytest.raises(ValueError):
            GradedMatrix(ring3, [[ring3.parse("z0+z0^2")]], (0,), (2,))

    def test_rejects_ragged(self, ring3):
        with pytest.raises(ValueError):
            GradedMatrix(ring3, [[ring3.variable(0), ring3.variable(1)]], (0,), (1,))

    def test_compose_twist_mismatch(self, ring3):
        A = GradedMatrix(ring3, [[ring3.variable(0)]], (0,), (1,))
        B = GradedMatrix(ring3, [[ring3.variable(0)]], (0,), (1,))
        with pytest.raises(ValueError):
            A.compose(B)

    def test_column_roundtrip(self, ring3):
        A = GradedMatrix(
            ring3,
            [[ring3.variable(0), ring3.variable(1)], [ring3.variable(2), ring3.zero]],
            (0, 0),
            (1, 1),
        )
        again = GradedMatrix.from_columns(ring3, A.row_twists, A.columns(), A.col_twists)
        assert again.entries == A.entries


class TestBettiTable:
    def test_roundtrip(self):
        d = {(0, 2): 3, (1, 3): 2}
        t = BettiTable.from_dict(d)
        assert t.as_dict() == d
        assert t.steps() == 2
        assert t.lines() == ["0 2 3", "1 3 2"]

    def test_from_twists(self):
        t = BettiTable.from_twists([(2, 2, 3), (4,)])
        assert t.as_dict() == {(0, 2): 2, (0, 3): 1, (1, 4): 1}

    def test_zero_ranks_dropped(self):
        t = BettiTable.from_dict({(0, 1): 0, (0, 2): 1})
        assert t.as_dict() == {(0, 2): 1}
