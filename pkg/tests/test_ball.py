import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gyrokit import (
    BallDomainError,
    DimensionMismatchError,
    GyroVector,
    ToleranceConfig,
    approx_eq,
    einstein_add,
    gamma,
    gyration,
    line_param,
    neg,
)


def add_1d(u: float, v: float) -> float:
    # collinear composition oracle, independent of the n-dimensional formula
    return (u + v) / (1.0 + u * v)


class TestGyroVector:
    def test_construction_and_cache(self):
        u = GyroVector([0.3, 0.4])
        assert u.dim == 2
        assert u.norm == pytest.approx(0.5, abs=1e-15)
        assert u.norm2 == pytest.approx(0.25, abs=1e-15)

    def test_zero(self):
        z = GyroVector.zero(4)
        assert z.norm == 0.0
        assert z.tolist() == [0.0, 0.0, 0.0, 0.0]

    def test_coords_are_frozen(self):
        u = GyroVector([0.1, 0.2])
        with pytest.raises(ValueError):
            u.coords[0] = 0.9

    def test_does_not_alias_input_array(self):
        raw = np.array([0.1, 0.2])
        u = GyroVector(raw)
        raw[0] = 0.7
        assert u.coords[0] == 0.1

    @pytest.mark.parametrize(
        "bad",
        [[1.0, 0.0], [0.0, -1.0], [0.8, 0.8], [1.5], [1.0 - 1e-12, 0.0]],
    )
    def test_rejects_outside_or_near_boundary(self, bad):
        with pytest.raises(BallDomainError):
            GyroVector(bad)

    @pytest.mark.parametrize("bad", [[], [float("nan"), 0.0], [float("inf")], ["x", "y"]])
    def test_rejects_malformed(self, bad):
        with pytest.raises(BallDomainError):
            GyroVector(bad)

    def test_rejects_matrix_shaped_input(self):
        with pytest.raises(BallDomainError):
            GyroVector([[0.1, 0.2], [0.3, 0.4]])


class TestEinsteinAdd:
    def test_collinear_golden(self):
        # oracle first: the 1-D law gives 0.8/1.15
        expected = add_1d(0.5, 0.3)
        assert expected == pytest.approx(0.8 / 1.15, rel=1e-15)
        w = einstein_add(GyroVector([0.5, 0.0]), GyroVector([0.3, 0.0]))
        assert w.coords[0] == pytest.approx(expected, rel=1e-13)
        assert w.coords[1] == 0.0
        assert f"{w.coords[0]:.12g}" == "0.695652173913"

    def test_orthogonal_golden(self):
        # oracle: with (u,v) = 0 the law collapses to u + sqrt(1-|u|^2) v
        expected_y = math.sqrt(1.0 - 0.25) * 0.5
        w = einstein_add(GyroVector([0.5, 0.0]), GyroVector([0.0, 0.5]))
        assert w.coords[0] == pytest.approx(0.5, abs=1e-15)
        assert w.coords[1] == pytest.approx(expected_y, rel=1e-14)
        assert f"{w.coords[1]:.12g}" == "0.433012701892"

    def test_identity_both_sides(self):
        u = GyroVector([0.2, -0.4, 0.1])
        z = GyroVector.zero(3)
        assert approx_eq(einstein_add(u, z), u)
        assert approx_eq(einstein_add(z, u), u)

    def test_inverse_both_sides(self):
        u = GyroVector([0.6, 0.3])
        assert einstein_add(u, neg(u)).norm < 1e-12
        assert einstein_add(neg(u), u).norm < 1e-12

    def test_left_cancellation(self):
        u = GyroVector([0.5, 0.2, -0.1])
        v = GyroVector([-0.3, 0.4, 0.6])
        recovered = einstein_add(neg(u), einstein_add(u, v))
        assert np.allclose(recovered.coords, v.coords, atol=1e-14)

    def test_noncommutative_in_general(self):
        u = GyroVector([0.5, 0.0])
        v = GyroVector([0.0, 0.5])
        uv = einstein_add(u, v)
        vu = einstein_add(v, u)
        assert not approx_eq(uv, vu)
        # but the norms agree
        assert uv.norm == pytest.approx(vu.norm, rel=1e-14)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            einstein_add(GyroVector([0.1, 0.2]), GyroVector([0.1, 0.2, 0.3]))

    @given(
        st.floats(min_value=-0.95, max_value=0.95),
        st.floats(min_value=-0.95, max_value=0.95),
    )
    @settings(max_examples=200, deadline=None)
    def test_matches_1d_oracle(self, u, v):
        w = einstein_add(GyroVector([u]), GyroVector([v]))
        assert w.coords[0] == pytest.approx(add_1d(u, v), rel=1e-12, abs=1e-12)

    @given(
        st.floats(min_value=-0.9, max_value=0.9),
        st.floats(min_value=-0.9, max_value=0.9),
        st.floats(min_value=-0.9, max_value=0.9),
    )
    @settings(max_examples=100, deadline=None)
    def test_gamma_identity_random(self, ux, uy, vx):
        if ux * ux + uy * uy > 0.9:
            return
        u = GyroVector([ux, uy])
        v = GyroVector([vx, 0.0])
        w = einstein_add(u, v)
        rhs = gamma(u) * gamma(v) * (1.0 + float(u.coords @ v.coords))
        assert gamma(w) == pytest.approx(rhs, rel=1e-10)


class TestGamma:
    def test_at_origin(self):
        assert gamma(GyroVector.zero(3)) == 1.0

    def test_golden_half(self):
        value = gamma(GyroVector([0.5, 0.0]))
        assert value == pytest.approx(1.0 / math.sqrt(0.75), rel=1e-15)
        assert f"{value:.12g}" == "1.15470053838"

    def test_golden_point_eight(self):
        value = gamma(GyroVector([0.8, 0.0]))
        assert value == pytest.approx(1.0 / 0.6, rel=1e-14)

    def test_monotone_in_norm(self):
        values = [gamma(GyroVector([r, 0.0])) for r in (0.0, 0.3, 0.6, 0.9)]
        assert values == sorted(values)
        assert values[0] == 1.0


class TestGyration:
    def test_trivial_when_either_argument_zero(self):
        u = GyroVector([0.5, 0.1])
        z = GyroVector.zero(2)
        w = GyroVector([0.2, -0.3])
        assert approx_eq(gyration(u, z, w), w)
        assert approx_eq(gyration(z, u, w), w)

    def test_trivial_on_inverse_pair(self):
        u = GyroVector([0.4, -0.2, 0.3])
        w = GyroVector([0.1, 0.5, -0.2])
        assert approx_eq(gyration(u, neg(u), w), w)

    def test_preserves_norm_golden(self):
        # |gyr[u,v]w| = |w| = sqrt(0.1); the composition itself is the
        # implementation, so the oracle is the exactly known norm
        g = gyration(GyroVector([0.5, 0.0]), GyroVector([0.0, 0.5]), GyroVector([0.3, 0.1]))
        assert g.norm == pytest.approx(math.sqrt(0.1), rel=1e-12)

    def test_preserves_inner_products(self):
        u = GyroVector([0.3, 0.2, -0.4])
        v = GyroVector([-0.1, 0.5, 0.2])
        w1 = GyroVector([0.6, 0.0, 0.1])
        w2 = GyroVector([-0.2, -0.3, 0.5])
        g1 = gyration(u, v, w1)
        g2 = gyration(u, v, w2)
        lhs = float(g1.coords @ g2.coords)
        rhs = float(w1.coords @ w2.coords)
        assert lhs == pytest.approx(rhs, abs=1e-13)


class TestLineParam:
    def test_endpoints(self):
        x = GyroVector([0.5, 0.0])
        assert line_param(x, 0.0).norm == 0.0
        assert approx_eq(line_param(x, 1.0), x)

    def test_doubling_matches_1d_oracle(self):
        # t=2 walks the diameter twice: tanh(2 artanh 0.5) = 0.5 (+) 0.5
        p = line_param(GyroVector([0.5, 0.0]), 2.0)
        assert p.coords[0] == pytest.approx(add_1d(0.5, 0.5), rel=1e-14)
        assert p.coords[1] == 0.0

    def test_negative_parameter_reflects(self):
        x = GyroVector([0.0, 0.4])
        p = line_param(x, -1.0)
        assert approx_eq(p, neg(x))

    def test_parameter_additivity(self):
        x = GyroVector([0.3, -0.2])
        lhs = einstein_add(line_param(x, 0.7), line_param(x, 1.1))
        rhs = line_param(x, 1.8)
        assert np.allclose(lhs.coords, rhs.coords, atol=1e-13)

    def test_stays_on_the_ray(self):
        x = GyroVector([0.12, 0.35, -0.2])
        p = line_param(x, 2.5)
        cross = np.outer(p.coords, x.coords) - np.outer(x.coords, p.coords)
        assert float(np.max(np.abs(cross))) < 1e-15

    def test_requires_nonzero_direction(self):
        with pytest.raises(BallDomainError):
            line_param(GyroVector.zero(2), 1.0)

    def test_huge_parameter_hits_the_guard(self):
        # tanh saturates toward 1, which the strict constructor refuses
        with pytest.raises(BallDomainError):
            line_param(GyroVector([0.5, 0.0]), 50.0)


class TestToleranceConfig:
    def test_defaults(self):
        tol = ToleranceConfig()
        assert tol.abs_tol == 1e-9
        assert tol.rel_tol == 1e-9
        assert tol.boundary_margin == 1e-9
        assert tol.sample_rmax == 0.999

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"abs_tol": 0.0},
            {"rel_tol": -1e-9},
            {"boundary_margin": float("nan")},
            {"sample_rmax": 1.0},
        ],
    )
    def test_rejects_bad_values(self, kwargs):
        with pytest.raises(ValueError):
            ToleranceConfig(**kwargs)

    def test_approx_eq_uses_config(self):
        a = GyroVector([0.1, 0.0])
        b = GyroVector([0.1 + 5e-7, 0.0])
        assert not approx_eq(a, b)
        assert approx_eq(a, b, ToleranceConfig(abs_tol=1e-6))
