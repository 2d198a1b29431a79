"""The exact pushforward operator and its grid machinery.

Preimages are checked against polynomial root-finding, closed forms
against their algebraic expressions, and the two evaluation strategies
against each other.
"""

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cdfpush import (
    Cdf,
    DistSpec,
    DomainError,
    GridCdf,
    MonotonicityError,
    ParameterError,
    ResourceLimitError,
    cdf_kumaraswamy,
    grid_coordinate,
    iterate_pushforward,
    preimage_pair,
    pushforward_cdf,
    q_r,
    standard_grid,
    sup_distance,
    tabulate,
    validate_map_param,
)

map_params = st.floats(min_value=0.1, max_value=4.0)
unit_floats = st.floats(min_value=0.0, max_value=1.0)


class TestMapParam:
    def test_accepts_boundary(self):
        assert validate_map_param(4.0) == 4.0
        assert validate_map_param(0.5) == 0.5

    @pytest.mark.parametrize("bad", [0.0, -1.0, 4.5, float("nan"), float("inf")])
    def test_rejects(self, bad):
        with pytest.raises(ParameterError):
            validate_map_param(bad)


class TestStandardGrid:
    def test_shape_and_endpoints(self):
        g = standard_grid(8)
        assert g.shape == (9,)
        assert g[0] == 0.0 and g[-1] == 1.0
        assert np.all(np.diff(g) > 0.0)

    def test_uniform_in_arcsine_coordinate(self):
        g = standard_grid(64)
        u = grid_coordinate(g)
        assert np.max(np.abs(u - np.linspace(0.0, 1.0, 65))) < 1e-13

    def test_size_validation(self):
        with pytest.raises(ParameterError):
            standard_grid(1)


class TestPreimages:
    def test_q_point_values(self):
        assert q_r(4.0, 0.0) == 0.5
        assert q_r(4.0, 0.75) == pytest.approx(0.25, abs=1e-15)
        assert q_r(2.0, 0.6) == 0.0

    @given(map_params, unit_floats)
    def test_q_range(self, r, y):
        q = q_r(r, y)
        assert 0.0 <= q <= 0.5

    def test_pair_point_values(self):
        lo, hi = preimage_pair(4.0, 1.0)
        assert (lo, hi) == (0.5, 0.5)
        lo, hi = preimage_pair(4.0, 0.0)
        assert (lo, hi) == (0.0, 1.0)
        lo, hi = preimage_pair(4.0, 0.75)
        assert lo == pytest.approx(0.25, abs=1e-15)
        assert hi == pytest.approx(0.75, abs=1e-15)

    @given(map_params, st.floats(min_value=1e-12, max_value=0.999))
    def test_pair_against_polynomial_roots(self, r, frac):
        # oracle: the preimages are the roots of r*x*(1-x) - y; stay off
        # the peak, where the nearly-double root degrades the eigenvalue
        # solver faster than the closed form
        y = frac * (r / 4.0)
        lo, hi = preimage_pair(r, y)
        roots = np.sort(np.roots([-r, r, -y]).real)
        assert lo == pytest.approx(roots[0], abs=1e-9)
        assert hi == pytest.approx(roots[1], abs=1e-9)

    @given(map_params, unit_floats)
    def test_pair_forward_consistency(self, r, y):
        lo, hi = preimage_pair(r, y)
        target = min(y, r / 4.0)
        assert r * lo * (1.0 - lo) == pytest.approx(target, abs=1e-12)
        assert r * hi * (1.0 - hi) == pytest.approx(target, abs=1e-12)
        assert lo + hi == pytest.approx(1.0, abs=1e-12)

    def test_small_y_no_cancellation(self):
        # the naive 1/2 - q form loses every significant digit here
        lo, _ = preimage_pair(4.0, 1e-300)
        assert lo == pytest.approx(0.25e-300, rel=1e-12)


class TestPushforward:
    def test_one_step_uniform_closed_form(self):
        pushed = pushforward_cdf(DistSpec("uniform").cdf(), 4.0)
        g = standard_grid(4096)
        assert np.max(np.abs(pushed(g) - (1.0 - np.sqrt(1.0 - g)))) <= 1e-12
        assert pushed(0.75) == pytest.approx(0.5, abs=1e-15)

    def test_arcsine_is_fixed_point(self):
        A = DistSpec("arcsine").cdf()
        assert sup_distance(pushforward_cdf(A, 4.0), A, 4096) <= 1e-10

    def test_exactly_one_above_peak(self):
        pushed = pushforward_cdf(DistSpec("uniform").cdf(), 2.0)
        y = np.array([0.5, 0.6, 0.9999, 1.0])
        assert np.all(pushed(y) == 1.0)

    @given(map_params)
    def test_image_support_shrinks(self, r):
        pushed = pushforward_cdf(DistSpec("uniform").cdf(), r)
        assert pushed(min(1.0, r / 4.0)) == 1.0

    @pytest.mark.parametrize(
        "spec",
        [
            DistSpec("uniform"),
            DistSpec("arcsine"),
            DistSpec("beta", 0.4, 2.5),
            DistSpec("kumaraswamy", 3.0, 0.7),
        ],
        ids=lambda s: s.label,
    )
    @pytest.mark.parametrize("r", [0.7, 2.0, 3.5, 4.0])
    def test_result_is_valid_cdf(self, spec, r):
        pushed = pushforward_cdf(spec.cdf(), r)
        y = standard_grid(2048)
        v = pushed(y)
        assert v[0] == 0.0 and v[-1] == 1.0
        assert np.all(np.diff(v) >= -1e-12)
        assert v.min() >= 0.0 and v.max() <= 1.0


class TestIterate:
    def test_zero_steps_is_identity(self):
        base = DistSpec("arcsine").cdf()
        it = iterate_pushforward(base, 4.0, 0)
        y = standard_grid(256)
        assert np.array_equal(it(y), base(y))
        assert it.n == 0

    def test_one_step_matches_kumaraswamy(self):
        it = iterate_pushforward(DistSpec("uniform").cdf(), 4.0, 1)
        y = standard_grid(4096)
        assert np.max(np.abs(it(y) - cdf_kumaraswamy(1.0, 0.5, y))) <= 1e-12

    def test_two_steps_match_kumaraswamy(self):
        it = iterate_pushforward(DistSpec("uniform").cdf(), 4.0, 2)
        K = DistSpec("kumaraswamy", 0.5, 0.5).cdf()
        assert sup_distance(it, K, 4096) <= 1e-12

    def test_exact_depth_limit(self):
        with pytest.raises(ResourceLimitError):
            iterate_pushforward(DistSpec("uniform").cdf(), 4.0, 13, strategy="exact")

    def test_auto_switches_to_grid(self):
        it = iterate_pushforward(DistSpec("uniform").cdf(), 4.0, 13)
        assert it.strategy == "grid"
        it = iterate_pushforward(DistSpec("uniform").cdf(), 4.0, 12)
        assert it.strategy == "exact"

    def test_negative_steps_rejected(self):
        with pytest.raises(ParameterError):
            iterate_pushforward(DistSpec("uniform").cdf(), 4.0, -1)

    @pytest.mark.parametrize("n", [1, 3, 6, 12])
    def test_strategies_agree(self, n):
        base = DistSpec("uniform").cdf()
        exact = iterate_pushforward(base, 4.0, n, strategy="exact")
        grid = iterate_pushforward(base, 4.0, n, strategy="grid", grid_size=4096)
        y = standard_grid(4096)
        assert np.max(np.abs(np.asarray(exact(y)) - np.asarray(grid(y)))) <= 1e-6

    def test_grid_strategy_support_shrinkage(self):
        it = iterate_pushforward(DistSpec("uniform").cdf(), 2.0, 3, strategy="grid")
        assert it(0.75) == 1.0 and it(0.5) == 1.0


class TestTabulate:
    def test_uniform_values_equal_knots(self):
        table = tabulate(DistSpec("uniform").cdf(), 4)
        assert np.array_equal(table.values, table.grid)

    def test_kumaraswamy_closed_form(self):
        table = tabulate(DistSpec("kumaraswamy", 1.0, 0.5).cdf(), 512)
        assert np.max(np.abs(table.values - (1.0 - np.sqrt(1.0 - table.grid)))) <= 1e-14

    def test_arcsine_pushforward_tabulation(self):
        A = DistSpec("arcsine").cdf()
        pushed = tabulate(pushforward_cdf(A, 4.0), 4096)
        plain = tabulate(A, 4096)
        assert np.max(np.abs(pushed.values - plain.values)) <= 1e-10

    def test_interpolation_accuracy_off_knots(self):
        table = tabulate(DistSpec("kumaraswamy", 1.0, 0.5).cdf(), 4096)
        y = np.linspace(0.0, 1.0, 9999)
        assert np.max(np.abs(table(y) - (1.0 - np.sqrt(1.0 - y)))) < 1e-6

    def test_monotonicity_violation_raises(self):
        wobble = Cdf(lambda arr: arr - 0.2 * np.sin(2.0 * np.pi * arr), "test")
        with pytest.raises(MonotonicityError):
            tabulate(wobble, 64)

    def test_support_scaled_grid(self):
        pushed = pushforward_cdf(DistSpec("uniform").cdf(), 2.0)
        table = tabulate(pushed, 4096, support_top=0.5)
        assert table.grid[-1] == 1.0 and table.values[-1] == 1.0
        # resolution at the interior support edge: the closed form there
        # is 1 - sqrt(2)*sqrt(1/2 - y)
        y = np.linspace(0.0, 0.5, 4001)
        exact = 1.0 - np.sqrt(2.0) * np.sqrt(np.maximum(0.5 - y, 0.0))
        assert np.max(np.abs(table(y) - exact)) < 3e-4
        # the unscaled grid undersamples that edge by more than an order
        plain = tabulate(pushed, 4096)
        assert np.max(np.abs(plain(y) - exact)) > 1e-3

    def test_support_top_validation(self):
        with pytest.raises(ParameterError):
            tabulate(DistSpec("uniform").cdf(), 16, support_top=0.0)


class TestGridCdf:
    def test_validation(self):
        g = np.array([0.0, 0.5, 1.0])
        GridCdf(g, np.array([0.0, 0.3, 1.0]))
        with pytest.raises(ParameterError):
            GridCdf(g, np.array([0.1, 0.3, 1.0]))
        with pytest.raises(ParameterError):
            GridCdf(g, np.array([0.0, 0.3, 0.9]))
        with pytest.raises(ParameterError):
            GridCdf(g, np.array([0.0, -0.1, 1.0]))
        with pytest.raises(ParameterError):
            GridCdf(np.array([0.0, 0.5, 0.9]), np.array([0.0, 0.3, 1.0]))

    def test_interpolates_through_knots(self):
        table = tabulate(DistSpec("arcsine").cdf(), 64)
        assert np.array_equal(table(table.grid), table.values)

    def test_as_cdf_round_trip(self):
        table = tabulate(DistSpec("arcsine").cdf(), 64)
        F = table.as_cdf()
        y = np.linspace(0.0, 1.0, 101)
        assert np.array_equal(F(y), table(y))
        assert F.provenance == "grid-interpolated[m=64]"

    def test_domain_checked(self):
        table = tabulate(DistSpec("uniform").cdf(), 16)
        with pytest.raises(DomainError):
            table(1.0001)


class TestPreimageIdentities:
    def test_halfangle_identity(self):
        # arcsin(sqrt(y)) = 2*arcsin(sqrt(x_lo)) for the lower preimage at r=4
        y = standard_grid(1000)[1:-1]
        lo, _ = preimage_pair(4.0, y)
        residual = np.max(np.abs(np.arcsin(np.sqrt(y)) - 2.0 * np.arcsin(np.sqrt(lo))))
        assert residual <= 1e-12

    def test_sqrt_gap_identity(self):
        # (sqrt(x_hi) - sqrt(x_lo))^2 = 1 - sqrt(y) at r=4
        y = standard_grid(1000)[1:-1]
        lo, hi = preimage_pair(4.0, y)
        residual = np.max(np.abs((np.sqrt(hi) - np.sqrt(lo)) ** 2 - (1.0 - np.sqrt(y))))
        assert residual <= 1e-12
