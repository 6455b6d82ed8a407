import numpy as np
import pytest
from hypothesis import given, settings

from app.errors import (
    BaseMismatchError,
    DimensionMismatchError,
    NotRestrictedError,
    ZeroNotKilledError,
)
from app.models.operator import Representation
from app.services.function_algebra import delta, restricted_convolve
from app.services.positive_definite import gram_rpd, is_extendible_rpd
from app.services.representations import (
    coefficient_function,
    extend_to_Sr,
    is_restricted_representation,
    is_star_representation,
    lambda_r,
    lambda_r_apply,
    lift,
    lift_lambda,
    lift_rho,
    restrict_from_Sr,
    rho_r,
    rho_r_apply,
    trivial_representation,
)
from app.services.semigroup_core import restricted_semigroup, validate_table
from tests.strategies import SMALL, complex_functions, rpd_functions, semigroups, with_functions


class TestRegularRepresentations:
    def test_built_per_instance(self, z2):
        twin = validate_table(z2.n, z2.table, name="twin")
        assert lambda_r(z2) is lambda_r(z2)
        assert lambda_r(twin).base is twin
        assert rho_r(twin).base is twin
        assert rho_r(z2).base is z2

    def test_lambda_on_chain2(self, chain2):
        lam = lambda_r(chain2)
        assert lam[0].tolist() == [[1, 0], [0, 0]]
        assert lam[1].tolist() == [[0, 0], [0, 1]]

    def test_lambda_is_restricted_but_not_star_on_chain2(self, chain2):
        assert is_restricted_representation(lambda_r(chain2)).verdict
        report = is_star_representation(lambda_r(chain2))
        assert not report.verdict
        assert report.violation == "law"
        assert report.elements

    def test_trivial_is_star_but_not_restricted_on_chain2(self, chain2):
        trivial = trivial_representation(chain2)
        assert is_star_representation(trivial).verdict
        report = is_restricted_representation(trivial)
        assert not report.verdict
        assert "= 0" in report.detail

    def test_trivial_is_restricted_on_groups(self, s3):
        assert is_restricted_representation(trivial_representation(s3, dim=2)).verdict

    @pytest.mark.parametrize("S", SMALL, ids=lambda S: S.label)
    def test_regular_pair_is_restricted(self, S):
        assert is_restricted_representation(lambda_r(S)).verdict
        assert is_restricted_representation(rho_r(S)).verdict

    def test_lambda_is_restricted_on_i3(self, i3):
        assert is_restricted_representation(lambda_r(i3)).verdict

    def test_norm_violation_detected(self, z2):
        mats = np.stack([np.eye(1), 2 * np.eye(1)])
        report = is_star_representation(Representation(z2, mats))
        assert not report.verdict

    @given(with_functions(1, complex_functions))
    @settings(max_examples=30, deadline=None)
    def test_matrix_and_functional_forms_agree(self, case):
        S, f = case
        lam, rho = lambda_r(S), rho_r(S)
        for s in range(S.n):
            np.testing.assert_allclose(lam[s] @ f.values, lambda_r_apply(S, s, f).values)
            np.testing.assert_allclose(rho[s] @ f.values, rho_r_apply(S, s, f).values)


class TestLifts:
    @given(with_functions(2, complex_functions))
    @settings(max_examples=30, deadline=None)
    def test_left_and_right_lifts_commute(self, case):
        S, f, g = case
        C = lift_lambda(f).commutator(lift_rho(g))
        assert np.max(np.abs(C), initial=0.0) <= 1e-10 * max(1.0, np.abs(f.values).sum() * np.abs(g.values).sum())

    @given(with_functions(1))
    @settings(max_examples=30, deadline=None)
    def test_gram_identity_is_exact(self, case):
        S, phi = case
        P = lift_rho(phi)
        for y in range(S.n):
            shifted = lambda_r_apply(S, y, phi)
            for x in range(S.n):
                assert P.inner(x, y) == shifted[x]
        assert np.array_equal(P.matrix, gram_rpd(phi))

    @given(with_functions(2, complex_functions))
    @settings(max_examples=30, deadline=None)
    def test_lift_lambda_is_multiplicative(self, case):
        S, f, g = case
        left = lift_lambda(restricted_convolve(f, g)).matrix
        right = (lift_lambda(f) @ lift_lambda(g)).matrix
        np.testing.assert_allclose(left, right, atol=1e-9)

    @given(semigroups().flatmap(rpd_functions))
    @settings(max_examples=30, deadline=None)
    def test_rho_lift_of_rpd_is_positive(self, phi):
        P = lift_rho(phi).matrix
        np.testing.assert_allclose(P, P.conj().T, atol=1e-9)
        w = np.linalg.eigvalsh(P)
        assert w[0] >= -1e-9 * max(1.0, np.abs(w).max())

    def test_lift_of_delta_is_the_matrix(self, i2):
        assert np.array_equal(lift(lambda_r(i2), delta(i2, 3)).matrix, lambda_r(i2)[3])

    def test_lift_base_mismatch(self, chain2, z2):
        with pytest.raises(BaseMismatchError):
            lift(lambda_r(chain2), delta(z2, 0))


class TestRestrictedCorrespondence:
    def test_roundtrip_is_exact(self, i2):
        for rep in (lambda_r(i2), rho_r(i2)):
            extended = extend_to_Sr(rep)
            assert extended.base == restricted_semigroup(i2)
            assert is_star_representation(extended).verdict
            back = restrict_from_Sr(extended)
            assert np.array_equal(back.matrices, rep.matrices)
            assert back.name == rep.name

    def test_extend_needs_restricted(self, chain2):
        with pytest.raises(NotRestrictedError):
            extend_to_Sr(trivial_representation(chain2))

    def test_restrict_needs_zero_killed(self, chain2):
        Sr = restricted_semigroup(chain2)
        with pytest.raises(ZeroNotKilledError):
            restrict_from_Sr(trivial_representation(Sr))

    def test_restrict_needs_restricted_base(self, z2):
        with pytest.raises(NotRestrictedError):
            restrict_from_Sr(lambda_r(z2))


class TestCoefficientFunctions:
    def test_lambda_at_point_mass_on_chain2(self, chain2):
        u = coefficient_function(lambda_r(chain2), np.array([1.0, 0.0]))
        assert u.values.tolist() == [1, 0]

    def test_dimension_mismatch(self, chain2):
        with pytest.raises(DimensionMismatchError):
            coefficient_function(lambda_r(chain2), np.ones(3))

    @given(semigroups().flatmap(complex_functions))
    @settings(max_examples=30, deadline=None)
    def test_coefficients_are_extendible(self, xi):
        norm2 = float(np.vdot(xi.values, xi.values).real)
        for rep in (lambda_r(xi.base), rho_r(xi.base)):
            report = is_extendible_rpd(coefficient_function(rep, xi.values))
            assert report.verdict
            assert report.constant <= norm2 * (1 + 1e-8) + 1e-8
