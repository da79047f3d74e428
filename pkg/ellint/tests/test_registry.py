"""
Tests for the integral kind registry.
"""
import math

import pytest

from ellint.exceptions import DomainError
from ellint.models import IntegralKind, IntegralSpec, Method, Strategy
from ellint.registry import IntegralRegistry, get_registry


class TestIntegralRegistry:
    """Test registration and lookup."""

    @pytest.fixture
    def registry(self):
        """Create the default registry."""
        return IntegralRegistry.create_default()

    def test_all_kinds_registered(self, registry):
        """Test every integral kind has an entry."""
        assert set(registry.kinds) == set(IntegralKind)

    def test_duplicate_registration(self, registry):
        """Test registering a kind twice is rejected."""
        evaluator, oracle = registry.get(IntegralKind.HYPER_ELLIPTIC_3)
        with pytest.raises(ValueError) as exc_info:
            registry.register(IntegralKind.HYPER_ELLIPTIC_3, evaluator, oracle)
        assert "already registered" in str(exc_info.value)

    def test_missing_kind(self):
        """Test lookup in an empty registry."""
        with pytest.raises(KeyError) as exc_info:
            IntegralRegistry().get(IntegralKind.INCOMPLETE_FINITE)
        assert "not registered" in str(exc_info.value)

    def test_shared_registry(self):
        """Test get_registry returns one instance."""
        assert get_registry() is get_registry()


class TestRegistryEvaluation:
    """Test evaluation through the registry."""

    @pytest.fixture
    def registry(self):
        """Create the default registry."""
        return IntegralRegistry.create_default()

    @pytest.mark.parametrize(
        "spec,expected",
        [
            (IntegralSpec(kind=IntegralKind.FULL_LINE_QUADRATIC, a=1.0, nu=1.0), math.pi),
            (IntegralSpec(kind=IntegralKind.FULL_LINE_QUADRATIC_LINEAR, a=1.0, b=1.0, nu=1.0), 2 * math.pi / math.sqrt(3)),
            (IntegralSpec(kind=IntegralKind.HALF_LINE_MONOMIAL, a=1.0, nu=1.0, m=2.0), math.pi / 2),
            (IntegralSpec(kind=IntegralKind.HALF_LINE_GENERAL, a=1.0, b=0.0, nu=1.0, m=2.0), math.pi / 2),
            (IntegralSpec(kind=IntegralKind.HYPER_ELLIPTIC_3, a1=0.0, a2=0.0, a3=1.0, nu=1.0), 2 * math.pi / (3 * math.sqrt(3))),
        ],
    )
    def test_evaluate_and_oracle(self, registry, spec, expected):
        """Test the primary evaluator and the oracle agree with known values."""
        assert registry.evaluate(spec).value == pytest.approx(expected, rel=1e-12)
        assert registry.oracle(spec).value == pytest.approx(expected, rel=1e-8)

    def test_incomplete_kind(self, registry):
        """Test the incomplete integral runs through the series."""
        spec = IntegralSpec(kind=IntegralKind.INCOMPLETE_FINITE, a=1.0, b=1.0, nu=1.0, m=2.0, upper=0.5)
        report = registry.evaluate(spec)
        assert report.method == Method.SERIES
        assert report.value == pytest.approx(registry.oracle(spec).value, rel=1e-8)

    def test_forced_quadrature(self, registry):
        """Test a closed-form kind routes to its oracle under the quadrature strategy."""
        spec = IntegralSpec(kind=IntegralKind.FULL_LINE_QUADRATIC, a=2.0, nu=1.5)
        report = registry.evaluate(spec, strategy=Strategy.QUADRATURE)
        assert report.method == Method.QUADRATURE

    @pytest.mark.parametrize(
        "spec,field",
        [
            (IntegralSpec(kind=IntegralKind.HALF_LINE_GENERAL, a=1.0, b=0.5, nu=2.0), "m"),
            (IntegralSpec(kind=IntegralKind.HYPER_ELLIPTIC_3, a1=1.0, a3=1.0, nu=2.0), "a2"),
            (IntegralSpec(kind=IntegralKind.INCOMPLETE_FINITE, a=1.0, b=1.0, nu=1.0, m=2.0), "upper"),
            (IntegralSpec(kind=IntegralKind.INCOMPLETE_FINITE, a=1.0, b=1.0, nu=1.0, m=2.5, upper=0.5), "m"),
        ],
    )
    def test_missing_or_invalid_field(self, registry, spec, field):
        """Test a missing or unusable parameter names its field."""
        with pytest.raises(DomainError) as exc_info:
            registry.evaluate(spec)
        assert exc_info.value.field == field

    def test_non_positive_tolerance(self, registry):
        """Test tol <= 0 is a domain error."""
        spec = IntegralSpec(kind=IntegralKind.FULL_LINE_QUADRATIC, a=1.0, nu=1.0)
        with pytest.raises(DomainError):
            registry.evaluate(spec, tol=0.0)
