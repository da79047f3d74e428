from .config import NumericsSettings, get_settings, load_settings
from .exceptions import (
    ConvergenceError,
    DegreeRangeError,
    DomainError,
    EllintError,
    GammaPoleError,
    QuadratureError,
)
from .gengamma import (
    gengamma2,
    gengamma2_heat_shift,
    gengamma2_quad,
    gengamma2_series,
    gengamma3,
    gengamma3_quad,
    gengamma3_shift_x2,
    gengamma3_shift_x3,
    h_minus1_erf_form,
    h_minus1_gf_partial,
    h_minus_order,
    h_minus_order_by_derivative,
    hermite_fn,
    hermite_fn_m,
)
from .hermite import hermite_gf_partial, hermite_gh, hermite_weighted
from .integrals import (
    f_quadratic,
    f_quadratic_linear,
    incomplete_report,
    laplace_peak_approx,
    laplace_power_identity,
    phi_general,
    phi_general_nested,
    phi_hyperelliptic3,
    phi_monomial,
)
from .models import (
    EvalReport,
    GammaArgs2,
    GammaArgs3,
    IntegralKind,
    IntegralSpec,
    Method,
    PolyIndex,
    QPolyCoeffs,
    QPolyParams,
    QuadResult,
    SeriesValue,
    Strategy,
)
from .qpoly import g_series, incomplete_integral, q_poly, q_poly_coeffs
from .registry import IntegralRegistry, get_registry

__all__ = [
    'NumericsSettings',
    'get_settings',
    'load_settings',
    'EllintError',
    'DomainError',
    'GammaPoleError',
    'DegreeRangeError',
    'ConvergenceError',
    'QuadratureError',
    'PolyIndex',
    'SeriesValue',
    'QPolyParams',
    'QPolyCoeffs',
    'GammaArgs2',
    'GammaArgs3',
    'IntegralKind',
    'IntegralSpec',
    'EvalReport',
    'QuadResult',
    'Method',
    'Strategy',
    'hermite_gh',
    'hermite_gf_partial',
    'hermite_weighted',
    'q_poly',
    'q_poly_coeffs',
    'g_series',
    'incomplete_integral',
    'gengamma2',
    'gengamma2_series',
    'gengamma2_quad',
    'gengamma2_heat_shift',
    'gengamma3',
    'gengamma3_quad',
    'gengamma3_shift_x2',
    'gengamma3_shift_x3',
    'hermite_fn',
    'hermite_fn_m',
    'h_minus_order',
    'h_minus_order_by_derivative',
    'h_minus1_gf_partial',
    'h_minus1_erf_form',
    'f_quadratic',
    'f_quadratic_linear',
    'phi_monomial',
    'phi_general',
    'phi_general_nested',
    'phi_hyperelliptic3',
    'incomplete_report',
    'laplace_peak_approx',
    'laplace_power_identity',
    'IntegralRegistry',
    'get_registry',
]
