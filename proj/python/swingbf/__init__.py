"""Bayes factors for equality of two correlated proportions.

Thin re-export of the compiled core. All computations live in C++; this
package only provides the import surface. Domain errors raised by the core
surface as ValueError.
"""

from swingbf._core import (
    BetaComponent,
    BetaMixture,
    BetaParams,
    ContingencyTable,
    CurvePoint,
    DiagonalSplit,
    DirichletHyper,
    EvidenceSummary,
    FrequentistResult,
    ImaginaryData,
    ImaginaryWeightTable,
    McnemarVariant,
    Method,
    NppCurves,
    ReparamPrior,
    SensitivityCurve,
    SensitivityMethod,
    SensitivityPoint,
    ci_log_bf,
    ci_prior,
    default_log_bf,
    default_q_grid,
    grid_midpoints,
    h0_weights,
    i_log_bf,
    i_log_bf_via_mixture_identity,
    i_prior_density,
    i_prior_eta_marginal,
    i_prior_theta_marginal,
    mcnemar_test,
    mixture_density,
    normalized_likelihood_curve,
    npp_dependence_curve,
    reparametrize,
    sensitivity_curve,
    to_summary,
)

__all__ = [
    "BetaComponent",
    "BetaMixture",
    "BetaParams",
    "ContingencyTable",
    "CurvePoint",
    "DiagonalSplit",
    "DirichletHyper",
    "EvidenceSummary",
    "FrequentistResult",
    "ImaginaryData",
    "ImaginaryWeightTable",
    "McnemarVariant",
    "Method",
    "NppCurves",
    "ReparamPrior",
    "SensitivityCurve",
    "SensitivityMethod",
    "SensitivityPoint",
    "ci_log_bf",
    "ci_prior",
    "default_log_bf",
    "default_q_grid",
    "grid_midpoints",
    "h0_weights",
    "i_log_bf",
    "i_log_bf_via_mixture_identity",
    "i_prior_density",
    "i_prior_eta_marginal",
    "i_prior_theta_marginal",
    "mcnemar_test",
    "mixture_density",
    "normalized_likelihood_curve",
    "npp_dependence_curve",
    "reparametrize",
    "sensitivity_curve",
    "to_summary",
]
