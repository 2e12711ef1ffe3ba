//! Complete monotonicity of `±H_λ`, the critical threshold `λ*`, and the
//! power-series facts used by the monotone-ratio arguments.

mod cm;
pub(crate) mod hfun;
pub(crate) mod integrand;
mod series;
mod threshold;

pub use cm::{
    cm_check, default_cm_grid, default_phi_grid, integrand_certificate, lcm_probe,
    phi_sign_profile, CMReport, CmSign, IntegrandCertificate, LcmProbe, PhiSignProfile,
    DEFAULT_MAX_ORDER,
};
pub use hfun::{
    g_beta, ln_g_beta, ln_g_beta_deriv, ln_g_lambda, ln_g_lambda_mu, necessary_limit,
    necessary_limit_value, stirling_defect, G_lambda, G_lambda_mu, H_lambda, H_lambda_deriv,
    H_lambda_prime,
};
pub use integrand::{h_of_t, h_value, laplace_check, phi_integrand, phi_value, SERIES_CUTOFF};
pub use series::{
    fraction_string, kth_root_base_exact, kth_root_bound, midpoint_defect, midpoint_lower_exact,
    pivot_chained_bound, pivot_chained_expanded, series_coeff_lambda, series_coeff_lambda_exact,
    series_coeff_pivot, term_to_f64, MidpointDefect, PivotCoeff,
};
pub use threshold::{lambda_star, ThresholdResult};
