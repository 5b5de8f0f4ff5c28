//! Group-algebra vectors, norms and bounds for left convolution operators.

mod algebra;
mod checks;
mod fnspec;
pub mod lanczos;
mod opnorm;
mod profile;
mod returnprob;

pub use algebra::{adjoint, convolve, norms, seeded_rng, sobolev_norm, AlgebraVector, NormReport, SobolevNorm};
pub use checks::{
    coeff_decay_sum, convolution_algebra_check, kesten_gap, matrix_coefficients, AlgebraCheck, KestenGap,
    ALGEBRA_CHECK_TOL,
};
pub use fnspec::FnSpec;
pub use opnorm::{
    compression, opnorm_upper_bound, truncated_opnorm, truncated_opnorm_in, OpNormEstimate, OpNormOptions,
    Reduction, DEFAULT_MAX_ITERS, DEFAULT_TOL,
};
pub use profile::{fit_rd_degree, rd_profile, rd_profile_with, DegreeFit, FamilyTag, ProfileOptions, ProfilePoint, RDProfile};
pub use returnprob::{extrapolate_return_norm, return_prob_norm};
