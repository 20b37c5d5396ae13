//! Truncated power series and the generating-function identities for the
//! counts `|Y_m|`.

mod counting;
mod transforms;
mod truncated;

pub use counting::{
    check_functional_equations, y_counts, y_series, EquationCheck, FunctionalReport,
};
pub use transforms::{
    anticommutator_poisson_series, cauchy_polynomial_residual, minverse_closed_form, r_m_transfer,
    RmTransfer,
};
pub use truncated::TruncatedSeries;

/// Order used when no other is given.
pub const DEFAULT_ORDER: usize = 12;
