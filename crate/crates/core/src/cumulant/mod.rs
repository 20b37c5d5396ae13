//! Free cumulants: specifications, moment conversion, the product and
//! anti-commutator formulas, quadratic forms and a brute-force oracle.

mod formulas;
mod moments;
mod oracle;
pub mod random;
mod spec;

pub use formulas::{
    anticommutator_cumulant, anticommutator_cumulant_graphwise, coloured_cactus_terms,
    even_anticommutator, free_poisson_anticommutator_polynomial, kappa_pi, product_cumulant,
    quadratic_form_cumulant, semicircular_anticommutator, Route,
};
pub use moments::{cumulants_from_moments, moments_by_enumeration, moments_from_cumulants};
pub use oracle::{oracle_cumulants, oracle_moments, word_moment, Expression};
pub use spec::{CumulantSpec, Padding, SpecKind, WeightMatrix, Word};
