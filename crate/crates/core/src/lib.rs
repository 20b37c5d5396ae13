//! Exact free-cumulant calculus for anti-commutators `ab + ba` and quadratic
//! forms `Σ w_ij a_i a_j` in free random variables.
//!
//! The crate is organised bottom-up:
//!
//! * [`nc`]: partitions of `[m]`, non-crossing enumeration, Kreweras
//!   complements, the classes `Y_m` and `X_2n` and their level counts.
//! * [`cactus`]: the block multigraph of a partition, cactus structure,
//!   canonical outercycles and grouping of `NC(2n)` into oriented cacti.
//! * [`cumulant`]: moment/cumulant conversion, the product and
//!   anti-commutator formulas, quadratic forms and a brute-force moment
//!   oracle.
//! * [`series`]: truncated formal power series with composition,
//!   compositional inverse and square roots, and the generating-function
//!   identities for the counts `|Y_m|`.
//!
//! Everything numeric is generic over [`Scalar`]; the aliases below fix the
//! exact rational instantiation that the rest of the tooling uses.

pub mod cactus;
pub mod cumulant;
mod error;
pub mod nc;
mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{format_rational, integer, parse_rational, rational, Scalar};

pub use cactus::{BlockMultigraph, OrientedCactus};
pub use cumulant::{CumulantSpec, WeightMatrix, Word};
pub use nc::{Direction, Partition};
pub use series::TruncatedSeries;

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Cumulant specification with exact rational cumulants.
pub type RationalSpec = CumulantSpec<Rational>;
/// Symmetric weight matrix with exact rational entries.
pub type RationalWeights = WeightMatrix<Rational>;
/// Truncated power series over exact rationals.
pub type RationalSeries = TruncatedSeries<Rational>;
/// Truncated power series over `f64`.
pub type FloatSeries = TruncatedSeries<f64>;

/// Caps that keep Catalan-sized enumerations in check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest ground size `m` that `NC(m)` may be enumerated for.
    pub enumeration: usize,
    /// Highest order the brute-force oracle expands an anti-commutator to.
    pub oracle_anticommutator: usize,
    /// Highest order the brute-force oracle expands a quadratic form to.
    pub oracle_quadratic: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            enumeration: 16,
            oracle_anticommutator: 5,
            oracle_quadratic: 4,
        }
    }
}

impl Limits {
    pub fn check_enumeration(&self, m: usize) -> Result<()> {
        if m > self.enumeration {
            return Err(Error::ResourceLimit {
                what: "enumeration size",
                requested: m,
                cap: self.enumeration,
            });
        }
        Ok(())
    }
}
