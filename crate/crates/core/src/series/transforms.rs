//! Moment series, R-transform and Cauchy transform of `ν`, the law of
//! `ab + ba` for free Poisson `a`, `b` of rate 1.

use crate::cumulant::{moments_from_cumulants, CumulantSpec};
use crate::error::{argument, Result};
use crate::scalar::Scalar;
use crate::series::{y_series, TruncatedSeries};

fn int<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("small integer")
}

/// `R(z) = Σ κ_n z^n` and `M(z) = Σ m_n z^n` to a common order.
#[derive(Clone, Debug, PartialEq)]
pub struct RmTransfer<T> {
    pub r: TruncatedSeries<T>,
    pub m: TruncatedSeries<T>,
}

impl<T: Scalar> RmTransfer<T> {
    /// From `κ_1 … κ_N`.
    pub fn from_cumulants(kappa: &[T]) -> Self {
        let order = kappa.len();
        let mut r = vec![T::zero()];
        r.extend(kappa.iter().cloned());
        let mut m = vec![T::zero()];
        m.extend(moments_from_cumulants(kappa));
        Self {
            r: TruncatedSeries::new(r).expect("non-empty"),
            m: TruncatedSeries::from_polynomial(&m, order),
        }
    }

    /// `M^{<−1>}(z) − R^{<−1>}(z)/(1 + z)`, which vanishes identically.
    pub fn inverse_relation_residual(&self) -> Result<TruncatedSeries<T>> {
        let order = self.r.order();
        let one_plus_z = TruncatedSeries::from_polynomial(&[T::one(), T::one()], order);
        let lhs = self.m.comp_inverse()?;
        let rhs = self.r.comp_inverse()?.div(&one_plus_z)?;
        Ok(&lhs - &rhs)
    }
}

/// [`RmTransfer::from_cumulants`] for `κ_1 … κ_order` of a spec.
pub fn r_m_transfer<T: Scalar>(spec: &CumulantSpec<T>, order: usize) -> Result<RmTransfer<T>> {
    let table = spec.table(order)?;
    Ok(RmTransfer::from_cumulants(&table[1..]))
}

/// `R_ν = 2A` and the matching moment series, to `order`.
pub fn anticommutator_poisson_series<T: Scalar>(order: usize) -> RmTransfer<T> {
    let (a, _) = y_series::<T>(order);
    let kappa: Vec<T> = a.coefficients()[1..]
        .iter()
        .map(|c| c.clone() + c.clone())
        .collect();
    RmTransfer::from_cumulants(&kappa)
}

/// Taylor coefficients of
/// `(−7z − 6 + 3√((z + 2)(9z + 2))) / (4(z + 2)²(z + 1))` to `order`.
pub fn minverse_closed_form<T: Scalar>(order: usize) -> Result<TruncatedSeries<T>> {
    if order == 0 {
        return argument("closed form needs order at least 1");
    }
    let radicand = TruncatedSeries::from_polynomial(&[int(4), int(20), int(9)], order);
    let numerator = &TruncatedSeries::from_polynomial(&[int(-6), int(-7)], order)
        + &radicand.sqrt()?.scale(&int(3));
    // 4(z + 2)²(z + 1) = 4z³ + 20z² + 32z + 16
    let denominator = TruncatedSeries::from_polynomial(&[int(16), int(32), int(20), int(4)], order);
    numerator.div(&denominator)
}

/// Residual of
/// `2z⁴G⁶ + 8z³G⁵ + 12z²G⁴ + 8zG³ + 2G² + 7z³G⁴ + 13z²G³ + 5zG² − G
///  − 4z²G² − 4zG + 8` at `G = Σ_{n≥0} m_n z^{−(n+1)}`, as a series in
/// `w = 1/z`.
///
/// Writing `G = w H(w)` with `H = 1 + Σ m_n w^n`, a term `c z^a G^b`
/// becomes `c w^{b−a} H^b`, and `b ≥ a` in every term, so the residual is
/// an ordinary power series in `w`, known to order `N` from `m_1 … m_N`.
pub fn cauchy_polynomial_residual<T: Scalar>(moments: &[T]) -> Result<TruncatedSeries<T>> {
    if moments.len() < 2 {
        return argument("Cauchy residual needs at least two moments");
    }
    let order = moments.len();
    let mut h = vec![T::one()];
    h.extend(moments.iter().cloned());
    let h = TruncatedSeries::new(h)?;
    let powers: Vec<TruncatedSeries<T>> = (0..=6).map(|b| h.pow(b)).collect();
    // (coefficient, power of z, power of G)
    let terms: [(i64, u32, u32); 12] = [
        (2, 4, 6),
        (8, 3, 5),
        (12, 2, 4),
        (8, 1, 3),
        (2, 0, 2),
        (7, 3, 4),
        (13, 2, 3),
        (5, 1, 2),
        (-1, 0, 1),
        (-4, 2, 2),
        (-4, 1, 1),
        (8, 0, 0),
    ];
    let mut residual = TruncatedSeries::zero(order);
    for (c, a, b) in terms {
        let mut term = powers[b as usize].scale(&int(c));
        for _ in a..b {
            term = term.mul_z();
        }
        residual = &residual + &term.truncate(order);
    }
    Ok(residual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{integer, rational};
    use num_rational::BigRational;

    type S = TruncatedSeries<BigRational>;

    #[test]
    fn closed_form_head() {
        let f: S = minverse_closed_form(4).unwrap();
        assert_eq!(*f.coeff(0), integer(0));
        assert_eq!(*f.coeff(1), rational(1, 2));
        assert_eq!(*f.coeff(2), rational(-7, 4));
    }

    #[test]
    fn closed_form_inverts_moments() {
        let nu = anticommutator_poisson_series::<BigRational>(9);
        assert_eq!(
            nu.m.coefficients()[1..6],
            [2, 14, 120, 1182, 12586].map(integer)
        );
        let f = minverse_closed_form(9).unwrap();
        assert_eq!(nu.m.compose(&f).unwrap(), S::identity(9));
        assert!(nu.inverse_relation_residual().unwrap().is_zero());
    }

    #[test]
    fn semicircle_transfer() {
        let t = r_m_transfer(&CumulantSpec::<BigRational>::semicircular(), 6).unwrap();
        assert_eq!(t.r.coefficients(), [0, 0, 1, 0, 0, 0, 0].map(integer));
        assert_eq!(t.m.coefficients(), [0, 0, 1, 0, 2, 0, 5].map(integer));
    }

    #[test]
    fn cauchy_residual() {
        let nu = anticommutator_poisson_series::<BigRational>(8);
        let m = &nu.m.coefficients()[1..];
        let r = cauchy_polynomial_residual(m).unwrap();
        assert_eq!(r.order(), 8);
        assert!(r.is_zero(), "{r:?}");
        let mut bad = m.to_vec();
        bad[1] = integer(15);
        assert!(!cauchy_polynomial_residual(&bad).unwrap().is_zero());
        assert!(cauchy_polynomial_residual(&m[..1]).is_err());
    }
}
