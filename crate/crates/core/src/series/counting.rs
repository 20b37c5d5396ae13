//! Generating functions `A(x) = Σ |Y_2n| x^n` and `B(x) = Σ |Y_{2n−1}| x^n`.

use serde::Serialize;

use crate::error::{argument, Result};
use crate::scalar::Scalar;
use crate::series::TruncatedSeries;

/// `(A, B)` to order `order` from the counting recursion.
///
/// With `α_0 = 1`, `Comp_k = [x^k] 1/(1 − B)` split into compositions with
/// an even (`Ev`) and odd (`Odd`) number of parts:
///
/// * `β_n = Σ_{t=1}^{n} α_{t−1} Comp_{n−t}`
/// * `Ev_n = Σ_r β_r Odd_{n−r}`, `Odd_n = β_n + Σ_r β_r Ev_{n−r}`
/// * `α_n = Ev_n + Σ_{j=1}^{n} β_j β_{n+1−j}`
pub fn y_series<T: Scalar>(order: usize) -> (TruncatedSeries<T>, TruncatedSeries<T>) {
    let mut alpha = vec![T::one()];
    let mut beta = vec![T::zero()];
    let mut even = vec![T::zero()];
    let mut odd = vec![T::zero()];
    let comp = |even: &[T], odd: &[T], k: usize| {
        if k == 0 {
            T::one()
        } else {
            even[k].clone() + odd[k].clone()
        }
    };
    for n in 1..=order {
        let b = (1..=n).fold(T::zero(), |acc, t| {
            acc + alpha[t - 1].clone() * comp(&even, &odd, n - t)
        });
        beta.push(b);
        let mut ev = T::zero();
        let mut od = beta[n].clone();
        for r in 1..n {
            ev = ev + beta[r].clone() * odd[n - r].clone();
            od = od + beta[r].clone() * even[n - r].clone();
        }
        even.push(ev.clone());
        odd.push(od);
        let pairs = (1..=n).fold(T::zero(), |acc, j| {
            acc + beta[j].clone() * beta[n + 1 - j].clone()
        });
        alpha.push(ev + pairs);
    }
    alpha[0] = T::zero();
    (
        TruncatedSeries::new(alpha).expect("non-empty"),
        TruncatedSeries::new(beta).expect("non-empty"),
    )
}

/// `|Y_m|` for `m = 1 … count` interleaved from `A` and `B`.
pub fn y_counts<T: Scalar>(count: usize) -> Vec<T> {
    let (a, b) = y_series::<T>(count.div_ceil(2));
    (1..=count)
        .map(|m| {
            if m % 2 == 0 {
                a.coeff(m / 2).clone()
            } else {
                b.coeff(m.div_ceil(2)).clone()
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "TruncatedSeries<T>: Serialize")]
pub struct EquationCheck<T> {
    pub name: &'static str,
    /// Highest power the residual is known to.
    pub order: usize,
    pub residual: TruncatedSeries<T>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound = "TruncatedSeries<T>: Serialize")]
pub struct FunctionalReport<T> {
    pub checks: Vec<EquationCheck<T>>,
}

impl<T> FunctionalReport<T> {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check<T: Scalar>(name: &'static str, residual: TruncatedSeries<T>) -> EquationCheck<T> {
    EquationCheck {
        name,
        order: residual.order(),
        passed: residual.is_zero(),
        residual,
    }
}

/// Residuals of the four functional equations relating `A` and `B`:
///
/// * `A − B²/(1 − B²) − B²/x` (known one order lower, because of `/x`)
/// * `B(1 − B) − (A + 1)x`
/// * `4A₁⁴x² + 7A₁³x − 4A₁²x − 2A₁² + A₁ + 1` with `A₁ = A + 1`
/// * `B(1 − 2B)(1 − B)(1 + B) − x`
pub fn check_functional_equations<T: Scalar>(
    a: &TruncatedSeries<T>,
    b: &TruncatedSeries<T>,
) -> Result<FunctionalReport<T>> {
    let order = a.order().min(b.order());
    if order == 0 {
        return argument("functional equations need series of order at least 1");
    }
    let (a, b) = (a.truncate(order), b.truncate(order));
    let one = TruncatedSeries::constant(T::one(), order);
    let x = TruncatedSeries::identity(order);
    let c = |v: i64| TruncatedSeries::constant(T::from_i64(v).expect("small integer"), order);

    let b2 = &b * &b;
    let first = {
        let rhs = &b2.div(&(&one - &b2))?.truncate(order - 1) + &b2.div_z()?;
        &a.truncate(order - 1) - &rhs
    };
    let second = &(&b * &(&one - &b)) - &(&(&a + &one) * &x);
    let a1 = &a + &one;
    let third = {
        let a1_2 = &a1 * &a1;
        let a1_3 = &a1_2 * &a1;
        let a1_4 = &a1_3 * &a1;
        let x2 = &x * &x;
        let mut sum = &(&c(4) * &a1_4) * &x2;
        sum = &sum + &(&(&c(7) * &a1_3) * &x);
        sum = &sum - &(&(&c(4) * &a1_2) * &x);
        sum = &sum - &(&c(2) * &a1_2);
        &(&sum + &a1) + &one
    };
    let fourth = {
        let product = &(&(&b * &(&one - &(&c(2) * &b))) * &(&one - &b)) * &(&one + &b);
        &product - &x
    };
    Ok(FunctionalReport {
        checks: vec![
            check("A = B^2/(1-B^2) + B^2/x", first),
            check("B = (A+1)x/(1-B)", second),
            check("quartic in A+1", third),
            check("B(1-2B)(1-B)(1+B) = x", fourth),
        ],
    })
}
