//! Moment/cumulant conversion for a single variable.
//!
//! With `M(z) = Σ_{n≥1} m_n z^n` the moment-cumulant relation reads
//! `m_n = Σ_{s=1}^{n} κ_s [z^{n−s}] (1 + M(z))^s`. The coefficient on the
//! right only involves `m_1 … m_{n−1}`, so either side can be solved for
//! order by order.

use crate::error::Result;
use crate::nc::enumerate_nc;
use crate::scalar::Scalar;
use crate::Limits;

/// `powers[s][d] = [z^d] (1 + M)^s`, filled one degree at a time.
struct Powers<T> {
    table: Vec<Vec<T>>,
    moments: Vec<T>,
}

impl<T: Scalar> Powers<T> {
    fn new(order: usize) -> Self {
        let mut table = vec![vec![T::zero(); order + 1]; order + 1];
        for row in &mut table {
            row[0] = T::one();
        }
        Self {
            table,
            moments: vec![T::one()],
        }
    }

    /// `Σ_{s=1}^{n} κ_s [z^{n−s}](1+M)^s` without the `s = n` term.
    fn lower_terms(&self, kappa: &[T], n: usize) -> T {
        (1..n).fold(T::zero(), |acc, s| {
            acc + kappa[s - 1].clone() * self.table[s][n - s].clone()
        })
    }

    /// Records `m_d` and extends every power to degree `d`.
    fn push(&mut self, m: T) {
        self.moments.push(m);
        let d = self.moments.len() - 1;
        for s in 1..self.table.len() {
            let value = (0..=d).fold(T::zero(), |acc, i| {
                acc + self.table[s - 1][d - i].clone() * self.moments[i].clone()
            });
            self.table[s][d] = value;
        }
    }
}

/// `m_1 … m_N` from `κ_1 … κ_N`.
pub fn moments_from_cumulants<T: Scalar>(kappa: &[T]) -> Vec<T> {
    let order = kappa.len();
    let mut powers = Powers::new(order);
    for n in 1..=order {
        let m = kappa[n - 1].clone() + powers.lower_terms(kappa, n);
        powers.push(m);
    }
    powers.moments.split_off(1)
}

/// `κ_1 … κ_N` from `m_1 … m_N`.
pub fn cumulants_from_moments<T: Scalar>(moments: &[T]) -> Vec<T> {
    let order = moments.len();
    let mut powers = Powers::new(order);
    let mut kappa = Vec::with_capacity(order);
    for n in 1..=order {
        let k = moments[n - 1].clone() - powers.lower_terms(&kappa, n);
        kappa.push(k);
        powers.push(moments[n - 1].clone());
    }
    kappa
}

/// `m_n = Σ_{π ∈ NC(n)} Π_{V ∈ π} κ_{|V|}` by direct enumeration.
pub fn moments_by_enumeration<T: Scalar>(kappa: &[T], limits: &Limits) -> Result<Vec<T>> {
    let mut out = Vec::with_capacity(kappa.len());
    for n in 1..=kappa.len() {
        let mut total = T::zero();
        for p in enumerate_nc(n, limits)? {
            total = total
                + p.blocks()
                    .iter()
                    .fold(T::one(), |acc, b| acc * kappa[b.len() - 1].clone());
        }
        out.push(total);
    }
    Ok(out)
}
