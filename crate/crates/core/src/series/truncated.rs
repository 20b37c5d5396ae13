use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::error::{argument, Result};
use crate::scalar::{format_rational, Scalar};

/// `c_0 + c_1 z + … + c_N z^N + O(z^{N+1})`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedSeries<T> {
    /// Series of order `coeffs.len() − 1`; at least one coefficient.
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return argument("a truncated series needs at least c_0");
        }
        Ok(Self { coeffs })
    }

    /// `Σ c_i z^i` padded with zeros (or cut) to `order`.
    pub fn from_polynomial(poly: &[T], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|i| poly.get(i).cloned().unwrap_or_else(T::zero))
            .collect();
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![T::zero(); order + 1],
        }
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::from_polynomial(&[c], order)
    }

    /// The series `z`.
    pub fn identity(order: usize) -> Self {
        Self::from_polynomial(&[T::zero(), T::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Lowest index with a non-zero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_polynomial(&self.coeffs, order.min(self.order()))
    }

    pub fn scale(&self, t: &T) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.clone() * t.clone()).collect(),
        }
    }

    /// `z · f`, gaining one order.
    pub fn mul_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `f / z`, losing one order; needs `c_0 = 0` and order ≥ 1.
    pub fn div_z(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return argument(format!(
                "dividing by z needs c_0 = 0, found {:?}",
                self.coeffs[0]
            ));
        }
        if self.order() == 0 {
            return argument("dividing an order-0 series by z leaves nothing");
        }
        Ok(Self {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(T::one(), self.order()), |acc, _| &acc * self)
    }

    /// `1 / f`; needs `c_0 ≠ 0`.
    pub fn recip(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return argument("reciprocal needs c_0 ≠ 0, found c_0 = 0");
        }
        let n = self.order();
        let mut out: Vec<T> = Vec::with_capacity(n + 1);
        out.push(T::one() / self.coeffs[0].clone());
        for k in 1..=n {
            let s = (1..=k).fold(T::zero(), |acc, i| {
                acc + self.coeffs[i].clone() * out[k - i].clone()
            });
            out.push(-(s * out[0].clone()));
        }
        Ok(Self { coeffs: out })
    }

    /// `self / divisor`; needs divisor `c_0 ≠ 0`.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        if divisor.coeffs[0].is_zero() {
            return argument("division needs divisor c_0 ≠ 0, found c_0 = 0");
        }
        Ok(self * &divisor.recip()?)
    }

    /// `f(g(z))`; needs `g_0 = 0`.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return argument(format!(
                "composition needs inner c_0 = 0, found {:?}",
                inner.coeffs[0]
            ));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for i in (0..order).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[i].clone();
        }
        Ok(acc)
    }

    /// `g` with `f(g(z)) = z`; needs `c_0 = 0` and `c_1 ≠ 0`.
    ///
    /// Solved one coefficient at a time: `[z^n] f(g) = f_1 g_n + (terms in
    /// g_1 … g_{n−1})`.
    pub fn comp_inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return argument(format!(
                "compositional inverse needs c_0 = 0, found {:?}",
                self.coeffs[0]
            ));
        }
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        if self.coeffs[1].is_zero() {
            return argument("compositional inverse needs c_1 ≠ 0, found c_1 = 0");
        }
        let f1 = self.coeffs[1].clone();
        let mut g = Self::zero(n);
        g.coeffs[1] = T::one() / f1.clone();
        for k in 2..=n {
            let partial = self.compose(&g)?;
            g.coeffs[k] = -(partial.coeffs[k].clone() / f1.clone());
        }
        Ok(g)
    }

    /// Square root with positive constant term; needs `c_0` to be a
    /// non-zero square in the scalar domain.
    pub fn sqrt(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return argument("square root needs c_0 ≠ 0, found c_0 = 0");
        }
        let Some(s0) = c0.exact_sqrt() else {
            return argument(format!(
                "square root needs c_0 to be a square, found {c0:?}"
            ));
        };
        let two_s0 = s0.clone() + s0.clone();
        let mut out = vec![s0];
        for k in 1..=self.order() {
            let cross = (1..k).fold(T::zero(), |acc, i| {
                acc + out[i].clone() * out[k - i].clone()
            });
            out.push((self.coeffs[k].clone() - cross) / two_s0.clone());
        }
        Ok(Self { coeffs: out })
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order)
                .map(|i| f(&self.coeffs[i], &other.coeffs[i]))
                .collect(),
        }
    }
}

impl<T: Scalar> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        self.zip_with(rhs, |a, b| a.clone() + b.clone())
    }
}

impl<T: Scalar> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        self.zip_with(rhs, |a, b| a.clone() - b.clone())
    }
}

impl<T: Scalar> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| {
                (0..=k).fold(T::zero(), |acc, i| {
                    acc + self.coeffs[i].clone() * rhs.coeffs[k - i].clone()
                })
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

impl<T: Scalar> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr for TruncatedSeries<T> {
            type Output = TruncatedSeries<T>;
            fn $m(self, rhs: Self) -> TruncatedSeries<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl TruncatedSeries<BigRational> {
    /// Coefficients as `"p/q"` strings, index = power.
    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(format_rational).collect()
    }
}

impl Serialize for TruncatedSeries<BigRational> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{integer, rational};

    type S = TruncatedSeries<BigRational>;

    fn s(v: &[i64]) -> S {
        S::new(v.iter().map(|&x| integer(x)).collect()).unwrap()
    }

    #[test]
    fn arithmetic_keeps_minimum_order() {
        let a = s(&[1, 2, 3]);
        let b = s(&[0, 1]);
        assert_eq!(&a + &b, s(&[1, 3]));
        assert_eq!(&a * &a, s(&[1, 4, 10]));
        assert_eq!(-&b, s(&[0, -1]));
        assert_eq!(a.clone() - a.clone(), s(&[0, 0, 0]));
        assert_eq!(b.mul_z(), s(&[0, 0, 1]));
        assert_eq!(s(&[0, 5, 6]).div_z().unwrap(), s(&[5, 6]));
        assert!(a.div_z().is_err());
    }

    #[test]
    fn division() {
        let one_minus_z = s(&[1, -1, 0, 0, 0]);
        assert_eq!(one_minus_z.recip().unwrap(), s(&[1, 1, 1, 1, 1]));
        let q = s(&[2, 3, 1, 0]).div(&s(&[1, 1, 0, 0])).unwrap();
        assert_eq!(q, s(&[2, 1, 0, 0]));
        assert!(s(&[1, 1]).div(&s(&[0, 1])).is_err());
    }

    #[test]
    fn composition() {
        let f = s(&[3, 1, 1, 0]);
        assert_eq!(f.compose(&S::zero(3)).unwrap(), s(&[3, 0, 0, 0]));
        // (1 + z)^2 with z -> 2z
        assert_eq!(
            s(&[1, 2, 1]).compose(&s(&[0, 2, 0])).unwrap(),
            s(&[1, 4, 4])
        );
        assert!(f.compose(&s(&[1, 1])).is_err());
    }

    #[test]
    fn inverse_of_moment_series_head() {
        let m = s(&[0, 2, 14, 120, 1182]);
        let g = m.comp_inverse().unwrap();
        assert_eq!(*g.coeff(1), rational(1, 2));
        assert_eq!(*g.coeff(2), rational(-7, 4));
        assert_eq!(m.compose(&g).unwrap(), S::identity(4));
        assert_eq!(g.compose(&m).unwrap(), S::identity(4));
        assert!(s(&[1, 1]).comp_inverse().is_err());
        assert!(s(&[0, 0, 1]).comp_inverse().is_err());
    }

    #[test]
    fn square_root() {
        let f = s(&[4, 20, 9, 0, 0]);
        let r = f.sqrt().unwrap();
        assert_eq!(r.coefficients()[..3], [integer(2), integer(5), integer(-4)]);
        assert_eq!(&r * &r, f);
        assert!(s(&[2, 1]).sqrt().is_err());
        assert!(s(&[-4, 1]).sqrt().is_err());
        assert!(s(&[0, 1]).sqrt().is_err());
    }

    #[test]
    fn json() {
        let f = S::new(vec![rational(1, 2), integer(-3)]).unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"["1/2","-3"]"#);
        assert!(S::new(vec![]).is_err());
    }

    #[test]
    fn floats_work_too() {
        let f = TruncatedSeries::<f64>::new(vec![0.0, 1.0, 1.0]).unwrap();
        let g = f.comp_inverse().unwrap();
        assert!((g.coeff(2) + 1.0).abs() < 1e-12);
    }
}
