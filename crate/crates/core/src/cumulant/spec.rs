use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::error::{argument, Error, Result};
use crate::scalar::{format_rational, parse_rational, Scalar};

/// What an explicit cumulant list does past its end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Padding {
    Zero,
    Error,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SpecKind<T> {
    /// `κ_2 = 1`, all other cumulants zero.
    Semicircular,
    /// Free Poisson with rate `λ`: every cumulant equals `λ`.
    FreePoisson(T),
    /// `κ_1, κ_2, …` listed explicitly.
    Explicit { values: Vec<T>, padding: Padding },
}

/// The free cumulant sequence of one variable.
#[derive(Clone, Debug, PartialEq)]
pub struct CumulantSpec<T> {
    pub kind: SpecKind<T>,
    pub name: String,
}

impl<T: Scalar> CumulantSpec<T> {
    pub fn semicircular() -> Self {
        Self {
            kind: SpecKind::Semicircular,
            name: "semicircular".into(),
        }
    }

    pub fn free_poisson(rate: T) -> Self {
        Self {
            name: format!("poisson:{rate:?}"),
            kind: SpecKind::FreePoisson(rate),
        }
    }

    /// `κ_1, κ_2, …` followed by zeros.
    pub fn explicit(values: Vec<T>) -> Self {
        Self::with_padding(values, Padding::Zero)
    }

    /// `κ_1, κ_2, …`; asking past the end is an error.
    pub fn strict(values: Vec<T>) -> Self {
        Self::with_padding(values, Padding::Error)
    }

    fn with_padding(values: Vec<T>, padding: Padding) -> Self {
        Self {
            name: format!("cumulants:{values:?}"),
            kind: SpecKind::Explicit { values, padding },
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `κ_j` for `j ≥ 1`.
    pub fn kappa(&self, j: usize) -> Result<T> {
        if j == 0 {
            return argument("cumulants are indexed from 1");
        }
        Ok(match &self.kind {
            SpecKind::Semicircular => {
                if j == 2 {
                    T::one()
                } else {
                    T::zero()
                }
            }
            SpecKind::FreePoisson(rate) => rate.clone(),
            SpecKind::Explicit { values, padding } => match values.get(j - 1) {
                Some(v) => v.clone(),
                None if *padding == Padding::Zero => T::zero(),
                None => {
                    return Err(Error::Order {
                        name: self.name.clone(),
                        order: j,
                    })
                }
            },
        })
    }

    /// `[0, κ_1, …, κ_order]`, so that `table[j] = κ_j`.
    pub fn table(&self, order: usize) -> Result<Vec<T>> {
        let mut table = Vec::with_capacity(order + 1);
        table.push(T::zero());
        for j in 1..=order {
            table.push(self.kappa(j)?);
        }
        Ok(table)
    }

    /// Cumulants of `t·a` up to `order`: `κ_j ↦ t^j κ_j`.
    pub fn scaled(&self, t: &T, order: usize) -> Result<Self> {
        let mut power = T::one();
        let mut values = Vec::with_capacity(order);
        for j in 1..=order {
            power = power * t.clone();
            values.push(power.clone() * self.kappa(j)?);
        }
        Ok(Self::strict(values))
    }

    /// All odd cumulants up to `order` vanish.
    pub fn is_even_up_to(&self, order: usize) -> Result<bool> {
        for j in (1..=order).step_by(2) {
            if !self.kappa(j)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for CumulantSpec<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SpecKind::Semicircular => write!(f, "semicircular"),
            SpecKind::FreePoisson(rate) => write!(f, "poisson:{}", format_rational(rate)),
            SpecKind::Explicit { values, .. } => {
                let items: Vec<String> = values.iter().map(format_rational).collect();
                write!(f, "cumulants:[{}]", items.join(","))
            }
        }
    }
}

/// Parses `semicircular`, `poisson:p/q` or `cumulants:[p/q, …]`.
impl FromStr for CumulantSpec<BigRational> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let spec = if s == "semicircular" {
            Self::semicircular()
        } else if let Some(rate) = s.strip_prefix("poisson:") {
            Self {
                kind: SpecKind::FreePoisson(parse_rational(rate)?),
                name: String::new(),
            }
        } else if let Some(list) = s.strip_prefix("cumulants:") {
            let inner = list
                .trim()
                .strip_prefix('[')
                .and_then(|l| l.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("expected cumulants:[...], got `{s}`")))?;
            let values = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(parse_rational)
                    .collect::<Result<_>>()?
            };
            Self::explicit(values)
        } else {
            return Err(Error::Parse(format!("unknown distribution spec `{s}`")));
        };
        let name = spec.to_string();
        Ok(spec.named(name))
    }
}

/// A symmetric `k × k` weight matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightMatrix<T> {
    entries: Vec<Vec<T>>,
}

impl<T: Scalar> WeightMatrix<T> {
    pub fn new(entries: Vec<Vec<T>>) -> Result<Self> {
        let k = entries.len();
        if k == 0 {
            return argument("weight matrix must be at least 1x1");
        }
        if let Some(row) = entries.iter().position(|r| r.len() != k) {
            return argument(format!(
                "weight matrix row {} has {} entries, expected {k}",
                row + 1,
                entries[row].len()
            ));
        }
        for i in 0..k {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return argument(format!(
                        "weight matrix is not symmetric at ({}, {})",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
        Ok(Self { entries })
    }

    /// `[[0, 1], [1, 0]]`, which turns `Σ w_ij a_i a_j` into `a_1 a_2 + a_2 a_1`.
    pub fn anticommutator() -> Self {
        Self {
            entries: vec![vec![T::zero(), T::one()], vec![T::one(), T::zero()]],
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Entry for 0-based indices.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.entries
    }
}

impl WeightMatrix<BigRational> {
    /// A JSON array of rows; entries are `"p/q"` strings or integers.
    pub fn from_json(s: &str) -> Result<Self> {
        let value: serde_json::Value =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("weights: {e}")))?;
        let rows = value
            .as_array()
            .ok_or_else(|| Error::Parse("weights must be a JSON array of rows".into()))?;
        let mut entries = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Parse("each weight row must be a JSON array".into()))?;
            let parsed = row
                .iter()
                .map(|v| match v {
                    serde_json::Value::String(s) => parse_rational(s),
                    serde_json::Value::Number(n) if n.is_i64() => parse_rational(&n.to_string()),
                    other => Err(Error::Parse(format!(
                        "weight entry {other} is not a rational"
                    ))),
                })
                .collect::<Result<Vec<_>>>()?;
            entries.push(parsed);
        }
        Self::new(entries)
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.entries
            .iter()
            .map(|row| row.iter().map(format_rational).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .into()
    }
}

/// A sequence of colours; colour `c` refers to `specs[c]` (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if colors.is_empty() {
            return argument("words are non-empty");
        }
        Ok(Self(colors))
    }

    pub fn colors(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{integer, rational};

    #[test]
    fn kinds() {
        let s = CumulantSpec::<BigRational>::semicircular();
        assert_eq!(
            s.table(4).unwrap(),
            vec![integer(0), integer(0), integer(1), integer(0), integer(0)]
        );
        let p = CumulantSpec::free_poisson(rational(3, 2));
        assert_eq!(p.kappa(7).unwrap(), rational(3, 2));
        let e = CumulantSpec::explicit(vec![integer(1), integer(2)]);
        assert_eq!(e.kappa(3).unwrap(), integer(0));
        let strict = CumulantSpec::strict(vec![integer(1), integer(2)]);
        assert!(matches!(
            strict.kappa(3),
            Err(Error::Order { order: 3, .. })
        ));
        assert!(e.kappa(0).is_err());
    }

    #[test]
    fn scaling_and_parity() {
        let e = CumulantSpec::explicit(vec![integer(1), integer(1), integer(1)]);
        let t = e.scaled(&integer(2), 3).unwrap();
        assert_eq!(
            t.table(3).unwrap()[1..],
            [integer(2), integer(4), integer(8)]
        );
        assert!(!e.is_even_up_to(4).unwrap());
        assert!(CumulantSpec::<BigRational>::semicircular()
            .is_even_up_to(9)
            .unwrap());
    }

    #[test]
    fn grammar_round_trip() {
        for text in [
            "semicircular",
            "poisson:1",
            "poisson:-2/3",
            "cumulants:[1,0,1/2]",
            "cumulants:[]",
        ] {
            let spec: CumulantSpec<BigRational> = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
            assert_eq!(spec.name, text);
        }
        let spaced: CumulantSpec<BigRational> = "cumulants:[ 1 , 2/4 ]".parse().unwrap();
        assert_eq!(spaced.to_string(), "cumulants:[1,1/2]");
        assert!("gaussian".parse::<CumulantSpec<BigRational>>().is_err());
        assert!("poisson:x".parse::<CumulantSpec<BigRational>>().is_err());
        assert!("cumulants:1,2"
            .parse::<CumulantSpec<BigRational>>()
            .is_err());
    }

    #[test]
    fn weights() {
        let w = WeightMatrix::from_json(r#"[["0","1/2"],["1/2", 3]]"#).unwrap();
        assert_eq!(*w.get(0, 1), rational(1, 2));
        assert_eq!(w.to_json().to_string(), r#"[["0","1/2"],["1/2","3"]]"#);
        assert!(WeightMatrix::from_json(r#"[["0","1"],["2","0"]]"#).is_err());
        assert!(WeightMatrix::from_json(r#"[["0","1"]]"#).is_err());
        assert!(WeightMatrix::<BigRational>::new(vec![]).is_err());
        assert_eq!(WeightMatrix::<BigRational>::anticommutator().size(), 2);
    }

    #[test]
    fn words() {
        assert!(Word::new(vec![]).is_err());
        assert_eq!(Word::new(vec![0, 1]).unwrap().len(), 2);
    }
}
