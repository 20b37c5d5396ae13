//! Brute-force cumulants of polynomial expressions in free variables.
//!
//! Only two facts are used: a word moment `φ(a_{w(1)} ⋯ a_{w(m)})` is the sum
//! of `κ_π` over non-crossing `π` whose blocks are monochromatic (mixed
//! cumulants of free variables vanish), and the moment/cumulant relation of
//! the resulting scalar sequence.

use std::collections::HashMap;

use crate::cumulant::moments::cumulants_from_moments;
use crate::cumulant::{CumulantSpec, WeightMatrix, Word};
use crate::error::{argument, Error, Result};
use crate::scalar::Scalar;
use crate::Limits;

#[derive(Clone, Debug, PartialEq)]
pub enum Expression<T> {
    /// `ab + ba`.
    Anticommutator(CumulantSpec<T>, CumulantSpec<T>),
    /// `ab`.
    Product(CumulantSpec<T>, CumulantSpec<T>),
    /// `Σ_{i,j} w_ij a_i a_j`.
    Quadratic(Vec<CumulantSpec<T>>, WeightMatrix<T>),
}

impl<T: Scalar> Expression<T> {
    fn specs(&self) -> Vec<CumulantSpec<T>> {
        match self {
            Self::Anticommutator(a, b) | Self::Product(a, b) => vec![a.clone(), b.clone()],
            Self::Quadratic(specs, _) => specs.clone(),
        }
    }

    fn cap(&self, limits: &Limits) -> usize {
        match self {
            Self::Quadratic(..) => limits.oracle_quadratic,
            _ => limits.oracle_anticommutator,
        }
    }

    /// The degree-2 terms `(i, j, w_ij)` of the expression.
    fn pairs(&self) -> Result<Vec<(usize, usize, T)>> {
        Ok(match self {
            Self::Anticommutator(..) => vec![(0, 1, T::one()), (1, 0, T::one())],
            Self::Product(..) => vec![(0, 1, T::one())],
            Self::Quadratic(specs, w) => {
                if specs.len() != w.size() {
                    return argument(format!(
                        "{} specs for a {}x{} weight matrix",
                        specs.len(),
                        w.size(),
                        w.size()
                    ));
                }
                let k = w.size();
                (0..k)
                    .flat_map(|i| (0..k).map(move |j| (i, j)))
                    .map(|(i, j)| (i, j, w.get(i, j).clone()))
                    .filter(|(_, _, x)| !x.is_zero())
                    .collect()
            }
        })
    }
}

/// Counts of non-crossing partitions compatible with a word, grouped by
/// the multiset of `(colour, block size)` they produce.
struct Histogram {
    k: usize,
    len: usize,
    counts: HashMap<Vec<u8>, u64>,
}

impl Histogram {
    fn key_index(&self, color: usize, size: usize) -> usize {
        color * (self.len + 1) + size
    }
}

struct Search<'a, T> {
    word: &'a [usize],
    tables: &'a [Vec<T>],
    colors: Vec<usize>,
    sizes: Vec<usize>,
    stack: Vec<usize>,
    hist: Histogram,
}

impl<T: Scalar> Search<'_, T> {
    fn closes_to_zero(&self, block: usize) -> bool {
        self.tables[self.colors[block]][self.sizes[block]].is_zero()
    }

    fn go(&mut self, i: usize) {
        if i == self.word.len() {
            if self.stack.iter().any(|&b| self.closes_to_zero(b)) {
                return;
            }
            let mut key = vec![0u8; self.hist.k * (self.hist.len + 1)];
            for (b, &c) in self.colors.iter().enumerate() {
                key[self.hist.key_index(c, self.sizes[b])] += 1;
            }
            *self.hist.counts.entry(key).or_insert(0) += 1;
            return;
        }
        let c = self.word[i];
        for s in 0..self.stack.len() {
            let b = self.stack[s];
            if self.colors[b] != c {
                continue;
            }
            // Joining b closes every block above it on the stack.
            if self.stack[s + 1..].iter().any(|&x| self.closes_to_zero(x)) {
                continue;
            }
            let saved: Vec<usize> = self.stack.split_off(s + 1);
            self.sizes[b] += 1;
            self.go(i + 1);
            self.sizes[b] -= 1;
            self.stack.extend(saved);
        }
        let b = self.colors.len();
        self.colors.push(c);
        self.sizes.push(1);
        self.stack.push(b);
        self.go(i + 1);
        self.stack.pop();
        self.sizes.pop();
        self.colors.pop();
    }
}

fn histogram<T: Scalar>(word: &[usize], tables: &[Vec<T>]) -> Histogram {
    let mut search = Search {
        word,
        tables,
        colors: Vec::new(),
        sizes: Vec::new(),
        stack: Vec::new(),
        hist: Histogram {
            k: tables.len(),
            len: word.len(),
            counts: HashMap::new(),
        },
    };
    search.go(0);
    search.hist
}

fn evaluate<T: Scalar>(key: &[u8], len: usize, tables: &[Vec<T>]) -> T {
    let mut value = T::one();
    for (idx, &count) in key.iter().enumerate() {
        let (color, size) = (idx / (len + 1), idx % (len + 1));
        for _ in 0..count {
            value = value * tables[color][size].clone();
        }
    }
    value
}

/// `φ(a_{w(1)} ⋯ a_{w(m)})` for free variables with the given cumulants.
pub fn word_moment<T: Scalar>(word: &Word, specs: &[CumulantSpec<T>]) -> Result<T> {
    if let Some(&c) = word.colors().iter().find(|&&c| c >= specs.len()) {
        return argument(format!("colour {c} has no cumulant spec"));
    }
    let tables: Vec<Vec<T>> = specs
        .iter()
        .map(|s| s.table(word.len()))
        .collect::<Result<_>>()?;
    let hist = histogram(word.colors(), &tables);
    Ok(hist.counts.iter().fold(T::zero(), |acc, (key, &n)| {
        acc + T::from_count(n) * evaluate(key, word.len(), &tables)
    }))
}

/// `φ(x^j)` for `j = 1 … order`.
pub fn oracle_moments<T: Scalar>(
    expr: &Expression<T>,
    order: usize,
    limits: &Limits,
) -> Result<Vec<T>> {
    let cap = expr.cap(limits);
    if order > cap {
        return Err(Error::ResourceLimit {
            what: "oracle order",
            requested: order,
            cap,
        });
    }
    let specs = expr.specs();
    let pairs = expr.pairs()?;
    let tables: Vec<Vec<T>> = specs
        .iter()
        .map(|s| s.table(2 * order))
        .collect::<Result<_>>()?;
    let mut moments = Vec::with_capacity(order);
    for j in 1..=order {
        // Coefficient of each monomial, summed over all words of x^j.
        let mut monomials: HashMap<Vec<u8>, T> = HashMap::new();
        let mut choice = vec![0usize; j];
        loop {
            let mut word = Vec::with_capacity(2 * j);
            let mut weight = T::one();
            for &c in &choice {
                let (a, b, w) = &pairs[c];
                word.extend([*a, *b]);
                weight = weight * w.clone();
            }
            for (key, n) in histogram(&word, &tables).counts {
                let slot = monomials.entry(key).or_insert_with(T::zero);
                *slot = slot.clone() + weight.clone() * T::from_count(n);
            }
            // Next choice sequence, odometer style.
            let Some(pos) = (0..j).rev().find(|&p| choice[p] + 1 < pairs.len()) else {
                break;
            };
            choice[pos] += 1;
            choice[pos + 1..].iter_mut().for_each(|c| *c = 0);
        }
        let moment = monomials.iter().fold(T::zero(), |acc, (key, coeff)| {
            acc + coeff.clone() * evaluate(key, 2 * j, &tables)
        });
        moments.push(moment);
    }
    Ok(moments)
}

/// `κ_1(x) … κ_order(x)` by inverting [`oracle_moments`].
pub fn oracle_cumulants<T: Scalar>(
    expr: &Expression<T>,
    order: usize,
    limits: &Limits,
) -> Result<Vec<T>> {
    Ok(cumulants_from_moments(&oracle_moments(
        expr, order, limits,
    )?))
}
