//! The classes `Y_m` (odd elements separated, even-only blocks of even size)
//! and `X_2n = Kr(Y_2n)`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{argument, Result};
use crate::nc::{enumerate_nc, Direction, Partition};
use crate::Limits;

/// The decomposition `σ = {B_1, B_3, …, E_1, …, E_r}` of a member of `Y_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YDecomposition {
    /// Block containing each odd element, keyed by that element.
    pub odd_blocks: BTreeMap<usize, Vec<usize>>,
    /// Blocks made only of even elements; each has even size.
    pub even_blocks: Vec<Vec<usize>>,
    /// `|σ| − ⌈m/2⌉`, equal to the number of even-only blocks.
    pub level: usize,
}

impl Partition {
    /// Returns the `Y_m` decomposition, or `None` when `self ∉ Y_m`.
    pub fn y_membership(&self) -> Result<Option<YDecomposition>> {
        if !self.is_noncrossing() {
            return argument(format!("Y membership of crossing partition {self}"));
        }
        Ok(self.y_decomposition())
    }

    /// Same as [`Partition::y_membership`] without the crossing check.
    pub(crate) fn y_decomposition(&self) -> Option<YDecomposition> {
        let mut odd_blocks = BTreeMap::new();
        let mut even_blocks = Vec::new();
        for block in self.blocks() {
            let mut odds = block.iter().filter(|e| *e % 2 == 1);
            match (odds.next(), odds.next()) {
                (Some(_), Some(_)) => return None,
                (Some(&o), None) => {
                    odd_blocks.insert(o, block.clone());
                }
                (None, _) => {
                    if block.len() % 2 == 1 {
                        return None;
                    }
                    even_blocks.push(block.clone());
                }
            }
        }
        let level = even_blocks.len();
        Some(YDecomposition {
            odd_blocks,
            even_blocks,
            level,
        })
    }

    /// `self ∈ X_2n`, decided as `Kr⁻¹(self) ∈ Y_2n`.
    pub fn x_membership(&self) -> Result<bool> {
        if !self.size().is_multiple_of(2) {
            return argument(format!(
                "X membership needs an even ground size, got {}",
                self.size()
            ));
        }
        let sigma = self.kreweras(Direction::Inverse)?;
        Ok(sigma.y_decomposition().is_some())
    }
}

/// All of `Y_m` with decompositions, filtered out of `NC(m)`.
pub fn enumerate_y(
    m: usize,
    limits: &Limits,
) -> Result<impl Iterator<Item = (Partition, YDecomposition)>> {
    Ok(enumerate_nc(m, limits)?.filter_map(|p| {
        let d = p.y_decomposition()?;
        Some((p, d))
    }))
}

/// Highest level that can occur in `Y_m`: even-only blocks have at least two
/// elements and there are `⌊m/2⌋` even elements.
pub fn max_level(m: usize) -> usize {
    (m / 2) / 2
}

/// `|Y_m^(r)|` for `r = 0, …, max_level(m)`, by enumeration.
pub fn level_counts(m: usize, limits: &Limits) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; max_level(m) + 1];
    for (_, d) in enumerate_y(m, limits)? {
        counts[d.level] += 1;
    }
    Ok(counts)
}

/// `q_p = #{σ ∈ Y_2n : σ restricted to the even elements equals p}`.
pub fn q_count(p: &Partition, limits: &Limits) -> Result<u64> {
    if !p.is_noncrossing() {
        return argument(format!("q_count of crossing partition {p}"));
    }
    let n = p.size();
    limits.check_enumeration(2 * n)?;
    let evens: Vec<usize> = (1..=n).map(|k| 2 * k).collect();
    let mut count = 0;
    for (sigma, _) in enumerate_y(2 * n, limits)? {
        if sigma.restrict(&evens)? == *p {
            count += 1;
        }
    }
    Ok(count)
}
