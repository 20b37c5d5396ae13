use crate::error::{argument, Result};
use crate::nc::Partition;

/// Which way to apply the Kreweras complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

impl Partition {
    /// Kreweras complement `Kr(p)` (or `Kr⁻¹(p)`).
    ///
    /// Blocks are read as cycles of a permutation `P` running through each
    /// block in increasing order. With the long cycle `γ = (1 2 … n)`,
    /// `Kr(p)` is the cycle partition of `P⁻¹γ` and `Kr⁻¹(p)` that of `γP⁻¹`.
    pub fn kreweras(&self, direction: Direction) -> Result<Partition> {
        if !self.is_noncrossing() {
            return argument(format!("Kreweras complement of crossing partition {self}"));
        }
        let n = self.size();
        let mut inv = vec![0usize; n];
        for block in self.blocks() {
            for (i, &e) in block.iter().enumerate() {
                let next = block[(i + 1) % block.len()];
                inv[next - 1] = e - 1;
            }
        }
        let gamma = |i: usize| (i + 1) % n;
        let step = |i: usize| match direction {
            Direction::Forward => inv[gamma(i)],
            Direction::Inverse => gamma(inv[i]),
        };
        let mut labels = vec![usize::MAX; n];
        let mut count = 0;
        for start in 0..n {
            if labels[start] != usize::MAX {
                continue;
            }
            let mut i = start;
            while labels[i] == usize::MAX {
                labels[i] = count;
                i = step(i);
            }
            count += 1;
        }
        Ok(Partition::from_canonical_labels(&labels, count))
    }
}
