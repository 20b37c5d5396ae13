use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{argument, Error, Result};

/// A set partition of `[m] = {1, …, m}` kept in canonical form: elements
/// ascending inside each block, blocks ordered by their minimum.
///
/// Equality, ordering and hashing all act on the canonical form, so two
/// values compare equal exactly when they describe the same partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    size: usize,
    blocks: Vec<Vec<usize>>,
}

/// The four independent shape predicates of [`Partition::classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    /// Every block has even cardinality.
    pub even: bool,
    /// Every block lies inside the odd or inside the even elements.
    pub parity_preserving: bool,
    /// Every block has exactly two elements.
    pub pairing: bool,
    /// Every block is a run of consecutive integers.
    pub interval: bool,
}

impl Partition {
    /// Validates and canonicalizes `blocks` as a partition of `[size]`.
    pub fn new(size: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if size == 0 {
            return argument("a partition needs a ground set of size at least 1");
        }
        let mut seen = vec![false; size];
        let mut blocks = blocks;
        for block in &mut blocks {
            if block.is_empty() {
                return argument("partition blocks must be non-empty");
            }
            block.sort_unstable();
            for &e in block.iter() {
                if e == 0 || e > size {
                    return argument(format!("element {e} is outside [1, {size}]"));
                }
                if seen[e - 1] {
                    return argument(format!("element {e} appears in more than one block"));
                }
                seen[e - 1] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return argument(format!(
                "element {} is not covered by any block",
                missing + 1
            ));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self { size, blocks })
    }

    /// Builds the partition whose blocks are the level sets of `labels`
    /// (`labels[i]` is the label of element `i + 1`; label values are arbitrary).
    pub fn from_labels<L: PartialEq + Copy>(labels: &[L]) -> Result<Self> {
        if labels.is_empty() {
            return argument("a partition needs a ground set of size at least 1");
        }
        let mut keys: Vec<L> = Vec::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, l) in labels.iter().enumerate() {
            match keys.iter().position(|k| k == l) {
                Some(b) => blocks[b].push(i + 1),
                None => {
                    keys.push(*l);
                    blocks.push(vec![i + 1]);
                }
            }
        }
        // First-appearance order is already canonical.
        Ok(Self {
            size: labels.len(),
            blocks,
        })
    }

    /// Fast path for labels that are already first-appearance indices `0, 1, 2, …`.
    pub(crate) fn from_canonical_labels(labels: &[usize], block_count: usize) -> Self {
        let mut blocks = vec![Vec::new(); block_count];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l].push(i + 1);
        }
        Self {
            size: labels.len(),
            blocks,
        }
    }

    /// `0_m`, all singletons.
    pub fn singletons(size: usize) -> Result<Self> {
        Self::new(size, (1..=size).map(|e| vec![e]).collect())
    }

    /// `1_m`, a single block.
    pub fn single_block(size: usize) -> Result<Self> {
        Self::new(size, vec![(1..=size).collect()])
    }

    /// `I_2n = {{1,2},{3,4},…,{2n−1,2n}}`.
    pub fn interval_pairing(n: usize) -> Result<Self> {
        if n == 0 {
            return argument("interval pairing needs n >= 1");
        }
        Self::new(2 * n, (1..=n).map(|k| vec![2 * k - 1, 2 * k]).collect())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block index (into [`Partition::blocks`]) of every element; entry `i`
    /// belongs to element `i + 1`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.size];
        for (b, block) in self.blocks.iter().enumerate() {
            for &e in block {
                labels[e - 1] = b;
            }
        }
        labels
    }

    /// Index of the block containing element `e` (1-based element).
    pub fn block_of(&self, e: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&e).is_ok())
    }

    /// True iff there is no `i < j < k < l` with `i, k` in one block and
    /// `j, l` in another.
    pub fn is_noncrossing(&self) -> bool {
        let labels = self.labels();
        let last: Vec<usize> = self.blocks.iter().map(|b| *b.last().unwrap()).collect();
        let mut opened = vec![false; self.blocks.len()];
        let mut stack: Vec<usize> = Vec::new();
        for (i, &b) in labels.iter().enumerate() {
            if opened[b] {
                if stack.last() != Some(&b) {
                    return false;
                }
            } else {
                opened[b] = true;
                stack.push(b);
            }
            if last[b] == i + 1 {
                stack.pop();
            }
        }
        true
    }

    /// `p|S`: intersect every block with `subset` and re-index the survivors
    /// as `1, …, |S|` preserving order.
    pub fn restrict(&self, subset: &[usize]) -> Result<Self> {
        if subset.is_empty() {
            return argument("restriction to an empty set");
        }
        if subset.windows(2).any(|w| w[0] >= w[1]) {
            return argument("restriction set must be strictly increasing");
        }
        if subset[0] == 0 || *subset.last().unwrap() > self.size {
            return argument(format!("restriction set is not inside [1, {}]", self.size));
        }
        let labels = self.labels();
        let restricted: Vec<usize> = subset.iter().map(|&e| labels[e - 1]).collect();
        Self::from_labels(&restricted)
    }

    /// `⟨s1, s2⟩`: `s1` on the odd positions of `[2n]`, `s2` on the even ones.
    /// The result may be crossing.
    pub fn interleave(odd: &Self, even: &Self) -> Result<Self> {
        if odd.size != even.size {
            return argument(format!(
                "interleave needs equal sizes, got {} and {}",
                odd.size, even.size
            ));
        }
        let shift = odd.block_count();
        let lo = odd.labels();
        let le = even.labels();
        let labels: Vec<usize> = (0..2 * odd.size)
            .map(|i| {
                if i % 2 == 0 {
                    lo[i / 2]
                } else {
                    shift + le[i / 2]
                }
            })
            .collect();
        Self::from_labels(&labels)
    }

    /// Join in the lattice of all partitions: connected components of the
    /// union of both block relations.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.size != other.size {
            return argument(format!(
                "join needs equal sizes, got {} and {}",
                self.size, other.size
            ));
        }
        let mut dsu = DisjointSets::new(self.size);
        for block in self.blocks.iter().chain(other.blocks.iter()) {
            for w in block.windows(2) {
                dsu.union(w[0] - 1, w[1] - 1);
            }
        }
        let labels: Vec<usize> = (0..self.size).map(|i| dsu.find(i)).collect();
        Self::from_labels(&labels)
    }

    /// `self ≤ other` in refinement order: every block of `other` is a union
    /// of blocks of `self`.
    pub fn refines(&self, other: &Self) -> bool {
        if self.size != other.size {
            return false;
        }
        let outer = other.labels();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&e| outer[e - 1] == outer[b[0] - 1]))
    }

    pub fn classify(&self) -> Classification {
        Classification {
            even: self.blocks.iter().all(|b| b.len() % 2 == 0),
            parity_preserving: self
                .blocks
                .iter()
                .all(|b| b.iter().all(|e| e % 2 == b[0] % 2)),
            pairing: self.blocks.iter().all(|b| b.len() == 2),
            interval: self
                .blocks
                .iter()
                .all(|b| b.windows(2).all(|w| w[1] == w[0] + 1)),
        }
    }

    /// Serializes as a JSON array of arrays.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.blocks).expect("blocks always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let blocks: Vec<Vec<usize>> =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_block_list(blocks)
    }

    fn from_block_list(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let size = blocks.iter().map(Vec::len).sum();
        Self::new(size, blocks)
    }
}

/// Canonical text form: blocks as space-separated sorted lists joined by `|`,
/// e.g. `1 8|2 6 7|3 4|5|9|10 12|11`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, e) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split('|')
            .map(|block| {
                block
                    .split_whitespace()
                    .map(|tok| {
                        tok.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("`{tok}` is not an element")))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::Parse(format!("empty block in `{s}`")));
        }
        Self::from_block_list(blocks)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<usize>>::deserialize(deserializer)?;
        Self::from_block_list(blocks).map_err(serde::de::Error::custom)
    }
}

/// Plain union-find with path halving.
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
