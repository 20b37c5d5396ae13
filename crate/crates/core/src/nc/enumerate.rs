use crate::error::{argument, Result};
use crate::nc::Partition;
use crate::Limits;

/// Streams `NC(m)`.
///
/// Elements are placed left to right. Each element either opens a new block
/// or joins one of the still-open blocks, which closes every block opened
/// after the one it joins; that is exactly the non-crossing condition. The
/// choices at each position are ordered "join the oldest open block" first
/// and "open a new block" last, and the stream visits choice sequences in
/// lexicographic order, so it starts with `1_m` and ends with `0_m`.
#[derive(Clone, Debug)]
pub struct NcPartitions {
    size: usize,
    // Open-block stack before each position, the choice made there, and the
    // number of blocks opened before it.
    stacks: Vec<Vec<usize>>,
    choices: Vec<usize>,
    opened: Vec<usize>,
    labels: Vec<usize>,
    final_blocks: usize,
    started: bool,
    done: bool,
}

impl NcPartitions {
    fn new(size: usize) -> Self {
        let mut it = Self {
            size,
            stacks: vec![Vec::new(); size],
            choices: vec![0; size],
            opened: vec![0; size],
            labels: vec![0; size],
            final_blocks: 0,
            started: false,
            done: false,
        };
        it.fill_from(0);
        it
    }

    /// Applies `choices[i]` at position `i`, returning the stack and block
    /// count for position `i + 1`.
    fn apply(&mut self, i: usize) -> (Vec<usize>, usize) {
        let mut stack = self.stacks[i].clone();
        let mut opened = self.opened[i];
        let c = self.choices[i];
        if c < stack.len() {
            self.labels[i] = stack[c];
            stack.truncate(c + 1);
        } else {
            self.labels[i] = opened;
            stack.push(opened);
            opened += 1;
        }
        (stack, opened)
    }

    /// Re-derives positions `from..` after `choices[from]` changed, resetting
    /// all later choices to their first option.
    fn fill_from(&mut self, from: usize) {
        for i in from..self.size {
            if i > from {
                self.choices[i] = 0;
            }
            let (stack, opened) = self.apply(i);
            if i + 1 < self.size {
                self.stacks[i + 1] = stack;
                self.opened[i + 1] = opened;
            } else {
                self.final_blocks = opened;
            }
        }
    }
}

impl Iterator for NcPartitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if self.started {
            // Deepest position that still has an untried option.
            let pos = (0..self.size)
                .rev()
                .find(|&i| self.choices[i] < self.stacks[i].len());
            match pos {
                Some(i) => {
                    self.choices[i] += 1;
                    self.fill_from(i);
                }
                None => {
                    self.done = true;
                    return None;
                }
            }
        }
        self.started = true;
        Some(Partition::from_canonical_labels(
            &self.labels,
            self.final_blocks,
        ))
    }
}

/// All of `NC(m)`, each partition exactly once; `C_m` items in total.
pub fn enumerate_nc(m: usize, limits: &Limits) -> Result<NcPartitions> {
    if m == 0 {
        return argument("enumerate_nc needs m >= 1");
    }
    limits.check_enumeration(m)?;
    Ok(NcPartitions::new(m))
}

/// The partitions in `NC(m)` whose blocks all have even size, by a pruned
/// depth-first search: a block may only be closed off with even size, and
/// the open odd blocks must still be fixable by the remaining elements.
pub fn enumerate_even_nc(m: usize, limits: &Limits) -> Result<Vec<Partition>> {
    if m == 0 {
        return argument("enumerate_even_nc needs m >= 1");
    }
    limits.check_enumeration(m)?;
    let mut out = Vec::new();
    let mut labels = vec![0; m];
    let mut sizes = Vec::new();
    let mut stack = Vec::new();
    even_dfs(0, m, &mut labels, &mut sizes, &mut stack, &mut out);
    Ok(out)
}

fn even_dfs(
    i: usize,
    m: usize,
    labels: &mut Vec<usize>,
    sizes: &mut Vec<usize>,
    stack: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let odd_open = stack.iter().filter(|&&b| sizes[b] % 2 == 1).count();
    if odd_open > m - i {
        return;
    }
    if i == m {
        out.push(Partition::from_canonical_labels(labels, sizes.len()));
        return;
    }
    for s in 0..stack.len() {
        if stack[s + 1..].iter().any(|&b| sizes[b] % 2 == 1) {
            continue;
        }
        let b = stack[s];
        let saved = stack.split_off(s + 1);
        labels[i] = b;
        sizes[b] += 1;
        even_dfs(i + 1, m, labels, sizes, stack, out);
        sizes[b] -= 1;
        stack.extend(saved);
    }
    let b = sizes.len();
    labels[i] = b;
    sizes.push(1);
    stack.push(b);
    even_dfs(i + 1, m, labels, sizes, stack, out);
    stack.pop();
    sizes.pop();
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts_and_order() {
        let limits = Limits::default();
        let counts: Vec<usize> = (1..=8)
            .map(|m| enumerate_nc(m, &limits).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 2, 5, 14, 42, 132, 429, 1430]);
        let all: Vec<Partition> = enumerate_nc(4, &limits).unwrap().collect();
        assert_eq!(all.first().unwrap(), &Partition::single_block(4).unwrap());
        assert_eq!(all.last().unwrap(), &Partition::singletons(4).unwrap());
        assert!(all.iter().all(Partition::is_noncrossing));
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn caps_and_empty() {
        assert!(enumerate_nc(0, &Limits::default()).is_err());
        let tight = Limits {
            enumeration: 3,
            ..Limits::default()
        };
        assert!(enumerate_nc(4, &tight).is_err());
    }

    #[test]
    fn even_blocks_match_filter() {
        let limits = Limits::default();
        for m in 1..=10 {
            let mut filtered: Vec<_> = enumerate_nc(m, &limits)
                .unwrap()
                .filter(|p| p.blocks().iter().all(|b| b.len() % 2 == 0))
                .collect();
            let mut direct = enumerate_even_nc(m, &limits).unwrap();
            filtered.sort();
            direct.sort();
            assert_eq!(direct, filtered, "m = {m}");
        }
        // Ternary Catalan numbers.
        assert_eq!(enumerate_even_nc(16, &limits).unwrap().len(), 43263);
    }
}
