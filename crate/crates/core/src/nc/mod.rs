//! Partitions of `[m]`, the non-crossing lattice, Kreweras complementation
//! and the classes `Y_m`, `X_2n`.

mod classes;
mod enumerate;
mod kreweras;
mod partition;

pub use classes::{enumerate_y, level_counts, max_level, q_count, YDecomposition};
pub use enumerate::{enumerate_even_nc, enumerate_nc, NcPartitions};
pub use kreweras::Direction;
pub use partition::{Classification, Partition};

pub(crate) use partition::DisjointSets;
