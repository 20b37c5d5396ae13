//! The block multigraph `G_π` of a partition of `[2n]`, its cactus structure
//! and canonical outercycles.

mod graph;
mod outercycle;

pub use graph::{build_graph, Bipartition, BlockMultigraph, CactusReport, MAX_CYCLE_RANK};
pub use outercycle::{
    canonical_outercycle, enumerate_oriented_cacti, enumerate_rigid_cacti, outercycle_orbit,
    CactusClass, Coloring, OrientedCactus, Signature,
};
