use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{argument, Error, Result};
use crate::nc::{DisjointSets, Partition};

/// Largest cycle-space dimension [`BlockMultigraph::simple_cycles`] will
/// enumerate (it walks all `2^d` cycle-space elements).
pub const MAX_CYCLE_RANK: usize = 24;

/// The graph `G_π` of a partition of `[2n]`: one vertex per block and, for
/// every `k`, an edge directed from the block of `2k − 1` to the block of
/// `2k`. Loops and parallel edges are kept.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockMultigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

/// The two sides of a bipartite graph; `first` holds the root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CactusReport {
    /// Every edge lies on at most one simple cycle.
    pub is_cactus: bool,
    /// Per edge: lies on some simple cycle.
    pub rigid: Vec<bool>,
    pub simple_cycle_count: usize,
}

impl BlockMultigraph {
    /// A graph on `vertex_count` vertices with the given directed edges.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges
            .iter()
            .find(|(u, v)| *u >= vertex_count || *v >= vertex_count)
        {
            return argument(format!(
                "edge ({u}, {v}) leaves the vertex range 0..{vertex_count}"
            ));
        }
        let mut degrees = vec![0; vertex_count];
        for &(u, v) in &edges {
            degrees[u] += 1;
            degrees[v] += 1;
        }
        Ok(Self {
            vertex_count,
            edges,
            degrees,
        })
    }

    /// `G_π`; vertex `i` is block `i` of `p` in canonical order.
    pub fn from_partition(p: &Partition) -> Result<Self> {
        if !p.size().is_multiple_of(2) {
            return argument(format!(
                "block graph needs an even ground size, got {}",
                p.size()
            ));
        }
        let labels = p.labels();
        let edges = labels.chunks(2).map(|pair| (pair[0], pair[1])).collect();
        Self::new(p.block_count(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degrees with loops counted twice.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut dsu = DisjointSets::new(self.vertex_count);
        let merges = self.edges.iter().filter(|&&(u, v)| dsu.union(u, v)).count();
        merges + 1 == self.vertex_count
    }

    fn require_connected(&self, what: &str) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            argument(format!("{what} needs a connected graph"))
        }
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, id));
            if u != v {
                adj[v].push((u, id));
            }
        }
        adj
    }

    /// Breadth-first 2-colouring from `root`; `None` when an odd cycle
    /// (loops included) exists.
    pub fn bipartition(&self, root: usize) -> Result<Option<Bipartition>> {
        if root >= self.vertex_count {
            return argument(format!("root {root} is not a vertex"));
        }
        self.require_connected("bipartition")?;
        let adj = self.adjacency();
        let mut side = vec![None; self.vertex_count];
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &(v, _) in &adj[u] {
                match side[v] {
                    None => {
                        side[v] = Some(!su);
                        queue.push_back(v);
                    }
                    Some(sv) if sv == su => return Ok(None),
                    Some(_) => {}
                }
            }
        }
        let (first, second) = (0..self.vertex_count).partition(|&v| side[v] == Some(false));
        Ok(Some(Bipartition { first, second }))
    }

    /// Every simple cycle, each given as the sorted list of its edge ids.
    /// Loops are cycles of length 1 and a pair of parallel edges is a cycle
    /// of length 2.
    ///
    /// Walks the whole cycle space: a cycle-space element is a simple cycle
    /// iff all its vertex degrees are 2 and its edges form one component.
    pub fn simple_cycles(&self) -> Result<Vec<Vec<usize>>> {
        self.require_connected("cycle enumeration")?;
        let m = self.edges.len();
        if m > 128 {
            return Err(Error::ResourceLimit {
                what: "edge count",
                requested: m,
                cap: 128,
            });
        }
        // Spanning tree by BFS from vertex 0; remember each vertex's tree path
        // to the root as an edge bitset.
        let adj = self.adjacency();
        let mut to_root: Vec<Option<u128>> = vec![None; self.vertex_count];
        let mut tree_edge = vec![false; m];
        to_root[0] = Some(0);
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &(v, id) in &adj[u] {
                if to_root[v].is_none() {
                    to_root[v] = Some(to_root[u].unwrap() | 1u128 << id);
                    tree_edge[id] = true;
                    queue.push_back(v);
                }
            }
        }
        let basis: Vec<u128> = (0..m)
            .filter(|&id| !tree_edge[id])
            .map(|id| {
                let (u, v) = self.edges[id];
                (1u128 << id) ^ to_root[u].unwrap() ^ to_root[v].unwrap()
            })
            .collect();
        if basis.len() > MAX_CYCLE_RANK {
            return Err(Error::ResourceLimit {
                what: "cycle space dimension",
                requested: basis.len(),
                cap: MAX_CYCLE_RANK,
            });
        }
        let mut cycles = Vec::new();
        // Gray-code walk over all non-empty combinations.
        let mut current = 0u128;
        for step in 1u64..(1u64 << basis.len()) {
            current ^= basis[step.trailing_zeros() as usize];
            if self.is_simple_cycle(current) {
                cycles.push((0..m).filter(|&id| current >> id & 1 == 1).collect());
            }
        }
        cycles.sort();
        Ok(cycles)
    }

    fn is_simple_cycle(&self, set: u128) -> bool {
        let mut degree = vec![0usize; self.vertex_count];
        let mut dsu = DisjointSets::new(self.vertex_count);
        let mut first = None;
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            if set >> id & 1 == 1 {
                degree[u] += 1;
                degree[v] += 1;
                dsu.union(u, v);
                first.get_or_insert(u);
            }
        }
        let Some(root) = first else { return false };
        let root = dsu.find(root);
        (0..self.vertex_count).all(|v| match degree[v] {
            0 => true,
            2 => dsu.find(v) == root,
            _ => false,
        })
    }

    /// Cactus test and rigid/flexible edge flags.
    pub fn validate_cactus(&self) -> Result<CactusReport> {
        let cycles = self.simple_cycles()?;
        let mut hits = vec![0usize; self.edges.len()];
        for cycle in &cycles {
            for &id in cycle {
                hits[id] += 1;
            }
        }
        Ok(CactusReport {
            is_cactus: hits.iter().all(|&h| h <= 1),
            rigid: hits.iter().map(|&h| h > 0).collect(),
            simple_cycle_count: cycles.len(),
        })
    }
}

/// `G_π` for a partition of `[2n]`.
pub fn build_graph(p: &Partition) -> Result<BlockMultigraph> {
    BlockMultigraph::from_partition(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> BlockMultigraph {
        build_graph(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn twelve_element_example_graph() {
        let graph = g("1 7|2 4 5|3|6|8 9 12|10 11");
        assert_eq!(graph.vertex_count(), 6);
        assert_eq!(
            graph.edges(),
            &[(0, 1), (2, 1), (1, 3), (0, 4), (4, 5), (5, 4)]
        );
        assert_eq!(graph.degrees(), &[2, 3, 1, 1, 3, 2]);
        assert!(graph.is_connected());
        let bp = graph.bipartition(0).unwrap().unwrap();
        assert_eq!(bp.first, vec![0, 2, 3, 5]);
        assert_eq!(bp.second, vec![1, 4]);
        let report = graph.validate_cactus().unwrap();
        assert!(report.is_cactus);
        assert_eq!(report.rigid, vec![false, false, false, false, true, true]);
        assert_eq!(report.simple_cycle_count, 1);
    }

    #[test]
    fn single_loop() {
        let graph = g("1 2");
        assert_eq!(graph.vertex_count(), 1);
        assert_eq!(graph.edges(), &[(0, 0)]);
        assert_eq!(graph.degrees(), &[2]);
        assert!(graph.bipartition(0).unwrap().is_none());
        let report = graph.validate_cactus().unwrap();
        assert_eq!(report.rigid, vec![true]);
        assert_eq!(report.simple_cycle_count, 1);
    }

    #[test]
    fn singletons_give_a_matching() {
        let graph = build_graph(&Partition::singletons(6).unwrap()).unwrap();
        assert_eq!(graph.vertex_count(), 6);
        assert_eq!(graph.edges(), &[(0, 1), (2, 3), (4, 5)]);
        assert!(!graph.is_connected());
        assert!(graph.bipartition(0).is_err());
        assert!(graph.validate_cactus().is_err());
        assert!(!g("1|2|3|4").is_connected());
    }

    #[test]
    fn double_edge_is_bipartite_two_cycle() {
        let graph = BlockMultigraph::new(2, vec![(0, 1), (1, 0)]).unwrap();
        let bp = graph.bipartition(0).unwrap().unwrap();
        assert_eq!((bp.first, bp.second), (vec![0], vec![1]));
        let report = graph.validate_cactus().unwrap();
        assert_eq!(report.rigid, vec![true, true]);
        assert_eq!(report.simple_cycle_count, 1);
    }

    #[test]
    fn trees_are_all_flexible() {
        let tree = BlockMultigraph::new(5, vec![(0, 1), (1, 2), (1, 3), (0, 4)]).unwrap();
        let report = tree.validate_cactus().unwrap();
        assert!(report.is_cactus);
        assert!(report.rigid.iter().all(|r| !r));
        assert_eq!(report.simple_cycle_count, 0);
    }

    #[test]
    fn non_cactus_detected() {
        // K4 minus nothing: every edge on several triangles.
        let k4 =
            BlockMultigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let report = k4.validate_cactus().unwrap();
        assert!(!report.is_cactus);
        assert_eq!(report.simple_cycle_count, 7);
        // Theta graph: three parallel edges give three 2-cycles.
        let theta = BlockMultigraph::new(2, vec![(0, 1), (0, 1), (0, 1)]).unwrap();
        let report = theta.validate_cactus().unwrap();
        assert!(!report.is_cactus);
        assert_eq!(report.simple_cycle_count, 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(BlockMultigraph::new(2, vec![(0, 2)]).is_err());
        assert!(build_graph(&"1 2 3".parse().unwrap()).is_err());
        assert!(g("1 2").bipartition(1).is_err());
    }
}
