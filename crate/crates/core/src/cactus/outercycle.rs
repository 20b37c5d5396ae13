use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::cactus::graph::BlockMultigraph;
use crate::error::{argument, Result};
use crate::nc::{enumerate_even_nc, enumerate_nc, Partition};
use crate::Limits;

/// The outercycle `(v_1, e_1, v_2, e_2, …)` as `(vertex, edge)` pairs, both
/// renumbered from 1 in order of first appearance.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Signature(pub Vec<(usize, usize)>);

impl Signature {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.0.iter().map(|&(v, _)| v).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.0.iter().map(|&(_, e)| e).max().unwrap_or(0)
    }
}

/// A vertex colouring with colours `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Coloring(Vec<usize>);

impl Coloring {
    pub fn new(colors: Vec<usize>, k: usize) -> Result<Self> {
        if let Some(c) = colors.iter().find(|&&c| c == 0 || c > k) {
            return argument(format!("colour {c} outside 1..={k}"));
        }
        Ok(Self(colors))
    }

    pub fn colors(&self) -> &[usize] {
        &self.0
    }

    /// Colour of the 1-based vertex `v`.
    pub fn color(&self, v: usize) -> usize {
        self.0[v - 1]
    }

    /// All `k^vertices` colourings in lexicographic order.
    pub fn all(vertices: usize, k: usize) -> impl Iterator<Item = Coloring> {
        let total = if k == 0 && vertices > 0 {
            0
        } else {
            k.pow(vertices as u32)
        };
        (0..total).map(move |mut code| {
            let mut colors = vec![0; vertices];
            for slot in colors.iter_mut().rev() {
                *slot = code % k + 1;
                code /= k;
            }
            Coloring(colors)
        })
    }
}

/// A cactus together with an outercycle, in canonical first-visit form.
///
/// Vertices and edges are numbered from 1 in the order the outercycle first
/// reaches them; `rigid`, `degrees` and `coloring` are indexed by those ids
/// minus one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedCactus {
    pub signature: Signature,
    pub rigid: Vec<bool>,
    pub f_c: usize,
    pub first_edge_rigid: bool,
    /// `(V′, V″)` with vertex 1 in `V′`.
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    pub coloring: Option<Coloring>,
    pub degrees: Vec<usize>,
}

impl OrientedCactus {
    pub fn vertex_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rigid.len()
    }

    pub fn flexible_count(&self) -> usize {
        self.rigid.iter().filter(|r| !**r).count()
    }

    /// `2 f_C + 1` when the first edge is flexible, else `2 f_C`.
    pub fn g_exponent(&self) -> usize {
        if self.first_edge_rigid {
            2 * self.f_c
        } else {
            2 * self.f_c + 1
        }
    }

    /// Undirected endpoints of every edge, read off the first traversal.
    pub fn edge_endpoints(&self) -> Vec<(usize, usize)> {
        let sig = &self.signature.0;
        let mut ends = vec![None; self.edge_count()];
        for (i, &(v, e)) in sig.iter().enumerate() {
            let next = sig[(i + 1) % sig.len()].0;
            ends[e - 1].get_or_insert((v, next));
        }
        ends.into_iter().map(Option::unwrap).collect()
    }

    /// Same cactus carrying the given colouring.
    pub fn with_coloring(&self, coloring: Coloring) -> Result<Self> {
        if coloring.colors().len() != self.vertex_count() {
            return argument(format!(
                "colouring has {} entries for {} vertices",
                coloring.colors().len(),
                self.vertex_count()
            ));
        }
        Ok(Self {
            coloring: Some(coloring),
            ..self.clone()
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("cactus serialises")
    }
}

impl Serialize for OrientedCactus {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("signature", &self.signature)?;
        map.serialize_entry("rigid", &self.rigid)?;
        map.serialize_entry("fC", &self.f_c)?;
        map.serialize_entry("bipartition", &self.bipartition)?;
        map.serialize_entry("degrees", &self.degrees)?;
        if let Some(c) = &self.coloring {
            map.serialize_entry("coloring", c)?;
        }
        map.end()
    }
}

fn connected_graph(p: &Partition) -> Result<BlockMultigraph> {
    let graph = BlockMultigraph::from_partition(p)?;
    if !graph.is_connected() {
        return argument(format!("graph of {p} is disconnected"));
    }
    Ok(graph)
}

/// Orbit of 1 under `S_π ∘ τ`, as 1-based elements.
pub fn outercycle_orbit(p: &Partition) -> Result<Vec<usize>> {
    connected_graph(p)?;
    Ok(orbit(p))
}

fn orbit(p: &Partition) -> Vec<usize> {
    let mut next = vec![0usize; p.size() + 1];
    for block in p.blocks() {
        for (i, &e) in block.iter().enumerate() {
            next[e] = block[(i + 1) % block.len()];
        }
    }
    let tau = |x: usize| if x % 2 == 1 { x + 1 } else { x - 1 };
    let mut out = vec![1];
    let mut x = next[tau(1)];
    while x != 1 {
        out.push(x);
        x = next[tau(x)];
    }
    out
}

/// The canonical oriented cactus `(G_π, C_π)`.
pub fn canonical_outercycle(p: &Partition) -> Result<OrientedCactus> {
    let graph = connected_graph(p)?;
    let labels = p.labels();
    let orbit = orbit(p);

    let mut vertex_id = vec![0usize; p.block_count()];
    let mut edge_id = vec![0usize; p.size() / 2];
    let mut edge_seen = vec![0usize; p.size() / 2];
    let (mut vertices, mut edges) = (0, 0);
    let mut signature = Vec::with_capacity(orbit.len());
    for &x in &orbit {
        let block = labels[x - 1];
        let edge = (x - 1) / 2;
        if vertex_id[block] == 0 {
            vertices += 1;
            vertex_id[block] = vertices;
        }
        if edge_id[edge] == 0 {
            edges += 1;
            edge_id[edge] = edges;
        }
        edge_seen[edge] += 1;
        signature.push((vertex_id[block], edge_id[edge]));
    }

    let mut rigid = vec![false; edges];
    for (edge, &seen) in edge_seen.iter().enumerate() {
        rigid[edge_id[edge] - 1] = seen == 1;
    }
    let mut degrees = vec![0; vertices];
    for (block, &id) in vertex_id.iter().enumerate() {
        degrees[id - 1] = graph.degrees()[block];
    }
    let bipartition = graph.bipartition(labels[0])?.map(|bp| {
        let relabel = |side: Vec<usize>| {
            let mut ids: Vec<usize> = side.into_iter().map(|b| vertex_id[b]).collect();
            ids.sort_unstable();
            ids
        };
        (relabel(bp.first), relabel(bp.second))
    });
    let first_edge_rigid = rigid[0];
    let flexible = rigid.iter().filter(|r| !**r).count();
    let f_c = if first_edge_rigid {
        flexible
    } else {
        flexible - 1
    };
    Ok(OrientedCactus {
        signature: Signature(signature),
        rigid,
        f_c,
        first_edge_rigid,
        bipartition,
        coloring: None,
        degrees,
    })
}

/// One oriented cactus and the partitions of `[2n]` that produce it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CactusClass {
    pub cactus: OrientedCactus,
    pub members: Vec<Partition>,
}

/// Groups every `p ∈ NC(2n)` with connected `G_π` by canonical signature.
pub fn enumerate_oriented_cacti(
    n: usize,
    bipartite_only: bool,
    limits: &Limits,
) -> Result<BTreeMap<Signature, CactusClass>> {
    if n == 0 {
        return argument("oriented cacti need n >= 1");
    }
    let mut classes: BTreeMap<Signature, CactusClass> = BTreeMap::new();
    for p in enumerate_nc(2 * n, limits)? {
        if !BlockMultigraph::from_partition(&p)?.is_connected() {
            continue;
        }
        let cactus = canonical_outercycle(&p)?;
        if bipartite_only && cactus.bipartition.is_none() {
            continue;
        }
        classes
            .entry(cactus.signature.clone())
            .or_insert_with(|| CactusClass {
                cactus,
                members: Vec::new(),
            })
            .members
            .push(p);
    }
    Ok(classes)
}

/// The oriented cacti with `edges` edges, all of them rigid.
///
/// In a cactus every vertex degree is even exactly when every edge is
/// rigid, and degrees are block sizes, so only the all-even partitions of
/// `[2·edges]` need to be visited.
pub fn enumerate_rigid_cacti(
    edges: usize,
    limits: &Limits,
) -> Result<BTreeMap<Signature, CactusClass>> {
    if edges == 0 {
        return argument("oriented cacti need n >= 1");
    }
    let mut classes: BTreeMap<Signature, CactusClass> = BTreeMap::new();
    for p in enumerate_even_nc(2 * edges, limits)? {
        if !BlockMultigraph::from_partition(&p)?.is_connected() {
            continue;
        }
        let cactus = canonical_outercycle(&p)?;
        classes
            .entry(cactus.signature.clone())
            .or_insert_with(|| CactusClass {
                cactus,
                members: Vec::new(),
            })
            .members
            .push(p);
    }
    Ok(classes)
}
