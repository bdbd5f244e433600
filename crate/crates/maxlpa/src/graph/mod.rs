//! Immutable undirected simple graphs in CSR adjacency form, random-graph
//! generators, connectivity, and text file I/O.

mod components;
mod generate;
mod io;

pub use components::connected_components;
pub use generate::{gen_clustered_er, gen_er, gen_path, PlantedModel};
pub use io::{
    read_graph, read_labels, read_partition, write_graph, write_partition,
};

use crate::error::{Error, Result};

/// Node index. Dense, 0-based.
pub type NodeId = u32;

/// A pair of independent RNG streams: one for graph sampling, one for the
/// initial label assignment. A `(Seed, parameters)` pair fully determines a
/// trial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seed {
    pub graph_seed: u64,
    pub label_seed: u64,
}

impl Seed {
    pub fn new(graph_seed: u64, label_seed: u64) -> Self {
        Seed {
            graph_seed,
            label_seed,
        }
    }

    /// Derives both streams from a single base value with splitmix64, so a
    /// one-number CLI seed still yields independent graph/label streams.
    pub fn from_base(base: u64) -> Self {
        Seed {
            graph_seed: crate::experiment::splitmix64(base ^ 1),
            label_seed: crate::experiment::splitmix64(base ^ 2),
        }
    }
}

/// Immutable undirected simple graph. Neighbor lists are strictly ascending;
/// no self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    /// CSR row offsets, length n + 1.
    offsets: Vec<usize>,
    /// Concatenated neighbor lists, length 2m.
    targets: Vec<NodeId>,
}

impl Graph {
    /// Builds a graph from undirected edges. Endpoints may be in either
    /// order; duplicates, self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(NodeId, NodeId)]) -> Result<Graph> {
        for &(u, v) in edges {
            if u == v {
                return Err(Error::invalid_parameter(format!("self-loop at node {u}")));
            }
            if (u as usize) >= n || (v as usize) >= n {
                return Err(Error::invalid_parameter(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
        }
        let mut degrees = vec![0usize; n];
        for &(u, v) in edges {
            degrees[u as usize] += 1;
            degrees[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for d in &degrees {
            acc += d;
            offsets.push(acc);
        }
        let mut targets = vec![0 as NodeId; acc];
        let mut cursor = offsets.clone();
        for &(u, v) in edges {
            targets[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            targets[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for v in 0..n {
            let row = &mut targets[offsets[v]..offsets[v + 1]];
            row.sort_unstable();
            if row.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid_parameter(format!(
                    "duplicate edge at node {v}"
                )));
            }
        }
        Ok(Graph {
            n,
            m: edges.len(),
            offsets,
            targets,
        })
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    /// Neighbors of `v` in strictly ascending order.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.targets[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographically ascending
    /// order. This is the canonical order used by the file format.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.n as NodeId).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        components::count_reachable(self, 0) == self.n
    }
}
