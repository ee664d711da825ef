//! Immutable simple graphs with bitset adjacency, and the brute-force
//! regularity checks run on them.

mod drg;
pub mod io;
mod srg;

pub use drg::{check_drg, DrgFailure, IntersectionArray};
pub use srg::{check_srg, SrgFailure, SrgParams};

use crate::error::{Error, Result};
use rayon::prelude::*;

pub const UNREACHABLE: u8 = u8::MAX;

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    labels: Vec<String>,
}

impl PartialEq for Graph {
    /// Edge sets and vertex counts; labels are provenance only.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

impl Eq for Graph {}

/// Pairs checked for symmetry when the graph is too big to check all of them.
const SYMMETRY_SAMPLE: usize = 4096;

/// Builds the graph on `vertices` whose edges are the pairs satisfying `adjacent`.
///
/// Only pairs `i < j` decide edges. Symmetry of the predicate is checked on every
/// pair for small graphs and on a deterministic sample otherwise.
pub fn build_graph<V, F>(vertices: &[V], adjacent: F) -> Result<Graph>
where
    V: Sync,
    F: Fn(&V, &V) -> bool + Sync,
{
    let n = vertices.len();
    let mut g = Graph::empty(n);
    let words = g.words;
    let upper: Vec<Vec<u64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![0u64; words];
            for j in i + 1..n {
                if adjacent(&vertices[i], &vertices[j]) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect();
    for (i, row) in upper.into_iter().enumerate() {
        g.bits[i * words..(i + 1) * words].copy_from_slice(&row);
    }
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                g.set(j, i);
            }
        }
    }
    let total = n * n.saturating_sub(1) / 2;
    let stride = if total <= SYMMETRY_SAMPLE { 1 } else { total / SYMMETRY_SAMPLE };
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let sampled: Vec<(usize, usize)> = pairs.step_by(stride.max(1)).collect();
    if let Some(&(i, j)) = sampled
        .par_iter()
        .find_first(|&&(i, j)| adjacent(&vertices[j], &vertices[i]) != g.has_edge(i, j))
    {
        return Err(Error::AsymmetricPredicate(i, j));
    }
    Ok(g)
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        let words = n.div_ceil(64).max(1);
        Graph { n, words, bits: vec![0; n * words], labels: Vec::new() }
    }

    /// Graph from an edge list; loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(crate::error::invalid(format!("edge ({u}, {v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::ReflexivePredicate(u));
            }
            g.set(u, v);
            g.set(v, u);
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = labels;
        self
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> String {
        self.labels.get(v).cloned().unwrap_or_else(|| v.to_string())
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(i).iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }

    pub fn common_neighbors(&self, i: usize, j: usize) -> usize {
        self.row(i)
            .iter()
            .zip(self.row(j))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && !self.has_edge(i, j) {
                    g.set(i, j);
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }

    /// Breadth-first distances from `root`; [`UNREACHABLE`] marks other components.
    pub fn bfs(&self, root: usize) -> Vec<u8> {
        let mut dist = vec![UNREACHABLE; self.n];
        let mut frontier = vec![root];
        dist[root] = 0;
        let mut d = 0u8;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &u in &frontier {
                for v in self.neighbors(u) {
                    if dist[v] == UNREACHABLE {
                        dist[v] = d;
                        next.push(v);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    /// Row-major all-pairs distance table.
    pub fn distances(&self) -> Vec<u8> {
        let rows: Vec<Vec<u8>> = (0..self.n).into_par_iter().map(|r| self.bfs(r)).collect();
        rows.concat()
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Joins the pairs at distance exactly `i`; beyond the diameter this is edgeless.
    pub fn distance_graph(&self, i: usize) -> Graph {
        let rows: Vec<Vec<u8>> = (0..self.n).into_par_iter().map(|r| self.bfs(r)).collect();
        let mut g = Graph::empty(self.n);
        if i > 0 && i < UNREACHABLE as usize {
            for (u, row) in rows.iter().enumerate() {
                for (v, &d) in row.iter().enumerate() {
                    if d as usize == i {
                        g.set(u, v);
                    }
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }
}
