use super::Graph;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    pub fn new(v: u64, k: u64, lambda: u64, mu: u64) -> SrgParams {
        SrgParams { v, k, lambda, mu }
    }

    /// `k(k - lambda - 1) = (v - k - 1) mu`.
    pub fn is_feasible(&self) -> bool {
        let (v, k, l, m) = (self.v as i128, self.k as i128, self.lambda as i128, self.mu as i128);
        k * (k - l - 1) == (v - k - 1) * m
    }

    pub fn complement(&self) -> SrgParams {
        let (v, k, l, m) = (self.v, self.k, self.lambda, self.mu);
        SrgParams { v, k: v - k - 1, lambda: v + m - 2 - 2 * k, mu: v + l - 2 * k }
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Why a graph is not strongly regular, with the least offending vertex or pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum SrgFailure {
    Empty,
    Complete { n: usize },
    Disconnected { unreachable: usize },
    Irregular { vertex: usize, degree: usize, expected: usize },
    Lambda { pair: (usize, usize), common: usize, expected: usize },
    Mu { pair: (usize, usize), common: usize, expected: usize },
}

impl fmt::Display for SrgFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SrgFailure::Empty => write!(f, "graph has no vertices"),
            SrgFailure::Complete { n } => write!(f, "graph is complete on {n} vertices"),
            SrgFailure::Disconnected { unreachable } => write!(f, "vertex {unreachable} is unreachable from 0"),
            SrgFailure::Irregular { vertex, degree, expected } => {
                write!(f, "vertex {vertex} has degree {degree}, vertex 0 has {expected}")
            }
            SrgFailure::Lambda { pair, common, expected } => {
                write!(f, "adjacent pair {pair:?} has {common} common neighbours, expected {expected}")
            }
            SrgFailure::Mu { pair, common, expected } => {
                write!(f, "non-adjacent pair {pair:?} has {common} common neighbours, expected {expected}")
            }
        }
    }
}

/// Exact `(v, k, lambda, mu)` by counting common neighbours of every pair.
///
/// `lambda` and `mu` are read from the least adjacent and least non-adjacent
/// pair; the witness on failure is the least pair disagreeing with them.
pub fn check_srg(g: &Graph) -> Result<SrgParams, SrgFailure> {
    let n = g.n();
    if n == 0 {
        return Err(SrgFailure::Empty);
    }
    let k = g.degree(0);
    if let Some(vertex) = (0..n).find(|&v| g.degree(v) != k) {
        return Err(SrgFailure::Irregular { vertex, degree: g.degree(vertex), expected: k });
    }
    if k == n - 1 {
        return Err(SrgFailure::Complete { n });
    }
    if let Some(unreachable) = g.bfs(0).iter().position(|&d| d == super::UNREACHABLE) {
        return Err(SrgFailure::Disconnected { unreachable });
    }
    let first = |adj: bool| {
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| g.has_edge(i, j) == adj)
            .map(|(i, j)| g.common_neighbors(i, j))
    };
    // Connected, regular and not complete, so both kinds of pair exist.
    let lambda = first(true).expect("an edge exists");
    let mu = first(false).expect("a non-edge exists");
    let witness = (0..n).into_par_iter().find_map_first(|i| {
        (i + 1..n).find_map(|j| {
            let common = g.common_neighbors(i, j);
            if g.has_edge(i, j) {
                (common != lambda).then_some(SrgFailure::Lambda { pair: (i, j), common, expected: lambda })
            } else {
                (common != mu).then_some(SrgFailure::Mu { pair: (i, j), common, expected: mu })
            }
        })
    });
    match witness {
        Some(w) => Err(w),
        None => {
            let params = SrgParams::new(n as u64, k as u64, lambda as u64, mu as u64);
            debug_assert!(params.is_feasible());
            Ok(params)
        }
    }
}
