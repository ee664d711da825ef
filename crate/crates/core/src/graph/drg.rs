use super::{Graph, UNREACHABLE};
use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

/// `{b_0, .., b_{d-1}; c_1, .., c_d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IntersectionArray {
    b: Vec<u64>,
    c: Vec<u64>,
}

impl IntersectionArray {
    pub fn new(b: Vec<u64>, c: Vec<u64>) -> Result<IntersectionArray> {
        let bad = |m: String| Err(Error::InfeasibleArray(m));
        if b.is_empty() || b.len() != c.len() {
            return bad(format!("need d >= 1 values of b and of c, got {} and {}", b.len(), c.len()));
        }
        if c[0] != 1 {
            return bad(format!("c_1 = {} but must be 1", c[0]));
        }
        let arr = IntersectionArray { b, c };
        let k = arr.k();
        for i in 0..=arr.diameter() {
            if arr.b(i) + arr.c(i) > k {
                return bad(format!("a_{i} = k - b_{i} - c_{i} is negative"));
            }
            if i < arr.diameter() && arr.b(i) == 0 {
                return bad(format!("b_{i} = 0 before the diameter"));
            }
            if i > 0 && arr.c(i) == 0 {
                return bad(format!("c_{i} = 0"));
            }
        }
        let mut ki = 1u128;
        for i in 0..arr.diameter() {
            let num = ki * arr.b(i) as u128;
            let den = arr.c(i + 1) as u128;
            if num % den != 0 {
                return bad(format!("k_{} = k_{i} b_{i} / c_{} = {num}/{den} is not an integer", i + 1, i + 1));
            }
            ki = num / den;
        }
        Ok(arr)
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn k(&self) -> u64 {
        self.b[0]
    }

    /// `b_i`, zero at the diameter.
    pub fn b(&self, i: usize) -> u64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i`, zero at `i = 0`.
    pub fn c(&self, i: usize) -> u64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    pub fn a(&self, i: usize) -> u64 {
        self.k() - self.b(i) - self.c(i)
    }

    pub fn b_values(&self) -> &[u64] {
        &self.b
    }

    pub fn c_values(&self) -> &[u64] {
        &self.c
    }

    /// `k_0 = 1`, `k_{i+1} = k_i b_i / c_{i+1}`.
    pub fn valencies(&self) -> Vec<u128> {
        let mut out = vec![1u128];
        for i in 0..self.diameter() {
            let last = *out.last().unwrap();
            out.push(last * self.b(i) as u128 / self.c(i + 1) as u128);
        }
        out
    }

    pub fn v(&self) -> u128 {
        self.valencies().iter().sum()
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum DrgFailure {
    Empty,
    Disconnected { unreachable: usize },
    Irregular { vertex: usize, degree: usize, expected: usize },
    /// `(c, a, b)` seen at `pair` differ from those seen from vertex 0.
    Inconsistent { pair: (usize, usize), distance: usize, counts: [u64; 3], expected: [u64; 3] },
}

impl fmt::Display for DrgFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DrgFailure::Empty => write!(f, "graph has fewer than two vertices"),
            DrgFailure::Disconnected { unreachable } => write!(f, "vertex {unreachable} is unreachable from 0"),
            DrgFailure::Irregular { vertex, degree, expected } => {
                write!(f, "vertex {vertex} has degree {degree}, vertex 0 has {expected}")
            }
            DrgFailure::Inconsistent { pair, distance, counts, expected } => write!(
                f,
                "pair {pair:?} at distance {distance} has (c,a,b) = {counts:?}, expected {expected:?}"
            ),
        }
    }
}

/// Layer bitsets `D_i(x)` for every distance `i` from `x`.
fn layers(g: &Graph, dist: &[u8], diameter: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![0u64; g.words()]; diameter + 1];
    for (y, &d) in dist.iter().enumerate() {
        out[d as usize][y / 64] |= 1 << (y % 64);
    }
    out
}

fn count_in(row: &[u64], layer: Option<&Vec<u64>>) -> u64 {
    layer.map_or(0, |l| row.iter().zip(l).map(|(a, b)| (a & b).count_ones() as u64).sum())
}

/// `(c_i, a_i, b_i)` for `y` at distance `i` from the vertex whose layers are given.
fn local_counts(g: &Graph, layers: &[Vec<u64>], y: usize, i: usize) -> [u64; 3] {
    let row = g.row(y);
    let below = if i == 0 { None } else { layers.get(i - 1) };
    [count_in(row, below), count_in(row, layers.get(i)), count_in(row, layers.get(i + 1))]
}

/// Checks that `(c_i, a_i, b_i)` depend only on the distance of a pair, and
/// returns the intersection array read from vertex 0.
pub fn check_drg(g: &Graph) -> Result<IntersectionArray, DrgFailure> {
    let n = g.n();
    // A single vertex has no array (diameter 0).
    if n < 2 {
        return Err(DrgFailure::Empty);
    }
    let k = g.degree(0);
    if let Some(vertex) = (0..n).find(|&v| g.degree(v) != k) {
        return Err(DrgFailure::Irregular { vertex, degree: g.degree(vertex), expected: k });
    }
    let d0 = g.bfs(0);
    if let Some(unreachable) = d0.iter().position(|&d| d == UNREACHABLE) {
        return Err(DrgFailure::Disconnected { unreachable });
    }
    let diameter = *d0.iter().max().unwrap() as usize;
    let l0 = layers(g, &d0, diameter);
    let expected: Vec<[u64; 3]> = (0..=diameter)
        .map(|i| {
            let y = d0.iter().position(|&d| d as usize == i).unwrap();
            local_counts(g, &l0, y, i)
        })
        .collect();
    let witness = (0..n).into_par_iter().find_map_first(|x| {
        let dx = g.bfs(x);
        // Vertex transitivity is not assumed, so the diameter seen from x may differ.
        let dmax = *dx.iter().max().unwrap() as usize;
        if dmax != diameter {
            let y = dx.iter().position(|&d| d as usize == dmax.min(diameter + 1)).unwrap();
            let i = dx[y] as usize;
            let lx = layers(g, &dx, dmax);
            return Some(DrgFailure::Inconsistent {
                pair: (x, y),
                distance: i,
                counts: local_counts(g, &lx, y, i),
                expected: expected.get(i).copied().unwrap_or([0; 3]),
            });
        }
        let lx = layers(g, &dx, diameter);
        (0..n).find_map(|y| {
            let i = dx[y] as usize;
            let counts = local_counts(g, &lx, y, i);
            (counts != expected[i]).then_some(DrgFailure::Inconsistent {
                pair: (x, y),
                distance: i,
                counts,
                expected: expected[i],
            })
        })
    });
    if let Some(w) = witness {
        return Err(w);
    }
    let b = (0..diameter).map(|i| expected[i][2]).collect();
    let c = (1..=diameter).map(|i| expected[i][0]).collect();
    Ok(IntersectionArray::new(b, c).expect("arrays read from a distance-regular graph are feasible"))
}
