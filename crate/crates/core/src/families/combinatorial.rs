//! Johnson, Hamming, Grassmann and flag graphs.

use super::classical::NamedPartition;
use super::{FamilyId, Limits};
use crate::error::{invalid, Error, Result};
use crate::geometry::{enumerate_flags, enumerate_subspaces};
use crate::gf::field_of_order;
use crate::graph::{build_graph, Graph};
use crate::orbitals::PairPartition;
use crate::schemes::tensor_from_int_array;
use num_traits::ToPrimitive;
use serde::Serialize;

/// 3-subsets of `{1..n}`, adjacent when they share exactly `i` elements.
pub fn build_johnson(n: usize, i: usize) -> Result<Graph> {
    if i > 2 {
        return Err(invalid("distinct 3-subsets share at most 2 elements"));
    }
    let mut sets = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                sets.push([a, b, c]);
            }
        }
    }
    let g = build_graph(&sets, |x, y| x.iter().filter(|e| y.contains(e)).count() == i)?;
    let labels = sets.iter().map(|s| format!("{{{},{},{}}}", s[0] + 1, s[1] + 1, s[2] + 1)).collect();
    Ok(g.with_labels(labels))
}

fn hamming_words(d: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(d * d * d);
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn hamming_distance(x: &[usize; 3], y: &[usize; 3]) -> usize {
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}

/// Words of length 3 over a `d`-letter alphabet, classed by Hamming distance.
pub fn hamming_orbitals(d: usize) -> Result<NamedPartition> {
    if d < 2 {
        return Err(invalid("the alphabet needs at least 2 letters"));
    }
    let words = hamming_words(d);
    let partition = PairPartition::from_fn(words.len(), |x, y| hamming_distance(&words[x], &words[y]))?;
    let e = d as u64 - 1;
    Ok(NamedPartition {
        partition,
        names: (0..4).map(|i| format!("distance {i}")).collect(),
        expected_lengths: vec![1, 3 * e, 3 * e * e, e * e * e],
        labels: words.iter().map(|w| format!("{}{}{}", w[0], w[1], w[2])).collect(),
    })
}

pub fn build_hamming_orbital(d: usize, i: usize) -> Result<Graph> {
    let words = hamming_words(d);
    let g = build_graph(&words, |x, y| hamming_distance(x, y) == i)?;
    Ok(g.with_labels(words.iter().map(|w| format!("{}{}{}", w[0], w[1], w[2])).collect()))
}

/// `m[i][j] = p^{i+1}_{j+1,j+1}` for the distance classes of the Hamming scheme
/// of length 3, next to the closed forms of its off-diagonal entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HammingMatrix {
    pub d: u64,
    pub m: [[i64; 3]; 3],
    pub displayed: [[Option<i64>; 3]; 3],
}

impl HammingMatrix {
    pub fn displayed_agrees(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.displayed[i][j].map_or(true, |v| v == self.m[i][j])))
    }

    /// The class-`j` graph is strongly regular exactly when the two
    /// off-diagonal entries of column `j` agree and are nonzero.
    pub fn column_is_srg(&self, j: usize) -> bool {
        let off: Vec<i64> = (0..3).filter(|&i| i != j).map(|i| self.m[i][j]).collect();
        off[0] == off[1] && off[0] > 0
    }
}

pub fn hamming_m(d: u64) -> Result<HammingMatrix> {
    if d < 2 {
        return Err(invalid("the alphabet needs at least 2 letters"));
    }
    let e = d as i64 - 1;
    let t = tensor_from_int_array(&[3 * e, 2 * e, e], &[1, 2, 3])?;
    let mut m = [[0i64; 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            let x = t.get(i + 1, j + 1, j + 1);
            *slot = x
                .to_integer()
                .to_i64()
                .ok_or_else(|| Error::Internal(format!("p^{}_{} out of range", i + 1, j + 1)))?;
        }
    }
    let f = d as i64 - 2;
    let displayed = [
        [None, Some(2 * e * f), Some(f * e * e)],
        [Some(2), None, Some(e * f * f)],
        [Some(0), Some(6 * f), None],
    ];
    Ok(HammingMatrix { d, m, displayed })
}

/// Orbital partition of the flags of `PG(2, q)` together with the matrix of
/// `p^i_jj` counted from it and the matrix predicted in closed form.
#[derive(Clone, Debug)]
pub struct FlagOrbitals {
    pub q: u32,
    pub named: NamedPartition,
    pub counted_m: [[u64; 3]; 3],
    pub displayed_m: [[Option<u64>; 3]; 3],
}

impl FlagOrbitals {
    pub fn matrix_matches(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.displayed_m[i][j].map_or(true, |v| v == self.counted_m[i][j])))
    }

    pub fn graph(&self, class: usize) -> Result<Graph> {
        self.named.graph(class)
    }
}

/// Flags `(U, W)` and `(U', W')` of `PG(2, q)` fall in class 1 when they share
/// exactly one member, class 2 when exactly one of `U ⊆ W'`, `U' ⊆ W` holds,
/// class 3 when neither does.
pub fn flag_orbitals(q: u32, limits: &Limits) -> Result<FlagOrbitals> {
    let id = FamilyId::Flags { q, class: 1 };
    limits.check(&id, id.order())?;
    let field = field_of_order(q)?;
    let flags = enumerate_flags(q)?;
    let mut points: Vec<&Vec<_>> = flags.iter().map(|f| &f.point).collect();
    points.dedup();
    let mut lines: Vec<_> = flags.iter().map(|f| &f.line).collect();
    lines.sort();
    lines.dedup();
    let pi: Vec<usize> = flags.iter().map(|f| points.iter().position(|p| *p == &f.point).expect("listed")).collect();
    let li: Vec<usize> = flags.iter().map(|f| lines.binary_search(&&f.line).expect("listed")).collect();
    let on: Vec<Vec<bool>> = points.iter().map(|p| lines.iter().map(|l| l.contains(&field, p)).collect()).collect();
    let partition = PairPartition::from_fn(flags.len(), |x, y| {
        let (u, w, u2, w2) = (pi[x], li[x], pi[y], li[y]);
        if x == y {
            0
        } else if u == u2 || w == w2 {
            1
        } else if on[u][w2] != on[u2][w] {
            2
        } else {
            3
        }
    })?;
    let t = partition.intersection_numbers()?;
    let mut counted_m = [[0u64; 3]; 3];
    for (i, row) in counted_m.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            *slot = t.p[i + 1][j + 1][j + 1];
        }
    }
    let q6 = q as u64;
    let displayed_m = [
        [None, Some(q6 * (q6 - 1)), Some(q6 * q6 * (q6 - 1))],
        [Some(1), None, Some(q6 * (q6 - 1) * (q6 - 1))],
        [Some(0), Some(4 * (q6 - 1)), None],
    ];
    let labels = flags
        .iter()
        .map(|f| format!("({}, {})", field.display_vector(&f.point), f.line.label(&field)))
        .collect();
    let named = NamedPartition {
        partition,
        names: ["diagonal", "one shared", "one incident", "none incident"].map(String::from).to_vec(),
        expected_lengths: vec![1, 2 * q6, 2 * q6 * q6, q6 * q6 * q6],
        labels,
    };
    Ok(FlagOrbitals { q, named, counted_m, displayed_m })
}

/// 3-subspaces of `F_q^n`, adjacent when they meet in a plane.
pub fn build_grassmann(n: usize, q: u32, limits: &Limits) -> Result<Graph> {
    let id = FamilyId::Grassmann { n: n as u32, q };
    limits.check(&id, id.order())?;
    let field = field_of_order(q)?;
    let subs = enumerate_subspaces(&field, n, 3, |_, _| true);
    let g = build_graph(&subs, |a, b| a.intersection_dim(&field, b) == 2)?;
    Ok(g.with_labels(subs.iter().map(|s| s.label(&field)).collect()))
}
