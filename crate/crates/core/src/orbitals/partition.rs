use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, UNREACHABLE};
use rayon::prelude::*;
use serde::Serialize;

/// Degrees up to this are audited on every pair; above it, on two representatives per class.
pub const EXHAUSTIVE_AUDIT_LIMIT: usize = 200;

/// A partition of the ordered pairs of `{0..n}` into classes `0..rank`, with
/// the diagonal as class 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPartition {
    n: usize,
    rank: usize,
    class: Vec<u16>,
    paired: Vec<usize>,
}

/// Intersection numbers counted from a partition: `p[h][i][j]` and row valencies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountTensor {
    pub v: u64,
    pub k: Vec<u64>,
    pub p: Vec<Vec<Vec<u64>>>,
}

impl PairPartition {
    /// Classes from `f(x, y)`; ids must be dense, with 0 exactly on the diagonal.
    pub fn from_fn<F>(n: usize, f: F) -> Result<PairPartition>
    where
        F: Fn(usize, usize) -> usize + Sync,
    {
        let rows: Vec<Vec<u16>> = (0..n)
            .into_par_iter()
            .map(|x| (0..n).map(|y| f(x, y) as u16).collect())
            .collect();
        Self::from_classes(n, rows.concat())
    }

    pub(crate) fn from_classes(n: usize, class: Vec<u16>) -> Result<PairPartition> {
        assert_eq!(class.len(), n * n);
        for x in 0..n {
            for y in 0..n {
                if (class[x * n + y] == 0) != (x == y) {
                    return Err(invalid(format!("class 0 must be exactly the diagonal; pair ({x}, {y}) violates it")));
                }
            }
        }
        let rank = class.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        let mut seen = vec![false; rank];
        for &c in &class {
            seen[c as usize] = true;
        }
        if let Some(c) = seen.iter().position(|&s| !s) {
            return Err(invalid(format!("class {c} is empty")));
        }
        let mut paired = vec![usize::MAX; rank];
        for x in 0..n {
            for y in 0..n {
                let (c, d) = (class[x * n + y] as usize, class[y * n + x] as usize);
                if paired[c] == usize::MAX {
                    paired[c] = d;
                } else if paired[c] != d {
                    return Err(invalid(format!("class {c} has no single paired class")));
                }
            }
        }
        Ok(PairPartition { n, rank, class, paired })
    }

    /// Classes by graph distance; the graph must be connected.
    pub fn from_distances(g: &Graph) -> Result<PairPartition> {
        let n = g.n();
        let d = g.distances();
        if d.contains(&UNREACHABLE) {
            return Err(invalid("distance partition of a disconnected graph"));
        }
        Self::from_classes(n, d.into_iter().map(u16::from).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn class(&self, x: usize, y: usize) -> usize {
        self.class[x * self.n + y] as usize
    }

    pub fn paired(&self, c: usize) -> usize {
        self.paired[c]
    }

    pub fn is_self_paired(&self, c: usize) -> bool {
        self.paired[c] == c
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.rank).all(|c| self.is_self_paired(c))
    }

    /// Class sizes in row 0, i.e. the valencies when the partition is homogeneous.
    pub fn suborbit_lengths(&self) -> Vec<u64> {
        let mut k = vec![0u64; self.rank];
        for y in 0..self.n {
            k[self.class(0, y)] += 1;
        }
        k
    }

    /// Least `(0, y)` in class `c`, after that the least pair in another row.
    fn representatives(&self, c: usize) -> Vec<(usize, usize)> {
        let mut reps = Vec::with_capacity(2);
        for x in 0..self.n {
            for y in 0..self.n {
                if self.class(x, y) == c && reps.len() < 2 && reps.iter().all(|&(rx, _)| rx != x) {
                    reps.push((x, y));
                    break;
                }
            }
            if reps.len() == 2 {
                break;
            }
        }
        reps
    }

    fn count_at(&self, x: usize, y: usize) -> Vec<Vec<u64>> {
        let mut t = vec![vec![0u64; self.rank]; self.rank];
        for z in 0..self.n {
            t[self.class(x, z)][self.class(z, y)] += 1;
        }
        t
    }

    /// `p^h_ij` counted at one representative of class `h` and recounted at a
    /// representative from another row when one exists.
    pub fn intersection_number_direct(&self, h: usize, i: usize, j: usize) -> Result<u64> {
        if h >= self.rank || i >= self.rank || j >= self.rank {
            return Err(invalid(format!("class index out of range for rank {}", self.rank)));
        }
        let reps = self.representatives(h);
        let count = |(x, y): (usize, usize)| {
            (0..self.n).filter(|&z| self.class(x, z) == i && self.class(z, y) == j).count() as u64
        };
        let first = count(reps[0]);
        if let Some(&second_rep) = reps.get(1) {
            let second = count(second_rep);
            if second != first {
                return Err(Error::NotWellDefined { h, i, j, first, second });
            }
        }
        Ok(first)
    }

    /// All `p^h_ij`. Every pair is audited up to [`EXHAUSTIVE_AUDIT_LIMIT`]
    /// points, two representatives per class beyond it.
    pub fn intersection_numbers(&self) -> Result<CountTensor> {
        let k = self.suborbit_lengths();
        let p: Vec<Vec<Vec<u64>>> = (0..self.rank)
            .into_par_iter()
            .map(|h| {
                let reps = self.representatives(h);
                let base = self.count_at(reps[0].0, reps[0].1);
                if self.n > EXHAUSTIVE_AUDIT_LIMIT {
                    if let Some(&(x, y)) = reps.get(1) {
                        self.compare(h, &base, &self.count_at(x, y))?;
                    }
                }
                Ok(base)
            })
            .collect::<Result<_>>()?;
        if self.n <= EXHAUSTIVE_AUDIT_LIMIT {
            let bad = (0..self.n).into_par_iter().find_map_first(|x| {
                (0..self.n).find_map(|y| {
                    let h = self.class(x, y);
                    self.compare(h, &p[h], &self.count_at(x, y)).err()
                })
            });
            if let Some(e) = bad {
                return Err(e);
            }
        }
        Ok(CountTensor { v: self.n as u64, k, p })
    }

    fn compare(&self, h: usize, a: &[Vec<u64>], b: &[Vec<u64>]) -> Result<()> {
        for i in 0..self.rank {
            for j in 0..self.rank {
                if a[i][j] != b[i][j] {
                    return Err(Error::NotWellDefined { h, i, j, first: a[i][j], second: b[i][j] });
                }
            }
        }
        Ok(())
    }

    /// Undirected graph of class `c` together with its paired class.
    pub fn orbital_graph(&self, c: usize) -> Result<Graph> {
        if c == 0 {
            return Err(invalid("the diagonal class has no orbital graph"));
        }
        if c >= self.rank {
            return Err(invalid(format!("class {c} out of range for rank {}", self.rank)));
        }
        let d = self.paired(c);
        let mut edges = Vec::new();
        for x in 0..self.n {
            for y in x + 1..self.n {
                let e = self.class(x, y);
                if e == c || e == d {
                    edges.push((x, y));
                }
            }
        }
        Graph::from_edges(self.n, &edges)
    }

    /// Whether the two partitions agree up to renaming classes.
    pub fn same_as(&self, other: &PairPartition) -> bool {
        if self.n != other.n || self.rank != other.rank {
            return false;
        }
        let mut map = vec![usize::MAX; self.rank];
        for (a, b) in self.class.iter().zip(&other.class) {
            let slot = &mut map[*a as usize];
            if *slot == usize::MAX {
                *slot = *b as usize;
            } else if *slot != *b as usize {
                return false;
            }
        }
        let mut image = map.clone();
        image.sort_unstable();
        image.dedup();
        image.len() == self.rank
    }

    /// Renumbers classes so that a class appears before another whenever its
    /// first pair `(0, y)` has smaller `y`.
    pub fn canonical_order(&self) -> PairPartition {
        let mut order = vec![usize::MAX; self.rank];
        let mut next = 0;
        for y in 0..self.n {
            let c = self.class(0, y);
            if order[c] == usize::MAX {
                order[c] = next;
                next += 1;
            }
        }
        for slot in order.iter_mut().filter(|s| **s == usize::MAX) {
            *slot = next;
            next += 1;
        }
        let class = self.class.iter().map(|&c| order[c as usize] as u16).collect();
        PairPartition::from_classes(self.n, class).expect("renumbering keeps a valid partition")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::petersen;

    #[test]
    fn petersen_distance_partition() {
        let p = PairPartition::from_distances(&petersen()).unwrap();
        assert_eq!(p.rank(), 3);
        assert!(p.is_symmetric());
        assert_eq!(p.suborbit_lengths(), vec![1, 3, 6]);
        let t = p.intersection_numbers().unwrap();
        assert_eq!(t.p[2][2][2], 3);
        assert_eq!(t.p[1][1][1], 0);
        assert_eq!(p.intersection_number_direct(2, 1, 1).unwrap(), 1);
        assert_eq!(p.orbital_graph(1).unwrap(), petersen());
        assert_eq!(p.orbital_graph(2).unwrap(), petersen().complement());
        assert!(p.orbital_graph(0).is_err());
    }

    #[test]
    fn lemma_identities_hold_on_counts() {
        let p = PairPartition::from_distances(&petersen()).unwrap();
        let t = p.intersection_numbers().unwrap();
        for h in 0..3 {
            for j in 0..3 {
                assert_eq!(t.p[h][0][j], (j == h) as u64);
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(t.p[0][i][j], if i == j { t.k[j] } else { 0 });
            }
        }
    }

    #[test]
    fn bad_partitions_are_rejected() {
        assert!(PairPartition::from_fn(3, |x, y| if x == y { 0 } else { 2 }).is_err());
        assert!(PairPartition::from_fn(3, |_, _| 1).is_err());
        // A directed 3-cycle: classes 1 and 2 are paired with each other.
        let p = PairPartition::from_fn(3, |x, y| (y + 3 - x) % 3).unwrap();
        assert_eq!((p.paired(1), p.paired(2)), (2, 1));
        assert!(!p.is_symmetric());
        assert_eq!(p.orbital_graph(1).unwrap(), p.orbital_graph(2).unwrap());
    }

    #[test]
    fn not_well_defined_is_detected() {
        // Path 0-1-2-3 split by distance: the ends and the middle see different counts.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let p = PairPartition::from_distances(&g).unwrap();
        assert!(matches!(p.intersection_numbers(), Err(Error::NotWellDefined { .. })));
    }

    #[test]
    fn renaming_classes_is_detected() {
        let p = PairPartition::from_distances(&petersen()).unwrap();
        let swapped = PairPartition::from_fn(10, |x, y| [0, 2, 1][p.class(x, y)]).unwrap();
        assert!(p.same_as(&swapped));
        assert_eq!(swapped.canonical_order(), p.canonical_order());
    }
}
