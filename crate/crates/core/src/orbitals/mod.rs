//! Orbitals of small permutation groups given by generators, and direct
//! counting of intersection numbers on any partition of ordered pairs.

mod partition;
pub mod psl28;

pub use partition::{CountTensor, PairPartition, EXHAUSTIVE_AUDIT_LIMIT};

use crate::error::{invalid, Error, Result};
use std::collections::VecDeque;
use std::fmt::Write;

/// A group given by generating permutations of `{0..degree}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroupAction {
    degree: usize,
    generators: Vec<Vec<u32>>,
}

impl PermGroupAction {
    pub fn new(degree: usize, generators: Vec<Vec<u32>>) -> Result<PermGroupAction> {
        for (g, perm) in generators.iter().enumerate() {
            if perm.len() != degree {
                return Err(invalid(format!("generator {g} has {} images for degree {degree}", perm.len())));
            }
            let mut hit = vec![false; degree];
            for &x in perm {
                let slot = hit
                    .get_mut(x as usize)
                    .ok_or_else(|| invalid(format!("generator {g} maps to {x}, outside the domain")))?;
                if *slot {
                    return Err(invalid(format!("generator {g} is not a bijection: {x} is hit twice")));
                }
                *slot = true;
            }
        }
        Ok(PermGroupAction { degree, generators })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn orbit(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            out.push(x);
            for g in &self.generators {
                let y = g[x] as usize;
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    /// Text form: `degree g` on the first line, then one line of images per generator.
    pub fn to_gens(&self) -> String {
        let mut s = format!("{} {}\n", self.degree, self.generators.len());
        for g in &self.generators {
            let line: Vec<String> = g.iter().map(|x| x.to_string()).collect();
            writeln!(s, "{}", line.join(" ")).unwrap();
        }
        s
    }

    pub fn from_gens(text: &str) -> Result<PermGroupAction> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| invalid("empty generator file"))?;
        let nums = |line: &str| -> Result<Vec<usize>> {
            line.split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| invalid(format!("{t:?} is not a number"))))
                .collect()
        };
        let head = nums(header)?;
        let [degree, count] = head[..] else {
            return Err(invalid("header must be \"degree generators\""));
        };
        let mut generators = Vec::with_capacity(count);
        for line in lines {
            generators.push(nums(line)?.into_iter().map(|x| x as u32).collect());
        }
        if generators.len() != count {
            return Err(invalid(format!("header promises {count} generators, file has {}", generators.len())));
        }
        PermGroupAction::new(degree, generators)
    }
}

/// Orbitals of a transitive action, classes numbered by their least pair `(0, y)`.
pub fn compute_orbitals(action: &PermGroupAction) -> Result<PairPartition> {
    let n = action.degree();
    if !action.is_transitive() {
        return Err(Error::Intransitive { orbit: action.orbit(0).len(), degree: n });
    }
    const NONE: u16 = u16::MAX;
    let mut class = vec![NONE; n * n];
    let mut next = 0u16;
    // Transitivity puts a pair (0, y) in every orbital.
    for y in 0..n {
        if class[y] != NONE {
            continue;
        }
        if next == NONE - 1 {
            return Err(invalid("too many orbitals"));
        }
        let id = next;
        next += 1;
        class[y] = id;
        let mut queue = VecDeque::from([(0usize, y)]);
        while let Some((a, b)) = queue.pop_front() {
            for g in action.generators() {
                let (c, d) = (g[a] as usize, g[b] as usize);
                if class[c * n + d] == NONE {
                    class[c * n + d] = id;
                    queue.push_back((c, d));
                }
            }
        }
    }
    debug_assert!(!class.contains(&NONE));
    PairPartition::from_classes(n, class)
}
