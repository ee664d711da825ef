//! `PSL_2(8)` and `PSL_2(8).3` on 28 points, and the product action on 28^2.
//!
//! The 28 points are the pairs `{x, x^8}` with `x` in F_64 but not in F_8, i.e.
//! the points of `PG(1, 64)` off the subline `PG(1, 8)` paired by the
//! involutory automorphism of F_64 over F_8. Möbius maps with coefficients in
//! F_8 and the squaring map both commute with `x -> x^8`, so they act on the pairs.

use super::{compute_orbitals, PermGroupAction};
use crate::error::{Error, Result};
use crate::gf::{make_field, Field, FieldElement};
use serde::Serialize;

pub const DEGREE: usize = 28;

struct Points {
    field: Field,
    /// Pair id of every element of F_64; `usize::MAX` on F_8.
    id: Vec<usize>,
    pairs: Vec<(FieldElement, FieldElement)>,
}

fn points() -> Result<Points> {
    let f = make_field(2, 6)?;
    let mut id = vec![usize::MAX; f.order() as usize];
    let mut pairs = Vec::new();
    for x in f.elements() {
        if f.in_subfield(x, 8) || id[x.index()] != usize::MAX {
            continue;
        }
        let y = f.pow(x, 8);
        id[x.index()] = pairs.len();
        id[y.index()] = pairs.len();
        pairs.push((x, y));
    }
    if pairs.len() != DEGREE {
        return Err(Error::Internal(format!("found {} Frobenius pairs, expected 28", pairs.len())));
    }
    Ok(Points { field: f, id, pairs })
}

impl Points {
    fn permutation(&self, map: impl Fn(&Field, FieldElement) -> FieldElement) -> Result<Vec<u32>> {
        let perm: Vec<u32> = self
            .pairs
            .iter()
            .map(|&(x, _)| {
                let i = self.id[map(&self.field, x).index()];
                if i == usize::MAX {
                    Err(Error::Internal("map sends a point into PG(1, 8)".into()))
                } else {
                    Ok(i as u32)
                }
            })
            .collect::<Result<_>>()?;
        // Well defined on pairs: the image of x^8 lies in the same pair.
        for (k, &(_, y)) in self.pairs.iter().enumerate() {
            if self.id[map(&self.field, y).index()] != perm[k] as usize {
                return Err(Error::Internal("map does not commute with x -> x^8".into()));
            }
        }
        Ok(perm)
    }

    /// `x -> x + 1`, `x -> w x` for a primitive `w` of F_8, and `x -> 1/x`.
    fn psl_generators(&self) -> Result<Vec<Vec<u32>>> {
        let f = &self.field;
        let w = f
            .subfield_elements(8)?
            .into_iter()
            .find(|&a| f.multiplicative_order(a) == Some(7))
            .ok_or_else(|| Error::Internal("F_8 has no primitive element".into()))?;
        Ok(vec![
            self.permutation(|f, x| f.add(x, f.one()))?,
            self.permutation(|f, x| f.mul(w, x))?,
            self.permutation(|f, x| f.inv(x).expect("points are nonzero"))?,
        ])
    }

    fn frobenius(&self) -> Result<Vec<u32>> {
        self.permutation(|f, x| f.mul(x, x))
    }
}

/// Labels `{x, x^8}` of the 28 points, in index order.
pub fn psl28_labels() -> Result<Vec<String>> {
    let pts = points()?;
    Ok(pts
        .pairs
        .iter()
        .map(|&(x, y)| format!("{{{},{}}}", pts.field.display(x), pts.field.display(y)))
        .collect())
}

/// `PSL_2(8)` on the 28 points.
pub fn psl28_socle_action() -> Result<PermGroupAction> {
    let pts = points()?;
    let action = PermGroupAction::new(DEGREE, pts.psl_generators()?)?;
    check_transitive(&action)?;
    Ok(action)
}

/// `PSL_2(8).3` on the 28 points: the socle generators plus `x -> x^2`.
pub fn psl28_action() -> Result<PermGroupAction> {
    let pts = points()?;
    let mut gens = pts.psl_generators()?;
    gens.push(pts.frobenius()?);
    let action = PermGroupAction::new(DEGREE, gens)?;
    check_transitive(&action)?;
    Ok(action)
}

fn check_transitive(a: &PermGroupAction) -> Result<()> {
    let orbit = a.orbit(0).len();
    if orbit != a.degree() {
        return Err(Error::Intransitive { orbit, degree: a.degree() });
    }
    Ok(())
}

fn inverse(p: &[u32]) -> Vec<u32> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

/// `(a, b) -> (g a, h b)` on `a * 28 + b`.
fn product(g: &[u32], h: &[u32]) -> Vec<u32> {
    (0..DEGREE * DEGREE)
        .map(|p| g[p / DEGREE] * DEGREE as u32 + h[p % DEGREE])
        .collect()
}

fn swap() -> Vec<u32> {
    (0..DEGREE * DEGREE)
        .map(|p| ((p % DEGREE) * DEGREE + p / DEGREE) as u32)
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateReport {
    pub name: &'static str,
    pub rank: usize,
    pub suborbit_lengths: Vec<u64>,
    pub accepted: bool,
}

/// Generator sets for `PSL_2(8)^2` extended by an element of order 6 built from
/// the coordinate swap and a field automorphism in both coordinates.
fn candidates() -> Result<Vec<(&'static str, PermGroupAction)>> {
    let pts = points()?;
    let t = pts.psl_generators()?;
    let phi = pts.frobenius()?;
    let id: Vec<u32> = (0..DEGREE as u32).collect();
    let mut base = Vec::new();
    for g in &t {
        base.push(product(g, &id));
        base.push(product(&id, g));
    }
    let with = |extra: Vec<Vec<u32>>| -> Result<PermGroupAction> {
        let mut gens = base.clone();
        gens.extend(extra);
        PermGroupAction::new(DEGREE * DEGREE, gens)
    };
    Ok(vec![
        ("(phi,phi) and swap", with(vec![product(&phi, &phi), swap()])?),
        ("(phi,phi^-1) and swap", with(vec![product(&phi, &inverse(&phi)), swap()])?),
    ])
}

/// The 784-point group: the first candidate whose orbital count is 4. Every
/// candidate is evaluated and reported.
pub fn psl2_8_squared_action() -> Result<(PermGroupAction, Vec<CandidateReport>)> {
    let mut reports = Vec::new();
    let mut chosen = None;
    for (name, action) in candidates()? {
        let orbitals = compute_orbitals(&action)?;
        let mut lengths = orbitals.suborbit_lengths();
        lengths.sort_unstable();
        let accepted = chosen.is_none() && orbitals.rank() == 4;
        reports.push(CandidateReport { name, rank: orbitals.rank(), suborbit_lengths: lengths, accepted });
        if accepted {
            chosen = Some(action);
        }
    }
    match chosen {
        Some(a) => Ok((a, reports)),
        None => Err(Error::Internal(format!("no product candidate has rank 4: {reports:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_eight_points() {
        let labels = psl28_labels().unwrap();
        assert_eq!(labels.len(), (65 - 9) / 2);
    }

    #[test]
    fn socle_has_rank_four_and_extension_is_two_transitive() {
        let t = compute_orbitals(&psl28_socle_action().unwrap()).unwrap();
        assert_eq!(t.rank(), 4);
        assert_eq!(t.suborbit_lengths().iter().filter(|&&k| k == 9).count(), 3);
        let k = compute_orbitals(&psl28_action().unwrap()).unwrap();
        assert_eq!(k.rank(), 2);
        assert_eq!(k.suborbit_lengths(), vec![1, 27]);
    }

    #[test]
    fn shipped_generator_file_matches() {
        let shipped = include_str!("../../data/psl28.gens");
        assert_eq!(PermGroupAction::from_gens(shipped).unwrap(), psl28_action().unwrap());
    }

    #[test]
    fn product_helpers() {
        let s = swap();
        assert_eq!(s[1], DEGREE as u32);
        let id: Vec<u32> = (0..DEGREE as u32).collect();
        assert_eq!(product(&id, &id), (0..(DEGREE * DEGREE) as u32).collect::<Vec<_>>());
        let k = psl28_action().unwrap();
        let g = &k.generators()[3];
        assert_eq!(inverse(&inverse(g)), *g);
    }

    #[test]
    fn product_candidates() {
        let (action, reports) = psl2_8_squared_action().unwrap();
        assert_eq!(action.degree(), 784);
        assert_eq!(reports.len(), 2);
        assert!(reports[0].accepted);
        assert_eq!(reports[0].suborbit_lengths, vec![1, 54, 243, 486]);
        let shipped = include_str!("../../data/psl2_8_sq6.gens");
        assert_eq!(PermGroupAction::from_gens(shipped).unwrap(), action);
        let orbitals = compute_orbitals(&action).unwrap();
        let c = (1..4).find(|&c| orbitals.suborbit_lengths()[c] == 243).unwrap();
        let g = orbitals.orbital_graph(c).unwrap();
        assert_eq!(crate::graph::check_srg(&g).unwrap(), crate::graph::SrgParams::new(784, 243, 82, 72));
    }
}
