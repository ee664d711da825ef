//! Graphs on points and maximal subspaces of classical polar spaces.

use super::{FamilyId, Limits};
use crate::error::{invalid, Error, Result};
use crate::geometry::{Eps, FormKind, FormedSpace, PointFilter, ProjectivePoint};
use crate::gf::{hermitian_norm_count_closed_form, norm};
use crate::graph::{build_graph, Graph};
use crate::orbitals::{CountTensor, PairPartition};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PolarKind {
    O7,
    O8Plus,
}

impl fmt::Display for PolarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PolarKind::O7 => "O7",
            PolarKind::O8Plus => "O8+",
        })
    }
}

impl FromStr for PolarKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<PolarKind> {
        match s {
            "O7" => Ok(PolarKind::O7),
            "O8+" => Ok(PolarKind::O8Plus),
            _ => Err(invalid(format!("polar space must be O7 or O8+, got {s:?}"))),
        }
    }
}

/// Norm class of `h(x, y)` for two points scaled to `h(x, x) = h(y, y) = 1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum UnitaryClass {
    Zero,
    One,
    /// Every norm outside `{0, 1}`, merged into one class.
    Omega,
}

impl UnitaryClass {
    pub const ALL: [UnitaryClass; 3] = [UnitaryClass::Zero, UnitaryClass::One, UnitaryClass::Omega];

    /// Class id inside [`unitary_orbitals`].
    pub fn index(self) -> usize {
        match self {
            UnitaryClass::Zero => 1,
            UnitaryClass::One => 2,
            UnitaryClass::Omega => 3,
        }
    }
}

impl fmt::Display for UnitaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnitaryClass::Zero => "0",
            UnitaryClass::One => "1",
            UnitaryClass::Omega => "omega",
        })
    }
}

impl FromStr for UnitaryClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<UnitaryClass> {
        match s {
            "0" => Ok(UnitaryClass::Zero),
            "1" => Ok(UnitaryClass::One),
            "omega" | "w" => Ok(UnitaryClass::Omega),
            _ => Err(invalid(format!("unitary class must be 0, 1 or omega, got {s:?}"))),
        }
    }
}

/// A pair partition whose classes carry names and predicted sizes.
#[derive(Clone, Debug)]
pub struct NamedPartition {
    pub partition: PairPartition,
    /// `names[c]` for each class, `names[0]` being the diagonal.
    pub names: Vec<String>,
    pub expected_lengths: Vec<u64>,
    pub labels: Vec<String>,
}

impl NamedPartition {
    pub fn lengths(&self) -> Vec<u64> {
        self.partition.suborbit_lengths()
    }

    pub fn lengths_match(&self) -> bool {
        self.lengths() == self.expected_lengths
    }

    pub fn graph(&self, c: usize) -> Result<Graph> {
        Ok(self.partition.orbital_graph(c)?.with_labels(self.labels.clone()))
    }
}

fn point_labels(space: &FormedSpace, pts: &[ProjectivePoint]) -> Vec<String> {
    pts.iter().map(|p| space.field().display_vector(p.rep())).collect()
}

fn unit_points(n: usize, q: u32, limits: &Limits) -> Result<(FormedSpace, Vec<ProjectivePoint>)> {
    limits.check(FamilyId::Nu { n: n as u32, q }, FamilyId::Nu { n: n as u32, q }.order())?;
    let space = FormedSpace::hermitian(n, q)?;
    let one = space.field().one();
    let pts = space.enumerate_points(PointFilter::Value(one))?;
    Ok((space, pts))
}

/// Nonisotropic points of the hermitian space of dimension `n` over `F_{q^2}`,
/// adjacent when the line joining them is tangent.
pub fn build_nu(n: usize, q: u32, limits: &Limits) -> Result<Graph> {
    let (space, pts) = unit_points(n, q, limits)?;
    let g = build_graph(&pts, |a, b| space.tangency_count_unchecked(a.rep(), b.rep()) == 1)?;
    Ok(g.with_labels(point_labels(&space, &pts)))
}

/// Pairs of nonisotropic points classed by the norm of `h(x, y)`.
pub fn unitary_orbitals(n: usize, q: u32, limits: &Limits) -> Result<NamedPartition> {
    let (space, pts) = unit_points(n, q, limits)?;
    let f = space.field();
    let one = f.one();
    let norms: Vec<Vec<u16>> = {
        let mut rows = Vec::with_capacity(pts.len());
        for x in &pts {
            let row = pts
                .iter()
                .map(|y| {
                    let nv = norm(f, space.polar(x.rep(), y.rep()))?;
                    Ok(if nv == f.zero() {
                        UnitaryClass::Zero.index() as u16
                    } else if nv == one {
                        UnitaryClass::One.index() as u16
                    } else {
                        UnitaryClass::Omega.index() as u16
                    })
                })
                .collect::<Result<Vec<u16>>>()?;
            rows.push(row);
        }
        rows
    };
    let partition = PairPartition::from_fn(pts.len(), |x, y| if x == y { 0 } else { norms[x][y] as usize })?;
    let unit = hermitian_norm_count_closed_form(n as u32 - 1, q, false) as u64;
    let isotropic = hermitian_norm_count_closed_form(n as u32 - 1, q, true) as u64 - 1;
    let names = ["diagonal", "0", "1", "omega"].map(String::from).to_vec();
    Ok(NamedPartition {
        partition,
        names,
        expected_lengths: vec![1, unit / (q as u64 + 1), isotropic, (q as u64 - 2) * unit],
        labels: point_labels(&space, &pts),
    })
}

/// Nonsingular points of the parabolic space of dimension `2m+1` whose
/// perpendicular hyperplane has type `eps`, all scaled to one form value.
fn typed_points(m: usize, q: u32, eps: Eps, limits: &Limits) -> Result<(FormedSpace, Vec<ProjectivePoint>)> {
    let id = FamilyId::No { m: m as u32, q, eps };
    limits.check(&id, id.order())?;
    let space = FormedSpace::new(FormKind::QuadraticOdd, 2 * m + 1, q)?;
    let f = space.field();
    let nonsquare = f
        .nonzero_elements()
        .find(|&c| !f.is_square(c))
        .ok_or_else(|| invalid("q must be odd"))?;
    let mut found = Vec::new();
    for c in [f.one(), nonsquare] {
        let pts = space.enumerate_points(PointFilter::Value(c))?;
        let mut kept = Vec::new();
        for p in pts {
            if space.perp_type(&p)? == eps {
                kept.push(p);
            }
        }
        if !kept.is_empty() {
            found.push(kept);
        }
    }
    match found.len() {
        1 => Ok((space, found.pop().expect("one set"))),
        k => Err(Error::Internal(format!("perp type {eps} occurs in {k} square classes"))),
    }
}

/// Nonsingular points of perp type `eps`, adjacent when their line is tangent.
pub fn build_no(m: usize, q: u32, eps: Eps, limits: &Limits) -> Result<Graph> {
    let (space, pts) = typed_points(m, q, eps, limits)?;
    let g = build_graph(&pts, |a, b| space.tangency_count_unchecked(a.rep(), b.rep()) == 1)?;
    Ok(g.with_labels(point_labels(&space, &pts)))
}

/// Pairs of typed points classed by `lambda = B(x, y) / 2c` up to sign, where
/// `c` is the common form value. Class `t + 1` holds `lambda = +-t`; `q` must be prime.
pub fn orthogonal_orbitals(m: usize, q: u32, eps: Eps, limits: &Limits) -> Result<NamedPartition> {
    if !crate::gf::is_prime(q) || q == 2 {
        return Err(invalid(format!("orthogonal orbitals are indexed over odd prime q, got {q}")));
    }
    let (space, pts) = typed_points(m, q, eps, limits)?;
    let f = space.field();
    let c = space.value(pts[0].rep());
    let two_c = f.add(c, c);
    let class_of = |x: &ProjectivePoint, y: &ProjectivePoint| -> usize {
        let lambda = f.div(space.polar(x.rep(), y.rep()), two_c).expect("2c is nonzero");
        let t = f.to_prime_int(lambda).expect("prime field");
        t.min(q - t) as usize + 1
    };
    let partition =
        PairPartition::from_fn(pts.len(), |x, y| if x == y { 0 } else { class_of(&pts[x], &pts[y]) })?;
    let half = (q as usize - 1) / 2;
    let mut names = vec!["diagonal".to_string()];
    names.extend((0..=half).map(|t| format!("lambda=+-{t}")));
    let expected_lengths = orthogonal_lengths(m as u32, q as u64, eps);
    Ok(NamedPartition { partition, names, expected_lengths, labels: point_labels(&space, &pts) })
}

/// Suborbit lengths of the typed-point action, counted in `x^perp`.
///
/// For `lambda = +-t` the points `y` with `B(x, y) = 2ct` split as `y = t x + w`
/// with `w` in `x^perp` of value `c(1 - t^2)`; each projective class is hit twice
/// unless `t = 0`.
fn orthogonal_lengths(m: u32, q: u64, eps: Eps) -> Vec<u64> {
    // Vectors in a 2m-dim space of type eps with value a: q^{2m-1} - eps q^{m-1} for a != 0,
    // q^{2m-1} + eps (q^m - q^{m-1}) for a = 0.
    let s = eps.sign() as i128;
    let qi = q as i128;
    let nonzero = qi.pow(2 * m - 1) - s * qi.pow(m - 1);
    let zero = qi.pow(2 * m - 1) + s * (qi.pow(m) - qi.pow(m - 1));
    let half = (q - 1) / 2;
    let mut out = vec![1u64];
    // t = 0: w of value c with x^perp of the right type, up to sign.
    out.push((nonzero / 2) as u64);
    for t in 1..=half {
        // 1 - t^2 = 0 exactly when t = 1; nonzero w only, since y != x.
        let count = if t == 1 { zero - 1 } else { nonzero };
        out.push(count as u64);
    }
    out
}

/// Complement of the collinearity graph on singular points of `kind` over `F_q`.
pub fn build_polar_complement(kind: PolarKind, q: u32, limits: &Limits) -> Result<Graph> {
    let id = FamilyId::PolarComplement { kind, q };
    limits.check(&id, id.order())?;
    let space = match kind {
        PolarKind::O7 => FormedSpace::new(FormKind::QuadraticOdd, 7, q)?,
        PolarKind::O8Plus => FormedSpace::new(FormKind::QuadraticPlus, 8, q)?,
    };
    let pts = space.enumerate_points(PointFilter::Singular)?;
    let g = build_graph(&pts, |a, b| !space.perpendicular(a.rep(), b.rep()))?;
    Ok(g.with_labels(point_labels(&space, &pts)))
}

/// Maximal totally isotropic subspaces of the symplectic 6-space, adjacent when
/// they meet in a plane.
pub fn build_dual_polar_sp6(q: u32, limits: &Limits) -> Result<Graph> {
    let id = FamilyId::DualPolarSp6 { q };
    limits.check(&id, id.order())?;
    let space = FormedSpace::symplectic(6, q)?;
    let f = space.field();
    let subs = space.enumerate_max_isotropic()?;
    let g = build_graph(&subs, |a, b| a.intersection_dim(f, b) == 2)?;
    Ok(g.with_labels(subs.iter().map(|s| s.label(f)).collect()))
}

/// Intersection numbers of the distance partition of the symplectic dual polar graph.
pub fn dual_polar_sp6_distance_counts(q: u64) -> Result<CountTensor> {
    let q = u32::try_from(q).map_err(|_| invalid(format!("q = {q} is too large")))?;
    let g = build_dual_polar_sp6(q, &Limits::default())?;
    PairPartition::from_distances(&g)?.intersection_numbers()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{check_drg, check_srg, SrgParams};

    #[test]
    fn nu_3_3() {
        let g = build_nu(3, 3, &Limits::default()).unwrap();
        assert_eq!(check_srg(&g).unwrap(), SrgParams::new(63, 32, 16, 16));
        assert_eq!(g.labels().len(), 63);
    }

    #[test]
    fn unitary_classes_3_3() {
        let p = unitary_orbitals(3, 3, &Limits::default()).unwrap();
        assert_eq!(p.lengths(), vec![1, 6, 32, 24]);
        assert!(p.lengths_match());
        assert_eq!(p.graph(UnitaryClass::One.index()).unwrap(), build_nu(3, 3, &Limits::default()).unwrap());
        let t = p.partition.intersection_numbers().unwrap();
        assert_eq!(t.k, vec![1, 6, 32, 24]);
    }

    #[test]
    fn no_5_both_types() {
        let plus = build_no(2, 5, Eps::Plus, &Limits::default()).unwrap();
        assert_eq!(check_srg(&plus).unwrap(), SrgParams::new(325, 144, 68, 60));
        let minus = build_no(2, 5, Eps::Minus, &Limits::default()).unwrap();
        assert_eq!(check_srg(&minus).unwrap(), SrgParams::new(300, 104, 28, 40));
    }

    #[test]
    fn orthogonal_classes() {
        for eps in [Eps::Plus, Eps::Minus] {
            let p = orthogonal_orbitals(2, 5, eps, &Limits::default()).unwrap();
            assert_eq!(p.partition.rank(), 4);
            assert!(p.lengths_match(), "{eps}: {:?} vs {:?}", p.lengths(), p.expected_lengths);
            assert_eq!(p.graph(2).unwrap(), build_no(2, 5, eps, &Limits::default()).unwrap());
        }
        assert!(orthogonal_orbitals(2, 9, Eps::Plus, &Limits::default()).is_err());
    }

    #[test]
    fn polar_complements_q2() {
        let g = build_polar_complement(PolarKind::O8Plus, 2, &Limits::default()).unwrap();
        assert_eq!(check_srg(&g).unwrap(), SrgParams::new(135, 64, 28, 32));
        let g = build_polar_complement(PolarKind::O7, 2, &Limits::default()).unwrap();
        assert_eq!(check_srg(&g).unwrap(), SrgParams::new(63, 32, 16, 16));
    }

    #[test]
    fn dual_polar_q2() {
        let g = build_dual_polar_sp6(2, &Limits::default()).unwrap();
        let a = check_drg(&g).unwrap();
        assert_eq!(a.b_values(), &[14, 12, 8]);
        assert_eq!(a.c_values(), &[1, 3, 7]);
        assert_eq!(check_srg(&g.distance_graph(3)).unwrap(), SrgParams::new(135, 64, 28, 32));
        let t = dual_polar_sp6_distance_counts(2).unwrap();
        assert_eq!(t.k, vec![1, 14, 56, 64]);
    }
}
