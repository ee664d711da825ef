//! Formed spaces over finite fields and exact enumeration of their points and
//! subspaces.
//!
//! Bases are explicit:
//!
//! * hermitian, over F_{q^2}: orthonormal, `h(x, y) = sum x_i y_i^q`;
//! * quadratic plus, dim `2m`: `(e_1..e_m, f_1..f_m)`, `Q = sum x_i x_{m+i}`;
//! * quadratic minus, dim `2m`: `(e_1..e_{m-1}, f_1..f_{m-1}, u, v)`,
//!   `Q = sum x_i x_{m-1+i} + a^2 + ab + zeta b^2` on the last two coordinates;
//! * quadratic odd, dim `2m + 1`: `(e_1..e_m, f_1..f_m, w)`, `Q = sum x_i x_{m+i} + x_w^2`;
//! * symplectic, dim `2m`: `B(x, y) = sum x_i y_{m+i} - x_{m+i} y_i`.

pub mod linalg;

use crate::error::{invalid, Error, Result};
use crate::gf::{field_of_order, Field, FieldElement};
use linalg::{all_vectors, axpy, nullspace, projective_points, rank, rref, scale, Vector};
use serde::Serialize;
use std::fmt;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FormKind {
    Hermitian,
    QuadraticPlus,
    QuadraticMinus,
    QuadraticOdd,
    Symplectic,
}

impl FormKind {
    pub fn is_quadratic(self) -> bool {
        matches!(self, FormKind::QuadraticPlus | FormKind::QuadraticMinus | FormKind::QuadraticOdd)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Eps {
    Plus,
    Minus,
}

impl Eps {
    pub fn sign(self) -> i64 {
        match self {
            Eps::Plus => 1,
            Eps::Minus => -1,
        }
    }
}

impl fmt::Display for Eps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Eps::Plus => "+",
            Eps::Minus => "-",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PointFilter {
    All,
    Singular,
    Nonsingular,
    /// Points having a representative of form value `c`, returned with such a representative.
    Value(FieldElement),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    rep: Vector,
}

impl ProjectivePoint {
    /// Wraps an arbitrary nonzero vector without rescaling it.
    pub fn from_rep(rep: Vector) -> Self {
        ProjectivePoint { rep }
    }

    pub fn rep(&self) -> &[FieldElement] {
        &self.rep
    }
}

/// A subspace held by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    rows: Vec<Vector>,
}

impl Subspace {
    pub fn span(field: &Field, vectors: &[Vector]) -> Subspace {
        Subspace { rows: rref(field, vectors).0 }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn contains(&self, field: &Field, v: &[FieldElement]) -> bool {
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        rank(field, &rows) == self.rows.len()
    }

    pub fn intersection_dim(&self, field: &Field, other: &Subspace) -> usize {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        self.dim() + other.dim() - rank(field, &rows)
    }

    pub fn label(&self, field: &Field) -> String {
        let rows: Vec<String> = self.rows.iter().map(|r| field.display_vector(r)).collect();
        format!("<{}>", rows.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct FormedSpace {
    field: Field,
    dim: usize,
    kind: FormKind,
    /// Order of the field the form takes values in: `q` for hermitian, else the field order.
    q: u32,
    zeta: Option<FieldElement>,
}

impl FormedSpace {
    /// `q` is the order of the fixed field; hermitian spaces live over F_{q^2}.
    pub fn new(kind: FormKind, dim: usize, q: u32) -> Result<FormedSpace> {
        if dim == 0 {
            return Err(invalid("dimension must be positive"));
        }
        let even = dim % 2 == 0;
        match kind {
            FormKind::QuadraticPlus | FormKind::QuadraticMinus | FormKind::Symplectic if !even => {
                return Err(invalid(format!("{kind:?} needs even dimension, got {dim}")))
            }
            FormKind::QuadraticOdd if even => {
                return Err(invalid(format!("odd-dimensional quadratic form with dim {dim}")))
            }
            _ => {}
        }
        let field = match kind {
            FormKind::Hermitian => field_of_order(q.checked_mul(q).ok_or_else(|| invalid("q too large"))?)?,
            _ => field_of_order(q)?,
        };
        let zeta = if kind == FormKind::QuadraticMinus {
            let f = &field;
            let z = f
                .elements()
                .find(|&z| f.elements().all(|t| f.add(f.add(f.mul(t, t), t), z) != f.zero()))
                .ok_or_else(|| Error::Internal(format!("no irreducible t^2+t+z over F_{q}")))?;
            Some(z)
        } else {
            None
        };
        let space = FormedSpace { field, dim, kind, q, zeta };
        space.check_nondegenerate()?;
        Ok(space)
    }

    pub fn hermitian(n: usize, q: u32) -> Result<FormedSpace> {
        Self::new(FormKind::Hermitian, n, q)
    }

    pub fn symplectic(n: usize, q: u32) -> Result<FormedSpace> {
        Self::new(FormKind::Symplectic, n, q)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    /// Order of the field of form values.
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn zeta(&self) -> Option<FieldElement> {
        self.zeta
    }

    /// Number of hyperbolic pairs in the chosen basis.
    fn hyperbolic_pairs(&self) -> usize {
        match self.kind {
            FormKind::QuadraticMinus => self.dim / 2 - 1,
            _ => self.dim / 2,
        }
    }

    /// Dimension of the maximal totally isotropic (singular) subspaces.
    pub fn witt_index(&self) -> usize {
        self.hyperbolic_pairs()
    }

    fn check_nondegenerate(&self) -> Result<()> {
        let f = &self.field;
        let basis: Vec<Vector> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| if i == j { f.one() } else { f.zero() }).collect())
            .collect();
        let gram: Vec<Vector> = basis
            .iter()
            .map(|x| basis.iter().map(|y| self.polar(x, y)).collect())
            .collect();
        let radical = nullspace(f, &gram, self.dim);
        let ok = match radical.len() {
            0 => true,
            // Odd dimension in characteristic 2: the polar form has a 1-dim radical
            // on which Q must not vanish.
            1 if self.kind.is_quadratic() => self.value(&radical[0]) != f.zero(),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Internal(format!("{:?} form of dim {} is degenerate", self.kind, self.dim)))
        }
    }

    /// `Q(v)` for quadratic forms, `h(v, v)` for hermitian, zero for symplectic.
    pub fn value(&self, v: &[FieldElement]) -> FieldElement {
        let f = &self.field;
        match self.kind {
            FormKind::Hermitian => self.polar(v, v),
            FormKind::Symplectic => f.zero(),
            FormKind::QuadraticPlus | FormKind::QuadraticMinus | FormKind::QuadraticOdd => {
                let k = self.hyperbolic_pairs();
                let mut acc = f.zero();
                for i in 0..k {
                    acc = f.add(acc, f.mul(v[i], v[k + i]));
                }
                match self.kind {
                    FormKind::QuadraticOdd => f.add(acc, f.mul(v[2 * k], v[2 * k])),
                    FormKind::QuadraticMinus => {
                        let (a, b) = (v[2 * k], v[2 * k + 1]);
                        let z = self.zeta.expect("minus type has zeta");
                        let t = f.add(f.add(f.mul(a, a), f.mul(a, b)), f.mul(z, f.mul(b, b)));
                        f.add(acc, t)
                    }
                    _ => acc,
                }
            }
        }
    }

    /// `h(x, y)`, the symplectic form, or the polarisation `Q(x+y) - Q(x) - Q(y)`.
    pub fn polar(&self, x: &[FieldElement], y: &[FieldElement]) -> FieldElement {
        let f = &self.field;
        match self.kind {
            FormKind::Hermitian => x
                .iter()
                .zip(y)
                .fold(f.zero(), |acc, (&a, &b)| f.add(acc, f.mul(a, f.conj_unchecked(b)))),
            FormKind::Symplectic => {
                let m = self.dim / 2;
                (0..m).fold(f.zero(), |acc, i| {
                    let t = f.sub(f.mul(x[i], y[m + i]), f.mul(x[m + i], y[i]));
                    f.add(acc, t)
                })
            }
            _ => {
                let s: Vector = x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect();
                f.sub(f.sub(self.value(&s), self.value(x)), self.value(y))
            }
        }
    }

    /// Singular for quadratic forms, isotropic for hermitian; every vector for symplectic.
    pub fn is_singular(&self, v: &[FieldElement]) -> bool {
        self.value(v) == self.field.zero()
    }

    pub fn perpendicular(&self, x: &[FieldElement], y: &[FieldElement]) -> bool {
        self.polar(x, y) == self.field.zero()
    }

    /// Rescales `v` so its form value becomes `c`, choosing the least scalar.
    fn rescale_to(&self, v: &[FieldElement], c: FieldElement) -> Option<Vector> {
        let f = &self.field;
        let val = self.value(v);
        f.nonzero_elements().find_map(|s| {
            let factor = match self.kind {
                FormKind::Hermitian => f.mul(s, f.conj_unchecked(s)),
                _ => f.mul(s, s),
            };
            (f.mul(factor, val) == c).then(|| scale(f, s, v))
        })
    }

    /// Points of `PG(V)` passing `filter`, in lexicographic order of canonical
    /// representatives. Nonsingular points are scaled to form value 1 when possible.
    pub fn enumerate_points(&self, filter: PointFilter) -> Result<Vec<ProjectivePoint>> {
        let f = &self.field;
        if self.kind == FormKind::Symplectic && matches!(filter, PointFilter::Nonsingular | PointFilter::Value(_)) {
            return Err(invalid("a symplectic space has no nonsingular points"));
        }
        if let PointFilter::Value(c) = filter {
            if c == f.zero() {
                return Err(invalid("use the singular filter for value 0"));
            }
            if !f.in_subfield(c, self.q) {
                return Err(invalid(format!("{} is not a form value", f.display(c))));
            }
        }
        let mut out = Vec::new();
        for v in projective_points(f, self.dim) {
            let singular = self.is_singular(&v);
            let rep = match filter {
                PointFilter::All => Some(v),
                PointFilter::Singular => singular.then_some(v),
                PointFilter::Nonsingular if singular => None,
                PointFilter::Nonsingular => Some(self.rescale_to(&v, f.one()).unwrap_or(v)),
                PointFilter::Value(_) if singular => None,
                PointFilter::Value(c) => self.rescale_to(&v, c),
            };
            out.extend(rep.map(|rep| ProjectivePoint { rep }));
        }
        Ok(out)
    }

    /// Number of singular points on the line through `a` and `b`.
    pub fn line_tangency_count(&self, a: &ProjectivePoint, b: &ProjectivePoint) -> Result<usize> {
        let f = &self.field;
        if rank(f, &[a.rep.clone(), b.rep.clone()]) < 2 {
            return Err(invalid("the two points coincide"));
        }
        Ok(self.tangency_count_unchecked(&a.rep, &b.rep))
    }

    pub(crate) fn tangency_count_unchecked(&self, a: &[FieldElement], b: &[FieldElement]) -> usize {
        let f = &self.field;
        let on_b_side = f.elements().filter(|&t| self.is_singular(&axpy(f, b, t, a))).count();
        on_b_side + self.is_singular(a) as usize
    }

    /// Type of the quadratic form restricted to `p^perp` for a nonsingular point
    /// of an odd-dimensional space, read off from its number of singular points.
    pub fn perp_type(&self, p: &ProjectivePoint) -> Result<Eps> {
        let f = &self.field;
        if self.kind != FormKind::QuadraticOdd || f.characteristic() == 2 {
            return Err(invalid("perp type needs an odd-dimensional quadratic space over odd q"));
        }
        if self.is_singular(&p.rep) {
            return Err(invalid("point is singular"));
        }
        let unit = |i: usize| -> Vector { (0..self.dim).map(|j| if i == j { f.one() } else { f.zero() }).collect() };
        let row: Vector = (0..self.dim).map(|j| self.polar(&p.rep, &unit(j))).collect();
        let basis = nullspace(f, &[row], self.dim);
        let m = basis.len() / 2;
        let mut singular_vectors = 0u64;
        for coeffs in all_vectors(f, basis.len()).skip(1) {
            let mut v = vec![f.zero(); self.dim];
            for (c, b) in coeffs.iter().zip(&basis) {
                v = axpy(f, &v, *c, b);
            }
            if self.is_singular(&v) {
                singular_vectors += 1;
            }
        }
        let q = self.q as u64;
        let points = singular_vectors / (q - 1);
        let plus = (q.pow(m as u32) - 1) * (q.pow(m as u32 - 1) + 1) / (q - 1);
        let minus = (q.pow(m as u32) + 1) * (q.pow(m as u32 - 1) - 1) / (q - 1);
        if points == plus {
            Ok(Eps::Plus)
        } else if points == minus {
            Ok(Eps::Minus)
        } else {
            Err(Error::Internal(format!("perp space has {points} singular points")))
        }
    }

    /// Totally singular (isotropic) subspaces of dimension `d`.
    pub fn enumerate_totally_isotropic(&self, d: usize) -> Result<Vec<Subspace>> {
        if d > self.witt_index() {
            return Err(invalid(format!("no totally isotropic {d}-spaces: Witt index is {}", self.witt_index())));
        }
        Ok(enumerate_subspaces(&self.field, self.dim, d, |prev, row| {
            self.is_singular(row) && prev.iter().all(|p| self.perpendicular(p, row))
        }))
    }

    pub fn enumerate_max_isotropic(&self) -> Result<Vec<Subspace>> {
        self.enumerate_totally_isotropic(self.witt_index())
    }
}

/// All `d`-subspaces of `F^n` whose RREF rows pass `accept(previous_rows, row)`,
/// sorted by their RREF basis. Rows are built pivot by pivot so a rejected row
/// prunes every completion.
pub fn enumerate_subspaces<A>(field: &Field, n: usize, d: usize, accept: A) -> Vec<Subspace>
where
    A: Fn(&[Vector], &Vector) -> bool,
{
    let mut out = Vec::new();
    if d > n {
        return out;
    }
    for pivots in combinations(n, d) {
        let candidates: Vec<Vec<Vector>> = pivots
            .iter()
            .map(|&c| {
                let free: Vec<usize> = (c + 1..n).filter(|j| !pivots.contains(j)).collect();
                all_vectors(field, free.len())
                    .map(|vals| {
                        let mut row = vec![field.zero(); n];
                        row[c] = field.one();
                        for (&j, &x) in free.iter().zip(&vals) {
                            row[j] = x;
                        }
                        row
                    })
                    .collect()
            })
            .collect();
        let mut stack: Vec<Vector> = Vec::with_capacity(d);
        extend_rows(&candidates, &mut stack, &accept, &mut out);
    }
    out.sort();
    out
}

fn extend_rows<A>(candidates: &[Vec<Vector>], stack: &mut Vec<Vector>, accept: &A, out: &mut Vec<Subspace>)
where
    A: Fn(&[Vector], &Vector) -> bool,
{
    let level = stack.len();
    if level == candidates.len() {
        out.push(Subspace { rows: stack.clone() });
        return;
    }
    for row in &candidates[level] {
        if accept(stack, row) {
            stack.push(row.clone());
            extend_rows(candidates, stack, accept, out);
            stack.pop();
        }
    }
}

fn combinations(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, d, &mut Vec::new(), &mut out);
    out
}

/// A point-line flag of `PG(2, q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    pub point: Vector,
    pub line: Subspace,
}

/// All incident point-line pairs of `PG(2, q)`, ordered by point and then line.
pub fn enumerate_flags(q: u32) -> Result<Vec<Flag>> {
    let f = field_of_order(q)?;
    let lines = enumerate_subspaces(&f, 3, 2, |_, _| true);
    let mut out = Vec::new();
    for p in projective_points(&f, 3) {
        for l in &lines {
            if l.contains(&f, &p) {
                out.push(Flag { point: p.clone(), line: l.clone() });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::count_hermitian_norm_solutions;

    #[test]
    fn hermitian_plane_over_f9() {
        let s = FormedSpace::hermitian(3, 3).unwrap();
        assert_eq!(s.enumerate_points(PointFilter::All).unwrap().len(), 91);
        let ns = s.enumerate_points(PointFilter::Nonsingular).unwrap();
        assert_eq!(ns.len(), 63);
        assert!(ns.iter().all(|p| s.value(p.rep()) == s.field().one()));
        assert_eq!(s.enumerate_points(PointFilter::Singular).unwrap().len(), 28);
    }

    #[test]
    fn unit_vectors_match_norm_count() {
        for (n, q) in [(2usize, 2u32), (3, 2), (3, 3), (4, 2)] {
            let s = FormedSpace::hermitian(n, q).unwrap();
            let f = s.field();
            let points = s.enumerate_points(PointFilter::Value(f.one())).unwrap().len() as u128;
            let vectors = all_vectors(f, n).filter(|v| s.value(v) == f.one()).count() as u128;
            assert_eq!(points * (q as u128 + 1), vectors);
            assert_eq!(vectors, count_hermitian_norm_solutions(f, n, f.one()).unwrap());
        }
    }

    #[test]
    fn symplectic_points_are_all_singular() {
        let s = FormedSpace::symplectic(4, 3).unwrap();
        let all = s.enumerate_points(PointFilter::All).unwrap();
        assert_eq!(s.enumerate_points(PointFilter::Singular).unwrap(), all);
        assert!(s.enumerate_points(PointFilter::Nonsingular).is_err());
    }

    #[test]
    fn bad_spaces_are_rejected() {
        assert!(FormedSpace::new(FormKind::Symplectic, 5, 3).is_err());
        assert!(FormedSpace::new(FormKind::QuadraticOdd, 4, 3).is_err());
        assert!(FormedSpace::new(FormKind::QuadraticPlus, 4, 6).is_err());
    }

    #[test]
    fn minus_type_zeta_is_least_irreducible() {
        for q in [2u32, 3, 4, 5, 7, 9] {
            let s = FormedSpace::new(FormKind::QuadraticMinus, 4, q).unwrap();
            let f = s.field();
            let z = s.zeta().unwrap();
            let irreducible = |z: FieldElement| f.elements().all(|t| f.add(f.add(f.mul(t, t), t), z) != f.zero());
            assert!(irreducible(z));
            assert!(f.elements().take_while(|&x| x != z).all(|x| !irreducible(x)));
        }
    }

    #[test]
    fn singular_point_counts() {
        // O+_{2m}: (q^m-1)(q^{m-1}+1)/(q-1); O-_{2m}: (q^m+1)(q^{m-1}-1)/(q-1); O_{2m+1}: (q^{2m}-1)/(q-1).
        for q in [2u32, 3, 4] {
            let count = |kind, dim| {
                FormedSpace::new(kind, dim, q).unwrap().enumerate_points(PointFilter::Singular).unwrap().len() as u32
            };
            assert_eq!(count(FormKind::QuadraticPlus, 4), (q * q - 1) * (q + 1) / (q - 1));
            assert_eq!(count(FormKind::QuadraticMinus, 4), (q * q + 1) * (q - 1) / (q - 1));
            assert_eq!(count(FormKind::QuadraticOdd, 5), (q.pow(4) - 1) / (q - 1));
        }
    }

    #[test]
    fn tangency_in_hermitian_plane() {
        let s = FormedSpace::hermitian(3, 3).unwrap();
        let f = s.field();
        let pts = s.enumerate_points(PointFilter::Nonsingular).unwrap();
        let x = &pts[0];
        for y in &pts[1..] {
            let n = crate::gf::norm(f, s.polar(x.rep(), y.rep())).unwrap();
            let t = s.line_tangency_count(x, y).unwrap();
            assert_eq!(t == 1, n == f.one());
            if n == f.zero() {
                // A nondegenerate hermitian line carries q + 1 isotropic points.
                assert_eq!(t, 4);
            }
        }
        assert!(s.line_tangency_count(x, x).is_err());
    }

    #[test]
    fn tangency_in_odd_orthogonal_space() {
        let s = FormedSpace::new(FormKind::QuadraticOdd, 5, 5).unwrap();
        let f = s.field();
        let pts = s.enumerate_points(PointFilter::Value(f.one())).unwrap();
        let x = &pts[0];
        let half = f.inv(f.from_int(2)).unwrap();
        for y in pts.iter().skip(1).take(120) {
            let lam = f.mul(half, s.polar(x.rep(), y.rep()));
            let tangent = s.line_tangency_count(x, y).unwrap() == 1;
            assert_eq!(tangent, f.mul(lam, lam) == f.one());
        }
    }

    #[test]
    fn perp_types_split_nonsingular_points() {
        let s = FormedSpace::new(FormKind::QuadraticOdd, 3, 5).unwrap();
        let pts = s.enumerate_points(PointFilter::Nonsingular).unwrap();
        let plus = pts.iter().filter(|p| s.perp_type(p).unwrap() == Eps::Plus).count();
        assert_eq!((plus, pts.len() - plus), (15, 10));

        let s = FormedSpace::new(FormKind::QuadraticOdd, 5, 5).unwrap();
        let f = s.field();
        let pts = s.enumerate_points(PointFilter::Nonsingular).unwrap();
        let types: Vec<Eps> = pts.iter().map(|p| s.perp_type(p).unwrap()).collect();
        let plus = types.iter().filter(|&&e| e == Eps::Plus).count();
        assert_eq!((plus, pts.len() - plus), (325, 300));
        // The type is a function of the square class of Q.
        let mut seen = std::collections::BTreeMap::new();
        for (p, e) in pts.iter().zip(&types) {
            let square = f.is_square(s.value(p.rep()));
            assert_eq!(*seen.entry(square).or_insert(*e), *e);
        }
        assert_eq!(seen.len(), 2);
    }

    #[test]
    fn max_isotropic_counts() {
        for (q, expected) in [(2u32, 135usize), (3, 1120)] {
            let s = FormedSpace::symplectic(6, q).unwrap();
            let w = s.enumerate_max_isotropic().unwrap();
            assert_eq!(w.len(), expected);
            assert_eq!(w.len() as u32, (q.pow(3) + 1) * (q * q + 1) * (q + 1));
            for sub in w.iter().take(50) {
                for a in sub.rows() {
                    for b in sub.rows() {
                        assert!(s.perpendicular(a, b));
                    }
                }
            }
        }
        let o7 = FormedSpace::new(FormKind::QuadraticOdd, 7, 2).unwrap();
        assert_eq!(o7.enumerate_max_isotropic().unwrap().len(), 135);
        let o8 = FormedSpace::new(FormKind::QuadraticPlus, 8, 2).unwrap();
        // 2(q+1)(q^2+1)(q^3+1) singular solids, two families of 135.
        assert_eq!(o8.enumerate_max_isotropic().unwrap().len(), 270);
    }

    #[test]
    fn flags_of_small_planes() {
        for q in [2u32, 3, 4] {
            let flags = enumerate_flags(q).unwrap();
            assert_eq!(flags.len() as u32, (q * q + q + 1) * (q + 1));
            let f = field_of_order(q).unwrap();
            assert!(flags.iter().all(|fl| fl.line.contains(&f, &fl.point) && fl.line.dim() == 2));
        }
    }
}
