//! Row reduction over a finite field.

use crate::gf::{Field, FieldElement};

pub type Vector = Vec<FieldElement>;

/// Reduced row echelon form with zero rows dropped, plus the pivot columns.
pub fn rref(field: &Field, rows: &[Vector]) -> (Vec<Vector>, Vec<usize>) {
    let mut m: Vec<Vector> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(sel) = (r..m.len()).find(|&i| m[i][c] != field.zero()) else {
            continue;
        };
        m.swap(r, sel);
        let inv = field.inv(m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != field.zero() {
                let f = m[i][c];
                for j in 0..ncols {
                    let t = field.mul(f, m[r][j]);
                    m[i][j] = field.sub(m[i][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(field: &Field, rows: &[Vector]) -> usize {
    rref(field, rows).0.len()
}

/// A basis of `{x : row . x = 0 for every row}` in `ncols` coordinates.
pub fn nullspace(field: &Field, rows: &[Vector], ncols: usize) -> Vec<Vector> {
    let (m, pivots) = rref(field, rows);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut x = vec![field.zero(); ncols];
        x[free] = field.one();
        for (row, &pc) in m.iter().zip(&pivots) {
            x[pc] = field.neg(row[free]);
        }
        basis.push(x);
    }
    basis
}

pub fn dot(field: &Field, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
    a.iter()
        .zip(b)
        .fold(field.zero(), |acc, (&x, &y)| field.add(acc, field.mul(x, y)))
}

pub fn scale(field: &Field, c: FieldElement, v: &[FieldElement]) -> Vector {
    v.iter().map(|&x| field.mul(c, x)).collect()
}

/// `a + c b`.
pub fn axpy(field: &Field, a: &[FieldElement], c: FieldElement, b: &[FieldElement]) -> Vector {
    a.iter().zip(b).map(|(&x, &y)| field.add(x, field.mul(c, y))).collect()
}

/// Scales `v` so its first nonzero coordinate is 1; `None` for the zero vector.
pub fn canonical(field: &Field, v: &[FieldElement]) -> Option<Vector> {
    let lead = *v.iter().find(|&&x| x != field.zero())?;
    let inv = field.inv(lead).expect("nonzero");
    Some(scale(field, inv, v))
}

/// All vectors of `F^n`, lexicographic with the last coordinate running fastest.
pub fn all_vectors(field: &Field, n: usize) -> impl Iterator<Item = Vector> + '_ {
    let q = field.order() as usize;
    let total = q.checked_pow(n as u32).expect("vector space too large");
    (0..total).map(move |mut idx| {
        let mut v = vec![field.zero(); n];
        for slot in v.iter_mut().rev() {
            *slot = field.element(idx % q);
            idx /= q;
        }
        v
    })
}

/// Canonical representatives of the points of `PG(n-1, q)`, in lexicographic order.
pub fn projective_points(field: &Field, n: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for lead in (0..n).rev() {
        for tail in all_vectors(field, n - lead - 1) {
            let mut v = vec![field.zero(); n];
            v[lead] = field.one();
            v[lead + 1..].copy_from_slice(&tail);
            out.push(v);
        }
    }
    out
}
