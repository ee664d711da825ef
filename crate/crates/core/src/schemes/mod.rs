//! Intersection numbers of distance-regular graphs from their intersection
//! arrays, computed exactly over any [`Scalar`]: rationals for numeric arrays,
//! polynomials or rational functions for parametrised families.

pub mod poly;
pub mod ratfunc;
pub mod symbolic;

pub use poly::{Poly, RatPoly};
pub use ratfunc::RatFunc;

use crate::error::{Error, Result};
use crate::orbitals::CountTensor;
use num_rational::BigRational;
use num_traits::Signed;
use serde_json::{json, Value};
use std::fmt;

/// Exact commutative ring elements with division where it is exact.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    /// Name of the indeterminate when this type is the coefficient ring of a [`Poly`].
    const POLY_VAR: &'static str = "Y";

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn div_exact(&self, o: &Self) -> Result<Self>;

    /// Sign and magnitude text for use as a polynomial coefficient.
    fn render_coeff(&self) -> (bool, String);

    fn to_json_string(&self) -> String {
        self.to_string()
    }
}

/// `p[h][i][j]` with valencies `k` and order `v`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntersectionTensor<S> {
    pub v: S,
    pub k: Vec<S>,
    pub p: Vec<Vec<Vec<S>>>,
}

impl<S: Scalar> IntersectionTensor<S> {
    pub fn rank(&self) -> usize {
        self.k.len()
    }

    pub fn get(&self, h: usize, i: usize, j: usize) -> &S {
        &self.p[h][i][j]
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> Result<T>) -> Result<IntersectionTensor<T>> {
        Ok(IntersectionTensor {
            v: f(&self.v)?,
            k: self.k.iter().map(&f).collect::<Result<_>>()?,
            p: self
                .p
                .iter()
                .map(|m| m.iter().map(|r| r.iter().map(&f).collect()).collect())
                .collect::<Result<_>>()?,
        })
    }

    /// `{"rank", "k", "v", "p"}` with every entry as a string.
    pub fn to_json(&self) -> Value {
        let p: Vec<Vec<Vec<String>>> = self
            .p
            .iter()
            .map(|m| m.iter().map(|r| r.iter().map(Scalar::to_json_string).collect()).collect())
            .collect();
        json!({
            "rank": self.rank(),
            "k": self.k.iter().map(Scalar::to_json_string).collect::<Vec<_>>(),
            "v": self.v.to_json_string(),
            "p": p,
        })
    }

    /// Every relation that a symmetric association scheme satisfies, in order.
    pub fn relation_checks(&self) -> Vec<(&'static str, Option<String>)> {
        RELATION_NAMES.iter().enumerate().map(|(i, &name)| (name, check_relation(self, i))).collect()
    }

    /// First violated relation, if any.
    pub fn audit(&self) -> Result<()> {
        for (relation, failure) in self.relation_checks() {
            if let Some(detail) = failure {
                return Err(Error::RelationViolated { relation, detail });
            }
        }
        Ok(())
    }
}

pub const RELATION_NAMES: [&str; 7] = [
    "p^h_0j = [j = h]",
    "p^0_ij = [i = j] k_j",
    "p^h_ij = p^h_ji",
    "sum_i p^h_ij = k_j",
    "sum_j k_j = v",
    "k_h p^h_ij = k_j p^j_ih",
    "sum_l p^l_ij p^m_hl = sum_l p^l_hj p^m_il",
];

/// A description of the first failure of relation `idx`, if it fails.
fn check_relation<S: Scalar>(t: &IntersectionTensor<S>, idx: usize) -> Option<String> {
    let r = t.rank();
    let p = &t.p;
    match idx {
        0 => triples(r).find_map(|(h, _, j)| {
            let want = if j == h { S::one() } else { S::zero() };
            (p[h][0][j] != want).then(|| format!("p^{h}_0{j} = {}", p[h][0][j]))
        }),
        1 => triples(r).find_map(|(_, i, j)| {
            let want = if i == j { t.k[j].clone() } else { S::zero() };
            (p[0][i][j] != want).then(|| format!("p^0_{i}{j} = {}, expected {want}", p[0][i][j]))
        }),
        2 => triples(r).find_map(|(h, i, j)| {
            (p[h][i][j] != p[h][j][i]).then(|| format!("p^{h}_{i}{j} = {}, p^{h}_{j}{i} = {}", p[h][i][j], p[h][j][i]))
        }),
        3 => (0..r).flat_map(|h| (0..r).map(move |j| (h, j))).find_map(|(h, j)| {
            let s = (0..r).fold(S::zero(), |acc, i| acc.plus(&p[h][i][j]));
            (s != t.k[j]).then(|| format!("column {j} of p^{h} sums to {s}, k_{j} = {}", t.k[j]))
        }),
        4 => {
            let s = t.k.iter().fold(S::zero(), |acc, k| acc.plus(k));
            (s != t.v).then(|| format!("valencies sum to {s}, v = {}", t.v))
        }
        5 => triples(r).find_map(|(h, i, j)| {
            let (a, b) = (t.k[h].times(&p[h][i][j]), t.k[j].times(&p[j][i][h]));
            (a != b).then(|| format!("at (h, i, j) = ({h}, {i}, {j}): {a} vs {b}"))
        }),
        _ => triples(r).flat_map(|(h, i, j)| (0..r).map(move |m| (h, i, j, m))).find_map(|(h, i, j, m)| {
            let lhs = (0..r).fold(S::zero(), |acc, l| acc.plus(&p[l][i][j].times(&p[m][h][l])));
            let rhs = (0..r).fold(S::zero(), |acc, l| acc.plus(&p[l][h][j].times(&p[m][i][l])));
            (lhs != rhs).then(|| format!("at (h, i, j, m) = ({h}, {i}, {j}, {m}): {lhs} vs {rhs}"))
        }),
    }
}

fn triples(r: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..r).flat_map(move |h| (0..r).flat_map(move |i| (0..r).map(move |j| (h, i, j))))
}

/// `p^h_ij` of the distance scheme of a distance-regular graph with
/// intersection array `{b_0..b_{d-1}; c_1..c_d}`, by the three-term recursion
/// of the distance matrices. The result is audited before it is returned.
pub fn tensor_from_array<S: Scalar>(b: &[S], c: &[S]) -> Result<IntersectionTensor<S>> {
    let d = b.len();
    if d == 0 || c.len() != d {
        return Err(Error::InfeasibleArray(format!(
            "need equally many b and c entries, got {} and {}",
            b.len(),
            c.len()
        )));
    }
    if c[0] != S::one() {
        return Err(Error::InfeasibleArray(format!("c_1 = {}, must be 1", c[0])));
    }
    if let Some(i) = b.iter().position(Scalar::is_zero) {
        return Err(Error::InfeasibleArray(format!("b_{i} = 0 before the diameter")));
    }
    if let Some(i) = c.iter().position(Scalar::is_zero) {
        return Err(Error::InfeasibleArray(format!("c_{} = 0", i + 1)));
    }
    let k = b[0].clone();
    let bb = |i: usize| if i < d { b[i].clone() } else { S::zero() };
    let cc = |i: usize| if i == 0 || i > d { S::zero() } else { c[i - 1].clone() };
    let aa = |i: usize| k.minus(&bb(i)).minus(&cc(i));
    let r = d + 1;

    let mut val = vec![S::one()];
    for i in 0..d {
        val.push(val[i].times(&bb(i)).div_exact(&cc(i + 1))?);
    }
    let v = val.iter().fold(S::zero(), |acc, x| acc.plus(x));

    // q[i][j][h] = p^h_ij while building, indexed by the row being generated.
    let mut q = vec![vec![vec![S::zero(); r]; r]; r];
    for j in 0..r {
        q[0][j][j] = S::one();
    }
    for j in 0..r {
        if j > 0 {
            q[1][j][j - 1] = bb(j - 1);
        }
        q[1][j][j] = aa(j);
        if j + 1 < r {
            q[1][j][j + 1] = cc(j + 1);
        }
    }
    for i in 1..d {
        for j in 0..r {
            for h in 0..r {
                let mut acc = S::zero();
                if j > 0 {
                    acc = acc.plus(&q[i][j - 1][h].times(&bb(j - 1)));
                }
                acc = acc.plus(&q[i][j][h].times(&aa(j).minus(&aa(i))));
                if j + 1 < r {
                    acc = acc.plus(&q[i][j + 1][h].times(&cc(j + 1)));
                }
                acc = acc.minus(&q[i - 1][j][h].times(&bb(i - 1)));
                q[i + 1][j][h] = acc.div_exact(&cc(i + 1))?;
            }
        }
    }
    let p = (0..r)
        .map(|h| (0..r).map(|i| (0..r).map(|j| q[i][j][h].clone()).collect()).collect())
        .collect();
    let t = IntersectionTensor { v, k: val, p };
    t.audit().map_err(|e| match e {
        Error::RelationViolated { relation, detail } => {
            Error::InfeasibleArray(format!("relation {relation} fails: {detail}"))
        }
        other => other,
    })?;
    Ok(t)
}

/// Numeric array: the rational tensor, plus checks that make it realisable
/// as counts (nonnegative `a_i`, integral valencies and entries).
pub fn tensor_from_int_array(b: &[i64], c: &[i64]) -> Result<IntersectionTensor<BigRational>> {
    let to = |x: &[i64]| x.iter().map(|&n| BigRational::from_i64(n)).collect::<Vec<_>>();
    let k = *b.first().ok_or_else(|| Error::InfeasibleArray("empty array".into()))?;
    if let Some((i, _)) = b.iter().chain(c).enumerate().find(|(_, &x)| x < 0) {
        return Err(Error::InfeasibleArray(format!("entry {i} is negative")));
    }
    for i in 1..=b.len() {
        let bi = b.get(i).copied().unwrap_or(0);
        let ci = c.get(i - 1).copied().unwrap_or(0);
        if bi + ci > k {
            return Err(Error::InfeasibleArray(format!("a_{i} = {} is negative", k - bi - ci)));
        }
    }
    let t = tensor_from_array(&to(b), &to(c))?;
    if let Some((i, x)) = t.k.iter().enumerate().find(|(_, x)| !x.is_integer()) {
        return Err(Error::InfeasibleArray(format!("k_{i} = {x} is not an integer")));
    }
    for (h, m) in t.p.iter().enumerate() {
        for (i, row) in m.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if !x.is_integer() || x.is_negative() {
                    return Err(Error::InfeasibleArray(format!("p^{h}_{i}{j} = {x} is not a count")));
                }
            }
        }
    }
    Ok(t)
}

impl From<&CountTensor> for IntersectionTensor<BigRational> {
    fn from(c: &CountTensor) -> Self {
        let r = |x: u64| BigRational::from_integer(x.into());
        IntersectionTensor {
            v: r(c.v),
            k: c.k.iter().map(|&x| r(x)).collect(),
            p: c.p.iter().map(|m| m.iter().map(|row| row.iter().map(|&x| r(x)).collect()).collect()).collect(),
        }
    }
}

/// The diagonal values `p^h_ii` of one relation of a rank four scheme.
#[derive(Clone, Debug, PartialEq)]
pub struct UnionVerdict<S> {
    /// `p^1_ii, p^2_ii, p^3_ii`.
    pub values: Vec<S>,
    /// All three equal.
    pub all_equal: bool,
    /// Equal over `h != i`: the graph of relation `i` is then strongly regular.
    pub strongly_regular: bool,
}

/// Reads `p^h_ii` for `h = 1, 2, 3` of a rank four tensor.
pub fn srg_union_criterion<S: Scalar>(t: &IntersectionTensor<S>, i: usize) -> Result<UnionVerdict<S>> {
    if t.rank() != 4 {
        return Err(crate::error::invalid(format!("criterion needs rank 4, tensor has rank {}", t.rank())));
    }
    if !(1..4).contains(&i) {
        return Err(crate::error::invalid(format!("relation {i} is not one of 1, 2, 3")));
    }
    let values: Vec<S> = (1..4).map(|h| t.p[h][i][i].clone()).collect();
    let all_equal = values.windows(2).all(|w| w[0] == w[1]);
    let others: Vec<&S> = (1..4).filter(|&h| h != i).map(|h| &values[h - 1]).collect();
    let strongly_regular = others[0] == others[1];
    Ok(UnionVerdict { values, all_equal, strongly_regular })
}
