//! Exact arithmetic in F_{p^k} over a polynomial basis.
//!
//! A [`Field`] owns the reduction modulus and a Cayley table for addition and
//! multiplication, computed once from the polynomial arithmetic at
//! construction. Elements are small `Copy` handles whose index spells out the
//! coefficient vector in base `p` (coefficient of `t^i` is digit `i`), so index
//! order is the lexicographic order used by every enumeration in the crate.

mod counting;
mod fp_poly;

pub use counting::{
    char_sum_c, char_sum_c_direct, count_hermitian_norm_solutions, count_hyperbolic_solutions,
    hermitian_norm_count_closed_form, hyperbolic_count_closed_form, norm, quadratic_character,
    trace_to_prime, CharacterValue,
};

use crate::error::{invalid, Error, Result};
use std::fmt;

/// Fields above this order are refused; every construction in the crate
/// stays far below it.
pub const MAX_FIELD_ORDER: u32 = 1024;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u32);

impl FieldElement {
    /// Position of the element in the field's enumeration order.
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone)]
pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
    /// `a -> a^sqrt(q)` when `k` is even.
    conj: Option<Vec<u32>>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for Field {}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits a prime power `q = p^k`, or `None` if `q` is not one.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

/// Builds F_{p^k} with the lexicographically least monic irreducible modulus
/// (coefficient vectors compared constant term first).
pub fn make_field(p: u32, k: u32) -> Result<Field> {
    if !is_prime(p) {
        return Err(invalid(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(invalid("extension degree must be positive"));
    }
    let q = p
        .checked_pow(k)
        .filter(|&q| q <= MAX_FIELD_ORDER)
        .ok_or_else(|| invalid(format!("field order {p}^{k} exceeds {MAX_FIELD_ORDER}")))?;
    // Candidate number `idx` lists (a_0, .., a_{k-1}) big-endian with a_0 most significant.
    let modulus = (0..q)
        .map(|idx| {
            let mut f: Vec<u32> = (0..k).map(|i| idx / p.pow(k - 1 - i) % p).collect();
            f.push(1);
            f
        })
        .find(|f| fp_poly::is_irreducible(f, p))
        .ok_or_else(|| Error::Internal(format!("no irreducible of degree {k} over F_{p}")))?;
    Field::with_modulus(p, modulus)
}

/// Field of order `q`, which must be a prime power.
pub fn field_of_order(q: u32) -> Result<Field> {
    let (p, k) = prime_power(q).ok_or_else(|| invalid(format!("{q} is not a prime power")))?;
    make_field(p, k)
}

impl Field {
    /// Builds the field from an explicit monic modulus (constant term first).
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<Field> {
        if !is_prime(p) {
            return Err(invalid(format!("{p} is not prime")));
        }
        if modulus.len() < 2 || modulus.last() != Some(&1) || modulus.iter().any(|&c| c >= p) {
            return Err(invalid("modulus must be monic of positive degree with reduced coefficients"));
        }
        if !fp_poly::is_irreducible(&modulus, p) {
            return Err(invalid(format!("{modulus:?} is reducible over F_{p}")));
        }
        let k = modulus.len() as u32 - 1;
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| invalid(format!("field order {p}^{k} exceeds {MAX_FIELD_ORDER}")))?;
        let qu = q as usize;

        let digits = |idx: u32| -> Vec<u32> { (0..k).map(|i| idx / p.pow(i) % p).collect() };
        let encode = |c: &[u32]| -> u32 { c.iter().enumerate().map(|(i, &d)| d * p.pow(i as u32)).sum() };

        let mut add = vec![0u32; qu * qu];
        let mut mul = vec![0u32; qu * qu];
        for a in 0..q {
            let ca = digits(a);
            for b in a..q {
                let cb = digits(b);
                let sum: Vec<u32> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
                let mut prod = fp_poly::mul_mod(&ca, &cb, &modulus, p);
                prod.resize(k as usize, 0);
                let (s, m) = (encode(&sum), encode(&prod));
                add[a as usize * qu + b as usize] = s;
                add[b as usize * qu + a as usize] = s;
                mul[a as usize * qu + b as usize] = m;
                mul[b as usize * qu + a as usize] = m;
            }
        }
        let neg = (0..q)
            .map(|a| encode(&digits(a).iter().map(|&d| (p - d) % p).collect::<Vec<_>>()))
            .collect();
        let mut inv = vec![0u32; qu];
        for a in 1..q {
            let b = (1..q)
                .find(|&b| mul[a as usize * qu + b as usize] == 1)
                .ok_or_else(|| Error::Internal(format!("element {a} has no inverse")))?;
            inv[a as usize] = b;
        }
        let mut field = Field { p, k, q, modulus, add, mul, neg, inv, conj: None };
        if k % 2 == 0 {
            let sub = p.pow(k / 2);
            let conj = (0..q).map(|a| field.pow(FieldElement(a), sub as u64).0).collect();
            field.conj = Some(conj);
        }
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Reduction polynomial, constant term first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.q).map(FieldElement)
    }

    pub fn element(&self, index: usize) -> FieldElement {
        assert!(index < self.q as usize, "element index {index} out of range");
        FieldElement(index as u32)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The polynomial generator `t` (equal to `0` for prime fields reduced mod `x`).
    pub fn generator(&self) -> FieldElement {
        if self.k == 1 {
            // t reduces to -modulus[0] in a prime field.
            FieldElement((self.p - self.modulus[0]) % self.p)
        } else {
            FieldElement(self.p)
        }
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.k as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(invalid(format!("{coeffs:?} is not a reduced coefficient vector")));
        }
        Ok(FieldElement(
            coeffs.iter().enumerate().map(|(i, &c)| c * self.p.pow(i as u32)).sum(),
        ))
    }

    /// Coefficients of the element in the basis `1, t, .., t^{k-1}`.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        (0..self.k).map(|i| a.0 / self.p.pow(i) % self.p).collect()
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    /// Integer value of a prime-subfield element.
    pub fn to_prime_int(&self, a: FieldElement) -> Option<u32> {
        (a.0 < self.p).then_some(a.0)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[a.0 as usize * self.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[a.0 as usize * self.q as usize + b.0 as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Option<FieldElement> {
        (a.0 != 0).then(|| FieldElement(self.inv[a.0 as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Option<FieldElement> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: FieldElement, mut exp: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// The Frobenius map `a -> a^p`.
    pub fn frobenius(&self, a: FieldElement) -> FieldElement {
        self.pow(a, self.p as u64)
    }

    /// Order of the subfield fixed by `a -> a^sqrt(q)`, if `q` is a square.
    pub fn quadratic_subfield_order(&self) -> Option<u32> {
        (self.k % 2 == 0).then(|| self.p.pow(self.k / 2))
    }

    /// Involutory automorphism `a -> a^sqrt(q)` of a field of square order.
    pub fn conj(&self, a: FieldElement) -> Result<FieldElement> {
        let table = self
            .conj
            .as_ref()
            .ok_or_else(|| invalid(format!("F_{} has no quadratic subfield", self.q)))?;
        Ok(FieldElement(table[a.0 as usize]))
    }

    #[inline]
    pub(crate) fn conj_unchecked(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.conj.as_ref().expect("field of square order")[a.0 as usize])
    }

    /// Whether `a` lies in the subfield of the given order.
    pub fn in_subfield(&self, a: FieldElement, order: u32) -> bool {
        self.pow(a, order as u64) == a
    }

    /// Elements of the subfield of order `order`, in enumeration order.
    pub fn subfield_elements(&self, order: u32) -> Result<Vec<FieldElement>> {
        match prime_power(order) {
            Some((p, j)) if p == self.p && self.k % j == 0 => {}
            _ => return Err(invalid(format!("F_{} has no subfield of order {order}", self.q))),
        }
        Ok(self.elements().filter(|&a| self.in_subfield(a, order)).collect())
    }

    pub fn multiplicative_order(&self, a: FieldElement) -> Option<u64> {
        if a.0 == 0 {
            return None;
        }
        let mut x = a;
        let mut n = 1;
        while x != self.one() {
            x = self.mul(x, a);
            n += 1;
        }
        Some(n)
    }

    /// Least element (in enumeration order) generating the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        self.nonzero_elements()
            .find(|&a| self.multiplicative_order(a) == Some(self.q as u64 - 1))
            .expect("multiplicative group of a finite field is cyclic")
    }

    pub fn is_square(&self, a: FieldElement) -> bool {
        a.0 == 0 || self.p == 2 || self.pow(a, (self.q as u64 - 1) / 2) == self.one()
    }

    /// Human-readable form: an integer for prime fields, a polynomial in `t` otherwise.
    pub fn display(&self, a: FieldElement) -> String {
        if self.k == 1 {
            return a.0.to_string();
        }
        let c = self.coeffs(a);
        let terms: Vec<String> = c
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| match (i, x) {
                (0, x) => x.to_string(),
                (1, 1) => "t".to_string(),
                (1, x) => format!("{x}t"),
                (i, 1) => format!("t^{i}"),
                (i, x) => format!("{x}t^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }

    /// Comma-separated display of a vector, used for vertex labels.
    pub fn display_vector(&self, v: &[FieldElement]) -> String {
        let parts: Vec<String> = v.iter().map(|&a| self.display(a)).collect();
        format!("({})", parts.join(","))
    }
}
