//! Norms, traces, the quadratic character and the solution counts built on them.
//!
//! Validated closed forms (checked against exhaustive enumeration in the tests):
//!
//! * `#{a in F_{q^2}^n : sum N(a_i) = 0} = q^{2n-1} + (-1)^n (q^n - q^{n-1})`, which
//!   counts the zero vector; the nonzero solutions number
//!   `(q^n - (-1)^n)(q^{n-1} + (-1)^n)`.
//! * `#{a in F_{q^2}^n : sum N(a_i) = c} = q^{2n-1} - (-1)^n q^{n-1}` for `c != 0`.
//! * With `k` hyperbolic pairs, `#{sum a_i b_i = 0} = q^{2k-1} + q^k - q^{k-1}` (zero
//!   vector included, so `(q^k - 1)(q^{k-1} + 1)` nonzero solutions) and
//!   `#{sum a_i b_i = c} = q^{2k-1} - q^{k-1}` for `c != 0`.

use super::{Field, FieldElement};
use crate::error::{invalid, Error, Result};
use serde::Serialize;

/// Value of the quadratic character or of the trace indicator.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CharacterValue {
    Minus,
    Zero,
    Plus,
}

impl CharacterValue {
    pub fn value(self) -> i64 {
        match self {
            CharacterValue::Minus => -1,
            CharacterValue::Zero => 0,
            CharacterValue::Plus => 1,
        }
    }
}

/// `N(a) = a^{q+1}` from F_{q^2} onto its subfield F_q.
pub fn norm(field: &Field, a: FieldElement) -> Result<FieldElement> {
    let q = field
        .quadratic_subfield_order()
        .ok_or_else(|| invalid(format!("norm needs a field of square order, got {}", field.order())))?;
    let n = field.pow(a, q as u64 + 1);
    if !field.in_subfield(n, q) {
        return Err(Error::Internal(format!("norm of {} left the subfield", field.display(a))));
    }
    Ok(n)
}

/// Absolute trace `sum_{i<k} a^{2^i}` of F_{2^k} onto F_2.
pub fn trace_to_prime(field: &Field, a: FieldElement) -> Result<FieldElement> {
    if field.characteristic() != 2 {
        return Err(invalid("trace to F_2 needs characteristic 2"));
    }
    let mut acc = field.zero();
    let mut x = a;
    for _ in 0..field.degree() {
        acc = field.add(acc, x);
        x = field.mul(x, x);
    }
    debug_assert!(acc == field.zero() || acc == field.one());
    Ok(acc)
}

/// `chi(a) = a^{(q-1)/2}` read in {-1, 0, +1}.
pub fn quadratic_character(field: &Field, a: FieldElement) -> Result<CharacterValue> {
    if field.characteristic() == 2 {
        return Err(invalid("quadratic character needs odd q"));
    }
    if a == field.zero() {
        return Ok(CharacterValue::Zero);
    }
    let e = field.pow(a, (field.order() as u64 - 1) / 2);
    if e == field.one() {
        Ok(CharacterValue::Plus)
    } else if e == field.neg(field.one()) {
        Ok(CharacterValue::Minus)
    } else {
        Err(Error::Internal(format!("{}^((q-1)/2) is not +-1", field.display(a))))
    }
}

/// Number of `(a_1..a_n)` in F_{q^2}^n with `sum N(a_i) = c`.
///
/// `field` is F_{q^2} and `c` must lie in its subfield F_q. Each coordinate
/// contributes norm 0 once and every nonzero norm value `q + 1` times, so the
/// count is a convolution over the values of F_q.
pub fn count_hermitian_norm_solutions(field: &Field, n: usize, c: FieldElement) -> Result<u128> {
    let q = field
        .quadratic_subfield_order()
        .ok_or_else(|| invalid("hermitian counts need a field of square order"))?;
    if !field.in_subfield(c, q) {
        return Err(invalid(format!("{} is not in F_{q}", field.display(c))));
    }
    let sub = field.subfield_elements(q)?;
    let step: Vec<(FieldElement, u128)> = sub
        .iter()
        .map(|&v| (v, if v == field.zero() { 1 } else { q as u128 + 1 }))
        .collect();
    let dist = convolve_power(field, &sub, &step, n)?;
    Ok(dist[c.index()])
}

/// Number of `(a_1, b_1, .., a_k, b_k)` in F_q^{2k} with `sum a_i b_i` equal to
/// zero or to a fixed nonzero value.
pub fn count_hyperbolic_solutions(field: &Field, k: usize, zero_target: bool) -> Result<u128> {
    let q = field.order() as u128;
    let all: Vec<FieldElement> = field.elements().collect();
    // a*b = 0 for 2q - 1 pairs; each nonzero value has q - 1 preimages.
    let step: Vec<(FieldElement, u128)> = all
        .iter()
        .map(|&v| (v, if v == field.zero() { 2 * q - 1 } else { q - 1 }))
        .collect();
    let dist = convolve_power(field, &all, &step, k)?;
    let nonzero: Vec<u128> = field.nonzero_elements().map(|c| dist[c.index()]).collect();
    if nonzero.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Internal("hyperbolic count depends on the nonzero target".into()));
    }
    Ok(if zero_target { dist[0] } else { nonzero[0] })
}

/// Distribution of a sum of `n` independent values, each distributed as `step`,
/// over the additive group spanned by `support`. Indexed by element index.
fn convolve_power(
    field: &Field,
    support: &[FieldElement],
    step: &[(FieldElement, u128)],
    n: usize,
) -> Result<Vec<u128>> {
    let mut dist = vec![0u128; field.order() as usize];
    dist[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u128; dist.len()];
        for &s in support {
            let ways = dist[s.index()];
            if ways == 0 {
                continue;
            }
            for &(v, mult) in step {
                let slot = &mut next[field.add(s, v).index()];
                *slot = ways
                    .checked_mul(mult)
                    .and_then(|w| slot.checked_add(w))
                    .ok_or_else(|| invalid("count overflows u128"))?;
            }
        }
        dist = next;
    }
    Ok(dist)
}

fn signed_pow(q: i128, e: u32) -> i128 {
    q.pow(e)
}

/// Closed form for [`count_hermitian_norm_solutions`]; `zero` selects `c = 0`.
pub fn hermitian_norm_count_closed_form(n: u32, q: u32, zero: bool) -> u128 {
    if n == 0 {
        return zero as u128;
    }
    let q = q as i128;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let v = if zero {
        signed_pow(q, 2 * n - 1) + sign * (signed_pow(q, n) - signed_pow(q, n - 1))
    } else {
        signed_pow(q, 2 * n - 1) - sign * signed_pow(q, n - 1)
    };
    v as u128
}

/// Closed form for [`count_hyperbolic_solutions`] with `k` hyperbolic pairs.
pub fn hyperbolic_count_closed_form(k: u32, q: u32, zero: bool) -> u128 {
    if k == 0 {
        return zero as u128;
    }
    let q = q as u128;
    if zero {
        q.pow(2 * k - 1) + q.pow(k) - q.pow(k - 1)
    } else {
        q.pow(2 * k - 1) - q.pow(k - 1)
    }
}

/// `c^lambda_{gamma1 gamma2} = sum_x r(x)`, where `r(x)` is the number of roots in
/// F_q of `P(T) = T^2 - (gamma2 - lambda x) T + m(x)` and `m(x) = 1 - x gamma1 + x^2`.
///
/// Odd `q` counts roots as `1 + chi(discriminant)`. Even `q` substitutes
/// `t = k(x) T` to reach `t^2 - t + m/k^2`, which splits exactly when its
/// absolute trace vanishes; when `k(x) = 0` the polynomial `T^2 + m(x)` has a
/// single root because squaring is bijective.
pub fn char_sum_c(field: &Field, gamma1: FieldElement, gamma2: FieldElement, lambda: FieldElement) -> Result<u64> {
    let f = field;
    let mut total = 0i64;
    for x in f.elements() {
        let kx = f.sub(gamma2, f.mul(lambda, x));
        let mx = f.add(f.sub(f.one(), f.mul(x, gamma1)), f.mul(x, x));
        let roots = if f.characteristic() == 2 {
            match f.inv(kx) {
                None => 1,
                Some(kinv) => {
                    let y = f.mul(mx, f.mul(kinv, kinv));
                    if trace_to_prime(f, y)? == f.zero() {
                        2
                    } else {
                        0
                    }
                }
            }
        } else {
            let four = f.from_int(4);
            let disc = f.sub(f.mul(kx, kx), f.mul(four, mx));
            1 + quadratic_character(f, disc)?.value()
        };
        total += roots;
    }
    Ok(total as u64)
}

/// Counts the pairs `(x, T)` with `P(T) = 0` by direct substitution.
pub fn char_sum_c_direct(field: &Field, gamma1: FieldElement, gamma2: FieldElement, lambda: FieldElement) -> u64 {
    let f = field;
    let mut total = 0;
    for x in f.elements() {
        let kx = f.sub(gamma2, f.mul(lambda, x));
        let mx = f.add(f.sub(f.one(), f.mul(x, gamma1)), f.mul(x, x));
        for t in f.elements() {
            let val = f.add(f.sub(f.mul(t, t), f.mul(kx, t)), mx);
            if val == f.zero() {
                total += 1;
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{field_of_order, make_field};
    use proptest::prelude::*;

    /// Exhaustive enumeration of F_{q^2}^n.
    fn brute_hermitian(field: &Field, n: usize, c: FieldElement) -> u128 {
        let q2 = field.order() as usize;
        let mut count = 0;
        let total = q2.pow(n as u32);
        for idx in 0..total {
            let mut s = field.zero();
            let mut rest = idx;
            for _ in 0..n {
                let a = field.element(rest % q2);
                rest /= q2;
                s = field.add(s, norm(field, a).unwrap());
            }
            if s == c {
                count += 1;
            }
        }
        count
    }

    fn brute_hyperbolic(field: &Field, k: usize, c: FieldElement) -> u128 {
        let q = field.order() as usize;
        let mut count = 0;
        for idx in 0..q.pow(2 * k as u32) {
            let mut rest = idx;
            let mut s = field.zero();
            for _ in 0..k {
                let a = field.element(rest % q);
                rest /= q;
                let b = field.element(rest % q);
                rest /= q;
                s = field.add(s, field.mul(a, b));
            }
            if s == c {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn norm_examples() {
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(norm(&f9, f9.zero()).unwrap(), f9.zero());
        assert_eq!(norm(&f9, f9.one()).unwrap(), f9.one());
        // t^2 = -1 in F_3[t]/(t^2+1), so N(t) = t^4 = 1.
        assert_eq!(norm(&f9, f9.generator()).unwrap(), f9.one());
        assert!(norm(&make_field(3, 1).unwrap(), f9.one()).is_err());
    }

    #[test]
    fn trace_examples() {
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(trace_to_prime(&f4, f4.zero()).unwrap(), f4.zero());
        assert_eq!(trace_to_prime(&f4, f4.one()).unwrap(), f4.zero());
        let zeros = f4.elements().filter(|&a| trace_to_prime(&f4, a).unwrap() == f4.zero()).count();
        assert_eq!(zeros, 2);
        assert!(trace_to_prime(&make_field(3, 1).unwrap(), f4.one()).is_err());
    }

    #[test]
    fn character_examples() {
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(quadratic_character(&f5, f5.zero()).unwrap(), CharacterValue::Zero);
        assert_eq!(quadratic_character(&f5, f5.from_int(4)).unwrap(), CharacterValue::Plus);
        assert_eq!(quadratic_character(&f5, f5.from_int(2)).unwrap(), CharacterValue::Minus);
        assert!(quadratic_character(&make_field(2, 2).unwrap(), f5.one()).is_err());
    }

    #[test]
    fn hermitian_count_examples() {
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(count_hermitian_norm_solutions(&f9, 1, f9.zero()).unwrap(), 1);
        assert_eq!(count_hermitian_norm_solutions(&f9, 1, f9.one()).unwrap(), 4);
        let f4 = make_field(2, 2).unwrap();
        assert_eq!(count_hermitian_norm_solutions(&f4, 2, f4.zero()).unwrap(), 10);
        assert!(count_hermitian_norm_solutions(&f9, 1, f9.generator()).is_err());
    }

    #[test]
    fn hermitian_count_matches_brute_force() {
        for q in [2u32, 3] {
            let f = field_of_order(q * q).unwrap();
            let sub = f.subfield_elements(q).unwrap();
            for n in 0..=3 {
                let mut sum = 0;
                for &c in &sub {
                    let dp = count_hermitian_norm_solutions(&f, n, c).unwrap();
                    assert_eq!(dp, brute_hermitian(&f, n, c), "q={q} n={n}");
                    let closed = hermitian_norm_count_closed_form(n as u32, q, c == f.zero());
                    assert_eq!(dp, closed, "closed form q={q} n={n}");
                    sum += dp;
                }
                assert_eq!(sum, (q as u128).pow(2 * n as u32));
            }
        }
    }

    #[test]
    fn printed_isotropic_formula_is_off_at_n_1() {
        // (q^n + (-1)^{n-1})(q^{n-1} - (-1)^n) at n = 1 gives 2(q + 1), but only a = 0 has norm 0.
        for q in [2u128, 3, 4] {
            let printed = (q + 1) * 2;
            assert_ne!(printed, hermitian_norm_count_closed_form(1, q as u32, true));
        }
        // The nonzero count (q^n - (-1)^n)(q^{n-1} + (-1)^n) is what the suborbit k_1 uses.
        for (q, n) in [(3u32, 2u32), (3, 3), (4, 2)] {
            let s: i128 = if n % 2 == 0 { 1 } else { -1 };
            let qq = q as i128;
            let nonzero = (qq.pow(n) - s) * (qq.pow(n - 1) + s);
            assert_eq!(nonzero as u128 + 1, hermitian_norm_count_closed_form(n, q, true));
        }
    }

    #[test]
    fn hyperbolic_examples() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(count_hyperbolic_solutions(&f2, 1, true).unwrap(), 3);
        for q in [2u32, 3, 4, 5] {
            let f = field_of_order(q).unwrap();
            assert_eq!(count_hyperbolic_solutions(&f, 0, true).unwrap(), 1);
            assert_eq!(count_hyperbolic_solutions(&f, 0, false).unwrap(), 0);
        }
    }

    #[test]
    fn hyperbolic_matches_brute_force_and_closed_form() {
        for q in [2u32, 3, 4, 5] {
            let f = field_of_order(q).unwrap();
            for k in 0..=3usize {
                if (q as usize).pow(2 * k as u32) > 20_000 {
                    continue;
                }
                let a = count_hyperbolic_solutions(&f, k, true).unwrap();
                let b = count_hyperbolic_solutions(&f, k, false).unwrap();
                assert_eq!(a, brute_hyperbolic(&f, k, f.zero()));
                for c in f.nonzero_elements() {
                    assert_eq!(b, brute_hyperbolic(&f, k, c));
                }
                assert_eq!(a + (q as u128 - 1) * b, (q as u128).pow(2 * k as u32));
                assert_eq!(a, hyperbolic_count_closed_form(k as u32, q, true));
                assert_eq!(b, hyperbolic_count_closed_form(k as u32, q, false));
            }
        }
        // The printed A = (q^m - 1)(q^{m-1} + 1) is the nonzero count with m hyperbolic pairs.
        for (q, m) in [(5u32, 2u32), (5, 3), (4, 3)] {
            let f = field_of_order(q).unwrap();
            let a = count_hyperbolic_solutions(&f, m as usize, true).unwrap();
            let qq = q as u128;
            assert_eq!(a - 1, (qq.pow(m) - 1) * (qq.pow(m - 1) + 1));
            let b = count_hyperbolic_solutions(&f, m as usize, false).unwrap();
            assert_eq!(b, qq.pow(2 * m - 1) - qq.pow(m - 1));
        }
    }

    #[test]
    fn char_sum_matches_direct_count_exhaustively() {
        for q in [2u32, 3, 4, 5, 7, 8, 9] {
            let f = field_of_order(q).unwrap();
            for g1 in f.elements() {
                for g2 in f.elements() {
                    for l in f.elements() {
                        let fast = char_sum_c(&f, g1, g2, l).unwrap();
                        assert_eq!(fast, char_sum_c_direct(&f, g1, g2, l), "q={q}");
                        assert!(fast <= 2 * q as u64);
                    }
                }
            }
        }
    }

    #[test]
    fn f5_character_sums_separate_lambdas() {
        let f = make_field(5, 1).unwrap();
        for g in f.elements() {
            let values: Vec<u64> = f
                .elements()
                .filter(|&l| l != g)
                .map(|l| char_sum_c(&f, g, g, l).unwrap())
                .collect();
            assert!(values.iter().any(|&v| v != values[0]), "gamma={g:?}: {values:?}");
        }
    }

    fn square_field_and_pair() -> impl Strategy<Value = (u32, u32, u32)> {
        prop::sample::select(vec![4u32, 9, 16, 25, 49, 64]).prop_flat_map(|q| (Just(q), 0..q, 0..q))
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative((q, a, b) in square_field_and_pair()) {
            let f = field_of_order(q).unwrap();
            let (a, b) = (f.element(a as usize), f.element(b as usize));
            let lhs = norm(&f, f.mul(a, b)).unwrap();
            let rhs = f.mul(norm(&f, a).unwrap(), norm(&f, b).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn trace_is_additive(a in 0usize..64, b in 0usize..64) {
            let f = make_field(2, 6).unwrap();
            let (a, b) = (f.element(a), f.element(b));
            let lhs = trace_to_prime(&f, f.add(a, b)).unwrap();
            let rhs = f.add(trace_to_prime(&f, a).unwrap(), trace_to_prime(&f, b).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn character_is_multiplicative(q in prop::sample::select(vec![3u32, 5, 7, 9, 25, 27]), a in 1u32..1000, b in 1u32..1000) {
            let f = field_of_order(q).unwrap();
            let a = f.element((a % (q - 1) + 1) as usize);
            let b = f.element((b % (q - 1) + 1) as usize);
            let lhs = quadratic_character(&f, f.mul(a, b)).unwrap().value();
            let rhs = quadratic_character(&f, a).unwrap().value() * quadratic_character(&f, b).unwrap().value();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
