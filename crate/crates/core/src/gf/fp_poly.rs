//! Dense polynomials over a prime field F_p, coefficients ascending.
//!
//! Only what the modulus search needs: multiplication, remainder, modular
//! exponentiation and gcd. Every polynomial handed out is trimmed (no zero
//! leading coefficient); the zero polynomial is the empty vector.

pub(crate) type FpPoly = Vec<u32>;

fn trim(mut a: FpPoly) -> FpPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let mut acc = 1u64;
    let mut b = (base % p) as u64;
    let m = p as u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u32
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

/// Remainder of `a` modulo the nonzero polynomial `m`.
pub(crate) fn rem(a: &[u32], m: &[u32], p: u32) -> FpPoly {
    let m = trim(m.to_vec());
    assert!(!m.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod(*m.last().unwrap(), p);
    while r.len() >= m.len() {
        let shift = r.len() - m.len();
        let factor = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &c) in m.iter().enumerate() {
            let t = (factor as u64 * c as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> FpPoly {
    rem(&mul(a, b, p), m, p)
}

/// `x^(p^e) mod m`, by repeated p-th powering.
pub(crate) fn frobenius_power_of_x(e: u32, m: &[u32], p: u32) -> FpPoly {
    let mut acc = rem(&[0, 1], m, p);
    for _ in 0..e {
        acc = pow_poly_mod(&acc, p as u64, m, p);
    }
    acc
}

pub(crate) fn pow_poly_mod(base: &[u32], mut exp: u64, m: &[u32], p: u32) -> FpPoly {
    let mut acc = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(&acc, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let inv = inv_mod(lead, p);
        for c in x.iter_mut() {
            *c = (*c as u64 * inv as u64 % p as u64) as u32;
        }
    }
    x
}

pub(crate) fn eval(a: &[u32], x: u32, p: u32) -> u32 {
    a.iter()
        .rev()
        .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p as u64) as u32
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Irreducibility of a monic polynomial of degree `k >= 1` over F_p.
///
/// Degrees up to three are decided by the absence of roots. Larger degrees use
/// Rabin's criterion: `x^(p^k) = x mod f` and `gcd(x^(p^(k/r)) - x, f) = 1` for
/// every prime `r | k`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() as u32 - 1;
    if k == 1 {
        return true;
    }
    if k <= 3 {
        return (0..p).all(|x| eval(f, x, p) != 0);
    }
    let x = vec![0, 1];
    if sub(&frobenius_power_of_x(k, f, p), &x, p) != Vec::<u32>::new() {
        return false;
    }
    prime_factors(k).into_iter().all(|r| {
        let h = sub(&frobenius_power_of_x(k / r, f, p), &x, p);
        gcd(&h, f, p) == vec![1]
    })
}

/// Rabin's test applied to every degree, used to cross-check the root test.
#[cfg(test)]
pub(crate) fn is_irreducible_rabin(f: &[u32], p: u32) -> bool {
    let k = f.len() as u32 - 1;
    if k == 1 {
        return true;
    }
    let x = vec![0, 1];
    if sub(&frobenius_power_of_x(k, f, p), &x, p) != Vec::<u32>::new() {
        return false;
    }
    prime_factors(k).into_iter().all(|r| {
        let h = sub(&frobenius_power_of_x(k / r, f, p), &x, p);
        gcd(&h, f, p) == vec![1]
    })
}
