//! Graph families built from finite geometry and set systems, with the
//! closed-form parameters they are known to have.

pub mod catalog;
mod classical;
mod combinatorial;

pub use classical::{
    build_dual_polar_sp6, build_no, build_nu, build_polar_complement, dual_polar_sp6_distance_counts,
    orthogonal_orbitals, unitary_orbitals, NamedPartition, PolarKind, UnitaryClass,
};
pub use combinatorial::{
    build_grassmann, build_hamming_orbital, build_johnson, flag_orbitals, hamming_m, hamming_orbitals,
    FlagOrbitals, HammingMatrix,
};

use crate::error::{invalid, Error, Result};
use crate::geometry::Eps;
use crate::graph::{Graph, SrgParams};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use std::fmt;
use std::str::FromStr;

pub const DEFAULT_MAX_V: usize = 2000;

/// Upper bound on the number of vertices a builder may produce.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_v: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_v: DEFAULT_MAX_V }
    }
}

impl Limits {
    pub fn unlimited() -> Limits {
        Limits { max_v: usize::MAX }
    }

    pub(crate) fn check(&self, what: impl fmt::Display, v: u128) -> Result<()> {
        if v > self.max_v as u128 {
            return Err(Error::ScaleGuard { what: what.to_string(), v, max: self.max_v });
        }
        Ok(())
    }
}

/// A family member, written as `tag:key=value,...` (see [`FamilyId::from_str`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyId {
    Nu { n: u32, q: u32 },
    No { m: u32, q: u32, eps: Eps },
    PolarComplement { kind: PolarKind, q: u32 },
    DualPolarSp6 { q: u32 },
    DualPolarSp6Dist3 { q: u32 },
    Grassmann { n: u32, q: u32 },
    Johnson { n: u32, i: u32 },
    Hamming { d: u32, i: u32 },
    Flags { q: u32, class: usize },
    UnitaryOrbital { n: u32, q: u32, class: UnitaryClass },
    OrthogonalOrbital { m: u32, q: u32, eps: Eps, lambda: u32 },
    /// The 243-valent orbital graph of the rank four product action on 784 points.
    Psl28Squared,
}

impl FamilyId {
    pub fn tag(&self) -> &'static str {
        match self {
            FamilyId::Nu { .. } => "NU",
            FamilyId::No { .. } => "NO",
            FamilyId::PolarComplement { kind: PolarKind::O7, .. } => "polar-complement-O7",
            FamilyId::PolarComplement { kind: PolarKind::O8Plus, .. } => "polar-complement-O8+",
            FamilyId::DualPolarSp6 { .. } => "dual-polar-sp6",
            FamilyId::DualPolarSp6Dist3 { .. } => "dual-polar-sp6-dist3",
            FamilyId::Grassmann { .. } => "grassmann",
            FamilyId::Johnson { .. } => "johnson",
            FamilyId::Hamming { .. } => "hamming-orbital",
            FamilyId::Flags { .. } => "flag-orbital",
            FamilyId::UnitaryOrbital { .. } => "unitary-orbital",
            FamilyId::OrthogonalOrbital { .. } => "orthogonal-orbital",
            FamilyId::Psl28Squared => "psl28-product-orbital",
        }
    }

    /// Number of vertices, computed without building anything.
    pub fn order(&self) -> u128 {
        let p = |q: u32, e: u32| (q as u128).pow(e);
        let gauss = |n: u32, k: u32, q: u32| -> u128 {
            let mut num = 1u128;
            let mut den = 1u128;
            for i in 0..k {
                num *= p(q, n - i) - 1;
                den *= p(q, i + 1) - 1;
            }
            num / den
        };
        match *self {
            FamilyId::Nu { n, q } | FamilyId::UnitaryOrbital { n, q, .. } => {
                let s = if n % 2 == 0 { 1i128 } else { -1 };
                (p(q, n - 1) as i128 * (p(q, n) as i128 - s) / (q as i128 + 1)) as u128
            }
            FamilyId::No { m, q, eps } | FamilyId::OrthogonalOrbital { m, q, eps, .. } => {
                (p(q, m) as i128 * (p(q, m) as i128 + eps.sign() as i128) / 2) as u128
            }
            FamilyId::PolarComplement { kind: PolarKind::O8Plus, q } => (p(q, 3) + 1) * (p(q, 2) + 1) * (q as u128 + 1),
            FamilyId::PolarComplement { kind: PolarKind::O7, q } => (p(q, 6) - 1) / (q as u128 - 1),
            FamilyId::DualPolarSp6 { q } | FamilyId::DualPolarSp6Dist3 { q } => {
                (p(q, 3) + 1) * (p(q, 2) + 1) * (q as u128 + 1)
            }
            FamilyId::Grassmann { n, q } => gauss(n, 3, q),
            FamilyId::Johnson { n, .. } => {
                let n = n as u128;
                n * n.saturating_sub(1) * n.saturating_sub(2) / 6
            }
            FamilyId::Hamming { d, .. } => p(d, 3),
            FamilyId::Flags { q, .. } => (p(q, 2) + q as u128 + 1) * (q as u128 + 1),
            FamilyId::Psl28Squared => 784,
        }
    }

    fn validate(&self) -> Result<()> {
        let need = |ok: bool, msg: &str| if ok { Ok(()) } else { Err(invalid(format!("{self}: {msg}"))) };
        let prime_power = |q: u32| crate::gf::prime_power(q).is_some();
        match *self {
            FamilyId::Nu { n, q } | FamilyId::UnitaryOrbital { n, q, .. } => {
                need(n >= 3, "needs n >= 3")?;
                need(prime_power(q), "q must be a prime power")
            }
            FamilyId::No { m, q, .. } | FamilyId::OrthogonalOrbital { m, q, .. } => {
                need(m >= 1, "needs m >= 1")?;
                need(prime_power(q) && q % 2 == 1, "q must be an odd prime power")?;
                if let FamilyId::OrthogonalOrbital { lambda, .. } = *self {
                    need(crate::gf::is_prime(q), "classes are indexed over a prime field")?;
                    need(lambda <= (q - 1) / 2, "lambda indexes the classes 0..=(q-1)/2")?;
                }
                Ok(())
            }
            FamilyId::PolarComplement { q, .. } | FamilyId::DualPolarSp6 { q } | FamilyId::DualPolarSp6Dist3 { q } => {
                need(prime_power(q), "q must be a prime power")
            }
            FamilyId::Grassmann { n, q } => {
                need(n >= 6, "needs n >= 6 for diameter 3")?;
                need(prime_power(q), "q must be a prime power")
            }
            FamilyId::Johnson { n, i } => {
                need(n >= 7, "needs n >= 7")?;
                need(i <= 2, "i must be 0, 1 or 2")
            }
            FamilyId::Hamming { d, i } => {
                need(d >= 2, "needs d >= 2")?;
                need((1..=3).contains(&i), "i must be 1, 2 or 3")
            }
            FamilyId::Flags { q, class } => {
                need(prime_power(q), "q must be a prime power")?;
                need((1..=3).contains(&class), "class must be 1, 2 or 3")
            }
            FamilyId::Psl28Squared => Ok(()),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Nu { n, q } => write!(f, "nu:n={n},q={q}"),
            FamilyId::No { m, q, eps } => write!(f, "no:m={m},q={q},eps={eps}"),
            FamilyId::PolarComplement { kind, q } => write!(f, "polarC:{kind},q={q}"),
            FamilyId::DualPolarSp6 { q } => write!(f, "sp6:q={q}"),
            FamilyId::DualPolarSp6Dist3 { q } => write!(f, "sp6d3:q={q}"),
            FamilyId::Grassmann { n, q } => write!(f, "grassmann:n={n},q={q}"),
            FamilyId::Johnson { n, i } => write!(f, "johnson:n={n},i={i}"),
            FamilyId::Hamming { d, i } => write!(f, "hamming:d={d},i={i}"),
            FamilyId::Flags { q, class } => write!(f, "flags:q={q},class={class}"),
            FamilyId::UnitaryOrbital { n, q, class } => write!(f, "unitary:n={n},q={q},class={class}"),
            FamilyId::OrthogonalOrbital { m, q, eps, lambda } => {
                write!(f, "orthogonal:m={m},q={q},eps={eps},lambda={lambda}")
            }
            FamilyId::Psl28Squared => write!(f, "psl28sq"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    /// `nu:n=3,q=3`, `no:m=2,q=5,eps=+`, `polarC:O8+,q=2`, `sp6:q=2`,
    /// `sp6d3:q=3`, `grassmann:n=6,q=2`, `johnson:n=7,i=1`, `hamming:d=4,i=2`,
    /// `flags:q=4` (class 2 unless `class=` is given), `unitary:n=3,q=3,class=omega`,
    /// `orthogonal:m=2,q=5,eps=+,lambda=1`, `psl28sq`.
    fn from_str(s: &str) -> Result<FamilyId> {
        let s = s.trim();
        let (tag, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut keys: Vec<(String, String)> = Vec::new();
        let mut bare: Vec<String> = Vec::new();
        for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part.split_once('=') {
                Some((k, v)) => keys.push((k.trim().to_string(), v.trim().to_string())),
                None => bare.push(part.to_string()),
            }
        }
        let get = |k: &str| keys.iter().find(|(key, _)| key == k).map(|(_, v)| v.as_str());
        let num = |k: &str| -> Result<u32> {
            let v = get(k).ok_or_else(|| invalid(format!("{s:?}: missing {k}=")))?;
            v.parse().map_err(|_| invalid(format!("{s:?}: {k}={v} is not a number")))
        };
        let eps = || -> Result<Eps> {
            match get("eps") {
                Some("+") | Some("plus") => Ok(Eps::Plus),
                Some("-") | Some("minus") => Ok(Eps::Minus),
                other => Err(invalid(format!("{s:?}: eps must be + or -, got {other:?}"))),
            }
        };
        let allowed: &[&str] = match tag {
            "nu" | "grassmann" => &["n", "q"],
            "no" => &["m", "q", "eps"],
            "polarC" | "sp6" | "sp6d3" => &["q"],
            "johnson" => &["n", "i"],
            "hamming" => &["d", "i"],
            "flags" => &["q", "class"],
            "unitary" => &["n", "q", "class"],
            "orthogonal" => &["m", "q", "eps", "lambda"],
            "psl28sq" => &[],
            _ => return Err(invalid(format!("unknown family {tag:?} in {s:?}"))),
        };
        if let Some((k, _)) = keys.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            return Err(invalid(format!("{s:?}: unexpected key {k:?}")));
        }
        if tag != "polarC" && !bare.is_empty() {
            return Err(invalid(format!("{s:?}: unexpected {:?}", bare[0])));
        }
        let id = match tag {
            "nu" => FamilyId::Nu { n: num("n")?, q: num("q")? },
            "no" => FamilyId::No { m: num("m")?, q: num("q")?, eps: eps()? },
            "polarC" => {
                let kind = match bare.as_slice() {
                    [k] => k.parse()?,
                    _ => return Err(invalid(format!("{s:?}: expected exactly one of O7, O8+"))),
                };
                FamilyId::PolarComplement { kind, q: num("q")? }
            }
            "sp6" => FamilyId::DualPolarSp6 { q: num("q")? },
            "sp6d3" => FamilyId::DualPolarSp6Dist3 { q: num("q")? },
            "grassmann" => FamilyId::Grassmann { n: num("n")?, q: num("q")? },
            "johnson" => FamilyId::Johnson { n: num("n")?, i: num("i")? },
            "hamming" => FamilyId::Hamming { d: num("d")?, i: num("i")? },
            "flags" => FamilyId::Flags { q: num("q")?, class: if get("class").is_some() { num("class")? as usize } else { 2 } },
            "unitary" => FamilyId::UnitaryOrbital {
                n: num("n")?,
                q: num("q")?,
                class: get("class").ok_or_else(|| invalid(format!("{s:?}: missing class=")))?.parse()?,
            },
            "orthogonal" => FamilyId::OrthogonalOrbital { m: num("m")?, q: num("q")?, eps: eps()?, lambda: num("lambda")? },
            _ => FamilyId::Psl28Squared,
        };
        id.validate()?;
        Ok(id)
    }
}

fn big(q: u32) -> BigInt {
    BigInt::from(q)
}

fn to_params(what: &FamilyId, v: BigInt, k: BigInt, l: BigInt, m: BigInt) -> Result<SrgParams> {
    let conv = |x: BigInt| {
        x.to_u64()
            .ok_or_else(|| Error::Internal(format!("{what}: closed form value {x} is out of range")))
    };
    Ok(SrgParams::new(conv(v)?, conv(k)?, conv(l)?, conv(m)?))
}

/// Parameters from the family's closed form, evaluated in big integers.
pub fn params_closed_form(id: &FamilyId) -> Result<SrgParams> {
    let pw = |q: u32, e: u32| big(q).pow(e);
    let one = BigInt::one();
    match *id {
        FamilyId::Nu { n, q } => {
            let s = if n % 2 == 0 { one.clone() } else { -one.clone() };
            let qb = big(q);
            let v = pw(q, n - 1) * (pw(q, n) - &s) / (&qb + 1);
            let k = (pw(q, n - 1) + &s) * (pw(q, n - 2) - &s);
            let l = pw(q, 2 * n - 5) * (&qb + 1) - &s * pw(q, n - 2) * (&qb - 1) - 2;
            let m = pw(q, n - 3) * (&qb + 1) * (pw(q, n - 2) - &s);
            to_params(id, v, k, l, m)
        }
        FamilyId::No { m, q, eps } => {
            let e = BigInt::from(eps.sign());
            let qb = big(q);
            let v = pw(q, m) * (pw(q, m) + &e) / 2;
            let k = (pw(q, m - 1) + &e) * (pw(q, m) - &e);
            let l = (pw(q, 2 * m - 2) - 1) * 2 + &e * pw(q, m - 1) * (&qb - 1);
            let mu = pw(q, m - 1) * (pw(q, m - 1) + &e) * 2;
            to_params(id, v, k, l, mu)
        }
        FamilyId::PolarComplement { q, .. } | FamilyId::DualPolarSp6Dist3 { q } => {
            let qb = big(q);
            let v = (pw(q, 3) + 1) * (pw(q, 2) + 1) * (&qb + 1);
            let k = pw(q, 6);
            let l = pw(q, 2) * (&qb - 1) * (pw(q, 3) - 1);
            let m = pw(q, 5) * (&qb - 1);
            to_params(id, v, k, l, m)
        }
        _ => Err(Error::NoClosedForm(id.to_string())),
    }
}

/// The parameter tuples listed for the exceptional rank four graphs.
pub fn table1_params(id: &FamilyId) -> Option<SrgParams> {
    match *id {
        FamilyId::Johnson { n: 7, i: 1 } => Some(SrgParams::new(35, 18, 9, 9)),
        FamilyId::Johnson { n: 10, i: 1 } => Some(SrgParams::new(120, 63, 30, 36)),
        FamilyId::Flags { q: 4, class: 2 } => Some(SrgParams::new(105, 32, 4, 12)),
        FamilyId::Psl28Squared => Some(SrgParams::new(784, 243, 82, 72)),
        _ => None,
    }
}

/// Builds the graph of `id`, refusing anything with more than `limits.max_v` vertices.
pub fn build(id: &FamilyId, limits: &Limits) -> Result<Graph> {
    id.validate()?;
    limits.check(id, id.order())?;
    match *id {
        FamilyId::Nu { n, q } => build_nu(n as usize, q, limits),
        FamilyId::No { m, q, eps } => build_no(m as usize, q, eps, limits),
        FamilyId::PolarComplement { kind, q } => build_polar_complement(kind, q, limits),
        FamilyId::DualPolarSp6 { q } => build_dual_polar_sp6(q, limits),
        FamilyId::DualPolarSp6Dist3 { q } => Ok(build_dual_polar_sp6(q, limits)?.distance_graph(3)),
        FamilyId::Grassmann { n, q } => build_grassmann(n as usize, q, limits),
        FamilyId::Johnson { n, i } => build_johnson(n as usize, i as usize),
        FamilyId::Hamming { d, i } => build_hamming_orbital(d as usize, i as usize),
        FamilyId::Flags { q, class } => flag_orbitals(q, limits)?.graph(class),
        FamilyId::UnitaryOrbital { n, q, class } => {
            unitary_orbitals(n as usize, q, limits)?.graph(class.index())
        }
        FamilyId::OrthogonalOrbital { m, q, eps, lambda } => {
            orthogonal_orbitals(m as usize, q, eps, limits)?.graph(lambda as usize + 1)
        }
        FamilyId::Psl28Squared => psl28_squared_graph(),
    }
}

fn psl28_squared_graph() -> Result<Graph> {
    use crate::orbitals::{compute_orbitals, psl28::psl2_8_squared_action};
    let (action, _) = psl2_8_squared_action()?;
    let orbitals = compute_orbitals(&action)?;
    let lengths = orbitals.suborbit_lengths();
    let c = (1..orbitals.rank())
        .find(|&c| lengths[c] == 243)
        .ok_or_else(|| Error::Internal(format!("no suborbit of length 243 in {lengths:?}")))?;
    orbitals.orbital_graph(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_strings() {
        for s in [
            "nu:n=3,q=3",
            "no:m=2,q=5,eps=+",
            "sp6d3:q=3",
            "polarC:O8+,q=2",
            "johnson:n=7,i=1",
            "hamming:d=4,i=2",
            "grassmann:n=6,q=2",
        ] {
            let id: FamilyId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
        }
        let flags: FamilyId = "flags:q=4".parse().unwrap();
        assert_eq!(flags, FamilyId::Flags { q: 4, class: 2 });
        assert_eq!("polarC:O7,q=2".parse::<FamilyId>().unwrap().tag(), "polar-complement-O7");
        assert_eq!("unitary:n=3,q=3,class=omega".parse::<FamilyId>().unwrap().to_string(), "unitary:n=3,q=3,class=omega");
    }

    #[test]
    fn rejects_malformed_strings() {
        for s in [
            "",
            "nu",
            "nu:n=3",
            "nu:n=x,q=3",
            "nu:n=2,q=3",
            "nu:n=3,q=6",
            "no:m=2,q=4,eps=+",
            "no:m=2,q=5,eps=*",
            "johnson:n=7,i=5",
            "polarC:q=2",
            "polarC:O9,q=2",
            "flags:q=4,class=0",
            "widget:q=2",
            "nu:n=3,q=3,z=1",
        ] {
            assert!(matches!(s.parse::<FamilyId>(), Err(Error::InvalidInput(_))), "{s:?}");
        }
    }

    #[test]
    fn closed_forms() {
        let p = |s: &str| params_closed_form(&s.parse().unwrap()).unwrap();
        assert_eq!(p("nu:n=3,q=3"), SrgParams::new(63, 32, 16, 16));
        assert_eq!(p("nu:n=4,q=3").v, 540);
        assert_eq!(p("nu:n=3,q=4").v, 208);
        assert_eq!(p("no:m=2,q=5,eps=+"), SrgParams::new(325, 144, 68, 60));
        assert_eq!(p("no:m=2,q=5,eps=-"), SrgParams::new(300, 104, 28, 40));
        assert_eq!(p("sp6d3:q=2"), SrgParams::new(135, 64, 28, 32));
        assert_eq!(p("sp6d3:q=3"), SrgParams::new(1120, 729, 468, 486));
        assert_eq!(p("polarC:O8+,q=3").v, 1120);
        for s in ["nu:n=3,q=3", "nu:n=5,q=2", "no:m=3,q=3,eps=-", "sp6d3:q=7"] {
            assert!(p(s).is_feasible(), "{s}");
        }
        assert!(matches!(params_closed_form(&"johnson:n=7,i=1".parse().unwrap()), Err(Error::NoClosedForm(_))));
    }

    #[test]
    fn orders_match_closed_forms() {
        for s in ["nu:n=3,q=3", "nu:n=4,q=3", "no:m=2,q=5,eps=-", "polarC:O8+,q=2", "sp6d3:q=3"] {
            let id: FamilyId = s.parse().unwrap();
            assert_eq!(id.order(), params_closed_form(&id).unwrap().v as u128, "{s}");
        }
        assert_eq!("polarC:O7,q=2".parse::<FamilyId>().unwrap().order(), 63);
        assert_eq!("grassmann:n=6,q=2".parse::<FamilyId>().unwrap().order(), 1395);
        assert_eq!("flags:q=2".parse::<FamilyId>().unwrap().order(), 21);
    }

    #[test]
    fn scale_guard() {
        let id: FamilyId = "grassmann:n=7,q=2".parse().unwrap();
        assert!(matches!(build(&id, &Limits::default()), Err(Error::ScaleGuard { v: 11811, .. })));
    }
}
