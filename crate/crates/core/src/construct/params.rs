//! `(K, F, Z, S)` calculators for constructions whose arrays are not built
//! here, plus the parameter maps of the recursive extension and the dual.
//!
//! All arithmetic is arbitrary precision.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::analysis::SchemePoint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// MN array, `(K, C(K,t), C(K-1,t-1), C(K,t+1))`.
    Mn,
    /// `((m+1)q, ⌊(q-1)/(q-z)⌋q^m, …)` family.
    Lemma2,
    /// `(C(m,t)q^t, ⌊(q-1)/(q-z)⌋^t q^m, …)` family.
    Lemma3,
    /// Recursive extension of an MN array.
    Theorem3,
    /// Recursive extension of a `Lemma2` array.
    Theorem4,
    /// Recursive extension of a `Lemma3` array.
    Theorem5,
    /// Generic recursive extension of an imported array.
    Extended,
    /// Row/symbol dual of another point.
    Dual,
    /// Memory-sharing combination.
    Shared,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Provenance::Mn => "mn",
            Provenance::Lemma2 => "lemma2",
            Provenance::Lemma3 => "lemma3",
            Provenance::Theorem3 => "theorem3",
            Provenance::Theorem4 => "theorem4",
            Provenance::Theorem5 => "theorem5",
            Provenance::Extended => "extended",
            Provenance::Dual => "dual",
            Provenance::Shared => "shared",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParamError {
    #[error("parameter bounds violated: {0}")]
    Bounds(String),
}

fn bounds(msg: impl Into<String>) -> ParamError {
    ParamError::Bounds(msg.into())
}

/// A `(K, F, Z, S)` tuple with its origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamTuple {
    pub k: BigUint,
    pub f: BigUint,
    pub z: BigUint,
    pub s: BigUint,
    pub provenance: Provenance,
}

impl ParamTuple {
    pub fn new(k: BigUint, f: BigUint, z: BigUint, s: BigUint, provenance: Provenance) -> Self {
        ParamTuple {
            k,
            f,
            z,
            s,
            provenance,
        }
    }

    /// `Z/F`.
    pub fn memory_ratio(&self) -> BigRational {
        BigRational::new(self.z.clone().into(), self.f.clone().into())
    }

    /// `S/F`.
    pub fn rate(&self) -> BigRational {
        BigRational::new(self.s.clone().into(), self.f.clone().into())
    }

    pub fn point(&self) -> SchemePoint {
        SchemePoint::new(
            self.memory_ratio(),
            self.rate(),
            self.f.clone(),
            self.provenance,
        )
        .expect("parameter tuples always describe a valid scheme point")
    }

    /// The tuple as machine integers, when every field fits.
    pub fn to_u64s(&self) -> Option<[u64; 4]> {
        Some([
            self.k.to_u64()?,
            self.f.to_u64()?,
            self.z.to_u64()?,
            self.s.to_u64()?,
        ])
    }
}

impl fmt::Display for ParamTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.k, self.f, self.z, self.s)
    }
}

/// Arbitrary-precision `C(n, k)`.
pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

/// MN parameters for `1 <= t < K`.
pub fn params_mn(k: u64, t: u64) -> Result<ParamTuple, ParamError> {
    if t == 0 || t >= k {
        return Err(bounds(format!("MN needs 1 <= t < K, got K={k} t={t}")));
    }
    Ok(ParamTuple::new(
        big(k),
        binomial_big(k, t),
        binomial_big(k - 1, t - 1),
        binomial_big(k, t + 1),
        Provenance::Mn,
    ))
}

fn check_qz(q: u64, z: u64) -> Result<(), ParamError> {
    if q < 2 || z == 0 || z >= q {
        return Err(bounds(format!(
            "need q >= 2 and 1 <= z < q, got q={q} z={z}"
        )));
    }
    Ok(())
}

/// `((m+1)q, ⌊(q-1)/(q-z)⌋q^m, z⌊(q-1)/(q-z)⌋q^(m-1), (q-z)q^m)`, with
/// `M/N = z/q`.
pub fn params_lemma2(q: u64, z: u64, m: u64) -> Result<ParamTuple, ParamError> {
    check_qz(q, z)?;
    if m == 0 {
        return Err(bounds("need m >= 1"));
    }
    let g = (q - 1) / (q - z);
    let qm = big(q).pow(m as u32);
    let qm1 = big(q).pow((m - 1) as u32);
    Ok(ParamTuple::new(
        big((m + 1) * q),
        big(g) * &qm,
        big(z * g) * qm1,
        big(q - z) * qm,
        Provenance::Lemma2,
    ))
}

/// `(C(m,t)q^t, g^t q^m, g^t(q^m - q^(m-t)(q-z)^t), (q-z)^t q^m)` with
/// `g = ⌊(q-1)/(q-z)⌋`, giving `M/N = 1 - ((q-z)/q)^t`.
pub fn params_lemma3(q: u64, z: u64, m: u64, t: u64) -> Result<ParamTuple, ParamError> {
    check_qz(q, z)?;
    if t == 0 || t >= m {
        return Err(bounds(format!("need 1 <= t < m, got m={m} t={t}")));
    }
    let g_t = big((q - 1) / (q - z)).pow(t as u32);
    let qm = big(q).pow(m as u32);
    let qz_t = big(q - z).pow(t as u32);
    let stars = &qm - big(q).pow((m - t) as u32) * &qz_t;
    Ok(ParamTuple::new(
        binomial_big(m, t) * big(q).pow(t as u32),
        &g_t * &qm,
        &g_t * stars,
        qz_t * qm,
        Provenance::Lemma3,
    ))
}

/// `(d, h1, h2)` for an extension of `k1` users by `k2`.
pub fn split(k1: u64, k2: u64) -> (u64, u64, u64) {
    let d = k1.gcd(&k2);
    (d, k1 / d, k2 / d)
}

/// The recursive extension's parameter map
/// `(K1, F, Z, S) -> (K1+K2, h1·F, h1·Z, (h1+h2)·S)` for `0 < K2 <= K1`.
pub fn extend_params(base: &ParamTuple, k2: u64) -> Result<ParamTuple, ParamError> {
    let k1 = base
        .k
        .to_u64()
        .ok_or_else(|| bounds("base user count does not fit in 64 bits"))?;
    if k2 == 0 || k2 > k1 {
        return Err(bounds(format!("need 0 < K2 <= K1, got K1={k1} K2={k2}")));
    }
    let (_, h1, h2) = split(k1, k2);
    let provenance = match base.provenance {
        Provenance::Mn => Provenance::Theorem3,
        Provenance::Lemma2 => Provenance::Theorem4,
        Provenance::Lemma3 => Provenance::Theorem5,
        _ => Provenance::Extended,
    };
    Ok(ParamTuple::new(
        big(k1 + k2),
        big(h1) * &base.f,
        big(h1) * &base.z,
        big(h1 + h2) * &base.s,
        provenance,
    ))
}

/// `(K, F, Z, S) -> (K, S, S-(F-Z), F)` for `Z < F`.
pub fn dual_params(p: &ParamTuple) -> Result<ParamTuple, ParamError> {
    if p.z >= p.f {
        return Err(bounds("dual needs Z < F"));
    }
    let gap = &p.f - &p.z;
    if gap > p.s {
        return Err(bounds("dual needs F - Z <= S"));
    }
    Ok(ParamTuple::new(
        p.k.clone(),
        p.s.clone(),
        &p.s - gap,
        p.f.clone(),
        Provenance::Dual,
    ))
}

/// MN base on `K1` users with cache parameter `t`, extended by `K2`.
pub fn params_theorem3(k1: u64, k2: u64, t: u64) -> Result<ParamTuple, ParamError> {
    extend_params(&params_mn(k1, t)?, k2)
}

pub fn params_theorem4(q: u64, z: u64, m: u64, k2: u64) -> Result<ParamTuple, ParamError> {
    extend_params(&params_lemma2(q, z, m)?, k2)
}

pub fn params_theorem5(q: u64, z: u64, m: u64, t: u64, k2: u64) -> Result<ParamTuple, ParamError> {
    extend_params(&params_lemma3(q, z, m, t)?, k2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn tuple(p: &ParamTuple) -> [u64; 4] {
        p.to_u64s().unwrap()
    }

    #[test]
    fn lemma2_values() {
        let p = params_lemma2(6, 4, 2).unwrap();
        assert_eq!(tuple(&p), [18, 72, 48, 72]);
        assert_eq!((p.memory_ratio(), p.rate()), (ratio(2, 3), ratio(1, 1)));

        let p = params_lemma2(6, 5, 2).unwrap();
        assert_eq!(tuple(&p), [18, 180, 150, 36]);
        assert_eq!((p.memory_ratio(), p.rate()), (ratio(5, 6), ratio(1, 5)));

        let p = params_lemma2(2, 1, 1).unwrap();
        assert_eq!(tuple(&p), [4, 2, 1, 2]);
        assert_eq!((p.memory_ratio(), p.rate()), (ratio(1, 2), ratio(1, 1)));
    }

    #[test]
    fn lemma2_bounds() {
        assert!(params_lemma2(1, 0, 1).is_err());
        assert!(params_lemma2(4, 4, 1).is_err());
        assert!(params_lemma2(4, 0, 1).is_err());
        assert!(params_lemma2(4, 1, 0).is_err());
    }

    #[test]
    fn lemma3_values() {
        let p = params_lemma3(2, 1, 2, 1).unwrap();
        assert_eq!(tuple(&p), [4, 4, 2, 4]);
        assert_eq!((p.memory_ratio(), p.rate()), (ratio(1, 2), ratio(1, 1)));

        let p = params_lemma3(3, 1, 2, 1).unwrap();
        assert_eq!(tuple(&p), [6, 9, 3, 18]);
        assert_eq!(p.memory_ratio(), ratio(1, 3));

        let p = params_lemma3(4, 2, 3, 2).unwrap();
        assert_eq!(p.k, big(48));
        assert_eq!(p.memory_ratio(), ratio(3, 4));
        assert!(params_lemma3(4, 2, 3, 3).is_err());
    }

    #[test]
    fn lemma3_memory_ratio_matches_closed_form() {
        for q in 2..7u64 {
            for z in 1..q {
                for m in 2..5u64 {
                    for t in 1..m {
                        let p = params_lemma3(q, z, m, t).unwrap();
                        let frac = ratio((q - z) as i64, q as i64);
                        let expected = ratio(1, 1) - num_traits::pow(frac, t as usize);
                        assert_eq!(p.memory_ratio(), expected, "q={q} z={z} m={m} t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn theorem3_values() {
        let p = params_theorem3(12, 6, 9).unwrap();
        assert_eq!(p.k, big(18));
        assert_eq!(p.f, big(440));
        assert_eq!(p.memory_ratio(), ratio(3, 4));
        assert_eq!(p.rate(), ratio(9, 20));
        assert_eq!(p.provenance, Provenance::Theorem3);

        let p = params_theorem3(4, 2, 2).unwrap();
        assert_eq!((p.k.clone(), p.f.clone()), (big(6), big(12)));
        assert_eq!(p.rate(), ratio(1, 1));

        let p = params_theorem3(11, 9, 7).unwrap();
        assert_eq!((p.k.clone(), p.f.clone()), (big(20), big(3630)));
        assert_eq!(p.rate(), ratio(10, 11));
    }

    #[test]
    fn theorem4_and_5_apply_the_extension_map() {
        let p = params_theorem4(6, 4, 2, 6).unwrap();
        // K1 = 18, d = 6, h1 = 3, h2 = 1.
        assert_eq!(tuple(&p), [24, 216, 144, 288]);
        assert_eq!(p.provenance, Provenance::Theorem4);
        let p = params_theorem5(2, 1, 2, 1, 2).unwrap();
        assert_eq!(tuple(&p), [6, 8, 4, 12]);
        assert!(params_theorem4(6, 4, 2, 19).is_err());
    }

    #[test]
    fn dual_map() {
        let base = ParamTuple::new(big(4), big(6), big(3), big(4), Provenance::Mn);
        let d = dual_params(&base).unwrap();
        assert_eq!(tuple(&d), [4, 4, 1, 6]);
        let back = dual_params(&d).unwrap();
        assert_eq!(tuple(&back), [4, 6, 3, 4]);
    }
}
