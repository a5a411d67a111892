//! The cyclic-code schemes on `K = nq` users as special cases of the
//! recursive extension.
//!
//! With `K1 = (m+1)q` and `K2 = K - K1`, extending the `z = 1` member of the
//! `((m+1)q, …)` family gives `M/N = 1/q`, and its dual gives
//! `M/N = 1 - (m+1)/(nq)`. Both must coincide with the closed forms
//! `R1 = n(q-1)/(m+1)`, `F1 = x·q^m` and `R2 = (m+1)/((q-1)n)`,
//! `F2 = (q-1)q^m·xn/(m+1)`, where `x` is the least positive integer with
//! `(m+1) | nx`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow};

use super::AnalysisError;
use crate::construct::params::{dual_params, params_theorem4, split};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangReport {
    pub n: u64,
    pub q: u64,
    pub m: u64,
    pub k1: u64,
    pub k2: u64,
    pub x: u64,
    pub h1: u64,
    pub h2: u64,
    pub r1: BigRational,
    pub f1: BigUint,
    pub r2: BigRational,
    pub f2: BigUint,
    /// Extension of the `z = 1` family member.
    pub extended_memory: BigRational,
    pub extended_rate: BigRational,
    pub extended_packets: BigUint,
    /// Dual of the extension.
    pub dual_memory: BigRational,
    pub dual_rate: BigRational,
    pub dual_packets: BigUint,
    pub h1_is_x: bool,
    pub first_point_matches: bool,
    pub dual_point_matches: bool,
    pub identities_hold: bool,
}

impl TangReport {
    pub fn holds(&self) -> bool {
        self.h1_is_x && self.first_point_matches && self.dual_point_matches && self.identities_hold
    }
}

fn r(n: u64, d: u64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn big_r(n: BigUint, d: BigUint) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Requires `q >= 2`, `m >= 1` and `0 < K2 <= K1`, i.e. `m+1 < n <= 2(m+1)`.
pub fn tang_equivalence(n: u64, q: u64, m: u64) -> Result<TangReport, AnalysisError> {
    if q < 2 || m == 0 {
        return Err(AnalysisError::Domain(format!(
            "need q >= 2 and m >= 1, got q={q} m={m}"
        )));
    }
    let k = n * q;
    let k1 = (m + 1) * q;
    if k <= k1 {
        return Err(AnalysisError::Configuration(format!(
            "K2 = nq - (m+1)q must be positive, got n={n} m={m}"
        )));
    }
    let k2 = k - k1;
    if k2 > k1 {
        return Err(AnalysisError::Configuration(format!(
            "K2 = {k2} exceeds K1 = {k1}"
        )));
    }

    let x = (m + 1) / (m + 1).gcd(&n);
    let (_, h1, h2) = split(k1, k2);
    let qm = BigUint::from(q).pow(m as u32);

    let r1 = r(n * (q - 1), m + 1);
    let f1 = BigUint::from(x) * &qm;
    let r2 = r(m + 1, (q - 1) * n);
    let f2 = BigUint::from((q - 1) * x * n / (m + 1)) * &qm;

    let ext = params_theorem4(q, 1, m, k2)?;
    let dual = dual_params(&ext)?;

    let first_point_matches = ext.memory_ratio() == r(1, q) && ext.rate() == r1 && ext.f == f1;
    let dual_memory_expected = BigRational::one() - r(m + 1, n * q);
    let dual_point_matches = dual.memory_ratio() == dual_memory_expected
        && dual.memory_ratio() == BigRational::one() - r(h1, (h1 + h2) * q)
        && dual.rate() == r2
        && dual.f == f2;
    let dual_f = BigUint::from((h1 + h2) * (q - 1)) * &qm;
    let identities_hold = dual_f == f2
        && big_r(BigUint::from(h1) * &qm, dual_f.clone()) == r2
        && BigUint::from(h1 + h2) * (m + 1) == BigUint::from(n * x);

    Ok(TangReport {
        n,
        q,
        m,
        k1,
        k2,
        x,
        h1,
        h2,
        r1,
        f1,
        r2,
        f2,
        extended_memory: ext.memory_ratio(),
        extended_rate: ext.rate(),
        extended_packets: ext.f.clone(),
        dual_memory: dual.memory_ratio(),
        dual_rate: dual.rate(),
        dual_packets: dual.f.clone(),
        h1_is_x: h1 == x,
        first_point_matches,
        dual_point_matches,
        identities_hold,
    })
}
