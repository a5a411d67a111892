use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::AnalysisError;
use crate::construct::params::{binomial_big, split};

/// Binary entropy `H(λ) = -λ log2 λ - (1-λ) log2 (1-λ)` on `0 < λ < 1`.
pub fn entropy(lambda: f64) -> Result<f64, AnalysisError> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(AnalysisError::Domain(format!(
            "entropy needs 0 < λ < 1, got {lambda}"
        )));
    }
    let mu = 1.0 - lambda;
    Ok(-lambda * lambda.log2() - mu * mu.log2())
}

/// The recursive MN scheme on `K1 + K2` users against the plain MN scheme
/// at the same memory ratio `t / K1`.
#[derive(Clone, Debug, PartialEq)]
pub struct MnRatio {
    pub k1: u64,
    pub k2: u64,
    pub t: u64,
    pub h1: u64,
    pub h2: u64,
    /// Cache parameter of the MN baseline on `K1 + K2` users.
    pub t_mn: u64,
    pub packets: BigUint,
    pub packets_mn: BigUint,
    pub rate: BigRational,
    pub rate_mn: BigRational,
    /// Exact `F / F_MN`.
    pub packet_ratio: BigRational,
    /// `h1 · 2^(-K2·H(t/K1))`.
    pub packet_ratio_approx: f64,
    /// Exact `R / R_MN`.
    pub rate_ratio: BigRational,
    /// `(1 + h2/h1)(1 - h2/((1+t)(h1+h2)))`.
    pub rate_ratio_closed_form: BigRational,
}

impl MnRatio {
    /// `|log2(F/F_MN) - log2(h1) + K2·H(t/K1)| / (K2·H(t/K1))`: the relative
    /// error of the entropy approximation in log terms.
    pub fn log2_relative_error(&self) -> f64 {
        let h = entropy(self.t as f64 / self.k1 as f64).expect("0 < t < K1");
        let exponent = self.k2 as f64 * h;
        let log_ratio = log2_big(&self.packets) - log2_big(&self.packets_mn);
        (log_ratio - (self.h1 as f64).log2() + exponent).abs() / exponent
    }
}

fn log2_big(x: &BigUint) -> f64 {
    // Shift large values into f64 range before taking the log.
    let bits = x.bits();
    if bits <= 1000 {
        x.to_f64().expect("finite").log2()
    } else {
        let shift = bits - 900;
        (x >> shift).to_f64().expect("finite").log2() + shift as f64
    }
}

fn r(n: u64, d: u64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Requires `1 <= t < K1`, `1 <= K2 <= K1` and `K1 | K2·t` so that the MN
/// baseline on `K1 + K2` users has an integral cache parameter.
pub fn mn_ratio(k1: u64, k2: u64, t: u64) -> Result<MnRatio, AnalysisError> {
    if t == 0 || t >= k1 {
        return Err(AnalysisError::Domain(format!(
            "need 1 <= t < K1, got K1={k1} t={t}"
        )));
    }
    if k2 == 0 || k2 > k1 {
        return Err(AnalysisError::Domain(format!(
            "need 1 <= K2 <= K1, got K1={k1} K2={k2}"
        )));
    }
    let k = k1 + k2;
    if !(k * t).is_multiple_of(k1) {
        return Err(AnalysisError::NonIntegralBaseline { k1, k2, t });
    }
    let t_mn = k * t / k1;
    let (_, h1, h2) = split(k1, k2);

    let packets = BigUint::from(h1) * binomial_big(k1, t);
    let packets_mn = binomial_big(k, t_mn);
    let rate = r(h1 + h2, h1) * r(k1 - t, 1 + t);
    let rate_mn = r(k - t_mn, 1 + t_mn);

    let packet_ratio = BigRational::new(packets.clone().into(), packets_mn.clone().into());
    let rate_ratio = &rate / &rate_mn;
    let rate_ratio_closed_form =
        (BigRational::one() + r(h2, h1)) * (BigRational::one() - r(h2, (1 + t) * (h1 + h2)));
    let h = entropy(t as f64 / k1 as f64)?;
    let packet_ratio_approx = h1 as f64 * (-(k2 as f64) * h).exp2();

    Ok(MnRatio {
        k1,
        k2,
        t,
        h1,
        h2,
        t_mn,
        packets,
        packets_mn,
        rate,
        rate_mn,
        packet_ratio,
        packet_ratio_approx,
        rate_ratio,
        rate_ratio_closed_form,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entropy_values() {
        assert_eq!(entropy(0.5).unwrap(), 1.0);
        assert!((entropy(0.25).unwrap() - 0.811_278_124_459_132_8).abs() < 1e-12);
        assert!((entropy(0.3).unwrap() - entropy(0.7).unwrap()).abs() < 1e-15);
        assert!(entropy(0.0).is_err());
        assert!(entropy(1.0).is_err());
        assert!(entropy(f64::NAN).is_err());
    }

    #[test]
    fn first_row() {
        let m = mn_ratio(4, 2, 2).unwrap();
        assert_eq!(m.rate, r(1, 1));
        assert_eq!(m.rate_mn, r(3, 4));
        assert_eq!(m.rate_ratio, r(4, 3));
        assert_eq!(m.packets, BigUint::from(12u32));
        assert_eq!(m.packets_mn, BigUint::from(20u32));
        assert_eq!(m.rate_ratio, m.rate_ratio_closed_form);
    }

    #[test]
    fn last_row_is_exact() {
        let m = mn_ratio(32, 16, 16).unwrap();
        assert_eq!(m.packets, BigUint::from(1_202_160_780u64));
        assert_eq!(m.packets_mn, BigUint::from(32_247_603_683_100u64));
    }

    #[test]
    fn non_integral_baseline() {
        assert_eq!(
            mn_ratio(12, 6, 9),
            Err(AnalysisError::NonIntegralBaseline {
                k1: 12,
                k2: 6,
                t: 9
            })
        );
        assert!(mn_ratio(4, 5, 2).is_err());
        assert!(mn_ratio(4, 2, 4).is_err());
    }

    #[test]
    fn log2_of_huge_values() {
        let x = BigUint::from(1u32) << 2000u32;
        assert!((log2_big(&x) - 2000.0).abs() < 1e-9);
    }
}
