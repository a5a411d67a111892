use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{render_fraction, AnalysisError, Provenance};

/// An achievable `(M/N, R)` with its subpacketization `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemePoint {
    memory_ratio: BigRational,
    rate: BigRational,
    packets: BigUint,
    provenance: Provenance,
}

impl SchemePoint {
    /// Requires `0 <= M/N <= 1`, `R >= 0` and `F >= 1`.
    pub fn new(
        memory_ratio: BigRational,
        rate: BigRational,
        packets: BigUint,
        provenance: Provenance,
    ) -> Result<Self, AnalysisError> {
        if memory_ratio.is_negative() || memory_ratio > BigRational::one() {
            return Err(AnalysisError::Domain(format!(
                "memory ratio {memory_ratio} outside [0,1]"
            )));
        }
        if rate.is_negative() {
            return Err(AnalysisError::Domain(format!("negative rate {rate}")));
        }
        if packets.is_zero() {
            return Err(AnalysisError::Domain(
                "packet number must be positive".into(),
            ));
        }
        Ok(SchemePoint {
            memory_ratio,
            rate,
            packets,
            provenance,
        })
    }

    pub fn memory_ratio(&self) -> &BigRational {
        &self.memory_ratio
    }

    pub fn rate(&self) -> &BigRational {
        &self.rate
    }

    pub fn packets(&self) -> &BigUint {
        &self.packets
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }
}

impl fmt::Display for SchemePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} M/N={} R={} F={}",
            self.provenance,
            render_fraction(&self.memory_ratio),
            render_fraction(&self.rate),
            self.packets
        )
    }
}
