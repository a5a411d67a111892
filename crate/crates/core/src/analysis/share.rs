//! Memory sharing: convex combinations of scheme points.
//!
//! Combining points `(M_i, R_i, F_i)` with weights `λ_i ∈ (0, 1]`,
//! `Σλ_i = 1`, gives `M = Σλ_i M_i`, `R = Σλ_i R_i` and `F = ΣF_i`.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::{AnalysisError, Provenance, SchemePoint};
use crate::construct::params::{binomial_big, params_lemma2};

pub fn memory_share(
    points: &[SchemePoint],
    lambdas: &[BigRational],
) -> Result<SchemePoint, AnalysisError> {
    if points.is_empty() || points.len() != lambdas.len() {
        return Err(AnalysisError::Lambda(format!(
            "{} points but {} weights",
            points.len(),
            lambdas.len()
        )));
    }
    if let Some(l) = lambdas
        .iter()
        .find(|l| !l.is_positive() || **l > BigRational::one())
    {
        return Err(AnalysisError::Lambda(format!("weight {l} outside (0,1]")));
    }
    let total: BigRational = lambdas.iter().sum();
    if !total.is_one() {
        return Err(AnalysisError::Lambda(format!(
            "weights sum to {total}, not 1"
        )));
    }
    if points
        .windows(2)
        .any(|w| w[0].memory_ratio() > w[1].memory_ratio())
    {
        return Err(AnalysisError::Lambda("points must be sorted by M/N".into()));
    }

    let memory = points
        .iter()
        .zip(lambdas)
        .map(|(p, l)| p.memory_ratio() * l)
        .sum();
    let rate = points.iter().zip(lambdas).map(|(p, l)| p.rate() * l).sum();
    let packets = points.iter().map(SchemePoint::packets).sum();
    SchemePoint::new(memory, rate, packets, Provenance::Shared)
}

fn r(n: u64, d: u64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// The `K + 1` MN points `t = 0, …, K`, including the empty-cache point
/// `(0, K, 1)` and the full-cache point `(1, 0, 1)`.
pub fn base_points_mn(k: u64) -> Vec<SchemePoint> {
    (0..=k)
        .map(|t| {
            let packets = if t == 0 || t == k {
                BigUint::one()
            } else {
                binomial_big(k, t)
            };
            SchemePoint::new(r(t, k), r(k - t, 1 + t), packets, Provenance::Mn)
                .expect("MN points are in range")
        })
        .collect()
}

/// Points of the `((m+1)q, …)` family for one `(q, m)`: `z = 1, …, q-1`.
pub fn base_points_lemma2_family(q: u64, m: u64) -> Result<Vec<SchemePoint>, AnalysisError> {
    (1..q)
        .map(|z| Ok(params_lemma2(q, z, m)?.point()))
        .collect()
}

/// Every `(q, z, m)` of the `((m+1)q, …)` family with `(m+1)q = K`,
/// `q >= 2`, `m >= 1` and `1 <= z < q`, ordered by `q` then `z`.
pub fn base_points_lemma2(k: u64) -> Vec<SchemePoint> {
    (2..=k / 2)
        .filter(|&q| k.is_multiple_of(q))
        .flat_map(|q| base_points_lemma2_family(q, k / q - 1).expect("bounds hold"))
        .collect()
}

/// A memory-sharing combination: indices into the candidate list with their
/// weights, in increasing `M/N` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShareChoice {
    pub point: SchemePoint,
    pub components: Vec<(usize, BigRational)>,
}

impl ShareChoice {
    pub fn indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = self.components.iter().map(|(i, _)| *i).collect();
        idx.sort_unstable();
        idx
    }
}

/// All single points at exactly `target` and all pairs straddling it
/// strictly (a pair touching `target` would need a zero weight).
pub fn enumerate_shares(
    points: &[SchemePoint],
    target: &BigRational,
) -> Result<Vec<ShareChoice>, AnalysisError> {
    let mut out = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if p.memory_ratio() == target {
            out.push(ShareChoice {
                point: memory_share(std::slice::from_ref(p), &[BigRational::one()])?,
                components: vec![(i, BigRational::one())],
            });
        }
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let (lo, hi) = match points[i].memory_ratio().cmp(points[j].memory_ratio()) {
                Ordering::Less => (i, j),
                Ordering::Greater => (j, i),
                Ordering::Equal => continue,
            };
            let (m_lo, m_hi) = (points[lo].memory_ratio(), points[hi].memory_ratio());
            if !(m_lo < target && target < m_hi) {
                continue;
            }
            let lambda_lo = (m_hi - target) / (m_hi - m_lo);
            let lambda_hi = BigRational::one() - &lambda_lo;
            let point = memory_share(
                &[points[lo].clone(), points[hi].clone()],
                &[lambda_lo.clone(), lambda_hi.clone()],
            )?;
            out.push(ShareChoice {
                point,
                components: vec![(lo, lambda_lo), (hi, lambda_hi)],
            });
        }
    }
    Ok(out)
}

/// Picks the combination whose rate is closest to `target_rate`, breaking
/// ties by fewest packets and then by the smallest sorted index list.
///
/// Only one- and two-point combinations are considered: with a single
/// memory constraint two points already fix the weights, and packet
/// numbers add across components.
pub fn best_share(
    points: &[SchemePoint],
    target_memory: &BigRational,
    target_rate: &BigRational,
) -> Result<ShareChoice, AnalysisError> {
    let lo = points.iter().map(SchemePoint::memory_ratio).min();
    let hi = points.iter().map(SchemePoint::memory_ratio).max();
    match (lo, hi) {
        (Some(lo), Some(hi)) if lo <= target_memory && target_memory <= hi => {}
        _ => {
            return Err(AnalysisError::NoCandidates(target_memory.to_string()));
        }
    }
    let key = |c: &ShareChoice| {
        (
            (c.point.rate() - target_rate).abs(),
            c.point.packets().clone(),
            c.indices(),
        )
    };
    enumerate_shares(points, target_memory)?
        .into_iter()
        .min_by(|a, b| key(a).cmp(&key(b)))
        .ok_or_else(|| AnalysisError::NoCandidates(target_memory.to_string()))
}
