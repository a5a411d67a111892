use num_integer::Integer;

use super::{
    check_size, expand_labels, label_matrices, require_valid, ConstructionError, ExpandedLabels,
};
use crate::pda::PdaArray;

/// The block map. Block `(j, k)` of the output is column `index[j][k]` of
/// `p` with every integer shifted by `label[j][k] · S`; stars stay stars.
///
/// The result has `index.len() · F` rows and `index[0].len()` columns, and
/// claims `Z' = index.len() · Z` and `S' = (max label + 1) · S`. It is not
/// validated: whether it is a PDA depends on the matrices supplied.
pub fn psi(
    p: &PdaArray,
    index: &[Vec<usize>],
    label: &[Vec<usize>],
) -> Result<PdaArray, ConstructionError> {
    let blocks = index.len();
    let width = index.first().map_or(0, Vec::len);
    if blocks == 0 || width == 0 {
        return Err(ConstructionError::Shape("index matrix is empty".into()));
    }
    if label.len() != blocks
        || index.iter().any(|r| r.len() != width)
        || label.iter().any(|r| r.len() != width)
    {
        return Err(ConstructionError::Shape(format!(
            "index and label matrices must both be {blocks}x{width}"
        )));
    }
    if let Some(&bad) = index.iter().flatten().find(|&&a| a >= p.cols()) {
        return Err(ConstructionError::Shape(format!(
            "index {bad} refers past the {} columns of the base array",
            p.cols()
        )));
    }

    let f = p.rows();
    let s = p.claimed_s();
    check_size((blocks * f) as u128, width as u128)?;
    let labels = label.iter().flatten().max().map_or(0, |m| m + 1);
    let s_out = labels
        .checked_mul(s)
        .ok_or_else(|| ConstructionError::Overflow("symbol count".into()))?;

    let mut cells = Vec::with_capacity(blocks * f * width);
    for (a_row, b_row) in index.iter().zip(label) {
        for r in 0..f {
            cells.extend(
                a_row
                    .iter()
                    .zip(b_row)
                    .map(|(&a, &b)| p.get(r, a).shifted(b * s)),
            );
        }
    }
    Ok(PdaArray::from_cells(
        blocks * f,
        width,
        cells,
        blocks * p.claimed_z(),
        s_out,
    )?)
}

/// The quantities fixed by `(K1, K2)` before the block map is applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionPlan {
    pub d: usize,
    pub h1: usize,
    pub h2: usize,
    pub labels: ExpandedLabels,
}

impl ExtensionPlan {
    pub fn new(k1: usize, k2: usize) -> Result<Self, ConstructionError> {
        if k2 == 0 {
            return Err(ConstructionError::Parameters(
                "the number of added users must be positive".into(),
            ));
        }
        if k2 > k1 {
            return Err(ConstructionError::Parameters(format!(
                "extension needs K2 <= K1, got K1={k1} K2={k2}"
            )));
        }
        let d = k1.gcd(&k2);
        let (h1, h2) = (k1 / d, k2 / d);
        let labels = expand_labels(&label_matrices(h1, h2)?, d)?;
        Ok(ExtensionPlan { d, h1, h2, labels })
    }
}

/// Extends a `(K1, F, Z, S)` PDA by `K2 <= K1` users, giving a
/// `(K1+K2, h1·F, h1·Z, (h1+h2)·S)` PDA where `h_i = K_i / gcd(K1, K2)`.
///
/// `K2 = K1` runs as the `u = v = 1` case with `d = K1`, which yields the
/// two-block array `[P + S | P]`.
pub fn recursive_extend(p: &PdaArray, k2: usize) -> Result<PdaArray, ConstructionError> {
    require_valid(p, ConstructionError::InvalidInput)?;
    let plan = ExtensionPlan::new(p.cols(), k2)?;
    let out = psi(p, &plan.labels.index, &plan.labels.label)?;
    debug_assert_eq!(out.claimed_s(), (plan.h1 + plan.h2) * p.claimed_s());
    require_valid(&out, ConstructionError::InvalidOutput)?;
    Ok(out)
}
