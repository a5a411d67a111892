use super::{check_size, require_valid, ConstructionError};
use crate::pda::{Entry, PdaArray};

/// Swaps the roles of rows and integers: a `(K, F, Z, S)` PDA with `Z < F`
/// becomes a `(K, S, S-(F-Z), F)` PDA.
///
/// Row `s` of the result holds, in column `k`, the row index at which `s`
/// occurs in column `k` of the input, or a star when it does not occur
/// there.
pub fn dual(p: &PdaArray) -> Result<PdaArray, ConstructionError> {
    let report = require_valid(p, ConstructionError::InvalidInput)?;
    let params = report.params;
    if params.z >= params.f {
        return Err(ConstructionError::Parameters(format!(
            "dual needs Z < F, got Z={} F={}",
            params.z, params.f
        )));
    }
    check_size(params.s as u128, params.k as u128)?;

    let mut cells = vec![Entry::Star; params.s * params.k];
    for ((j, k), e) in p.entries() {
        if let Entry::Int(s) = e {
            cells[s * params.k + k] = Entry::Int(j);
        }
    }
    let z = params.s - (params.f - params.z);
    let q = PdaArray::from_cells(params.s, params.k, cells, z, params.f)?;
    require_valid(&q, ConstructionError::InvalidOutput)?;
    Ok(q)
}
