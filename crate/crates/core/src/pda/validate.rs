use std::fmt;

use num_rational::Ratio;

use super::{Params, PdaArray};

/// Outcome of the star-count condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct C1Check {
    /// First column whose star count differs from the claimed `Z`, with
    /// the count actually found.
    pub first_bad_column: Option<(usize, usize)>,
}

impl C1Check {
    pub fn ok(&self) -> bool {
        self.first_bad_column.is_none()
    }
}

/// Two cells carrying the same integer that do not form a star-crossed
/// `2 x 2` pattern. `first < second` in row-major order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct C3Violation {
    pub symbol: usize,
    pub first: (usize, usize),
    pub second: (usize, usize),
}

impl fmt::Display for C3Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{}),({},{})",
            self.first.0, self.first.1, self.second.0, self.second.1
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub c1: C1Check,
    /// Integers in `[0, S)` that never occur.
    pub c2_missing: Vec<usize>,
    /// Lexicographically first offending pair, if any.
    pub c3: Option<C3Violation>,
    pub params: Params,
    pub memory_ratio: Ratio<u64>,
    pub rate: Ratio<u64>,
}

impl ValidationReport {
    pub fn c1_ok(&self) -> bool {
        self.c1.ok()
    }

    pub fn c2_ok(&self) -> bool {
        self.c2_missing.is_empty()
    }

    pub fn c3_ok(&self) -> bool {
        self.c3.is_none()
    }

    /// True iff the array is a `(K, F, Z, S)` PDA for its claimed parameters.
    pub fn is_pda(&self) -> bool {
        self.c1_ok() && self.c2_ok() && self.c3_ok()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.c1.first_bad_column {
            None => writeln!(f, "C1 OK")?,
            Some((col, found)) => writeln!(
                f,
                "C1 FAIL at column {col}: {found} stars, expected {}",
                self.params.z
            )?,
        }
        if self.c2_ok() {
            writeln!(f, "C2 OK")?;
        } else {
            let missing: Vec<String> = self.c2_missing.iter().map(usize::to_string).collect();
            writeln!(f, "C2 FAIL missing {}", missing.join(","))?;
        }
        match &self.c3 {
            None => write!(f, "C3 OK"),
            Some(v) => write!(f, "C3 FAIL at {v}"),
        }
    }
}

fn violates(p: &PdaArray, (j1, k1): (usize, usize), (j2, k2): (usize, usize)) -> bool {
    j1 == j2 || k1 == k2 || !p.get(j1, k2).is_star() || !p.get(j2, k1).is_star()
}

/// Checks the three PDA conditions against the array's claimed `Z` and `S`.
///
/// Occurrences are grouped by integer and every pair inside a group is
/// examined, so the cost is `O(F*K + sum_s occ(s)^2)`.
pub fn validate(p: &PdaArray) -> ValidationReport {
    let params = p.params();

    let first_bad_column = (0..p.cols()).find_map(|k| {
        let stars = p.column(k).filter(|e| e.is_star()).count();
        (stars != params.z).then_some((k, stars))
    });

    let occ = p.occurrences();
    let c2_missing = occ
        .iter()
        .enumerate()
        .filter(|(_, cells)| cells.is_empty())
        .map(|(s, _)| s)
        .collect();

    // Within one symbol the cells are row-major, so the first violating
    // pair met in loop order is the smallest for that symbol.
    let mut c3: Option<C3Violation> = None;
    for (symbol, cells) in occ.iter().enumerate() {
        'symbol: for (a, &first) in cells.iter().enumerate() {
            if let Some(best) = &c3 {
                if first > best.first {
                    break;
                }
            }
            for &second in &cells[a + 1..] {
                if violates(p, first, second) {
                    let candidate = C3Violation {
                        symbol,
                        first,
                        second,
                    };
                    let better = c3.is_none_or(|best| {
                        (candidate.first, candidate.second) < (best.first, best.second)
                    });
                    if better {
                        c3 = Some(candidate);
                    }
                    break 'symbol;
                }
            }
        }
    }

    ValidationReport {
        c1: C1Check { first_bad_column },
        c2_missing,
        c3,
        params,
        memory_ratio: params.memory_ratio(),
        rate: params.rate(),
    }
}

/// Integers in each column are pairwise distinct. Implied by a passing C3,
/// exposed for tests.
#[cfg(test)]
pub(crate) fn integers_distinct_per_column(p: &PdaArray) -> bool {
    (0..p.cols()).all(|k| {
        let mut seen = std::collections::HashSet::new();
        p.column(k)
            .filter_map(super::Entry::int)
            .all(|s| seen.insert(s))
    })
}
