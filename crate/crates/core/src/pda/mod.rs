//! Placement delivery arrays: the grid model, the three-condition validator
//! and the `PDA v1` text format.
//!
//! A `(K, F, Z, S)` array has `F` rows (packets) and `K` columns (users).
//! Every entry is either a star (the user caches that packet) or an integer
//! `s` in `[0, S)` (the packet is delivered inside broadcast signal `s`).

mod format;
mod validate;

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

pub use format::{parse, serialize, ParseError, MAGIC};
pub use validate::{validate, C1Check, C3Violation, ValidationReport};

/// A single cell of a placement delivery array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    Star,
    Int(usize),
}

impl Entry {
    pub fn is_star(self) -> bool {
        matches!(self, Entry::Star)
    }

    pub fn int(self) -> Option<usize> {
        match self {
            Entry::Star => None,
            Entry::Int(s) => Some(s),
        }
    }

    /// Adds `offset` to an integer entry; stars are unchanged.
    pub fn shifted(self, offset: usize) -> Entry {
        match self {
            Entry::Star => Entry::Star,
            Entry::Int(s) => Entry::Int(s + offset),
        }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Star => f.write_str("*"),
            Entry::Int(s) => write!(f, "{s}"),
        }
    }
}

/// The `(K, F, Z, S)` tuple of an array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    pub k: usize,
    pub f: usize,
    pub z: usize,
    pub s: usize,
}

impl Params {
    pub fn new(k: usize, f: usize, z: usize, s: usize) -> Self {
        Params { k, f, z, s }
    }

    /// `M/N = Z/F`, reduced.
    pub fn memory_ratio(&self) -> Ratio<u64> {
        Ratio::new(self.z as u64, self.f as u64)
    }

    /// `R = S/F`, reduced.
    pub fn rate(&self) -> Ratio<u64> {
        Ratio::new(self.s as u64, self.f as u64)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.k, self.f, self.z, self.s)
    }
}

/// Structural problems: the grid itself is malformed. These are distinct
/// from a well-formed grid that fails the PDA conditions.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PdaError {
    #[error("array must have at least one row and one column")]
    Empty,
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("entry ({row},{col}) = {value} is not below S = {s}")]
    SymbolOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        s: usize,
    },
}

/// An `F x K` grid of entries together with its claimed `Z` and `S`.
///
/// The claims are checked against the content by [`validate`], never
/// inferred. Construction only enforces the structural invariants: a
/// rectangular non-empty grid whose integers are all below the claimed `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdaArray {
    rows: usize,
    cols: usize,
    cells: Vec<Entry>,
    z: usize,
    s: usize,
}

impl PdaArray {
    /// Builds an array from row vectors.
    pub fn from_rows(rows: Vec<Vec<Entry>>, z: usize, s: usize) -> Result<Self, PdaError> {
        let f = rows.len();
        let k = rows.first().map_or(0, Vec::len);
        if f == 0 || k == 0 {
            return Err(PdaError::Empty);
        }
        let mut cells = Vec::with_capacity(f * k);
        for (row, entries) in rows.into_iter().enumerate() {
            if entries.len() != k {
                return Err(PdaError::Ragged {
                    row,
                    expected: k,
                    found: entries.len(),
                });
            }
            cells.extend(entries);
        }
        Self::from_cells(f, k, cells, z, s)
    }

    /// Builds an array from a row-major cell vector of length `f * k`.
    pub fn from_cells(
        f: usize,
        k: usize,
        cells: Vec<Entry>,
        z: usize,
        s: usize,
    ) -> Result<Self, PdaError> {
        if f == 0 || k == 0 {
            return Err(PdaError::Empty);
        }
        if cells.len() != f * k {
            return Err(PdaError::Ragged {
                row: cells.len() / k,
                expected: k,
                found: cells.len() % k,
            });
        }
        for (idx, e) in cells.iter().enumerate() {
            if let Entry::Int(value) = *e {
                if value >= s {
                    return Err(PdaError::SymbolOutOfRange {
                        row: idx / k,
                        col: idx % k,
                        value,
                        s,
                    });
                }
            }
        }
        Ok(PdaArray {
            rows: f,
            cols: k,
            cells,
            z,
            s,
        })
    }

    /// Convenience constructor for literal arrays: `None` is a star.
    pub fn from_table(rows: &[&[Option<usize>]], z: usize, s: usize) -> Result<Self, PdaError> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.map_or(Entry::Star, Entry::Int))
                    .collect()
            })
            .collect();
        Self::from_rows(rows, z, s)
    }

    /// Number of rows, `F`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns, `K`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn claimed_z(&self) -> usize {
        self.z
    }

    pub fn claimed_s(&self) -> usize {
        self.s
    }

    /// The claimed `(K, F, Z, S)`.
    pub fn params(&self) -> Params {
        Params::new(self.cols, self.rows, self.z, self.s)
    }

    /// Entry in row `j`, column `k`. Panics when out of bounds.
    pub fn get(&self, j: usize, k: usize) -> Entry {
        assert!(j < self.rows && k < self.cols, "({j},{k}) out of bounds");
        self.cells[j * self.cols + k]
    }

    pub fn row(&self, j: usize) -> &[Entry] {
        &self.cells[j * self.cols..(j + 1) * self.cols]
    }

    pub fn column(&self, k: usize) -> impl Iterator<Item = Entry> + '_ {
        (0..self.rows).map(move |j| self.get(j, k))
    }

    /// Row-major iterator over `((row, col), entry)`.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), Entry)> + '_ {
        let k = self.cols;
        self.cells
            .iter()
            .enumerate()
            .map(move |(idx, &e)| ((idx / k, idx % k), e))
    }

    /// For each symbol `s < S`, the row-major list of cells holding `s`.
    pub fn occurrences(&self) -> Vec<Vec<(usize, usize)>> {
        let mut occ = vec![Vec::new(); self.s];
        for (pos, e) in self.entries() {
            if let Entry::Int(s) = e {
                occ[s].push(pos);
            }
        }
        occ
    }

    /// Returns a copy with one cell replaced. The claimed parameters are kept.
    pub fn with_entry(&self, j: usize, k: usize, entry: Entry) -> Result<Self, PdaError> {
        let mut cells = self.cells.clone();
        cells[j * self.cols + k] = entry;
        Self::from_cells(self.rows, self.cols, cells, self.z, self.s)
    }
}

impl fmt::Display for PdaArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.rows {
            let line: Vec<String> = self.row(j).iter().map(Entry::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ragged_rows_are_structural_errors() {
        let rows = vec![vec![Entry::Star, Entry::Int(0)], vec![Entry::Int(0)]];
        assert_eq!(
            PdaArray::from_rows(rows, 1, 1),
            Err(PdaError::Ragged {
                row: 1,
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn symbol_must_be_below_claimed_s() {
        let err = PdaArray::from_table(&[&[None, Some(2)]], 1, 2).unwrap_err();
        assert!(matches!(err, PdaError::SymbolOutOfRange { value: 2, .. }));
    }

    #[test]
    fn empty_grid_rejected() {
        assert_eq!(PdaArray::from_rows(vec![], 0, 0), Err(PdaError::Empty));
        assert_eq!(
            PdaArray::from_rows(vec![vec![]], 0, 0),
            Err(PdaError::Empty)
        );
    }

    #[test]
    fn params_ratios_are_reduced() {
        let p = Params::new(4, 6, 3, 4);
        assert_eq!(p.memory_ratio(), Ratio::new(1, 2));
        assert_eq!(p.rate(), Ratio::new(2, 3));
        assert_eq!(p.to_string(), "(4,6,3,4)");
    }

    #[test]
    fn occurrences_are_row_major() {
        let p = PdaArray::from_table(&[&[None, Some(0)], &[Some(0), None]], 1, 1).unwrap();
        assert_eq!(p.occurrences(), vec![vec![(0, 1), (1, 0)]]);
    }
}
