//! Construction, validation and simulation of placement delivery arrays
//! (PDAs) for coded caching.
//!
//! * [`pda`]: the array model, the three-condition validator and the text format.
//! * [`construct`]: the MN array, label matrices, the block map and the
//!   recursive user extension, the dual transform, and parameter calculators.
//! * [`sim`]: runs any valid PDA as a placement + XOR delivery + decode scheme.
//! * [`analysis`]: exact rate/packet comparisons, memory sharing and tables.

pub mod analysis;
pub mod construct;
pub mod pda;
pub mod sim;

pub use pda::{parse, serialize, validate, Entry, Params, PdaArray, ValidationReport};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::pda::PdaArray;

    /// The (4,6,3,4) array of the worked placement/delivery example.
    pub fn example1() -> PdaArray {
        PdaArray::from_table(
            &[
                &[None, None, Some(0), Some(1)],
                &[None, Some(0), None, Some(2)],
                &[None, Some(1), Some(2), None],
                &[Some(0), None, None, Some(3)],
                &[Some(1), None, Some(3), None],
                &[Some(2), Some(3), None, None],
            ],
            3,
            4,
        )
        .unwrap()
    }

    /// The (3,3,1,3) base array used with `u = 3, v = 2`.
    pub fn base_3_3_1_3() -> PdaArray {
        PdaArray::from_table(
            &[
                &[None, Some(0), Some(1)],
                &[Some(0), None, Some(2)],
                &[Some(1), Some(2), None],
            ],
            1,
            3,
        )
        .unwrap()
    }

    /// The (6,4,2,4) base array extended by four users.
    pub fn base_6_4_2_4() -> PdaArray {
        PdaArray::from_table(
            &[
                &[None, None, None, Some(0), Some(1), Some(2)],
                &[None, Some(0), Some(1), None, None, Some(3)],
                &[Some(0), None, Some(2), None, Some(3), None],
                &[Some(1), Some(2), None, Some(3), None, None],
            ],
            2,
            4,
        )
        .unwrap()
    }
}
