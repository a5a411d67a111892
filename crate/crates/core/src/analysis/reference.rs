//! Published memory-sharing baselines for the default comparison rows.
//!
//! The memory-sharing search that produced these values is not fully
//! specified where they were published, and the MN-based ones are not
//! reproduced by the one- and two-point search in this crate. They are
//! carried only so tables can show both side by side.

/// `(K1, K2, t, R_MMN, F_MMN)` for the MN-versus-memory-sharing table.
pub const MN_SHARE_PUBLISHED: [(u64, u64, u64, &str, u64); 11] = [
    (12, 6, 9, "0.484", 816),
    (11, 9, 7, "0.928", 5035),
    (14, 11, 11, "0.454", 12675),
    (15, 13, 11, "0.655", 101556),
    (18, 12, 11, "0.993", 593776),
    (18, 16, 10, "1.402", 5657872),
    (19, 17, 13, "0.851", 8724672),
    (21, 19, 14, "0.922", 80743065),
    (24, 20, 13, "1.460", 710016516),
    (25, 23, 16, "1.032", 6918064890),
    (26, 24, 18, "0.815", 10809156820),
];

/// `(K1, K2, t, R_Mle2, F_Mle2, R_MMN, F_MMN)` for the three-way table.
pub const THREE_WAY_PUBLISHED: [(u64, u64, u64, &str, u64, &str, u64); 6] = [
    (12, 6, 9, "0.600", 252, "0.466", 43776),
    (11, 9, 6, "1.401", 375, "1.351", 16644),
    (15, 13, 8, "1.489", 16384, "1.461", 1560780),
    (20, 15, 11, "1.375", 46875, "1.327", 183631756),
    (20, 18, 11, "4.125", 95, "1.441", 472807571),
    (24, 20, 13, "1.444", 4194304, "1.455", 686354883984),
];
