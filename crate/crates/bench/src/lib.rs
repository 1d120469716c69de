//! Shared inputs for the benchmarks.

use maxgenus::verify::MSpec;

/// The m values swept by the full verification grid.
pub fn full_m_spec() -> MSpec {
    "w+2..w+6,10,50".parse().expect("static m spec")
}

/// Desk-scale `(d, s)` pairs with known maximal genus.
pub const SPOT_VALUES: [(i64, i64); 5] = [(99, 9), (96, 9), (93, 9), (91, 9), (114, 11)];
