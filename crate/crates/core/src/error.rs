use num_bigint::BigInt;
use thiserror::Error;

use crate::scroll::ScrollType;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse divisor class {0:?}")]
    Parse(String),

    #[error("{op} is not defined on {scroll}")]
    UnsupportedScroll { op: &'static str, scroll: ScrollType },

    #[error("class {0} is not effective")]
    NotEffective(String),

    #[error("negative intersection product {0}: inputs share a component or are not effective")]
    NegativeIntersection(BigInt),

    #[error("minimal surface degree s={0} is below 4")]
    SurfaceDegreeTooSmall(i64),

    #[error("degree d={d} must exceed s={s}")]
    DegreeTooSmall { d: i64, s: i64 },

    #[error("d={d}, s={s} gives m={m} < w={w}; the h-vector profile needs m >= w")]
    OutsideProfileDomain { d: i64, s: i64, m: i64, w: i64 },

    #[error("profile for d={d} sums to {sum}")]
    ProfileInconsistent { d: i64, sum: i64 },

    #[error("classification needs s >= 9 (got s={0})")]
    ClassificationUnsupported(i64),

    #[error("surface class {class} does not fit w={w}, v={v}")]
    InconsistentSurfaceClass { class: String, w: i64, v: i64 },

    #[error("no construction recipe covers k={k}, v={v}")]
    NoRecipe { k: i64, v: i64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
