//! Exact arithmetic in the field of rational functions in `q`.

mod poly;
pub mod render;
mod scalar;

pub use poly::IntPoly;
pub use render::Format;
pub use scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("division by the zero scalar")]
    DivisionByZero,
    #[error("fraction with zero denominator")]
    ZeroDenominator,
    #[error("denominator vanishes at q = {at}")]
    Pole { at: i64 },
}
