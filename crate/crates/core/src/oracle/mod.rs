//! Point counts over `F_p`: the number of tuples in `SL2(F_p)` satisfying the
//! surface relation with prescribed puncture holonomies.

mod count;
mod group;

pub use count::{
    commutator_distribution, convolve_class_functions, count_solutions, cross_check, puncture_indicator,
    ClassFunction, CrossCheck, Oracle,
};
pub use group::{build_group, GroupTable, Mat2};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u32),
    #[error("prime {0} is too large for the oracle")]
    PrimeTooLarge(u32),
    #[error("values are not constant on conjugacy classes (element {index})")]
    NotClassFunction { index: usize },
    #[error("value table has {got} entries, group has {want}")]
    WrongLength { got: usize, want: usize },
    #[error("integer overflow while counting")]
    Overflow,
    #[error("class functions belong to different groups")]
    GroupMismatch,
    #[error(transparent)]
    Eval(#[from] crate::surface::EvalError),
}
