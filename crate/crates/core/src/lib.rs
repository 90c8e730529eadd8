//! Exact motivic classes of parabolic SL(2, C)-representation varieties over
//! closed orientable surfaces.
//!
//! Classes live in the Grothendieck ring of varieties and are polynomials in
//! the Lefschetz motif `q`. They are computed by composing explicit tube
//! operators on an 8-dimensional core module ([`operators`]), checked against
//! closed-form polynomials ([`surface::closed_form`]) and against point counts
//! over finite fields ([`oracle`]).

pub mod module;
pub mod operators;
pub mod oracle;
pub mod ring;
pub mod surface;

pub use module::{BasisIndex, CoreMatrix, CoreVector};
pub use operators::{OperatorSet, TubeKind};
pub use ring::{Format, IntPoly, RingError, Scalar};
pub use surface::{BordismWord, FormulaVariant, PunctureKind, SurfaceSpec};

