//! Closed parabolic surfaces: their description, evaluation by tube
//! composition, the closed-form polynomials, and the bordism-word language.

mod adjudicate;
pub mod closed_form;
mod eval;
mod spec;
mod word;

pub use adjudicate::{adjudicate, AdjudicationReport, IntroOutcome};
pub use closed_form::{closed_form, intro_closed_form, FormulaVariant, IntroReading};
pub use eval::{evaluate_in_order, evaluate_tqft, evaluate_word, EvalError};
pub use spec::{PunctureKind, SpecError, SurfaceSpec};
pub use word::{parse_word, word_to_spec, BordismWord, Generator, ParseError, ParseErrorKind, GRAMMAR};
