//! Closed-form polynomials for the motivic class.
//!
//! `s1` and `sm1` are the two parity branches. Some exponents go negative at
//! genus zero, so they are computed in `Q(q)`. The final answer is still a
//! polynomial.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ring::Scalar;

use super::eval::EvalError;
use super::spec::SurfaceSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormulaVariant {
    /// Branch on `r` and the sign `(-1)^(r_minus + t)`.
    Section5,
    /// The headline statement in terms of `r` and `l`, read literally.
    Intro,
}

impl FromStr for FormulaVariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "section5" => Ok(FormulaVariant::Section5),
            "intro" => Ok(FormulaVariant::Intro),
            other => Err(format!("unknown variant `{other}` (expected section5 or intro)")),
        }
    }
}

impl fmt::Display for FormulaVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaVariant::Section5 => "section5",
            FormulaVariant::Intro => "intro",
        })
    }
}

/// How `r` and `l` in the headline statement map onto a spec.
/// `l = r_minus + t` in both readings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IntroReading {
    /// `r` counts every marked point.
    AsWritten,
    /// `r` counts only the Jordan-type points.
    Jordan,
}

impl IntroReading {
    pub const ALL: [IntroReading; 2] = [IntroReading::AsWritten, IntroReading::Jordan];
}

impl fmt::Display for IntroReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IntroReading::AsWritten => "as-written",
            IntroReading::Jordan => "jordan",
        })
    }
}

fn pw(base: &Scalar, e: i64) -> Scalar {
    base.powi(e as i32).expect("closed-form bases are nonzero")
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn half() -> Scalar {
    Scalar::from_ratio(1, 2).unwrap()
}

/// Branch for sign `+1`.
pub fn s1(g: u32, r: u32) -> Scalar {
    let (g, r) = (g as i64, r as i64);
    let q = Scalar::q();
    let qm = Scalar::poly(&[-1, 1]);
    let qp = Scalar::poly(&[1, 1]);
    let q2m = Scalar::poly(&[-1, 0, 1]);
    let e = 2 * g + r - 1;
    let qg = pw(&q, 2 * g - 1);
    let four_g = pw(&int(2), 2 * g);
    let sign = if r % 2 == 0 { int(1) } else { int(-1) };

    let a = pw(&q2m, e) * &qg;
    let b = half() * pw(&qm, e) * &qg * &qp * (&four_g + &q - int(3));
    let c = sign * half() * pw(&qp, e) * &qg * &qm * (&four_g + &q - int(1));
    a + b + c
}

/// Branch for sign `-1`.
pub fn sm1(g: u32, r: u32) -> Scalar {
    let (g, r) = (g as i64, r as i64);
    let q = Scalar::q();
    let qm = Scalar::poly(&[-1, 1]);
    let qp = Scalar::poly(&[1, 1]);
    let e = 2 * g + r - 1;
    let qg = pw(&q, 2 * g - 1);
    let two = pw(&int(2), 2 * g - 1);
    let sign = if (r + 1) % 2 == 0 { int(1) } else { int(-1) };

    let a = pw(&qm, e) * &qp * &qg * (pw(&qp, e - 1) + &two - int(1));
    let b = sign * &two * pw(&qp, e) * &qm * &qg;
    a + b
}

/// `q (q^2 - 1)^(2g - 1)`, added when there are no Jordan points.
pub fn correction(g: u32) -> Scalar {
    Scalar::q() * pw(&Scalar::poly(&[-1, 0, 1]), 2 * g as i64 - 1)
}

fn section5(spec: &SurfaceSpec) -> Scalar {
    let (g, r) = (spec.genus, spec.r());
    if r == 0 {
        let base = if spec.t.is_multiple_of(2) { s1(g, 0) } else { sm1(g, 0) };
        base + correction(g)
    } else if spec.sigma() == 1 {
        s1(g, r)
    } else {
        sm1(g, r)
    }
}

/// The headline statement under a given reading, or `None` where it says nothing.
pub fn intro_closed_form(spec: &SurfaceSpec, reading: IntroReading) -> Option<Scalar> {
    let g = spec.genus;
    let r = match reading {
        IntroReading::AsWritten => spec.s(),
        IntroReading::Jordan => spec.r(),
    };
    let l = spec.r_minus + spec.t;
    if r == 0 {
        Some(s1(g, 0) + correction(g))
    } else if l.is_multiple_of(2) {
        Some(s1(g, r))
    } else if r == 1 && l == 1 {
        Some(sm1(g, 1) + correction(g))
    } else if l > 1 {
        Some(sm1(g, r))
    } else {
        None
    }
}

pub fn closed_form(spec: &SurfaceSpec, variant: FormulaVariant) -> Result<Scalar, EvalError> {
    match variant {
        FormulaVariant::Section5 => Ok(section5(spec)),
        FormulaVariant::Intro => intro_closed_form(spec, IntroReading::AsWritten).ok_or_else(|| {
            EvalError::FormulaUndefined {
                spec: *spec,
                reason: "l = 1 with r >= 2 is not covered".to_string(),
            }
        }),
    }
}
