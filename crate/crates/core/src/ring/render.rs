//! Deterministic text, LaTeX and JSON renderings of scalars.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{IntPoly, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected text|latex|json)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Latex => "latex",
            Format::Json => "json",
        })
    }
}

pub fn render(a: &Scalar, fmt: Format) -> String {
    match fmt {
        Format::Text => text(a),
        Format::Latex => latex(a),
        Format::Json => serde_json::to_string(&ScalarJson::from(a)).expect("plain data serializes"),
    }
}

fn wrap(s: String, poly: &IntPoly) -> String {
    if poly.terms().count() > 1 {
        format!("({s})")
    } else {
        s
    }
}

pub fn text(a: &Scalar) -> String {
    let num = a.numerator();
    let den = a.denominator();
    if den.is_one() {
        return num.render_text();
    }
    format!(
        "{}/{}",
        wrap(num.render_text(), num),
        wrap(den.render_text(), den)
    )
}

pub fn latex(a: &Scalar) -> String {
    let num = a.numerator();
    let den = a.denominator();
    if den.is_one() {
        return num.render_latex();
    }
    format!("\\frac{{{}}}{{{}}}", num.render_latex(), den.render_latex())
}

/// On-wire form: `{"num": {exp: coeff}, "den": {exp: coeff}}` with exponent
/// keys as decimal strings and only nonzero coefficients listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarJson {
    pub num: BTreeMap<u32, JsonInt>,
    pub den: BTreeMap<u32, JsonInt>,
}

/// Integer that serializes as a JSON number when it fits in `i64` and as a
/// decimal string otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(JsonInt(v.into())),
            Raw::Str(s) => s.parse().map(JsonInt).map_err(serde::de::Error::custom),
        }
    }
}

fn poly_map(p: &IntPoly) -> BTreeMap<u32, JsonInt> {
    p.terms()
        .map(|(e, c)| (e as u32, JsonInt(c.clone())))
        .collect()
}

fn map_poly(m: &BTreeMap<u32, JsonInt>) -> IntPoly {
    let len = m.keys().next_back().map_or(0, |&e| e as usize + 1);
    let mut coeffs = vec![BigInt::from(0); len];
    for (&e, c) in m {
        coeffs[e as usize] += &c.0;
    }
    IntPoly::from_coeffs(coeffs)
}

impl From<&Scalar> for ScalarJson {
    fn from(a: &Scalar) -> Self {
        ScalarJson {
            num: poly_map(a.numerator()),
            den: poly_map(a.denominator()),
        }
    }
}

impl TryFrom<&ScalarJson> for Scalar {
    type Error = super::RingError;
    fn try_from(j: &ScalarJson) -> Result<Self, Self::Error> {
        Scalar::from_fraction(map_poly(&j.num), map_poly(&j.den))
    }
}
