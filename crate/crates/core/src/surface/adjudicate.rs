use std::fmt;

use serde::Serialize;

use crate::ring::Scalar;

use super::closed_form::{closed_form, intro_closed_form, FormulaVariant, IntroReading};
use super::eval::{evaluate_tqft, EvalError};
use super::spec::SurfaceSpec;

#[derive(Debug, Clone, PartialEq)]
pub struct IntroOutcome {
    pub reading: IntroReading,
    /// `None` where the reading leaves the case uncovered.
    pub value: Option<Scalar>,
}

impl IntroOutcome {
    pub fn matches(&self, reference: &Scalar) -> Option<bool> {
        self.value.as_ref().map(|v| v == reference)
    }
}

/// Compares the composed value against each formula variant and reading.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjudicationReport {
    pub spec: SurfaceSpec,
    pub tqft: Scalar,
    pub section5: Scalar,
    pub intro: Vec<IntroOutcome>,
}

impl AdjudicationReport {
    pub fn section5_matches(&self) -> bool {
        self.section5 == self.tqft
    }

    pub fn outcome(&self, reading: IntroReading) -> &IntroOutcome {
        self.intro.iter().find(|o| o.reading == reading).expect("every reading is evaluated")
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Reading {
            reading: String,
            value: Option<String>,
            matches: Option<bool>,
        }
        let intro: Vec<_> = self
            .intro
            .iter()
            .map(|o| Reading {
                reading: o.reading.to_string(),
                value: o.value.as_ref().map(|v| v.to_string()),
                matches: o.matches(&self.tqft),
            })
            .collect();
        serde_json::json!({
            "spec": self.spec,
            "tqft": self.tqft.to_string(),
            "section5": self.section5.to_string(),
            "section5_matches": self.section5_matches(),
            "intro": intro,
        })
    }
}

impl fmt::Display for AdjudicationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = |b: Option<bool>| match b {
            Some(true) => "match",
            Some(false) => "MISMATCH",
            None => "undefined",
        };
        writeln!(f, "{}", self.spec)?;
        writeln!(f, "  tqft      {}", self.tqft)?;
        writeln!(f, "  section5  {}  [{}]", self.section5, verdict(Some(self.section5_matches())))?;
        for o in &self.intro {
            let shown = o.value.as_ref().map_or_else(|| "-".to_string(), |v| v.to_string());
            writeln!(f, "  intro/{:<10} {}  [{}]", o.reading.to_string(), shown, verdict(o.matches(&self.tqft)))?;
        }
        Ok(())
    }
}

pub fn adjudicate(spec: &SurfaceSpec) -> Result<AdjudicationReport, EvalError> {
    let tqft = evaluate_tqft(spec)?;
    let section5 = closed_form(spec, FormulaVariant::Section5)?;
    let intro = IntroReading::ALL
        .iter()
        .map(|&reading| IntroOutcome { reading, value: intro_closed_form(spec, reading) })
        .collect();
    Ok(AdjudicationReport { spec: *spec, tqft, section5, intro })
}
