use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::operators::TubeKind;

/// Holonomy prescribed at a marked point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PunctureKind {
    JPlus,
    JMinus,
    MinusId,
}

impl PunctureKind {
    pub const ALL: [PunctureKind; 3] = [PunctureKind::JPlus, PunctureKind::JMinus, PunctureKind::MinusId];

    pub fn tube(self) -> TubeKind {
        match self {
            PunctureKind::JPlus => TubeKind::JPlus,
            PunctureKind::JMinus => TubeKind::JMinus,
            PunctureKind::MinusId => TubeKind::MinusId,
        }
    }

    /// Short name used by the puncture mini-language.
    pub fn code(self) -> &'static str {
        match self {
            PunctureKind::JPlus => "jp",
            PunctureKind::JMinus => "jm",
            PunctureKind::MinusId => "mi",
        }
    }
}

impl FromStr for PunctureKind {
    type Err = SpecError;
    fn from_str(s: &str) -> Result<Self, SpecError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "jp" => Ok(PunctureKind::JPlus),
            "jm" => Ok(PunctureKind::JMinus),
            "mi" => Ok(PunctureKind::MinusId),
            other => Err(SpecError::UnknownKind(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("unknown puncture kind `{0}` (expected jp, jm or mi)")]
    UnknownKind(String),
    #[error("malformed puncture item `{0}` (expected kind:count)")]
    Malformed(String),
    #[error("bad count in `{0}`")]
    BadCount(String),
    #[error("puncture kind `{0}` listed twice")]
    Duplicate(String),
}

/// A closed orientable surface of some genus with marked points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub genus: u32,
    pub r_plus: u32,
    pub r_minus: u32,
    pub t: u32,
}

impl SurfaceSpec {
    pub fn new(genus: u32, r_plus: u32, r_minus: u32, t: u32) -> Self {
        SurfaceSpec { genus, r_plus, r_minus, t }
    }

    pub fn closed(genus: u32) -> Self {
        Self::new(genus, 0, 0, 0)
    }

    /// Genus plus the puncture list `jp:1,mi:2` (empty string for none).
    pub fn parse(genus: u32, punctures: &str) -> Result<Self, SpecError> {
        let mut spec = Self::closed(genus);
        let mut seen = [false; 3];
        for item in punctures.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (kind, count) = item
                .split_once(':')
                .ok_or_else(|| SpecError::Malformed(item.to_string()))?;
            let kind: PunctureKind = kind.parse()?;
            let count: u32 = count
                .trim()
                .parse()
                .map_err(|_| SpecError::BadCount(item.to_string()))?;
            let slot = &mut seen[kind as usize];
            if *slot {
                return Err(SpecError::Duplicate(kind.code().to_string()));
            }
            *slot = true;
            *spec.count_mut(kind) = count;
        }
        Ok(spec)
    }

    pub fn count(&self, kind: PunctureKind) -> u32 {
        match kind {
            PunctureKind::JPlus => self.r_plus,
            PunctureKind::JMinus => self.r_minus,
            PunctureKind::MinusId => self.t,
        }
    }

    fn count_mut(&mut self, kind: PunctureKind) -> &mut u32 {
        match kind {
            PunctureKind::JPlus => &mut self.r_plus,
            PunctureKind::JMinus => &mut self.r_minus,
            PunctureKind::MinusId => &mut self.t,
        }
    }

    pub fn with(mut self, kind: PunctureKind, count: u32) -> Self {
        *self.count_mut(kind) = count;
        self
    }

    /// Number of Jordan-type punctures.
    pub fn r(&self) -> u32 {
        self.r_plus + self.r_minus
    }

    /// Total number of punctures.
    pub fn s(&self) -> u32 {
        self.r() + self.t
    }

    /// `(-1)^(r_minus + t)`.
    pub fn sigma(&self) -> i32 {
        if (self.r_minus + self.t).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Punctures in canonical order: all `jp`, then `jm`, then `mi`.
    pub fn punctures(&self) -> Vec<PunctureKind> {
        PunctureKind::ALL
            .iter()
            .flat_map(|&k| std::iter::repeat_n(k, self.count(k) as usize))
            .collect()
    }

    /// The puncture list in the `kind:count` mini-language, nonzero kinds only.
    pub fn punctures_code(&self) -> String {
        PunctureKind::ALL
            .iter()
            .filter(|&&k| self.count(k) > 0)
            .map(|&k| format!("{}:{}", k.code(), self.count(k)))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// All specs with genus at most `max_genus` and at most `max_punctures`
    /// marked points, sorted by `(genus, r_plus, r_minus, t)`.
    pub fn grid(max_genus: u32, max_punctures: u32) -> Vec<SurfaceSpec> {
        let mut out = Vec::new();
        for g in 0..=max_genus {
            for rp in 0..=max_punctures {
                for rm in 0..=max_punctures - rp {
                    for t in 0..=max_punctures - rp - rm {
                        out.push(SurfaceSpec::new(g, rp, rm, t));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g={} r+={} r-={} t={}",
            self.genus, self.r_plus, self.r_minus, self.t
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_quantities() {
        let s = SurfaceSpec::new(2, 1, 2, 3);
        assert_eq!(s.r(), 3);
        assert_eq!(s.s(), 6);
        assert_eq!(s.sigma(), -1);
        assert_eq!(SurfaceSpec::new(0, 0, 1, 1).sigma(), 1);
    }

    #[test]
    fn puncture_language() {
        assert_eq!(SurfaceSpec::parse(1, "").unwrap(), SurfaceSpec::closed(1));
        assert_eq!(
            SurfaceSpec::parse(0, "jp:1, MI:2").unwrap(),
            SurfaceSpec::new(0, 1, 0, 2)
        );
        assert_eq!(SurfaceSpec::parse(0, "jm:0").unwrap(), SurfaceSpec::closed(0));
        assert!(matches!(SurfaceSpec::parse(0, "xx:1"), Err(SpecError::UnknownKind(_))));
        assert!(matches!(SurfaceSpec::parse(0, "jp"), Err(SpecError::Malformed(_))));
        assert!(matches!(SurfaceSpec::parse(0, "jp:-1"), Err(SpecError::BadCount(_))));
        assert!(matches!(SurfaceSpec::parse(0, "jp:1,jp:2"), Err(SpecError::Duplicate(_))));
        let s = SurfaceSpec::new(3, 2, 0, 1);
        assert_eq!(SurfaceSpec::parse(3, &s.punctures_code()).unwrap(), s);
    }

    #[test]
    fn grid_is_sorted_and_complete() {
        let g = SurfaceSpec::grid(4, 3);
        assert_eq!(g.len(), 5 * 20);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert!(g.iter().all(|s| s.s() <= 3));
    }
}
