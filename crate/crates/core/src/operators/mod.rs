//! Concrete operators on the core module: the trace push-pull `eta`, the sign
//! involution `sigma`, the reduced tubes and the unreduced genus tube.

mod tables;

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::module::{BasisIndex, CoreMatrix, CoreVector};
use crate::ring::{IntPoly, Scalar};
use tables::Table;

use BasisIndex::*;

/// Strict tubes with a single boundary circle in and out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TubeKind {
    /// Holed torus: adds one to the genus.
    GenusL,
    /// Puncture with holonomy in the Jordan class of trace 2.
    JPlus,
    /// Puncture with holonomy in the Jordan class of trace -2.
    JMinus,
    /// Puncture with holonomy `-Id`.
    MinusId,
}

impl TubeKind {
    pub const ALL: [TubeKind; 4] = [
        TubeKind::GenusL,
        TubeKind::JPlus,
        TubeKind::JMinus,
        TubeKind::MinusId,
    ];
}

impl fmt::Display for TubeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TubeKind::GenusL => "L",
            TubeKind::JPlus => "JP",
            TubeKind::JMinus => "JM",
            TubeKind::MinusId => "MI",
        })
    }
}

/// `q^3 - q`, the class of SL(2, C).
pub fn sl2_class() -> Scalar {
    Scalar::poly(&[0, -1, 0, 1])
}

fn from_table(t: &Table) -> CoreMatrix {
    CoreMatrix::from_rows(std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let p: IntPoly = t[i][j]
                .parse()
                .unwrap_or_else(|e| panic!("bad table entry ({i}, {j}) `{}`: {e}", t[i][j]));
            Scalar::from_poly(p)
        })
    }))
}

pub fn eta_matrix() -> CoreMatrix {
    from_table(&tables::ETA)
}

/// `eta^-1` from the block structure of `eta`: reciprocals on the four
/// one-dimensional blocks and the inverse of `[[q^2, q], [q, q^2]]`, which is
/// `[[q^2, -q], [-q, q^2]] / (q^4 - q^2)`, on the two symmetric blocks.
pub fn eta_inverse_closed_form() -> CoreMatrix {
    let frac = |n: &[i64], d: &[i64]| {
        Scalar::from_fraction(IntPoly::from_i64s(n), IntPoly::from_i64s(d)).expect("nonzero")
    };
    let diag = frac(&[1], &[-1, 0, 1]);
    let off = frac(&[-1], &[0, -1, 0, 1]);
    let mut m = CoreMatrix::identity();
    m.set(Tp, Tp, diag.clone());
    m.set(Tm, Tm, diag.clone());
    for (a, b) in [(TB, S2Sm2), (S2, Sm2)] {
        m.set(a, a, diag.clone());
        m.set(b, b, diag.clone());
        m.set(a, b, off.clone());
        m.set(b, a, off.clone());
    }
    m
}

/// Permutation induced by `A -> -A`.
pub fn sigma_matrix() -> CoreMatrix {
    let image = |b: BasisIndex| match b {
        T1 => Tm1,
        Tm1 => T1,
        Tp => Tm,
        Tm => Tp,
        TB => TB,
        S2 => Sm2,
        Sm2 => S2,
        S2Sm2 => S2Sm2,
    };
    CoreMatrix::from_columns(BasisIndex::ALL.map(|b| CoreVector::basis(image(b))))
}

/// The unreduced genus tube, including its `(q^3 - q)^2` prefix.
pub fn genus_unreduced_matrix() -> CoreMatrix {
    from_table(&tables::GENUS_UNREDUCED).scale(&sl2_class().pow(2))
}

fn jordan_plus_matrix() -> CoreMatrix {
    from_table(&tables::JORDAN_PLUS).scale(&sl2_class())
}

/// The trace -2 Jordan tube from its own table, used to cross-check `sigma * cz_jp`.
pub fn jordan_minus_tabulated() -> CoreMatrix {
    from_table(&tables::JORDAN_MINUS).scale(&sl2_class())
}

/// Reduced tube matrix of the given kind, taken from the shared operator set.
pub fn tube_matrix(kind: TubeKind) -> CoreMatrix {
    OperatorSet::shared().tube(kind).clone()
}

/// The disc as an incoming bordism: the unit over the identity.
pub fn disc_in() -> CoreVector {
    CoreVector::basis(T1)
}

/// The disc as an outgoing bordism: projection onto `T1`.
pub fn disc_out_coeff(v: &CoreVector) -> Scalar {
    v[T1].clone()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OperatorError {
    #[error("anchor entry ({row}, {col}) of {op} is {found}, expected {expected}")]
    Anchor {
        op: &'static str,
        row: BasisIndex,
        col: BasisIndex,
        expected: String,
        found: String,
    },
    #[error("eta is not invertible: {0}")]
    EtaSingular(#[from] crate::module::ModuleError),
    #[error("generic inverse of eta disagrees with the block inverse at ({0}, {1})")]
    EtaInverseMismatch(BasisIndex, BasisIndex),
}

/// All operators used by the evaluator, built once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorSet {
    pub eta: CoreMatrix,
    pub eta_inv: CoreMatrix,
    pub sigma: CoreMatrix,
    /// Unreduced genus tube.
    pub zg_l: CoreMatrix,
    pub cz_l: CoreMatrix,
    pub cz_jp: CoreMatrix,
    pub cz_jm: CoreMatrix,
    pub cz_mi: CoreMatrix,
    pub sl2_class: Scalar,
}

impl OperatorSet {
    /// Assembles the operators from the transcribed tables and checks the
    /// anchor entries that pin the orientation.
    pub fn build() -> Result<Self, OperatorError> {
        let c = sl2_class();
        let eta = eta_matrix();
        let eta_inv = eta.inv()?;
        if let Some((r, col)) = eta_inv.first_difference(&eta_inverse_closed_form()) {
            return Err(OperatorError::EtaInverseMismatch(r, col));
        }
        let sigma = sigma_matrix();
        let zg_l = genus_unreduced_matrix();
        let cz_l = zg_l.mul(&eta_inv);
        let cz_jp = jordan_plus_matrix();
        let cz_jm = sigma.mul(&cz_jp);
        let cz_mi = sigma.scale(&c);
        let ops = OperatorSet {
            eta,
            eta_inv,
            sigma,
            zg_l,
            cz_l,
            cz_jp,
            cz_jm,
            cz_mi,
            sl2_class: c,
        };
        ops.check_anchors()?;
        Ok(ops)
    }

    /// Process-wide operator set. Panics if the shipped tables fail their
    /// anchor checks, which would mean a corrupted transcription.
    pub fn shared() -> &'static OperatorSet {
        static OPS: OnceLock<OperatorSet> = OnceLock::new();
        OPS.get_or_init(|| OperatorSet::build().expect("shipped operator tables are consistent"))
    }

    pub fn tube(&self, kind: TubeKind) -> &CoreMatrix {
        match kind {
            TubeKind::GenusL => &self.cz_l,
            TubeKind::JPlus => &self.cz_jp,
            TubeKind::JMinus => &self.cz_jm,
            TubeKind::MinusId => &self.cz_mi,
        }
    }

    /// Entries with independently known values. Transposing any
    /// transcribed table moves at least one of them.
    pub fn anchors(&self) -> Vec<Anchor> {
        let c = &self.sl2_class;
        let c2 = c.pow(2);
        vec![
            Anchor {
                op: "cz_jp",
                row: Tp,
                col: T1,
                expected: c * &Scalar::poly(&[-1, 0, 1]),
            },
            Anchor {
                op: "zg_l",
                row: T1,
                col: T1,
                expected: &c2 * &Scalar::poly(&[4, 1]),
            },
            Anchor {
                op: "zg_l",
                row: S2Sm2,
                col: T1,
                expected: &c2 * &Scalar::q(),
            },
        ]
    }

    fn by_name(&self, op: &str) -> &CoreMatrix {
        match op {
            "eta" => &self.eta,
            "eta_inv" => &self.eta_inv,
            "sigma" => &self.sigma,
            "zg_l" => &self.zg_l,
            "cz_l" => &self.cz_l,
            "cz_jp" => &self.cz_jp,
            "cz_jm" => &self.cz_jm,
            "cz_mi" => &self.cz_mi,
            other => panic!("unknown operator `{other}`"),
        }
    }

    pub fn check_anchors(&self) -> Result<(), OperatorError> {
        for a in self.anchors() {
            let found = self.by_name(a.op).get(a.row, a.col);
            if found != &a.expected {
                return Err(OperatorError::Anchor {
                    op: a.op,
                    row: a.row,
                    col: a.col,
                    expected: a.expected.to_string(),
                    found: found.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Runs every inter-operator identity and reports each one.
    pub fn verify_identities(&self) -> IdentityReport {
        let c = &self.sl2_class;
        let id = CoreMatrix::identity();
        let mut checks = Vec::new();
        let mut push = |name: String, lhs: CoreMatrix, rhs: CoreMatrix| {
            let first_difference = lhs.first_difference(&rhs);
            checks.push(IdentityCheck {
                name,
                passed: first_difference.is_none(),
                first_difference,
            });
        };
        push("eta * eta_inv = I".into(), self.eta.mul(&self.eta_inv), id.clone());
        push("sigma^2 = I".into(), self.sigma.mul(&self.sigma), id.clone());
        push(
            "cz_mi^2 = (q^3 - q)^2 I".into(),
            self.cz_mi.mul(&self.cz_mi),
            id.scale(&c.pow(2)),
        );
        push(
            "cz_mi * cz_jm = (q^3 - q) cz_jp".into(),
            self.cz_mi.mul(&self.cz_jm),
            self.cz_jp.scale(c),
        );
        push(
            "cz_jm = sigma * cz_jp".into(),
            self.cz_jm.clone(),
            self.sigma.mul(&self.cz_jp),
        );
        let tubes = [
            ("cz_l", &self.cz_l),
            ("cz_jp", &self.cz_jp),
            ("cz_jm", &self.cz_jm),
            ("cz_mi", &self.cz_mi),
        ];
        for (i, (na, a)) in tubes.iter().enumerate() {
            for (nb, b) in &tubes[i + 1..] {
                push(format!("{na} * {nb} = {nb} * {na}"), a.mul(b), b.mul(a));
            }
        }
        let mut first_unlocalized = None;
        'outer: for (name, m) in [
            ("eta", &self.eta),
            ("eta_inv", &self.eta_inv),
            ("sigma", &self.sigma),
            ("zg_l", &self.zg_l),
            ("cz_l", &self.cz_l),
            ("cz_jp", &self.cz_jp),
            ("cz_jm", &self.cz_jm),
            ("cz_mi", &self.cz_mi),
        ] {
            for (r, col, x) in m.entries() {
                if !x.is_localized() {
                    first_unlocalized = Some((name, r, col));
                    break 'outer;
                }
            }
        }
        checks.push(IdentityCheck {
            name: match first_unlocalized {
                Some((op, _, _)) => format!("all entries localized (fails in {op})"),
                None => "all entries localized".into(),
            },
            passed: first_unlocalized.is_none(),
            first_difference: first_unlocalized.map(|(_, r, c)| (r, c)),
        });
        IdentityReport { checks }
    }
}

#[derive(Debug, Clone)]
pub struct Anchor {
    pub op: &'static str,
    pub row: BasisIndex,
    pub col: BasisIndex,
    pub expected: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    /// First `(row, column)` where the two sides differ.
    pub first_difference: Option<(BasisIndex, BasisIndex)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name_prefix: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name.starts_with(name_prefix))
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
            if let Some((r, col)) = c.first_difference {
                write!(f, " (first difference at {r}, {col})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Runs the identity suite on the shipped operators.
pub fn verify_operator_identities() -> IdentityReport {
    OperatorSet::shared().verify_identities()
}
