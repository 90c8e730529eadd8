use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::surface::{evaluate_tqft, PunctureKind, SurfaceSpec};

use super::group::{build_group, GroupTable};
use super::OracleError;

/// Integer-valued function on a group, tagged with whether it is central.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    p: u32,
    values: Vec<i128>,
    central: bool,
}

fn is_central(values: &[i128], t: &GroupTable) -> Result<(), usize> {
    let mut seen: Vec<Option<i128>> = vec![None; t.class_count()];
    for (i, &v) in values.iter().enumerate() {
        match &mut seen[t.class_of(i)] {
            slot @ None => *slot = Some(v),
            Some(w) if *w != v => return Err(i),
            _ => {}
        }
    }
    Ok(())
}

impl ClassFunction {
    /// Rejects values that are not constant on conjugacy classes.
    pub fn new(values: Vec<i128>, t: &GroupTable) -> Result<Self, OracleError> {
        if values.len() != t.len() {
            return Err(OracleError::WrongLength { got: values.len(), want: t.len() });
        }
        is_central(&values, t).map_err(|index| OracleError::NotClassFunction { index })?;
        Ok(ClassFunction { p: t.p(), values, central: true })
    }

    /// Any function on the group; centrality is detected, not required.
    pub fn general(values: Vec<i128>, t: &GroupTable) -> Result<Self, OracleError> {
        if values.len() != t.len() {
            return Err(OracleError::WrongLength { got: values.len(), want: t.len() });
        }
        let central = is_central(&values, t).is_ok();
        Ok(ClassFunction { p: t.p(), values, central })
    }

    pub fn delta(x: usize, t: &GroupTable) -> Self {
        let mut v = vec![0; t.len()];
        v[x] = 1;
        Self::general(v, t).expect("length matches")
    }

    pub fn value(&self, i: usize) -> i128 {
        self.values[i]
    }

    pub fn values(&self) -> &[i128] {
        &self.values
    }

    pub fn is_central(&self) -> bool {
        self.central
    }

    pub fn support_size(&self) -> usize {
        self.values.iter().filter(|&&v| v != 0).count()
    }

    pub fn total(&self) -> Result<i128, OracleError> {
        self.values
            .iter()
            .try_fold(0i128, |acc, &v| acc.checked_add(v))
            .ok_or(OracleError::Overflow)
    }
}

/// `N(x) = #{(A, B) : A B A^-1 B^-1 = x}`.
pub fn commutator_distribution(t: &GroupTable) -> ClassFunction {
    let n = t.len();
    let counts = (0..n)
        .into_par_iter()
        .fold(
            || vec![0i128; n],
            |mut acc, a| {
                for b in 0..n {
                    acc[t.commutator(a, b)] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0i128; n],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(u, v)| *u += v);
                x
            },
        );
    ClassFunction::new(counts, t).expect("commutator counts are conjugation invariant")
}

fn conv_at(f: &ClassFunction, g: &ClassFunction, x: usize, t: &GroupTable) -> Result<i128, OracleError> {
    let mut sum = 0i128;
    for (y, &fy) in f.values.iter().enumerate() {
        if fy == 0 {
            continue;
        }
        let gy = g.values[t.mul(t.inv(y), x)];
        sum = fy
            .checked_mul(gy)
            .and_then(|m| sum.checked_add(m))
            .ok_or(OracleError::Overflow)?;
    }
    Ok(sum)
}

/// `(f * g)(x) = sum_y f(y) g(y^-1 x)`.
///
/// For two central functions only one value per conjugacy class is computed.
pub fn convolve_class_functions(
    f: &ClassFunction,
    g: &ClassFunction,
    t: &GroupTable,
) -> Result<ClassFunction, OracleError> {
    if f.p != t.p() || g.p != t.p() {
        return Err(OracleError::GroupMismatch);
    }
    if f.central && g.central {
        let per_class = (0..t.class_count())
            .into_par_iter()
            .map(|c| conv_at(f, g, t.class_rep(c), t))
            .collect::<Result<Vec<_>, _>>()?;
        let values = (0..t.len()).map(|x| per_class[t.class_of(x)]).collect();
        return Ok(ClassFunction { p: t.p(), values, central: true });
    }
    let values = (0..t.len())
        .into_par_iter()
        .map(|x| conv_at(f, g, x, t))
        .collect::<Result<Vec<_>, _>>()?;
    ClassFunction::general(values, t)
}

/// Membership by trace equation: `J+` is trace 2 minus `Id`, `J-` is trace -2
/// minus `-Id`.
pub fn puncture_indicator(kind: PunctureKind, t: &GroupTable) -> ClassFunction {
    let p = t.p();
    let values = (0..t.len())
        .map(|i| {
            let hit = match kind {
                PunctureKind::JPlus => t.trace(i) == 2 % p && i != t.id_index(),
                PunctureKind::JMinus => t.trace(i) == p - 2 && i != t.neg_id_index(),
                PunctureKind::MinusId => i == t.neg_id_index(),
            };
            hit as i128
        })
        .collect();
    ClassFunction::new(values, t).expect("trace conditions are conjugation invariant")
}

/// Group table plus the commutator distribution, reusable across specs.
#[derive(Debug, Clone)]
pub struct Oracle {
    table: GroupTable,
    n1: ClassFunction,
}

impl Oracle {
    pub fn new(p: u32) -> Result<Self, OracleError> {
        let table = build_group(p)?;
        let n1 = commutator_distribution(&table);
        Ok(Oracle { table, n1 })
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn commutators(&self) -> &ClassFunction {
        &self.n1
    }

    /// Full distribution of `prod [A_i, B_i] prod C_j` over admissible tuples.
    pub fn distribution(&self, spec: &SurfaceSpec) -> Result<ClassFunction, OracleError> {
        let t = &self.table;
        let mut acc = ClassFunction::delta(t.id_index(), t);
        for _ in 0..spec.genus {
            acc = convolve_class_functions(&acc, &self.n1, t)?;
        }
        for kind in spec.punctures() {
            acc = convolve_class_functions(&acc, &puncture_indicator(kind, t), t)?;
        }
        Ok(acc)
    }

    pub fn count(&self, spec: &SurfaceSpec) -> Result<i128, OracleError> {
        Ok(self.distribution(spec)?.value(self.table.id_index()))
    }

    pub fn cross_check(&self, spec: &SurfaceSpec) -> Result<CrossCheck, OracleError> {
        let count = self.count(spec)?;
        let value = evaluate_tqft(spec)?
            .eval_at(self.table.p() as i64)
            .expect("polynomials have no poles");
        let pass = value.is_integer() && *value.numer() == BigInt::from(count);
        Ok(CrossCheck { spec: *spec, p: self.table.p(), count, polynomial: value, pass })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossCheck {
    pub spec: SurfaceSpec,
    pub p: u32,
    pub count: i128,
    /// The composed class evaluated at `q = p`.
    pub polynomial: BigRational,
    pub pass: bool,
}

pub fn count_solutions(spec: &SurfaceSpec, p: u32) -> Result<i128, OracleError> {
    Oracle::new(p)?.count(spec)
}

pub fn cross_check(spec: &SurfaceSpec, p: u32) -> Result<CrossCheck, OracleError> {
    Oracle::new(p)?.cross_check(spec)
}
