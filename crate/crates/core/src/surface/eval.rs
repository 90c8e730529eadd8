use crate::module::CoreVector;
use crate::operators::{disc_in, disc_out_coeff, sl2_class, OperatorError, OperatorSet, TubeKind};
use crate::ring::{RingError, Scalar};

use super::spec::SurfaceSpec;
use super::word::BordismWord;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("operator construction failed: {0}")]
    Operators(#[from] OperatorError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("evaluation of {spec} is not an integer polynomial: {value}")]
    NotPolynomial { spec: SurfaceSpec, value: Scalar },
    #[error("evaluation of {spec} depends on tube order: {a} vs {b}")]
    OrderDependent { spec: SurfaceSpec, a: Scalar, b: Scalar },
    #[error("closed formula undefined for {spec}: {reason}")]
    FormulaUndefined { spec: SurfaceSpec, reason: String },
}

/// Raw `Dt ∘ tubes ∘ D` with the rightmost tube applied first,
/// divided by one `(q^3 - q)` per tube.
fn raw(ops: &OperatorSet, tubes: &[TubeKind]) -> Result<Scalar, RingError> {
    let mut v: CoreVector = disc_in();
    for &k in tubes.iter().rev() {
        v = ops.tube(k).apply(&v);
    }
    let norm = sl2_class().pow(tubes.len() as u32);
    Ok(disc_out_coeff(&v) * norm.inv()?)
}

fn checked(spec: SurfaceSpec, value: Scalar) -> Result<Scalar, EvalError> {
    if value.as_int_poly().is_none() {
        return Err(EvalError::NotPolynomial { spec, value });
    }
    Ok(value)
}

/// Evaluates a closed bordism given as a list of tubes in written order.
pub fn evaluate_in_order(tubes: &[TubeKind]) -> Result<Scalar, EvalError> {
    let ops = OperatorSet::shared();
    let spec = super::word::word_to_spec(&BordismWord::new(tubes.iter().map(|&k| (k, 1)).collect()));
    checked(spec, raw(ops, tubes)?)
}

/// Motivic class of the parabolic representation variety of `spec`.
///
/// Evaluated in the canonical order and again in the reverse order; the two
/// must agree since the tubes commute.
pub fn evaluate_tqft(spec: &SurfaceSpec) -> Result<Scalar, EvalError> {
    let ops = OperatorSet::shared();
    let forward = BordismWord::for_spec(spec).tubes();
    let a = raw(ops, &forward)?;
    if spec.s() > 0 {
        let backward: Vec<_> = forward.iter().rev().copied().collect();
        let b = raw(ops, &backward)?;
        if a != b {
            return Err(EvalError::OrderDependent { spec: *spec, a, b });
        }
    }
    checked(*spec, a)
}

/// Evaluates a parsed word in its literal order.
pub fn evaluate_word(word: &BordismWord) -> Result<Scalar, EvalError> {
    evaluate_in_order(&word.tubes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::parse_word;

    fn p(c: &[i64]) -> Scalar {
        Scalar::poly(c)
    }

    #[test]
    fn sphere_and_torus() {
        assert!(evaluate_tqft(&SurfaceSpec::closed(0)).unwrap().is_one());
        // q(q-1)(q+1)(q+4) = q^4 + 4q^3 - q^2 - 4q
        assert_eq!(evaluate_tqft(&SurfaceSpec::closed(1)).unwrap(), p(&[0, -4, -1, 4, 1]));
    }

    #[test]
    fn small_punctured_spheres() {
        assert!(evaluate_tqft(&SurfaceSpec::new(0, 1, 0, 0)).unwrap().is_zero());
        assert_eq!(evaluate_tqft(&SurfaceSpec::new(0, 2, 0, 0)).unwrap(), p(&[-1, 0, 1]));
        assert_eq!(evaluate_tqft(&SurfaceSpec::new(1, 0, 0, 1)).unwrap(), p(&[0, -1, 0, 1]));
    }

    #[test]
    fn word_order_does_not_matter() {
        let a = evaluate_word(&parse_word("Dt . JP . MI . L^2 . D").unwrap()).unwrap();
        let b = evaluate_word(&parse_word("Dt . L . MI . L . JP . D").unwrap()).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, evaluate_tqft(&SurfaceSpec::new(2, 1, 0, 1)).unwrap());
    }
}
