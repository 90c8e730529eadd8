//! Rational functions in `q` over the integers, kept in a canonical form.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;
use super::RingError;

/// An element of the fraction field `Q(q)`.
///
/// Canonical form: numerator and denominator are coprime over the rationals,
/// their integer contents are coprime, and the denominator has a positive
/// leading coefficient. Zero is `0 / 1`. Two scalars are equal exactly when
/// their canonical forms are structurally equal, so `Eq` and `Hash` are
/// derived.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: IntPoly,
    den: IntPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    pub fn q() -> Self {
        Self::from_poly(IntPoly::q())
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::from_poly(IntPoly::constant(n))
    }

    /// `n / d` as an exact rational constant.
    pub fn from_ratio(n: i64, d: i64) -> Result<Self, RingError> {
        Self::from_fraction(IntPoly::constant(n), IntPoly::constant(d))
    }

    /// Polynomial with ascending integer coefficients.
    pub fn poly(coeffs: &[i64]) -> Self {
        Self::from_poly(IntPoly::from_i64s(coeffs))
    }

    pub fn from_poly(p: IntPoly) -> Self {
        Scalar {
            num: p,
            den: IntPoly::one(),
        }
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn from_fraction(num: IntPoly, den: IntPoly) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Scalar::zero();
        }
        let (mut num, mut den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_exact_scalar(&c);
            den = den.div_exact_scalar(&c);
        }
        Scalar { num, den }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the canonical denominator is constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// True when the value lies in `Z[q, 1/q, 1/(q-1), 1/(q+1)]` up to rational
    /// constants: the denominator factors over the rationals into powers of
    /// `q`, `q - 1` and `q + 1` only.
    pub fn is_localized(&self) -> bool {
        let mut rest = self.den.primitive_part();
        for atom in [
            IntPoly::q(),
            IntPoly::from_i64s(&[-1, 1]),
            IntPoly::from_i64s(&[1, 1]),
        ] {
            while let Some(quot) = rest.div_exact(&atom) {
                rest = quot;
            }
        }
        rest.is_constant()
    }

    /// `self` as a polynomial with integer coefficients, if it is one.
    pub fn as_int_poly(&self) -> Option<IntPoly> {
        if !self.den.is_one() {
            return None;
        }
        Some(self.num.clone())
    }

    pub fn inv(&self) -> Result<Self, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    /// Integer power; negative exponents invert.
    pub fn powi(&self, exp: i32) -> Result<Self, RingError> {
        if exp < 0 {
            return self.inv()?.powi(-exp);
        }
        let e = exp as u32;
        // Powers of a canonical fraction stay canonical up to the sign of
        // the denominator's leading coefficient, which is positive here.
        Ok(Scalar {
            num: self.num.pow(e),
            den: self.den.pow(e),
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        Scalar {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// Exact value at the integer `q = n`.
    pub fn eval_at(&self, n: i64) -> Result<BigRational, RingError> {
        let x = BigInt::from(n);
        let d = self.den.eval_int(&x);
        if d.is_zero() {
            return Err(RingError::Pole { at: n });
        }
        Ok(BigRational::new(self.num.eval_int(&x), d))
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        Self::normalize(self.num.scale(k), self.den.clone())
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<IntPoly> for Scalar {
    fn from(p: IntPoly) -> Self {
        Scalar::from_poly(p)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", super::render::text(self))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::text(self))
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Scalar::normalize(&self.num + &rhs.num, self.den.clone());
        }
        // a/b + c/d over the gcd of the denominators keeps the growth down.
        let g = self.den.gcd(&rhs.den);
        let (b1, d1) = if g.is_constant() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (
                self.den.div_exact(&g).expect("gcd divides"),
                rhs.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        let den = &self.den * &d1;
        Scalar::normalize(num, den)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel first so the products stay small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = rhs.den.div_exact(&g1).expect("gcd divides");
        let c = rhs.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        Scalar::normalize(&a * &c, &b * &d)
    }
}

/// Panics on division by zero; use [`Scalar::inv`] for the fallible form.
impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}
