//! Dense univariate polynomials in `q` with arbitrary-precision integer
//! coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial in `q` over the integers.
///
/// Coefficients are stored in ascending order of exponent. The highest stored
/// coefficient is never zero, so the zero polynomial is the empty vector and
/// structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The Lefschetz motif `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `d`, which must divide all of them.
    pub fn div_exact_scalar(&self, d: &BigInt) -> Self {
        debug_assert!(!d.is_zero());
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| {
                    debug_assert!((c % d).is_zero());
                    c / d
                })
                .collect(),
        )
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// The polynomial divided by its content, with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_exact_scalar(&c)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Pseudo-remainder of `self` by `divisor`: the remainder of `k * self` on
    /// division by `divisor`, for some power `k` of the divisor's leading
    /// coefficient. Only used up to constant factors.
    pub fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("pseudo-division by the zero polynomial");
        let lc = divisor.leading().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.pop().expect("nonempty");
            let shift = rem.len() - dd;
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            if !top.is_zero() {
                for (i, dc) in divisor.coeffs[..dd].iter().enumerate() {
                    rem[shift + i] -= &top * dc;
                }
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        IntPoly::from_coeffs(rem)
    }

    /// Exact division by `divisor`. Returns `None` when the division leaves a
    /// remainder or a non-integral quotient coefficient.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree().expect("division by the zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let sd = self.degree()?;
        if sd < dd {
            return None;
        }
        let lc = divisor.leading().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &qc * dc;
            }
            quot[k] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quot))
    }

    /// Gcd over the rationals, returned primitive with positive leading
    /// coefficient (the zero polynomial if both inputs are zero).
    ///
    /// Primitive polynomial remainder sequence: each pseudo-remainder is
    /// replaced by its primitive part, which keeps coefficients bounded.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.primitive_part()
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Renders with descending powers, `q^2 - 1` style.
    pub fn render_text(&self) -> String {
        self.render(|e| if e == 1 { "q".into() } else { format!("q^{e}") })
    }

    /// Renders with descending powers, `q^{2} - 1` style.
    pub fn render_latex(&self) -> String {
        self.render(|e| if e == 1 { "q".into() } else { format!("q^{{{e}}}") })
    }

    fn render(&self, power: impl Fn(usize) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if e == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                out.push_str(&power(e));
            }
        }
        out
    }
}

/// Parses sums of terms such as `q^5 - 2q^4 - 3q^3 + q^2 + 3q` or `-2*q + 2`.
impl std::str::FromStr for IntPoly {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err("empty polynomial".into());
        }
        let mut acc = IntPoly::zero();
        let mut i = 0;
        while i < src.len() {
            let mut sign = 1i64;
            if src[i] == '+' || src[i] == '-' {
                if src[i] == '-' {
                    sign = -1;
                }
                i += 1;
            } else if i > 0 {
                return Err(format!("expected `+` or `-` at {i}"));
            }
            let start = i;
            while i < src.len() && src[i].is_ascii_digit() {
                i += 1;
            }
            let coeff: BigInt = if i > start {
                src[start..i].iter().collect::<String>().parse().map_err(|e| format!("{e}"))?
            } else {
                BigInt::one()
            };
            if i < src.len() && src[i] == '*' {
                i += 1;
            }
            let mut exp = 0usize;
            if i < src.len() && src[i] == 'q' {
                i += 1;
                exp = 1;
                if i < src.len() && src[i] == '^' {
                    i += 1;
                    let e0 = i;
                    while i < src.len() && src[i].is_ascii_digit() {
                        i += 1;
                    }
                    if e0 == i {
                        return Err(format!("missing exponent at {e0}"));
                    }
                    exp = src[e0..i].iter().collect::<String>().parse().map_err(|e| format!("{e}"))?;
                }
            } else if i == start {
                return Err(format!("expected a term at {start}"));
            }
            acc = &acc + &IntPoly::monomial(coeff * sign, exp);
        }
        Ok(acc)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.render_text())
    }
}

impl PartialOrd for IntPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree, then coefficients from the top. Only used to make
/// collections deterministic.
impl Ord for IntPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
    }

    #[test]
    fn gcd_of_difference_of_squares() {
        // (q^2 - 1, q^2 - 2q + 1) -> q - 1
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, -2, 1])), p(&[-1, 1]));
        // coprime
        assert_eq!(p(&[0, 1]).gcd(&p(&[1, 1])), IntPoly::one());
        // contents are ignored
        assert_eq!(p(&[-6, 0, 6]).gcd(&p(&[4, 4])), p(&[1, 1]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 0, 1]); // q^3 - 1
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[1, 1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[1, 1]).div_exact(&p(&[0, 2])), None);
    }

    #[test]
    fn pseudo_remainder() {
        // 2 * (q^2 + 1) = (2q)(q) + 2
        assert_eq!(p(&[1, 0, 1]).pseudo_rem(&p(&[0, 2])), p(&[2]));
        // 3 * (q^2 + q + 1) = (3q + 1)(q) + ... ; remainder is a multiple of 7
        let r = p(&[1, 1, 1]).pseudo_rem(&p(&[1, 3]));
        assert_eq!(r.degree(), Some(0));
        assert_eq!(r.primitive_part(), IntPoly::one());
    }

    #[test]
    fn render_descending() {
        assert_eq!(p(&[-1, 0, 1]).render_text(), "q^2 - 1");
        assert_eq!(p(&[-1, 0, 1]).render_latex(), "q^{2} - 1");
        assert_eq!(p(&[0, -4, -1, 4, 1]).render_text(), "q^4 + 4q^3 - q^2 - 4q");
        assert_eq!(p(&[0, -1]).render_text(), "-q");
        assert_eq!(IntPoly::zero().render_text(), "0");
    }

    #[test]
    fn parses_printed_notation() {
        assert_eq!("q^2 - 2q - 3".parse::<IntPoly>().unwrap(), p(&[-3, -2, 1]));
        assert_eq!("-2*q + 2".parse::<IntPoly>().unwrap(), p(&[2, -2]));
        assert_eq!("0".parse::<IntPoly>().unwrap(), IntPoly::zero());
        assert_eq!("-q".parse::<IntPoly>().unwrap(), p(&[0, -1]));
        assert!("q^".parse::<IntPoly>().is_err());
        assert!("2q 3".parse::<IntPoly>().is_err());
        assert!("".parse::<IntPoly>().is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[0, -1, 0, 1]).eval_int(&BigInt::from(3)), BigInt::from(24));
    }
}
