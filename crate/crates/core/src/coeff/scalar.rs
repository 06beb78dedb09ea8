//! The coefficient field `Q(q)`: fractions of Laurent polynomials in
//! canonical form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, Signed, Zero};

use super::laurent::LaurentPoly;
use super::CoeffError;

/// An element of `Q(q)` stored as `num / den` in canonical form:
///
/// * `den` is a genuine polynomial in `q` (lowest exponent 0) with coprime
///   integer coefficients and positive leading coefficient;
/// * `gcd(num, den) = 1` after factoring the `q`-power out of `num`;
/// * zero is stored as `0 / 1`.
///
/// Equality and hashing are therefore structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Scalar {
    /// Build `num / den`, normalizing. Fails on a zero denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Scalar { num: LaurentPoly::zero(), den: LaurentPoly::one() };
        }
        // Factor q-powers out of both parts so gcd runs on polynomials.
        let vn = num.min_exp().unwrap();
        let vd = den.min_exp().unwrap();
        let mut np = num.shift(-vn);
        let mut dp = den.shift(-vd);
        let g = np.gcd(&dp);
        if !g.is_one() {
            np = np.div_exact(&g);
            dp = dp.div_exact(&g);
        }
        // The net q-power goes into the numerator.
        np = np.shift(vn - vd);
        // Scale so the denominator is a primitive integer polynomial with
        // positive leading coefficient.
        let mut lambda = dp.primitive_scale();
        if (dp.leading_coeff() * &lambda).is_negative() {
            lambda = -lambda;
        }
        Scalar {
            num: np.scale_monomial(&lambda, 0),
            den: dp.scale_monomial(&lambda, 0),
        }
    }

    /// Re-normalize an already valid fraction; idempotent.
    pub fn normalize(&self) -> Self {
        Self::normalized(self.num.clone(), self.den.clone())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self::normalized(p, LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_laurent(LaurentPoly::from_rational(c))
    }

    pub fn zero() -> Self {
        Scalar { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Scalar { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Scalar { num: LaurentPoly::q_pow(e), den: LaurentPoly::one() }
    }

    /// `(-q)^e`, i.e. `(-1)^e q^e` for any integer `e`.
    pub fn neg_q_pow(e: i64) -> Self {
        let sign = if e.rem_euclid(2) == 0 { 1 } else { -1 };
        Scalar {
            num: LaurentPoly::monomial(BigRational::from_integer(BigInt::from(sign)), e),
            den: LaurentPoly::one(),
        }
    }

    /// The recurring coefficient `q - q^{-1}`.
    pub fn q_minus_q_inv() -> Self {
        Self::from_laurent(&LaurentPoly::q_pow(1) - &LaurentPoly::q_pow(-1))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn mul_q_pow(&self, e: i64) -> Self {
        Self::normalized(self.num.shift(e), self.den.clone())
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, CoeffError> {
        if rhs.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalized(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    /// Substitute `q -> q^{-1}` and renormalize.
    pub fn invert_q(&self) -> Self {
        Self::normalized(self.num.invert_q(), self.den.invert_q())
    }

    /// Integer power; negative powers of zero fail.
    pub fn pow(&self, e: i64) -> Result<Self, CoeffError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        Ok(acc)
    }

    /// Evaluate at a rational point `q0`; fails when the denominator
    /// vanishes there or `q0 = 0` meets a negative exponent.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational, CoeffError> {
        let d = self.den.eval(q0).ok_or(CoeffError::EvalAtPole)?;
        if d.is_zero() {
            return Err(CoeffError::EvalAtPole);
        }
        let n = self.num.eval(q0).ok_or(CoeffError::EvalAtPole)?;
        Ok(n / d)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::normalized(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::normalized(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.is_monomial() {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if self.den.is_monomial() {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    fn q() -> Scalar {
        Scalar::q_pow(1)
    }

    #[test]
    fn q_times_q_inverse_is_one() {
        assert!((&q() * &Scalar::q_pow(-1)).is_one());
    }

    #[test]
    fn q_minus_q_inverse_normal_form() {
        // q - q^-1 = (q^2 - 1)/q
        let d = &q() - &Scalar::q_pow(-1);
        assert_eq!(d, Scalar::q_minus_q_inv());
        // Canonical form keeps the q-power in the numerator.
        assert_eq!(d.denominator(), &LaurentPoly::one());
        assert_eq!(d.numerator().to_string(), "-q^-1 + q");
    }

    #[test]
    fn self_division_is_one() {
        let d = Scalar::q_minus_q_inv();
        assert!(d.div(&d).unwrap().is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(q().div(&Scalar::zero()), Err(CoeffError::DivisionByZero)));
    }

    #[test]
    fn invert_q_examples() {
        assert_eq!(Scalar::q_pow(2).invert_q(), Scalar::q_pow(-2));
        let d = Scalar::q_minus_q_inv();
        assert_eq!(d.invert_q(), -&d);
        assert!(Scalar::one().invert_q().is_one());
    }

    #[test]
    fn normalize_exact_division() {
        // (q^2 - 1)/(q - 1) = q + 1
        let num = &LaurentPoly::q_pow(2) - &LaurentPoly::one();
        let den = &LaurentPoly::q_pow(1) - &LaurentPoly::one();
        let s = Scalar::new(num, den).unwrap();
        assert_eq!(s, Scalar::from_laurent(&LaurentPoly::q_pow(1) + &LaurentPoly::one()));
        assert_eq!(s.to_string(), "1 + q");
    }

    #[test]
    fn normalize_sign_and_zero() {
        // (-q)/(-1) = q
        let s = Scalar::new(-&LaurentPoly::q_pow(1), LaurentPoly::from_int(-1)).unwrap();
        assert_eq!(s, Scalar::q_pow(1));
        // 0/q^5 = 0, with denominator reset to 1
        let z = Scalar::new(LaurentPoly::zero(), LaurentPoly::q_pow(5)).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.denominator(), &LaurentPoly::one());
    }

    #[test]
    fn denominator_is_primitive_integer_poly() {
        // 1 / (q/2 + 1/2)  ->  2 / (q + 1)
        let den = LaurentPoly::from_terms([
            (1, BigRational::new(BigInt::from(1), BigInt::from(2))),
            (0, BigRational::new(BigInt::from(1), BigInt::from(2))),
        ]);
        let s = Scalar::new(LaurentPoly::one(), den).unwrap();
        assert_eq!(s.denominator().to_string(), "1 + q");
        assert_eq!(s.numerator().to_string(), "2");
    }

    #[test]
    fn neg_q_pow_parity() {
        assert_eq!(Scalar::neg_q_pow(2), Scalar::q_pow(2));
        assert_eq!(Scalar::neg_q_pow(-2), Scalar::q_pow(-2));
        assert_eq!(Scalar::neg_q_pow(3), -&Scalar::q_pow(3));
        assert_eq!(Scalar::neg_q_pow(-1), -&Scalar::q_pow(-1));
    }

    #[test]
    fn eval_detects_poles() {
        // 1/(q - 1) at q = 1
        let den = &LaurentPoly::q_pow(1) - &LaurentPoly::one();
        let s = Scalar::new(LaurentPoly::one(), den).unwrap();
        assert!(matches!(s.eval(&BigRational::one()), Err(CoeffError::EvalAtPole)));
        let two = BigRational::from_integer(BigInt::from(2));
        assert_eq!(s.eval(&two).unwrap(), BigRational::one());
    }
}
