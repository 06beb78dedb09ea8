//! Laurent polynomials in the deformation parameter `q` with arbitrary
//! precision rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// A Laurent polynomial in `q` over the rationals.
///
/// Stored sparsely as a map from integer exponent to coefficient; zero
/// coefficients are never stored, and the empty map represents 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The monomial `c * q^exp`.
    pub fn monomial(c: BigRational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// The monomial `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(n)), 0)
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// Build from (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True when the polynomial is a single term `c * q^e`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Lowest exponent present; None for the zero polynomial.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent present; None for the zero polynomial.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient of the highest power of `q` (zero polynomial gives 0).
    pub fn leading_coeff(&self) -> BigRational {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, exp: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Multiply by the monomial `c * q^k`.
    pub fn scale_monomial(&self, c: &BigRational, k: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, a)| (e + k, a * c)).collect(),
        }
    }

    /// Substitute `q -> q^{-1}` (negate all exponents).
    pub fn invert_q(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluate at a rational `q0`. Requires `q0 != 0` when negative
    /// exponents are present.
    pub fn eval(&self, q0: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                pow_rational(q0, *e as u64)
            } else {
                if q0.is_zero() {
                    return None;
                }
                pow_rational(q0, (-*e) as u64).recip()
            };
            acc += c * p;
        }
        Some(acc)
    }

    /// True when no negative powers of `q` occur.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 0)
    }

    /// Polynomial division with remainder in `Q[q]`.
    ///
    /// Both inputs must be genuine polynomials (no negative exponents) and
    /// the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        assert!(self.is_polynomial() && divisor.is_polynomial());
        let dlc = divisor.leading_coeff();
        let ddeg = divisor.max_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while !rem.is_zero() && rem.max_exp().unwrap() >= ddeg {
            let shift = rem.max_exp().unwrap() - ddeg;
            let factor = rem.leading_coeff() / &dlc;
            quot.add_term(shift, factor.clone());
            rem = &rem - &divisor.scale_monomial(&factor, shift);
        }
        (quot, rem)
    }

    /// Exact division; panics if the division is not exact.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd in `Q[q]` of two genuine polynomials.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lc = a.leading_coeff();
        a.scale_monomial(&lc.recip(), 0)
    }

    /// The rational `lambda > 0` such that `lambda * self` has coprime
    /// integer coefficients. Zero polynomial gives 1.
    pub fn primitive_scale(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::one();
        }
        let mut denom_lcm = BigInt::one();
        for c in self.terms.values() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut numer_gcd = BigInt::zero();
        for c in self.terms.values() {
            numer_gcd = numer_gcd.gcd(&(c.numer() * &denom_lcm / c.denom()));
        }
        BigRational::new(denom_lcm, numer_gcd)
    }
}

fn pow_rational(base: &BigRational, exp: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut sq = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = abs.is_one() && *e != 0;
            if !unit_coeff {
                write!(f, "{}", abs)?;
                if *e != 0 {
                    write!(f, "*")?;
                }
            }
            match *e {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{}", e)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            pairs
                .iter()
                .map(|(e, c)| (*e, BigRational::from_integer(BigInt::from(*c)))),
        )
    }

    #[test]
    fn add_cancels_to_zero() {
        let a = qp(&[(1, 1), (-1, -1)]);
        let b = qp(&[(1, -1), (-1, 1)]);
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn mul_monomials_adds_exponents() {
        let a = LaurentPoly::q_pow(3);
        let b = LaurentPoly::q_pow(-5);
        assert_eq!(&a * &b, LaurentPoly::q_pow(-2));
    }

    #[test]
    fn div_rem_exact_case() {
        // (q^2 - 1) / (q - 1) = q + 1
        let num = qp(&[(2, 1), (0, -1)]);
        let den = qp(&[(1, 1), (0, -1)]);
        let (quot, rem) = num.div_rem(&den);
        assert!(rem.is_zero());
        assert_eq!(quot, qp(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn gcd_of_common_factor() {
        // gcd(q^2-1, q^2-2q+1) = q - 1 (monic)
        let a = qp(&[(2, 1), (0, -1)]);
        let b = qp(&[(2, 1), (1, -2), (0, 1)]);
        assert_eq!(a.gcd(&b), qp(&[(1, 1), (0, -1)]));
    }

    #[test]
    fn invert_q_negates_exponents() {
        let a = qp(&[(2, 3), (-1, 5)]);
        assert_eq!(a.invert_q(), qp(&[(-2, 3), (1, 5)]));
    }

    #[test]
    fn primitive_scale_clears_denominators() {
        let a = LaurentPoly::from_terms([
            (0, BigRational::new(BigInt::from(1), BigInt::from(2))),
            (1, BigRational::new(BigInt::from(3), BigInt::from(4))),
        ]);
        let lambda = a.primitive_scale();
        assert_eq!(lambda, BigRational::from_integer(BigInt::from(4)));
    }

    #[test]
    fn display_ascending_exponents() {
        let a = qp(&[(-2, 1), (0, 1), (3, -2)]);
        assert_eq!(a.to_string(), "q^-2 + 1 - 2*q^3");
    }

    #[test]
    fn eval_at_rational_point() {
        let a = qp(&[(-1, 1), (1, 1)]); // q^-1 + q
        let q0 = BigRational::new(BigInt::from(2), BigInt::from(1));
        assert_eq!(
            a.eval(&q0).unwrap(),
            BigRational::new(BigInt::from(5), BigInt::from(2))
        );
        assert!(a.eval(&BigRational::zero()).is_none());
    }
}
