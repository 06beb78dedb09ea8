//! Elements of the quantum matrix algebra in PBW normal form.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::Scalar;

use super::pbw::{reduce_word, GenIndex, PbwMonomial, ReductionStrategy, Word};
use super::{Ambient, QMatrixError};

/// An element of `O_q(M_mn)`, stored as a sparse map from normal-form
/// monomials to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatAlgElem {
    ambient: Ambient,
    terms: BTreeMap<PbwMonomial, Scalar>,
}

impl MatAlgElem {
    pub fn zero(ambient: Ambient) -> Self {
        MatAlgElem { ambient, terms: BTreeMap::new() }
    }

    pub fn one(ambient: Ambient) -> Self {
        Self::from_scalar(ambient, Scalar::one())
    }

    pub fn from_scalar(ambient: Ambient, c: Scalar) -> Self {
        let mut out = Self::zero(ambient);
        out.add_term(PbwMonomial::one(), c);
        out
    }

    pub fn generator(ambient: Ambient, g: GenIndex) -> Result<Self, QMatrixError> {
        if !g.in_bounds(ambient) {
            return Err(QMatrixError::OutOfBounds { row: g.row, col: g.col, ambient });
        }
        let mut out = Self::zero(ambient);
        out.add_term(PbwMonomial::generator(g), Scalar::one());
        Ok(out)
    }

    /// Reduce an arbitrary word to its unique normal form.
    pub fn normal_form(
        ambient: Ambient,
        word: &Word,
        strategy: ReductionStrategy,
    ) -> Result<Self, QMatrixError> {
        let mut out = Self::zero(ambient);
        for (m, c) in reduce_word(ambient, Scalar::one(), &word.factors, strategy)? {
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub(crate) fn add_term(&mut self, m: PbwMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, QMatrixError> {
        self.check_ambient(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, QMatrixError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        MatAlgElem {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.ambient);
        }
        MatAlgElem {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Product, reduced to normal form.
    pub fn mul(&self, rhs: &Self) -> Result<Self, QMatrixError> {
        self.check_ambient(rhs)?;
        let mut out = Self::zero(self.ambient);
        for (ma, ca) in &self.terms {
            let fa = ma.factors();
            for (mb, cb) in &rhs.terms {
                let mut word = fa.clone();
                word.extend(mb.factors());
                let c = ca * cb;
                for (m, rc) in
                    reduce_word(self.ambient, c, &word, ReductionStrategy::Leftmost)?
                {
                    out.add_term(m, rc);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self, QMatrixError> {
        let mut acc = Self::one(self.ambient);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Total degree of the highest-degree monomial, if nonzero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    fn check_ambient(&self, rhs: &Self) -> Result<(), QMatrixError> {
        if self.ambient != rhs.ambient {
            return Err(QMatrixError::AmbientMismatch {
                left: self.ambient,
                right: rhs.ambient,
            });
        }
        Ok(())
    }
}

impl fmt::Display for MatAlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        let mut first = true;
        for (m, c) in &self.terms {
            let mut mono = String::new();
            for (g, e) in m.exponents() {
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&format!("X[{},{}]", g.row, g.col));
                if e > 1 {
                    mono.push_str(&format!("^{}", e));
                }
            }
            crate::display::push_term(&mut out, first, c, &mono);
            first = false;
        }
        write!(f, "{}", out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(r: u16, c: u16) -> GenIndex {
        GenIndex::new(r, c)
    }

    fn gen(amb: Ambient, r: u16, c: u16) -> MatAlgElem {
        MatAlgElem::generator(amb, g(r, c)).unwrap()
    }

    #[test]
    fn normal_form_antidiagonal_commutes() {
        // X[2,1]*X[1,2] -> X[1,2]X[2,1]
        let amb = Ambient::new(2, 2);
        let w = Word::new(vec![g(2, 1), g(1, 2)]);
        let nf = MatAlgElem::normal_form(amb, &w, ReductionStrategy::Leftmost).unwrap();
        let expected = gen(amb, 1, 2).mul(&gen(amb, 2, 1)).unwrap();
        assert_eq!(nf, expected);
        assert_eq!(nf.num_terms(), 1);
    }

    #[test]
    fn normal_form_diagonal_splits() {
        // X[2,2]*X[1,1] -> X[1,1]X[2,2] - (q - q^-1) X[1,2]X[2,1]
        let amb = Ambient::new(2, 2);
        let w = Word::new(vec![g(2, 2), g(1, 1)]);
        let nf = MatAlgElem::normal_form(amb, &w, ReductionStrategy::Leftmost).unwrap();
        let m1 = PbwMonomial::from_sorted_factors(&[g(1, 1), g(2, 2)]);
        let m2 = PbwMonomial::from_sorted_factors(&[g(1, 2), g(2, 1)]);
        assert_eq!(nf.num_terms(), 2);
        assert!(nf.coeff(&m1).is_one());
        assert_eq!(nf.coeff(&m2), -&Scalar::q_minus_q_inv());
    }

    #[test]
    fn normal_form_same_row() {
        // X[1,2]*X[1,1] -> q^-1 X[1,1]X[1,2]
        let amb = Ambient::new(2, 2);
        let w = Word::new(vec![g(1, 2), g(1, 1)]);
        let nf = MatAlgElem::normal_form(amb, &w, ReductionStrategy::Leftmost).unwrap();
        let m = PbwMonomial::from_sorted_factors(&[g(1, 1), g(1, 2)]);
        assert_eq!(nf.num_terms(), 1);
        assert_eq!(nf.coeff(&m), Scalar::q_pow(-1));
    }

    #[test]
    fn mul_by_zero_annihilates() {
        let amb = Ambient::new(2, 3);
        let a = gen(amb, 1, 2);
        assert!(a.mul(&MatAlgElem::zero(amb)).unwrap().is_zero());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = MatAlgElem::one(Ambient::new(2, 2));
        let b = MatAlgElem::one(Ambient::new(2, 3));
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn display_round_readable() {
        let amb = Ambient::new(2, 2);
        let a = gen(amb, 1, 1)
            .mul(&gen(amb, 2, 2))
            .unwrap()
            .sub(&gen(amb, 1, 2).mul(&gen(amb, 2, 1)).unwrap().scale(&Scalar::q_pow(1)))
            .unwrap();
        assert_eq!(a.to_string(), "X[1,1]*X[2,2] - q*X[1,2]*X[2,1]");
    }
}
