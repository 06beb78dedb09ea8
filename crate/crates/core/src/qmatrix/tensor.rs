//! The tensor algebra `O_q(M_m) (x) O_q(M_mn)` and the left coaction on
//! column indices.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::Scalar;

use super::pbw::{GenIndex, PbwMonomial};
use super::{Ambient, MatAlgElem, QMatrixError};

/// An element of `O_q(M_m) (x) O_q(M_mn)`, stored sparsely over pairs of
/// normal-form monomials. Multiplication is componentwise in each leg.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElem {
    left_ambient: Ambient,
    right_ambient: Ambient,
    terms: BTreeMap<(PbwMonomial, PbwMonomial), Scalar>,
}

impl TensorElem {
    pub fn zero(left: Ambient, right: Ambient) -> Self {
        TensorElem { left_ambient: left, right_ambient: right, terms: BTreeMap::new() }
    }

    pub fn one(left: Ambient, right: Ambient) -> Self {
        let mut out = Self::zero(left, right);
        out.add_term(PbwMonomial::one(), PbwMonomial::one(), Scalar::one());
        out
    }

    /// The pure tensor `a (x) b`.
    pub fn pure(a: &MatAlgElem, b: &MatAlgElem) -> Self {
        let mut out = Self::zero(a.ambient(), b.ambient());
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                out.add_term(ma.clone(), mb.clone(), ca * cb);
            }
        }
        out
    }

    pub fn left_ambient(&self) -> Ambient {
        self.left_ambient
    }

    pub fn right_ambient(&self) -> Ambient {
        self.right_ambient
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(PbwMonomial, PbwMonomial), &Scalar)> {
        self.terms.iter()
    }

    fn add_term(&mut self, l: PbwMonomial, r: PbwMonomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((l, r)) {
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
        for ((l, r), c) in &rhs.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, QMatrixError> {
        self.add(&rhs.scale(&-&Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.left_ambient, self.right_ambient);
        }
        TensorElem {
            left_ambient: self.left_ambient,
            right_ambient: self.right_ambient,
            terms: self.terms.iter().map(|(k, a)| (k.clone(), a * c)).collect(),
        }
    }

    /// Componentwise product `(x (x) y)(x' (x) y') = xx' (x) yy'`, with each
    /// leg reduced to normal form.
    pub fn mul(&self, rhs: &Self) -> Result<Self, QMatrixError> {
        self.check_ambient(rhs)?;
        let mut out = Self::zero(self.left_ambient, self.right_ambient);
        for ((la, ra), ca) in &self.terms {
            let la_elem = monomial_elem(self.left_ambient, la);
            let ra_elem = monomial_elem(self.right_ambient, ra);
            for ((lb, rb), cb) in &rhs.terms {
                let lprod = la_elem.mul(&monomial_elem(self.left_ambient, lb))?;
                let rprod = ra_elem.mul(&monomial_elem(self.right_ambient, rb))?;
                let c = ca * cb;
                for (ml, cl) in lprod.terms() {
                    for (mr, cr) in rprod.terms() {
                        out.add_term(ml.clone(), mr.clone(), &(&c * cl) * cr);
                    }
                }
            }
        }
        Ok(out)
    }

    fn check_ambient(&self, rhs: &Self) -> Result<(), QMatrixError> {
        if self.left_ambient != rhs.left_ambient || self.right_ambient != rhs.right_ambient {
            return Err(QMatrixError::AmbientMismatch {
                left: self.left_ambient,
                right: rhs.left_ambient,
            });
        }
        Ok(())
    }
}

fn monomial_elem(ambient: Ambient, m: &PbwMonomial) -> MatAlgElem {
    let mut out = MatAlgElem::zero(ambient);
    out.add_term(m.clone(), Scalar::one());
    out
}

impl fmt::Display for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((l, r), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(
                f,
                "{}*({} (x) {})",
                crate::display::wrap_sum(&c.to_string()),
                monomial_text(l),
                monomial_text(r)
            )?;
        }
        Ok(())
    }
}

fn monomial_text(m: &PbwMonomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut out = String::new();
    for (g, e) in m.exponents() {
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(&format!("X[{},{}]", g.row, g.col));
        if e > 1 {
            out.push_str(&format!("^{}", e));
        }
    }
    out
}

/// The coaction on column indices: `Z[i,j] -> sum_k T[i,k] (x) Z[k,j]`,
/// extended as an algebra morphism.
pub fn lambda_coaction(a: &MatAlgElem) -> Result<TensorElem, QMatrixError> {
    let amb = a.ambient();
    let left = Ambient::new(amb.rows, amb.rows);
    let mut out = TensorElem::zero(left, amb);
    for (m, c) in a.terms() {
        let mut acc = TensorElem::one(left, amb);
        for g in m.factors() {
            let mut img = TensorElem::zero(left, amb);
            for k in 1..=amb.rows {
                img.add_term(
                    PbwMonomial::generator(GenIndex::new(g.row, k)),
                    PbwMonomial::generator(GenIndex::new(k, g.col)),
                    Scalar::one(),
                );
            }
            acc = acc.mul(&img)?;
        }
        out = out.add(&acc.scale(c))?;
    }
    Ok(out)
}
