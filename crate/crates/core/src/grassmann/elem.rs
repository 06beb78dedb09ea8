//! Formal linear combinations of tableaux and their embedding into the
//! quantum matrix algebra.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::Scalar;
use crate::qmatrix::{quantum_minor, Ambient, MatAlgElem};

use super::tableau::{Content, IndexSet, Tableau};
use super::GrassError;

/// The ambient Grassmannian `G_q(m, n)`. `q_inverted` tags elements of the
/// parameter-inverted algebra produced by the column-reversal isomorphism;
/// their scalars are expressed in that algebra's own deformation parameter,
/// so all arithmetic is shared and the tag only prevents accidental mixing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrassAmbient {
    pub m: u16,
    pub n: u16,
    pub q_inverted: bool,
}

impl GrassAmbient {
    pub fn new(m: u16, n: u16) -> Self {
        GrassAmbient { m, n, q_inverted: false }
    }

    pub fn inverted(self) -> Self {
        GrassAmbient { q_inverted: !self.q_inverted, ..self }
    }

    pub fn matrix_ambient(&self) -> Ambient {
        Ambient::new(self.m, self.n)
    }

    /// The column set of the rightmost maximal minor.
    pub fn top_set(&self) -> IndexSet {
        IndexSet::greatest(self.m, self.n)
    }

    pub fn least_set(&self) -> IndexSet {
        IndexSet::least(self.m)
    }
}

impl fmt::Display for GrassAmbient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)?;
        if self.q_inverted {
            write!(f, "'")?;
        }
        Ok(())
    }
}

/// A formal `Q(q)`-combination of tableaux in `G_q(m,n)`.
///
/// Structural equality is equality of the stored maps; two elements are
/// equal in the algebra iff their embeddings agree, which straightening
/// turns into structural equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassElem {
    ambient: GrassAmbient,
    terms: BTreeMap<Tableau, Scalar>,
}

impl GrassElem {
    pub fn zero(ambient: GrassAmbient) -> Self {
        GrassElem { ambient, terms: BTreeMap::new() }
    }

    pub fn one(ambient: GrassAmbient) -> Self {
        Self::from_tableau(ambient, Tableau::empty())
    }

    pub fn from_scalar(ambient: GrassAmbient, c: Scalar) -> Self {
        let mut out = Self::zero(ambient);
        out.add_term(Tableau::empty(), c);
        out
    }

    pub fn from_tableau(ambient: GrassAmbient, t: Tableau) -> Self {
        let mut out = Self::zero(ambient);
        out.add_term(t, Scalar::one());
        out
    }

    /// The generator `[I]` as an element.
    pub fn generator(ambient: GrassAmbient, row: IndexSet) -> Result<Self, GrassError> {
        if !row.in_bounds(ambient.m, ambient.n) {
            return Err(GrassError::RowOutOfBounds { row, m: ambient.m, n: ambient.n });
        }
        Ok(Self::from_tableau(ambient, Tableau::single(row)))
    }

    pub fn ambient(&self) -> GrassAmbient {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tableau, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Tableau) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_else(Scalar::zero)
    }

    pub(crate) fn add_term(&mut self, t: Tableau, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(t) {
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

    pub fn add(&self, rhs: &Self) -> Result<Self, GrassError> {
        self.check_ambient(rhs)?;
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            out.add_term(t.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, GrassError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        GrassElem {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.ambient);
        }
        GrassElem {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(t, a)| (t.clone(), a * c)).collect(),
        }
    }

    /// Bilinear extension of tableau concatenation; the embedding turns it
    /// into the product in the matrix algebra.
    pub fn mul(&self, rhs: &Self) -> Result<Self, GrassError> {
        self.check_ambient(rhs)?;
        let mut out = Self::zero(self.ambient);
        for (ta, ca) in &self.terms {
            for (tb, cb) in &rhs.terms {
                out.add_term(ta.concat(tb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self, GrassError> {
        let mut acc = Self::one(self.ambient);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Replace each tableau by the ordered product of its row minors.
    pub fn embed(&self) -> Result<MatAlgElem, GrassError> {
        let amb = self.ambient.matrix_ambient();
        let rows: Vec<u16> = (1..=self.ambient.m).collect();
        let mut out = MatAlgElem::zero(amb);
        for (t, c) in &self.terms {
            let mut acc = MatAlgElem::one(amb);
            for row in t.rows() {
                let minor = quantum_minor(amb, &rows, row.cols())?;
                acc = acc.mul(&minor)?;
            }
            out = out.add(&acc.scale(c))?;
        }
        Ok(out)
    }

    /// Split into content-homogeneous components.
    pub fn content_components(&self) -> Vec<(Content, GrassElem)> {
        let mut map: BTreeMap<Content, GrassElem> = BTreeMap::new();
        for (t, c) in &self.terms {
            let content = t.content(self.ambient.n);
            map.entry(content)
                .or_insert_with(|| GrassElem::zero(self.ambient))
                .add_term(t.clone(), c.clone());
        }
        map.into_iter().collect()
    }

    /// True when every tableau with a nonzero coefficient is preferred.
    pub fn all_preferred(&self) -> bool {
        self.terms.keys().all(|t| t.is_preferred())
    }

    pub(crate) fn check_ambient(&self, rhs: &Self) -> Result<(), GrassError> {
        if self.ambient != rhs.ambient {
            return Err(GrassError::AmbientMismatch {
                left: self.ambient,
                right: rhs.ambient,
            });
        }
        Ok(())
    }
}

impl fmt::Display for GrassElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        let mut first = true;
        for (t, c) in &self.terms {
            let mono = if t.is_empty() { String::new() } else { t.to_string() };
            crate::display::push_term(&mut out, first, c, &mono);
            first = false;
        }
        write!(f, "{}", out)
    }
}
