//! Arithmetic in the localization at the rightmost maximal minor.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::Scalar;
use crate::grassmann::{
    all_generators, straighten, GrassAmbient, GrassElem, IndexSet, Tableau,
};

use super::DhomError;

/// The conjugation twist by the rightmost minor: `b x b^{-1}` scales the
/// minor `[I]` by `q^{-s(I)}` with `s(I) = m - |I ^ {n-m+1..n}|`.
#[derive(Clone, Debug)]
pub struct SigmaAction {
    ambient: GrassAmbient,
    table: BTreeMap<IndexSet, u32>,
}

impl SigmaAction {
    pub fn new(ambient: GrassAmbient) -> Self {
        let top = ambient.top_set();
        let table = all_generators(ambient.m, ambient.n)
            .into_iter()
            .map(|set| {
                let overlap = set.cols().iter().filter(|c| top.contains(**c)).count();
                (set, ambient.m as u32 - overlap as u32)
            })
            .collect();
        SigmaAction { ambient, table }
    }

    pub fn ambient(&self) -> GrassAmbient {
        self.ambient
    }

    /// The exponent `s(I)`.
    pub fn exponent(&self, row: &IndexSet) -> u32 {
        *self.table.get(row).expect("row belongs to the ambient")
    }

    /// Sum of the row exponents of a tableau.
    pub fn tableau_exponent(&self, t: &Tableau) -> i64 {
        t.rows().iter().map(|r| self.exponent(r) as i64).sum()
    }

    /// Apply `sigma^k`: scale each tableau `T` by `q^{-k S(T)}`.
    pub fn apply(&self, g: &GrassElem, k: i64) -> GrassElem {
        let mut out = GrassElem::zero(g.ambient());
        for (t, c) in g.terms() {
            let e = -k * self.tableau_exponent(t);
            out.add_term(t.clone(), c.mul_q_pow(e));
        }
        out
    }
}

/// The twist automorphism `sigma(x) = b x b^{-1}` on a Grassmannian
/// element.
pub fn sigma(g: &GrassElem) -> GrassElem {
    SigmaAction::new(g.ambient()).apply(g, 1)
}

/// Check the commutation `[I] b = q^{s} b [I]` at the embedding level.
pub fn mincomm_check(ambient: GrassAmbient, i_set: &IndexSet) -> Result<bool, DhomError> {
    let action = SigmaAction::new(ambient);
    let s = action.exponent(i_set) as i64;
    let gi = GrassElem::generator(ambient, i_set.clone())?;
    let b = GrassElem::generator(ambient, ambient.top_set())?;
    let lhs = gi.mul(&b)?.embed()?;
    let rhs = b.mul(&gi)?.scale(&Scalar::q_pow(s)).embed()?;
    Ok(lhs == rhs)
}

/// An element of `G_q(m,n)[b^{-1}]` in canonical form: a sparse map from
/// the power `c` of `b^{-1}` to a straightened numerator not divisible by
/// `b` on the right. Elements of the dehomogenisation proper additionally
/// have each numerator homogeneous of total degree `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DhomElem {
    ambient: GrassAmbient,
    parts: BTreeMap<u32, GrassElem>,
}

impl DhomElem {
    pub fn zero(ambient: GrassAmbient) -> Self {
        DhomElem { ambient, parts: BTreeMap::new() }
    }

    pub fn one(ambient: GrassAmbient) -> Self {
        Self::from_numerator(GrassElem::one(ambient), 0).expect("unit normalizes")
    }

    /// Build `numer * b^{-power}`, straightening and normalizing.
    pub fn from_numerator(numer: GrassElem, power: u32) -> Result<Self, DhomError> {
        let ambient = numer.ambient();
        let mut parts = BTreeMap::new();
        let s = straighten(&numer)?;
        if !s.is_zero() {
            parts.insert(power, s);
        }
        let mut out = DhomElem { ambient, parts };
        out.cancel_trailing();
        Ok(out)
    }

    /// The brace generator `{I} = [I] b^{-1}` (the unit when `I` is the
    /// top set).
    pub fn brace(ambient: GrassAmbient, set: IndexSet) -> Result<Self, DhomError> {
        let g = GrassElem::generator(ambient, set)?;
        Self::from_numerator(g, 1)
    }

    /// `b^{-k}` as an element.
    pub fn b_inverse_power(ambient: GrassAmbient, k: u32) -> Self {
        Self::from_numerator(GrassElem::one(ambient), k).expect("unit numerator")
    }

    pub fn ambient(&self) -> GrassAmbient {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> impl Iterator<Item = (u32, &GrassElem)> {
        self.parts.iter().map(|(c, g)| (*c, g))
    }

    pub fn max_power(&self) -> u32 {
        self.parts.keys().next_back().copied().unwrap_or(0)
    }

    /// True when the element lies in the degree-zero part of the graded
    /// localization: the numerator at power `c` has exactly `c` rows in
    /// every tableau.
    pub fn is_degree_zero(&self) -> bool {
        self.parts
            .iter()
            .all(|(c, g)| g.terms().all(|(t, _)| t.num_rows() == *c as usize))
    }

    /// Cancel `b` against trailing top rows: at power `c > 0`, a preferred
    /// tableau ending in the top row moves to power `c - 1` with the row
    /// deleted. Descending passes make one sweep sufficient.
    fn cancel_trailing(&mut self) {
        let top = self.ambient.top_set();
        let max = self.max_power();
        for c in (1..=max).rev() {
            let Some(elem) = self.parts.remove(&c) else { continue };
            let mut keep = GrassElem::zero(self.ambient);
            let mut moved = GrassElem::zero(self.ambient);
            for (t, coeff) in elem.terms() {
                if t.rows().last() == Some(&top) {
                    let stripped = Tableau::new(t.rows()[..t.num_rows() - 1].to_vec());
                    moved.add_term(stripped, coeff.clone());
                } else {
                    keep.add_term(t.clone(), coeff.clone());
                }
            }
            if !keep.is_zero() {
                self.parts.insert(c, keep);
            }
            if !moved.is_zero() {
                let merged = match self.parts.remove(&(c - 1)) {
                    Some(existing) => existing.add(&moved).expect("same ambient"),
                    None => moved,
                };
                if !merged.is_zero() {
                    self.parts.insert(c - 1, merged);
                }
            }
        }
        self.parts.retain(|_, g| !g.is_zero());
    }

    /// Public re-normalization; idempotent on canonical values.
    pub fn normalize(&self) -> Result<Self, DhomError> {
        let mut out = Self::zero(self.ambient);
        for (c, g) in &self.parts {
            let s = straighten(g)?;
            if !s.is_zero() {
                merge_part(&mut out.parts, *c, s);
            }
        }
        out.cancel_trailing();
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, DhomError> {
        self.check_ambient(rhs)?;
        let mut out = self.clone();
        for (c, g) in &rhs.parts {
            merge_part(&mut out.parts, *c, g.clone());
        }
        out.parts.retain(|_, g| !g.is_zero());
        out.cancel_trailing();
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, DhomError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        DhomElem {
            ambient: self.ambient,
            parts: self.parts.iter().map(|(c, g)| (*c, g.neg())).collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        if k.is_zero() {
            return Self::zero(self.ambient);
        }
        DhomElem {
            ambient: self.ambient,
            parts: self.parts.iter().map(|(c, g)| (*c, g.scale(k))).collect(),
        }
    }

    /// Twisted product: `(r b^{-c})(s b^{-e}) = r sigma^{-c}(s) b^{-(c+e)}`.
    pub fn mul(&self, rhs: &Self) -> Result<Self, DhomError> {
        self.check_ambient(rhs)?;
        let action = SigmaAction::new(self.ambient);
        let mut raw: BTreeMap<u32, GrassElem> = BTreeMap::new();
        for (c, r) in &self.parts {
            for (e, s) in &rhs.parts {
                let twisted = action.apply(s, -(*c as i64));
                let prod = r.mul(&twisted)?;
                merge_part(&mut raw, c + e, prod);
            }
        }
        let mut out = Self::zero(self.ambient);
        for (c, g) in raw {
            let s = straighten(&g)?;
            if !s.is_zero() {
                out.parts.insert(c, s);
            }
        }
        out.cancel_trailing();
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Result<Self, DhomError> {
        let mut acc = Self::one(self.ambient);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Apply the twist `sigma` componentwise (`sigma(r b^{-c}) =
    /// sigma(r) b^{-c}` since `sigma(b) = b`).
    pub fn sigma(&self) -> Self {
        let action = SigmaAction::new(self.ambient);
        DhomElem {
            ambient: self.ambient,
            parts: self.parts.iter().map(|(c, g)| (*c, action.apply(g, 1))).collect(),
        }
    }

    /// Multiply by `b^{power}` on the right and return the numerator, a
    /// plain Grassmannian element. Requires `power >= max_power`.
    pub fn clear_to_power(&self, power: u32) -> Result<GrassElem, DhomError> {
        if power < self.max_power() {
            return Err(DhomError::PowerClear { requested: power, carried: self.max_power() });
        }
        let b = GrassElem::generator(self.ambient, self.ambient.top_set())?;
        let mut out = GrassElem::zero(self.ambient);
        for (c, g) in &self.parts {
            let shifted = g.mul(&b.pow(power - c)?)?;
            out = out.add(&shifted)?;
        }
        Ok(out)
    }

    fn check_ambient(&self, rhs: &Self) -> Result<(), DhomError> {
        if self.ambient != rhs.ambient {
            return Err(DhomError::AmbientMismatch { left: self.ambient, right: rhs.ambient });
        }
        Ok(())
    }
}

fn merge_part(parts: &mut BTreeMap<u32, GrassElem>, c: u32, g: GrassElem) {
    use std::collections::btree_map::Entry;
    match parts.entry(c) {
        Entry::Vacant(v) => {
            v.insert(g);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get().add(&g).expect("same ambient");
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

impl fmt::Display for DhomElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let top = self.ambient.top_set();
        let mut out = String::new();
        let mut first = true;
        for (c, g) in &self.parts {
            for (t, coeff) in g.terms() {
                let mut mono = String::new();
                // Degree-matched parts print as brace products where the
                // rows split one per power; otherwise fall back to the
                // explicit localized form.
                if *c as usize == t.num_rows() {
                    for row in t.rows() {
                        mono.push('{');
                        let cols: Vec<String> =
                            row.cols().iter().map(|x| x.to_string()).collect();
                        mono.push_str(&cols.join(" "));
                        mono.push('}');
                    }
                } else {
                    if !t.is_empty() {
                        mono.push_str(&t.to_string());
                    }
                    if *c > 0 {
                        if !mono.is_empty() {
                            mono.push('*');
                        }
                        mono.push_str(&format!("{}^-{}", top, c));
                    }
                }
                crate::display::push_term(&mut out, first, coeff, &mono);
                first = false;
            }
        }
        write!(f, "{}", out)
    }
}
