//! The isomorphism from the small quantum matrix algebra onto the
//! dehomogenisation, and the expansion of an arbitrary brace over the
//! brace generators.

use itertools::Itertools;

use crate::coeff::Scalar;
use crate::grassmann::{pluecker_relation, GrassAmbient, IndexSet, Tableau};
use crate::linalg::Matrix;
use crate::qmatrix::PbwMonomial;

use super::elem::{DhomElem, SigmaAction};
use super::DhomError;

/// The image of the generator `X[i,j]` of `O_q(M_{m,n-m})`: the brace on
/// columns `{j} u ({n-m+1..n} \ {n-i+1})`.
pub fn rho_generator(i: u16, j: u16, m: u16, n: u16) -> Result<DhomElem, DhomError> {
    if !(1..=m).contains(&i) || !(1..=n - m).contains(&j) {
        return Err(DhomError::BadGeneratorIndex { i, j, m, n });
    }
    let ambient = GrassAmbient::new(m, n);
    let hatted = n - i + 1;
    let cols: Vec<u16> = std::iter::once(j)
        .chain((n - m + 1..=n).filter(|&c| c != hatted))
        .collect();
    let set = IndexSet::from_unsorted(cols)?;
    DhomElem::brace(ambient, set)
}

#[derive(Clone, Debug)]
pub struct RhoCase {
    pub key: String,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct RhoReport {
    pub cases: Vec<RhoCase>,
}

impl RhoReport {
    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn family_case_count(&self) -> usize {
        self.cases.iter().filter(|c| c.key.starts_with("family")).count()
    }
}

/// Check every instance of the four relation families of the small quantum
/// matrix algebra on the brace images, plus the twist compatibility
/// `sigma(rho(X[i,j])) = q^{-1} rho(X[i,j])`.
pub fn verify_rho_relations(m: u16, n: u16) -> Result<RhoReport, DhomError> {
    assert!(m < n, "need m < n for a nonempty complement");
    let p = n - m;
    let rho = |i: u16, j: u16| rho_generator(i, j, m, n);
    let q = Scalar::q_pow(1);
    let hook = Scalar::q_minus_q_inv();
    let mut cases = Vec::new();

    // (1) same column: X_ij X_lj = q X_lj X_ij for i < l
    for j in 1..=p {
        for i in 1..=m {
            for l in i + 1..=m {
                let lhs = rho(i, j)?.mul(&rho(l, j)?)?;
                let rhs = rho(l, j)?.mul(&rho(i, j)?)?.scale(&q);
                cases.push(RhoCase {
                    key: format!("family1 i={} l={} j={}", i, l, j),
                    pass: lhs == rhs,
                });
            }
        }
    }
    // (2) same row: X_ij X_ir = q X_ir X_ij for j < r
    for i in 1..=m {
        for j in 1..=p {
            for r in j + 1..=p {
                let lhs = rho(i, j)?.mul(&rho(i, r)?)?;
                let rhs = rho(i, r)?.mul(&rho(i, j)?)?.scale(&q);
                cases.push(RhoCase {
                    key: format!("family2 i={} j={} r={}", i, j, r),
                    pass: lhs == rhs,
                });
            }
        }
    }
    // (3) and (4): i < l, j < r
    for i in 1..=m {
        for l in i + 1..=m {
            for j in 1..=p {
                for r in j + 1..=p {
                    let lhs = rho(i, j)?.mul(&rho(l, r)?)?;
                    let rhs = rho(l, r)?
                        .mul(&rho(i, j)?)?
                        .add(&rho(l, j)?.mul(&rho(i, r)?)?.scale(&hook))?;
                    cases.push(RhoCase {
                        key: format!("family3 i={} l={} j={} r={}", i, l, j, r),
                        pass: lhs == rhs,
                    });
                    let lhs = rho(i, r)?.mul(&rho(l, j)?)?;
                    let rhs = rho(l, j)?.mul(&rho(i, r)?)?;
                    cases.push(RhoCase {
                        key: format!("family4 i={} l={} j={} r={}", i, l, j, r),
                        pass: lhs == rhs,
                    });
                }
            }
        }
    }
    // Twist compatibility of the skew-Laurent identification.
    for i in 1..=m {
        for j in 1..=p {
            let g = rho(i, j)?;
            let pass = g.sigma() == g.scale(&Scalar::q_pow(-1));
            cases.push(RhoCase { key: format!("phi i={} j={}", i, j), pass });
        }
    }
    Ok(RhoReport { cases })
}

/// An expression for a brace as a polynomial in the brace generators:
/// a sum of scalar multiples of ordered products of generators.
#[derive(Clone, Debug)]
pub struct GensExpansion {
    pub ambient: GrassAmbient,
    pub target: IndexSet,
    pub terms: Vec<(Scalar, Vec<IndexSet>)>,
}

impl GensExpansion {
    /// Evaluate the expression with the twisted product.
    pub fn eval(&self) -> Result<DhomElem, DhomError> {
        let mut out = DhomElem::zero(self.ambient);
        for (c, factors) in &self.terms {
            let mut acc = DhomElem::one(self.ambient);
            for f in factors {
                acc = acc.mul(&DhomElem::brace(self.ambient, f.clone())?)?;
            }
            out = out.add(&acc.scale(c))?;
        }
        Ok(out)
    }

    /// True when the expression reproduces the target brace.
    pub fn validate(&self) -> Result<bool, DhomError> {
        let target = DhomElem::brace(self.ambient, self.target.clone())?;
        Ok(self.eval()? == target)
    }
}

impl std::fmt::Display for GensExpansion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        let mut first = true;
        for (c, factors) in &self.terms {
            let mut mono = String::new();
            for set in factors {
                mono.push('{');
                let cols: Vec<String> = set.cols().iter().map(|x| x.to_string()).collect();
                mono.push_str(&cols.join(" "));
                mono.push('}');
            }
            if mono.is_empty() {
                mono.push('1');
            }
            crate::display::push_term(&mut out, first, c, &mono);
            first = false;
        }
        write!(f, "{}", out)
    }
}

/// Rewrite `{I}` as a polynomial in the brace generators by induction on
/// the overlap of `I` with the left columns, driven by the quantum
/// Pluecker relation on `K = {min I} u {n-m+1..n}`.
pub fn gens_expand(ambient: GrassAmbient, target: &IndexSet) -> Result<GensExpansion, DhomError> {
    let terms = expand_rec(ambient, target)?;
    Ok(GensExpansion { ambient, target: target.clone(), terms })
}

fn is_brace_generator(ambient: GrassAmbient, set: &IndexSet) -> bool {
    let split = ambient.n - ambient.m;
    set.cols().iter().filter(|&&c| c <= split).count() == 1
}

fn expand_rec(
    ambient: GrassAmbient,
    set: &IndexSet,
) -> Result<Vec<(Scalar, Vec<IndexSet>)>, DhomError> {
    let top = ambient.top_set();
    if *set == top {
        return Ok(vec![(Scalar::one(), Vec::new())]);
    }
    if is_brace_generator(ambient, set) {
        return Ok(vec![(Scalar::one(), vec![set.clone()])]);
    }
    let action = SigmaAction::new(ambient);
    let i1 = set.cols()[0];
    let j2: Vec<u16> = set.cols()[1..].to_vec();
    let k: Vec<u16> = std::iter::once(i1)
        .chain(top.cols().iter().copied())
        .sorted_unstable()
        .collect();
    let relation = pluecker_relation(ambient, &[], &j2, &k)?;
    let base = Tableau::new(vec![top.clone(), set.clone()]);
    let c0 = relation.coeff(&base);
    if c0.is_zero() {
        return Err(DhomError::Grass(crate::grassmann::GrassError::StraightenInternal {
            detail: format!("expansion relation misses the base pair for {}", set),
        }));
    }
    let lead = (-&c0).inv().expect("powers of q are invertible");
    let mut out = Vec::new();
    for (tab, coeff) in relation.terms() {
        if *tab == base {
            continue;
        }
        let a_row = tab.rows()[0].clone();
        let b_row = tab.rows()[1].clone();
        let factor = &(&lead * coeff) * &Scalar::q_pow(action.exponent(&a_row) as i64);
        for (inner_coeff, inner_factors) in expand_rec(ambient, &b_row)? {
            let mut factors = vec![a_row.clone()];
            factors.extend(inner_factors);
            out.push((&factor * &inner_coeff, factors));
        }
    }
    Ok(out)
}

/// Check linear independence of the brace images of all normal-form
/// monomials of `O_q(M_{m,n-m})` up to the given total degree: clear every
/// image to a common power of the top minor, embed, and compute the rank.
/// Returns `(count, rank)`.
pub fn rho_image_independence(
    m: u16,
    n: u16,
    max_degree: u32,
) -> Result<(usize, usize), DhomError> {
    let p = n - m;
    let gens: Vec<(u16, u16)> = (1..=m).cartesian_product(1..=p).collect();
    // All monomials of total degree <= max_degree as sorted factor lists.
    let mut monomials: Vec<Vec<(u16, u16)>> = vec![Vec::new()];
    let mut layer: Vec<Vec<(u16, u16)>> = vec![Vec::new()];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for word in &layer {
            let start = word.last().copied();
            for &g in &gens {
                if start.map_or(true, |s| s <= g) {
                    let mut w = word.clone();
                    w.push(g);
                    next.push(w);
                }
            }
        }
        monomials.extend(next.iter().cloned());
        layer = next;
    }
    let ambient = GrassAmbient::new(m, n);
    let mut images = Vec::new();
    for word in &monomials {
        let mut acc = DhomElem::one(ambient);
        for &(i, j) in word {
            acc = acc.mul(&rho_generator(i, j, m, n)?)?;
        }
        images.push(acc);
    }
    let common = images.iter().map(|e| e.max_power()).max().unwrap_or(0);
    let mut embedded = Vec::new();
    for img in &images {
        embedded.push(img.clear_to_power(common)?.embed()?);
    }
    // Index all PBW monomials and compute the rank of the image matrix.
    let mut index = std::collections::BTreeMap::<PbwMonomial, usize>::new();
    for e in &embedded {
        for (mono, _) in e.terms() {
            let next = index.len();
            index.entry(mono.clone()).or_insert(next);
        }
    }
    let mut matrix = Matrix::zero(embedded.len(), index.len());
    for (r, e) in embedded.iter().enumerate() {
        for (mono, c) in e.terms() {
            matrix.set(r, index[mono], c.clone());
        }
    }
    Ok((embedded.len(), matrix.rank()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iset(cols: &[u16]) -> IndexSet {
        IndexSet::new(cols.to_vec()).unwrap()
    }

    #[test]
    fn rho_generator_table_at_24() {
        // X11 <-> {13}, X12 <-> {23}, X21 <-> {14}, X22 <-> {24}
        let amb = GrassAmbient::new(2, 4);
        let b = |cols: &[u16]| DhomElem::brace(amb, iset(cols)).unwrap();
        assert_eq!(rho_generator(1, 1, 2, 4).unwrap(), b(&[1, 3]));
        assert_eq!(rho_generator(1, 2, 2, 4).unwrap(), b(&[2, 3]));
        assert_eq!(rho_generator(2, 1, 2, 4).unwrap(), b(&[1, 4]));
        assert_eq!(rho_generator(2, 2, 2, 4).unwrap(), b(&[2, 4]));
        assert!(rho_generator(3, 1, 2, 4).is_err());
        assert!(rho_generator(1, 3, 2, 4).is_err());
    }

    #[test]
    fn rho_relations_at_24() {
        let report = verify_rho_relations(2, 4).unwrap();
        assert!(report.all_pass());
        assert!(report.family_case_count() > 0);
    }

    #[test]
    fn rho_relations_vacuous_at_12() {
        let report = verify_rho_relations(1, 2).unwrap();
        assert!(report.all_pass());
        assert_eq!(report.family_case_count(), 0);
    }

    #[test]
    fn gens_expand_base_cases() {
        let amb = GrassAmbient::new(2, 4);
        let e = gens_expand(amb, &iset(&[1, 4])).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert_eq!(e.terms[0].1, vec![iset(&[1, 4])]);
        assert!(e.validate().unwrap());
        let e = gens_expand(amb, &iset(&[3, 4])).unwrap();
        assert_eq!(e.terms.len(), 1);
        assert!(e.terms[0].1.is_empty());
        assert!(e.validate().unwrap());
    }

    #[test]
    fn gens_expand_12_at_24() {
        // {12} = {13}{24} - q {14}{23} (= {13}{24} - q {23}{14})
        let amb = GrassAmbient::new(2, 4);
        let e = gens_expand(amb, &iset(&[1, 2])).unwrap();
        assert!(e.validate().unwrap());
        assert_eq!(e.terms.len(), 2);
        // Also check the displayed form with the commuted factors.
        let b = |cols: &[u16]| DhomElem::brace(amb, iset(cols)).unwrap();
        let displayed = b(&[1, 3])
            .mul(&b(&[2, 4]))
            .unwrap()
            .sub(&b(&[2, 3]).mul(&b(&[1, 4])).unwrap().scale(&Scalar::q_pow(1)))
            .unwrap();
        assert_eq!(displayed, b(&[1, 2]));
    }

    #[test]
    fn gens_expand_validates_at_25() {
        let amb = GrassAmbient::new(2, 5);
        let e = gens_expand(amb, &iset(&[1, 2])).unwrap();
        assert!(e.validate().unwrap());
        assert_eq!(e.terms.len(), 2);
    }

    #[test]
    fn rho_images_independent_at_24_degree_one() {
        let (count, rank) = rho_image_independence(2, 4, 1).unwrap();
        assert_eq!(count, 5);
        assert_eq!(rank, 5);
    }
}
