//! Commutation structure of pairs of generating minors, the normality
//! criterion, and the column-reversal isomorphism.

use crate::coeff::Scalar;

use super::elem::{GrassAmbient, GrassElem};
use super::straighten::{all_generators, straighten};
use super::tableau::{lex_less, IndexSet, Tableau};
use super::GrassError;

/// Outcome of the commutation check for a pair of generators.
#[derive(Clone, Debug)]
pub struct CommutationCheck {
    /// `m - |I intersect J|`, the exponent in `[I][J] = q^s [J][I] + ...`.
    pub s: u32,
    /// The straightened defect `[I][J] - q^s [J][I]`.
    pub defect: GrassElem,
    /// Whether every defect tableau has two rows `L`, `L'` with
    /// `L < I` lexicographically and `L' = (I ^ J) u ((I u J) \ L)`.
    pub conforms: bool,
}

fn intersection(a: &IndexSet, b: &IndexSet) -> Vec<u16> {
    a.cols().iter().copied().filter(|c| b.contains(*c)).collect()
}

fn union(a: &IndexSet, b: &IndexSet) -> Vec<u16> {
    let mut out: Vec<u16> = a.cols().to_vec();
    for &c in b.cols() {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out.sort_unstable();
    out
}

/// The commutation exponent `s = m - |I ^ J|`.
pub fn commutation_exponent(i_set: &IndexSet, j_set: &IndexSet) -> u32 {
    i_set.len() as u32 - intersection(i_set, j_set).len() as u32
}

/// Straighten the defect `[I][J] - q^s [J][I]` for `I < J` lexicographically
/// and test the span structure of the result.
pub fn commutation_check(
    ambient: GrassAmbient,
    i_set: &IndexSet,
    j_set: &IndexSet,
) -> Result<CommutationCheck, GrassError> {
    if !lex_less(i_set, j_set) {
        return Err(GrassError::CommutationOrder {
            left: i_set.clone(),
            right: j_set.clone(),
        });
    }
    let s = commutation_exponent(i_set, j_set);
    let gi = GrassElem::generator(ambient, i_set.clone())?;
    let gj = GrassElem::generator(ambient, j_set.clone())?;
    let lhs = gi.mul(&gj)?;
    let rhs = gj.mul(&gi)?.scale(&Scalar::q_pow(s as i64));
    let defect = straighten(&lhs.sub(&rhs)?)?;
    let inter = intersection(i_set, j_set);
    let uni = union(i_set, j_set);
    let conforms = defect.terms().all(|(t, _)| {
        if t.num_rows() != 2 {
            return false;
        }
        let l = &t.rows()[0];
        let lp = &t.rows()[1];
        if !lex_less(l, i_set) {
            return false;
        }
        let mut expected: Vec<u16> = inter.clone();
        expected.extend(uni.iter().copied().filter(|c| !l.contains(*c)));
        expected.sort_unstable();
        lp.cols() == expected.as_slice()
    });
    Ok(CommutationCheck { s, defect, conforms })
}

/// True when `[I]` is normal modulo the ideal generated by the
/// lexicographically smaller minors: for every generator `[J]`, the
/// straightened defect of the ordered pair has all first rows `< I`.
pub fn normality_mod_ideal_check(
    ambient: GrassAmbient,
    i_set: &IndexSet,
) -> Result<bool, GrassError> {
    for j_set in all_generators(ambient.m, ambient.n) {
        if j_set == *i_set {
            continue;
        }
        let (a, b) = if lex_less(i_set, &j_set) {
            (i_set.clone(), j_set.clone())
        } else {
            (j_set.clone(), i_set.clone())
        };
        let check = commutation_check(ambient, &a, &b)?;
        let ok = check
            .defect
            .terms()
            .all(|(t, _)| t.num_rows() == 2 && lex_less(&t.rows()[0], i_set));
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The column-reversal isomorphism into the parameter-inverted
/// Grassmannian: each row maps through `i -> n - i + 1` and each scalar
/// through `q -> q^{-1}`, which expresses the image in the target
/// algebra's own deformation parameter.
pub fn delta_map(g: &GrassElem) -> GrassElem {
    let ambient = g.ambient();
    let mut out = GrassElem::zero(ambient.inverted());
    for (t, c) in g.terms() {
        let rows: Vec<IndexSet> = t
            .rows()
            .iter()
            .map(|r| r.reverse_columns(ambient.n))
            .collect();
        out.add_term(Tableau::new(rows), c.invert_q());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iset(cols: &[u16]) -> IndexSet {
        IndexSet::new(cols.to_vec()).unwrap()
    }

    #[test]
    fn disjoint_pair_commutes_with_q_squared() {
        // [12][34] = q^2 [34][12]: defect 0, s = 2
        let amb = GrassAmbient::new(2, 4);
        let r = commutation_check(amb, &iset(&[1, 2]), &iset(&[3, 4])).unwrap();
        assert_eq!(r.s, 2);
        assert!(r.defect.is_zero());
        assert!(r.conforms);
    }

    #[test]
    fn overlapping_pair_commutes_with_q() {
        // [12][13] = q [13][12]: s = 1, defect 0
        let amb = GrassAmbient::new(2, 4);
        let r = commutation_check(amb, &iset(&[1, 2]), &iset(&[1, 3])).unwrap();
        assert_eq!(r.s, 1);
        assert!(r.defect.is_zero());
        assert!(r.conforms);
    }

    #[test]
    fn crossing_pair_has_conforming_defect() {
        // [13][24] - q^2 [24][13] = -(q - q^-1) [12][34]
        let amb = GrassAmbient::new(2, 4);
        let r = commutation_check(amb, &iset(&[1, 3]), &iset(&[2, 4])).unwrap();
        assert_eq!(r.s, 2);
        assert!(r.conforms);
        assert_eq!(r.defect.num_terms(), 1);
        let t = Tableau::new(vec![iset(&[1, 2]), iset(&[3, 4])]);
        assert_eq!(r.defect.coeff(&t), -&Scalar::q_minus_q_inv());
    }

    #[test]
    fn order_precondition_enforced() {
        let amb = GrassAmbient::new(2, 4);
        assert!(commutation_check(amb, &iset(&[3, 4]), &iset(&[1, 2])).is_err());
    }

    #[test]
    fn normality_examples() {
        let amb = GrassAmbient::new(2, 4);
        assert!(normality_mod_ideal_check(amb, &iset(&[1, 2])).unwrap());
        assert!(normality_mod_ideal_check(amb, &iset(&[3, 4])).unwrap());
        assert!(normality_mod_ideal_check(amb, &iset(&[1, 3])).unwrap());
    }

    #[test]
    fn delta_maps_generators_and_scalars() {
        let amb = GrassAmbient::new(2, 4);
        // [12] -> [34]'
        let g = GrassElem::generator(amb, iset(&[1, 2])).unwrap();
        let img = delta_map(&g);
        assert_eq!(img.ambient(), amb.inverted());
        assert!(img.coeff(&Tableau::single(iset(&[3, 4]))).is_one());
        // q [13] -> q^-1 [24]'
        let g = GrassElem::generator(amb, iset(&[1, 3])).unwrap().scale(&Scalar::q_pow(1));
        let img = delta_map(&g);
        assert_eq!(img.coeff(&Tableau::single(iset(&[2, 4]))), Scalar::q_pow(-1));
    }

    #[test]
    fn delta_kills_the_displayed_relation() {
        // [12][34] - q^2 [34][12] maps to zero after re-straightening.
        let amb = GrassAmbient::new(2, 4);
        let a = GrassElem::generator(amb, iset(&[1, 2])).unwrap();
        let b = GrassElem::generator(amb, iset(&[3, 4])).unwrap();
        let rel = a.mul(&b).unwrap().sub(&b.mul(&a).unwrap().scale(&Scalar::q_pow(2))).unwrap();
        assert!(rel.embed().unwrap().is_zero());
        let img = delta_map(&rel);
        assert!(straighten(&img).unwrap().is_zero());
    }
}
