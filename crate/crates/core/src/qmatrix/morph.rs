//! The transpose automorphism and the minor-valued anti-endomorphisms of
//! the square quantum matrix algebra.

use crate::coeff::Scalar;

use super::pbw::{GenIndex, ReductionStrategy, Word};
use super::{minor, Ambient, MatAlgElem, QMatrixError};

fn require_square(a: &MatAlgElem) -> Result<u16, QMatrixError> {
    let amb = a.ambient();
    if amb.rows != amb.cols {
        return Err(QMatrixError::NonSquare { ambient: amb });
    }
    Ok(amb.rows)
}

/// The transpose morphism `X[i,j] -> X[j,i]` on a square ambient, extended
/// multiplicatively and reduced to normal form.
pub fn tau(a: &MatAlgElem) -> Result<MatAlgElem, QMatrixError> {
    require_square(a)?;
    let amb = a.ambient();
    let mut out = MatAlgElem::zero(amb);
    for (m, c) in a.terms() {
        let transposed: Vec<GenIndex> = m
            .factors()
            .into_iter()
            .map(|g| GenIndex::new(g.col, g.row))
            .collect();
        let nf = MatAlgElem::normal_form(amb, &Word::new(transposed), ReductionStrategy::Leftmost)?;
        out = out.add(&nf.scale(c))?;
    }
    Ok(out)
}

/// Check that the generator rule of `tau` preserves all four relation
/// families on every applicable generator pair of `O_q(M_u)`.
pub fn tau_preserves_relations(u: u16) -> Result<bool, QMatrixError> {
    let amb = Ambient::new(u, u);
    let x = |i: u16, j: u16| MatAlgElem::generator(amb, GenIndex::new(i, j));
    let t = tau;
    let qs = Scalar::q_pow(1);
    let hook = Scalar::q_minus_q_inv();
    for i in 1..=u {
        for k in i + 1..=u {
            for j in 1..=u {
                for l in j + 1..=u {
                    // X_ij X_il = q X_il X_ij (row relation, at row i)
                    let lhs = t(&x(i, j)?.mul(&x(i, l)?)?)?;
                    let rhs = t(&x(i, l)?.mul(&x(i, j)?)?)?.scale(&qs);
                    if lhs != rhs {
                        return Ok(false);
                    }
                    // X_ij X_kj = q X_kj X_ij (column relation, at column j)
                    let lhs = t(&x(i, j)?.mul(&x(k, j)?)?)?;
                    let rhs = t(&x(k, j)?.mul(&x(i, j)?)?)?.scale(&qs);
                    if lhs != rhs {
                        return Ok(false);
                    }
                    // X_il X_kj = X_kj X_il
                    let lhs = t(&x(i, l)?.mul(&x(k, j)?)?)?;
                    let rhs = t(&x(k, j)?.mul(&x(i, l)?)?)?;
                    if lhs != rhs {
                        return Ok(false);
                    }
                    // X_ij X_kl - X_kl X_ij = (q - q^-1) X_il X_kj
                    let lhs = t(&x(i, j)?.mul(&x(k, l)?)?.sub(&x(k, l)?.mul(&x(i, j)?)?)?)?;
                    let rhs = t(&x(i, l)?.mul(&x(k, j)?)?)?.scale(&hook);
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Complement of `set` inside `{1..u}`.
fn complement(u: u16, set: &[u16]) -> Vec<u16> {
    (1..=u).filter(|i| !set.contains(i)).collect()
}

/// Apply an anti-multiplicative, linear map determined by its values on
/// generators: a monomial `g1 g2 ... gk` maps to `f(gk) ... f(g1)`.
fn apply_anti<F>(a: &MatAlgElem, image: F) -> Result<MatAlgElem, QMatrixError>
where
    F: Fn(GenIndex) -> Result<MatAlgElem, QMatrixError>,
{
    let amb = a.ambient();
    let mut out = MatAlgElem::zero(amb);
    for (m, c) in a.terms() {
        let mut acc = MatAlgElem::one(amb);
        for g in m.factors().into_iter().rev() {
            acc = acc.mul(&image(g)?)?;
        }
        out = out.add(&acc.scale(c))?;
    }
    Ok(out)
}

/// The anti-endomorphism with generator rule
/// `X[i,j] -> (-q)^{i-j} [comp(j) | comp(i)]` on `O_q(M_u)`.
pub fn gamma(a: &MatAlgElem) -> Result<MatAlgElem, QMatrixError> {
    let u = require_square(a)?;
    let amb = a.ambient();
    apply_anti(a, |g| {
        let rows = complement(u, &[g.col]);
        let cols = complement(u, &[g.row]);
        let m = if rows.is_empty() {
            MatAlgElem::one(amb)
        } else {
            minor::quantum_minor(amb, &rows, &cols)?
        };
        Ok(m.scale(&Scalar::neg_q_pow(g.row as i64 - g.col as i64)))
    })
}

/// The composite anti-endomorphism with generator rule
/// `X[i,j] -> (-q)^{j-i} [comp(i) | comp(j)]`.
pub fn gamma_tau(a: &MatAlgElem) -> Result<MatAlgElem, QMatrixError> {
    let u = require_square(a)?;
    let amb = a.ambient();
    apply_anti(a, |g| {
        let rows = complement(u, &[g.row]);
        let cols = complement(u, &[g.col]);
        let m = if rows.is_empty() {
            MatAlgElem::one(amb)
        } else {
            minor::quantum_minor(amb, &rows, &cols)?
        };
        Ok(m.scale(&Scalar::neg_q_pow(g.col as i64 - g.row as i64)))
    })
}

/// Sum of the entries of an index set, as used in minor-complement
/// exponents.
pub fn index_sum(set: &[u16]) -> i64 {
    set.iter().map(|&x| x as i64).sum()
}

/// The expected value of `gamma` on an `r x r` minor:
/// `(-q)^{sum(I)-sum(J)} [comp(J)|comp(I)] D_q^{r-1}`.
pub fn gamma_minor_reference(
    ambient: Ambient,
    rows: &[u16],
    cols: &[u16],
) -> Result<MatAlgElem, QMatrixError> {
    let u = ambient.rows;
    if ambient.rows != ambient.cols {
        return Err(QMatrixError::NonSquare { ambient });
    }
    let r = rows.len() as u32;
    let crows = complement(u, cols);
    let ccols = complement(u, rows);
    let base = if crows.is_empty() {
        MatAlgElem::one(ambient)
    } else {
        minor::quantum_minor(ambient, &crows, &ccols)?
    };
    let det = minor::quantum_determinant(ambient)?;
    let sign = Scalar::neg_q_pow(index_sum(rows) - index_sum(cols));
    base.scale(&sign).mul(&det.pow(r.saturating_sub(1))?)
}

/// The expected value of `gamma_tau` on an `r x r` minor:
/// `(-q)^{sum(J)-sum(I)} [comp(I)|comp(J)] D_q^{r-1}`.
pub fn gamma_tau_minor_reference(
    ambient: Ambient,
    rows: &[u16],
    cols: &[u16],
) -> Result<MatAlgElem, QMatrixError> {
    let u = ambient.rows;
    if ambient.rows != ambient.cols {
        return Err(QMatrixError::NonSquare { ambient });
    }
    let r = rows.len() as u32;
    let crows = complement(u, rows);
    let ccols = complement(u, cols);
    let base = if crows.is_empty() {
        MatAlgElem::one(ambient)
    } else {
        minor::quantum_minor(ambient, &crows, &ccols)?
    };
    let det = minor::quantum_determinant(ambient)?;
    let sign = Scalar::neg_q_pow(index_sum(cols) - index_sum(rows));
    base.scale(&sign).mul(&det.pow(r.saturating_sub(1))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(amb: Ambient, r: u16, c: u16) -> MatAlgElem {
        MatAlgElem::generator(amb, GenIndex::new(r, c)).unwrap()
    }

    #[test]
    fn tau_transposes_generators() {
        let amb = Ambient::new(2, 2);
        assert_eq!(tau(&gen(amb, 1, 2)).unwrap(), gen(amb, 2, 1));
    }

    #[test]
    fn tau_fixes_the_determinant() {
        let amb = Ambient::new(2, 2);
        let d = minor::quantum_determinant(amb).unwrap();
        assert_eq!(tau(&d).unwrap(), d);
    }

    #[test]
    fn tau_swaps_minor_index_sets() {
        // tau([{1,2}|{1,3}]) = [{1,3}|{1,2}] in O_q(M_3)
        let amb = Ambient::new(3, 3);
        let m = minor::quantum_minor(amb, &[1, 2], &[1, 3]).unwrap();
        let swapped = minor::quantum_minor(amb, &[1, 3], &[1, 2]).unwrap();
        assert_eq!(tau(&m).unwrap(), swapped);
    }

    #[test]
    fn tau_requires_square_ambient() {
        let amb = Ambient::new(2, 3);
        assert!(tau(&gen(amb, 1, 1)).is_err());
    }

    #[test]
    fn gamma_on_generators_u2() {
        let amb = Ambient::new(2, 2);
        assert_eq!(gamma(&gen(amb, 1, 1)).unwrap(), gen(amb, 2, 2));
        // gamma(X12) = (-q)^{-1} [{1}|{2}] = -q^-1 X12
        let img = gamma(&gen(amb, 1, 2)).unwrap();
        assert_eq!(img, gen(amb, 1, 2).scale(&Scalar::neg_q_pow(-1)));
    }

    #[test]
    fn gamma_fixes_determinant_u2() {
        let amb = Ambient::new(2, 2);
        let d = minor::quantum_determinant(amb).unwrap();
        assert_eq!(gamma(&d).unwrap(), d);
    }

    #[test]
    fn gamma_minor_example_u3() {
        // gamma([{1,2}|{2,3}]) = (-q)^{-2} X[1,3] D_q in O_q(M_3)
        let amb = Ambient::new(3, 3);
        let m = minor::quantum_minor(amb, &[1, 2], &[2, 3]).unwrap();
        let lhs = gamma(&m).unwrap();
        let det = minor::quantum_determinant(amb).unwrap();
        let rhs = gen(amb, 1, 3).scale(&Scalar::neg_q_pow(-2)).mul(&det).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, gamma_minor_reference(amb, &[1, 2], &[2, 3]).unwrap());
    }

    #[test]
    fn gamma_tau_generator_rules_u2() {
        let amb = Ambient::new(2, 2);
        // X12 -> (-q)^{1} [{2}|{1}] = -q X21
        let img = gamma_tau(&gen(amb, 1, 2)).unwrap();
        assert_eq!(img, gen(amb, 2, 1).scale(&Scalar::neg_q_pow(1)));
        // X11 -> X22
        assert_eq!(gamma_tau(&gen(amb, 1, 1)).unwrap(), gen(amb, 2, 2));
    }

    #[test]
    fn gamma_tau_full_minor_u3() {
        // For the full minor, gamma_tau(D_q) = D_q^{u-1}
        let amb = Ambient::new(3, 3);
        let d = minor::quantum_determinant(amb).unwrap();
        assert_eq!(gamma_tau(&d).unwrap(), d.pow(2).unwrap());
    }

    #[test]
    fn tau_relation_check_small() {
        assert!(tau_preserves_relations(2).unwrap());
    }
}
