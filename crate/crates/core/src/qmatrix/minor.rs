//! Quantum minors and the quantum determinant.

use itertools::Itertools;

use crate::coeff::Scalar;

use super::pbw::{GenIndex, PbwMonomial};
use super::{Ambient, MatAlgElem, QMatrixError};

/// The quantum minor `[I|J]`: the signed sum over permutations
/// `sum_s (-q)^{l(s)} X[i_1, j_{s(1)}] ... X[i_r, j_{s(r)}]` with `l` the
/// inversion count. Row indices ascend, so every summand is already in
/// normal form.
pub fn quantum_minor(
    ambient: Ambient,
    rows: &[u16],
    cols: &[u16],
) -> Result<MatAlgElem, QMatrixError> {
    if rows.is_empty() || rows.len() != cols.len() {
        return Err(QMatrixError::MinorShape {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    if !strictly_increasing(rows) || !strictly_increasing(cols) {
        return Err(QMatrixError::MinorIndexOrder);
    }
    for &i in rows {
        if !(1..=ambient.rows).contains(&i) {
            return Err(QMatrixError::OutOfBounds { row: i, col: 1, ambient });
        }
    }
    for &j in cols {
        if !(1..=ambient.cols).contains(&j) {
            return Err(QMatrixError::OutOfBounds { row: 1, col: j, ambient });
        }
    }
    let r = rows.len();
    let mut out = MatAlgElem::zero(ambient);
    for perm in (0..r).permutations(r) {
        let inv = inversions(&perm);
        let factors: Vec<GenIndex> = rows
            .iter()
            .enumerate()
            .map(|(t, &i)| GenIndex::new(i, cols[perm[t]]))
            .collect();
        out.add_term(
            PbwMonomial::from_sorted_factors(&factors),
            Scalar::neg_q_pow(inv as i64),
        );
    }
    Ok(out)
}

/// The quantum determinant of `O_q(M_u)` inside `ambient` (requires a
/// square ambient).
pub fn quantum_determinant(ambient: Ambient) -> Result<MatAlgElem, QMatrixError> {
    if ambient.rows != ambient.cols {
        return Err(QMatrixError::NonSquare { ambient });
    }
    let all: Vec<u16> = (1..=ambient.rows).collect();
    quantum_minor(ambient, &all, &all)
}

fn strictly_increasing(xs: &[u16]) -> bool {
    xs.windows(2).all(|w| w[0] < w[1])
}

fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one_minor_is_a_generator() {
        let amb = Ambient::new(2, 2);
        let m = quantum_minor(amb, &[1], &[1]).unwrap();
        assert_eq!(m, MatAlgElem::generator(amb, GenIndex::new(1, 1)).unwrap());
    }

    #[test]
    fn two_by_two_determinant() {
        // [12|12] = X11 X22 - q X12 X21
        let amb = Ambient::new(2, 2);
        let d = quantum_determinant(amb).unwrap();
        let m1 = PbwMonomial::from_sorted_factors(&[GenIndex::new(1, 1), GenIndex::new(2, 2)]);
        let m2 = PbwMonomial::from_sorted_factors(&[GenIndex::new(1, 2), GenIndex::new(2, 1)]);
        assert_eq!(d.num_terms(), 2);
        assert!(d.coeff(&m1).is_one());
        assert_eq!(d.coeff(&m2), -&Scalar::q_pow(1));
    }

    #[test]
    fn rectangular_minor_instance() {
        // [{1,2}|{1,3}] in O_q(M_{2,4}) = X11 X23 - q X13 X21
        let amb = Ambient::new(2, 4);
        let m = quantum_minor(amb, &[1, 2], &[1, 3]).unwrap();
        let m1 = PbwMonomial::from_sorted_factors(&[GenIndex::new(1, 1), GenIndex::new(2, 3)]);
        let m2 = PbwMonomial::from_sorted_factors(&[GenIndex::new(1, 3), GenIndex::new(2, 1)]);
        assert!(m.coeff(&m1).is_one());
        assert_eq!(m.coeff(&m2), -&Scalar::q_pow(1));
    }

    #[test]
    fn shape_errors() {
        let amb = Ambient::new(2, 4);
        assert!(quantum_minor(amb, &[1, 2], &[1]).is_err());
        assert!(quantum_minor(amb, &[], &[]).is_err());
        assert!(quantum_minor(amb, &[1, 2], &[1, 5]).is_err());
        assert!(quantum_minor(amb, &[2, 1], &[1, 2]).is_err());
    }
}
