//! The generalized quantum Pluecker relations.

use itertools::Itertools;

use crate::coeff::Scalar;

use super::elem::{GrassAmbient, GrassElem};
use super::tableau::{ell, IndexSet, Tableau};
use super::GrassError;

/// The quantum Pluecker sum for column sets `J1`, `J2` and a splitting set
/// `K`:
///
/// ```text
/// sum over K' disjoint-union K'' = K of
///   (-q)^{ell(J1;K') + ell(K';K'') + ell(K'';J2)} [J1 u K'] [K'' u J2]
/// ```
///
/// Requires `|J1|, |J2| <= m` and `|K| = 2m - |J1| - |J2| > m`. Splittings
/// where a bracket has a repeated column contribute zero and are skipped.
/// The returned formal sum embeds to zero in the matrix algebra.
pub fn pluecker_relation(
    ambient: GrassAmbient,
    j1: &[u16],
    j2: &[u16],
    k: &[u16],
) -> Result<GrassElem, GrassError> {
    let m = ambient.m as usize;
    check_index_list(ambient, j1)?;
    check_index_list(ambient, j2)?;
    check_index_list(ambient, k)?;
    if j1.len() > m || j2.len() > m {
        return Err(GrassError::InvalidPluecker {
            reason: format!("|J1| = {} and |J2| = {} must be at most m = {}", j1.len(), j2.len(), m),
        });
    }
    if j1.len() + j2.len() + k.len() != 2 * m {
        return Err(GrassError::InvalidPluecker {
            reason: format!(
                "|K| = {} must equal 2m - |J1| - |J2| = {}",
                k.len(),
                2 * m - j1.len() - j2.len()
            ),
        });
    }
    if k.len() <= m {
        return Err(GrassError::InvalidPluecker {
            reason: format!("|K| = {} must exceed m = {}", k.len(), m),
        });
    }
    let first_size = m - j1.len();
    let mut out = GrassElem::zero(ambient);
    for kp in k.iter().copied().combinations(first_size) {
        let kpp: Vec<u16> = k.iter().copied().filter(|c| !kp.contains(c)).collect();
        // A repeated column makes the bracket zero.
        if kp.iter().any(|c| j1.contains(c)) || kpp.iter().any(|c| j2.contains(c)) {
            continue;
        }
        let exponent = ell(j1, &kp) + ell(&kp, &kpp) + ell(&kpp, j2);
        let first = IndexSet::from_unsorted(j1.iter().chain(kp.iter()).copied().collect())?;
        let second = IndexSet::from_unsorted(kpp.iter().chain(j2.iter()).copied().collect())?;
        out.add_term(
            Tableau::new(vec![first, second]),
            Scalar::neg_q_pow(exponent as i64),
        );
    }
    Ok(out)
}

fn check_index_list(ambient: GrassAmbient, xs: &[u16]) -> Result<(), GrassError> {
    if !xs.windows(2).all(|w| w[0] < w[1]) {
        return Err(GrassError::InvalidPluecker {
            reason: format!("index list {:?} must be strictly increasing", xs),
        });
    }
    if let Some(&c) = xs.iter().find(|c| !(1..=ambient.n).contains(*c)) {
        return Err(GrassError::InvalidPluecker {
            reason: format!("column {} out of range 1..={}", c, ambient.n),
        });
    }
    Ok(())
}
