//! Engine-level properties of the quantum matrix algebra: confluence of
//! the rewriting, associativity, centrality of the quantum determinant,
//! relation preservation of the morphisms, and multiplicativity of the
//! coaction.

mod common;

use proptest::prelude::*;

use common::{mat_elem, word};
use qgr_core::coeff::Scalar;
use qgr_core::qmatrix::{
    gamma, lambda_coaction, morph, quantum_determinant, quantum_minor, tau,
    tau_preserves_relations, Ambient, GenIndex, MatAlgElem, ReductionStrategy, Word,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn confluence_in_m23(w in word(2, 3, 6)) {
        let amb = Ambient::new(2, 3);
        let left = MatAlgElem::normal_form(amb, &Word::new(w.clone()), ReductionStrategy::Leftmost).unwrap();
        let right = MatAlgElem::normal_form(amb, &Word::new(w), ReductionStrategy::Rightmost).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn confluence_in_m33(w in word(3, 3, 6)) {
        let amb = Ambient::new(3, 3);
        let left = MatAlgElem::normal_form(amb, &Word::new(w.clone()), ReductionStrategy::Leftmost).unwrap();
        let right = MatAlgElem::normal_form(amb, &Word::new(w), ReductionStrategy::Rightmost).unwrap();
        prop_assert_eq!(left, right);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn normal_form_is_stable(w in word(2, 3, 5)) {
        let amb = Ambient::new(2, 3);
        let nf = MatAlgElem::normal_form(amb, &Word::new(w), ReductionStrategy::Leftmost).unwrap();
        // Re-reducing every monomial of the normal form changes nothing.
        let mut again = MatAlgElem::zero(amb);
        for (m, c) in nf.terms() {
            let back = MatAlgElem::normal_form(amb, &Word::new(m.factors()), ReductionStrategy::Rightmost).unwrap();
            again = again.add(&back.scale(c)).unwrap();
        }
        prop_assert_eq!(again, nf);
    }

    #[test]
    fn multiplication_associates(
        a in mat_elem(2, 3, 3, 3),
        b in mat_elem(2, 3, 3, 3),
        c in mat_elem(2, 3, 3, 3),
    ) {
        let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lambda_is_multiplicative(u in word(2, 4, 4), v in word(2, 4, 4)) {
        let amb = Ambient::new(2, 4);
        let x = MatAlgElem::normal_form(amb, &Word::new(u), ReductionStrategy::Leftmost).unwrap();
        let y = MatAlgElem::normal_form(amb, &Word::new(v), ReductionStrategy::Leftmost).unwrap();
        let lhs = lambda_coaction(&x.mul(&y).unwrap()).unwrap();
        let rhs = lambda_coaction(&x).unwrap().mul(&lambda_coaction(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn products_of_nonzero_monomial_elements_are_nonzero(
        u in word(2, 3, 4),
        v in word(2, 3, 4),
    ) {
        // Degree-bounded domain spot check.
        let amb = Ambient::new(2, 3);
        let x = MatAlgElem::normal_form(amb, &Word::new(u), ReductionStrategy::Leftmost).unwrap();
        let y = MatAlgElem::normal_form(amb, &Word::new(v), ReductionStrategy::Leftmost).unwrap();
        prop_assert!(!x.is_zero() && !y.is_zero());
        prop_assert!(!x.mul(&y).unwrap().is_zero());
    }
}

#[test]
fn determinant_is_central() {
    for n in [2u16, 3] {
        let amb = Ambient::new(n, n);
        let d = quantum_determinant(amb).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                let x = MatAlgElem::generator(amb, GenIndex::new(i, j)).unwrap();
                assert_eq!(
                    d.mul(&x).unwrap(),
                    x.mul(&d).unwrap(),
                    "D_q fails to commute with X[{},{}] at n={}",
                    i,
                    j,
                    n
                );
            }
        }
    }
}

#[test]
fn tau_preserves_all_relations_small() {
    assert!(tau_preserves_relations(2).unwrap());
    assert!(tau_preserves_relations(3).unwrap());
}

#[test]
fn tau_transposes_all_minors_small() {
    for u in [2u16, 3] {
        let amb = Ambient::new(u, u);
        let sets = subsets(u);
        for rows in &sets {
            for cols in &sets {
                if rows.len() != cols.len() || rows.is_empty() {
                    continue;
                }
                let m = quantum_minor(amb, rows, cols).unwrap();
                let t = quantum_minor(amb, cols, rows).unwrap();
                assert_eq!(tau(&m).unwrap(), t, "tau([{:?}|{:?}])", rows, cols);
            }
        }
    }
}

#[test]
fn gamma_matches_the_minor_rule_small() {
    for u in [2u16, 3] {
        let amb = Ambient::new(u, u);
        let sets = subsets(u);
        for rows in &sets {
            for cols in &sets {
                if rows.len() != cols.len() || rows.is_empty() {
                    continue;
                }
                let m = quantum_minor(amb, rows, cols).unwrap();
                assert_eq!(
                    gamma(&m).unwrap(),
                    morph::gamma_minor_reference(amb, rows, cols).unwrap(),
                    "gamma on [{:?}|{:?}] at u={}",
                    rows,
                    cols,
                    u
                );
            }
        }
    }
}

#[test]
fn gamma_is_anti_multiplicative_on_samples() {
    let amb = Ambient::new(2, 2);
    let gens: Vec<MatAlgElem> = (1..=2)
        .flat_map(|i| (1..=2).map(move |j| (i, j)))
        .map(|(i, j)| MatAlgElem::generator(amb, GenIndex::new(i, j)).unwrap())
        .collect();
    for x in &gens {
        for y in &gens {
            let lhs = gamma(&x.mul(y).unwrap()).unwrap();
            let rhs = gamma(y).unwrap().mul(&gamma(x).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn scalar_terms_survive_morphisms() {
    let amb = Ambient::new(2, 2);
    let s = MatAlgElem::from_scalar(amb, Scalar::q_pow(3));
    assert_eq!(tau(&s).unwrap(), s);
    assert_eq!(gamma(&s).unwrap(), s);
}

fn subsets(u: u16) -> Vec<Vec<u16>> {
    let mut out: Vec<Vec<u16>> = vec![vec![]];
    for x in 1..=u {
        let mut more = Vec::new();
        for s in &out {
            let mut t = s.clone();
            t.push(x);
            more.push(t);
        }
        out.extend(more);
    }
    out
}
