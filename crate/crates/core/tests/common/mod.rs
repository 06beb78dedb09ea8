//! Shared proptest strategies for the integration suites.

use num::{BigInt, BigRational};
use proptest::prelude::*;

use qgr_core::coeff::{LaurentPoly, Scalar};
use qgr_core::grassmann::{all_generators, GrassAmbient, GrassElem, Tableau};
use qgr_core::qmatrix::{Ambient, GenIndex, MatAlgElem, ReductionStrategy, Word};

pub fn rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4)
        .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn laurent() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((-4i64..=4, rational()), 0..3).prop_map(LaurentPoly::from_terms)
}

pub fn nonzero_laurent() -> impl Strategy<Value = LaurentPoly> {
    laurent().prop_filter("nonzero", |p| !p.is_zero())
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), nonzero_laurent()).prop_map(|(n, d)| Scalar::new(n, d).expect("den nonzero"))
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

pub fn gen_index(m: u16, n: u16) -> impl Strategy<Value = GenIndex> {
    (1..=m, 1..=n).prop_map(|(r, c)| GenIndex::new(r, c))
}

pub fn word(m: u16, n: u16, max_len: usize) -> impl Strategy<Value = Vec<GenIndex>> {
    proptest::collection::vec(gen_index(m, n), 0..=max_len)
}

/// A small element: at most `terms` words of length at most `len`, each
/// with a small scalar coefficient.
pub fn mat_elem(m: u16, n: u16, terms: usize, len: usize) -> impl Strategy<Value = MatAlgElem> {
    let amb = Ambient::new(m, n);
    proptest::collection::vec((word(m, n, len), scalar()), 0..=terms).prop_map(move |parts| {
        let mut out = MatAlgElem::zero(amb);
        for (w, c) in parts {
            let nf = MatAlgElem::normal_form(amb, &Word::new(w), ReductionStrategy::Leftmost)
                .expect("in-bounds word");
            out = out.add(&nf.scale(&c)).expect("same ambient");
        }
        out
    })
}

/// A random tableau at the given ambient with `rows` rows.
pub fn tableau(m: u16, n: u16, rows: std::ops::Range<usize>) -> impl Strategy<Value = Tableau> {
    let generators = all_generators(m, n);
    proptest::collection::vec(0..generators.len(), rows).prop_map(move |picks| {
        Tableau::new(picks.into_iter().map(|i| generators[i].clone()).collect())
    })
}

/// A Grassmannian element with a couple of random tableau terms.
pub fn grass_elem(m: u16, n: u16, rows: std::ops::Range<usize>) -> impl Strategy<Value = GrassElem> {
    let amb = GrassAmbient::new(m, n);
    proptest::collection::vec((tableau(m, n, rows), scalar()), 1..=2).prop_map(move |parts| {
        let mut out = GrassElem::zero(amb);
        for (t, c) in parts {
            out = out
                .add(&GrassElem::from_tableau(amb, t).scale(&c))
                .expect("same ambient");
        }
        out
    })
}
