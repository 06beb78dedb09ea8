//! PBW monomials and the rewriting engine that reduces free words in the
//! generators to normal form.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::coeff::Scalar;

use super::{Ambient, QMatrixError};

/// A generator `X[row, col]`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenIndex {
    pub row: u16,
    pub col: u16,
}

impl GenIndex {
    pub fn new(row: u16, col: u16) -> Self {
        GenIndex { row, col }
    }

    pub fn in_bounds(&self, ambient: Ambient) -> bool {
        (1..=ambient.rows).contains(&self.row) && (1..=ambient.cols).contains(&self.col)
    }
}

/// An arbitrary unreduced word in the generators.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word {
    pub factors: Vec<GenIndex>,
}

impl Word {
    pub fn new(factors: Vec<GenIndex>) -> Self {
        Word { factors }
    }
}

/// A normal-form monomial: the product of `X[i,j]^e` with the factors in
/// lexicographic order of `(row, col)`. The empty product is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PbwMonomial {
    exponents: Vec<(GenIndex, u32)>,
}

impl PbwMonomial {
    pub fn one() -> Self {
        PbwMonomial::default()
    }

    pub fn generator(g: GenIndex) -> Self {
        PbwMonomial { exponents: vec![(g, 1)] }
    }

    /// Build from a sorted factor list; panics in debug builds if unsorted.
    pub fn from_sorted_factors(factors: &[GenIndex]) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0] <= w[1]));
        let mut exponents: Vec<(GenIndex, u32)> = Vec::new();
        for &g in factors {
            match exponents.last_mut() {
                Some((last, e)) if *last == g => *e += 1,
                _ => exponents.push((g, 1)),
            }
        }
        PbwMonomial { exponents }
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (GenIndex, u32)> + '_ {
        self.exponents.iter().copied()
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().map(|(_, e)| e).sum()
    }

    /// Expand to the underlying sorted factor sequence.
    pub fn factors(&self) -> Vec<GenIndex> {
        let mut out = Vec::with_capacity(self.total_degree() as usize);
        for (g, e) in &self.exponents {
            for _ in 0..*e {
                out.push(*g);
            }
        }
        out
    }

    /// Number of times column `j` occurs, counted with exponents.
    pub fn column_count(&self, col: u16) -> u32 {
        self.exponents
            .iter()
            .filter(|(g, _)| g.col == col)
            .map(|(_, e)| e)
            .sum()
    }

    pub fn in_bounds(&self, ambient: Ambient) -> bool {
        self.exponents.iter().all(|(g, _)| g.in_bounds(ambient))
    }
}

/// Which out-of-order pair the reducer rewrites first. Both strategies
/// reach the same normal form; the choice only affects the route.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReductionStrategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// The rewrite of a single descent `x * y` with `x > y`: a list of
/// `(coefficient, [a, b])` replacement pairs with `a <= b`.
type PairRewrite = Vec<(Scalar, [GenIndex; 2])>;

fn compute_pair_rewrite(x: GenIndex, y: GenIndex) -> PairRewrite {
    debug_assert!(x > y);
    if x.row == y.row || x.col == y.col {
        // Same row or same column: q-commute.
        vec![(Scalar::q_pow(-1), [y, x])]
    } else if x.row > y.row && x.col < y.col {
        // x sits south-west of y: plain commute.
        vec![(Scalar::one(), [y, x])]
    } else {
        // x sits south-east of y: commute plus the (q - q^-1) correction.
        let a = GenIndex::new(y.row, x.col);
        let b = GenIndex::new(x.row, y.col);
        vec![
            (Scalar::one(), [y, x]),
            (-&Scalar::q_minus_q_inv(), [a, b]),
        ]
    }
}

type PairKey = (Ambient, GenIndex, GenIndex);

static PAIR_CACHE: OnceLock<Mutex<HashMap<PairKey, Arc<PairRewrite>>>> = OnceLock::new();
static MEMO_LIMIT: OnceLock<usize> = OnceLock::new();

fn memo_limit() -> usize {
    *MEMO_LIMIT.get_or_init(|| {
        std::env::var("QGR_MEMO_LIMIT")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(1 << 20)
    })
}

/// Memoized rewrite of the descent `x * y` (`x > y`) inside `ambient`.
fn pair_rewrite(ambient: Ambient, x: GenIndex, y: GenIndex) -> Arc<PairRewrite> {
    let cache = PAIR_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = (ambient, x, y);
    {
        let guard = cache.lock().unwrap();
        if let Some(hit) = guard.get(&key) {
            return Arc::clone(hit);
        }
    }
    let fresh = Arc::new(compute_pair_rewrite(x, y));
    let mut guard = cache.lock().unwrap();
    if guard.len() < memo_limit() {
        // Idempotent insert: a racing thread computes the same value.
        guard.entry(key).or_insert_with(|| Arc::clone(&fresh));
    }
    fresh
}

fn find_descent(word: &[GenIndex], strategy: ReductionStrategy) -> Option<usize> {
    match strategy {
        ReductionStrategy::Leftmost => word.windows(2).position(|w| w[0] > w[1]),
        ReductionStrategy::Rightmost => word.windows(2).rposition(|w| w[0] > w[1]),
    }
}

/// Reduce `coeff * word` to a normal-form term map.
///
/// Identical intermediate words are merged so the branching from the
/// correction terms stays under control.
pub(super) fn reduce_word(
    ambient: Ambient,
    coeff: Scalar,
    word: &[GenIndex],
    strategy: ReductionStrategy,
) -> Result<Vec<(PbwMonomial, Scalar)>, QMatrixError> {
    for g in word {
        if !g.in_bounds(ambient) {
            return Err(QMatrixError::OutOfBounds { row: g.row, col: g.col, ambient });
        }
    }
    let mut done: HashMap<Vec<GenIndex>, Scalar> = HashMap::new();
    let mut frontier: HashMap<Vec<GenIndex>, Scalar> = HashMap::new();
    frontier.insert(word.to_vec(), coeff);
    while !frontier.is_empty() {
        let mut next: HashMap<Vec<GenIndex>, Scalar> = HashMap::new();
        for (w, c) in frontier.drain() {
            if c.is_zero() {
                continue;
            }
            match find_descent(&w, strategy) {
                None => merge(&mut done, w, c),
                Some(k) => {
                    let rewrite = pair_rewrite(ambient, w[k], w[k + 1]);
                    for (rc, pair) in rewrite.iter() {
                        let mut nw = w.clone();
                        nw[k] = pair[0];
                        nw[k + 1] = pair[1];
                        merge(&mut next, nw, &c * rc);
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(done
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(w, c)| (PbwMonomial::from_sorted_factors(&w), c))
        .collect())
}

fn merge(map: &mut HashMap<Vec<GenIndex>, Scalar>, w: Vec<GenIndex>, c: Scalar) {
    use std::collections::hash_map::Entry;
    match map.entry(w) {
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
