//! The componentwise order on the generating minors: covers, saturated and
//! maximal paths, graded dimension counts, and the growth dimension.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use num::BigInt;

use crate::grassmann::{all_generators, star_leq, IndexSet};

/// The poset of all `m`-element column sets in `1..=n` under the
/// componentwise order.
#[derive(Clone, Debug)]
pub struct GeneratorPoset {
    m: u16,
    n: u16,
    elements: Vec<IndexSet>,
}

/// A strictly increasing chain in the poset. When saturated, consecutive
/// steps are cover relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    pub steps: Vec<IndexSet>,
}

impl Path {
    /// Number of nodes (the length convention used throughout).
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl GeneratorPoset {
    pub fn new(m: u16, n: u16) -> Self {
        assert!(m >= 1 && m <= n, "need 1 <= m <= n");
        GeneratorPoset { m, n, elements: all_generators(m, n) }
    }

    pub fn m(&self) -> u16 {
        self.m
    }

    pub fn n(&self) -> u16 {
        self.n
    }

    pub fn elements(&self) -> &[IndexSet] {
        &self.elements
    }

    pub fn bottom(&self) -> IndexSet {
        IndexSet::least(self.m)
    }

    pub fn top(&self) -> IndexSet {
        IndexSet::greatest(self.m, self.n)
    }

    pub fn leq(&self, a: &IndexSet, b: &IndexSet) -> bool {
        star_leq(a, b)
    }

    /// Upper covers of `a`: increment one entry `a_i` to `a_i + 1` whenever
    /// the result stays a strictly increasing subset of `1..=n`.
    pub fn covers(&self, a: &IndexSet) -> Vec<IndexSet> {
        let cols = a.cols();
        let mut out = Vec::new();
        for i in 0..cols.len() {
            let bumped = cols[i] + 1;
            let room = if i + 1 < cols.len() { bumped < cols[i + 1] } else { bumped <= self.n };
            if room {
                let mut next = cols.to_vec();
                next[i] = bumped;
                out.push(IndexSet::new(next).expect("increment keeps strict order"));
            }
        }
        out
    }

    /// Upper covers found by brute-force betweenness over all elements;
    /// the oracle the increment rule is checked against.
    pub fn covers_brute_force(&self, a: &IndexSet) -> Vec<IndexSet> {
        let above: Vec<&IndexSet> = self
            .elements
            .iter()
            .filter(|b| *b != a && star_leq(a, b))
            .collect();
        above
            .iter()
            .filter(|b| {
                !above
                    .iter()
                    .any(|c| *c != **b && star_leq(c, b) && *c != a)
            })
            .map(|b| (*b).clone())
            .collect()
    }

    /// All Hasse diagram edges `(lower, upper)`.
    pub fn cover_edges(&self) -> Vec<(IndexSet, IndexSet)> {
        let mut out = Vec::new();
        for a in &self.elements {
            for b in self.covers(a) {
                out.push((a.clone(), b.clone()));
            }
        }
        out
    }

    /// Node count of a longest saturated chain from bottom to top,
    /// computed by search over the cover graph.
    pub fn maximal_path_length(&self) -> usize {
        let mut memo: HashMap<IndexSet, usize> = HashMap::new();
        self.longest_from(&self.bottom(), &mut memo)
    }

    fn longest_from(&self, a: &IndexSet, memo: &mut HashMap<IndexSet, usize>) -> usize {
        if let Some(&v) = memo.get(a) {
            return v;
        }
        let best = self
            .covers(a)
            .iter()
            .map(|b| self.longest_from(b, memo))
            .max()
            .unwrap_or(0);
        let v = best + 1;
        memo.insert(a.clone(), v);
        v
    }

    /// Every saturated path from bottom to top, by exhaustive search.
    pub fn all_maximal_paths(&self) -> Vec<Path> {
        let mut out = Vec::new();
        let mut acc = vec![self.bottom()];
        self.dfs_paths(&mut acc, &mut out);
        out
    }

    fn dfs_paths(&self, acc: &mut Vec<IndexSet>, out: &mut Vec<Path>) {
        let last = acc.last().unwrap().clone();
        if last == self.top() {
            out.push(Path { steps: acc.clone() });
            return;
        }
        for next in self.covers(&last) {
            acc.push(next);
            self.dfs_paths(acc, out);
            acc.pop();
        }
    }

    /// DOT rendering of the Hasse diagram, edges from lower to upper.
    pub fn hasse_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
        for e in &self.elements {
            let _ = writeln!(out, "  \"{}\";", label(e));
        }
        for (a, b) in self.cover_edges() {
            let _ = writeln!(out, "  \"{}\" -> \"{}\";", label(&a), label(&b));
        }
        out.push_str("}\n");
        out
    }
}

fn label(set: &IndexSet) -> String {
    set.cols()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Dimension of the total-degree-`d` component of `G_q(m,n)`: the number of
/// preferred tableaux with `d` rows, counted by dynamic programming over
/// weakly increasing chains.
pub fn hilbert_dimension(m: u16, n: u16, d: u32) -> BigInt {
    if d == 0 {
        return BigInt::from(1);
    }
    let poset = GeneratorPoset::new(m, n);
    let elements = poset.elements();
    // chains[i] = number of weakly increasing chains of the current length
    // ending at element i.
    let mut chains: Vec<BigInt> = vec![BigInt::from(1); elements.len()];
    for _ in 1..d {
        let mut next: Vec<BigInt> = vec![BigInt::from(0); elements.len()];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                if star_leq(a, b) {
                    let add = chains[i].clone();
                    next[j] += add;
                }
            }
        }
        chains = next;
    }
    chains.iter().sum()
}

/// Brute-force chain count for small degrees; the oracle for the DP.
pub fn hilbert_dimension_brute_force(m: u16, n: u16, d: u32) -> BigInt {
    let poset = GeneratorPoset::new(m, n);
    let elements = poset.elements();
    fn count(elements: &[IndexSet], prev: Option<&IndexSet>, remaining: u32) -> BigInt {
        if remaining == 0 {
            return BigInt::from(1);
        }
        let mut total = BigInt::from(0);
        for e in elements {
            if prev.map_or(true, |p| star_leq(p, e)) {
                total += count(elements, Some(e), remaining - 1);
            }
        }
        total
    }
    count(elements, None, d)
}

/// The growth dimension `m(n-m) + 1` of `G_q(m,n)`; equals the maximal
/// path length and the polynomial growth degree of the graded dimensions.
pub fn gk_dimension(m: u16, n: u16) -> u32 {
    assert!(m >= 1 && m <= n, "need 1 <= m <= n");
    (m as u32) * ((n - m) as u32) + 1
}

/// Dimension table `d = 0..=max_d` as exact integers.
pub fn hilbert_table(m: u16, n: u16, max_d: u32) -> Vec<BigInt> {
    (0..=max_d).map(|d| hilbert_dimension(m, n, d)).collect()
}

/// Iterated finite differences of an integer sequence.
pub fn finite_differences(values: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut current: Vec<BigInt> = values.to_vec();
    for _ in 0..order {
        current = current.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    current
}

/// Compare the Hasse diagram with a reference edge list given as column
/// vectors; returns the symmetric difference (missing, extra).
pub fn hasse_diff(
    poset: &GeneratorPoset,
    reference: &[(Vec<u16>, Vec<u16>)],
) -> (Vec<(IndexSet, IndexSet)>, Vec<(IndexSet, IndexSet)>) {
    let mut expected: BTreeMap<(IndexSet, IndexSet), ()> = BTreeMap::new();
    for (a, b) in reference {
        let a = IndexSet::new(a.clone()).expect("reference edge endpoint");
        let b = IndexSet::new(b.clone()).expect("reference edge endpoint");
        expected.insert((a, b), ());
    }
    let actual = poset.cover_edges();
    let missing: Vec<_> = expected
        .keys()
        .filter(|e| !actual.contains(e))
        .cloned()
        .collect();
    let extra: Vec<_> = actual
        .into_iter()
        .filter(|e| !expected.contains_key(e))
        .collect();
    (missing, extra)
}
