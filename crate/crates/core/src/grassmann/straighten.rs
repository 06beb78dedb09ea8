//! Straightening onto the preferred-tableau basis.
//!
//! The canonical route expands a content component in PBW coordinates and
//! solves the exact linear system against the embeddings of all preferred
//! tableaux of that content; existence and uniqueness of the solution is
//! the basis property. A single-step Pluecker rewrite is provided as an
//! alternative strategy and is cross-checked against the solve in tests.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::coeff::Scalar;
use crate::linalg::{solve_unique, Matrix};
use crate::qmatrix::PbwMonomial;

use super::elem::{GrassAmbient, GrassElem};
use super::pluecker::pluecker_relation;
use super::tableau::{star_leq, Content, IndexSet, Tableau};
use super::GrassError;

/// All column sets of size `m` inside `1..=n`, in lexicographic order.
pub fn all_generators(m: u16, n: u16) -> Vec<IndexSet> {
    (1..=n)
        .combinations(m as usize)
        .map(|cols| IndexSet::new(cols).expect("combinations are strictly increasing"))
        .collect()
}

/// All preferred tableaux with the given content.
pub fn enumerate_preferred(ambient: GrassAmbient, content: &Content) -> Vec<Tableau> {
    let total = content.total();
    let m = ambient.m as u32;
    if total % m != 0 {
        return Vec::new();
    }
    let rows = (total / m) as usize;
    if rows == 0 {
        return vec![Tableau::empty()];
    }
    let mut out = Vec::new();
    let mut counts: Vec<u32> = content.counts().to_vec();
    let mut acc: Vec<IndexSet> = Vec::new();
    let candidates = all_generators(ambient.m, ambient.n);
    fn dfs(
        candidates: &[IndexSet],
        counts: &mut Vec<u32>,
        acc: &mut Vec<IndexSet>,
        remaining: usize,
        out: &mut Vec<Tableau>,
    ) {
        if remaining == 0 {
            out.push(Tableau::new(acc.clone()));
            return;
        }
        for cand in candidates {
            if let Some(prev) = acc.last() {
                if !star_leq(prev, cand) {
                    continue;
                }
            }
            if cand.cols().iter().any(|&c| counts[(c - 1) as usize] == 0) {
                continue;
            }
            for &c in cand.cols() {
                counts[(c - 1) as usize] -= 1;
            }
            acc.push(cand.clone());
            dfs(candidates, counts, acc, remaining - 1, out);
            acc.pop();
            for &c in cand.cols() {
                counts[(c - 1) as usize] += 1;
            }
        }
    }
    dfs(&candidates, &mut counts, &mut acc, rows, &mut out);
    out
}

/// All preferred tableaux with exactly `d` rows, i.e. the weakly
/// increasing chains of length `d` in the generator poset.
pub fn preferred_tableaux_of_degree(ambient: GrassAmbient, d: u32) -> Vec<Tableau> {
    let generators = all_generators(ambient.m, ambient.n);
    let mut out = Vec::new();
    let mut acc: Vec<IndexSet> = Vec::new();
    fn dfs(
        generators: &[IndexSet],
        acc: &mut Vec<IndexSet>,
        remaining: u32,
        out: &mut Vec<Tableau>,
    ) {
        if remaining == 0 {
            out.push(Tableau::new(acc.clone()));
            return;
        }
        for g in generators {
            if acc.last().map_or(true, |prev| star_leq(prev, g)) {
                acc.push(g.clone());
                dfs(generators, acc, remaining - 1, out);
                acc.pop();
            }
        }
    }
    dfs(&generators, &mut acc, d, &mut out);
    out
}

/// Rank over `Q(q)` of the embeddings of the given tableaux.
pub fn embedding_rank(ambient: GrassAmbient, tableaux: &[Tableau]) -> Result<usize, GrassError> {
    let embeds: Vec<_> = tableaux
        .iter()
        .map(|t| GrassElem::from_tableau(ambient, t.clone()).embed())
        .collect::<Result<Vec<_>, _>>()?;
    let mut index: BTreeMap<PbwMonomial, usize> = BTreeMap::new();
    for e in &embeds {
        for (mono, _) in e.terms() {
            let next = index.len();
            index.entry(mono.clone()).or_insert(next);
        }
    }
    let mut matrix = Matrix::zero(embeds.len(), index.len());
    for (r, e) in embeds.iter().enumerate() {
        for (mono, c) in e.terms() {
            matrix.set(r, index[mono], c.clone());
        }
    }
    Ok(matrix.rank())
}

/// Rewrite onto the preferred basis: the result carries only preferred
/// tableaux and has the same embedding. Mixed contents are handled
/// independently.
pub fn straighten(g: &GrassElem) -> Result<GrassElem, GrassError> {
    let mut out = GrassElem::zero(g.ambient());
    for (content, comp) in g.content_components() {
        let part = if comp.all_preferred() {
            comp
        } else {
            straighten_component(&comp, &content)?
        };
        out = out.add(&part)?;
    }
    Ok(out)
}

fn straighten_component(comp: &GrassElem, content: &Content) -> Result<GrassElem, GrassError> {
    let ambient = comp.ambient();
    let preferred = enumerate_preferred(ambient, content);
    if preferred.is_empty() {
        return Err(GrassError::StraightenInternal {
            detail: format!("no preferred tableaux of content {:?}", content.counts()),
        });
    }
    let target = comp.embed()?;
    let embeds: Vec<_> = preferred
        .iter()
        .map(|t| GrassElem::from_tableau(ambient, t.clone()).embed())
        .collect::<Result<_, _>>()?;
    // Index every PBW monomial that occurs.
    let mut index: BTreeMap<&PbwMonomial, usize> = BTreeMap::new();
    for e in embeds.iter().chain(std::iter::once(&target)) {
        for (mono, _) in e.terms() {
            let next = index.len();
            index.entry(mono).or_insert(next);
        }
    }
    let mut a = Matrix::zero(index.len(), embeds.len());
    for (col, e) in embeds.iter().enumerate() {
        for (mono, c) in e.terms() {
            a.set(index[mono], col, c.clone());
        }
    }
    let mut b = vec![Scalar::zero(); index.len()];
    for (mono, c) in target.terms() {
        b[index[mono]] = c.clone();
    }
    let solution = solve_unique(&a, &b)
        .map_err(|detail| GrassError::StraightenInternal { detail })?
        .ok_or_else(|| GrassError::StraightenInternal {
            detail: "straightening system is inconsistent".to_string(),
        })?;
    let mut out = GrassElem::zero(ambient);
    for (t, x) in preferred.into_iter().zip(solution) {
        out.add_term(t, x);
    }
    Ok(out)
}

const REWRITE_STEP_CAP: usize = 100_000;

/// Single-step Pluecker rewriting: repeatedly pick the first non-preferred
/// adjacent row pair and exchange it through the quantum Pluecker relation
/// with `J1` the head of the upper row, `J2` the tail of the lower row and
/// `K` the remaining `m + 1` columns.
pub fn straighten_by_rewriting(g: &GrassElem) -> Result<GrassElem, GrassError> {
    let ambient = g.ambient();
    let mut work: BTreeMap<Tableau, Scalar> = g.terms().map(|(t, c)| (t.clone(), c.clone())).collect();
    let mut steps = 0;
    loop {
        let Some(t) = work.keys().find(|t| !t.is_preferred()).cloned() else {
            break;
        };
        steps += 1;
        if steps > REWRITE_STEP_CAP {
            return Err(GrassError::StraightenInternal {
                detail: "rewrite strategy exceeded its step cap".to_string(),
            });
        }
        let c = work.remove(&t).expect("key just found");
        let pos = t
            .rows()
            .windows(2)
            .position(|w| !star_leq(&w[0], &w[1]))
            .expect("tableau is not preferred");
        let upper = &t.rows()[pos];
        let lower = &t.rows()[pos + 1];
        for (pair, factor) in exchange_adjacent(ambient, upper, lower)? {
            let mut rows = t.rows().to_vec();
            rows.splice(pos..pos + 2, pair);
            merge_term(&mut work, Tableau::new(rows), &c * &factor);
        }
    }
    let mut out = GrassElem::zero(ambient);
    for (t, c) in work {
        out.add_term(t, c);
    }
    Ok(out)
}

/// Express `[upper][lower]` (a non-preferred adjacent pair) as a
/// combination of the other bracket pairs from its Pluecker relation.
fn exchange_adjacent(
    ambient: GrassAmbient,
    upper: &IndexSet,
    lower: &IndexSet,
) -> Result<Vec<(Vec<IndexSet>, Scalar)>, GrassError> {
    let a = upper.cols();
    let b = lower.cols();
    let t0 = (0..a.len())
        .position(|i| a[i] > b[i])
        .expect("rows violate the componentwise order");
    let j1: Vec<u16> = a[..t0].to_vec();
    let j2: Vec<u16> = b[t0 + 1..].to_vec();
    let k: Vec<u16> = a[t0..]
        .iter()
        .chain(b[..=t0].iter())
        .copied()
        .sorted_unstable()
        .collect();
    let relation = pluecker_relation(ambient, &j1, &j2, &k)?;
    let original = Tableau::new(vec![upper.clone(), lower.clone()]);
    let lead = relation.coeff(&original);
    if lead.is_zero() {
        return Err(GrassError::StraightenInternal {
            detail: format!("exchange relation misses the pair {}{}", upper, lower),
        });
    }
    let scale = (-&lead).inv().map_err(|e| GrassError::StraightenInternal {
        detail: format!("exchange leading coefficient not invertible: {}", e),
    })?;
    let mut out = Vec::new();
    for (tab, coeff) in relation.terms() {
        if *tab == original {
            continue;
        }
        out.push((tab.rows().to_vec(), &scale * coeff));
    }
    Ok(out)
}

fn merge_term(map: &mut BTreeMap<Tableau, Scalar>, t: Tableau, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(t) {
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

#[cfg(test)]
mod tests {
    use super::*;

    fn iset(cols: &[u16]) -> IndexSet {
        IndexSet::new(cols.to_vec()).unwrap()
    }

    fn tab(rows: &[&[u16]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| iset(r)).collect())
    }

    fn gelem(amb: GrassAmbient, rows: &[&[u16]]) -> GrassElem {
        GrassElem::from_tableau(amb, tab(rows))
    }

    #[test]
    fn preferred_input_is_fixed() {
        let amb = GrassAmbient::new(2, 4);
        let g = gelem(amb, &[&[1, 2], &[3, 4]]);
        assert_eq!(straighten(&g).unwrap(), g);
    }

    #[test]
    fn straighten_14_23() {
        // [14][23] = q^-1 [13][24] - q^-2 [12][34]
        let amb = GrassAmbient::new(2, 4);
        let s = straighten(&gelem(amb, &[&[1, 4], &[2, 3]])).unwrap();
        assert_eq!(s.num_terms(), 2);
        assert_eq!(s.coeff(&tab(&[&[1, 3], &[2, 4]])), Scalar::q_pow(-1));
        assert_eq!(s.coeff(&tab(&[&[1, 2], &[3, 4]])), -&Scalar::q_pow(-2));
        assert!(s.all_preferred());
    }

    #[test]
    fn straighten_24_13() {
        // [24][13] = q^-2 [13][24] + (q^-1 - q^-3) [12][34]
        let amb = GrassAmbient::new(2, 4);
        let s = straighten(&gelem(amb, &[&[2, 4], &[1, 3]])).unwrap();
        assert_eq!(s.coeff(&tab(&[&[1, 3], &[2, 4]])), Scalar::q_pow(-2));
        let expected = &Scalar::q_pow(-1) - &Scalar::q_pow(-3);
        assert_eq!(s.coeff(&tab(&[&[1, 2], &[3, 4]])), expected);
    }

    #[test]
    fn straighten_preserves_embedding() {
        let amb = GrassAmbient::new(2, 4);
        for rows in [
            vec![vec![3, 4], vec![1, 2]],
            vec![vec![2, 3], vec![1, 4]],
            vec![vec![2, 4], vec![1, 3], vec![1, 2]],
        ] {
            let rowrefs: Vec<&[u16]> = rows.iter().map(|r| r.as_slice()).collect();
            let g = gelem(amb, &rowrefs);
            let s = straighten(&g).unwrap();
            assert!(s.all_preferred());
            assert_eq!(s.embed().unwrap(), g.embed().unwrap());
        }
    }

    #[test]
    fn rewriting_agrees_with_solve() {
        let amb = GrassAmbient::new(2, 4);
        for rows in [
            vec![vec![1, 4], vec![2, 3]],
            vec![vec![2, 4], vec![1, 3]],
            vec![vec![3, 4], vec![1, 2]],
            vec![vec![3, 4], vec![2, 4], vec![1, 2]],
        ] {
            let rowrefs: Vec<&[u16]> = rows.iter().map(|r| r.as_slice()).collect();
            let g = gelem(amb, &rowrefs);
            assert_eq!(straighten_by_rewriting(&g).unwrap(), straighten(&g).unwrap());
        }
    }

    #[test]
    fn enumerate_preferred_counts_degree_two() {
        // 20 preferred two-row tableaux at (2,4), summed over all contents.
        let amb = GrassAmbient::new(2, 4);
        let gens = all_generators(2, 4);
        let mut total = 0;
        let mut seen = std::collections::BTreeSet::new();
        for a in &gens {
            for b in &gens {
                let t = Tableau::new(vec![a.clone(), b.clone()]);
                if t.is_preferred() {
                    seen.insert(t.content(4));
                    total += 1;
                }
            }
        }
        assert_eq!(total, 20);
        let by_enum: usize = seen
            .iter()
            .map(|content| enumerate_preferred(amb, content).len())
            .sum();
        assert_eq!(by_enum, 20);
    }
}
