//! Column index sets, tableaux, contents, and the orders on them.

use std::fmt;

use super::GrassError;

/// A strictly increasing set of `m` column indices in `1..=n`, denoting the
/// maximal quantum minor on those columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSet {
    cols: Vec<u16>,
}

impl IndexSet {
    pub fn new(cols: Vec<u16>) -> Result<Self, GrassError> {
        if cols.is_empty() || !cols.windows(2).all(|w| w[0] < w[1]) {
            return Err(GrassError::BadIndexSet { cols });
        }
        Ok(IndexSet { cols })
    }

    /// Sorts the input; fails on duplicates or emptiness.
    pub fn from_unsorted(mut cols: Vec<u16>) -> Result<Self, GrassError> {
        cols.sort_unstable();
        Self::new(cols)
    }

    pub fn cols(&self) -> &[u16] {
        &self.cols
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn contains(&self, col: u16) -> bool {
        self.cols.binary_search(&col).is_ok()
    }

    pub fn max_col(&self) -> u16 {
        *self.cols.last().unwrap()
    }

    /// The bottom generator `{1, ..., m}`.
    pub fn least(m: u16) -> Self {
        IndexSet { cols: (1..=m).collect() }
    }

    /// The top generator `{n-m+1, ..., n}`.
    pub fn greatest(m: u16, n: u16) -> Self {
        IndexSet { cols: (n - m + 1..=n).collect() }
    }

    /// Apply the column reversal `i -> n - i + 1` and re-sort.
    pub fn reverse_columns(&self, n: u16) -> Self {
        let mut cols: Vec<u16> = self.cols.iter().map(|&c| n - c + 1).collect();
        cols.sort_unstable();
        IndexSet { cols }
    }

    pub fn in_bounds(&self, m: u16, n: u16) -> bool {
        self.cols.len() == m as usize && self.cols.iter().all(|&c| (1..=n).contains(&c))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.cols.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

/// Strict lexicographic comparison of two column sets of equal size.
pub fn lex_less(a: &IndexSet, b: &IndexSet) -> bool {
    a.cols < b.cols
}

/// The componentwise order: `a_i <= b_i` for all positions.
pub fn star_leq(a: &IndexSet, b: &IndexSet) -> bool {
    a.cols.len() == b.cols.len()
        && a.cols.iter().zip(b.cols.iter()).all(|(x, y)| x <= y)
}

/// Result of comparing two column sets under both orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColumnSetOrder {
    pub lex_less: bool,
    pub star_leq: bool,
}

pub fn compare_column_sets(a: &IndexSet, b: &IndexSet) -> ColumnSetOrder {
    ColumnSetOrder { lex_less: lex_less(a, b), star_leq: star_leq(a, b) }
}

/// The inversion count `|{(i,j) in I x J : i > j}|` between two index
/// sets (which may be empty or of unequal size).
pub fn ell(i_set: &[u16], j_set: &[u16]) -> usize {
    i_set
        .iter()
        .map(|&i| j_set.iter().filter(|&&j| i > j).count())
        .sum()
}

/// A finite sequence of rows, each a column set; represents the product of
/// the row minors. The empty tableau is the unit.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Tableau {
    rows: Vec<IndexSet>,
}

impl Tableau {
    pub fn new(rows: Vec<IndexSet>) -> Self {
        Tableau { rows }
    }

    pub fn empty() -> Self {
        Tableau::default()
    }

    pub fn single(row: IndexSet) -> Self {
        Tableau { rows: vec![row] }
    }

    pub fn rows(&self) -> &[IndexSet] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Concatenation of row lists (the formal product of tableaux).
    pub fn concat(&self, rhs: &Tableau) -> Tableau {
        let mut rows = self.rows.clone();
        rows.extend(rhs.rows.iter().cloned());
        Tableau { rows }
    }

    /// True when consecutive rows weakly increase in the componentwise order.
    pub fn is_preferred(&self) -> bool {
        self.rows.windows(2).all(|w| star_leq(&w[0], &w[1]))
    }

    /// Occurrence counts of each column index, `1..=n`.
    pub fn content(&self, n: u16) -> Content {
        let mut counts = vec![0u32; n as usize];
        for row in &self.rows {
            for &c in row.cols() {
                counts[(c - 1) as usize] += 1;
            }
        }
        Content { counts }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "1");
        }
        for row in &self.rows {
            write!(f, "{}", row)?;
        }
        Ok(())
    }
}

/// The multidegree of a tableau: how many times each column appears.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Content {
    counts: Vec<u32>,
}

impl Content {
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().sum()
    }

    pub fn add(&self, rhs: &Content) -> Content {
        assert_eq!(self.counts.len(), rhs.counts.len());
        Content {
            counts: self
                .counts
                .iter()
                .zip(rhs.counts.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// The comparison the straightening induction descends along: more rows is
/// smaller; with equal row counts, compare row sequences at the first
/// difference using the componentwise order.
pub fn tableau_prec(t: &Tableau, s: &Tableau) -> bool {
    if t.num_rows() != s.num_rows() {
        return t.num_rows() > s.num_rows();
    }
    for (jt, js) in t.rows().iter().zip(s.rows().iter()) {
        if jt == js {
            continue;
        }
        return star_leq(jt, js);
    }
    false
}
