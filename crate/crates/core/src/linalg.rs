//! Small dense exact linear algebra over `Q(q)`, used for straightening
//! solves and linear independence checks.

use crate::coeff::Scalar;

/// A dense row-major matrix over `Q(q)`.
#[derive(Clone, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    /// Row-reduce in place, returning the pivot columns.
    fn eliminate(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            // Pivot on the entry with the fewest polynomial terms to keep
            // intermediate fractions small.
            let mut best: Option<(usize, usize)> = None;
            for r in row..self.rows {
                let v = self.get(r, col);
                if v.is_zero() {
                    continue;
                }
                let size = v.numerator().num_terms() + v.denominator().num_terms();
                if best.map_or(true, |(_, s)| size < s) {
                    best = Some((r, size));
                }
            }
            let Some((prow, _)) = best else { continue };
            self.swap_rows(row, prow);
            let inv = self.get(row, col).inv().expect("pivot is nonzero");
            for c in col..self.cols {
                let v = &*self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let v = &*self.get(r, c) - &(&factor * self.get(row, c));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.eliminate().len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Solve `A x = b`. Returns `Ok(None)` when the system is inconsistent,
/// and an error description when the solution is not unique.
pub fn solve_unique(a: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, String> {
    assert_eq!(a.rows(), b.len());
    let mut aug = Matrix::zero(a.rows(), a.cols() + 1);
    for r in 0..a.rows() {
        for c in 0..a.cols() {
            aug.set(r, c, a.get(r, c).clone());
        }
        aug.set(r, a.cols(), b[r].clone());
    }
    let pivots = aug.eliminate();
    if pivots.last() == Some(&a.cols()) {
        return Ok(None); // pivot in the augmented column: inconsistent
    }
    if pivots.len() < a.cols() {
        return Err(format!(
            "solution not unique: rank {} over {} unknowns",
            pivots.len(),
            a.cols()
        ));
    }
    let mut x = vec![Scalar::zero(); a.cols()];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = aug.get(row, a.cols()).clone();
    }
    Ok(Some(x))
}
