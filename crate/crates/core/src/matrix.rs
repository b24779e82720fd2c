//! Dense matrices over a `Scalar` with Gauss-Jordan elimination.
//!
//! Indices here are 0-based; the dictionary layer translates to the 1-based
//! conventions of its own interface. In float mode every elimination uses the
//! pivot threshold `zero_snap * max_abs_entry`, in rational mode pivots are
//! required to be exactly nonzero.

use num::Signed;

use crate::numerics::{Scalar, TolerancePolicy};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Mat<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = S::one();
        }
        m
    }

    /// Builds from row vectors; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "rows must have equal lengths"
        );
        Mat {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Empty matrix with an explicit column count (0 rows).
    pub fn empty(cols: usize) -> Self {
        Mat {
            rows: 0,
            cols,
            data: Vec::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &S {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut S {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<S> {
        self.row(r).to_vec()
    }

    pub fn col_vec(&self, c: usize) -> Vec<S> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn map_in_place(&mut self, mut f: impl FnMut(S) -> S) {
        for x in &mut self.data {
            *x = f(std::mem::replace(x, S::zero()));
        }
    }

    pub fn mul(&self, rhs: &Mat<S>) -> Mat<S> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out: Mat<S> = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let term = a.clone() * rhs.at(k, j).clone();
                    *out.at_mut(i, j) = out.at(i, j).clone() + term;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn max_abs(&self) -> S {
        self.data
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(S::zero)
    }

    fn pivot_threshold(&self, policy: &TolerancePolicy<S>) -> S {
        policy.zero_snap().clone() * self.max_abs()
    }

    pub fn rank(&self, policy: &TolerancePolicy<S>) -> usize {
        let threshold = self.pivot_threshold(policy);
        let mut work = self.clone();
        rref_in_place(&mut work, &threshold).len()
    }

    /// Solves the square system `self * x = b`; `None` when singular.
    pub fn solve(&self, b: &[S], policy: &TolerancePolicy<S>) -> Option<Vec<S>> {
        assert_eq!(self.rows, self.cols, "solve requires a square matrix");
        assert_eq!(b.len(), self.rows, "dimension mismatch");
        let n = self.rows;
        let threshold = self.pivot_threshold(policy);
        let mut work = Mat::zeros(n, n + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..n {
                *work.at_mut(i, j) = self.at(i, j).clone();
            }
            *work.at_mut(i, n) = bi.clone();
        }
        let pivots = rref_in_place(&mut work, &threshold);
        if pivots != (0..n).collect::<Vec<_>>() {
            return None;
        }
        Some(work.col_vec(n))
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self, policy: &TolerancePolicy<S>) -> Option<Mat<S>> {
        assert_eq!(self.rows, self.cols, "inverse requires a square matrix");
        let n = self.rows;
        let threshold = self.pivot_threshold(policy);
        let mut work = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *work.at_mut(i, j) = self.at(i, j).clone();
            }
            *work.at_mut(i, n + i) = S::one();
        }
        let pivots = rref_in_place(&mut work, &threshold);
        if pivots != (0..n).collect::<Vec<_>>() {
            return None;
        }
        let mut inv = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                *inv.at_mut(i, j) = work.at(i, n + j).clone();
            }
        }
        Some(inv)
    }

    /// A spanning vector of the nullspace when it is one-dimensional,
    /// `None` otherwise.
    pub fn nullspace_vector(&self, policy: &TolerancePolicy<S>) -> Option<Vec<S>> {
        let threshold = self.pivot_threshold(policy);
        let mut work = self.clone();
        let pivots = rref_in_place(&mut work, &threshold);
        if self.cols - pivots.len() != 1 {
            return None;
        }
        let free = (0..self.cols).find(|c| !pivots.contains(c)).unwrap();
        let mut x = vec![S::zero(); self.cols];
        x[free] = S::one();
        for (k, &pc) in pivots.iter().enumerate() {
            x[pc] = -work.at(k, free).clone();
        }
        Some(x)
    }
}

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    assert_eq!(a.len(), b.len(), "dimension mismatch");
    a.iter()
        .zip(b)
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Reduced row echelon form in place; returns the pivot columns. Entries with
/// |e| <= threshold are treated as zero when selecting pivots. Rational mode
/// takes the first usable pivot, float mode the largest by magnitude.
fn rref_in_place<S: Scalar>(m: &mut Mat<S>, threshold: &S) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next_row = 0;
    for c in 0..m.cols() {
        if next_row == m.rows() {
            break;
        }
        let selected = if S::EXACT {
            (next_row..m.rows()).find(|&r| !m.at(r, c).is_zero())
        } else {
            (next_row..m.rows())
                .filter(|&r| m.at(r, c).abs() > *threshold)
                .max_by_key(|&r| m.at(r, c).abs())
        };
        let Some(p) = selected else {
            continue;
        };
        m.swap_rows(next_row, p);
        let inv = S::one() / m.at(next_row, c).clone();
        for j in c..m.cols() {
            *m.at_mut(next_row, j) = m.at(next_row, j).clone() * inv.clone();
        }
        let pivot_row = m.row_vec(next_row);
        for r in 0..m.rows() {
            if r == next_row || m.at(r, c).is_zero() {
                continue;
            }
            let factor = m.at(r, c).clone();
            for (j, pj) in pivot_row.iter().enumerate().skip(c) {
                let delta = factor.clone() * pj.clone();
                *m.at_mut(r, j) = m.at(r, j).clone() - delta;
            }
        }
        pivots.push(c);
        next_row += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Rat;
    use num::Zero;
    use proptest::prelude::*;

    fn rmat(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        )
    }

    fn exact() -> TolerancePolicy<Rat> {
        TolerancePolicy::exact()
    }

    #[test]
    fn solves_a_triangular_system() {
        let a = rmat(&[&[1, 0, 0], &[2, 1, 0], &[3, 4, 1]]);
        let b = vec![Rat::from_int(1), Rat::from_int(0), Rat::from_int(2)];
        let x = a.solve(&b, &exact()).unwrap();
        assert_eq!(a.mul_vec(&x), b);
    }

    #[test]
    fn singular_system_has_no_solution_or_inverse() {
        let a = rmat(&[&[1, 2], &[2, 4]]);
        assert!(a
            .solve(&[Rat::from_int(1), Rat::from_int(2)], &exact())
            .is_none());
        assert!(a.inverse(&exact()).is_none());
        assert_eq!(a.rank(&exact()), 1);
    }

    #[test]
    fn inverts_the_unit_upper_triangular_example() {
        let a = Mat::from_rows(vec![
            vec![
                Rat::parse_number("1").unwrap(),
                Rat::parse_number("0.1").unwrap(),
                Rat::parse_number("-0.3").unwrap(),
            ],
            vec![
                Rat::zero(),
                Rat::parse_number("1").unwrap(),
                Rat::parse_number("0.1").unwrap(),
            ],
            vec![Rat::zero(), Rat::zero(), Rat::parse_number("1").unwrap()],
        ]);
        let inv = a.inverse(&exact()).unwrap();
        assert_eq!(inv.at(0, 1), &Rat::parse_number("-0.1").unwrap());
        assert_eq!(inv.at(0, 2), &Rat::parse_number("0.31").unwrap());
        assert_eq!(a.mul(&inv), Mat::identity(3));
    }

    #[test]
    fn nullspace_of_rank_deficient_row() {
        let a = rmat(&[&[1, 2, 0], &[0, 0, 1]]);
        let v = a.nullspace_vector(&exact()).unwrap();
        assert_eq!(a.mul_vec(&v), vec![Rat::zero(), Rat::zero()]);
        assert!(v.iter().any(|x| !x.is_zero()));
        assert!(rmat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
            .nullspace_vector(&exact())
            .is_none());
        assert!(rmat(&[&[1, 0, 0]]).nullspace_vector(&exact()).is_none());
    }

    #[test]
    fn empty_matrix_has_rank_zero_and_full_nullspace() {
        let a: Mat<Rat> = Mat::empty(1);
        assert_eq!(a.rank(&exact()), 0);
        assert_eq!(a.nullspace_vector(&exact()), Some(vec![Rat::from_int(1)]));
        let b: Mat<Rat> = Mat::empty(2);
        assert!(b.nullspace_vector(&exact()).is_none());
    }

    fn arb_square() -> impl Strategy<Value = Mat<Rat>> {
        (1usize..4).prop_flat_map(|n| {
            proptest::collection::vec(-5i64..6, n * n).prop_map(move |vals| Mat {
                rows: n,
                cols: n,
                data: vals.into_iter().map(Rat::from_int).collect(),
            })
        })
    }

    proptest! {
        #[test]
        fn inverse_multiplies_to_identity(a in arb_square()) {
            let policy = exact();
            if let Some(inv) = a.inverse(&policy) {
                prop_assert_eq!(a.mul(&inv), Mat::identity(a.rows()));
                prop_assert_eq!(inv.mul(&a), Mat::identity(a.rows()));
                prop_assert_eq!(a.rank(&policy), a.rows());
            } else {
                prop_assert!(a.rank(&policy) < a.rows());
            }
        }

        #[test]
        fn solve_agrees_with_multiplication(a in arb_square(),
                                            bvals in proptest::collection::vec(-5i64..6, 3)) {
            let policy = exact();
            let b: Vec<Rat> = (0..a.rows()).map(|i| Rat::from_int(bvals[i % bvals.len()])).collect();
            if let Some(x) = a.solve(&b, &policy) {
                prop_assert_eq!(a.mul_vec(&x), b);
            }
        }
    }
}
