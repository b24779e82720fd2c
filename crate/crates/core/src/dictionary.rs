//! The simplex dictionary: an (m+1) x (m+d+2) tableau over the variables
//! 1 (objective), 2..d+1 (original), d+2..m+d+1 (slacks), with the right-hand
//! side in the last column. All indices in this interface are 1-based.
//!
//! Invariants maintained by construction and after every pivot:
//! the first d+1 basis entries are always (1..d+1); basis and cobasis
//! partition {1..m+d+1} with the cobasis drawn from the slack range; the
//! basis columns of T form the identity; and on every state reached by the
//! enumeration the slack basic values are nonnegative.

use crate::matrix::Mat;
use crate::model::{HRep, InitialVertex, Point};
use crate::numerics::{Scalar, TolerancePolicy};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DictionaryState<S> {
    t: Mat<S>,
    basis: Vec<usize>,
    cobasis: Vec<usize>,
    m: usize,
    d: usize,
    policy: TolerancePolicy<S>,
}

fn mat_or_empty<S: Scalar>(rows: Vec<Vec<S>>, cols: usize) -> Mat<S> {
    if rows.is_empty() {
        Mat::empty(cols)
    } else {
        Mat::from_rows(rows)
    }
}

/// Builds the dictionary rooted at an initial vertex: rows are reordered so
/// the non-tight inequalities come first (preserving relative order), the
/// tight block is inverted, and the tight slacks form the cobasis.
pub fn build_initial_dictionary<S: Scalar>(
    p: &HRep<S>,
    v: &InitialVertex<S>,
    policy: TolerancePolicy<S>,
) -> Result<DictionaryState<S>, Error> {
    let (m, d) = (p.m(), p.d());
    assert_eq!(
        v.tight_rows.len(),
        d,
        "initial vertex must have d tight rows"
    );
    assert!(
        v.tight_rows.windows(2).all(|w| w[0] < w[1])
            && v.tight_rows.first().is_none_or(|&r| r >= 1)
            && v.tight_rows.last().is_none_or(|&r| r <= m),
        "tight rows must be ascending indices in 1..=m"
    );
    let is_tight = {
        let mut mask = vec![false; m + 1];
        for &r in &v.tight_rows {
            mask[r] = true;
        }
        mask
    };
    let upper_rows: Vec<usize> = (1..=m).filter(|&i| !is_tight[i]).collect();
    let h_low = Mat::from_rows(
        v.tight_rows
            .iter()
            .map(|&i| p.h.row(i - 1).to_vec())
            .collect(),
    );
    let b_low: Vec<S> = v.tight_rows.iter().map(|&i| p.b[i - 1].clone()).collect();
    let h_upp = mat_or_empty(
        upper_rows
            .iter()
            .map(|&i| p.h.row(i - 1).to_vec())
            .collect(),
        d,
    );
    let b_upp: Vec<S> = upper_rows.iter().map(|&i| p.b[i - 1].clone()).collect();

    let inv = h_low.inverse(&policy).ok_or(Error::SingularBlock)?;
    let x0 = inv.mul_vec(&b_low);
    let h_upp_inv = h_upp.mul(&inv);
    let upp_value = h_upp.mul_vec(&x0);

    let cols = m + d + 2;
    let mut t = Mat::zeros(m + 1, cols);
    *t.at_mut(0, 0) = S::one();
    for k in 0..d {
        *t.at_mut(0, m + 1 + k) = S::one();
    }
    for (i, x0i) in x0.iter().enumerate() {
        *t.at_mut(1 + i, 1 + i) = S::one();
        for k in 0..d {
            *t.at_mut(1 + i, m + 1 + k) = inv.at(i, k).clone();
        }
        *t.at_mut(1 + i, cols - 1) = x0i.clone();
    }
    for i in 0..m - d {
        *t.at_mut(d + 1 + i, d + 1 + i) = S::one();
        for k in 0..d {
            *t.at_mut(d + 1 + i, m + 1 + k) = -h_upp_inv.at(i, k).clone();
        }
        *t.at_mut(d + 1 + i, cols - 1) = b_upp[i].clone() - upp_value[i].clone();
    }
    t.map_in_place(|x| policy.snap(x));

    let dict = DictionaryState {
        t,
        basis: (1..=m + 1).collect(),
        cobasis: (m + 2..=m + d + 1).collect(),
        m,
        d,
        policy,
    };
    dict.debug_validate();
    Ok(dict)
}

impl<S: Scalar> DictionaryState<S> {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Column index of the right-hand side (1-based).
    pub fn rhs_col(&self) -> usize {
        self.m + self.d + 2
    }

    /// Entry at 1-based (row, col).
    pub fn entry(&self, row: usize, col: usize) -> &S {
        self.t.at(row - 1, col - 1)
    }

    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn cobasis(&self) -> &[usize] {
        &self.cobasis
    }

    /// 1-based position of a variable in the basis.
    pub fn basis_position(&self, var: usize) -> Option<usize> {
        self.basis.iter().position(|&v| v == var).map(|i| i + 1)
    }

    /// 1-based position of a variable in the cobasis.
    pub fn cobasis_position(&self, var: usize) -> Option<usize> {
        self.cobasis.iter().position(|&v| v == var).map(|i| i + 1)
    }

    pub fn policy(&self) -> &TolerancePolicy<S> {
        &self.policy
    }

    /// Exchanges basis variable r with cobasis variable s by row reduction on
    /// column s; afterwards that column is forced to an exact unit vector.
    pub fn pivot(&mut self, r: usize, s: usize) -> Result<(), Error> {
        let tpos = self
            .basis_position(r)
            .expect("pivot: r must be in the basis");
        let spos = self
            .cobasis_position(s)
            .expect("pivot: s must be in the cobasis");
        let trow = tpos - 1;
        let scol = s - 1;
        let piv = self.t.at(trow, scol).clone();
        if self.policy.is_effectively_zero(&piv) {
            return Err(Error::ZeroPivotElement { r, s });
        }
        let inv = S::one() / piv;
        for j in 0..self.t.cols() {
            let v = self.t.at(trow, j).clone() * inv.clone();
            *self.t.at_mut(trow, j) = v;
        }
        let prow = self.t.row_vec(trow);
        for i in 0..self.t.rows() {
            if i == trow || self.t.at(i, scol).is_zero() {
                continue;
            }
            let f = self.t.at(i, scol).clone();
            for (j, pj) in prow.iter().enumerate() {
                let delta = f.clone() * pj.clone();
                *self.t.at_mut(i, j) = self.t.at(i, j).clone() - delta;
            }
        }
        self.basis[tpos - 1] = s;
        self.cobasis[spos - 1] = r;
        let policy = self.policy.clone();
        self.t.map_in_place(|x| policy.snap(x));
        for i in 0..self.t.rows() {
            *self.t.at_mut(i, scol) = if i == trow { S::one() } else { S::zero() };
        }
        Ok(())
    }

    /// Coordinates of the basic solution: entries (2..d+1) of the RHS column.
    pub fn read_vertex(&self) -> Point<S> {
        let rhs = self.rhs_col() - 1;
        (1..=self.d).map(|i| self.t.at(i, rhs).clone()).collect()
    }

    /// Direction of the ray along cobasis column s: -T(2..d+1, s).
    pub fn read_ray_direction(&self, s: usize) -> Vec<S> {
        assert!(
            self.cobasis_position(s).is_some(),
            "ray column must be cobasic"
        );
        (1..=self.d).map(|i| -self.t.at(i, s - 1).clone()).collect()
    }

    pub(crate) fn write_objective_row(&mut self, row: Vec<S>) {
        assert_eq!(row.len(), self.t.cols());
        for (j, v) in row.into_iter().enumerate() {
            *self.t.at_mut(0, j) = self.policy.snap(v);
        }
    }

    /// Structural invariants: basis prefix, slack-range cobasis, partition,
    /// and exact identity on the basis columns.
    pub fn validate(&self) -> Result<(), String> {
        let (m, d) = (self.m, self.d);
        if self.basis.len() != m + 1 || self.cobasis.len() != d {
            return Err("basis/cobasis sizes are wrong".into());
        }
        for k in 0..=d {
            if self.basis[k] != k + 1 {
                return Err(format!(
                    "basis position {} must hold variable {}",
                    k + 1,
                    k + 1
                ));
            }
        }
        if self.cobasis.iter().any(|&v| v < d + 2 || v > m + d + 1) {
            return Err("cobasis variable outside the slack range".into());
        }
        let mut all: Vec<usize> = self.basis.iter().chain(&self.cobasis).copied().collect();
        all.sort_unstable();
        if all != (1..=m + d + 1).collect::<Vec<_>>() {
            return Err("basis and cobasis do not partition the variables".into());
        }
        for (t, &var) in self.basis.iter().enumerate() {
            for i in 0..self.t.rows() {
                let want_one = i == t;
                let e = self.t.at(i, var - 1);
                if (want_one && !e.is_one()) || (!want_one && !e.is_zero()) {
                    return Err(format!(
                        "column of basis variable {var} is not a unit vector"
                    ));
                }
            }
        }
        Ok(())
    }

    /// Slack basic values are nonnegative (up to the feasibility slack).
    pub fn is_feasible(&self) -> bool {
        let rhs = self.rhs_col() - 1;
        (self.d + 1..=self.m).all(|i| self.policy.is_feasibly_nonneg(self.t.at(i, rhs)))
    }

    /// Every slack basic row of [rhs | columns 1..m+1] has a positive leading
    /// nonzero entry. (Rows of permanently basic original variables carry the
    /// vertex coordinates, which may be negative; they never enter ratio
    /// tests and are exempt.)
    pub fn is_lex_positive(&self) -> bool {
        let rhs = self.rhs_col() - 1;
        (self.d + 1..=self.m).all(|i| {
            let lead = std::iter::once(self.t.at(i, rhs))
                .chain((0..=self.m).map(|c| self.t.at(i, c)))
                .find(|e| !e.is_zero());
            lead.is_some_and(|e| e > &S::zero())
        })
    }

    pub(crate) fn debug_validate(&self) {
        debug_assert_eq!(self.validate(), Ok(()));
        debug_assert!(self.is_feasible(), "slack basic value went negative");
        debug_assert!(self.is_lex_positive(), "lex-positivity lost");
    }

    /// Residual b - Hx of the basic solution against the original system.
    pub fn basic_solution_slacks(&self, p: &HRep<S>) -> Vec<S> {
        let x = self.read_vertex();
        let hx = p.h.mul_vec(&x);
        (0..p.m()).map(|i| p.b[i].clone() - hx[i].clone()).collect()
    }

    /// Matrix rows, then `basis:` and `cobasis:` lines, for golden tests and
    /// debugging.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for i in 0..self.t.rows() {
            let line: Vec<String> = self.t.row(i).iter().map(Scalar::render).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        let basis: Vec<String> = self.basis.iter().map(usize::to_string).collect();
        let cobasis: Vec<String> = self.cobasis.iter().map(usize::to_string).collect();
        out.push_str(&format!("basis: {}\n", basis.join(" ")));
        out.push_str(&format!("cobasis: {}\n", cobasis.join(" ")));
        out
    }
}

/// Convenience for tests and tools: dictionary rows as owned vectors.
impl<S: Scalar> DictionaryState<S> {
    pub fn row_vec(&self, row: usize) -> Vec<S> {
        self.t.row_vec(row - 1)
    }

    pub fn col_vec(&self, col: usize) -> Vec<S> {
        self.t.col_vec(col - 1)
    }
}
