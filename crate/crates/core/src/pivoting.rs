//! Pivot rules: the lexicographic minimum-ratio test, least-index entering
//! selection, the lexicographically minimal basis test, and the reverse test
//! that drives enumeration without look-ahead pivots.

use crate::dictionary::DictionaryState;
use crate::matrix::Mat;
use crate::numerics::Scalar;
use crate::Error;

/// All 1-based indices of rows attaining the lexicographic minimum, compared
/// column by column with exact ordering.
pub fn lex_min_rows<S: Scalar>(rows: &Mat<S>) -> Vec<usize> {
    let mut cand: Vec<usize> = (0..rows.rows()).collect();
    for j in 0..rows.cols() {
        if cand.len() <= 1 {
            break;
        }
        let min = cand
            .iter()
            .map(|&i| rows.at(i, j))
            .min()
            .expect("candidates nonempty")
            .clone();
        cand.retain(|&i| *rows.at(i, j) == min);
    }
    cand.into_iter().map(|i| i + 1).collect()
}

/// The leaving basis variable selected by the lexicographic ratio test for
/// entering column s, or None when no slack row bounds the step (a ray).
///
/// Rows compete on [rhs | columns 1..m+1] divided by their entry in column s;
/// only slack rows with a strictly positive entry participate. A tie would
/// mean two rows of the basis inverse are proportional, which cannot happen,
/// so `NonUniqueLexMin` guards against corrupted states only.
pub fn lex_min_ratio<S: Scalar>(
    dict: &DictionaryState<S>,
    s: usize,
) -> Result<Option<usize>, Error> {
    assert!(
        dict.cobasis_position(s).is_some(),
        "ratio test requires a cobasic entering column"
    );
    let rhs = dict.rhs_col();
    let rows: Vec<usize> = (dict.d() + 2..=dict.m() + 1)
        .filter(|&t| dict.entry(t, s) > &S::zero())
        .collect();
    if rows.is_empty() {
        return Ok(None);
    }
    let ratios = Mat::from_rows(
        rows.iter()
            .map(|&t| {
                let a = dict.entry(t, s);
                std::iter::once(dict.entry(t, rhs))
                    .chain((1..=dict.m() + 1).map(|c| dict.entry(t, c)))
                    .map(|e| e.clone() / a.clone())
                    .collect()
            })
            .collect(),
    );
    let winners = lex_min_rows(&ratios);
    match winners.as_slice() {
        [w] => Ok(Some(dict.basis()[rows[w - 1] - 1])),
        _ => Err(Error::NonUniqueLexMin),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotSelection {
    /// No negative objective coefficient remains.
    Optimal,
    /// The entering column admits an unbounded increase.
    Unbounded { entering: usize },
    /// Exchange `leaving` (basic) with `entering` (cobasic).
    Step { leaving: usize, entering: usize },
}

/// Least-index rule: the entering variable is the smallest-index column with
/// a negative objective coefficient; the leaving variable comes from the
/// lexicographic ratio test. Basis columns are unit vectors, so only cobasic
/// columns can be selected.
pub fn select_pivot<S: Scalar>(dict: &DictionaryState<S>) -> Result<PivotSelection, Error> {
    let entering = (1..=dict.m() + dict.d() + 1).find(|&c| dict.entry(1, c) < &S::zero());
    let Some(entering) = entering else {
        return Ok(PivotSelection::Optimal);
    };
    Ok(match lex_min_ratio(dict, entering)? {
        None => PivotSelection::Unbounded { entering },
        Some(leaving) => PivotSelection::Step { leaving, entering },
    })
}

/// Whether the current basis is the lexicographically smallest one describing
/// its basic solution. A smaller basis exists exactly when some cobasic s
/// could replace a larger basis variable through a degenerate exchange; when
/// testing on behalf of a ray column v, only exchanges that keep the ray
/// (rows with a zero entry in column v) count.
pub fn is_lexmin_basis<S: Scalar>(dict: &DictionaryState<S>, ray: Option<usize>) -> bool {
    let rhs = dict.rhs_col();
    for &s in dict.cobasis() {
        for t in dict.d() + 2..=dict.m() + 1 {
            if dict.basis()[t - 1] <= s
                || !dict.entry(t, rhs).is_zero()
                || dict.entry(t, s).is_zero()
            {
                continue;
            }
            if let Some(v) = ray {
                if !dict.entry(t, v).is_zero() {
                    continue;
                }
            }
            return false;
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReverseResult {
    /// Pivoting the ratio variable with the probed column lands on a
    /// dictionary whose forward pivot returns here.
    pub is_reverse: bool,
    /// The leaving variable the ratio test picked for the probed column, when
    /// one exists.
    pub ratio_var: Option<usize>,
}

/// Decides, without pivoting, whether the exchange (u, v) — u from the ratio
/// test, v cobasic — produces a child whose forward rule pivots straight
/// back. That holds when the objective coefficient of v is strictly positive
/// (so u gets a negative coefficient in the child) and no cobasic column
/// smaller than u goes negative in the child's objective row.
pub fn reverse_step<S: Scalar>(
    dict: &DictionaryState<S>,
    v: usize,
) -> Result<ReverseResult, Error> {
    let Some(u) = lex_min_ratio(dict, v)? else {
        return Ok(ReverseResult {
            is_reverse: false,
            ratio_var: None,
        });
    };
    let result = |is_reverse| ReverseResult {
        is_reverse,
        ratio_var: Some(u),
    };
    let w0v = dict.entry(1, v);
    if w0v <= &S::zero() {
        return Ok(result(false));
    }
    let i = dict.basis_position(u).expect("ratio variable is basic");
    let ratio = w0v.clone() / dict.entry(i, v).clone();
    for &j in dict.cobasis() {
        if j == v || j >= u {
            continue;
        }
        let child_cost = dict.entry(1, j).clone() - ratio.clone() * dict.entry(i, j).clone();
        if !dict.policy().is_feasibly_nonneg(&child_cost) {
            return Ok(result(false));
        }
    }
    Ok(result(true))
}
