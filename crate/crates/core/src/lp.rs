//! Linear programming over a dictionary: install an objective row, then run
//! least-index entering selection with the lexicographic ratio test, which
//! cannot cycle. Maximization is the native sense.

use crate::dictionary::{build_initial_dictionary, DictionaryState};
use crate::model::{HRep, Point};
use crate::numerics::{Scalar, TolerancePolicy};
use crate::pivoting::{select_pivot, PivotSelection};
use crate::vertex_search::{
    find_initial_vertex_with_progress, SearchProgress, VertexSearchConfig, VertexSearchOutcome,
};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpResult<S> {
    Optimal { x: Point<S>, value: S },
    Unbounded,
}

/// Rewrites the objective row so that variable 1 tracks c.x: zero on basis
/// columns, c.T(2..d+1, s) on each cobasic column s, and the current value
/// c.x on the right-hand side.
pub fn install_objective<S: Scalar>(dict: &mut DictionaryState<S>, c: &[S]) {
    assert_eq!(
        c.len(),
        dict.d(),
        "objective must have one entry per coordinate"
    );
    let cols = dict.m() + dict.d() + 2;
    let mut row = vec![S::zero(); cols];
    row[0] = S::one();
    let weight = |col: usize| -> S {
        (1..=dict.d())
            .map(|i| c[i - 1].clone() * dict.entry(1 + i, col).clone())
            .fold(S::zero(), |acc, t| acc + t)
    };
    for &s in dict.cobasis() {
        row[s - 1] = weight(s);
    }
    row[cols - 1] = weight(cols);
    dict.write_objective_row(row);
}

/// Maximizes c.x starting from the given feasible dictionary.
pub fn solve_lp<S: Scalar>(dict: &mut DictionaryState<S>, c: &[S]) -> Result<LpResult<S>, Error> {
    install_objective(dict, c);
    let rhs = dict.rhs_col();
    loop {
        match select_pivot(dict)? {
            PivotSelection::Optimal => {
                return Ok(LpResult::Optimal {
                    x: dict.read_vertex(),
                    value: dict.entry(1, rhs).clone(),
                });
            }
            PivotSelection::Unbounded { .. } => return Ok(LpResult::Unbounded),
            PivotSelection::Step { leaving, entering } => {
                let before = dict.entry(1, rhs).clone();
                dict.pivot(leaving, entering)?;
                dict.debug_validate();
                debug_assert!(
                    dict.entry(1, rhs) >= &before,
                    "objective value must not decrease"
                );
            }
        }
    }
}

/// Finds a vertex of Hx <= b and maximizes c.x from there.
pub fn maximize<S: Scalar>(
    c: &[S],
    p: &HRep<S>,
    cfg: &VertexSearchConfig,
    policy: TolerancePolicy<S>,
) -> Result<LpResult<S>, Error> {
    maximize_with_progress(c, p, cfg, policy, &mut |_| {})
}

/// Like [`maximize`], reporting vertex-search milestones as they happen.
pub fn maximize_with_progress<S: Scalar>(
    c: &[S],
    p: &HRep<S>,
    cfg: &VertexSearchConfig,
    policy: TolerancePolicy<S>,
    progress: &mut dyn FnMut(SearchProgress),
) -> Result<LpResult<S>, Error> {
    match find_initial_vertex_with_progress(p, cfg, &policy, progress) {
        VertexSearchOutcome::Vertex(v) => {
            let mut dict = build_initial_dictionary(p, &v, policy)?;
            solve_lp(&mut dict, c)
        }
        VertexSearchOutcome::NoVertex => Err(Error::NoVertex),
        VertexSearchOutcome::Empty => Err(Error::EmptyPolyhedron),
    }
}
