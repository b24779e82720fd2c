//! Initial vertex search: random d-subset probes, then a systematic
//! lexicographic scan over all d-subsets of rows.
//!
//! A candidate subset is accepted when its rows form a nonsingular block
//! whose solution satisfies every inequality (up to the feasibility slack in
//! float mode). The scan order makes the outcome deterministic for a given
//! seed; with `deterministic_only` the probing phase is skipped entirely.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::matrix::Mat;
use crate::model::{HRep, InitialVertex};
use crate::numerics::{Scalar, TolerancePolicy};
use crate::subsets::SubsetIndicator;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSearchConfig {
    /// Number of random d-subset probes before the systematic scan.
    pub probe_limit: usize,
    pub rng_seed: u64,
    /// Skip the probing phase and scan subsets lexicographically only.
    pub deterministic_only: bool,
}

impl Default for VertexSearchConfig {
    fn default() -> Self {
        VertexSearchConfig {
            probe_limit: 10,
            rng_seed: 0,
            deterministic_only: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexSearchOutcome<S> {
    Vertex(InitialVertex<S>),
    /// rank(H) < d: the polyhedron contains a line or is empty; no vertex.
    NoVertex,
    /// Every subset was scanned without an acceptable candidate.
    Empty,
}

/// Milestones reported while searching, for user-facing progress output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchProgress {
    SystematicScanStarted,
    VertexFound,
}

/// Checks one d-subset of rows (1-based, ascending): the block must be
/// nonsingular and its solution feasible for the whole system.
pub fn accept_vertex_candidate<S: Scalar>(
    p: &HRep<S>,
    rows: &[usize],
    policy: &TolerancePolicy<S>,
) -> Option<InitialVertex<S>> {
    let d = p.d();
    assert_eq!(rows.len(), d, "candidate must have d rows");
    debug_assert!(rows.windows(2).all(|w| w[0] < w[1]), "rows must ascend");
    let block = Mat::from_rows(rows.iter().map(|&i| p.h.row(i - 1).to_vec()).collect());
    let rhs: Vec<S> = rows.iter().map(|&i| p.b[i - 1].clone()).collect();
    let x = block.solve(&rhs, policy)?;
    let residual = p.h.mul_vec(&x);
    for (bi, ri) in p.b.iter().zip(&residual) {
        let slack = bi.clone() - ri.clone();
        if !policy.is_feasibly_nonneg(&slack) {
            return None;
        }
    }
    Some(InitialVertex {
        x0: x,
        tight_rows: rows.to_vec(),
    })
}

pub fn find_initial_vertex<S: Scalar>(
    p: &HRep<S>,
    cfg: &VertexSearchConfig,
    policy: &TolerancePolicy<S>,
) -> VertexSearchOutcome<S> {
    find_initial_vertex_with_progress(p, cfg, policy, &mut |_| {})
}

pub fn find_initial_vertex_with_progress<S: Scalar>(
    p: &HRep<S>,
    cfg: &VertexSearchConfig,
    policy: &TolerancePolicy<S>,
    progress: &mut dyn FnMut(SearchProgress),
) -> VertexSearchOutcome<S> {
    let (m, d) = (p.m(), p.d());
    if p.h.rank(policy) < d {
        return VertexSearchOutcome::NoVertex;
    }
    if !cfg.deterministic_only {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
        let mut perm: Vec<usize> = (1..=m).collect();
        for _ in 0..cfg.probe_limit {
            perm.shuffle(&mut rng);
            let mut rows = perm[..d].to_vec();
            rows.sort_unstable();
            if let Some(v) = accept_vertex_candidate(p, &rows, policy) {
                progress(SearchProgress::VertexFound);
                return VertexSearchOutcome::Vertex(v);
            }
        }
    }
    progress(SearchProgress::SystematicScanStarted);
    let mut z = SubsetIndicator::first(m, d);
    loop {
        if let Some(v) = accept_vertex_candidate(p, &z.ones(), policy) {
            progress(SearchProgress::VertexFound);
            return VertexSearchOutcome::Vertex(v);
        }
        // The current subset is examined before the end-of-scan test, so the
        // right-packed final subset is never skipped.
        if z.is_right_packed() {
            return VertexSearchOutcome::Empty;
        }
        z = z.next_subset();
    }
}
