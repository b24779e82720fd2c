//! Depth-first reverse search over the pivot tree rooted at an initial
//! dictionary. Every vertex of the polyhedron is reported exactly once (at
//! its lexicographically minimal basis) and every extreme ray exactly once
//! per vertex it is incident to, as an (origin, direction) pair.

use crate::dictionary::DictionaryState;
use crate::model::{canonicalize_ray, vec_approx_eq, Point, RayPair};
use crate::numerics::Scalar;
use crate::pivoting::{is_lexmin_basis, reverse_step, select_pivot, PivotSelection};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerationEvent<S> {
    Vertex(Point<S>),
    RayPair(RayPair<S>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationOutput<S> {
    pub vertices: Vec<Point<S>>,
    pub ray_pairs: Vec<RayPair<S>>,
}

impl<S: Scalar> EnumerationOutput<S> {
    /// Distinct canonical ray directions in order of first emission.
    pub fn ray_directions(&self) -> Vec<Vec<S>> {
        let mut out: Vec<Vec<S>> = Vec::new();
        for pair in &self.ray_pairs {
            if !out.iter().any(|d| vec_approx_eq(d, &pair.direction)) {
                out.push(pair.direction.clone());
            }
        }
        out
    }
}

/// Runs the search and collects the emitted vertices and ray pairs.
pub fn enumerate<S: Scalar>(dict: DictionaryState<S>) -> Result<EnumerationOutput<S>, Error> {
    let mut out = EnumerationOutput {
        vertices: Vec::new(),
        ray_pairs: Vec::new(),
    };
    enumerate_stream(dict, |ev| match ev {
        EnumerationEvent::Vertex(v) => out.vertices.push(v),
        EnumerationEvent::RayPair(p) => out.ray_pairs.push(p),
    })?;
    Ok(out)
}

/// Runs the search, handing each emission to `on_event` as it happens.
pub fn enumerate_stream<S: Scalar>(
    dict: DictionaryState<S>,
    mut on_event: impl FnMut(EnumerationEvent<S>),
) -> Result<(), Error> {
    enumerate_inspect(dict, &mut on_event, |_| {})
}

/// Like [`enumerate_stream`], additionally reporting the dictionary at the
/// start and after every pivot, so callers can audit the walk.
pub fn enumerate_inspect<S: Scalar>(
    mut dict: DictionaryState<S>,
    mut on_event: impl FnMut(EnumerationEvent<S>),
    mut on_state: impl FnMut(&DictionaryState<S>),
) -> Result<(), Error> {
    assert!(
        dict.basis().iter().enumerate().all(|(i, &v)| v == i + 1),
        "enumeration must start from a freshly built dictionary"
    );
    on_state(&dict);
    let d = dict.d();
    let mut j = 1usize;
    loop {
        while j <= d {
            let v = dict.cobasis()[j - 1];
            let rev = reverse_step(&dict, v)?;
            if rev.is_reverse {
                let u = rev.ratio_var.expect("a reversal has a ratio variable");
                dict.pivot(u, v)?;
                dict.debug_validate();
                on_state(&dict);
                if is_lexmin_basis(&dict, None) {
                    on_event(EnumerationEvent::Vertex(dict.read_vertex()));
                }
                j = 1;
            } else {
                if rev.ratio_var.is_none() && is_lexmin_basis(&dict, Some(v)) {
                    let direction = canonicalize_ray(&dict.read_ray_direction(v))
                        .map_err(|_| Error::InvariantViolation("enumerated a zero ray".into()))?;
                    on_event(EnumerationEvent::RayPair(RayPair {
                        origin: dict.read_vertex(),
                        direction,
                    }));
                }
                j += 1;
            }
        }
        // Every cobasis position probed: take the forward pivot back toward
        // the root and resume scanning after the column we returned through.
        match select_pivot(&dict)? {
            PivotSelection::Optimal => {
                // Only the root dictionary is forward-optimal, and its basis
                // is the smallest possible one, so it always reports.
                on_event(EnumerationEvent::Vertex(dict.read_vertex()));
                return Ok(());
            }
            PivotSelection::Unbounded { .. } => {
                return Err(Error::InvariantViolation(
                    "forward rule reported an unbounded step while backtracking".into(),
                ));
            }
            PivotSelection::Step { leaving, entering } => {
                let pos = dict
                    .cobasis_position(entering)
                    .expect("entering variable is cobasic");
                dict.pivot(leaving, entering)?;
                dict.debug_validate();
                on_state(&dict);
                j = pos + 1;
            }
        }
    }
}
