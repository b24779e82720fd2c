//! Polyhedron representations and canonical forms.
//!
//! An `HRep` is the inequality system Hx <= b; a `VrRep` lists vertices and
//! extreme ray directions, optionally with one (origin, direction) pair per
//! emitted ray. Rays and inequalities compare through a canonical positive
//! rescaling so that representation equality is scale-free.

use crate::matrix::Mat;
use crate::numerics::Scalar;
use crate::Error;

pub type Point<S> = Vec<S>;

/// Inequality system {x in R^d : Hx <= b} with m rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep<S> {
    pub h: Mat<S>,
    pub b: Vec<S>,
}

impl<S: Scalar> HRep<S> {
    pub fn new(h: Mat<S>, b: Vec<S>) -> Self {
        assert!(h.rows() >= 1 && h.cols() >= 1, "need m >= 1 and d >= 1");
        assert_eq!(h.rows(), b.len(), "b must have one entry per row");
        HRep { h, b }
    }

    pub fn m(&self) -> usize {
        self.h.rows()
    }

    pub fn d(&self) -> usize {
        self.h.cols()
    }

    /// Row i (1-based) as the pair (h_i, b_i).
    pub fn inequality(&self, i: usize) -> (&[S], &S) {
        (self.h.row(i - 1), &self.b[i - 1])
    }

    /// The same system with every entry converted to floating point.
    pub fn to_float(&self) -> HRep<crate::numerics::F64> {
        let rows = (0..self.m())
            .map(|i| {
                self.h
                    .row(i)
                    .iter()
                    .map(|x| crate::numerics::F64::new(x.to_f64()))
                    .collect()
            })
            .collect();
        HRep::new(
            Mat::from_rows(rows),
            self.b
                .iter()
                .map(|x| crate::numerics::F64::new(x.to_f64()))
                .collect(),
        )
    }
}

/// One enumerated ray: the vertex it was discovered at and its direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayPair<S> {
    pub origin: Point<S>,
    pub direction: Vec<S>,
}

/// Vertices plus canonical extreme ray directions; `ray_pairs`, when
/// available, records the vertex at which each ray was emitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VrRep<S> {
    pub vertices: Vec<Point<S>>,
    pub rays: Vec<Vec<S>>,
    pub ray_pairs: Option<Vec<RayPair<S>>>,
}

/// A vertex of Hx <= b together with the d tight rows (1-based, ascending)
/// whose equations determine it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialVertex<S> {
    pub x0: Point<S>,
    pub tight_rows: Vec<usize>,
}

/// The positive multiple of a nonzero direction in canonical form.
pub fn canonicalize_ray<S: Scalar>(r: &[S]) -> Result<Vec<S>, Error> {
    if r.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroRay);
    }
    let mut out = r.to_vec();
    S::canonicalize_vec(&mut out);
    Ok(out)
}

/// The canonical positive rescaling of the inequality h.x <= beta.
pub fn canonicalize_inequality<S: Scalar>(h: &[S], beta: &S) -> Result<(Vec<S>, S), Error> {
    if h.iter().all(|x| x.is_zero()) {
        return Err(Error::ZeroInequality);
    }
    let mut row = h.to_vec();
    row.push(beta.clone());
    S::canonicalize_vec(&mut row);
    let beta = row.pop().expect("nonempty");
    Ok((row, beta))
}

fn canonical_rows<S: Scalar>(p: &HRep<S>) -> Result<Vec<Vec<S>>, Error> {
    let mut rows = Vec::with_capacity(p.m());
    for i in 1..=p.m() {
        let (h, b) = p.inequality(i);
        let (mut row, beta) = canonicalize_inequality(h, b)?;
        row.push(beta);
        rows.push(row);
    }
    rows.sort();
    rows.dedup_by(|a, b| vec_approx_eq(a, b));
    Ok(rows)
}

pub(crate) fn vec_approx_eq<S: Scalar>(a: &[S], b: &[S]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.approx_eq(y))
}

/// True when the two systems describe the same inequalities up to positive
/// row scaling and row order (duplicate rows collapse).
pub fn hrep_equivalent<S: Scalar>(p: &HRep<S>, q: &HRep<S>) -> Result<bool, Error> {
    if p.d() != q.d() {
        return Ok(false);
    }
    let a = canonical_rows(p)?;
    let b = canonical_rows(q)?;
    Ok(a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| vec_approx_eq(x, y)))
}
