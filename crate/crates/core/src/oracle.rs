//! Brute-force reference implementations over exact rationals, for checking
//! the enumeration and conversion engines on small instances. They scan all
//! row or generator subsets, so they are deliberately capped at tiny sizes.

use crate::matrix::{dot, Mat};
use crate::model::{canonicalize_inequality, canonicalize_ray, HRep, Point};
use crate::numerics::{Rat, Scalar, TolerancePolicy};
use itertools::Itertools;
use num::Zero;
use std::collections::BTreeSet;

const MAX_ROWS: usize = 12;
const MAX_DIM: usize = 4;

fn assert_small(m: usize, d: usize) {
    assert!(
        m <= MAX_ROWS && d <= MAX_DIM,
        "oracles are limited to {MAX_ROWS} rows and dimension {MAX_DIM}"
    );
}

/// Every vertex of Hx <= b: solutions of d-row equality subsystems that
/// satisfy all inequalities. Sorted and distinct.
pub fn oracle_vertices(p: &HRep<Rat>) -> Vec<Point<Rat>> {
    assert_small(p.m(), p.d());
    let policy = TolerancePolicy::exact();
    let mut out: BTreeSet<Point<Rat>> = BTreeSet::new();
    for rows in (1..=p.m()).combinations(p.d()) {
        let block = Mat::from_rows(rows.iter().map(|&i| p.h.row(i - 1).to_vec()).collect());
        let rhs: Vec<Rat> = rows.iter().map(|&i| p.b[i - 1].clone()).collect();
        let Some(x) = block.solve(&rhs, &policy) else {
            continue;
        };
        let hx = p.h.mul_vec(&x);
        if (0..p.m()).all(|i| hx[i] <= p.b[i]) {
            out.insert(x);
        }
    }
    out.into_iter().collect()
}

/// Every extreme direction of the recession cone {t : Ht <= 0}: nullspace
/// directions of (d-1)-row subsets of rank d-1, kept in the signs that stay
/// inside the cone. Canonical, sorted, distinct.
pub fn oracle_rays(p: &HRep<Rat>) -> Vec<Vec<Rat>> {
    assert_small(p.m(), p.d());
    let policy = TolerancePolicy::exact();
    let mut out: BTreeSet<Vec<Rat>> = BTreeSet::new();
    for rows in (1..=p.m()).combinations(p.d() - 1) {
        let block = if rows.is_empty() {
            Mat::empty(p.d())
        } else {
            Mat::from_rows(rows.iter().map(|&i| p.h.row(i - 1).to_vec()).collect())
        };
        let Some(t) = block.nullspace_vector(&policy) else {
            continue;
        };
        for dir in [t.clone(), t.iter().map(|x| -x.clone()).collect()] {
            let ht = p.h.mul_vec(&dir);
            if ht.iter().all(|v| v <= &Rat::zero()) {
                out.insert(canonicalize_ray(&dir).expect("nullspace vector is nonzero"));
            }
        }
    }
    out.into_iter().collect()
}

/// Every facet of conv(V) + cone(R) for full-dimensional input: hyperplanes
/// spanned by d lifted generators with all generators on one side, oriented
/// inward. Canonical (h, beta) pairs, sorted and distinct.
pub fn oracle_facets(vertices: &[Point<Rat>], rays: &[Vec<Rat>]) -> Vec<(Vec<Rat>, Rat)> {
    assert!(!vertices.is_empty(), "facet oracle needs a vertex");
    let d = vertices[0].len();
    assert_small(vertices.len() + rays.len(), d);
    let policy = TolerancePolicy::exact();

    // Lifted coordinates: a hyperplane h.x = beta holds a vertex v when
    // (v, -1).(h, beta) = 0 and a ray r when (r, 0).(h, beta) = 0.
    let lifted: Vec<Vec<Rat>> = vertices
        .iter()
        .map(|v| v.iter().cloned().chain([-Rat::from_int(1)]).collect())
        .chain(
            rays.iter()
                .map(|r| r.iter().cloned().chain([Rat::zero()]).collect()),
        )
        .collect();

    let inside = |h: &[Rat], beta: &Rat| {
        vertices.iter().all(|v| &dot(h, v) <= beta) && rays.iter().all(|r| dot(h, r) <= Rat::zero())
    };
    let all_tight = |h: &[Rat], beta: &Rat| {
        vertices.iter().all(|v| &dot(h, v) == beta) && rays.iter().all(|r| dot(h, r) == Rat::zero())
    };

    let mut out: BTreeSet<(Vec<Rat>, Rat)> = BTreeSet::new();
    for subset in lifted.iter().combinations(d) {
        let block = Mat::from_rows(subset.into_iter().cloned().collect());
        let Some(z) = block.nullspace_vector(&policy) else {
            continue;
        };
        let (h, beta) = (&z[..d], &z[d]);
        if h.iter().all(Zero::is_zero) || all_tight(h, beta) {
            continue;
        }
        let oriented = if inside(h, beta) {
            Some((h.to_vec(), beta.clone()))
        } else {
            let h_neg: Vec<Rat> = h.iter().map(|x| -x.clone()).collect();
            let beta_neg = -beta.clone();
            inside(&h_neg, &beta_neg).then_some((h_neg, beta_neg))
        };
        if let Some((h, beta)) = oriented {
            out.insert(canonicalize_inequality(&h, &beta).expect("h is nonzero"));
        }
    }
    out.into_iter().collect()
}
