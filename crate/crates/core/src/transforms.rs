//! Representation conversions. H-to-VR runs the enumeration from a found
//! vertex; VR-to-H lifts the generators to a pointed cone one dimension up,
//! enumerates its extreme rays, and reads each ray back as a facet.

use crate::dictionary::build_initial_dictionary;
use crate::enumeration::enumerate;
use crate::matrix::Mat;
use crate::model::{HRep, Point, VrRep};
use crate::numerics::{Scalar, TolerancePolicy};
use crate::vertex_search::{
    find_initial_vertex_with_progress, SearchProgress, VertexSearchConfig, VertexSearchOutcome,
};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HToVrOutcome<S> {
    Representation(VrRep<S>),
    /// rank(H) < d: no vertex exists to root the search at.
    NoVertex,
    /// No point satisfies every inequality.
    Empty,
}

/// Converts Hx <= b into its vertices and extreme rays.
pub fn h_to_vr<S: Scalar>(
    p: &HRep<S>,
    cfg: &VertexSearchConfig,
    policy: TolerancePolicy<S>,
) -> Result<HToVrOutcome<S>, Error> {
    h_to_vr_with_progress(p, cfg, policy, &mut |_| {})
}

/// Like [`h_to_vr`], reporting vertex-search milestones as they happen.
pub fn h_to_vr_with_progress<S: Scalar>(
    p: &HRep<S>,
    cfg: &VertexSearchConfig,
    policy: TolerancePolicy<S>,
    progress: &mut dyn FnMut(SearchProgress),
) -> Result<HToVrOutcome<S>, Error> {
    let v = match find_initial_vertex_with_progress(p, cfg, &policy, progress) {
        VertexSearchOutcome::Vertex(v) => v,
        VertexSearchOutcome::NoVertex => return Ok(HToVrOutcome::NoVertex),
        VertexSearchOutcome::Empty => return Ok(HToVrOutcome::Empty),
    };
    let dict = build_initial_dictionary(p, &v, policy)?;
    let out = enumerate(dict)?;
    Ok(HToVrOutcome::Representation(VrRep {
        rays: out.ray_directions(),
        vertices: out.vertices,
        ray_pairs: Some(out.ray_pairs),
    }))
}

/// Converts generators (vertices V, ray directions R) into a facet system.
///
/// Each vertex v becomes the cone row -(1, v), each ray r the row -(0, r);
/// the resulting cone is pointed with apex 0, and every extreme ray
/// z = (z1, .., z_{d+1}) of it corresponds to the facet
/// (-z2, .., -z_{d+1}).x <= z1 of the original polyhedron.
pub fn vr_to_h<S: Scalar>(
    vertices: &[Point<S>],
    rays: &[Vec<S>],
    cfg: &VertexSearchConfig,
    policy: TolerancePolicy<S>,
) -> Result<HRep<S>, Error> {
    if vertices.is_empty() {
        return Err(Error::EmptyInput);
    }
    let d = vertices[0].len();
    assert!(d >= 1, "generators need at least one coordinate");
    assert!(
        vertices.iter().all(|v| v.len() == d) && rays.iter().all(|r| r.len() == d),
        "all generators must share one dimension"
    );
    if rays.iter().any(|r| r.iter().all(|x| x.is_zero())) {
        return Err(Error::ZeroRay);
    }

    let span_rows: Vec<Vec<S>> = vertices[1..]
        .iter()
        .map(|v| {
            v.iter()
                .zip(&vertices[0])
                .map(|(a, b)| a.clone() - b.clone())
                .collect()
        })
        .chain(rays.iter().cloned())
        .collect();
    let span = if span_rows.is_empty() {
        Mat::empty(d)
    } else {
        Mat::from_rows(span_rows)
    };
    if span.rank(&policy) < d {
        return Err(Error::NotFullDimensional);
    }

    let cone_rows: Vec<Vec<S>> = vertices
        .iter()
        .map(|v| {
            std::iter::once(-S::one())
                .chain(v.iter().map(|x| -x.clone()))
                .collect()
        })
        .chain(rays.iter().map(|r| {
            std::iter::once(S::zero())
                .chain(r.iter().map(|x| -x.clone()))
                .collect()
        }))
        .collect();
    let cone = HRep::new(
        Mat::from_rows(cone_rows),
        vec![S::zero(); vertices.len() + rays.len()],
    );

    let apex = match find_initial_vertex_with_progress(&cone, cfg, &policy, &mut |_| {}) {
        VertexSearchOutcome::Vertex(v) => v,
        _ => {
            return Err(Error::InvariantViolation(
                "lifted cone must be pointed with apex 0".into(),
            ))
        }
    };
    let dict = build_initial_dictionary(&cone, &apex, policy.clone())?;
    let out = enumerate(dict)?;
    if out.vertices.len() != 1
        || out.vertices[0]
            .iter()
            .any(|c| !policy.is_effectively_zero(c))
    {
        return Err(Error::InvariantViolation(
            "lifted cone enumeration must yield exactly the origin".into(),
        ));
    }

    let mut h_rows = Vec::new();
    let mut b = Vec::new();
    for z in out.ray_directions() {
        h_rows.push(z[1..].iter().map(|x| -x.clone()).collect());
        b.push(z[0].clone());
    }
    Ok(HRep::new(Mat::from_rows(h_rows), b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matrix::dot;
    use crate::model::hrep_equivalent;
    use crate::numerics::{Rat, F64};

    fn exact() -> TolerancePolicy<Rat> {
        TolerancePolicy::exact()
    }

    fn cfg() -> VertexSearchConfig {
        VertexSearchConfig::default()
    }

    fn vr(p: &HRep<Rat>) -> VrRep<Rat> {
        match h_to_vr(p, &cfg(), exact()).unwrap() {
            HToVrOutcome::Representation(vr) => vr,
            other => panic!("expected a representation, got {other:?}"),
        }
    }

    fn pt(coords: &[i64]) -> Vec<Rat> {
        coords.iter().map(|&c| Rat::from_int(c)).collect()
    }

    #[test]
    fn cube_round_trips_through_both_conversions() {
        let p = fixtures::cube3();
        let rep = vr(&p);
        assert_eq!(rep.vertices.len(), 8);
        assert!(rep.rays.is_empty());
        assert_eq!(rep.ray_pairs.as_deref(), Some(&[][..]));
        let q = vr_to_h(&rep.vertices, &rep.rays, &cfg(), exact()).unwrap();
        assert_eq!(q.m(), 6);
        assert!(hrep_equivalent(&p, &q).unwrap());
        // The cube is not simplicial: every facet holds four vertices.
        for i in 1..=q.m() {
            let (h, beta) = q.inequality(i);
            let tight = rep.vertices.iter().filter(|v| &dot(h, v) == beta).count();
            assert_eq!(tight, 4);
        }
    }

    #[test]
    fn octahedron_and_simplex_round_trip() {
        for (p, nv, nf) in [
            (fixtures::cross_polytope3(), 6, 8),
            (fixtures::simplex3(), 4, 4),
            (fixtures::square_pyramid(), 5, 5),
        ] {
            let rep = vr(&p);
            assert_eq!(rep.vertices.len(), nv);
            assert!(rep.rays.is_empty());
            let q = vr_to_h(&rep.vertices, &rep.rays, &cfg(), exact()).unwrap();
            assert_eq!(q.m(), nf);
            assert!(hrep_equivalent(&p, &q).unwrap());
        }
    }

    #[test]
    fn chimney_facets_are_recovered_from_its_generators() {
        let p = fixtures::chimney();
        let rep = vr(&p);
        assert_eq!(rep.vertices.len(), 5);
        assert_eq!(rep.rays, vec![pt(&[0, 0, 1])]);
        assert_eq!(rep.ray_pairs.as_ref().map(Vec::len), Some(4));
        let q = vr_to_h(&rep.vertices, &rep.rays, &cfg(), exact()).unwrap();
        assert_eq!(q.m(), 8);
        assert!(hrep_equivalent(&p, &q).unwrap());
    }

    #[test]
    fn conversions_recover_generators_after_a_facet_pass() {
        let p = fixtures::chimney();
        let rep = vr(&p);
        let q = vr_to_h(&rep.vertices, &rep.rays, &cfg(), exact()).unwrap();
        let back = vr(&q);
        let mut got = back.vertices.clone();
        got.sort();
        let mut want = rep.vertices.clone();
        want.sort();
        assert_eq!(got, want);
        assert_eq!(back.rays, rep.rays);
    }

    #[test]
    fn every_output_inequality_holds_on_all_generators() {
        let rep = vr(&fixtures::chimney());
        let q = vr_to_h(&rep.vertices, &rep.rays, &cfg(), exact()).unwrap();
        for i in 1..=q.m() {
            let (h, beta) = q.inequality(i);
            for v in &rep.vertices {
                assert!(&dot(h, v) <= beta);
            }
            for r in &rep.rays {
                assert!(dot(h, r) <= Rat::from_int(0));
            }
        }
    }

    #[test]
    fn redundant_generators_do_not_change_the_facets() {
        let rep = vr(&fixtures::cube3());
        let mut padded = rep.vertices.clone();
        padded.push(pt(&[0, 0, 0]));
        padded.push(pt(&[1, 0, 0]));
        let q = vr_to_h(&padded, &[], &cfg(), exact()).unwrap();
        assert!(hrep_equivalent(&fixtures::cube3(), &q).unwrap());
    }

    #[test]
    fn flat_input_is_rejected_with_the_fixed_message() {
        let err = vr_to_h(&[pt(&[0, 0]), pt(&[1, 0])], &[], &cfg(), exact()).unwrap_err();
        assert_eq!(err, Error::NotFullDimensional);
        assert_eq!(err.to_string(), "VR-representation is not full dimensional");
    }

    #[test]
    fn empty_and_zero_inputs_are_rejected() {
        assert_eq!(
            vr_to_h::<Rat>(&[], &[], &cfg(), exact()).unwrap_err(),
            Error::EmptyInput
        );
        assert_eq!(
            vr_to_h(&[pt(&[0])], &[pt(&[0])], &cfg(), exact()).unwrap_err(),
            Error::ZeroRay
        );
    }

    #[test]
    fn half_line_keeps_the_reference_trivial_row() {
        let rep = vr(&fixtures::half_line());
        assert_eq!(rep.vertices, vec![pt(&[0])]);
        assert_eq!(rep.rays, vec![pt(&[1])]);
        // The lifted cone has two extreme rays; one maps to 0.x <= 1.
        let q = vr_to_h(&rep.vertices, &rep.rays, &cfg(), exact()).unwrap();
        assert_eq!(q.m(), 2);
        assert_eq!(q.inequality(1), (&pt(&[0])[..], &Rat::from_int(1)));
        assert_eq!(q.inequality(2), (&pt(&[-1])[..], &Rat::from_int(0)));
        // And converting back still recovers the generators.
        let back = vr(&q);
        assert_eq!(back.vertices, rep.vertices);
        assert_eq!(back.rays, rep.rays);
    }

    #[test]
    fn rank_deficient_and_infeasible_systems_report_outcomes() {
        let p = fixtures::hrep_from_ints(&[&[1, 1]], &[1]);
        assert_eq!(
            h_to_vr(&p, &cfg(), exact()).unwrap(),
            HToVrOutcome::NoVertex
        );
        let p = fixtures::hrep_from_ints(&[&[1], &[-1]], &[-1, 0]);
        assert_eq!(h_to_vr(&p, &cfg(), exact()).unwrap(), HToVrOutcome::Empty);
    }

    #[test]
    fn float_mode_round_trips_the_cube() {
        let p = fixtures::cube3().to_float();
        let policy: TolerancePolicy<F64> = TolerancePolicy::float_defaults();
        let rep = match h_to_vr(&p, &cfg(), policy.clone()).unwrap() {
            HToVrOutcome::Representation(r) => r,
            other => panic!("expected a representation, got {other:?}"),
        };
        assert_eq!(rep.vertices.len(), 8);
        let q = vr_to_h(&rep.vertices, &rep.rays, &cfg(), policy).unwrap();
        assert_eq!(q.m(), 6);
        assert!(hrep_equivalent(&p, &q).unwrap());
    }
}
