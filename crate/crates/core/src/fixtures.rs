//! Small polyhedra shared by the test suite and handy for experiments.

use crate::io;
use crate::matrix::Mat;
use crate::model::HRep;
use crate::numerics::{Rat, Scalar};

fn hrep(text: &str) -> HRep<Rat> {
    io::parse_hrep(text).expect("fixture must parse")
}

/// Integer-entry inequality system, for ad-hoc instances in tests.
pub fn hrep_from_ints(rows: &[&[i64]], b: &[i64]) -> HRep<Rat> {
    HRep::new(
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                .collect(),
        ),
        b.iter().map(|&x| Rat::from_int(x)).collect(),
    )
}

/// Unit box opening into a chimney towards +z: five vertices and four
/// (origin, direction) ray pairs, all with direction (0, 0, 1). The corner
/// (-1, -1, 0) is degenerate (four tight rows).
pub fn chimney() -> HRep<Rat> {
    hrep(
        "hrep\n8 3\n\
         -1 0 0 1\n\
         0 -1 0 1\n\
         1 0 0 1\n\
         0 1 0 1\n\
         1 0 -1 1\n\
         0 1 -1 1\n\
         -1 0 -1 1\n\
         0 -1 -1 1\n\
         end\n",
    )
}

/// A slightly tilted box whose initial dictionary at the corner with tight
/// rows (1, 3, 5) has terminating decimal entries.
pub fn tilted_cube() -> HRep<Rat> {
    hrep(
        "hrep\n6 3\n\
         1 0.1 -0.3 0.9\n\
         -1 0.4 -0.2 1.1\n\
         0 1 0.1 1.3\n\
         0 -1 0.7 0.8\n\
         0 0 1 0.8\n\
         0 0.1 -1 1.2\n\
         end\n",
    )
}

/// The cube [-1, 1]^3: 8 vertices, 6 facets with 4 vertices each.
pub fn cube3() -> HRep<Rat> {
    hrep(
        "hrep\n6 3\n\
         1 0 0 1\n\
         -1 0 0 1\n\
         0 1 0 1\n\
         0 -1 0 1\n\
         0 0 1 1\n\
         0 0 -1 1\n\
         end\n",
    )
}

/// The octahedron |x| + |y| + |z| <= 1: 6 vertices, 8 facets.
pub fn cross_polytope3() -> HRep<Rat> {
    hrep(
        "hrep\n8 3\n\
         1 1 1 1\n\
         1 1 -1 1\n\
         1 -1 1 1\n\
         1 -1 -1 1\n\
         -1 1 1 1\n\
         -1 1 -1 1\n\
         -1 -1 1 1\n\
         -1 -1 -1 1\n\
         end\n",
    )
}

/// The standard 3-simplex: 4 vertices, 4 facets.
pub fn simplex3() -> HRep<Rat> {
    hrep(
        "hrep\n4 3\n\
         -1 0 0 0\n\
         0 -1 0 0\n\
         0 0 -1 0\n\
         1 1 1 1\n\
         end\n",
    )
}

/// Square pyramid with base corners (+-1, +-1, 0) and a degenerate apex at
/// (0, 0, 1) where four facets meet.
pub fn square_pyramid() -> HRep<Rat> {
    hrep(
        "hrep\n5 3\n\
         0 0 -1 0\n\
         1 0 1 1\n\
         -1 0 1 1\n\
         0 1 1 1\n\
         0 -1 1 1\n\
         end\n",
    )
}

/// The interval [0, 1] on the line.
pub fn interval01() -> HRep<Rat> {
    hrep("hrep\n2 1\n-1 0\n1 1\nend\n")
}

/// The half-line x >= 0 written as -x <= 0.
pub fn half_line() -> HRep<Rat> {
    hrep("hrep\n1 1\n-1 0\nend\n")
}

/// The single point {0} on the line.
pub fn point_zero() -> HRep<Rat> {
    hrep("hrep\n2 1\n1 0\n-1 0\nend\n")
}
