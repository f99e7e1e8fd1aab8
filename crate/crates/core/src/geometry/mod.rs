//! Exact geometry over `Z^n` and `Q^n`.

mod hull;
mod lattice;
pub(crate) mod linalg;
mod point;

pub use hull::{convex_hull, convex_hull_lattice, Facet, RationalPolytope};
pub use lattice::{
    contains_origin_interior, count, halfspace_polytope, lattice_points_in,
    lattice_points_in_halfspaces, saturate, vertices, LatticeSet,
};
pub(crate) use lattice::{for_each_in_box, unit_facet};
pub(crate) use point::dot;
pub use point::{format_rational, parse_rational, LatticePoint, Rational, RationalPoint};
