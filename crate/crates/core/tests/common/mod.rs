#![allow(dead_code)]

pub mod brute_force;

use toric_weights::polytope::{LatticePolytope, PointConfiguration};

pub fn polytope(vertices: &[&[i64]]) -> LatticePolytope {
    LatticePolytope::from_vertices(vertices.iter().map(|v| v.to_vec()).collect()).unwrap()
}

pub fn lattice(vertices: &[&[i64]]) -> PointConfiguration {
    polytope(vertices).lattice_points()
}

pub const SEGMENT: &[&[i64]] = &[&[0], &[2]];
pub const SEGMENT3: &[&[i64]] = &[&[0], &[3]];
pub const SQUARE: &[&[i64]] = &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]];
pub const DOUBLED_SIMPLEX: &[&[i64]] = &[&[0, 0], &[2, 0], &[0, 2]];
pub const CUBE: &[&[i64]] = &[
    &[0, 0, 0],
    &[1, 0, 0],
    &[0, 1, 0],
    &[0, 0, 1],
    &[1, 1, 0],
    &[1, 0, 1],
    &[0, 1, 1],
    &[1, 1, 1],
];
