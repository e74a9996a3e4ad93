//! GKZ, boundary and Hurwitz vectors of a triangulation.
//!
//! Entries are indexed by the configuration order. For a triangulation `T`
//! of `(Q, A)` in dimension `n`:
//!
//! * `gkz[i]` sums the normalized volumes of the maximal simplices
//!   containing `ω_i`;
//! * `boundary[i]` sums the normalized volumes of the massive
//!   `(n-1)`-simplices (those inside a facet of `Q`) containing `ω_i`;
//! * `hurwitz = n * gkz - boundary`.

use serde::{Deserialize, Serialize};

use crate::exact::{self, Rational};
use crate::polytope::{normalized_volume, LatticePolytope, PointConfiguration};
use crate::triangulation::Triangulation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VectorKind {
    Gkz,
    Boundary,
    Hurwitz,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CharVector {
    pub kind: VectorKind,
    pub entries: Vec<i64>,
}

impl CharVector {
    pub fn sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.entries.iter().map(|&x| exact::int(x)).collect()
    }
}

pub fn gkz_vector(t: &Triangulation, config: &PointConfiguration) -> CharVector {
    let mut entries = vec![0i64; config.len()];
    for s in t.simplices() {
        for &v in s.vertices() {
            entries[v] += s.volume() as i64;
        }
    }
    CharVector {
        kind: VectorKind::Gkz,
        entries,
    }
}

/// The massive `(n-1)`-simplices of `t`.
pub fn massive_faces(t: &Triangulation, q: &LatticePolytope, config: &PointConfiguration) -> Vec<Vec<usize>> {
    t.faces(q.dim() - 1)
        .into_iter()
        .filter(|f| q.facet_containing(config, f).is_some())
        .collect()
}

pub fn boundary_vector(t: &Triangulation, q: &LatticePolytope, config: &PointConfiguration) -> CharVector {
    let mut entries = vec![0i64; config.len()];
    for face in massive_faces(t, q, config) {
        let vol = normalized_volume(&face, config).expect("faces of a triangulation are simplices") as i64;
        for &v in &face {
            entries[v] += vol;
        }
    }
    CharVector {
        kind: VectorKind::Boundary,
        entries,
    }
}

pub fn hurwitz_vector(t: &Triangulation, q: &LatticePolytope, config: &PointConfiguration) -> CharVector {
    let n = q.dim() as i64;
    let gkz = gkz_vector(t, config);
    let boundary = boundary_vector(t, q, config);
    CharVector {
        kind: VectorKind::Hurwitz,
        entries: gkz
            .entries
            .iter()
            .zip(&boundary.entries)
            .map(|(g, b)| n * g - b)
            .collect(),
    }
}
