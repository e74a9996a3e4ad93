//! Triangulations of point configurations: lower hulls of liftings, placing
//! triangulations, bistellar flips, regularity certificates and the
//! enumeration of all regular triangulations.

mod enumerate;
mod flip;
mod lower_hull;
mod regularity;

pub use enumerate::{enumerate_regular, Enumeration, EnumerationOptions, RegularTriangulation};
pub use flip::{circuits, flips, Circuit};
pub use lower_hull::{lower_hull_subdivision, Subdivision};
pub use regularity::{cone_system, is_regular, ConeConstraint, RegularityCertificate};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::polytope::{PointConfiguration, Simplex};

/// Sorted list of sorted vertex tuples; the canonical form of a triangulation.
pub type TriangulationKey = Vec<Vec<usize>>;

/// A set of full-dimensional simplices over a point configuration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    dim: usize,
    simplices: Vec<Simplex>,
}

/// An `(n-1)`-face shared by two maximal simplices, with the two vertices
/// opposite to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    pub face: Vec<usize>,
    pub opposite: (usize, usize),
}

impl Triangulation {
    /// Builds from vertex tuples, checking that every tuple is a
    /// full-dimensional simplex. Covering and intersection properties are
    /// the caller's responsibility.
    pub fn new(simplices: Vec<Vec<usize>>, config: &PointConfiguration) -> Result<Self> {
        let dim = config.dim();
        let mut out = Vec::with_capacity(simplices.len());
        for s in simplices {
            let s = Simplex::new(s, config)?;
            if s.dim() != dim {
                return Err(Error::WrongSimplexDimension {
                    expected: dim,
                    got: s.dim(),
                });
            }
            out.push(s);
        }
        out.sort();
        out.dedup();
        Ok(Self { dim, simplices: out })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn key(&self) -> TriangulationKey {
        self.simplices.iter().map(|s| s.vertices().to_vec()).collect()
    }

    /// Sum of normalized volumes of the maximal simplices.
    pub fn volume(&self) -> u64 {
        self.simplices.iter().map(Simplex::volume).sum()
    }

    /// Points used as vertices, `Σ_T(0)`.
    pub fn used_points(&self) -> BTreeSet<usize> {
        self.simplices
            .iter()
            .flat_map(|s| s.vertices().iter().copied())
            .collect()
    }

    /// All `k`-dimensional faces, `Σ_T(k)`, sorted.
    pub fn faces(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = BTreeSet::new();
        for s in &self.simplices {
            for idx in exact::combinations(s.vertices().len(), k + 1) {
                out.insert(idx.iter().map(|&i| s.vertices()[i]).collect::<Vec<_>>());
            }
        }
        out.into_iter().collect()
    }

    fn ridge_incidence(&self) -> BTreeMap<Vec<usize>, Vec<usize>> {
        let mut map: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for s in &self.simplices {
            let v = s.vertices();
            for skip in 0..v.len() {
                let face: Vec<usize> = v
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &x)| x)
                    .collect();
                map.entry(face).or_default().push(v[skip]);
            }
        }
        map
    }

    /// `(n-1)`-faces contained in exactly one maximal simplex.
    pub fn boundary_faces(&self) -> Vec<Vec<usize>> {
        self.ridge_incidence()
            .into_iter()
            .filter(|(_, opp)| opp.len() == 1)
            .map(|(f, _)| f)
            .collect()
    }

    /// `(n-1)`-faces shared by two maximal simplices.
    pub fn interior_walls(&self) -> Vec<Wall> {
        self.ridge_incidence()
            .into_iter()
            .filter(|(_, opp)| opp.len() == 2)
            .map(|(face, opp)| Wall {
                face,
                opposite: (opp[0], opp[1]),
            })
            .collect()
    }

    /// A maximal simplex containing the point (closed), with barycentric
    /// coordinates of the point in it.
    pub fn locate(&self, config: &PointConfiguration, x: &[Rational]) -> Option<(usize, Vec<Rational>)> {
        self.simplices.iter().enumerate().find_map(|(i, s)| {
            let bary = exact::barycentric(&config.refs(s.vertices()), x)?;
            bary.iter()
                .all(|b| *b >= Rational::from_integer(0.into()))
                .then_some((i, bary))
        })
    }
}

impl fmt::Display for Triangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.simplices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", s.vertices())?;
        }
        write!(f, "}}")
    }
}

/// Integral heights, one per point, normalized so that the maximum is 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Lifting(Vec<i64>);

impl Lifting {
    /// Shifts by a constant so that `max = 0`. Constant shifts do not change
    /// the induced subdivision.
    pub fn new(heights: Vec<i64>) -> Self {
        let max = heights.iter().copied().max().unwrap_or(0);
        Self(heights.into_iter().map(|h| h - max).collect())
    }

    pub fn heights(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.0.iter().map(|&h| exact::int(h)).collect()
    }
}

/// Incremental placing triangulation for the given insertion order (a
/// permutation of the point indices). A point inside the hull of the points
/// placed before it stays unused; a point outside is coned to every visible
/// boundary face.
///
/// Realized as the lower hull of the heights `B^rank`, where `B` exceeds the
/// Hadamard bound of the homogenized point matrix, so the sign of every
/// lifted orientation test is decided by its latest-placed point.
pub fn placing_triangulation(config: &PointConfiguration, order: &[usize]) -> Result<Triangulation> {
    let n = config.dim();
    let mut seen = vec![false; config.len()];
    if order.len() != config.len()
        || order
            .iter()
            .any(|&i| i >= seen.len() || std::mem::replace(&mut seen[i], true))
    {
        return Err(Error::InvalidInput(
            "placing order must be a permutation of the points".into(),
        ));
    }
    let refs: Vec<&[i64]> = config.points().iter().map(Vec::as_slice).collect();
    let rank = exact::affine_rank(&refs);
    if rank < n {
        return Err(Error::Degenerate { rank, dim: n });
    }
    let norm2: i64 = config
        .points()
        .iter()
        .map(|p| 1 + p.iter().map(|x| x * x).sum::<i64>())
        .max()
        .unwrap_or(1);
    let base = Pow::pow(BigInt::from(norm2), n.div_ceil(2) + 1) + BigInt::from(2);
    let mut heights = vec![Rational::one(); config.len()];
    let mut h = BigInt::one();
    for &i in order {
        heights[i] = Rational::from_integer(h.clone());
        h *= &base;
    }
    let sub = lower_hull::lower_hull_rational(config, &heights);
    sub.to_triangulation(config)
        .ok_or_else(|| Error::InvalidInput("placing lifting produced a non-simplicial hull".into()))
}
