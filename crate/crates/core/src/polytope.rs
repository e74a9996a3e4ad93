//! Lattice polytopes, their point configurations and lattice volumes.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, det, lattice_index, IntMatrix, Rational};

pub type Point = Vec<i64>;

/// Facet `{x : <x, normal> + offset = 0}`; the polytope lies on the side
/// where `<x, normal> + offset >= 0`. The normal is primitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
}

impl Facet {
    pub fn eval(&self, x: &[i64]) -> i64 {
        self.normal.iter().zip(x).map(|(u, v)| u * v).sum::<i64>() + self.offset
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.eval(x) == 0
    }
}

/// Full-dimensional lattice polytope with both descriptions.
#[derive(Debug, Clone)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Point>,
    facets: Vec<Facet>,
    measures: OnceLock<(u64, Vec<u64>)>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices && self.facets == other.facets
    }
}

impl LatticePolytope {
    /// Convex hull of integer points. Non-extreme input points are dropped.
    pub fn from_vertices(points: Vec<Point>) -> Result<Self> {
        let dim = points
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidInput("no vertices given".into()))?;
        if dim == 0 {
            return Err(Error::InvalidInput("points must have at least one coordinate".into()));
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.len(),
            });
        }
        let points: Vec<Point> = points.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let refs: Vec<&[i64]> = points.iter().map(Vec::as_slice).collect();
        let rank = exact::affine_rank(&refs);
        if rank < dim {
            return Err(Error::Degenerate { rank, dim });
        }

        let mut facets = BTreeSet::new();
        for subset in exact::combinations(points.len(), dim) {
            let base = &points[subset[0]];
            let diffs: Vec<Vec<i64>> = subset[1..]
                .iter()
                .map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            let Some(normal) = orthogonal_complement(&diffs, dim) else {
                continue;
            };
            let offset = -dot_i64(&normal, base);
            let facet = Facet { normal, offset };
            let signs: Vec<i64> = points.iter().map(|p| facet.eval(p).signum()).collect();
            let facet = if signs.iter().all(|&s| s >= 0) {
                facet
            } else if signs.iter().all(|&s| s <= 0) {
                Facet {
                    normal: facet.normal.iter().map(|v| -v).collect(),
                    offset: -facet.offset,
                }
            } else {
                continue;
            };
            facets.insert(facet);
        }
        let facets: Vec<Facet> = facets.into_iter().collect();

        let vertices = points
            .into_iter()
            .filter(|p| {
                let tight: Vec<Vec<Rational>> = facets
                    .iter()
                    .filter(|f| f.contains(p))
                    .map(|f| f.normal.iter().map(|&v| exact::int(v)).collect())
                    .collect();
                exact::rank(&tight) == dim
            })
            .collect();

        Ok(Self {
            dim,
            vertices,
            facets,
            measures: OnceLock::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.facets.iter().all(|f| f.eval(x) >= 0)
    }

    /// All lattice points, in lexicographic order.
    pub fn lattice_points(&self) -> PointConfiguration {
        let lo: Vec<i64> = (0..self.dim)
            .map(|d| self.vertices.iter().map(|v| v[d]).min().unwrap())
            .collect();
        let hi: Vec<i64> = (0..self.dim)
            .map(|d| self.vertices.iter().map(|v| v[d]).max().unwrap())
            .collect();
        let mut points = Vec::new();
        let mut cur = lo.clone();
        'outer: loop {
            if self.contains(&cur) {
                points.push(cur.clone());
            }
            // odometer with the last coordinate fastest gives lex order
            let mut d = self.dim;
            loop {
                if d == 0 {
                    break 'outer;
                }
                d -= 1;
                if cur[d] < hi[d] {
                    cur[d] += 1;
                    break;
                }
                cur[d] = lo[d];
            }
        }
        PointConfiguration::from_sorted(self.dim, points)
    }

    /// Smoothness check at every vertex.
    pub fn is_delzant(&self) -> DelzantReport {
        let n = self.dim;
        let tight: Vec<Vec<usize>> = self
            .vertices
            .iter()
            .map(|v| (0..self.facets.len()).filter(|&f| self.facets[f].contains(v)).collect())
            .collect();
        let mut reports = Vec::with_capacity(self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            let mut directions = Vec::new();
            for (j, w) in self.vertices.iter().enumerate() {
                if i == j {
                    continue;
                }
                let common: Vec<Vec<Rational>> = tight[i]
                    .iter()
                    .filter(|f| tight[j].contains(f))
                    .map(|&f| self.facets[f].normal.iter().map(|&x| exact::int(x)).collect())
                    .collect();
                if exact::rank(&common) == n - 1 {
                    let d: Vec<i64> = w.iter().zip(v).map(|(a, b)| a - b).collect();
                    let g = exact::gcd_i64(&d);
                    directions.push(d.into_iter().map(|x| x / g).collect::<Vec<_>>());
                }
            }
            let determinant = if directions.len() == n {
                IntMatrix::from_rows(&directions)
                    .and_then(|m| det(&m))
                    .ok()
                    .and_then(|d| d.to_i64())
            } else {
                None
            };
            let smooth = matches!(determinant, Some(1) | Some(-1));
            reports.push(VertexReport {
                vertex: v.clone(),
                edge_directions: directions,
                determinant,
                smooth,
            });
        }
        DelzantReport {
            delzant: reports.iter().all(|r| r.smooth),
            vertices: reports,
        }
    }

    fn measures(&self) -> &(u64, Vec<u64>) {
        self.measures.get_or_init(|| {
            let config = self.lattice_points();
            let order: Vec<usize> = (0..config.len()).collect();
            let t = crate::triangulation::placing_triangulation(&config, &order)
                .expect("lattice points of a full-dimensional polytope span it");
            let volume = t.simplices().iter().map(Simplex::volume).sum();
            let mut per_facet = vec![0u64; self.facets.len()];
            for face in t.boundary_faces() {
                let f = self
                    .facet_containing(&config, &face)
                    .expect("boundary face of a triangulation lies in a facet");
                per_facet[f] += normalized_volume(&face, &config).expect("face is a simplex");
            }
            (volume, per_facet)
        })
    }

    /// `n!` times the Euclidean volume.
    pub fn volume(&self) -> u64 {
        self.measures().0
    }

    /// Sum over facets of their lattice-normalized volumes.
    pub fn boundary_volume(&self) -> u64 {
        self.measures().1.iter().sum()
    }

    /// Lattice-normalized volume of each facet, in `facets()` order.
    pub fn facet_volumes(&self) -> &[u64] {
        &self.measures().1
    }

    /// Index of a facet containing every listed point, if any.
    pub fn facet_containing(&self, config: &PointConfiguration, indices: &[usize]) -> Option<usize> {
        self.facets
            .iter()
            .position(|f| indices.iter().all(|&i| f.contains(config.point(i))))
    }

    /// Whether an `(n-1)`-simplex lies in some facet.
    pub fn is_massive(&self, config: &PointConfiguration, simplex: &[usize]) -> Result<bool> {
        let got = simplex.len().wrapping_sub(1);
        if simplex.len() != self.dim {
            return Err(Error::WrongSimplexDimension {
                expected: self.dim - 1,
                got,
            });
        }
        Ok(self.facet_containing(config, simplex).is_some())
    }
}

fn dot_i64(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Primitive integer normal to `n-1` vectors in `Z^n` via signed maximal
/// minors; `None` if the vectors are dependent.
fn orthogonal_complement(vectors: &[Vec<i64>], n: usize) -> Option<Vec<i64>> {
    let mut normal = Vec::with_capacity(n);
    for skip in 0..n {
        let rows: Vec<Vec<i64>> = vectors
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let minor = if rows.is_empty() {
            BigInt::from(1)
        } else {
            det(&IntMatrix::from_rows(&rows).ok()?).ok()?
        };
        let sign = if skip % 2 == 0 { 1 } else { -1 };
        normal.push(sign * minor.to_i64()?);
    }
    let g = exact::gcd_i64(&normal);
    if g == 0 {
        return None;
    }
    Some(normal.into_iter().map(|x| x / g).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexReport {
    pub vertex: Point,
    pub edge_directions: Vec<Vec<i64>>,
    /// `None` when the number of edges differs from the dimension.
    pub determinant: Option<i64>,
    pub smooth: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelzantReport {
    pub delzant: bool,
    pub vertices: Vec<VertexReport>,
}

impl DelzantReport {
    pub fn singular_vertices(&self) -> impl Iterator<Item = &VertexReport> {
        self.vertices.iter().filter(|v| !v.smooth)
    }
}

/// Ordered point set `ω_0, …, ω_N` with a reverse index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfiguration {
    dim: usize,
    points: Vec<Point>,
    index: HashMap<Point, usize>,
}

impl PointConfiguration {
    fn from_sorted(dim: usize, points: Vec<Point>) -> Self {
        let index = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        Self { dim, points, index }
    }

    /// Arbitrary configuration of distinct points, sorted lexicographically.
    /// The lattice points of a polytope come from [`LatticePolytope::lattice_points`];
    /// this constructor exists for sub-configurations.
    pub fn from_points(mut points: Vec<Point>) -> Result<Self> {
        let dim = points
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidInput("empty configuration".into()))?;
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.len(),
            });
        }
        points.sort();
        let before = points.len();
        points.dedup();
        if points.len() != before {
            return Err(Error::InvalidInput("duplicate points".into()));
        }
        Ok(Self::from_sorted(dim, points))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &[i64] {
        &self.points[i]
    }

    pub fn index_of(&self, p: &[i64]) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn refs(&self, indices: &[usize]) -> Vec<&[i64]> {
        indices.iter().map(|&i| self.points[i].as_slice()).collect()
    }

    /// Point `i` as a rational vector.
    pub fn rational_point(&self, i: usize) -> Vec<Rational> {
        self.points[i].iter().map(|&x| exact::int(x)).collect()
    }

    /// Coordinate `j` of every point, i.e. the linear function `x_j` restricted to A.
    pub fn coordinate_function(&self, j: usize) -> Vec<Rational> {
        self.points.iter().map(|p| exact::int(p[j])).collect()
    }
}

/// Simplex on points of a configuration: sorted vertex indices plus its
/// lattice-normalized volume.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    vertices: Vec<usize>,
    volume: u64,
}

impl Simplex {
    pub fn new(mut vertices: Vec<usize>, config: &PointConfiguration) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        let volume = normalized_volume(&vertices, config)?;
        Ok(Self { vertices, volume })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn volume(&self) -> u64 {
        self.volume
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn contains_vertex(&self, i: usize) -> bool {
        self.vertices.binary_search(&i).is_ok()
    }
}

/// Volume of a simplex normalized so that a unimodular simplex in the
/// lattice of its own affine hull has volume 1; a single point has volume 1.
pub fn normalized_volume(vertices: &[usize], config: &PointConfiguration) -> Result<u64> {
    let Some((&first, rest)) = vertices.split_first() else {
        return Err(Error::InvalidInput("empty simplex".into()));
    };
    let base = config.point(first);
    let edges: Vec<Vec<i64>> = rest
        .iter()
        .map(|&i| config.point(i).iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let idx = lattice_index(&edges).map_err(|_| Error::AffinelyDependent(vertices.to_vec()))?;
    debug_assert!(!idx.is_zero() && idx.is_positive());
    idx.to_u64()
        .ok_or_else(|| Error::InvalidInput("volume overflow".into()))
}
