//! Piecewise-linear functions on `Q` and the exact functionals evaluated on
//! them: integrals over `Q` and `∂Q`, the toric Aubin functional `L`, the
//! Donaldson functional `F`, the Chow and Hurwitz degrees and the pairing
//! with characteristic vectors.
//!
//! Integrals are combinatorial. On a simplex `σ` of dimension `k` with
//! normalized volume `vol(σ)`, an affine `g` integrates to
//! `vol(σ) / (k+1)! * Σ g(vertices)` against the lattice measure of its
//! affine hull. On `Q` this is `dx`; on `∂Q` it is the facet measure `dν`
//! determined by the primitive facet normals.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{self, Rational};
use crate::polytope::{normalized_volume, LatticePolytope, PointConfiguration};
use crate::triangulation::{lower_hull_subdivision, Lifting, Triangulation};
use crate::vectors::massive_faces;

/// A function on `Q` that is affine on each cell of a subdivision.
#[derive(Debug, Clone, PartialEq)]
pub struct PLFunction {
    cells: Vec<Vec<usize>>,
    simplicial: bool,
    /// Value at every point of the configuration.
    values: Vec<Rational>,
}

impl PLFunction {
    /// The `T`-piecewise-linear interpolant of `values`. Entries at points
    /// unused by `T` are ignored and replaced by the interpolated value.
    pub fn on_triangulation(t: &Triangulation, config: &PointConfiguration, values: Vec<Rational>) -> Result<Self> {
        if values.len() != config.len() {
            return Err(Error::DimensionMismatch {
                expected: config.len(),
                got: values.len(),
            });
        }
        let used = t.used_points();
        let mut values = values;
        for k in (0..config.len()).filter(|k| !used.contains(k)) {
            let (s, bary) = t
                .locate(config, &config.rational_point(k))
                .ok_or_else(|| Error::InvalidInput(format!("point {k} is not covered by the triangulation")))?;
            let verts = t.simplices()[s].vertices();
            values[k] = verts.iter().zip(&bary).map(|(&v, b)| &values[v] * b).sum();
        }
        Ok(Self {
            cells: t.key(),
            simplicial: true,
            values,
        })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn is_simplicial(&self) -> bool {
        self.simplicial
    }

    /// The carrier as a triangulation; fails for non-simplicial carriers.
    pub fn triangulation(&self, config: &PointConfiguration) -> Result<Triangulation> {
        if !self.simplicial {
            return Err(Error::NotSimplicial);
        }
        Triangulation::new(self.cells.clone(), config)
    }

    /// Value at an arbitrary rational point of `Q`, `None` outside.
    pub fn eval(&self, config: &PointConfiguration, x: &[Rational]) -> Option<Rational> {
        for cell in &self.cells {
            let basis = affine_basis(config, cell);
            let Some(bary) = exact::barycentric(&config.refs(&basis), x) else {
                continue;
            };
            let inside = if self.simplicial {
                bary.iter().all(|b| *b >= Rational::zero())
            } else {
                let pts: Vec<Vec<Rational>> = cell.iter().map(|&v| config.rational_point(v)).collect();
                exact::in_convex_hull(&pts, x)
            };
            if inside {
                return Some(basis.iter().zip(&bary).map(|(&v, b)| &self.values[v] * b).sum());
            }
        }
        None
    }

    pub fn to_record(&self) -> PLFunctionRecord {
        PLFunctionRecord {
            triangulation: self.cells.clone(),
            values: self.values.iter().map(exact::format_rational).collect(),
        }
    }

    pub fn from_record(record: &PLFunctionRecord, config: &PointConfiguration) -> Result<Self> {
        let values = record
            .values
            .iter()
            .map(|s| exact::parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        let t = Triangulation::new(record.triangulation.clone(), config)?;
        Self::on_triangulation(&t, config, values)
    }
}

/// Serialized form: `{"triangulation": [[i, ...], ...], "values": ["p/q", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PLFunctionRecord {
    pub triangulation: Vec<Vec<usize>>,
    pub values: Vec<String>,
}

/// First affinely independent spanning subset of a cell, greedily.
fn affine_basis(config: &PointConfiguration, cell: &[usize]) -> Vec<usize> {
    let mut basis: Vec<usize> = Vec::new();
    for &v in cell {
        let mut trial = basis.clone();
        trial.push(v);
        if exact::affine_rank(&config.refs(&trial)) == trial.len() - 1 {
            basis = trial;
        }
    }
    basis
}

/// The convex function `g_λ` whose graph is the lower hull of the lifted
/// points, carried on the induced subdivision. `g_λ(ω_k) = λ_k` at lower
/// hull vertices and `g_λ(ω_k) <= λ_k` elsewhere.
pub fn pl_from_lifting(config: &PointConfiguration, lifting: &Lifting) -> PLFunction {
    let sub = lower_hull_subdivision(config, lifting);
    let values = (0..config.len())
        .map(|k| sub.evaluate(&config.rational_point(k)))
        .collect();
    PLFunction {
        cells: sub.cells,
        simplicial: sub.is_triangulation,
        values,
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}

/// `∫_Q g dx`.
pub fn integral_q(g: &PLFunction, config: &PointConfiguration) -> Result<Rational> {
    let t = g.triangulation(config)?;
    let denom = Rational::from_integer(factorial(config.dim() + 1));
    Ok(t.simplices()
        .iter()
        .map(|s| {
            let sum: Rational = s.vertices().iter().map(|&v| g.values[v].clone()).sum();
            sum * exact::int(s.volume() as i64) / &denom
        })
        .sum())
}

/// `∫_{∂Q} g dν` over the massive faces of the carrier.
pub fn integral_boundary(g: &PLFunction, q: &LatticePolytope, config: &PointConfiguration) -> Result<Rational> {
    let t = g.triangulation(config)?;
    let denom = Rational::from_integer(factorial(q.dim()));
    let mut total = Rational::zero();
    for face in massive_faces(&t, q, config) {
        let vol = normalized_volume(&face, config)?;
        let sum: Rational = face.iter().map(|&v| g.values[v].clone()).sum();
        total += sum * exact::int(vol as i64) / &denom;
    }
    Ok(total)
}

/// Toric Aubin functional `L(g) = ∫_Q g dx` (with the normalizing constant 0).
pub fn aubin_l(g: &PLFunction, config: &PointConfiguration) -> Result<Rational> {
    integral_q(g, config)
}

/// `F(g) = ∫_{∂Q} g dν - n Vol(∂Q)/Vol(Q) ∫_Q g dx`.
pub fn donaldson_f(g: &PLFunction, q: &LatticePolytope, config: &PointConfiguration) -> Result<Rational> {
    let ratio = Rational::new(
        BigInt::from(q.dim() as u64 * q.boundary_volume()),
        BigInt::from(q.volume()),
    );
    Ok(integral_boundary(g, q, config)? - ratio * integral_q(g, config)?)
}

/// `(x, g) = Σ_k x_k g(ω_k)`.
pub fn pairing(x: &[Rational], g: &[Rational]) -> Result<Rational> {
    if x.len() != g.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            got: g.len(),
        });
    }
    Ok(exact::dot(x, g))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degrees {
    pub deg_chow: u64,
    pub deg_hurwitz: i64,
}

/// `deg Ch = Vol(Q)`, `deg Hu = (n+1) Vol(Q) - Vol(∂Q)`.
pub fn degrees(q: &LatticePolytope) -> Degrees {
    let vol = q.volume();
    Degrees {
        deg_chow: vol,
        deg_hurwitz: (q.dim() as i64 + 1) * vol as i64 - q.boundary_volume() as i64,
    }
}
