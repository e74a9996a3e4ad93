use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{Lifting, Triangulation};
use crate::exact::{self, feasible_strict, Feasibility, LinearSystem, Rational};
use crate::polytope::PointConfiguration;

/// One defining inequality of the open cone `C(T)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ConeConstraint {
    /// The piecewise-linear interpolant must fold strictly upward across the
    /// wall shared by `face ∪ {a}` and `face ∪ {b}`.
    Wall { face: Vec<usize>, opposite: (usize, usize) },
    /// An unused point must be lifted strictly above the interpolant.
    Unused { point: usize, simplex: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RegularityCertificate {
    /// An integral lifting in the open cone; its lower hull reproduces `T`.
    Regular { witness: Lifting },
    /// An irreducible infeasible subset of the cone's inequalities.
    Irregular { conflict: Vec<ConeConstraint> },
}

impl RegularityCertificate {
    pub fn is_regular(&self) -> bool {
        matches!(self, RegularityCertificate::Regular { .. })
    }

    pub fn witness(&self) -> Option<&Lifting> {
        match self {
            RegularityCertificate::Regular { witness } => Some(witness),
            RegularityCertificate::Irregular { .. } => None,
        }
    }
}

/// The strict homogeneous system in the heights `λ ∈ R^{N+1}` cutting out
/// `C(T)`, together with a description of each row.
pub fn cone_system(t: &Triangulation, config: &PointConfiguration) -> (LinearSystem, Vec<ConeConstraint>) {
    let m = config.len();
    let mut sys = LinearSystem::new(m);
    let mut labels = Vec::new();

    for wall in t.interior_walls() {
        let (a, b) = wall.opposite;
        let mut support = wall.face.clone();
        support.push(a);
        support.push(b);
        let dep = exact::affine_dependency(&config.refs(&support))
            .expect("a wall and its two opposite vertices carry one affine dependency");
        // orient so that the opposite vertices carry positive weight
        let sign = if dep[dep.len() - 2].is_positive() { -1 } else { 1 };
        let mut row = vec![Rational::zero(); m];
        for (&i, c) in support.iter().zip(&dep) {
            row[i] = c * exact::int(sign);
        }
        // -Σ c_i λ_i < 0
        sys.lt(row, Rational::zero()).expect("row sized to the configuration");
        labels.push(ConeConstraint::Wall {
            face: wall.face,
            opposite: wall.opposite,
        });
    }

    let used = t.used_points();
    for k in (0..m).filter(|k| !used.contains(k)) {
        let (s, bary) = t
            .locate(config, &config.rational_point(k))
            .expect("every point of the configuration lies in the triangulated region");
        let simplex = t.simplices()[s].vertices().to_vec();
        let mut row = vec![Rational::zero(); m];
        for (&v, b) in simplex.iter().zip(&bary) {
            row[v] = b.clone();
        }
        row[k] = exact::int(-1);
        sys.lt(row, Rational::zero()).expect("row sized to the configuration");
        labels.push(ConeConstraint::Unused { point: k, simplex });
    }
    (sys, labels)
}

/// Decides whether `t` is the lower hull of some lifting. On success the
/// witness is scaled to a primitive integer vector and shifted to `max = 0`.
pub fn is_regular(t: &Triangulation, config: &PointConfiguration) -> RegularityCertificate {
    let (sys, labels) = cone_system(t, config);
    match feasible_strict(&sys) {
        Feasibility::Feasible(w) => {
            let ints: Vec<BigInt> = exact::primitive_integer_vector(&w);
            let heights = ints
                .iter()
                .map(|h| h.to_i64().expect("witness heights fit in i64"))
                .collect();
            RegularityCertificate::Regular {
                witness: Lifting::new(heights),
            }
        }
        Feasibility::Infeasible => {
            // deletion filter down to an irreducible infeasible subsystem
            let mut keep: Vec<usize> = (0..labels.len()).collect();
            let mut i = 0;
            while i < keep.len() {
                let mut trial = keep.clone();
                trial.remove(i);
                if feasible_strict(&sys.subsystem(&trial)).is_feasible() {
                    i += 1;
                } else {
                    keep = trial;
                }
            }
            RegularityCertificate::Irregular {
                conflict: keep.into_iter().map(|i| labels[i].clone()).collect(),
            }
        }
    }
}
