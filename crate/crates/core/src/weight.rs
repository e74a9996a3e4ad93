//! Chow (secondary) and Hurwitz polytopes assembled from the regular
//! triangulations of `(Q, A)`, with exact support queries and the
//! identity checks relating characteristic vectors to integrals.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::{self, Rational};
use crate::functional::{degrees, donaldson_f, integral_boundary, integral_q, pairing, Degrees, PLFunction};
use crate::polytope::{LatticePolytope, PointConfiguration};
use crate::triangulation::{
    enumerate_regular, lower_hull_subdivision, Enumeration, EnumerationOptions, Lifting, Triangulation,
    TriangulationKey,
};
use crate::vectors::{boundary_vector, gkz_vector, hurwitz_vector, CharVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PolytopeKind {
    Chow,
    Hurwitz,
}

impl PolytopeKind {
    pub fn vector(self, t: &Triangulation, q: &LatticePolytope, config: &PointConfiguration) -> CharVector {
        match self {
            PolytopeKind::Chow => gkz_vector(t, config),
            PolytopeKind::Hurwitz => hurwitz_vector(t, q, config),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub vector: Vec<i64>,
    /// Ids (enumeration positions) of the triangulations producing `vector`.
    pub triangulations: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightPolytope {
    pub kind: PolytopeKind,
    pub vertices: Vec<Vec<i64>>,
    pub generators: Vec<Generator>,
    pub affine_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportMin {
    pub value: i128,
    pub argmin: Vec<Vec<i64>>,
}

fn weigh(x: &[i64], lambda: &[i64]) -> i128 {
    x.iter().zip(lambda).map(|(&a, &b)| a as i128 * b as i128).sum()
}

impl WeightPolytope {
    /// Generators deduplicated by value and sorted; vertices are the
    /// generators outside the convex hull of all the others.
    pub fn build(
        kind: PolytopeKind,
        q: &LatticePolytope,
        config: &PointConfiguration,
        enumeration: &Enumeration,
    ) -> Self {
        let vectors: Vec<CharVector> = enumeration
            .triangulations
            .par_iter()
            .map(|r| kind.vector(&r.triangulation, q, config))
            .collect();
        let mut grouped: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (id, v) in vectors.into_iter().enumerate() {
            grouped.entry(v.entries).or_default().push(id);
        }
        let generators: Vec<Generator> = grouped
            .into_iter()
            .map(|(vector, triangulations)| Generator { vector, triangulations })
            .collect();

        let points: Vec<Vec<Rational>> = generators
            .iter()
            .map(|g| g.vector.iter().map(|&x| exact::int(x)).collect())
            .collect();
        let vertices: Vec<Vec<i64>> = (0..generators.len())
            .into_par_iter()
            .filter(|&i| {
                let others: Vec<Vec<Rational>> = points
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, p)| p.clone())
                    .collect();
                others.is_empty() || !exact::in_convex_hull(&others, &points[i])
            })
            .map(|i| generators[i].vector.clone())
            .collect();

        let refs: Vec<&[i64]> = generators.iter().map(|g| g.vector.as_slice()).collect();
        let affine_dim = exact::affine_rank(&refs);
        Self {
            kind,
            vertices,
            generators,
            affine_dim,
        }
    }

    pub fn support_min(&self, lambda: &[i64]) -> SupportMin {
        min_over(&self.vertices, lambda)
    }

    /// Same minimum taken over every generator rather than the vertices.
    pub fn support_min_generators(&self, lambda: &[i64]) -> SupportMin {
        let all: Vec<Vec<i64>> = self.generators.iter().map(|g| g.vector.clone()).collect();
        min_over(&all, lambda)
    }
}

fn min_over(points: &[Vec<i64>], lambda: &[i64]) -> SupportMin {
    let value = points.iter().map(|v| weigh(v, lambda)).min().unwrap_or(0);
    let argmin = points.iter().filter(|v| weigh(v, lambda) == value).cloned().collect();
    SupportMin { value, argmin }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inapplicable,
}

/// Comparison of `min <x, λ>` over a weight polytope with the value at the
/// characteristic vector of `T_λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportReport {
    pub kind: PolytopeKind,
    pub lifting: Vec<i64>,
    pub status: CheckStatus,
    pub triangulation: Option<TriangulationKey>,
    pub polytope_min: Option<i128>,
    pub triangulation_value: Option<i128>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityFailure {
    pub check: String,
    pub triangulation: usize,
    pub g: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub seed: u64,
    pub trials: usize,
    pub triangulations: usize,
    pub checks: usize,
    pub failures: Vec<IdentityFailure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportSuiteReport {
    pub seed: u64,
    pub requested: usize,
    pub reports: Vec<SupportReport>,
}

impl SupportSuiteReport {
    pub fn tested(&self) -> usize {
        self.reports
            .iter()
            .filter(|r| r.status != CheckStatus::Inapplicable)
            .count()
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.status != CheckStatus::Fail)
    }
}

/// Everything derived from one lattice polytope: its lattice points, the
/// regular triangulations and both weight polytopes.
#[derive(Debug, Clone)]
pub struct WeightPolytopes {
    pub polytope: LatticePolytope,
    pub config: PointConfiguration,
    pub degrees: Degrees,
    pub enumeration: Enumeration,
    pub chow: WeightPolytope,
    pub hurwitz: WeightPolytope,
}

impl WeightPolytopes {
    pub fn compute(polytope: LatticePolytope, options: &EnumerationOptions) -> Result<Self> {
        let config = polytope.lattice_points();
        let enumeration = enumerate_regular(&config, options)?;
        let (chow, hurwitz) = rayon::join(
            || WeightPolytope::build(PolytopeKind::Chow, &polytope, &config, &enumeration),
            || WeightPolytope::build(PolytopeKind::Hurwitz, &polytope, &config, &enumeration),
        );
        Ok(Self {
            degrees: degrees(&polytope),
            polytope,
            config,
            enumeration,
            chow,
            hurwitz,
        })
    }

    pub fn get(&self, kind: PolytopeKind) -> &WeightPolytope {
        match kind {
            PolytopeKind::Chow => &self.chow,
            PolytopeKind::Hurwitz => &self.hurwitz,
        }
    }

    pub fn verify_chow_support(&self, lambda: &[i64]) -> SupportReport {
        self.verify_support(PolytopeKind::Chow, lambda)
    }

    pub fn verify_hurwitz_support(&self, lambda: &[i64]) -> SupportReport {
        self.verify_support(PolytopeKind::Hurwitz, lambda)
    }

    pub fn verify_support(&self, kind: PolytopeKind, lambda: &[i64]) -> SupportReport {
        let mut report = SupportReport {
            kind,
            lifting: lambda.to_vec(),
            status: CheckStatus::Inapplicable,
            triangulation: None,
            polytope_min: None,
            triangulation_value: None,
        };
        let sub = lower_hull_subdivision(&self.config, &Lifting::new(lambda.to_vec()));
        let Some(t) = sub.to_triangulation(&self.config) else {
            return report;
        };
        let expected = weigh(&kind.vector(&t, &self.polytope, &self.config).entries, lambda);
        let min = self.get(kind).support_min(lambda).value;
        report.status = if min == expected {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        report.triangulation = Some(t.key());
        report.polytope_min = Some(min);
        report.triangulation_value = Some(expected);
        report
    }

    /// Support checks for `count` seeded random liftings with entries in
    /// `[-range, range]` whose lower hull is a triangulation. Liftings with a
    /// non-simplicial hull are redrawn, up to `50 * count` draws in total.
    pub fn verify_random_supports(&self, count: usize, seed: u64, range: i64) -> SupportSuiteReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut liftings = Vec::new();
        let mut draws = 0;
        while liftings.len() < count && draws < 50 * count {
            draws += 1;
            let lambda: Vec<i64> = (0..self.config.len()).map(|_| rng.gen_range(-range..=range)).collect();
            let sub = lower_hull_subdivision(&self.config, &Lifting::new(lambda.clone()));
            if sub.is_triangulation {
                liftings.push(lambda);
            }
        }
        let reports = liftings
            .par_iter()
            .flat_map_iter(|l| [self.verify_chow_support(l), self.verify_hurwitz_support(l)])
            .collect();
        SupportSuiteReport {
            seed,
            requested: count,
            reports,
        }
    }

    /// Checks every enumerated triangulation against `trials` seeded random
    /// rational functions, plus the constant-sum and affine-pairing
    /// invariants of both vector families.
    pub fn verify_identities(&self, trials: usize, seed: u64) -> IdentityReport {
        let per_t: Vec<(usize, Vec<IdentityFailure>)> = self
            .enumeration
            .triangulations
            .par_iter()
            .enumerate()
            .map(|(id, r)| self.check_triangulation(id, &r.triangulation, trials, seed))
            .collect();
        let mut checks = 0;
        let mut failures = Vec::new();
        for (c, f) in per_t {
            checks += c;
            failures.extend(f);
        }
        let (c, f) = self.check_affine_pairings();
        checks += c;
        failures.extend(f);
        IdentityReport {
            seed,
            trials,
            triangulations: self.enumeration.len(),
            checks,
            failures,
        }
    }

    fn check_triangulation(
        &self,
        id: usize,
        t: &Triangulation,
        trials: usize,
        seed: u64,
    ) -> (usize, Vec<IdentityFailure>) {
        let (q, config) = (&self.polytope, &self.config);
        let n = q.dim();
        let fact = |k: usize| exact::int((1..=k as i64).product());
        let eta = gkz_vector(t, config).to_rational();
        let bnd = boundary_vector(t, q, config).to_rational();
        let xi = hurwitz_vector(t, q, config).to_rational();
        let deg_hu = exact::int(self.degrees.deg_hurwitz);
        let deg_ch = exact::int(self.degrees.deg_chow as i64);
        let combo: Vec<Rational> = eta
            .iter()
            .zip(&xi)
            .map(|(e, x)| exact::int(n as i64) * &deg_hu * e - exact::int(n as i64 + 1) * &deg_ch * x)
            .collect();
        let vol = exact::int(q.volume() as i64);

        let mut checks = 0;
        let mut failures = Vec::new();
        let mut check = |name: &str, g: &[Rational], lhs: Rational, rhs: Rational| {
            checks += 1;
            if lhs != rhs {
                failures.push(IdentityFailure {
                    check: name.to_string(),
                    triangulation: id,
                    g: g.iter().map(exact::format_rational).collect(),
                    lhs: exact::format_rational(&lhs),
                    rhs: exact::format_rational(&rhs),
                });
            }
        };

        let none: [Rational; 0] = [];
        check(
            "gkz sum",
            &none,
            eta.iter().sum(),
            exact::int((n as i64 + 1) * q.volume() as i64),
        );
        check("hurwitz sum", &none, xi.iter().sum(), exact::int(n as i64) * &deg_hu);

        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(id as u64);
        let used = t.used_points();
        for _ in 0..trials {
            let values: Vec<Rational> = (0..config.len())
                .map(|k| {
                    if used.contains(&k) {
                        exact::rat(rng.gen_range(-20..=20), rng.gen_range(1..=12))
                    } else {
                        exact::int(0)
                    }
                })
                .collect();
            let g = PLFunction::on_triangulation(t, config, values).expect("values match the configuration");
            let gv = g.values();
            let int_q = integral_q(&g, config).expect("carried on a triangulation");
            let int_b = integral_boundary(&g, q, config).expect("carried on a triangulation");
            let f = donaldson_f(&g, q, config).expect("carried on a triangulation");

            check("interior", gv, pairing(&eta, gv).unwrap(), fact(n + 1) * &int_q);
            check("boundary", gv, pairing(&bnd, gv).unwrap(), fact(n) * &int_b);
            check("donaldson", gv, fact(n + 1) * &vol * &f, pairing(&combo, gv).unwrap());

            let shifted: Vec<Rational> = gv.iter().map(|x| x + exact::int(1)).collect();
            let g1 = PLFunction::on_triangulation(t, config, shifted).expect("values match the configuration");
            check("constant shift", gv, donaldson_f(&g1, q, config).unwrap(), f);
        }
        (checks, failures)
    }

    /// `<η_T, x_j>` and `<ξ_T, x_j>` must not depend on `T`.
    fn check_affine_pairings(&self) -> (usize, Vec<IdentityFailure>) {
        let mut checks = 0;
        let mut failures = Vec::new();
        let Some(first) = self.enumeration.triangulations.first() else {
            return (0, failures);
        };
        for kind in [PolytopeKind::Chow, PolytopeKind::Hurwitz] {
            let base = kind
                .vector(&first.triangulation, &self.polytope, &self.config)
                .to_rational();
            for j in 0..self.config.dim() {
                let coord = self.config.coordinate_function(j);
                let expected = pairing(&base, &coord).unwrap();
                for (id, r) in self.enumeration.triangulations.iter().enumerate().skip(1) {
                    let v = kind
                        .vector(&r.triangulation, &self.polytope, &self.config)
                        .to_rational();
                    let got = pairing(&v, &coord).unwrap();
                    checks += 1;
                    if got != expected {
                        failures.push(IdentityFailure {
                            check: format!("{kind:?} pairing with x{}", j + 1).to_lowercase(),
                            triangulation: id,
                            g: coord.iter().map(exact::format_rational).collect(),
                            lhs: exact::format_rational(&got),
                            rhs: exact::format_rational(&expected),
                        });
                    }
                }
            }
        }
        (checks, failures)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn compute(v: &[&[i64]]) -> WeightPolytopes {
        let q = LatticePolytope::from_vertices(v.iter().map(|p| p.to_vec()).collect()).unwrap();
        WeightPolytopes::compute(q, &EnumerationOptions::default()).unwrap()
    }

    fn sorted(mut v: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
        v.sort();
        v
    }

    #[test]
    fn segment_polytopes() {
        let w = compute(&[&[0], &[2]]);
        assert_eq!(sorted(w.chow.vertices.clone()), vec![vec![1, 2, 1], vec![2, 0, 2]]);
        assert_eq!(sorted(w.hurwitz.vertices.clone()), vec![vec![0, 2, 0], vec![1, 0, 1]]);
        assert_eq!(w.chow.affine_dim, 1);

        let s = w.hurwitz.support_min(&[0, -1, 0]);
        assert_eq!((s.value, s.argmin), (-2, vec![vec![0, 2, 0]]));
        let s = w.chow.support_min(&[0, 0, 0]);
        assert_eq!((s.value, s.argmin.len()), (0, 2));
        let s = w.chow.support_min(&[0, -1, 0]);
        assert_eq!((s.value, s.argmin), (-2, vec![vec![1, 2, 1]]));
    }

    #[test]
    fn square_hurwitz() {
        let w = compute(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            sorted(w.hurwitz.vertices.clone()),
            vec![vec![0, 2, 2, 0], vec![2, 0, 0, 2]]
        );
        let r = w.verify_hurwitz_support(&[-1, 0, 0, -1]);
        assert_eq!(r.status, CheckStatus::Pass);
        assert_eq!(w.hurwitz.support_min(&[-1, 0, 0, -1]).argmin, vec![vec![2, 0, 0, 2]]);
    }

    #[test]
    fn support_reports() {
        let w = compute(&[&[0], &[2]]);
        for r in [
            w.verify_chow_support(&[0, -1, 0]),
            w.verify_hurwitz_support(&[0, -1, 0]),
        ] {
            assert_eq!(r.status, CheckStatus::Pass);
            assert_eq!((r.polytope_min, r.triangulation_value), (Some(-2), Some(-2)));
        }
        assert_eq!(w.verify_chow_support(&[0, 0, 0]).status, CheckStatus::Inapplicable);
        assert_eq!(w.verify_hurwitz_support(&[0, 0, 0]).status, CheckStatus::Inapplicable);
    }

    #[test]
    fn witnesses_select_their_vertex() {
        let w = compute(&[&[0, 0], &[2, 0], &[0, 2]]);
        for r in &w.enumeration.triangulations {
            let eta = gkz_vector(&r.triangulation, &w.config).entries;
            let s = w.chow.support_min(r.witness.heights());
            assert_eq!(s.argmin, vec![eta]);
            assert_eq!(w.verify_hurwitz_support(r.witness.heights()).status, CheckStatus::Pass);
        }
    }

    #[test]
    fn vertices_lose_nothing() {
        let w = compute(&[&[0], &[3]]);
        for lambda in [[0, -1, -1, 0], [0, -1, 0, 0], [3, -2, 5, 0], [0, 1, 1, 0]] {
            for p in [&w.chow, &w.hurwitz] {
                assert_eq!(p.support_min(&lambda).value, p.support_min_generators(&lambda).value);
            }
        }
    }

    #[test]
    fn identities_small() {
        for v in [&[&[0][..], &[2]][..], &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]] {
            let r = compute(v).verify_identities(10, 7);
            assert!(r.passed(), "{:?}", r.failures);
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn identities_are_reproducible() {
        let w = compute(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(w.verify_identities(3, 11), w.verify_identities(3, 11));
        let s = w.verify_random_supports(20, 5, 6);
        assert_eq!(s, w.verify_random_supports(20, 5, 6));
        assert!(s.passed());
    }

    #[test]
    fn serialization_shape() {
        let w = compute(&[&[0], &[2]]);
        let json = serde_json::to_value(&w.hurwitz).unwrap();
        assert_eq!(json["kind"], "hurwitz");
        assert_eq!(json["affine_dim"], 1);
        assert_eq!(json["generators"][0]["vector"], serde_json::json!([0, 2, 0]));
        assert!(json["generators"][0]["triangulations"].is_array());
    }
}
