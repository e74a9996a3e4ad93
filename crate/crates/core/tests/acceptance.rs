//! Acceptance criteria, one line of output per criterion.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::brute_force::all_triangulations;
use common::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_weights::exact::{int, rat};
use toric_weights::functional::{donaldson_f, pairing, PLFunction};
use toric_weights::polytope::PointConfiguration;
use toric_weights::triangulation::{
    enumerate_regular, flips, is_regular, lower_hull_subdivision, EnumerationOptions, Triangulation,
};
use toric_weights::vectors::{gkz_vector, hurwitz_vector};
use toric_weights::weight::WeightPolytopes;

type Outcome = std::result::Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn compute(v: &[&[i64]]) -> WeightPolytopes {
    WeightPolytopes::compute(polytope(v), &EnumerationOptions::default()).unwrap()
}

fn sorted(mut v: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    v.sort();
    v
}

fn within(start: Instant, limit: Duration) -> std::result::Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:?}, limit {limit:?}"))
}

fn segment() -> Outcome {
    let start = Instant::now();
    let w = compute(SEGMENT);
    ensure(
        w.enumeration.len() == 2,
        format!("{} triangulations", w.enumeration.len()),
    )?;
    ensure(
        sorted(w.chow.vertices.clone()) == vec![vec![1, 2, 1], vec![2, 0, 2]],
        format!("chow {:?}", w.chow.vertices),
    )?;
    ensure(
        sorted(w.hurwitz.vertices.clone()) == vec![vec![0, 2, 0], vec![1, 0, 1]],
        format!("hurwitz {:?}", w.hurwitz.vertices),
    )?;
    ensure(
        w.degrees.deg_chow == 2 && w.degrees.deg_hurwitz == 2,
        format!("{:?}", w.degrees),
    )?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("2 triangulations, {:?}", start.elapsed()))
}

fn square() -> Outcome {
    let start = Instant::now();
    let w = compute(SQUARE);
    ensure(
        w.enumeration.len() == 2,
        format!("{} triangulations", w.enumeration.len()),
    )?;
    let xis: Vec<Vec<i64>> = w
        .enumeration
        .iter()
        .map(|t| hurwitz_vector(t, &w.polytope, &w.config).entries)
        .collect();
    ensure(
        sorted(xis.clone()) == vec![vec![0, 2, 2, 0], vec![2, 0, 0, 2]],
        format!("{xis:?}"),
    )?;
    ensure(xis.iter().all(|x| x.iter().sum::<i64>() == 4), "hurwitz sums")?;
    ensure(2 * w.degrees.deg_hurwitz == 4, "n deg_hurwitz")?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("hurwitz vectors {xis:?}, {:?}", start.elapsed()))
}

fn doubled_simplex() -> Outcome {
    let start = Instant::now();
    let w = compute(DOUBLED_SIMPLEX);
    let q = &w.polytope;
    ensure(q.volume() == 4 && q.boundary_volume() == 6, "volumes")?;
    ensure(w.degrees.deg_hurwitz == 6, "deg_hurwitz")?;
    for t in w.enumeration.iter() {
        ensure(
            hurwitz_vector(t, q, &w.config).sum() == 12,
            format!("sum of xi for {t}"),
        )?;
    }
    let trials = 50;
    let r = w.verify_identities(trials, 2024);
    ensure(r.passed(), format!("{:?}", r.failures.first()))?;
    within(start, Duration::from_secs(30))?;
    Ok(format!(
        "{} triangulations x {trials} functions, {} exact checks, {:?}",
        r.triangulations,
        r.checks,
        start.elapsed()
    ))
}

fn hand_traced_f() -> Outcome {
    let q = polytope(SEGMENT);
    let a = q.lattice_points();
    let fine = Triangulation::new(vec![vec![0, 1], vec![1, 2]], &a).unwrap();
    let g = PLFunction::on_triangulation(&fine, &a, vec![int(0), int(0), int(1)]).unwrap();
    let direct = donaldson_f(&g, &q, &a).unwrap();

    let eta = gkz_vector(&fine, &a).entries;
    let xi = hurwitz_vector(&fine, &q, &a).entries;
    // n = 1, deg_hurwitz = deg_chow = 2
    let combo: Vec<i64> = eta.iter().zip(&xi).map(|(e, x)| 2 * e - 4 * x).collect();
    ensure(combo == vec![2, -4, 2], format!("combination {combo:?}"))?;
    let combo: Vec<_> = combo.into_iter().map(int).collect();
    let via_pairing = pairing(&combo, g.values()).unwrap() / int(4);
    ensure(direct == rat(1, 2), format!("direct {direct}"))?;
    ensure(via_pairing == rat(1, 2), format!("pairing {via_pairing}"))?;
    Ok("F = 1/2 by integration and by pairing".into())
}

fn support_corollaries(all: &[(&str, &WeightPolytopes)]) -> Outcome {
    let mut parts = Vec::new();
    for (name, w) in all {
        let count = 100;
        let suite = w.verify_random_supports(count, 99, 2 * w.config.len() as i64);
        ensure(
            suite.tested() == 2 * count,
            format!("{name}: only {} simplicial liftings", suite.tested() / 2),
        )?;
        ensure(
            suite.passed(),
            format!(
                "{name}: {:?}",
                suite
                    .reports
                    .iter()
                    .find(|r| r.status == toric_weights::weight::CheckStatus::Fail)
            ),
        )?;
        parts.push(format!("{name} {count}"));
    }
    Ok(format!("liftings per polytope: {}", parts.join(", ")))
}

fn structural(config: &PointConfiguration, w: &WeightPolytopes, seed: u64) -> std::result::Result<(), String> {
    let vol = w.polytope.volume();
    let circuits = &w.enumeration.circuits;
    for r in &w.enumeration.triangulations {
        let t = &r.triangulation;
        ensure(t.volume() == vol, format!("volume partition of {t}"))?;
        let back = lower_hull_subdivision(config, &r.witness).to_triangulation(config);
        ensure(
            back.as_ref() == Some(t),
            format!("witness of {t} does not reproduce it"),
        )?;
        ensure(is_regular(t, config).is_regular(), format!("{t} not certified"))?;
        for (c, n) in flips(t, circuits, config) {
            let back = flips(&n, circuits, config);
            ensure(
                back.iter().any(|(c2, t2)| t2 == t && *c2 == c.reversed()),
                format!("flip of {t} along {c:?} does not invert"),
            )?;
        }
    }
    let keys = w.enumeration.keys();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut orders: Vec<Vec<usize>> = vec![(0..config.len()).rev().collect()];
    for _ in 0..3 {
        let mut o: Vec<usize> = (0..config.len()).collect();
        o.shuffle(&mut rng);
        orders.push(o);
    }
    for order in orders {
        let opts = EnumerationOptions {
            seed_order: Some(order.clone()),
            ..Default::default()
        };
        let other = enumerate_regular(config, &opts).map_err(|e| e.to_string())?;
        ensure(other.keys() == keys, format!("seed order {order:?} changes the result"))?;
    }
    Ok(())
}

fn structural_all(all: &[(&str, &WeightPolytopes)]) -> Outcome {
    let mut total = 0;
    for (name, w) in all {
        structural(&w.config, w, 5).map_err(|e| format!("{name}: {e}"))?;
        total += w.enumeration.len();
    }
    Ok(format!("{total} triangulations over {} polytopes", all.len()))
}

fn brute_force_equivalence() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    for (name, v, vol) in [("[0,3]", SEGMENT3, 3), ("square", SQUARE, 2)] {
        let a = lattice(v);
        let all = all_triangulations(&a, vol);
        let regular: Vec<_> = all
            .iter()
            .filter(|k| is_regular(&Triangulation::new(k.to_vec(), &a).unwrap(), &a).is_regular())
            .cloned()
            .collect();
        let bfs = enumerate_regular(&a, &EnumerationOptions::default()).unwrap().keys();
        ensure(regular == bfs, format!("{name}: oracle {regular:?} vs flips {bfs:?}"))?;
        parts.push(format!("{name} {}/{}", regular.len(), all.len()));
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("regular/all: {}, {:?}", parts.join(", "), start.elapsed()))
}

fn cube() -> Outcome {
    let start = Instant::now();
    let w = compute(CUBE);
    let r = w.verify_identities(50, 3);
    ensure(r.passed(), format!("{:?}", r.failures.first()))?;
    structural(&w.config, &w, 8)?;
    let all = all_triangulations(&w.config, 6);
    let regular = all
        .iter()
        .filter(|k| is_regular(&Triangulation::new(k.to_vec(), &w.config).unwrap(), &w.config).is_regular())
        .count();
    ensure(
        regular == w.enumeration.len(),
        format!("oracle finds {regular} regular, flips find {}", w.enumeration.len()),
    )?;
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{} regular triangulations ({} in total by exhaustion), {} identity checks, {:?}",
        w.enumeration.len(),
        all.len(),
        r.checks,
        start.elapsed()
    ))
}

fn main() -> ExitCode {
    let seg = compute(SEGMENT);
    let seg3 = compute(SEGMENT3);
    let sq = compute(SQUARE);
    let dbl = compute(DOUBLED_SIMPLEX);
    let cube_w = compute(CUBE);
    let all: Vec<(&str, &WeightPolytopes)> = vec![
        ("[0,2]", &seg),
        ("[0,3]", &seg3),
        ("square", &sq),
        ("doubled simplex", &dbl),
        ("cube", &cube_w),
    ];

    let criteria: Vec<Criterion> = vec![
        ("segment [0,2]", Box::new(segment)),
        ("unit square", Box::new(square)),
        ("doubled simplex identities", Box::new(doubled_simplex)),
        ("hand-traced Donaldson value", Box::new(hand_traced_f)),
        ("support corollaries", Box::new(|| support_corollaries(&all))),
        ("structural invariants", Box::new(|| structural_all(&all))),
        ("brute-force oracle", Box::new(brute_force_equivalence)),
        ("3-cube scale check", Box::new(cube)),
    ];

    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
