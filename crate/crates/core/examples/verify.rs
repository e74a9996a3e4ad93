//! Full identity and support suite for one polytope.
//!
//! cargo run --release --example verify -- examples/data/cube.json 10

use std::path::PathBuf;

use toric_weights::io::read_polytope;
use toric_weights::triangulation::EnumerationOptions;
use toric_weights::weight::WeightPolytopes;

fn main() -> toric_weights::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args.next().map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/examples/data/doubled_simplex.json"
        ))
    });
    let trials: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);

    let w = WeightPolytopes::compute(read_polytope(&path)?, &EnumerationOptions::default())?;
    println!(
        "{} regular triangulations, degrees {:?}",
        w.enumeration.len(),
        w.degrees
    );

    let ids = w.verify_identities(trials, 0);
    println!("identities: {} checks, {} failures", ids.checks, ids.failures.len());
    let sup = w.verify_random_supports(100, 0, 2 * w.config.len() as i64);
    println!("supports: {} checks, passed {}", sup.tested(), sup.passed());
    Ok(())
}
