//! Chow and Hurwitz polytopes and their support functions.
//!
//! cargo run --example weight_polytopes -- examples/data/square.json

use std::path::PathBuf;

use toric_weights::io::read_polytope;
use toric_weights::triangulation::EnumerationOptions;
use toric_weights::weight::WeightPolytopes;

fn main() -> toric_weights::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/segment3.json")));
    let w = WeightPolytopes::compute(read_polytope(&path)?, &EnumerationOptions::default())?;

    for p in [&w.chow, &w.hurwitz] {
        println!(
            "{:?}: {} vertices, affine dimension {}",
            p.kind,
            p.vertices.len(),
            p.affine_dim
        );
        for g in &p.generators {
            println!("  {:?} from triangulations {:?}", g.vector, g.triangulations);
        }
    }

    let lambda: Vec<i64> = (0..w.config.len() as i64).map(|k| -(k * k) % 5).collect();
    println!("lambda = {lambda:?}");
    for r in [w.verify_chow_support(&lambda), w.verify_hurwitz_support(&lambda)] {
        println!(
            "  {:?}: {:?}, polytope min {:?}, at T_lambda {:?}",
            r.kind, r.status, r.polytope_min, r.triangulation_value
        );
    }
    Ok(())
}
