//! Placing triangulations, bistellar flips and the regular flip graph.

use toric_weights::polytope::LatticePolytope;
use toric_weights::triangulation::{circuits, enumerate_regular, flips, placing_triangulation, EnumerationOptions};

fn main() -> toric_weights::Result<()> {
    let q = LatticePolytope::from_vertices(vec![vec![0, 0], vec![2, 0], vec![0, 2]])?;
    let a = q.lattice_points();

    let order: Vec<usize> = (0..a.len()).collect();
    let placing = placing_triangulation(&a, &order)?;
    println!("placing: {placing}");

    let cs = circuits(&a);
    println!("{} circuits", cs.len());
    for (c, t) in flips(&placing, &cs, &a) {
        println!("  flip {:?} -> {:?}  gives {t}", c.positive, c.negative);
    }

    let e = enumerate_regular(&a, &EnumerationOptions::default())?;
    println!("{} regular triangulations", e.len());
    for (id, r) in e.triangulations.iter().enumerate() {
        println!("  T{id} {}  witness {:?}", r.triangulation, r.witness.heights());
    }
    Ok(())
}
