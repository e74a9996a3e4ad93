//! Facets, lattice points, volumes and the Delzant test.
//!
//! cargo run --example lattice_polytope -- examples/data/non_delzant.json

use std::path::PathBuf;

use toric_weights::io::read_polytope;

fn main() -> toric_weights::Result<()> {
    let path = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/examples/data/doubled_simplex.json"
        ))
    });
    let q = read_polytope(&path)?;

    println!("vertices: {:?}", q.vertices());
    for f in q.facets() {
        println!("facet  <x, {:?}> + {} >= 0", f.normal, f.offset);
    }
    let a = q.lattice_points();
    println!("{} lattice points: {:?}", a.len(), a.points());
    println!(
        "volume {} boundary {} facets {:?}",
        q.volume(),
        q.boundary_volume(),
        q.facet_volumes()
    );

    let report = q.is_delzant();
    println!("delzant: {}", report.delzant);
    for v in report.singular_vertices() {
        println!("  singular vertex {:?}, edges {:?}", v.vertex, v.edge_directions);
    }
    Ok(())
}
