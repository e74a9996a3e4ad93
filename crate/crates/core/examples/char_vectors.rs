//! GKZ, boundary and Hurwitz vectors of every regular triangulation.

use toric_weights::polytope::LatticePolytope;
use toric_weights::triangulation::{enumerate_regular, EnumerationOptions};
use toric_weights::vectors::{boundary_vector, gkz_vector, hurwitz_vector};

fn main() -> toric_weights::Result<()> {
    let q = LatticePolytope::from_vertices(vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]])?;
    let a = q.lattice_points();
    println!("points {:?}", a.points());
    for t in enumerate_regular(&a, &EnumerationOptions::default())?.iter() {
        println!("{t}");
        println!("  gkz      {:?}", gkz_vector(t, &a).entries);
        println!("  boundary {:?}", boundary_vector(t, &q, &a).entries);
        println!("  hurwitz  {:?}", hurwitz_vector(t, &q, &a).entries);
    }
    Ok(())
}
