//! Integrals, the Donaldson functional and its expression through the
//! GKZ and Hurwitz vectors.

use toric_weights::exact::{format_rational, int};
use toric_weights::functional::{degrees, donaldson_f, integral_boundary, integral_q, pairing, pl_from_lifting};
use toric_weights::polytope::LatticePolytope;
use toric_weights::triangulation::Lifting;
use toric_weights::vectors::{gkz_vector, hurwitz_vector};

fn main() -> toric_weights::Result<()> {
    let q = LatticePolytope::from_vertices(vec![vec![0], vec![2]])?;
    let a = q.lattice_points();

    // max(0, x - 1), shifted down by 1 so the heights have maximum 0
    let g = pl_from_lifting(&a, &Lifting::new(vec![0, 0, 1]));
    let t = g.triangulation(&a)?;
    let shown: Vec<String> = g.values().iter().map(format_rational).collect();
    println!("g on {t}: {shown:?}");

    let f = donaldson_f(&g, &q, &a)?;
    println!("integral over Q    {}", format_rational(&integral_q(&g, &a)?));
    println!(
        "integral over dQ   {}",
        format_rational(&integral_boundary(&g, &q, &a)?)
    );
    println!("F(g)               {}", format_rational(&f));

    let d = degrees(&q);
    let n = q.dim() as i64;
    let eta = gkz_vector(&t, &a).entries;
    let xi = hurwitz_vector(&t, &q, &a).entries;
    let combo: Vec<_> = eta
        .iter()
        .zip(&xi)
        .map(|(e, x)| int(n * d.deg_hurwitz * e - (n + 1) * d.deg_chow as i64 * x))
        .collect();
    let scale = int((1..=n + 1).product::<i64>() * q.volume() as i64);
    let via_vectors = pairing(&combo, g.values())? / scale;
    println!("F(g) from vectors  {}", format_rational(&via_vectors));
    Ok(())
}
