//! Regularity certificates: a witness lifting or a conflicting set of walls.

use toric_weights::polytope::PointConfiguration;
use toric_weights::triangulation::{is_regular, lower_hull_subdivision, Lifting, RegularityCertificate, Triangulation};

fn main() -> toric_weights::Result<()> {
    let a = PointConfiguration::from_points(vec![
        vec![0, 0],
        vec![4, 0],
        vec![0, 4],
        vec![1, 1],
        vec![2, 1],
        vec![1, 2],
    ])?;
    let i = |p: &[i64]| a.index_of(p).unwrap();
    let (oa, ob, oc) = (i(&[0, 0]), i(&[4, 0]), i(&[0, 4]));
    let (ia, ib, ic) = (i(&[1, 1]), i(&[2, 1]), i(&[1, 2]));

    let twisted = Triangulation::new(
        vec![
            vec![ia, ib, ic],
            vec![oa, ob, ib],
            vec![oa, ib, ia],
            vec![ob, oc, ic],
            vec![ob, ic, ib],
            vec![oc, oa, ia],
            vec![oc, ia, ic],
        ],
        &a,
    )?;
    report("twisted", &twisted, &a);

    let lifted = lower_hull_subdivision(&a, &Lifting::new(vec![0, 3, -7, -6, -11, 1]))
        .to_triangulation(&a)
        .expect("generic heights give a triangulation");
    report("from a lifting", &lifted, &a);
    Ok(())
}

fn report(name: &str, t: &Triangulation, a: &PointConfiguration) {
    println!("{name}: {t}");
    match is_regular(t, a) {
        RegularityCertificate::Regular { witness } => {
            let back = lower_hull_subdivision(a, &witness);
            println!("  regular, witness {:?}", witness.heights());
            println!(
                "  lower hull reproduces it: {}",
                back.to_triangulation(a).as_ref() == Some(t)
            );
        }
        RegularityCertificate::Irregular { conflict } => {
            println!("  not regular; infeasible constraints:");
            for c in conflict {
                println!("    {c:?}");
            }
        }
    }
}
