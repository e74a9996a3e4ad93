//! Exact determinants, lattice indices and strict LP feasibility.

use toric_weights::exact::{self, det, feasible_strict, int, lattice_index, Feasibility, IntMatrix, LinearSystem};

fn main() -> toric_weights::Result<()> {
    let m = IntMatrix::from_rows(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]])?;
    println!("det = {}", det(&m)?);
    println!("index of <(2,0),(0,3)> = {}", lattice_index(&[vec![2, 0], vec![0, 3]])?);

    // 0 < x, x < y, x + y <= 1
    let mut sys = LinearSystem::new(2);
    sys.gt(vec![int(1), int(0)], int(0))?;
    sys.lt(vec![int(1), int(-1)], int(0))?;
    sys.le(vec![int(1), int(1)], int(1))?;
    match feasible_strict(&sys) {
        Feasibility::Feasible(x) => {
            let shown: Vec<String> = x.iter().map(exact::format_rational).collect();
            println!("feasible at ({})", shown.join(", "));
        }
        Feasibility::Infeasible => println!("infeasible"),
    }

    sys.gt(vec![int(1), int(0)], int(1))?;
    println!("after adding x > 1: feasible = {}", feasible_strict(&sys).is_feasible());
    Ok(())
}
