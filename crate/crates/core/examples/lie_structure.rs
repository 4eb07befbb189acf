// Structure constants, series, center and quotients.

use abelcx::catalog::heisenberg;
use abelcx::lie::SeriesKind;
use abelcx::linalg::unit_vector;
use abelcx::affine::{aff, AssociativeAlgebra};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = heisenberg(2)?;
    println!("h_2 basis {:?}", h.basis_names());
    println!("valid: {}", h.validate().is_valid());
    println!("lower central dims: {:?}", h.series(SeriesKind::LowerCentral).dims());
    println!("nilpotency class: {:?}", h.nilpotency_class());
    assert_eq!(h.nilpotency_class(), Some(2));

    let q = h.quotient(&h.center())?;
    println!("h_2 / z is abelian of dimension {}: {}", q.algebra.dim(), q.algebra.is_abelian());

    let g = aff(&AssociativeAlgebra::upper_triangular2())?;
    println!("aff(upper2): derived dims {:?}, solvable {}", g.series(SeriesKind::Derived).dims(), g.is_solvable());
    let x = unit_vector(g.dim(), 0);
    println!("ad(e_1) =\n{:?}", g.ad(&x)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
