// Integrability, abelian-ness and its equivalent characterizations.

use abelcx::catalog::four_dim;
use abelcx::complex::{
    gl_with_structure, is_abelian, is_complex_bilinear, is_integrable, splitting, AbelianCharacterizations, Side,
};
use abelcx::linalg::LinearMap;
use abelcx::random::{random_conjugate, seeded};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for id in ["S8", "S11"] {
        let e = four_dim(id)?;
        let j = e.j().expect("catalog structure");
        let ch = AbelianCharacterizations::evaluate(&e.algebra, j)?;
        println!("{id}: {ch:?}");
        assert!(ch.agree() && ch.abelian);
        let sp = splitting(&e.algebra, j)?;
        println!("  g^(1,0) has complex dimension {}", sp.g10.dim());
    }

    // Left multiplication by a complex structure on R^2 gives an integrable, non-abelian J on gl(2).
    let (gl2, j) = gl_with_structure(2, &LinearMap::standard_rotation(1), Side::Left)?;
    println!(
        "gl(2), left: integrable {}, abelian {}, complex bilinear {}",
        is_integrable(&gl2, &j)?,
        is_abelian(&gl2, &j)?,
        is_complex_bilinear(&gl2, &j)?
    );

    // The verdicts do not depend on the basis.
    let e = four_dim("S9")?;
    let (g, j, _) = random_conjugate(&e.algebra, e.j().expect("catalog structure"), &mut seeded(3))?;
    println!("S9 in a random basis: abelian {}", is_abelian(&g, &j)?);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
