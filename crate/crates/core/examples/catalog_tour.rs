// The four-dimensional table and the infinite families.

use abelcx::catalog::{by_id, example_family, free_two_step, FOUR_DIM_IDS};
use abelcx::linalg::LinearMap;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for id in FOUR_DIM_IDS {
        let e = by_id(id)?;
        let g = &e.algebra;
        println!(
            "{id:>4}: center {}, commutator {}, nilpotent {}, A = {:?}",
            g.center().dim(),
            g.commutator_subalgebra().dim(),
            g.is_nilpotent(),
            e.affine_model.as_ref().map(|a| a.basis_names().to_vec())
        );
    }

    let jv = LinearMap::standard_rotation(1);
    let family = example_family(2, 1, &[LinearMap::identity(2), jv.clone()], &jv)?;
    println!("family (k=2, n=1): dim {}, commutator codim {}", family.algebra.dim(), family.commutator_codim());

    let f3 = free_two_step(3)?;
    println!("free two-step rank 3: dim {}, center {}", f3.algebra.dim(), f3.algebra.center().dim());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
