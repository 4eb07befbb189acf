// Decomposing an abelian structure into affine pieces.

use abelcx::catalog::{by_id, example_family_default};
use abelcx::decomposition::flag_decomposition;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut entries = vec![by_id("S10")?, by_id("RxH2")?, by_id("toeplitz-3")?];
    for (k, n) in [(1, 1), (2, 1), (1, 2)] {
        entries.push(example_family_default(k, n)?);
    }
    for e in entries {
        let j = e.j().expect("entry carries a structure");
        let flag = flag_decomposition(&e.algebra, j, None)?;
        let pieces: Vec<String> = flag
            .steps
            .iter()
            .map(|s| format!("+{} (A dim {}, {:?})", s.quotient_dim, s.certificate.dim_a(), s.certificate.identification.class))
            .collect();
        println!("{}: {}  derived length {:?}", e.id, pieces.join(" "), flag.derived_length);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
