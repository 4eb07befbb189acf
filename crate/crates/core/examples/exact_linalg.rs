// Exact row reduction, kernels, subspaces and commutants over the rationals.

use abelcx::linalg::{commutant, format_rational, frac, rat, LinearMap, Rational, Subspace};

fn show(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = LinearMap::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    let (r, rank) = m.rref();
    println!("rref = {r:?}, rank {rank}");
    let k = m.kernel();
    for v in k.basis_vectors() {
        println!("kernel vector {}", show(&v));
    }
    assert_eq!(k.dim(), 1);

    let inv = LinearMap::from_i64(&[&[2, 1], &[1, 1]]).inverse()?;
    println!("inverse of [[2,1],[1,1]] = {inv:?}");

    let plane = Subspace::span(3, vec![vec![rat(1), rat(1), rat(0)], vec![rat(0), rat(1), rat(1)]])?;
    let line = Subspace::span(3, vec![vec![rat(1), rat(2), rat(1)]])?;
    println!("line ⊂ plane: {}", line.is_subspace_of(&plane)?);
    let coords = plane.coordinates(&[frac(1, 2), rat(1), frac(1, 2)])?.expect("vector lies in the plane");
    println!("coordinates of (1/2, 1, 1/2): {}", show(&coords));

    // Only the complex-linear maps commute with a rotation of the plane.
    let c = commutant(&[LinearMap::standard_rotation(1)], 2)?;
    println!("commutant of the rotation has dimension {}", c.dim());
    assert_eq!(c.dim(), 2);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
