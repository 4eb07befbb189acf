// aff(A) for commutative algebras: abelian structures, hypercomplex pairs, the flat connection.

use abelcx::affine::{
    aff, connection_checks, identify, standard_j, standard_k, toeplitz_algebra, AssociativeAlgebra, ComplexAlgebraStructure,
    KConvention,
};
use abelcx::complex::{is_abelian, is_abelian_hypercomplex};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["reals", "diag2", "jordan2", "split2", "trivial3"] {
        let a = AssociativeAlgebra::by_name(name)?;
        let g = aff(&a)?;
        let class = identify(&a)?.class;
        println!("aff({name}): dim {}, J abelian {}, A ≅ {class:?}", g.dim(), is_abelian(&g, &standard_j(a.dim()))?);
    }

    let c = ComplexAlgebraStructure::complexes();
    let g = aff(c.base())?;
    for conv in [KConvention::NegateFirst, KConvention::NegateSecond] {
        let k = standard_k(&c, conv);
        println!("aff(C), {conv:?}: abelian hypercomplex {}", is_abelian_hypercomplex(&g, &standard_j(2), &k)?);
    }

    for k in 1..=5 {
        let t = toeplitz_algebra(k)?;
        let g = aff(t.base())?;
        println!("aff(toeplitz {k}): nilpotency class {:?}", g.nilpotency_class());
    }

    let report = connection_checks(&AssociativeAlgebra::upper_triangular2())?;
    println!("connection on aff(upper2): {report:?}");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
