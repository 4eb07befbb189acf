//! Seeded random changes of basis, for testing that verdicts do not depend on coordinates.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::ComplexStructure;
use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::linalg::{rat, LinearMap};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer matrix with determinant ±1: a signed permutation followed by `n` random
/// transvections `e_i += c·e_j` with `c ∈ {±1, ±2}`. Sparse, so conjugated tensors stay small.
pub fn random_unimodular<R: Rng>(n: usize, rng: &mut R) -> LinearMap {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut m = LinearMap::zeros(n, n);
    for (i, &k) in perm.iter().enumerate() {
        m.set(i, k, rat(if rng.gen_bool(0.5) { 1 } else { -1 }));
    }
    if n < 2 {
        return m;
    }
    for _ in 0..n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c = rat(*[-2, -1, 1, 2].choose(rng).expect("nonempty"));
        // row_i += c · row_j
        for col in 0..n {
            let v = m.get(i, col) + &c * m.get(j, col);
            m.set(i, col, v);
        }
    }
    m
}

/// `(g, J)` transported along a random unimodular `P`, together with `P`.
pub fn random_conjugate<R: Rng>(g: &LieAlgebra, j: &ComplexStructure, rng: &mut R) -> Result<(LieAlgebra, ComplexStructure, LinearMap)> {
    let p = random_unimodular(g.dim(), rng);
    Ok((g.change_basis(&p)?, j.conjugate(&p)?, p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::four_dim;
    use crate::complex::is_abelian;
    use crate::lie::is_isomorphism;

    #[test]
    fn unimodular_is_invertible_and_reproducible() {
        let a = random_unimodular(5, &mut seeded(7));
        let b = random_unimodular(5, &mut seeded(7));
        assert_eq!(a, b);
        assert!(a.is_invertible());
        let inv = a.inverse().unwrap();
        assert!(inv.as_flat().iter().all(|x| x.is_integer()));
    }

    #[test]
    fn conjugate_keeps_abelian() {
        let e = four_dim("S9").unwrap();
        let mut rng = seeded(1);
        for _ in 0..5 {
            let (g, j, p) = random_conjugate(&e.algebra, e.j().unwrap(), &mut rng).unwrap();
            assert!(is_isomorphism(&p, &e.algebra, &g).unwrap());
            assert!(is_abelian(&g, &j).unwrap());
        }
    }
}
