//! Complex structures on Lie algebras: integrability, abelian-ness and its equivalent forms.
//!
//! All identities are bilinear in their two arguments, so checking them on pairs of basis
//! vectors decides them on the whole algebra. Every check below relies on this.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{commutant, gaussian, lift, Gaussian, LinearMap, Matrix, Rational, Subspace, Vector};

/// Endomorphism `J` with `J² = −I`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexStructure {
    j: LinearMap,
}

impl ComplexStructure {
    pub fn new(j: LinearMap) -> Result<Self> {
        if !j.squares_to_minus_identity() {
            return Err(Error::NotAComplexStructure);
        }
        Ok(Self { j })
    }

    pub fn matrix(&self) -> &LinearMap {
        &self.j
    }

    pub fn dim(&self) -> usize {
        self.j.rows()
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vector> {
        self.j.apply(v)
    }

    pub fn negated(&self) -> Self {
        Self { j: -&self.j }
    }

    /// `P J P⁻¹`, the structure transported along `P`.
    pub fn conjugate(&self, p: &LinearMap) -> Result<Self> {
        let inv = p.inverse()?;
        Self::new(p.try_mul(&self.j)?.try_mul(&inv)?)
    }

    /// Whether `J` maps `s` into itself.
    pub fn preserves(&self, s: &Subspace) -> Result<bool> {
        s.mapped(&self.j)?.is_subspace_of(s)
    }

    /// Matrix of `J` on the dual space, `α ↦ −α∘J`, i.e. `−Jᵀ` in the dual basis.
    pub fn dual(&self) -> LinearMap {
        -&self.j.transpose()
    }
}

fn check_dims(g: &LieAlgebra, j: &ComplexStructure) -> Result<()> {
    if g.dim() == j.dim() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: g.dim(), found: j.dim() })
    }
}

fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `J[x,y] − [Jx,y] − [x,Jy] − J[Jx,Jy]`.
pub fn nijenhuis_defect(g: &LieAlgebra, j: &ComplexStructure, x: &[Rational], y: &[Rational]) -> Result<Vector> {
    check_dims(g, j)?;
    let (jx, jy) = (j.apply(x)?, j.apply(y)?);
    let a = j.apply(&g.bracket(x, y)?)?;
    let b = g.bracket(&jx, y)?;
    let c = g.bracket(x, &jy)?;
    let d = j.apply(&g.bracket(&jx, &jy)?)?;
    Ok(sub(&sub(&sub(&a, &b), &c), &d))
}

fn all_basis_pairs(g: &LieAlgebra, mut pred: impl FnMut(&Vector, &Vector) -> Result<bool>) -> Result<bool> {
    let n = g.dim();
    for a in 0..n {
        for b in a + 1..n {
            if !pred(&g.unit(a), &g.unit(b))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Vanishing Nijenhuis tensor.
pub fn is_integrable(g: &LieAlgebra, j: &ComplexStructure) -> Result<bool> {
    check_dims(g, j)?;
    all_basis_pairs(g, |x, y| Ok(nijenhuis_defect(g, j, x, y)?.iter().all(Zero::is_zero)))
}

/// `[Jx, Jy] = [x, y]`.
pub fn is_abelian(g: &LieAlgebra, j: &ComplexStructure) -> Result<bool> {
    check_dims(g, j)?;
    all_basis_pairs(g, |x, y| Ok(g.bracket(&j.apply(x)?, &j.apply(y)?)? == g.bracket(x, y)?))
}

/// `J[x, y] = [x, Jy]`, i.e. `g` is a complex Lie algebra.
pub fn is_complex_bilinear(g: &LieAlgebra, j: &ComplexStructure) -> Result<bool> {
    check_dims(g, j)?;
    let n = g.dim();
    for a in 0..n {
        for b in 0..n {
            let (x, y) = (g.unit(a), g.unit(b));
            if j.apply(&g.bracket(&x, &y)?)? != g.bracket(&x, &j.apply(&y)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// [`is_complex_bilinear`] restricted to a `J`-stable subalgebra.
pub fn is_complex_bilinear_on(g: &LieAlgebra, j: &ComplexStructure, s: &Subspace) -> Result<bool> {
    check_dims(g, j)?;
    if !j.preserves(s)? {
        return Err(Error::NotJStable);
    }
    let basis = s.basis_vectors();
    for x in &basis {
        for y in &basis {
            if j.apply(&g.bracket(x, y)?)? != g.bracket(x, &j.apply(y)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `J([x,y] − [Jx,Jy]) = [Jx,y] − [x,Jy]` on all basis pairs.
pub fn rearranged_nijenhuis_holds(g: &LieAlgebra, j: &ComplexStructure) -> Result<bool> {
    check_dims(g, j)?;
    all_basis_pairs(g, |x, y| {
        let (jx, jy) = (j.apply(x)?, j.apply(y)?);
        let lhs = j.apply(&sub(&g.bracket(x, y)?, &g.bracket(&jx, &jy)?))?;
        let rhs = sub(&g.bracket(&jx, y)?, &g.bracket(x, &jy)?);
        Ok(lhs == rhs)
    })
}

fn anticommute(j: &ComplexStructure, k: &ComplexStructure) -> Result<bool> {
    let jk = j.matrix().try_mul(k.matrix())?;
    let kj = k.matrix().try_mul(j.matrix())?;
    Ok(jk == -&kj)
}

pub fn is_hypercomplex(g: &LieAlgebra, j: &ComplexStructure, k: &ComplexStructure) -> Result<bool> {
    check_dims(g, k)?;
    Ok(anticommute(j, k)? && is_integrable(g, j)? && is_integrable(g, k)?)
}

pub fn is_abelian_hypercomplex(g: &LieAlgebra, j: &ComplexStructure, k: &ComplexStructure) -> Result<bool> {
    check_dims(g, k)?;
    Ok(anticommute(j, k)? && is_abelian(g, j)? && is_abelian(g, k)?)
}

/// The `±i` eigenspaces of `J` inside the complexification.
#[derive(Clone, Debug, PartialEq)]
pub struct Splitting {
    /// Span of `X − iJX`.
    pub g10: Subspace<Gaussian>,
    /// Span of `X + iJX`.
    pub g01: Subspace<Gaussian>,
}

impl Splitting {
    /// `g10 ⊕ g01` is everything and `g01` is the conjugate of `g10`.
    pub fn is_valid(&self) -> Result<bool> {
        let n = self.g10.ambient_dim();
        let conj = self.g10.map_entries(|z| z.conj());
        Ok(self.g10.dim() + self.g01.dim() == n
            && self.g10.intersect(&self.g01)?.is_zero()
            && conj == self.g01)
    }
}

pub fn splitting(g: &LieAlgebra, j: &ComplexStructure) -> Result<Splitting> {
    check_dims(g, j)?;
    let n = g.dim();
    let make = |sign: i64| -> Result<Subspace<Gaussian>> {
        let vectors = (0..n)
            .map(|k| {
                let jk = j.matrix().column(k);
                (0..n)
                    .map(|i| {
                        let re = if i == k { Rational::one() } else { Rational::zero() };
                        let im = if sign < 0 { -jk[i].clone() } else { jk[i].clone() };
                        gaussian(re, im)
                    })
                    .collect()
            })
            .collect();
        Subspace::span(n, vectors)
    };
    Ok(Splitting { g10: make(-1)?, g01: make(1)? })
}

/// Subalgebra closure and abelian-ness of one complex subspace.
fn complex_subalgebra_status(g: &LieAlgebra, s: &Subspace<Gaussian>) -> Result<(bool, bool)> {
    let basis = s.basis_vectors();
    let mut closed = true;
    let mut abelian = true;
    for x in &basis {
        for y in &basis {
            let z = g.bracket_over(x, y, lift);
            if z.iter().any(|c| !c.is_zero()) {
                abelian = false;
                if !s.contains(&z)? {
                    closed = false;
                }
            }
        }
    }
    Ok((closed, abelian))
}

/// Whether `g^{1,0}` and `g^{0,1}` are subalgebras (integrability).
pub fn subalgebras_closed(g: &LieAlgebra, j: &ComplexStructure) -> Result<(bool, bool)> {
    let s = splitting(g, j)?;
    Ok((complex_subalgebra_status(g, &s.g10)?.0, complex_subalgebra_status(g, &s.g01)?.0))
}

/// Whether `g^{1,0}` and `g^{0,1}` are abelian.
pub fn subalgebras_abelian(g: &LieAlgebra, j: &ComplexStructure) -> Result<(bool, bool)> {
    let s = splitting(g, j)?;
    Ok((complex_subalgebra_status(g, &s.g10)?.1, complex_subalgebra_status(g, &s.g01)?.1))
}

/// `ad(J e_k) = R_{−J}(ad e_k) = −ad(e_k)∘J` for every basis vector.
pub fn adjoint_holomorphy(g: &LieAlgebra, j: &ComplexStructure) -> Result<bool> {
    check_dims(g, j)?;
    let minus_j = j.negated();
    for k in 0..g.dim() {
        let lhs = g.ad(&j.matrix().column(k))?;
        let rhs = g.ad_basis(k).try_mul(minus_j.matrix())?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `ad*(J e_k) = L_J(ad* e_k)` with `ad*(x) = −ad(x)ᵀ` and `J` acting on `g*` as `−Jᵀ`.
pub fn coadjoint_holomorphy(g: &LieAlgebra, j: &ComplexStructure) -> Result<bool> {
    check_dims(g, j)?;
    let dual_j = j.dual();
    let coad = |x: &[Rational]| -> Result<LinearMap> { Ok(-&g.ad(x)?.transpose()) };
    for k in 0..g.dim() {
        let lhs = coad(&j.matrix().column(k))?;
        let rhs = dual_j.try_mul(&coad(&g.unit(k))?)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The four equivalent characterizations of an abelian complex structure, evaluated independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbelianCharacterizations {
    pub abelian: bool,
    pub g10_abelian: bool,
    pub g01_abelian: bool,
    pub adjoint_holomorphic: bool,
    pub coadjoint_holomorphic: bool,
}

impl AbelianCharacterizations {
    pub fn evaluate(g: &LieAlgebra, j: &ComplexStructure) -> Result<Self> {
        let (g10_abelian, g01_abelian) = subalgebras_abelian(g, j)?;
        Ok(Self {
            abelian: is_abelian(g, j)?,
            g10_abelian,
            g01_abelian,
            adjoint_holomorphic: adjoint_holomorphy(g, j)?,
            coadjoint_holomorphic: coadjoint_holomorphy(g, j)?,
        })
    }

    pub fn agree(&self) -> bool {
        let v = self.abelian;
        [self.g10_abelian, self.g01_abelian, self.adjoint_holomorphic, self.coadjoint_holomorphic]
            .iter()
            .all(|&b| b == v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// `gl(n)` with the commutator bracket, basis `E_ij` in row-major order.
pub fn gl_algebra(n: usize) -> LieAlgebra {
    let nn = n * n;
    let mut c = vec![vec![vec![Rational::zero(); nn]; nn]; nn];
    // [E_ij, E_kl] = δ_jk E_il − δ_li E_kj
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let v = &mut c[i * n + j][k * n + l];
                    if j == k {
                        v[i * n + l] += Rational::one();
                    }
                    if l == i {
                        v[k * n + j] -= Rational::one();
                    }
                }
            }
        }
    }
    let names = (0..n).flat_map(|i| (0..n).map(move |j| format!("E{}{}", i + 1, j + 1))).collect();
    LieAlgebra::from_tensor(names, c).expect("gl(n) satisfies the Lie axioms")
}

/// `gl(n)` with `L_I(u) = I∘u` or `R_I(u) = u∘I` for a complex endomorphism `I` of `ℝⁿ`.
pub fn gl_with_structure(n: usize, i: &LinearMap, side: Side) -> Result<(LieAlgebra, ComplexStructure)> {
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if i.rows() != n || i.cols() != n {
        return Err(Error::ShapeMismatch { left: (n, n), right: (i.rows(), i.cols()) });
    }
    if !i.squares_to_minus_identity() {
        return Err(Error::NotAComplexStructure);
    }
    let nn = n * n;
    let mut j = Matrix::zeros(nn, nn);
    for k in 0..n {
        for l in 0..n {
            let col = k * n + l;
            for m in 0..n {
                match side {
                    // I E_kl = Σ_m I_mk E_ml
                    Side::Left => j.set(m * n + l, col, i.get(m, k).clone()),
                    // E_kl I = Σ_m I_lm E_km
                    Side::Right => j.set(k * n + m, col, i.get(l, m).clone()),
                }
            }
        }
    }
    let g = gl_algebra(n);
    let structure = ComplexStructure::new(j)?;
    if !is_integrable(&g, &structure)? {
        return Err(Error::Certificate(format!("{side:?} multiplication is not integrable on gl({n})")));
    }
    Ok((g, structure))
}

/// `gl_ℂ(V)`: endomorphisms commuting with `I`, as a subspace of `gl(n)`.
pub fn complex_linear_subalgebra(i: &LinearMap) -> Result<Subspace> {
    commutant(std::slice::from_ref(i), i.rows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn aff_r() -> (LieAlgebra, ComplexStructure) {
        let g = LieAlgebra::from_brackets(names(&["x", "y"]), &[(0, 1, vec![rat(1), rat(0)])]).unwrap();
        // Jx = y, Jy = −x
        let j = ComplexStructure::new(LinearMap::from_i64(&[&[0, -1], &[1, 0]])).unwrap();
        (g, j)
    }

    fn r_h1() -> (LieAlgebra, ComplexStructure) {
        let g = LieAlgebra::from_brackets(names(&["w", "z", "x1", "y1"]), &[(2, 3, vec![rat(0), rat(1), rat(0), rat(0)])])
            .unwrap();
        // Jz = w, Jw = −z, Jx1 = y1, Jy1 = −x1
        let j = ComplexStructure::new(LinearMap::from_i64(&[
            &[0, 1, 0, 0],
            &[-1, 0, 0, 0],
            &[0, 0, 0, -1],
            &[0, 0, 1, 0],
        ]))
        .unwrap();
        (g, j)
    }

    #[test]
    fn rejects_non_complex_structure() {
        assert!(matches!(ComplexStructure::new(LinearMap::identity(2)), Err(Error::NotAComplexStructure)));
    }

    #[test]
    fn nijenhuis_examples() {
        let (g, j) = aff_r();
        let x = g.unit(0);
        assert!(nijenhuis_defect(&g, &j, &x, &x).unwrap().iter().all(Zero::is_zero));
        assert!(nijenhuis_defect(&g, &j, &g.unit(0), &g.unit(1)).unwrap().iter().all(Zero::is_zero));
        assert!(is_integrable(&g, &j).unwrap());
        assert!(is_abelian(&g, &j).unwrap());
        assert!(!is_complex_bilinear(&g, &j).unwrap());
    }

    #[test]
    fn heisenberg_characterizations() {
        let (g, j) = r_h1();
        let v = AbelianCharacterizations::evaluate(&g, &j).unwrap();
        assert!(v.abelian && v.agree());
        assert!(rearranged_nijenhuis_holds(&g, &j).unwrap());
    }

    #[test]
    fn splitting_is_a_decomposition() {
        let (g, j) = r_h1();
        let s = splitting(&g, &j).unwrap();
        assert_eq!(s.g10.dim(), 2);
        assert!(s.is_valid().unwrap());
        assert_eq!(subalgebras_closed(&g, &j).unwrap(), (true, true));
        let a = LieAlgebra::abelian(2);
        let std_j = ComplexStructure::new(LinearMap::standard_rotation(1)).unwrap();
        assert_eq!(subalgebras_abelian(&a, &std_j).unwrap(), (true, true));
        let (g, j) = aff_r();
        assert_eq!(subalgebras_abelian(&g, &j).unwrap(), (true, true));
    }

    #[test]
    fn holomorphy_on_abelian_algebra() {
        let a = LieAlgebra::abelian(4);
        let j = ComplexStructure::new(LinearMap::standard_rotation(2)).unwrap();
        assert!(adjoint_holomorphy(&a, &j).unwrap());
        assert!(coadjoint_holomorphy(&a, &j).unwrap());
    }

    #[test]
    fn hypercomplex_rejects_equal_pair() {
        let (g, j) = r_h1();
        assert!(!is_hypercomplex(&g, &j, &j).unwrap());
        assert!(!is_abelian_hypercomplex(&g, &j, &j).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let (g, _) = r_h1();
        let j = ComplexStructure::new(LinearMap::standard_rotation(1)).unwrap();
        assert!(is_abelian(&g, &j).is_err());
    }

    #[test]
    fn gl2_left_and_right_are_integrable() {
        let rot = LinearMap::standard_rotation(1);
        for side in [Side::Left, Side::Right] {
            let (g, j) = gl_with_structure(2, &rot, side).unwrap();
            assert_eq!(g.dim(), 4);
            assert!(is_integrable(&g, &j).unwrap());
            let glc = complex_linear_subalgebra(&rot).unwrap();
            assert_eq!(glc.dim(), 2);
            assert!(g.is_subalgebra(&glc).unwrap());
            assert!(is_complex_bilinear_on(&g, &j, &glc).unwrap());
        }
        assert!(matches!(gl_with_structure(3, &LinearMap::identity(3), Side::Left), Err(Error::OddDimension(3))));
        assert!(matches!(
            gl_with_structure(2, &LinearMap::identity(2), Side::Left),
            Err(Error::NotAComplexStructure)
        ));
    }

    #[test]
    fn gl2_left_structure_is_not_abelian() {
        // gl(2) is not solvable, so no abelian structure can exist on it.
        let (g, j) = gl_with_structure(2, &LinearMap::standard_rotation(1), Side::Left).unwrap();
        let v = AbelianCharacterizations::evaluate(&g, &j).unwrap();
        assert!(!v.abelian && v.agree());
    }
}
