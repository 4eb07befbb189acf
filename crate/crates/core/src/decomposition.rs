//! Flags of J-stable ideals whose successive quotients are central extensions of `aff(A)`.
//!
//! Every certificate is checked when it is built. A failed check means the input violated a
//! hypothesis or something is wrong with the library, so it is reported as an error.

use num_traits::{One, Zero};

use crate::affine::{aff, identify, standard_j, AssociativeAlgebra, Identification};
use crate::complex::{is_abelian, ComplexStructure};
use crate::error::{Error, Result};
use crate::lie::{is_homomorphism, LieAlgebra, SeriesKind};
use crate::linalg::{Frame, LinearMap, Matrix, Rational, Subspace, Vector};

/// Last nonzero term of the derived series, an abelian characteristic ideal.
pub fn find_abelian_ideal(s: &LieAlgebra) -> Result<Subspace> {
    if s.dim() == 0 {
        return Err(Error::ZeroAlgebra);
    }
    let series = s.series(SeriesKind::Derived);
    if !series.reaches_zero() {
        return Err(Error::NotSolvable);
    }
    let u = series.terms.iter().rev().find(|t| !t.is_zero()).expect("s is nonzero").clone();
    debug_assert!(s.is_abelian_subspace(&u).unwrap_or(false));
    Ok(u)
}

/// Data exhibiting `s/z ≅ aff(A)` for `s = u + Ju`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineCertificate {
    /// The abelian ideal.
    pub u: Subspace,
    /// `A = span{ad(Jx) : x ∈ u}` under composition, in the basis `generators`.
    pub a: AssociativeAlgebra,
    /// Matrices `ad(Jx)` forming the basis of `A`.
    pub generators: Vec<LinearMap>,
    /// `f(x + Jy) = (ad(Jy), ad(Jx))`, in `A`-coordinates.
    pub f: LinearMap,
    pub kernel: Subspace,
    /// Target algebra `aff(A)`.
    pub target: LieAlgebra,
    /// Isomorphism type of `A` when it is one of the small known algebras.
    pub identification: Identification,
}

impl AffineCertificate {
    pub fn dim_a(&self) -> usize {
        self.a.dim()
    }

    /// Re-runs every check against `(s, J)`.
    pub fn verify(&self, s: &LieAlgebra, j: &ComplexStructure) -> Result<()> {
        let fail = |what: &str| Err(Error::Certificate(format!("affine certificate: {what}")));
        let report = self.a.check();
        if !report.associative || !report.commutative {
            return fail("A is not commutative and associative");
        }
        if !is_homomorphism(&self.f, s, &self.target)? {
            return fail("f is not a homomorphism");
        }
        if self.f.kernel() != self.kernel || self.kernel != s.center() {
            return fail("kernel of f differs from the center");
        }
        if self.f.rank() != 2 * self.a.dim() {
            return fail("f is not onto aff(A)");
        }
        let lhs = self.f.try_mul(j.matrix())?;
        let rhs = standard_j(self.a.dim()).matrix().try_mul(&self.f)?;
        if lhs != rhs {
            return fail("f does not intertwine J with the standard structure");
        }
        let ju = self.u.mapped(j.matrix())?;
        if !self.u.intersect(&ju)?.is_subspace_of(&s.center())? {
            return fail("u ∩ Ju is not central");
        }
        Ok(())
    }
}

/// Builds and verifies the affine certificate for `s = u + Ju`.
pub fn affine_quotient(s: &LieAlgebra, j: &ComplexStructure, u: &Subspace) -> Result<AffineCertificate> {
    let n = s.dim();
    if j.dim() != n || u.ambient_dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: u.ambient_dim() });
    }
    if !is_abelian(s, j)? {
        return Err(Error::NotAbelian);
    }
    if !s.is_ideal(u)? {
        return Err(Error::NotAnIdeal);
    }
    if !s.is_abelian_subspace(u)? {
        return Err(Error::HypothesisViolated("u is not an abelian subalgebra".into()));
    }
    let ju = u.mapped(j.matrix())?;
    if !u.sum(&ju)?.is_full() {
        return Err(Error::HypothesisViolated("u + Ju ≠ s".into()));
    }

    // Greedy frame for s drawn from (u basis, J·u basis): every vector splits as x + Jy.
    let u_basis = u.basis_vectors();
    let mut chosen: Vec<(bool, usize)> = Vec::new();
    let mut vectors: Vec<Vector> = Vec::new();
    let mut candidates: Vec<(bool, usize, Vector)> = u_basis.iter().cloned().enumerate().map(|(i, x)| (false, i, x)).collect();
    for (i, x) in u_basis.iter().enumerate() {
        candidates.push((true, i, j.apply(x)?));
    }
    for (is_j, idx, v) in candidates {
        let mut trial = vectors.clone();
        trial.push(v.clone());
        if Subspace::span(n, trial)?.dim() == vectors.len() + 1 {
            vectors.push(v);
            chosen.push((is_j, idx));
        }
    }
    let frame = Frame::new(n, vectors)?;

    let ad_j = |x: &[Rational]| -> Result<LinearMap> { s.ad(&j.apply(x)?) };
    let flat = |m: &LinearMap| m.as_flat().to_vec();
    let mut generators: Vec<LinearMap> = Vec::new();
    for x in &u_basis {
        let m = ad_j(x)?;
        let mut trial: Vec<Vector> = generators.iter().map(flat).collect();
        trial.push(flat(&m));
        if Subspace::span(n * n, trial)?.dim() == generators.len() + 1 {
            generators.push(m);
        }
    }
    let k = generators.len();
    let a_frame = Frame::new(n * n, generators.iter().map(flat).collect())?;
    let coords = |m: &LinearMap| -> Result<Vector> {
        a_frame.solve(&flat(m))?.ok_or_else(|| Error::Certificate("A is not closed under composition".into()))
    };
    let mut table = vec![vec![Vec::new(); k]; k];
    for p in 0..k {
        for q in 0..k {
            table[p][q] = coords(&generators[p].try_mul(&generators[q])?)?;
        }
    }
    let a = AssociativeAlgebra::new((1..=k).map(|i| format!("A{i}")).collect(), table)?;
    if !a.is_commutative() {
        return Err(Error::Certificate("A is not commutative".into()));
    }

    let mut columns = Vec::with_capacity(n);
    for c in 0..n {
        let e = s.unit(c);
        let alpha = frame.solve(&e)?.expect("frame spans s");
        let (mut x, mut y) = (vec![Rational::zero(); n], vec![Rational::zero(); n]);
        for (coef, &(is_j, idx)) in alpha.iter().zip(&chosen) {
            let target = if is_j { &mut y } else { &mut x };
            for (t, b) in target.iter_mut().zip(&u_basis[idx]) {
                *t += coef * b;
            }
        }
        let mut col = coords(&ad_j(&y)?)?;
        col.extend(coords(&ad_j(&x)?)?);
        columns.push(col);
    }
    let f = Matrix::from_columns(&columns, 2 * k)?;
    let target = aff(&a)?;
    let cert = AffineCertificate {
        u: u.clone(),
        kernel: f.kernel(),
        identification: identify(&a)?,
        a,
        generators,
        f,
        target,
    };
    cert.verify(s, j)?;
    Ok(cert)
}

/// Quotient by a J-stable ideal with the induced structure, plus the quotient data.
fn descend(s: &LieAlgebra, j: &ComplexStructure, ideal: &Subspace) -> Result<(crate::lie::Quotient, ComplexStructure)> {
    if !j.preserves(ideal)? {
        return Err(Error::NotJStable);
    }
    let q = s.quotient(ideal)?;
    let section = section_matrix(s.dim(), &q.complement);
    let jq = ComplexStructure::new(q.projection.try_mul(j.matrix())?.try_mul(&section)?)?;
    if is_abelian(s, j)? && !is_abelian(&q.algebra, &jq)? {
        return Err(Error::Certificate("induced structure is not abelian".into()));
    }
    Ok((q, jq))
}

fn section_matrix(n: usize, complement: &[usize]) -> LinearMap {
    LinearMap::from_fn(n, complement.len(), |i, a| {
        if complement[a] == i {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `s/ideal` with the structure induced by `J`.
pub fn induced_structure(s: &LieAlgebra, j: &ComplexStructure, ideal: &Subspace) -> Result<(LieAlgebra, ComplexStructure)> {
    let (q, jq) = descend(s, j, ideal)?;
    Ok((q.algebra, jq))
}

/// One step `s_{j−1} ⊂ s_j` of the flag.
#[derive(Clone, Debug, PartialEq)]
pub struct FlagStep {
    /// `s_j` in coordinates of the original algebra.
    pub ideal: Subspace,
    /// `dim s_j/s_{j−1}`.
    pub quotient_dim: usize,
    /// `s_j/s_{j−1}` in its own basis, with the induced structure.
    pub block: LieAlgebra,
    pub block_j: ComplexStructure,
    pub certificate: AffineCertificate,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FlagDecomposition {
    pub steps: Vec<FlagStep>,
    /// Derived length of the input; reported, never asserted.
    pub derived_length: Option<usize>,
}

impl FlagDecomposition {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Dimensions of the algebras `A_j`.
    pub fn a_dims(&self) -> Vec<usize> {
        self.steps.iter().map(|st| st.certificate.dim_a()).collect()
    }

    /// Re-checks the flag against `(s, J)`: strictly increasing J-stable ideals ending at `s`,
    /// and every certificate.
    pub fn verify(&self, s: &LieAlgebra, j: &ComplexStructure) -> Result<()> {
        let fail = |what: String| Err(Error::Certificate(what));
        let mut prev = Subspace::zero(s.dim());
        for (i, st) in self.steps.iter().enumerate() {
            if !prev.is_subspace_of(&st.ideal)? || st.ideal.dim() != prev.dim() + st.quotient_dim || st.quotient_dim == 0 {
                return fail(format!("step {} does not strictly extend the previous ideal", i + 1));
            }
            if !s.is_ideal(&st.ideal)? || !j.preserves(&st.ideal)? {
                return fail(format!("step {} is not a J-stable ideal", i + 1));
            }
            st.certificate.verify(&st.block, &st.block_j)?;
            prev = st.ideal.clone();
        }
        if !prev.is_full() {
            return fail("flag does not reach the whole algebra".into());
        }
        Ok(())
    }
}

/// Builds the full flag. `first_u` replaces the default abelian ideal in the first step.
pub fn flag_decomposition(s: &LieAlgebra, j: &ComplexStructure, first_u: Option<&Subspace>) -> Result<FlagDecomposition> {
    if j.dim() != s.dim() {
        return Err(Error::DimensionMismatch { expected: s.dim(), found: j.dim() });
    }
    if !is_abelian(s, j)? {
        return Err(Error::NotAbelian);
    }
    let n = s.dim();
    let mut current = s.clone();
    let mut cur_j = j.clone();
    // Columns: current basis vectors as vectors of s (modulo the ideal built so far).
    let mut section = LinearMap::identity(n);
    let mut ideal = Subspace::zero(n);
    let mut steps = Vec::new();
    while current.dim() > 0 {
        let u = match (steps.is_empty(), first_u) {
            (true, Some(u)) => u.clone(),
            _ => find_abelian_ideal(&current)?,
        };
        let s1 = u.sum(&u.mapped(cur_j.matrix())?)?;
        if !current.is_ideal(&s1)? || !cur_j.preserves(&s1)? {
            return Err(Error::Certificate("u + Ju is not a J-stable ideal".into()));
        }
        let frame = Frame::new(current.dim(), s1.basis_vectors())?;
        let names = s1.pivots().iter().map(|&p| current.basis_names()[p].clone()).collect();
        let block = current.subalgebra(&frame, names)?;
        let restrict = |v: &Vector| frame.solve(v).map(|c| c.expect("s1 is J-stable"));
        let jcols = frame.vectors().iter().map(|v| restrict(&cur_j.apply(v)?)).collect::<Result<Vec<_>>>()?;
        let block_j = ComplexStructure::new(Matrix::from_columns(&jcols, frame.len())?)?;
        let u_block = Subspace::span(frame.len(), u.basis_vectors().iter().map(restrict).collect::<Result<Vec<_>>>()?)?;
        let certificate = affine_quotient(&block, &block_j, &u_block)?;

        let lifted = s1.basis_vectors().iter().map(|v| section.apply(v)).collect::<Result<Vec<_>>>()?;
        ideal = ideal.sum(&Subspace::span(n, lifted)?)?;
        steps.push(FlagStep { ideal: ideal.clone(), quotient_dim: s1.dim(), block, block_j, certificate });

        let (q, jq) = descend(&current, &cur_j, &s1)?;
        section = section.try_mul(&section_matrix(current.dim(), &q.complement))?;
        current = q.algebra;
        cur_j = jq;
    }
    let flag = FlagDecomposition { steps, derived_length: s.derived_length() };
    flag.verify(s, j)?;
    Ok(flag)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::AlgebraClass;
    use crate::catalog::{affine_line, example_family_default, four_dim, heisenberg_example};
    use crate::linalg::unit_vector;

    #[test]
    fn abelian_ideal_examples() {
        let e = affine_line().unwrap();
        let u = find_abelian_ideal(&e.algebra).unwrap();
        assert_eq!(u, e.algebra.commutator_subalgebra());
        let ab = LieAlgebra::abelian(3);
        assert!(find_abelian_ideal(&ab).unwrap().is_full());
        assert_eq!(find_abelian_ideal(&LieAlgebra::abelian(0)), Err(Error::ZeroAlgebra));
        let s11 = four_dim("S11").unwrap();
        let u = find_abelian_ideal(&s11.algebra).unwrap();
        assert_eq!(u, Subspace::span(4, vec![unit_vector(4, 2), unit_vector(4, 3)]).unwrap());
    }

    #[test]
    fn heisenberg_certificate() {
        let e = heisenberg_example(1).unwrap();
        // u = span{z, x1}
        let u = Subspace::span(4, vec![unit_vector(4, 1), unit_vector(4, 2)]).unwrap();
        let cert = affine_quotient(&e.algebra, e.j().unwrap(), &u).unwrap();
        assert_eq!(cert.dim_a(), 1);
        assert_eq!(cert.identification.class, AlgebraClass::Null(1));
        assert_eq!(cert.kernel, e.algebra.center());
    }

    #[test]
    fn aff_c_certificate() {
        let e = four_dim("S11").unwrap();
        let u = find_abelian_ideal(&e.algebra).unwrap();
        let cert = affine_quotient(&e.algebra, e.j().unwrap(), &u).unwrap();
        assert_eq!(cert.identification.class, AlgebraClass::Complexes);
        assert!(cert.kernel.is_zero());
    }

    #[test]
    fn abelian_plane_certificate() {
        let s = LieAlgebra::abelian(2);
        let j = ComplexStructure::new(LinearMap::standard_rotation(1)).unwrap();
        let cert = affine_quotient(&s, &j, &Subspace::full(2)).unwrap();
        assert_eq!(cert.dim_a(), 0);
        assert!(cert.kernel.is_full());
    }

    #[test]
    fn rejects_bad_u() {
        let e = heisenberg_example(1).unwrap();
        let u = Subspace::span(4, vec![unit_vector(4, 2), unit_vector(4, 3)]).unwrap();
        assert!(affine_quotient(&e.algebra, e.j().unwrap(), &u).is_err());
    }

    #[test]
    fn induced_examples() {
        let e = example_family_default(1, 1).unwrap();
        let v = Subspace::span(4, vec![unit_vector(4, 2), unit_vector(4, 3)]).unwrap();
        let (q, jq) = induced_structure(&e.algebra, e.j().unwrap(), &v).unwrap();
        assert!(q.is_abelian());
        assert_eq!(jq.matrix(), &LinearMap::standard_rotation(1));
        let (z, _) = induced_structure(&e.algebra, e.j().unwrap(), &Subspace::full(4)).unwrap();
        assert_eq!(z.dim(), 0);
        let (same, sj) = induced_structure(&e.algebra, e.j().unwrap(), &Subspace::zero(4)).unwrap();
        assert_eq!((&same, &sj), (&e.algebra, e.j().unwrap()));
        let line = Subspace::span(4, vec![unit_vector(4, 2)]).unwrap();
        assert_eq!(induced_structure(&e.algebra, e.j().unwrap(), &line), Err(Error::NotJStable));
    }

    #[test]
    fn flags() {
        let s10 = four_dim("S10").unwrap();
        let flag = flag_decomposition(&s10.algebra, s10.j().unwrap(), None).unwrap();
        assert_eq!(flag.len(), 1);
        assert_eq!(flag.steps[0].certificate.identification.class, AlgebraClass::Split);

        let fam = example_family_default(1, 1).unwrap();
        let flag = flag_decomposition(&fam.algebra, fam.j().unwrap(), None).unwrap();
        assert_eq!(flag.len(), 2);
        assert_eq!(flag.steps[0].quotient_dim, 2);
        assert_eq!(flag.a_dims(), vec![0, 0]);

        let ab = LieAlgebra::abelian(4);
        let flag = flag_decomposition(&ab, &ComplexStructure::new(LinearMap::standard_rotation(2)).unwrap(), None).unwrap();
        assert_eq!((flag.len(), flag.a_dims()), (1, vec![0]));
    }

    #[test]
    fn flag_rejects_non_abelian() {
        let g = aff(&AssociativeAlgebra::upper_triangular2()).unwrap();
        assert_eq!(flag_decomposition(&g, &standard_j(3), None), Err(Error::NotAbelian));
    }

    #[test]
    fn user_supplied_u() {
        let e = heisenberg_example(1).unwrap();
        let u = Subspace::span(4, vec![unit_vector(4, 1), unit_vector(4, 2)]).unwrap();
        let flag = flag_decomposition(&e.algebra, e.j().unwrap(), Some(&u)).unwrap();
        assert_eq!(flag.steps[0].ideal.dim(), 4);
        let default = flag_decomposition(&e.algebra, e.j().unwrap(), None).unwrap();
        assert_eq!(default.len(), 2);
    }
}
