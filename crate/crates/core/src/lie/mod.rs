//! Lie algebras given by structure constants in a named basis.

mod series;

pub use series::{SeriesKind, SeriesReport};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{combine, is_zero_vector, unit_vector, Field, Frame, LinearMap, Matrix, Rational, Subspace, Vector};

/// Real Lie algebra `g` with basis `e_0 … e_{n-1}`.
///
/// `c[i][j]` holds the coordinates of `[e_i, e_j]`. Both orders are stored, so a malformed
/// table is reported by [`LieAlgebra::validate`] rather than silently symmetrized.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra {
    basis_names: Vec<String>,
    c: Vec<Vec<Vector>>,
}

/// Every violated axiom, with the nonzero residual vector.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub skew: Vec<(usize, usize, Vector)>,
    pub jacobi: Vec<(usize, usize, usize, Vector)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.skew.is_empty() && self.jacobi.is_empty()
    }
}

/// Result of [`LieAlgebra::quotient`].
#[derive(Clone, Debug, PartialEq)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    /// Surjection `g → g/I` (rows = quotient coordinates).
    pub projection: LinearMap,
    /// Original coordinates whose unit vectors represent the quotient basis.
    pub complement: Vec<usize>,
}

impl LieAlgebra {
    /// Builds from a full tensor without checking the Lie axioms; only shapes are checked.
    pub fn from_tensor_unchecked(basis_names: Vec<String>, c: Vec<Vec<Vector>>) -> Result<Self> {
        let n = basis_names.len();
        if c.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: c.len() });
        }
        for row in &c {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            if let Some(v) = row.iter().find(|v| v.len() != n) {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
        }
        Ok(Self { basis_names, c })
    }

    /// Builds from a full tensor and rejects anything failing skew-symmetry or Jacobi.
    pub fn from_tensor(basis_names: Vec<String>, c: Vec<Vec<Vector>>) -> Result<Self> {
        let g = Self::from_tensor_unchecked(basis_names, c)?;
        g.ensure_valid()?;
        Ok(g)
    }

    /// Builds from the brackets `[e_i, e_j] = v`, filling in `[e_j, e_i] = −v`; omitted pairs are zero.
    pub fn from_brackets(basis_names: Vec<String>, brackets: &[(usize, usize, Vector)]) -> Result<Self> {
        let n = basis_names.len();
        let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
        for (i, j, v) in brackets {
            if *i >= n || *j >= n {
                return Err(Error::DimensionMismatch { expected: n, found: (*i).max(*j) + 1 });
            }
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: v.len() });
            }
            c[*i][*j] = v.clone();
            c[*j][*i] = v.iter().map(|x| -x.clone()).collect();
        }
        Self::from_tensor(basis_names, c)
    }

    pub fn abelian(n: usize) -> Self {
        Self::abelian_named((1..=n).map(|i| format!("e{i}")).collect())
    }

    pub fn abelian_named(basis_names: Vec<String>) -> Self {
        let n = basis_names.len();
        Self { basis_names, c: vec![vec![vec![Rational::zero(); n]; n]; n] }
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: names.len() });
        }
        self.basis_names = names;
        Ok(self)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis_names.iter().position(|n| n == name)
    }

    pub fn unit(&self, k: usize) -> Vector {
        unit_vector(self.dim(), k)
    }

    /// Structure constants `[e_i, e_j]`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &Vector {
        &self.c[i][j]
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut report = ValidationReport::default();
        for i in 0..n {
            for j in i..n {
                let residual: Vector = self.c[i][j].iter().zip(&self.c[j][i]).map(|(a, b)| a + b).collect();
                if !is_zero_vector(&residual) {
                    report.skew.push((i, j, if i == j { self.c[i][i].clone() } else { residual }));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket_unchecked(&self.unit(i), &self.c[j][k]);
                    let b = self.bracket_unchecked(&self.unit(j), &self.c[k][i]);
                    let d = self.bracket_unchecked(&self.unit(k), &self.c[i][j]);
                    let residual: Vector = a.iter().zip(&b).zip(&d).map(|((x, y), z)| x + y + z).collect();
                    if !is_zero_vector(&residual) {
                        report.jacobi.push((i, j, k, residual));
                    }
                }
            }
        }
        report
    }

    fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if let Some((i, j, _)) = report.skew.first() {
            return Err(Error::InvalidLieAlgebra(format!("skew-symmetry fails at ({i},{j})")));
        }
        if let Some((i, j, k, _)) = report.jacobi.first() {
            return Err(Error::InvalidLieAlgebra(format!("Jacobi identity fails at ({i},{j},{k})")));
        }
        Ok(())
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() })
        }
    }

    fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.bracket_over(x, y, |r| r.clone())
    }

    /// Bilinear extension of the bracket to any scalar field containing the rationals.
    pub fn bracket_over<T: Field>(&self, x: &[T], y: &[T], lift: impl Fn(&Rational) -> T) -> Vec<T> {
        let n = self.dim();
        let mut out = vec![T::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi.clone() * yj.clone();
                for (o, c) in out.iter_mut().zip(&self.c[i][j]) {
                    if !c.is_zero() {
                        *o = o.clone() + coeff.clone() * lift(c);
                    }
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vector> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    /// Matrix of `y ↦ [x, y]`.
    pub fn ad(&self, x: &[Rational]) -> Result<LinearMap> {
        self.check_len(x)?;
        let n = self.dim();
        let columns: Vec<Vector> = (0..n)
            .map(|j| {
                let images: Vec<Vector> = (0..n).map(|i| self.c[i][j].clone()).collect();
                combine(n, x, &images)
            })
            .collect();
        Matrix::from_columns(&columns, n)
    }

    pub fn ad_basis(&self, k: usize) -> LinearMap {
        self.ad(&self.unit(k)).expect("unit vector has the right length")
    }

    /// `[a, b]` for subspaces: span of brackets of basis vectors.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check_len(&vec![Rational::zero(); a.ambient_dim()])?;
        self.check_len(&vec![Rational::zero(); b.ambient_dim()])?;
        let (av, bv) = (a.basis_vectors(), b.basis_vectors());
        let mut vectors = Vec::new();
        for x in &av {
            for y in &bv {
                let z = self.bracket_unchecked(x, y);
                if !is_zero_vector(&z) {
                    vectors.push(z);
                }
            }
        }
        Subspace::span(self.dim(), vectors)
    }

    /// `[g, g]`, spanned by all structure-constant vectors.
    pub fn commutator_subalgebra(&self) -> Subspace {
        let n = self.dim();
        let vectors = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| self.c[i][j].clone()).collect();
        Subspace::span(n, vectors).expect("structure constants have length dim")
    }

    /// Kernel of the stacked `ad(e_k)`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut stacked = LinearMap::zeros(0, n);
        for k in 0..n {
            stacked = stacked.vstack(&self.ad_basis(k)).expect("same width");
        }
        stacked.kernel()
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().flatten().all(|v| is_zero_vector(v))
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        self.check_len(&vec![Rational::zero(); s.ambient_dim()])?;
        for v in s.basis_vectors() {
            for k in 0..self.dim() {
                if !s.contains(&self.bracket_unchecked(&self.unit(k), &v))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        self.bracket_subspaces(s, s)?.is_subspace_of(s)
    }

    /// Whether the bracket vanishes identically on `s`.
    pub fn is_abelian_subspace(&self, s: &Subspace) -> Result<bool> {
        Ok(self.bracket_subspaces(s, s)?.is_zero())
    }

    pub fn series(&self, kind: SeriesKind) -> SeriesReport {
        SeriesReport::compute(self, kind)
    }

    pub fn is_solvable(&self) -> bool {
        self.series(SeriesKind::Derived).reaches_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(SeriesKind::LowerCentral).reaches_zero()
    }

    /// Number of steps for the lower central series to reach zero, if it does.
    ///
    /// The zero algebra has class 0 and a nonzero abelian algebra class 1.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let s = self.series(SeriesKind::LowerCentral);
        s.reaches_zero().then_some(s.stabilized_at)
    }

    pub fn derived_length(&self) -> Option<usize> {
        let s = self.series(SeriesKind::Derived);
        s.reaches_zero().then_some(s.stabilized_at)
    }

    /// Quotient by an ideal, using the non-pivot coordinates of its echelon basis as the complement.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        if !self.is_ideal(ideal)? {
            return Err(Error::NotAnIdeal);
        }
        let n = self.dim();
        let complement = ideal.complement_indices();
        let project = |v: &[Rational]| -> Result<Vector> {
            let r = ideal.reduce(v)?;
            Ok(complement.iter().map(|&k| r[k].clone()).collect())
        };
        let columns = (0..n).map(|j| project(&self.unit(j))).collect::<Result<Vec<_>>>()?;
        let projection = Matrix::from_columns(&columns, complement.len())?;
        let m = complement.len();
        let mut c = vec![vec![vec![Rational::zero(); m]; m]; m];
        for (a, &ka) in complement.iter().enumerate() {
            for (b, &kb) in complement.iter().enumerate() {
                c[a][b] = project(&self.c[ka][kb])?;
            }
        }
        let names = complement.iter().map(|&k| self.basis_names[k].clone()).collect();
        let algebra = Self::from_tensor(names, c)?;
        Ok(Quotient { algebra, projection, complement })
    }

    /// Subalgebra spanned by `frame`, in frame coordinates, with names taken from `names`.
    pub fn subalgebra(&self, frame: &Frame<Rational>, names: Vec<String>) -> Result<LieAlgebra> {
        let p = frame.len();
        if names.len() != p {
            return Err(Error::DimensionMismatch { expected: p, found: names.len() });
        }
        let vs = frame.vectors();
        let mut c = vec![vec![vec![Rational::zero(); p]; p]; p];
        for a in 0..p {
            for b in 0..p {
                let z = self.bracket(&vs[a], &vs[b])?;
                c[a][b] = frame
                    .solve(&z)?
                    .ok_or_else(|| Error::InvalidLieAlgebra("span is not closed under the bracket".into()))?;
            }
        }
        Self::from_tensor(names, c)
    }

    /// Transports the bracket along `p`, so that `p : g → g'` is an isomorphism.
    ///
    /// The new constants are `c'[i][j] = p [p⁻¹ e_i, p⁻¹ e_j]`.
    pub fn change_basis(&self, p: &LinearMap) -> Result<LieAlgebra> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n {
            return Err(Error::ShapeMismatch { left: (n, n), right: (p.rows(), p.cols()) });
        }
        let inv = p.inverse()?;
        let cols: Vec<Vector> = (0..n).map(|i| inv.column(i)).collect();
        let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                c[i][j] = p.apply(&self.bracket_unchecked(&cols[i], &cols[j]))?;
            }
        }
        Self::from_tensor(self.basis_names.clone(), c)
    }

    /// Direct sum of ideals `g ⊕ h`, basis of `g` first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let mut c = vec![vec![vec![Rational::zero(); n + m]; n + m]; n + m];
        for (row, src) in c.iter_mut().zip(&self.c) {
            for (entry, v) in row.iter_mut().zip(src) {
                entry[..n].clone_from_slice(v);
            }
        }
        for (row, src) in c[n..].iter_mut().zip(&other.c) {
            for (entry, v) in row[n..].iter_mut().zip(src) {
                entry[n..].clone_from_slice(v);
            }
        }
        let mut names = self.basis_names.clone();
        names.extend(other.basis_names.iter().cloned());
        Self { basis_names: names, c }
    }

    /// `D[x,y] = [Dx,y] + [x,Dy]` on all basis pairs; returns the first failing pair.
    pub fn derivation_defect(&self, d: &LinearMap) -> Result<Option<(usize, usize)>> {
        let n = self.dim();
        if d.rows() != n || d.cols() != n {
            return Err(Error::ShapeMismatch { left: (n, n), right: (d.rows(), d.cols()) });
        }
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.apply(&self.c[i][j])?;
                let a = self.bracket_unchecked(&d.column(i), &self.unit(j));
                let b = self.bracket_unchecked(&self.unit(i), &d.column(j));
                let rhs: Vector = a.iter().zip(&b).map(|(x, y)| x + y).collect();
                if lhs != rhs {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    pub fn is_derivation(&self, d: &LinearMap) -> Result<bool> {
        Ok(self.derivation_defect(d)?.is_none())
    }
}

/// Checks `f[e_i, e_j] = [f e_i, f e_j]` on all basis pairs of `source`.
pub fn is_homomorphism(f: &LinearMap, source: &LieAlgebra, target: &LieAlgebra) -> Result<bool> {
    if f.cols() != source.dim() || f.rows() != target.dim() {
        return Err(Error::ShapeMismatch { left: (target.dim(), source.dim()), right: (f.rows(), f.cols()) });
    }
    let images: Vec<Vector> = (0..source.dim()).map(|j| f.column(j)).collect();
    for i in 0..source.dim() {
        for j in i + 1..source.dim() {
            let lhs = f.apply(&source.c[i][j])?;
            let rhs = target.bracket(&images[i], &images[j])?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_isomorphism(f: &LinearMap, source: &LieAlgebra, target: &LieAlgebra) -> Result<bool> {
    Ok(is_homomorphism(f, source, target)? && f.is_invertible())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, rat};

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    /// aff(ℝ): `[x, y] = x`.
    fn aff_r() -> LieAlgebra {
        LieAlgebra::from_brackets(names(&["x", "y"]), &[(0, 1, vec![rat(1), rat(0)])]).unwrap()
    }

    /// ℝ × h₁ in the basis (w, z, x₁, y₁): `[x₁, y₁] = z`.
    fn r_h1() -> LieAlgebra {
        LieAlgebra::from_brackets(names(&["w", "z", "x1", "y1"]), &[(2, 3, vec![rat(0), rat(1), rat(0), rat(0)])])
            .unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(LieAlgebra::abelian(4).validate().is_valid());
        assert!(aff_r().validate().is_valid());
        let mut c = vec![vec![vec![rat(0); 2]; 2]; 2];
        c[0][1] = vec![rat(1), rat(0)];
        c[1][0] = vec![rat(1), rat(0)];
        let bad = LieAlgebra::from_tensor_unchecked(names(&["a", "b"]), c.clone()).unwrap();
        let report = bad.validate();
        assert_eq!(report.skew.len(), 1);
        assert_eq!((report.skew[0].0, report.skew[0].1), (0, 1));
        assert!(LieAlgebra::from_tensor(names(&["a", "b"]), c).is_err());
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // [e1,e2]=e3, [e2,e3]=e1, [e1,e3]=e1: fails Jacobi.
        let g = LieAlgebra::from_tensor_unchecked(names(&["a", "b", "c"]), {
            let mut c = vec![vec![vec![rat(0); 3]; 3]; 3];
            let mut put = |i: usize, j: usize, v: Vector| {
                c[j][i] = v.iter().map(|x| -x).collect();
                c[i][j] = v;
            };
            put(0, 1, vec![rat(0), rat(0), rat(1)]);
            put(1, 2, vec![rat(1), rat(0), rat(0)]);
            put(0, 2, vec![rat(1), rat(0), rat(0)]);
            c
        })
        .unwrap();
        let report = g.validate();
        assert!(report.skew.is_empty());
        assert_eq!(report.jacobi.len(), 1);
    }

    #[test]
    fn bracket_and_ad() {
        let g = aff_r();
        assert_eq!(g.bracket(&g.unit(0), &g.unit(1)).unwrap(), g.unit(0));
        let v = vec![rat(3), frac(-1, 2)];
        assert_eq!(g.bracket(&v, &v).unwrap(), vec![rat(0), rat(0)]);
        // ad(y): x ↦ −x, y ↦ 0
        assert_eq!(g.ad_basis(1), LinearMap::from_i64(&[&[-1, 0], &[0, 0]]));
        assert!(g.ad(&[rat(0), rat(0)]).unwrap().is_zero());
        assert!(g.bracket(&[rat(1)], &g.unit(0)).is_err());
        let h = r_h1();
        assert_eq!(h.bracket(&h.unit(2), &h.unit(3)).unwrap(), h.unit(1));
    }

    #[test]
    fn center_and_commutator() {
        let h = r_h1();
        let z = h.center();
        assert_eq!(z, Subspace::span(4, vec![h.unit(0), h.unit(1)]).unwrap());
        assert!(h.is_ideal(&z).unwrap());
        let g = aff_r();
        assert_eq!(g.commutator_subalgebra(), Subspace::span(2, vec![g.unit(0)]).unwrap());
        let a = LieAlgebra::abelian(3);
        assert!(a.commutator_subalgebra().is_zero());
        assert!(a.center().is_full());
    }

    #[test]
    fn series_examples() {
        let a = LieAlgebra::abelian(3);
        assert!(a.is_solvable() && a.is_nilpotent());
        assert_eq!(a.nilpotency_class(), Some(1));
        assert_eq!(LieAlgebra::abelian(0).nilpotency_class(), Some(0));
        assert_eq!(r_h1().nilpotency_class(), Some(2));
        let g = aff_r();
        assert!(g.is_solvable());
        assert!(!g.is_nilpotent());
        assert_eq!(g.nilpotency_class(), None);
        let lc = g.series(SeriesKind::LowerCentral);
        assert_eq!(lc.terms.last().unwrap().dim(), 1);
    }

    #[test]
    fn quotient_examples() {
        let h = r_h1();
        let q = h.quotient(&Subspace::zero(4)).unwrap();
        assert_eq!(q.algebra, h);
        assert_eq!(h.quotient(&Subspace::full(4)).unwrap().algebra.dim(), 0);
        let q = h.quotient(&h.center()).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert!(q.algebra.is_abelian());
        assert!(is_homomorphism(&q.projection, &h, &q.algebra).unwrap());
        assert_eq!(q.projection.kernel(), h.center());
        let not_ideal = Subspace::span(4, vec![h.unit(2)]).unwrap();
        assert!(matches!(h.quotient(&not_ideal), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn homomorphism_checks() {
        let g = aff_r();
        assert_eq!(g.change_basis(&LinearMap::identity(2)).unwrap(), g);
        assert!(is_isomorphism(&LinearMap::identity(2), &g, &g).unwrap());
        let scale = LinearMap::from_i64(&[&[2, 0], &[0, 1]]);
        assert!(is_isomorphism(&scale, &g, &g).unwrap());
        let swap = LinearMap::from_i64(&[&[0, 1], &[1, 0]]);
        assert!(!is_homomorphism(&swap, &g, &g).unwrap());
        assert!(matches!(g.change_basis(&LinearMap::zeros(2, 2)), Err(Error::Singular)));
    }

    #[test]
    fn change_basis_gives_isomorphism() {
        let h = r_h1();
        let p = LinearMap::from_i64(&[&[1, 2, 0, 0], &[0, 1, 0, 1], &[1, 0, 1, 0], &[0, 0, 3, 1]]);
        let h2 = h.change_basis(&p).unwrap();
        assert!(is_isomorphism(&p, &h, &h2).unwrap());
    }

    #[test]
    fn derivation_check() {
        let h = LieAlgebra::from_brackets(names(&["x", "y", "z"]), &[(0, 1, vec![rat(0), rat(0), rat(1)])]).unwrap();
        let grading = LinearMap::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        assert!(h.is_derivation(&grading).unwrap());
        assert!(!h.is_derivation(&LinearMap::identity(3)).unwrap());
    }
}
